use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

use sympchar_core::formulas;
use sympchar_core::grp::{
    build_generators, is_isometry, order_formula, orthogonal_order, preserves_form, random_elements,
    symplectic_order, symplectic_transvection, Aux, GroupLabel,
};
use sympchar_core::space::{complete_hyperbolic_basis, standard_forms, witt_extend};
use sympchar_core::srg::{spectrum, SrgParams};
use sympchar_core::{DomainKind, FieldContext, FieldElement, FormType, GSet, GroupElement, QuadraticForm, Space, Vector};

fn space(m: usize, f: u32) -> Space {
    Space::new(m, FieldContext::new(f).unwrap()).unwrap()
}

fn seeded(cases: u32) -> Config {
    Config { cases, rng_seed: RngSeed::Fixed(0x5eed), failure_persistence: None, ..Config::default() }
}

/// `(m, f)` with `2 m f <= 64`.
fn shape() -> impl Strategy<Value = (usize, u32)> {
    (1u32..=8).prop_flat_map(|f| (1usize..=(32 / f as usize).min(4), Just(f)))
}

proptest! {
    #![proptest_config(seeded(512))]

    #[test]
    fn field_tables_match_reference(f in 1u32..=8, a in any::<u8>(), b in any::<u8>(), c in any::<u8>()) {
        let k = FieldContext::new(f).unwrap();
        let (a, b, c) = (k.element(a & k.mask()).unwrap(), k.element(b & k.mask()).unwrap(), k.element(c & k.mask()).unwrap());
        prop_assert_eq!(k.mul(a, b), k.mul_reference(a, b));
        prop_assert_eq!(k.mul(a, b + c), k.mul(a, b) + k.mul(a, c));
        prop_assert_eq!(k.mul(k.mul(a, b), c), k.mul(a, k.mul(b, c)));
        if !a.is_zero() {
            prop_assert_eq!(k.mul(a, k.inv(a).unwrap()), FieldElement::ONE);
        }
        prop_assert_eq!(k.square(k.sqrt(a)), a);
        prop_assert_eq!(k.absolute_trace(k.square(a) + a), 0);
    }

    #[test]
    fn polarization_identity((m, f) in shape(), seed in any::<u64>(), pair in any::<(u64, u64)>()) {
        let s = space(m, f);
        let n = s.dim();
        let mask = s.field().mask() as u64;
        let coeffs: Vec<FieldElement> = (0..n * n)
            .map(|i| FieldElement((seed.rotate_left(7 * i as u32) ^ (i as u64).wrapping_mul(0x9e37_79b9)) as u8 & mask as u8))
            .collect();
        let q = QuadraticForm::from_upper(n, coeffs).unwrap();
        let bits = n as u32 * f;
        let mask = if bits == 64 { u64::MAX } else { (1 << bits) - 1 };
        let (u, v) = (Vector(pair.0 & mask), Vector(pair.1 & mask));
        let lhs = q.eval(&s, u + v).unwrap() + q.eval(&s, u).unwrap() + q.eval(&s, v).unwrap();
        prop_assert_eq!(lhs, q.polarization().eval(&s, u, v));
    }

    #[test]
    fn transvections_are_isometries((m, f) in shape(), raw in any::<u64>(), lambda in any::<u8>()) {
        let s = space(m, f);
        let bits = s.dim() as u32 * f;
        let v = Vector(if bits == 64 { raw } else { raw & ((1 << bits) - 1) });
        prop_assume!(!v.is_zero());
        let t = symplectic_transvection(&s, v, FieldElement(lambda & s.field().mask())).unwrap();
        prop_assert!(is_isometry(&s, &t));
        prop_assert_eq!(t.apply(&s, v), v);
    }

    #[test]
    fn order_indices(m in 1usize..=4, f in 1u32..=8) {
        let q = 1u64 << f;
        let sp = match symplectic_order(m, q) {
            Ok(n) => n,
            // |Sp(8, 2^8)| needs more than 128 bits.
            Err(e) => {
                prop_assert!(matches!(e, sympchar_core::Error::OrderOverflow));
                return Ok(());
            }
        };
        for ty in FormType::BOTH {
            let o = orthogonal_order(m, q, ty).unwrap();
            prop_assert_eq!(sp % o, 0);
            prop_assert_eq!(sp / o, formulas::omega_size(m, q, ty));
        }
        let gv = order_formula(GroupLabel::Gv, m, q).unwrap();
        prop_assert_eq!(order_formula(GroupLabel::P, m, q).unwrap(), gv * (q as u128 - 1));
    }

    #[test]
    fn multiplicities_are_integral(m in 2usize..=6, f in 1u32..=5) {
        let q = 1u64 << f;
        let p = SrgParams::expected(m, q);
        prop_assert!(p.feasible());
        let spec = spectrum(&p).unwrap();
        prop_assert_eq!(spec.f_plus + spec.f_minus, p.v - 1);
        prop_assert!(spec.trace_vanishes(p.k));
        let (lo, hi) = formulas::chi_degrees(m, q);
        prop_assert_eq!((spec.f_minus.min(spec.f_plus) as u128, spec.f_minus.max(spec.f_plus) as u128), (lo, hi));
    }
}

proptest! {
    #![proptest_config(seeded(1000))]

    #[test]
    fn witt_extension_at_q4(raw in any::<(u8, u8, u8)>()) {
        let s = space(2, 2);
        let (v, u, w) = (Vector(raw.0 as u64), Vector(raw.1 as u64), Vector(raw.2 as u64));
        prop_assume!(!v.is_zero() && !s.in_span_of(u, v));
        // Shift w along a partner of v so that (v, u') = (v, u).
        let partner = complete_hyperbolic_basis(&s, &[v]).unwrap()[1];
        let gap = s.bilinear(v, u) + s.bilinear(v, w);
        let u2 = w + s.scale(gap, partner);
        prop_assume!(!s.in_span_of(u2, v));
        let g = witt_extend(&s, v, u, u2).unwrap();
        prop_assert_eq!(g.apply(&s, v), v);
        prop_assert_eq!(g.apply(&s, u), u2);
        prop_assert!(is_isometry(&s, &g));
    }
}

proptest! {
    #![proptest_config(seeded(24))]

    #[test]
    fn random_words_respect_predicates(which in 0usize..5, m in 1usize..=2, f in 1u32..=3, seed in any::<u64>()) {
        let s = space(m, f);
        let label = GroupLabel::ALL[which];
        let set = build_generators(&s, label, &Aux::Standard, 0).unwrap();
        for g in random_elements(&s, &set, 8, seed).unwrap() {
            prop_assert!(set.admits(&s, &g));
        }
        if let Some(form) = set.form() {
            let (plus, minus) = standard_forms(&s);
            prop_assert!(*form == plus || *form == minus);
            for g in set.gens() {
                prop_assert!(preserves_form(&s, g, form));
            }
        }
    }

    #[test]
    fn actions_compose(m in 1usize..=2, f in 1u32..=2, seed in any::<u64>(), kind in 0usize..4) {
        let s = space(m, f);
        let kind = [DomainKind::Vectors, DomainKind::Lines, DomainKind::Forms(FormType::Plus), DomainKind::Forms(FormType::Minus)][kind];
        let x = GSet::new(&s, kind, u128::MAX).unwrap();
        let sp = build_generators(&s, GroupLabel::Sp, &Aux::Standard, 0).unwrap();
        let gs = random_elements(&s, &sp, 2, seed).unwrap();
        let (g, h) = (&gs[0], &gs[1]);
        let gh = g.mul(&s, h);
        for &p in x.points() {
            prop_assert_eq!(x.act(p, &GroupElement::identity(&s)).unwrap(), p);
            prop_assert_eq!(x.act(x.act(p, g).unwrap(), h).unwrap(), x.act(p, &gh).unwrap());
        }
    }
}

