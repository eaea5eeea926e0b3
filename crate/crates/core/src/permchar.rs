//! Permutation characters of `Sp(2m, q)` and the checks built on them.
//!
//! `pi_0` is the character of `G` on `V \ 0`, `pi^+`/`pi^-` the characters on
//! the two classes of quadratic forms. Inner products are orbit counts on
//! product domains, with a Burnside average over the whole group available as
//! an independent cross-check.

use std::collections::BTreeMap;

use once_cell::sync::OnceCell;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::formulas;
use crate::gf::FieldContext;
use crate::grp::{
    build_and_enumerate, build_generators, enumerate_group, order_formula, random_elements, Aux, ElementList, GeneratorSet, GroupElement, GroupLabel,
    DEFAULT_ENUM_BOUND,
};
use crate::gset::{DomainKind, GSet, OrbitPartition};
use crate::report::Comparison;
use crate::space::{minus_functional, zero_count_formula, FormType, LinearFunctional, Space, Vector, DEFAULT_SPACE_BOUND};

pub const DEFAULT_PRODUCT_BOUND: u128 = 20_000_000;
pub const DEFAULT_SAMPLE_COUNT: usize = 1000;
/// Counterexamples kept verbatim in a pointwise report.
pub const MAX_REPORTED_VIOLATIONS: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    /// Largest vector space or domain that may be listed.
    pub space: u128,
    /// Largest group that may be enumerated element by element.
    pub enumeration: u128,
    /// Largest `|X| * |Y|` for an orbit count on a product.
    pub product: u128,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { space: DEFAULT_SPACE_BOUND, enumeration: DEFAULT_ENUM_BOUND, product: DEFAULT_PRODUCT_BOUND }
    }
}

/// One `(m, q)` with its groups and domains built on first use.
#[derive(Debug)]
pub struct Case {
    space: Space,
    bounds: Bounds,
    gens: [OnceCell<GeneratorSet>; 5],
    domains: [OnceCell<GSet>; 4],
    elements: OnceCell<ElementList>,
}

fn label_slot(label: GroupLabel) -> usize {
    GroupLabel::ALL.iter().position(|&l| l == label).expect("label listed in ALL")
}

fn domain_slot(kind: DomainKind) -> usize {
    match kind {
        DomainKind::Vectors => 0,
        DomainKind::Forms(FormType::Plus) => 1,
        DomainKind::Forms(FormType::Minus) => 2,
        DomainKind::Lines => 3,
    }
}

impl Case {
    pub fn new(m: usize, f: u32, bounds: Bounds) -> Result<Self> {
        let space = Space::new(m, FieldContext::new(f)?)?;
        Ok(Case { space, bounds, gens: Default::default(), domains: Default::default(), elements: OnceCell::new() })
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn bounds(&self) -> Bounds {
        self.bounds
    }

    pub fn m(&self) -> usize {
        self.space.m()
    }

    pub fn q(&self) -> u64 {
        self.space.q()
    }

    pub fn generators(&self, label: GroupLabel) -> Result<&GeneratorSet> {
        self.gens[label_slot(label)].get_or_try_init(|| {
            if label == GroupLabel::Sp && order_formula(label, self.m(), self.q())? <= self.bounds.enumeration {
                // Verifying the order of Sp enumerates it anyway; keep the elements.
                let (set, list) = build_and_enumerate(&self.space, label, &Aux::Standard, self.bounds.enumeration)?;
                let _ = self.elements.set(list);
                return Ok(set);
            }
            build_generators(&self.space, label, &Aux::Standard, self.bounds.enumeration)
        })
    }

    pub fn domain(&self, kind: DomainKind) -> Result<&GSet> {
        self.domains[domain_slot(kind)].get_or_try_init(|| GSet::new(&self.space, kind, self.bounds.space))
    }

    pub fn forms(&self, ty: FormType) -> Result<&GSet> {
        self.domain(DomainKind::Forms(ty))
    }

    /// Every element of `Sp(V)`.
    pub fn elements(&self) -> Result<&ElementList> {
        let sp = self.generators(GroupLabel::Sp)?;
        self.elements.get_or_try_init(|| enumerate_group(&self.space, sp, self.bounds.enumeration))
    }

    /// `|Sp(V)|` fits the enumeration bound.
    pub fn enumerable(&self) -> Result<bool> {
        Ok(self.generators(GroupLabel::Sp)?.claimed_order() <= self.bounds.enumeration)
    }
}

/// `|{x in X : x g = x}|`, the value at `g` of the permutation character of `X`.
pub fn fixed_points(g: &GroupElement, x: &GSet) -> usize {
    x.fixed_points(g)
}

pub fn orbit_count(gens: &GeneratorSet, x: &GSet) -> Result<OrbitPartition> {
    x.orbits(gens)
}

/// Orbits of `<gens>` on `X x Y` under the diagonal action, i.e. `<pi_X, pi_Y>`.
pub fn char_inner_product(x: &GSet, y: &GSet, gens: &GeneratorSet, product_bound: u128) -> Result<u64> {
    let size = x.len() as u128 * y.len() as u128;
    if size > product_bound {
        return Err(Error::BoundExceeded {
            what: format!("product domain {} x {}", x.kind(), y.kind()),
            needed: size,
            bound: product_bound,
        });
    }
    let px = gens.gens().iter().map(|g| x.permutation(g)).collect::<Result<Vec<_>>>()?;
    let py = gens.gens().iter().map(|g| y.permutation(g)).collect::<Result<Vec<_>>>()?;
    let ny = y.len();
    let total = x.len() * ny;
    let mut seen = vec![0u64; total.div_ceil(64)];
    let mut queue: Vec<u32> = Vec::new();
    let mut orbits = 0;
    for start in 0..total {
        if seen[start / 64] >> (start % 64) & 1 == 1 {
            continue;
        }
        orbits += 1;
        seen[start / 64] |= 1 << (start % 64);
        queue.clear();
        queue.push(start as u32);
        while let Some(p) = queue.pop() {
            let (i, j) = (p as usize / ny, p as usize % ny);
            for (a, b) in px.iter().zip(&py) {
                let t = a[i] as usize * ny + b[j] as usize;
                if seen[t / 64] >> (t % 64) & 1 == 0 {
                    seen[t / 64] |= 1 << (t % 64);
                    queue.push(t as u32);
                }
            }
        }
    }
    Ok(orbits)
}

/// `(1/|G|) sum_g fix_X(g) fix_Y(g)` over an enumerated group.
pub fn burnside_inner_product(elements: &ElementList, x: &GSet, y: &GSet) -> Result<u64> {
    let sum: u128 = (0..elements.len())
        .into_par_iter()
        .map(|i| {
            let g = elements.get(i);
            x.fixed_points(&g) as u128 * y.fixed_points(&g) as u128
        })
        .sum();
    let n = elements.len() as u128;
    if !sum.is_multiple_of(n) {
        return Err(Error::NonIntegralMultiplicity(format!("Burnside sum {sum} over group of order {n}")));
    }
    Ok((sum / n) as u64)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InnerProductReport {
    pub lhs_label: String,
    pub rhs_label: String,
    pub computed: u64,
    pub expected: u64,
    pub provenance: String,
    pub pass: bool,
}

impl InnerProductReport {
    fn new(lhs: &str, rhs: &str, computed: u64, expected: u64, provenance: &str) -> Self {
        InnerProductReport {
            lhs_label: lhs.into(),
            rhs_label: rhs.into(),
            computed,
            expected,
            provenance: provenance.into(),
            pass: computed == expected,
        }
    }

    pub fn key(&self) -> String {
        format!("<{},{}>", self.lhs_label, self.rhs_label)
    }

    /// Folds several reports into one comparison keyed by `<lhs,rhs>`.
    pub fn combine(reports: &[InnerProductReport]) -> Comparison<BTreeMap<String, Value>> {
        let computed = reports.iter().map(|r| (r.key(), Value::from(r.computed))).collect();
        let expected = reports.iter().map(|r| (r.key(), Value::from(r.expected))).collect();
        let mut provenance: Vec<&str> = reports.iter().map(|r| r.provenance.as_str()).collect();
        provenance.dedup();
        Comparison::new(computed, expected, provenance.join("; "))
    }
}

fn char_name(ty: FormType) -> &'static str {
    match ty {
        FormType::Plus => "pi+",
        FormType::Minus => "pi-",
    }
}

/// `<pi_0, pi_0>` as the number of `G_v`-orbits on `V \ 0`.
pub fn stabilizer_norm(case: &Case) -> Result<InnerProductReport> {
    let gv = case.generators(GroupLabel::Gv)?;
    let count = case.domain(DomainKind::Vectors)?.orbits(gv)?.count() as u64;
    let (expected, provenance) = if case.m() == 1 {
        (formulas::pi0_norm(1, case.q()), "<pi0,pi0> = 2q-2 when m = 1")
    } else {
        (formulas::pi0_norm(case.m(), case.q()), "<pi0,pi0> = 2q-1")
    };
    Ok(InnerProductReport::new("pi0", "pi0", count, expected, provenance))
}

/// `<pi^+, pi^+>` and `<pi^-, pi^->` by orbit counting on `Omega x Omega`.
pub fn form_norms(case: &Case) -> Result<Vec<InnerProductReport>> {
    let sp = case.generators(GroupLabel::Sp)?;
    FormType::BOTH
        .iter()
        .map(|&ty| {
            let omega = case.forms(ty)?;
            let n = char_inner_product(omega, omega, sp, case.bounds.product)?;
            let name = char_name(ty);
            let provenance = if case.m() == 1 && ty == FormType::Minus {
                "<pi-,pi-> = q/2 when m = 1"
            } else {
                "<pi+-,pi+-> = q/2 + 1"
            };
            Ok(InnerProductReport::new(name, name, n, formulas::omega_norm(case.m(), case.q(), ty), provenance))
        })
        .collect()
}

/// `<pi^+, pi^->` by orbit counting on `Omega^+ x Omega^-`.
pub fn form_cross(case: &Case) -> Result<InnerProductReport> {
    let sp = case.generators(GroupLabel::Sp)?;
    let n = char_inner_product(case.forms(FormType::Plus)?, case.forms(FormType::Minus)?, sp, case.bounds.product)?;
    Ok(InnerProductReport::new("pi+", "pi-", n, formulas::omega_cross(case.q()), "<pi+,pi-> = q/2"))
}

/// `<pi_0, pi^eps>` as the number of `O^eps`-orbits on `V \ 0`.
pub fn vector_form_products(case: &Case) -> Result<Vec<InnerProductReport>> {
    let vectors = case.domain(DomainKind::Vectors)?;
    FormType::BOTH
        .iter()
        .map(|&ty| {
            let o = case.generators(GroupLabel::orthogonal(ty))?;
            let n = vectors.orbits(o)?.count() as u64;
            let expected = formulas::pi0_omega(case.m(), case.q(), ty);
            let provenance = if case.m() == 1 && ty == FormType::Minus {
                "<pi0,pi-> = q-1 when m = 1 (Q- has no singular vectors)"
            } else {
                "<pi0,pi+-> = q"
            };
            Ok(InnerProductReport::new("pi0", char_name(ty), n, expected, provenance))
        })
        .collect()
}

/// The standard form of type `ty` as a functional over `Q+`.
fn standard_functional(space: &Space, ty: FormType) -> LinearFunctional {
    match ty {
        FormType::Plus => LinearFunctional(0),
        FormType::Minus => minus_functional(space),
    }
}

/// Whether the `O^eps`-orbits on `V \ 0` are exactly the nonempty level sets of `Q^eps`.
pub fn orthogonal_orbits_are_level_sets(case: &Case, ty: FormType) -> Result<bool> {
    let vectors = case.domain(DomainKind::Vectors)?;
    let partition = vectors.orbits(case.generators(GroupLabel::orthogonal(ty))?)?;
    let l = standard_functional(&case.space, ty);
    Ok(partition.matches_fibres(|i| case.space.q_functional(l, Vector(vectors.point(i)))))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitStructure {
    /// Sorted `G_v`-orbit sizes on `V \ 0`.
    pub stabilizer_orbit_sizes: Vec<usize>,
    /// `G_v`-orbits are `{lambda v}`, `v^perp \ <v>` and the levels of `(v, .)`.
    pub stabilizer_orbits_are_classes: bool,
    /// Sorted `O^+`- and `O^-`-orbit sizes on `V \ 0`.
    pub orthogonal_orbit_sizes: [Vec<usize>; 2],
    pub orthogonal_orbits_are_level_sets: [bool; 2],
    /// `O^-`-orbits on the `+` forms.
    pub minus_orbits_on_plus_forms: usize,
    /// `Sp`-orbits on the `+` and `-` forms.
    pub sp_orbits_on_forms: [usize; 2],
}

/// Orbit sizes predicted by the level-set description.
fn expected_level_sizes(m: usize, q: u64, ty: FormType) -> Vec<usize> {
    let total = (q as i128).pow(2 * m as u32);
    let zeros = zero_count_formula(m, q, ty);
    let mut sizes = vec![((total - zeros) / (q as i128 - 1)) as usize; q as usize - 1];
    if zeros > 1 {
        sizes.push((zeros - 1) as usize);
    }
    sizes.sort_unstable();
    sizes
}

pub fn verify_orbit_structure(case: &Case) -> Result<Comparison<OrbitStructure>> {
    let (m, q) = (case.m(), case.q());
    let space = &case.space;
    let vectors = case.domain(DomainKind::Vectors)?;

    let gv = case.generators(GroupLabel::Gv)?;
    let v = gv.fixed_vector().expect("G_v fixes a vector");
    let partition = vectors.orbits(gv)?;
    let classes = partition.matches_fibres(|i| {
        let u = Vector(vectors.point(i));
        if space.in_span_of(u, v) {
            (0u8, u.0)
        } else {
            match space.bilinear(v, u) {
                c if c.is_zero() => (1, 0),
                c => (2, c.bits() as u64),
            }
        }
    });

    let mut orthogonal_orbit_sizes: [Vec<usize>; 2] = Default::default();
    let mut level_sets = [false; 2];
    let mut expected_sizes: [Vec<usize>; 2] = Default::default();
    for (k, &ty) in FormType::BOTH.iter().enumerate() {
        orthogonal_orbit_sizes[k] = vectors.orbits(case.generators(GroupLabel::orthogonal(ty))?)?.sorted_sizes();
        level_sets[k] = orthogonal_orbits_are_level_sets(case, ty)?;
        expected_sizes[k] = expected_level_sizes(m, q, ty);
    }

    let minus = case.generators(GroupLabel::OMinus)?;
    let minus_orbits_on_plus_forms = case.forms(FormType::Plus)?.orbits(minus)?.count();
    let sp = case.generators(GroupLabel::Sp)?;
    let sp_orbits_on_forms = [case.forms(FormType::Plus)?.orbits(sp)?.count(), case.forms(FormType::Minus)?.orbits(sp)?.count()];

    let qm = q as usize;
    let big = qm.pow(2 * m as u32 - 1);
    let mut stabilizer_sizes = vec![1; qm - 1];
    stabilizer_sizes.extend(std::iter::repeat_n(big, qm - 1));
    if m > 1 {
        stabilizer_sizes.push(big - qm);
    }
    stabilizer_sizes.sort_unstable();

    let computed = OrbitStructure {
        stabilizer_orbit_sizes: partition.sorted_sizes(),
        stabilizer_orbits_are_classes: classes,
        orthogonal_orbit_sizes,
        orthogonal_orbits_are_level_sets: level_sets,
        minus_orbits_on_plus_forms,
        sp_orbits_on_forms,
    };
    let expected = OrbitStructure {
        stabilizer_orbit_sizes: stabilizer_sizes,
        stabilizer_orbits_are_classes: true,
        orthogonal_orbit_sizes: expected_sizes,
        orthogonal_orbits_are_level_sets: [true, true],
        minus_orbits_on_plus_forms: qm / 2,
        sp_orbits_on_forms: [1, 1],
    };
    Ok(Comparison::new(
        computed,
        expected,
        "G_v-orbits {lambda v}, v^perp \\ <v>, (v,u) = c; O-orbits are the level sets of Q; q/2 O^- orbits on Omega^+; Sp transitive on each form type",
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeSums {
    pub omega_plus: u128,
    pub omega_minus: u128,
    pub nonzero_vectors: u128,
}

/// `|Omega^+| = 1 + chi^+(1) + pi'(1)`, `|Omega^-| = 1 + chi^-(1) + pi'(1)` and
/// `q^{2m} - 1 = 1 + chi^+(1) + chi^-(1) + 2 pi'(1)`, given `(chi^-(1), chi^+(1))`.
pub fn verify_degree_identities(m: usize, q: u64, chi: (u128, u128)) -> Comparison<DegreeSums> {
    let (chi_minus, chi_plus) = chi;
    let pi_prime = formulas::pi_prime_degree(m, q);
    let computed = DegreeSums {
        omega_plus: formulas::omega_size(m, q, FormType::Plus),
        omega_minus: formulas::omega_size(m, q, FormType::Minus),
        nonzero_vectors: (q as u128).pow(2 * m as u32) - 1,
    };
    let expected = DegreeSums {
        omega_plus: 1 + chi_plus + pi_prime,
        omega_minus: 1 + chi_minus + pi_prime,
        nonzero_vectors: 1 + chi_plus + chi_minus + 2 * pi_prime,
    };
    Comparison::new(
        computed,
        expected,
        "pi+ = 1 + chi+ + pi', pi- = 1 + chi- + pi', pi0 = 1 + chi+ + chi- + 2pi', pi'(1) = (q/2-1)(q^{2m}-1)/(q-1)",
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Mode {
    Exhaustive,
    Sampled { count: usize, seed: u64 },
}

/// An element at which an identity failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    /// Position in the enumeration or sample.
    pub index: usize,
    pub element: Vec<Vec<u8>>,
    /// `pi_0(g) + 1`, the number of fixed vectors including 0.
    pub fixed_vectors: usize,
    pub fixed_plus: usize,
    pub fixed_minus: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointwiseSummary {
    pub tested: usize,
    pub failures: usize,
    /// The first few failures in index order.
    pub counterexamples: Vec<Violation>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointwiseScan {
    pub mode: Mode,
    pub theorem: PointwiseSummary,
    pub corollary: PointwiseSummary,
}

impl PointwiseScan {
    fn expectation(s: &PointwiseSummary) -> PointwiseSummary {
        PointwiseSummary { tested: s.tested, failures: 0, counterexamples: Vec::new() }
    }

    pub fn theorem(&self) -> Comparison<PointwiseSummary> {
        Comparison::new(
            self.theorem.clone(),
            Self::expectation(&self.theorem),
            "1 + pi0(g) = pi+(g) + pi-(g) for every g",
        )
    }

    pub fn corollary(&self) -> Comparison<PointwiseSummary> {
        Comparison::new(
            self.corollary.clone(),
            Self::expectation(&self.corollary),
            "pi+(g) + pi-(g) >= 1: every g preserves a form of either type",
        )
    }
}

/// Evaluates `pi_0`, `pi^+`, `pi^-` at every element (exhaustive) or at seeded
/// random words (sampled) and records where the theorem or corollary fails.
pub fn pointwise_scan(case: &Case, mode: Mode) -> Result<PointwiseScan> {
    let vectors = case.domain(DomainKind::Vectors)?;
    let plus = case.forms(FormType::Plus)?;
    let minus = case.forms(FormType::Minus)?;
    let space = &case.space;
    let evaluate = |index: usize, g: &GroupElement| {
        let v = Violation {
            index,
            element: Vec::new(),
            fixed_vectors: vectors.fixed_points(g) + 1,
            fixed_plus: plus.fixed_points(g),
            fixed_minus: minus.fixed_points(g),
        };
        let theorem_ok = v.fixed_vectors == v.fixed_plus + v.fixed_minus;
        let corollary_ok = v.fixed_plus + v.fixed_minus >= 1;
        if theorem_ok && corollary_ok {
            None
        } else {
            Some((v, theorem_ok, corollary_ok))
        }
    };
    let (tested, bad): (usize, Vec<(Violation, bool, bool)>) = match mode {
        Mode::Exhaustive => {
            let list = case.elements()?;
            let bad = (0..list.len())
                .into_par_iter()
                .filter_map(|i| {
                    let g = list.get(i);
                    evaluate(i, &g).map(|(mut v, t, c)| {
                        v.element = g.entries(space);
                        (v, t, c)
                    })
                })
                .collect();
            (list.len(), bad)
        }
        Mode::Sampled { count, seed } => {
            let sample = random_elements(space, case.generators(GroupLabel::Sp)?, count, seed)?;
            let bad = sample
                .par_iter()
                .enumerate()
                .filter_map(|(i, g)| {
                    evaluate(i, g).map(|(mut v, t, c)| {
                        v.element = g.entries(space);
                        (v, t, c)
                    })
                })
                .collect();
            (count, bad)
        }
    };
    let summarize = |pick: fn(&(Violation, bool, bool)) -> bool| {
        let mut failed: Vec<&Violation> = bad.iter().filter(|b| pick(b)).map(|b| &b.0).collect();
        failed.sort_by_key(|v| v.index);
        PointwiseSummary {
            tested,
            failures: failed.len(),
            counterexamples: failed.into_iter().take(MAX_REPORTED_VIOLATIONS).cloned().collect(),
        }
    };
    Ok(PointwiseScan { mode, theorem: summarize(|b| !b.1), corollary: summarize(|b| !b.2) })
}

pub fn verify_theorem(case: &Case, mode: Mode) -> Result<Comparison<PointwiseSummary>> {
    Ok(pointwise_scan(case, mode)?.theorem())
}

pub fn verify_corollary(case: &Case, mode: Mode) -> Result<Comparison<PointwiseSummary>> {
    Ok(pointwise_scan(case, mode)?.corollary())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::symplectic_transvection;
    use crate::gf::FieldElement;

    fn case(m: usize, f: u32) -> Case {
        Case::new(m, f, Bounds::default()).unwrap()
    }

    #[test]
    fn fixed_points_examples() {
        let c = case(2, 1);
        let id = GroupElement::identity(c.space());
        assert_eq!(fixed_points(&id, c.forms(FormType::Plus).unwrap()), 10);
        let all = fixed_points(&id, c.forms(FormType::Plus).unwrap()) + fixed_points(&id, c.forms(FormType::Minus).unwrap());
        assert_eq!(all, 16);
        let t = symplectic_transvection(c.space(), c.space().basis_vector(0), FieldElement::ONE).unwrap();
        assert_eq!(fixed_points(&t, c.domain(DomainKind::Vectors).unwrap()), 7);
    }

    #[test]
    fn orbit_count_examples() {
        let c = case(2, 1);
        let gv = c.generators(GroupLabel::Gv).unwrap();
        assert_eq!(orbit_count(gv, c.domain(DomainKind::Vectors).unwrap()).unwrap().count(), 3);
        let sp = c.generators(GroupLabel::Sp).unwrap();
        assert_eq!(orbit_count(sp, c.forms(FormType::Plus).unwrap()).unwrap().count(), 1);
        let c4 = case(2, 2);
        for ty in FormType::BOTH {
            let o = c4.generators(GroupLabel::orthogonal(ty)).unwrap();
            assert_eq!(orbit_count(o, c4.domain(DomainKind::Vectors).unwrap()).unwrap().count(), 4);
        }
    }

    #[test]
    fn inner_product_examples() {
        let c = case(2, 2);
        let sp = c.generators(GroupLabel::Sp).unwrap();
        let plus = c.forms(FormType::Plus).unwrap();
        let minus = c.forms(FormType::Minus).unwrap();
        assert_eq!(char_inner_product(plus, plus, sp, DEFAULT_PRODUCT_BOUND).unwrap(), 3);
        assert_eq!(char_inner_product(plus, minus, sp, DEFAULT_PRODUCT_BOUND).unwrap(), 2);
        let c2 = case(2, 1);
        let sp2 = c2.generators(GroupLabel::Sp).unwrap();
        let v = c2.domain(DomainKind::Vectors).unwrap();
        assert_eq!(char_inner_product(v, c2.forms(FormType::Minus).unwrap(), sp2, DEFAULT_PRODUCT_BOUND).unwrap(), 2);
        assert!(matches!(char_inner_product(plus, plus, sp, 10), Err(Error::BoundExceeded { .. })));
    }

    #[test]
    fn orbit_structure_small_cases() {
        for (m, f) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
            let report = verify_orbit_structure(&case(m, f)).unwrap();
            assert!(report.pass(), "(m, f) = ({m}, {f}): {report:?}");
        }
        let r = verify_orbit_structure(&case(2, 1)).unwrap();
        assert_eq!(r.computed.stabilizer_orbit_sizes, vec![1, 6, 8]);
        assert_eq!(r.computed.orthogonal_orbit_sizes[0], vec![6, 9]);
        assert_eq!(verify_orbit_structure(&case(2, 2)).unwrap().computed.minus_orbits_on_plus_forms, 2);
    }

    #[test]
    fn degree_identity_examples() {
        assert!(verify_degree_identities(2, 2, (5, 9)).pass());
        let r = verify_degree_identities(2, 4, (34, 50));
        assert!(r.pass());
        assert_eq!(r.computed.omega_plus, 136);
        assert!(verify_degree_identities(3, 2, (27, 35)).pass());
        assert!(!verify_degree_identities(2, 2, (9, 5)).pass());
    }

    #[test]
    fn theorem_and_corollary_small() {
        for (m, f) in [(1, 1), (2, 1)] {
            let scan = pointwise_scan(&case(m, f), Mode::Exhaustive).unwrap();
            assert!(scan.theorem().pass() && scan.corollary().pass());
        }
        assert_eq!(pointwise_scan(&case(2, 1), Mode::Exhaustive).unwrap().theorem.tested, 720);
        let sampled = pointwise_scan(&case(2, 2), Mode::Sampled { count: 50, seed: 7 }).unwrap();
        assert!(sampled.theorem().pass());
        assert_eq!(sampled.theorem.tested, 50);
    }

    #[test]
    fn small_m1_inner_products() {
        for f in 1..=3 {
            let c = case(1, f);
            assert!(stabilizer_norm(&c).unwrap().pass);
            assert!(form_norms(&c).unwrap().iter().all(|r| r.pass));
            assert!(form_cross(&c).unwrap().pass);
            assert!(vector_form_products(&c).unwrap().iter().all(|r| r.pass));
        }
    }
}
