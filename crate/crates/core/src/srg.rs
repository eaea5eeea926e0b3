//! The orthogonality graph on the 1-spaces of `V`.
//!
//! `<v> ~ <w>` iff `(v, w) = 0` and `<v> != <w>`. For `m >= 2` it is strongly
//! regular, and its eigenvalue multiplicities are the degrees of the two
//! nontrivial constituents of the rank 3 character.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::formulas;
use crate::grp::GroupLabel;
use crate::gset::{DomainKind, GSet};
use crate::permchar::{char_inner_product, Case};
use crate::report::Comparison;
use crate::space::Vector;

#[derive(Clone, Debug)]
pub struct PerpGraph {
    n: usize,
    words: usize,
    adjacency: Vec<u64>,
}

impl PerpGraph {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.adjacency[i * self.words..(i + 1) * self.words]
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.row(i)[j / 64] >> (j % 64) & 1 == 1
    }

    pub fn degree(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn common_neighbours(&self, i: usize, j: usize) -> usize {
        self.row(i).iter().zip(self.row(j)).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }
}

pub fn build_perp_graph(lines: &GSet) -> Result<PerpGraph> {
    if lines.kind() != DomainKind::Lines {
        return Err(Error::InvalidLabel(format!("perp graph needs the line domain, got {}", lines.kind())));
    }
    let space = lines.space();
    let n = lines.len();
    let words = n.div_ceil(64);
    let mut adjacency = vec![0u64; n * words];
    adjacency.par_chunks_mut(words).enumerate().for_each(|(i, row)| {
        let v = Vector(lines.point(i));
        for j in 0..n {
            if j != i && space.bilinear(v, Vector(lines.point(j))).is_zero() {
                row[j / 64] |= 1 << (j % 64);
            }
        }
    });
    Ok(PerpGraph { n, words, adjacency })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SrgParams {
    pub v: u64,
    pub k: u64,
    pub lam: u64,
    pub mu: u64,
}

impl SrgParams {
    /// `k (k - lam - 1) = (v - k - 1) mu`.
    pub fn feasible(&self) -> bool {
        let (v, k, lam, mu) = (self.v as i128, self.k as i128, self.lam as i128, self.mu as i128);
        k * (k - lam - 1) == (v - k - 1) * mu
    }

    /// The closed-form parameters for `m >= 2`.
    pub fn expected(m: usize, q: u64) -> Self {
        let (v, k, lam, mu) = formulas::srg_params(m, q);
        SrgParams { v: v as u64, k: k as u64, lam: lam as u64, mu: mu as u64 }
    }
}

/// Counts degrees and common neighbours over all pairs; fails unless each is constant.
pub fn measure_srg(graph: &PerpGraph) -> Result<SrgParams> {
    let n = graph.vertex_count();
    let k = graph.degree(0);
    if let Some(i) = (0..n).find(|&i| graph.degree(i) != k) {
        return Err(Error::NotStronglyRegular(format!("vertex {i} has degree {} != {k}", graph.degree(i))));
    }
    // (common neighbours of adjacent pairs, of non-adjacent pairs), None if unseen.
    let seen = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut found: [Option<usize>; 2] = [None, None];
            for j in i + 1..n {
                let c = graph.common_neighbours(i, j);
                let slot = &mut found[!graph.adjacent(i, j) as usize];
                match *slot {
                    None => *slot = Some(c),
                    Some(x) if x == c => {}
                    Some(x) => return Err(Error::NotStronglyRegular(format!("pairs with {x} and {c} common neighbours"))),
                }
            }
            Ok(found)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut merged: [Option<usize>; 2] = [None, None];
    for found in seen {
        for s in 0..2 {
            match (merged[s], found[s]) {
                (_, None) => {}
                (None, x) => merged[s] = x,
                (Some(a), Some(b)) if a != b => {
                    return Err(Error::NotStronglyRegular(format!("pairs with {a} and {b} common neighbours")))
                }
                _ => {}
            }
        }
    }
    let (Some(lam), Some(mu)) = (merged[0], merged[1]) else {
        return Err(Error::NotStronglyRegular("complete or edgeless graph".into()));
    };
    Ok(SrgParams { v: n as u64, k: k as u64, lam: lam as u64, mu: mu as u64 })
}

fn require_m2(case: &Case) -> Result<()> {
    if case.m() < 2 {
        return Err(Error::Degenerate(format!(
            "m = 1: the {} lines are pairwise non-orthogonal, so the graph is edgeless",
            formulas::line_count(1, case.q())
        )));
    }
    Ok(())
}

pub fn verify_srg(case: &Case) -> Result<Comparison<SrgParams>> {
    require_m2(case)?;
    let measured = measure_srg(&build_perp_graph(case.domain(DomainKind::Lines)?)?)?;
    Ok(Comparison::new(
        measured,
        SrgParams::expected(case.m(), case.q()),
        "((q^{2m}-1)/(q-1), (q^{2m-1}-q)/(q-1), (q^{2m-2}-1)/(q-1) - 2, (q^{2m-2}-1)/(q-1))",
    ))
}

/// Eigenvalues `r > s` of a primitive SRG and their multiplicities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumMultiplicities {
    /// Multiplicity of `s`.
    pub f_minus: u64,
    /// Multiplicity of `r`.
    pub f_plus: u64,
    pub r: i64,
    pub s: i64,
}

impl SpectrumMultiplicities {
    pub fn trace_vanishes(&self, k: u64) -> bool {
        k as i128 + self.f_plus as i128 * self.r as i128 + self.f_minus as i128 * self.s as i128 == 0
    }
}

fn exact_div(a: i128, b: i128, what: &str) -> Result<i128> {
    if b == 0 || a % b != 0 {
        return Err(Error::NonIntegralMultiplicity(format!("{what}: {a}/{b}")));
    }
    Ok(a / b)
}

/// `f+- = ((v-1) -+ (2k + (v-1)(lam-mu)) / sqrt(D)) / 2`, `D = (lam-mu)^2 + 4(k-mu)`,
/// all in exact integers.
pub fn spectrum(p: &SrgParams) -> Result<SpectrumMultiplicities> {
    let (v, k, lam, mu) = (p.v as i128, p.k as i128, p.lam as i128, p.mu as i128);
    let disc = (lam - mu) * (lam - mu) + 4 * (k - mu);
    let root = (disc.max(0) as u128).isqrt() as i128;
    if root * root != disc || root == 0 {
        return Err(Error::NonIntegralMultiplicity(format!("discriminant {disc} is not a positive square")));
    }
    let r = exact_div(lam - mu + root, 2, "eigenvalue r")?;
    let s = exact_div(lam - mu - root, 2, "eigenvalue s")?;
    let skew = exact_div(2 * k + (v - 1) * (lam - mu), root, "multiplicity numerator")?;
    let f_plus = exact_div(v - 1 - skew, 2, "multiplicity of r")?;
    let f_minus = exact_div(v - 1 + skew, 2, "multiplicity of s")?;
    if f_plus <= 0 || f_minus <= 0 {
        return Err(Error::NonIntegralMultiplicity(format!("non-positive multiplicities {f_plus}, {f_minus}")));
    }
    Ok(SpectrumMultiplicities { f_minus: f_minus as u64, f_plus: f_plus as u64, r: r as i64, s: s as i64 })
}

/// `(chi^-(1), chi^+(1))`: the two multiplicities, smaller first.
pub fn chi_degrees(case: &Case) -> Result<Comparison<(u64, u64)>> {
    require_m2(case)?;
    let params = verify_srg(case)?.computed;
    let spec = spectrum(&params)?;
    let (lo, hi) = (spec.f_minus.min(spec.f_plus), spec.f_minus.max(spec.f_plus));
    let (cm, cp) = formulas::chi_degrees(case.m(), case.q());
    Ok(Comparison::new((lo, hi), (cm as u64, cp as u64), "chi+-(1) = ((q^{2m}-q)/(q-1) +- q^m)/2"))
}

/// `<1_P^G, 1_P^G>`, the rank of `G` on lines.
pub fn verify_rank3(case: &Case) -> Result<Comparison<u64>> {
    let lines = case.domain(DomainKind::Lines)?;
    let sp = case.generators(GroupLabel::Sp)?;
    let rank = char_inner_product(lines, lines, sp, case.bounds().product)?;
    let provenance = if case.m() == 1 { "rank 2 when m = 1 (doubly transitive)" } else { "rank 3 action on 1-spaces" };
    Ok(Comparison::new(rank, formulas::line_rank(case.m()), provenance))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permchar::Bounds;

    fn case(m: usize, f: u32) -> Case {
        Case::new(m, f, Bounds::default()).unwrap()
    }

    #[test]
    fn graph_examples() {
        let g = build_perp_graph(case(2, 1).domain(DomainKind::Lines).unwrap()).unwrap();
        assert_eq!(g.vertex_count(), 15);
        assert!((0..15).all(|i| g.degree(i) == 6));
        let g = build_perp_graph(case(1, 1).domain(DomainKind::Lines).unwrap()).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert!((0..3).all(|i| g.degree(i) == 0));
        let g = build_perp_graph(case(3, 1).domain(DomainKind::Lines).unwrap()).unwrap();
        assert_eq!((g.vertex_count(), g.degree(0)), (63, 30));
    }

    #[test]
    fn srg_parameters() {
        for ((m, f), want) in [((2, 1), (15, 6, 1, 3)), ((3, 1), (63, 30, 13, 15)), ((2, 2), (85, 20, 3, 5))] {
            let r = verify_srg(&case(m, f)).unwrap();
            assert!(r.pass());
            assert_eq!((r.computed.v, r.computed.k, r.computed.lam, r.computed.mu), want);
            assert!(r.computed.feasible());
        }
        assert!(matches!(verify_srg(&case(1, 1)), Err(Error::Degenerate(_))));
    }

    #[test]
    fn multiplicities() {
        for ((m, f), want) in [((2, 1), (5, 9)), ((3, 1), (27, 35)), ((2, 2), (34, 50))] {
            let r = chi_degrees(&case(m, f)).unwrap();
            assert!(r.pass());
            assert_eq!(r.computed, want);
        }
        let p = SrgParams { v: 15, k: 6, lam: 1, mu: 3 };
        let s = spectrum(&p).unwrap();
        assert_eq!((s.r, s.s, s.f_plus, s.f_minus), (1, -3, 9, 5));
        assert!(s.trace_vanishes(p.k));
        assert_eq!(s.f_plus + s.f_minus, p.v - 1);
        // The pentagon (5, 2, 0, 1) has irrational eigenvalues.
        assert!(matches!(spectrum(&SrgParams { v: 5, k: 2, lam: 0, mu: 1 }), Err(Error::NonIntegralMultiplicity(_))));
    }

    #[test]
    fn rank_on_lines() {
        assert_eq!(verify_rank3(&case(2, 1)).unwrap().computed, 3);
        assert_eq!(verify_rank3(&case(2, 2)).unwrap().computed, 3);
        let degenerate = verify_rank3(&case(1, 1)).unwrap();
        assert_eq!(degenerate.computed, 2);
        assert!(degenerate.pass());
    }
}
