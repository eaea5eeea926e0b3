//! Matrix groups acting on row vectors of `V` from the right.
//!
//! Generators are transvections: symplectic ones `x -> x + lambda (x,v) v`
//! for `Sp`, the stabilizer `G_v` and the line stabilizer `P`; orthogonal
//! ones `x -> x + Q(v)^{-1} (x,v) v` for `O(Q)`. Whenever the claimed order is
//! within the enumeration bound the closure is computed and compared against
//! the order formula, and a shortfall triggers a search for missing
//! generators before giving up.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rustc_hash::FxHashSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::FieldElement;
use crate::linalg::{self, ActionTable, Rows};
use crate::space::{classify_type, complete_hyperbolic_basis, standard_forms, FormType, QuadraticForm, Space, Vector};

/// Default cap on the order of any group that gets enumerated.
pub const DEFAULT_ENUM_BOUND: u128 = 20_000_000;

/// Length of the random words used by [`random_elements`].
pub const RANDOM_WORD_LENGTH: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupElement {
    rows: Rows,
}

impl GroupElement {
    pub fn from_rows(rows: impl IntoIterator<Item = u64>) -> Self {
        GroupElement { rows: rows.into_iter().collect() }
    }

    pub fn identity(space: &Space) -> Self {
        GroupElement { rows: linalg::identity(space) }
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    #[inline]
    pub fn row(&self, i: usize) -> Vector {
        Vector(self.rows[i])
    }

    #[inline]
    pub fn apply(&self, space: &Space, v: Vector) -> Vector {
        Vector(linalg::apply(space, &self.rows, v.0))
    }

    /// `self * other`: first `self`, then `other`.
    pub fn mul(&self, space: &Space, other: &GroupElement) -> GroupElement {
        GroupElement { rows: linalg::mat_mul(space, &self.rows, &other.rows) }
    }

    pub fn inverse(&self, space: &Space) -> Result<GroupElement> {
        Ok(GroupElement { rows: linalg::inverse(space, &self.rows)? })
    }

    pub fn is_identity(&self, space: &Space) -> bool {
        self.rows == linalg::identity(space)
    }

    pub fn action_table(&self, space: &Space) -> ActionTable {
        ActionTable::new(space, &self.rows)
    }

    /// Matrix entries, row-major, as integers.
    pub fn entries(&self, space: &Space) -> Vec<Vec<u8>> {
        self.rows.iter().map(|&r| space.coords(Vector(r)).iter().map(|c| c.0).collect()).collect()
    }
}

/// Whether `g` preserves the standard alternating form.
pub fn is_isometry(space: &Space, g: &GroupElement) -> bool {
    let n = space.dim();
    g.rows.len() == n
        && (0..n).all(|i| {
            (i + 1..n).all(|j| space.bilinear(g.row(i), g.row(j)) == space.bilinear(space.basis_vector(i), space.basis_vector(j)))
        })
}

/// Whether `Q(x g) = Q(x)` for all `x`, checked on the basis and pairwise sums.
pub fn preserves_form(space: &Space, g: &GroupElement, form: &QuadraticForm) -> bool {
    let n = space.dim();
    let eval = |v: Vector| form.eval(space, v).expect("dimensions checked by caller");
    (0..n).all(|i| {
        let bi = space.basis_vector(i);
        eval(g.row(i)) == eval(bi)
            && (i + 1..n).all(|j| {
                let bj = space.basis_vector(j);
                eval(g.row(i) + g.row(j)) == eval(bi + bj)
            })
    })
}

/// `x -> x + lambda (x, v) v`.
pub fn symplectic_transvection(space: &Space, v: Vector, lambda: FieldElement) -> Result<GroupElement> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let field = space.field();
    Ok(GroupElement::from_rows((0..space.dim()).map(|i| {
        let b = space.basis_vector(i);
        (b + space.scale(field.mul(lambda, space.bilinear(b, v)), v)).0
    })))
}

/// `x -> x + Q(v)^{-1} (x, v) v`, with `(,)` the polarization of `Q`.
pub fn orthogonal_transvection(space: &Space, form: &QuadraticForm, v: Vector) -> Result<GroupElement> {
    let qv = form.eval(space, v)?;
    if qv.is_zero() {
        return Err(Error::SingularVector);
    }
    let field = space.field();
    let inv = field.inv(qv)?;
    let polar = form.polarization();
    Ok(GroupElement::from_rows((0..space.dim()).map(|i| {
        let b = space.basis_vector(i);
        (b + space.scale(field.mul(inv, polar.eval(space, b, v)), v)).0
    })))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupLabel {
    Sp,
    #[serde(rename = "O+")]
    OPlus,
    #[serde(rename = "O-")]
    OMinus,
    #[serde(rename = "G_v")]
    Gv,
    P,
}

impl GroupLabel {
    pub const ALL: [GroupLabel; 5] = [GroupLabel::Sp, GroupLabel::OPlus, GroupLabel::OMinus, GroupLabel::Gv, GroupLabel::P];

    pub fn orthogonal(ty: FormType) -> Self {
        match ty {
            FormType::Plus => GroupLabel::OPlus,
            FormType::Minus => GroupLabel::OMinus,
        }
    }
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupLabel::Sp => "Sp",
            GroupLabel::OPlus => "O+",
            GroupLabel::OMinus => "O-",
            GroupLabel::Gv => "G_v",
            GroupLabel::P => "P",
        })
    }
}

/// Extra data a label needs: the fixed vector for `G_v` and `P`, or the form for `O+`/`O-`.
#[derive(Clone, Debug, Default)]
pub enum Aux {
    #[default]
    Standard,
    Vector(Vector),
    Form(QuadraticForm),
}

/// What a generator set preserves.
#[derive(Clone, Debug)]
enum Predicate {
    Symplectic,
    Form(QuadraticForm),
    FixesVector(Vector),
    FixesLine(Vector),
}

#[derive(Clone, Debug)]
pub struct GeneratorSet {
    gens: Vec<GroupElement>,
    label: GroupLabel,
    claimed_order: u128,
    predicate: Predicate,
    order_verified: bool,
    augmented: usize,
}

impl GeneratorSet {
    pub fn gens(&self) -> &[GroupElement] {
        &self.gens
    }

    pub fn label(&self) -> GroupLabel {
        self.label
    }

    pub fn claimed_order(&self) -> u128 {
        self.claimed_order
    }

    /// True once the closure has been enumerated and matched `claimed_order`.
    pub fn order_verified(&self) -> bool {
        self.order_verified
    }

    /// How many generators the shortfall repair had to add.
    pub fn augmented(&self) -> usize {
        self.augmented
    }

    /// The vector fixed by `G_v` (or whose line is fixed by `P`).
    pub fn fixed_vector(&self) -> Option<Vector> {
        match self.predicate {
            Predicate::FixesVector(v) | Predicate::FixesLine(v) => Some(v),
            _ => None,
        }
    }

    pub fn form(&self) -> Option<&QuadraticForm> {
        match &self.predicate {
            Predicate::Form(q) => Some(q),
            _ => None,
        }
    }

    /// The defining predicate of the label.
    pub fn admits(&self, space: &Space, g: &GroupElement) -> bool {
        if !is_isometry(space, g) {
            return false;
        }
        match &self.predicate {
            Predicate::Symplectic => true,
            Predicate::Form(q) => preserves_form(space, g, q),
            Predicate::FixesVector(v) => g.apply(space, *v) == *v,
            Predicate::FixesLine(v) => space.in_span_of(g.apply(space, *v), *v),
        }
    }

    /// A bare generator set, e.g. `{identity}`, with no order claim beyond the closure.
    pub fn custom(label: GroupLabel, gens: Vec<GroupElement>, claimed_order: u128) -> Self {
        GeneratorSet {
            gens,
            label,
            claimed_order,
            predicate: Predicate::Symplectic,
            order_verified: false,
            augmented: 0,
        }
    }
}

fn checked_pow(q: u128, e: u32) -> Result<u128> {
    q.checked_pow(e).ok_or(Error::OrderOverflow)
}

/// `|Sp_2m(q)| = q^{m^2} prod_{i=1..m} (q^{2i} - 1)`.
pub fn symplectic_order(m: usize, q: u64) -> Result<u128> {
    let q = q as u128;
    let mut order = checked_pow(q, (m * m) as u32)?;
    for i in 1..=m {
        order = order.checked_mul(checked_pow(q, 2 * i as u32)? - 1).ok_or(Error::OrderOverflow)?;
    }
    Ok(order)
}

/// `|O^eps_2m(q)| = 2 q^{m(m-1)} (q^m - eps) prod_{i=1..m-1} (q^{2i} - 1)`.
pub fn orthogonal_order(m: usize, q: u64, ty: FormType) -> Result<u128> {
    let q = q as u128;
    let qm = checked_pow(q, m as u32)?;
    let mut order = 2 * checked_pow(q, (m * (m - 1)) as u32)?;
    let factor = match ty {
        FormType::Plus => qm - 1,
        FormType::Minus => qm + 1,
    };
    order = order.checked_mul(factor).ok_or(Error::OrderOverflow)?;
    for i in 1..m {
        order = order.checked_mul(checked_pow(q, 2 * i as u32)? - 1).ok_or(Error::OrderOverflow)?;
    }
    Ok(order)
}

pub fn order_formula(label: GroupLabel, m: usize, q: u64) -> Result<u128> {
    let sp = symplectic_order(m, q)?;
    let nonzero = checked_pow(q as u128, 2 * m as u32)? - 1;
    Ok(match label {
        GroupLabel::Sp => sp,
        GroupLabel::OPlus => orthogonal_order(m, q, FormType::Plus)?,
        GroupLabel::OMinus => orthogonal_order(m, q, FormType::Minus)?,
        GroupLabel::Gv => sp / nonzero,
        GroupLabel::P => sp / nonzero * (q as u128 - 1),
    })
}

fn push_unique(gens: &mut Vec<GroupElement>, seen: &mut FxHashSet<Rows>, space: &Space, g: GroupElement) {
    if !g.is_identity(space) && seen.insert(g.rows.clone()) {
        gens.push(g);
    }
}

/// Vectors of `span` plus all pairwise sums.
fn spanning_with_sums(span: &[Vector]) -> Vec<Vector> {
    let mut out = span.to_vec();
    for (i, &a) in span.iter().enumerate() {
        for &b in &span[i + 1..] {
            out.push(a + b);
        }
    }
    out
}

fn transvections_over(space: &Space, vectors: &[Vector]) -> Result<Vec<GroupElement>> {
    let mut gens = Vec::new();
    let mut seen = FxHashSet::default();
    for &w in vectors {
        for lambda in space.field().basis() {
            push_unique(&mut gens, &mut seen, space, symplectic_transvection(space, w, lambda)?);
        }
    }
    Ok(gens)
}

/// Builds the generator set for `label`, cross-checking its order against the
/// order formula whenever the order is at most `enum_bound`.
pub fn build_generators(space: &Space, label: GroupLabel, aux: &Aux, enum_bound: u128) -> Result<GeneratorSet> {
    let (m, q) = (space.m(), space.q());
    let std_basis: Vec<Vector> = (0..space.dim()).map(|i| space.basis_vector(i)).collect();

    let (gens, predicate) = match label {
        GroupLabel::Sp => (transvections_over(space, &spanning_with_sums(&std_basis))?, Predicate::Symplectic),
        GroupLabel::OPlus | GroupLabel::OMinus => {
            let want = if label == GroupLabel::OPlus { FormType::Plus } else { FormType::Minus };
            let form = match aux {
                Aux::Form(form) => form.clone(),
                Aux::Standard => {
                    let (plus, minus) = standard_forms(space);
                    if want == FormType::Plus { plus } else { minus }
                }
                Aux::Vector(_) => return Err(Error::InvalidLabel(format!("{label} needs a quadratic form"))),
            };
            if form.polarization() != crate::space::AlternatingForm::standard(space) {
                return Err(Error::NonStandardPolarization);
            }
            if classify_type(space, &form)? != want {
                return Err(Error::InvalidLabel(format!("form given for {label} has the other type")));
            }
            let mut gens = Vec::new();
            let mut seen = FxHashSet::default();
            let mut candidates = std_basis.clone();
            for (i, &a) in std_basis.iter().enumerate() {
                for &b in &std_basis[i + 1..] {
                    for lambda in space.field().elements().skip(1) {
                        candidates.push(a + space.scale(lambda, b));
                    }
                }
            }
            // e_i + f_i + b links hyperbolic pairs; without these the
            // reflections stay inside a product of 2-dimensional groups.
            for i in 0..m {
                let pair = std_basis[2 * i] + std_basis[2 * i + 1];
                for (j, &b) in std_basis.iter().enumerate() {
                    if j / 2 != i {
                        candidates.push(pair + b);
                    }
                }
            }
            for v in candidates {
                if !form.eval(space, v)?.is_zero() {
                    push_unique(&mut gens, &mut seen, space, orthogonal_transvection(space, &form, v)?);
                }
            }
            (gens, Predicate::Form(form))
        }
        GroupLabel::Gv | GroupLabel::P => {
            let v = match aux {
                Aux::Vector(v) => *v,
                Aux::Standard => space.basis_vector(0),
                Aux::Form(_) => return Err(Error::InvalidLabel(format!("{label} needs a vector"))),
            };
            if v.is_zero() {
                return Err(Error::ZeroVector);
            }
            // (v, f1, e2, f2, ...): everything but f1 spans v^perp.
            let frame = complete_hyperbolic_basis(space, &[v])?;
            let perp: Vec<Vector> = frame.iter().enumerate().filter(|&(i, _)| i != 1).map(|(_, &w)| w).collect();
            let mut gens = transvections_over(space, &spanning_with_sums(&perp))?;
            if label == GroupLabel::Gv {
                (gens, Predicate::FixesVector(v))
            } else {
                if q > 2 {
                    // Torus element v -> w v, f1 -> w^{-1} f1 in the frame.
                    let field = space.field();
                    let w = field.generator();
                    let mut image: Vec<u64> = frame.iter().map(|b| b.0).collect();
                    image[0] = space.scale(w, frame[0]).0;
                    image[1] = space.scale(field.inv(w)?, frame[1]).0;
                    let frame_rows: Vec<u64> = frame.iter().map(|b| b.0).collect();
                    let torus = linalg::mat_mul(space, &linalg::inverse(space, &frame_rows)?, &image);
                    gens.push(GroupElement { rows: torus });
                }
                (gens, Predicate::FixesLine(v))
            }
        }
    };

    let mut set = GeneratorSet {
        gens,
        label,
        claimed_order: order_formula(label, m, q)?,
        predicate,
        order_verified: false,
        augmented: 0,
    };
    if let Some(bad) = set.gens.iter().position(|g| !set.admits(space, g)) {
        return Err(Error::InvalidLabel(format!("generator {bad} of {label} violates its defining predicate")));
    }
    if set.gens.is_empty() {
        set.gens.push(GroupElement::identity(space));
    }

    if set.claimed_order <= enum_bound && Packing::new(space).is_some() {
        repair_shortfall(space, &mut set, enum_bound)?;
    }
    Ok(set)
}

/// [`build_generators`] plus the element list, from a single closure.
pub fn build_and_enumerate(space: &Space, label: GroupLabel, aux: &Aux, bound: u128) -> Result<(GeneratorSet, ElementList)> {
    let mut set = build_generators(space, label, aux, 0)?;
    if set.claimed_order > bound {
        return Err(Error::BoundExceeded { what: format!("enumeration of {label}"), needed: set.claimed_order, bound });
    }
    let pack = Packing::new(space).ok_or(Error::BoundExceeded {
        what: "matrix packing for enumeration".into(),
        needed: (space.dim() * space.dim()) as u128 * space.field_degree() as u128,
        bound: 128,
    })?;
    let closure = repair_shortfall(space, &mut set, bound)?;
    Ok((set, ElementList { pack, elements: closure.elements }))
}

/// Checks `|<gens>|` against the claimed order, adding generators on a
/// shortfall. Returns the final closure.
fn repair_shortfall(space: &Space, set: &mut GeneratorSet, enum_bound: u128) -> Result<Closure> {
    let pack = Packing::new(space).expect("checked by caller");
    let mut closure = Closure::compute(space, &set.gens, set.claimed_order)?;
    if closure.len() as u128 == set.claimed_order {
        set.order_verified = true;
        return Ok(closure);
    }

    // Reflections first (only meaningful for O), then elements of an enumerated Sp.
    let mut candidates: Vec<GroupElement> = Vec::new();
    if let Predicate::Form(form) = &set.predicate {
        if let Ok(vectors) = space.vectors(enum_bound) {
            for v in vectors {
                if !form.eval(space, v)?.is_zero() {
                    candidates.push(orthogonal_transvection(space, form, v)?);
                }
            }
        }
    }
    let try_candidates = |set: &mut GeneratorSet, closure: &mut Closure, candidates: &mut dyn Iterator<Item = GroupElement>| -> Result<bool> {
        for c in candidates {
            if closure.contains(&pack, &c) || !set.admits(space, &c) {
                continue;
            }
            set.gens.push(c);
            set.augmented += 1;
            *closure = Closure::compute(space, &set.gens, set.claimed_order)?;
            if closure.len() as u128 == set.claimed_order {
                return Ok(true);
            }
        }
        Ok(false)
    };
    if try_candidates(set, &mut closure, &mut candidates.into_iter())? {
        set.order_verified = true;
        return Ok(closure);
    }

    let sp_order = symplectic_order(space.m(), space.q())?;
    if set.label != GroupLabel::Sp && sp_order <= enum_bound {
        let sp = build_generators(space, GroupLabel::Sp, &Aux::Standard, enum_bound)?;
        let all = enumerate_group(space, &sp, enum_bound)?;
        if try_candidates(set, &mut closure, &mut all.iter())? {
            set.order_verified = true;
            return Ok(closure);
        }
    }
    Err(Error::GenerationShortfall {
        label: set.label.to_string(),
        achieved: closure.len() as u128,
        claimed: set.claimed_order,
    })
}

/// Whole matrix packed into a `u128`: row `i` in bits `[i*w, (i+1)*w)`, `w = 2m f`.
#[derive(Clone, Copy, Debug)]
struct Packing {
    dim: usize,
    width: u32,
}

impl Packing {
    fn new(space: &Space) -> Option<Self> {
        let width = space.dim() as u32 * space.field_degree();
        (width * space.dim() as u32 <= 128).then_some(Packing { dim: space.dim(), width })
    }

    #[inline]
    fn pack(&self, rows: &[u64]) -> u128 {
        rows.iter().enumerate().fold(0u128, |acc, (i, &r)| acc | (r as u128) << (i as u32 * self.width))
    }

    #[inline]
    fn unpack(&self, key: u128, out: &mut [u64]) {
        let mask = if self.width == 64 { u64::MAX } else { (1u64 << self.width) - 1 };
        for (i, o) in out.iter_mut().enumerate().take(self.dim) {
            *o = (key >> (i as u32 * self.width)) as u64 & mask;
        }
    }
}

struct Closure {
    elements: Vec<u128>,
    set: FxHashSet<u128>,
}

impl Closure {
    /// BFS from the identity under right multiplication by the generators.
    fn compute(space: &Space, gens: &[GroupElement], limit: u128) -> Result<Self> {
        let pack = Packing::new(space).ok_or(Error::BoundExceeded {
            what: "matrix packing for enumeration".into(),
            needed: (space.dim() * space.dim()) as u128 * space.field_degree() as u128,
            bound: 128,
        })?;
        let tables: Vec<ActionTable> = gens.iter().map(|g| g.action_table(space)).collect();
        let id = pack.pack(&linalg::identity(space));
        // Sized for the expected order so the set never rehashes mid-BFS.
        let capacity = limit.min(1 << 25) as usize;
        let mut elements = Vec::with_capacity(capacity);
        elements.push(id);
        let mut set = FxHashSet::with_capacity_and_hasher(capacity, Default::default());
        set.insert(id);
        let n = space.dim();
        let mut cur = vec![0u64; n];
        let mut next = vec![0u64; n];
        let mut head = 0;
        while head < elements.len() {
            pack.unpack(elements[head], &mut cur);
            head += 1;
            for t in &tables {
                t.right_multiply(&cur, &mut next);
                let key = pack.pack(&next);
                if set.insert(key) {
                    if elements.len() as u128 >= limit {
                        return Err(Error::BoundExceeded {
                            what: "group closure".into(),
                            needed: limit + 1,
                            bound: limit,
                        });
                    }
                    elements.push(key);
                }
            }
        }
        Ok(Closure { elements, set })
    }

    fn len(&self) -> usize {
        self.elements.len()
    }

    fn contains(&self, pack: &Packing, g: &GroupElement) -> bool {
        self.set.contains(&pack.pack(&g.rows))
    }
}

/// All elements of an enumerated group, stored compactly.
#[derive(Clone, Debug)]
pub struct ElementList {
    pack: Packing,
    elements: Vec<u128>,
}

impl ElementList {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn get(&self, i: usize) -> GroupElement {
        let mut rows = smallvec::smallvec![0u64; self.pack.dim];
        self.pack.unpack(self.elements[i], &mut rows);
        GroupElement { rows }
    }

    pub fn iter(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.len()).map(|i| self.get(i))
    }
}

/// Every element of `<gens>`, each exactly once, in BFS order from the identity.
pub fn enumerate_group(space: &Space, gens: &GeneratorSet, bound: u128) -> Result<ElementList> {
    if gens.claimed_order > bound {
        return Err(Error::BoundExceeded {
            what: format!("enumeration of {}", gens.label),
            needed: gens.claimed_order,
            bound,
        });
    }
    let pack = Packing::new(space).ok_or(Error::BoundExceeded {
        what: "matrix packing for enumeration".into(),
        needed: (space.dim() * space.dim()) as u128 * space.field_degree() as u128,
        bound: 128,
    })?;
    let closure = Closure::compute(space, &gens.gens, bound)?;
    if closure.len() as u128 != gens.claimed_order {
        return Err(Error::GenerationShortfall {
            label: gens.label.to_string(),
            achieved: closure.len() as u128,
            claimed: gens.claimed_order,
        });
    }
    Ok(ElementList { pack, elements: closure.elements })
}

/// `count` random words of [`RANDOM_WORD_LENGTH`] letters in the generators and
/// their inverses, deterministic in `seed`.
pub fn random_elements(space: &Space, gens: &GeneratorSet, count: usize, seed: u64) -> Result<Vec<GroupElement>> {
    let mut letters: Vec<ActionTable> = Vec::with_capacity(2 * gens.gens.len());
    for g in &gens.gens {
        letters.push(g.action_table(space));
        letters.push(g.inverse(space)?.action_table(space));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = space.dim();
    let mut out = Vec::with_capacity(count);
    let mut next = vec![0u64; n];
    for _ in 0..count {
        let mut cur: Vec<u64> = linalg::identity(space).to_vec();
        for _ in 0..RANDOM_WORD_LENGTH {
            let t = &letters[rng.random_range(0..letters.len())];
            t.right_multiply(&cur, &mut next);
            std::mem::swap(&mut cur, &mut next);
        }
        out.push(GroupElement::from_rows(cur));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldContext;

    fn space(m: usize, f: u32) -> Space {
        Space::new(m, FieldContext::new(f).unwrap()).unwrap()
    }

    #[test]
    fn transvection_basics() {
        let s = space(1, 1);
        let e1 = s.basis_vector(0);
        let f1 = s.basis_vector(1);
        assert!(symplectic_transvection(&s, e1, FieldElement::ZERO).unwrap().is_identity(&s));
        let t = symplectic_transvection(&s, e1, FieldElement::ONE).unwrap();
        assert_eq!(t.apply(&s, e1), e1);
        assert_eq!(t.apply(&s, f1), f1 + e1);
        assert_eq!(t.entries(&s), vec![vec![1, 0], vec![1, 1]]);
        assert!(matches!(symplectic_transvection(&s, Vector::ZERO, FieldElement::ONE), Err(Error::ZeroVector)));
    }

    #[test]
    fn orthogonal_transvection_preserves_q_minus() {
        let s = space(1, 1);
        let (plus, minus) = standard_forms(&s);
        let r = orthogonal_transvection(&s, &minus, s.basis_vector(0)).unwrap();
        for v in s.vectors(u128::MAX).unwrap() {
            assert_eq!(minus.eval(&s, r.apply(&s, v)).unwrap(), minus.eval(&s, v).unwrap());
        }
        assert!(r.mul(&s, &r).is_identity(&s));
        assert!(matches!(orthogonal_transvection(&s, &plus, s.basis_vector(0)), Err(Error::SingularVector)));
    }

    #[test]
    fn orthogonal_transvections_preserve_q_plus_exhaustively() {
        let s = space(2, 1);
        let (plus, _) = standard_forms(&s);
        for v in s.vectors(u128::MAX).unwrap() {
            if plus.eval(&s, v).unwrap().is_zero() {
                continue;
            }
            let r = orthogonal_transvection(&s, &plus, v).unwrap();
            assert!(r.mul(&s, &r).is_identity(&s));
            for x in s.vectors(u128::MAX).unwrap() {
                assert_eq!(plus.eval(&s, r.apply(&s, x)).unwrap(), plus.eval(&s, x).unwrap());
            }
        }
    }

    #[test]
    fn order_formulas() {
        assert_eq!(symplectic_order(1, 2).unwrap(), 6);
        assert_eq!(symplectic_order(2, 2).unwrap(), 720);
        assert_eq!(symplectic_order(2, 4).unwrap(), 979_200);
        assert_eq!(symplectic_order(3, 2).unwrap(), 1_451_520);
        assert_eq!(orthogonal_order(2, 2, FormType::Plus).unwrap(), 72);
        assert_eq!(orthogonal_order(2, 2, FormType::Minus).unwrap(), 120);
        assert_eq!(order_formula(GroupLabel::Gv, 2, 2).unwrap(), 48);
        assert_eq!(order_formula(GroupLabel::P, 2, 4).unwrap(), 3 * 979_200 / 255);
        assert!(matches!(symplectic_order(4, 256), Err(Error::OrderOverflow)));
    }

    #[test]
    fn identity_group() {
        let s = space(2, 1);
        let set = GeneratorSet::custom(GroupLabel::Sp, vec![GroupElement::identity(&s)], 1);
        let all = enumerate_group(&s, &set, 10).unwrap();
        assert_eq!(all.len(), 1);
        assert!(all.get(0).is_identity(&s));
        let words = random_elements(&s, &set, 1, 7).unwrap();
        assert!(words[0].is_identity(&s));
    }

    #[test]
    fn small_groups_have_claimed_orders() {
        for label in GroupLabel::ALL {
            for (m, f) in [(1, 1), (1, 2), (2, 1)] {
                let s = space(m, f);
                let set = build_generators(&s, label, &Aux::Standard, DEFAULT_ENUM_BOUND).unwrap();
                assert!(set.order_verified(), "{label} at m={m} f={f}");
                assert_eq!(enumerate_group(&s, &set, DEFAULT_ENUM_BOUND).unwrap().len() as u128, set.claimed_order());
            }
        }
    }

    #[test]
    fn o_plus_4_2_needs_repair() {
        let s = space(2, 1);
        let set = build_generators(&s, GroupLabel::OPlus, &Aux::Standard, DEFAULT_ENUM_BOUND).unwrap();
        assert_eq!(set.claimed_order(), 72);
        assert!(set.order_verified());
        assert!(set.augmented() > 0);
    }

    #[test]
    fn reflections_suffice_elsewhere() {
        for (m, f) in [(1, 1), (1, 2), (2, 2), (3, 1)] {
            let s = space(m, f);
            for label in [GroupLabel::OPlus, GroupLabel::OMinus] {
                let set = build_generators(&s, label, &Aux::Standard, DEFAULT_ENUM_BOUND).unwrap();
                assert!(set.order_verified());
                assert_eq!(set.augmented(), 0, "{label} at m={m} f={f}");
            }
        }
        let minus = build_generators(&space(2, 1), GroupLabel::OMinus, &Aux::Standard, DEFAULT_ENUM_BOUND).unwrap();
        assert_eq!(minus.augmented(), 0);
    }

    #[test]
    fn bound_and_label_errors() {
        let s = space(2, 2);
        let sp = build_generators(&s, GroupLabel::Sp, &Aux::Standard, 1000).unwrap();
        assert!(!sp.order_verified());
        assert!(matches!(enumerate_group(&s, &sp, 1000), Err(Error::BoundExceeded { .. })));
        assert!(build_generators(&s, GroupLabel::Gv, &Aux::Form(standard_forms(&s).0), 1000).is_err());
        let (_, minus) = standard_forms(&s);
        assert!(build_generators(&s, GroupLabel::OPlus, &Aux::Form(minus), 1000).is_err());
    }

    #[test]
    fn shortfall_is_reported() {
        let s = space(1, 1);
        let t = symplectic_transvection(&s, s.basis_vector(0), FieldElement::ONE).unwrap();
        let set = GeneratorSet::custom(GroupLabel::Sp, vec![t], 6);
        assert!(matches!(
            enumerate_group(&s, &set, 100),
            Err(Error::GenerationShortfall { achieved: 2, claimed: 6, .. })
        ));
    }

    #[test]
    fn random_words_are_deterministic_isometries() {
        let s = space(2, 3);
        let sp = build_generators(&s, GroupLabel::Sp, &Aux::Standard, 0).unwrap();
        let a = random_elements(&s, &sp, 20, 42).unwrap();
        let b = random_elements(&s, &sp, 20, 42).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, random_elements(&s, &sp, 20, 43).unwrap());
        assert!(a.iter().all(|g| is_isometry(&s, g)));
    }

    #[test]
    fn inverse_and_product() {
        let s = space(2, 2);
        let sp = build_generators(&s, GroupLabel::Sp, &Aux::Standard, 0).unwrap();
        for g in random_elements(&s, &sp, 10, 1).unwrap() {
            let inv = g.inverse(&s).unwrap();
            assert!(g.mul(&s, &inv).is_identity(&s));
            let x = s.vector(&[FieldElement(1), FieldElement(2), FieldElement(3), FieldElement(0)]).unwrap();
            assert_eq!(g.mul(&s, &inv).apply(&s, x), x);
            assert_eq!(g.mul(&s, &g).apply(&s, x), g.apply(&s, g.apply(&s, x)));
        }
    }
}
