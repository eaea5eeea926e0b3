//! The symplectic space `V = F_q^{2m}`.
//!
//! Coordinates are ordered `e_1, f_1, e_2, f_2, ..., e_m, f_m`; the standard
//! alternating form pairs coordinate `2i` with `2i + 1` (zero-based).
//! Quadratic forms are upper-triangular coefficient matrices. Every form
//! polarizing to the standard alternating form is `Q+ + l^2` for a unique
//! linear functional `l`, which is how the form domains are indexed.

use std::fmt;
use std::ops::{Add, AddAssign};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{FieldContext, FieldElement};
use crate::grp::GroupElement;
use crate::linalg;

/// Default cap on `q^{2m}` for anything that enumerates `V` or the forms.
pub const DEFAULT_SPACE_BOUND: u128 = 1 << 24;

/// A vector of `V`, bit-packed relative to a [`Space`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Vector(pub u64);

impl Vector {
    pub const ZERO: Vector = Vector(0);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl Add for Vector {
    type Output = Vector;
    #[inline]
    #[allow(clippy::suspicious_arithmetic_impl)] // characteristic 2
    fn add(self, rhs: Vector) -> Vector {
        Vector(self.0 ^ rhs.0)
    }
}

impl AddAssign for Vector {
    #[inline]
    #[allow(clippy::suspicious_op_assign_impl)]
    fn add_assign(&mut self, rhs: Vector) {
        self.0 ^= rhs.0;
    }
}

/// A linear functional `v -> sum l_i v_i`, packed like a [`Vector`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LinearFunctional(pub u64);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum FormType {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl FormType {
    pub const BOTH: [FormType; 2] = [FormType::Plus, FormType::Minus];

    pub fn sign(self) -> i64 {
        match self {
            FormType::Plus => 1,
            FormType::Minus => -1,
        }
    }
}

impl fmt::Display for FormType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FormType::Plus => "+",
            FormType::Minus => "-",
        })
    }
}

/// `V = F_q^{2m}` together with its field.
#[derive(Clone, Debug)]
pub struct Space {
    m: usize,
    field: FieldContext,
}

impl Space {
    pub fn new(m: usize, field: FieldContext) -> Result<Self> {
        if m == 0 || 2 * m * field.degree() as usize > 64 {
            return Err(Error::SpaceTooLarge { m, f: field.degree() });
        }
        Ok(Space { m, field })
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn dim(&self) -> usize {
        2 * self.m
    }

    #[inline]
    pub fn field(&self) -> &FieldContext {
        &self.field
    }

    #[inline]
    pub fn field_degree(&self) -> u32 {
        self.field.degree()
    }

    #[inline]
    pub fn q(&self) -> u64 {
        self.field.order() as u64
    }

    /// `q^{2m}`.
    pub fn vector_count(&self) -> u128 {
        1u128 << (self.dim() as u32 * self.field_degree())
    }

    pub fn check_bound(&self, what: &str, bound: u128) -> Result<u64> {
        let needed = self.vector_count();
        if needed > bound {
            return Err(Error::BoundExceeded { what: what.to_string(), needed, bound });
        }
        Ok(needed as u64)
    }

    /// Every vector of `V` in canonical (packed integer) order.
    pub fn vectors(&self, bound: u128) -> Result<impl Iterator<Item = Vector>> {
        let n = self.check_bound("vector enumeration", bound)?;
        Ok((0..n).map(Vector))
    }

    #[inline]
    pub fn coord(&self, v: Vector, i: usize) -> FieldElement {
        let f = self.field_degree();
        FieldElement(((v.0 >> (i as u32 * f)) & self.field.mask() as u64) as u8)
    }

    pub fn coords(&self, v: Vector) -> Vec<FieldElement> {
        (0..self.dim()).map(|i| self.coord(v, i)).collect()
    }

    pub fn vector(&self, coords: &[FieldElement]) -> Result<Vector> {
        if coords.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: coords.len() });
        }
        let f = self.field_degree();
        let mut bits = 0u64;
        for (i, &c) in coords.iter().enumerate() {
            let c = self.field.element(c.0)?;
            bits |= (c.0 as u64) << (i as u32 * f);
        }
        Ok(Vector(bits))
    }

    #[inline]
    pub fn basis_vector(&self, i: usize) -> Vector {
        Vector(1 << (i as u32 * self.field_degree()))
    }

    #[inline]
    pub fn scale(&self, lambda: FieldElement, v: Vector) -> Vector {
        Vector(linalg::scale(self, lambda, v.0))
    }

    /// The standard alternating form `(u, v)`.
    #[inline]
    pub fn bilinear(&self, u: Vector, v: Vector) -> FieldElement {
        let mut acc = FieldElement::ZERO;
        for i in 0..self.m {
            acc += self.field.mul(self.coord(u, 2 * i), self.coord(v, 2 * i + 1));
            acc += self.field.mul(self.coord(u, 2 * i + 1), self.coord(v, 2 * i));
        }
        acc
    }

    #[inline]
    pub fn functional_eval(&self, l: LinearFunctional, v: Vector) -> FieldElement {
        let mut acc = FieldElement::ZERO;
        for i in 0..self.dim() {
            acc += self.field.mul(self.coord(Vector(l.0), i), self.coord(v, i));
        }
        acc
    }

    /// `Q+(v) = sum v_{2i} v_{2i+1}`.
    #[inline]
    pub fn q_plus(&self, v: Vector) -> FieldElement {
        let mut acc = FieldElement::ZERO;
        for i in 0..self.m {
            acc += self.field.mul(self.coord(v, 2 * i), self.coord(v, 2 * i + 1));
        }
        acc
    }

    /// `(Q+ + l^2)(v)`.
    #[inline]
    pub fn q_functional(&self, l: LinearFunctional, v: Vector) -> FieldElement {
        self.q_plus(v) + self.field.square(self.functional_eval(l, v))
    }

    /// Type of `Q+ + l^2`, read off the standard hyperbolic basis.
    pub fn functional_form_type(&self, l: LinearFunctional) -> FormType {
        let mut arf = FieldElement::ZERO;
        for i in 0..self.m {
            let a = self.coord(Vector(l.0), 2 * i);
            let b = self.coord(Vector(l.0), 2 * i + 1);
            arf += self.field.square(self.field.mul(a, b));
        }
        if self.field.absolute_trace(arf) == 0 {
            FormType::Plus
        } else {
            FormType::Minus
        }
    }

    /// Whether `u` lies in the line spanned by the nonzero vector `v`.
    pub fn in_span_of(&self, u: Vector, v: Vector) -> bool {
        debug_assert!(!v.is_zero());
        let k = (0..self.dim()).find(|&i| !self.coord(v, i).is_zero()).expect("v is nonzero");
        let c = self.field.div(self.coord(u, k), self.coord(v, k)).expect("pivot is nonzero");
        self.scale(c, v) == u
    }

    /// Canonical representative of the line through `v`: first nonzero coordinate equal to 1.
    pub fn normalize_line(&self, v: Vector) -> Vector {
        match (0..self.dim()).find(|&i| !self.coord(v, i).is_zero()) {
            None => v,
            Some(k) => {
                let inv = self.field.inv(self.coord(v, k)).expect("nonzero");
                self.scale(inv, v)
            }
        }
    }

    pub fn format_vector(&self, v: Vector) -> String {
        let parts: Vec<String> = self.coords(v).iter().map(|c| c.0.to_string()).collect();
        format!("({})", parts.join(","))
    }
}

/// Gram matrix of an alternating form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlternatingForm {
    dim: usize,
    gram: Vec<FieldElement>,
}

impl AlternatingForm {
    pub fn standard(space: &Space) -> Self {
        let n = space.dim();
        let mut gram = vec![FieldElement::ZERO; n * n];
        for i in 0..space.m() {
            gram[2 * i * n + 2 * i + 1] = FieldElement::ONE;
            gram[(2 * i + 1) * n + 2 * i] = FieldElement::ONE;
        }
        AlternatingForm { dim: n, gram }
    }

    pub fn from_gram(dim: usize, gram: Vec<FieldElement>) -> Result<Self> {
        if gram.len() != dim * dim {
            return Err(Error::DimensionMismatch { expected: dim * dim, got: gram.len() });
        }
        for i in 0..dim {
            // Alternating in characteristic 2: zero diagonal, symmetric.
            if !gram[i * dim + i].is_zero() || (0..dim).any(|j| gram[i * dim + j] != gram[j * dim + i]) {
                return Err(Error::DegeneratePolarization);
            }
        }
        Ok(AlternatingForm { dim, gram })
    }

    pub fn gram(&self, i: usize, j: usize) -> FieldElement {
        self.gram[i * self.dim + j]
    }

    pub fn eval(&self, space: &Space, u: Vector, v: Vector) -> FieldElement {
        let field = space.field();
        let mut acc = FieldElement::ZERO;
        for i in 0..self.dim {
            let ui = space.coord(u, i);
            if ui.is_zero() {
                continue;
            }
            for j in 0..self.dim {
                let g = self.gram(i, j);
                if !g.is_zero() {
                    acc += field.mul(field.mul(ui, g), space.coord(v, j));
                }
            }
        }
        acc
    }

    pub fn is_nondegenerate(&self, space: &Space) -> Result<bool> {
        if self.dim != space.dim() {
            return Err(Error::DimensionMismatch { expected: space.dim(), got: self.dim });
        }
        let rows: Vec<u64> = (0..self.dim)
            .map(|i| space.vector(&self.gram[i * self.dim..(i + 1) * self.dim]).map(|v| v.0))
            .collect::<Result<_>>()?;
        Ok(linalg::rank(space, &rows) == self.dim)
    }
}

/// `Q(x) = sum_{i <= j} C_ij x_i x_j`, stored as the full `n x n` matrix with
/// zeros below the diagonal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticForm {
    dim: usize,
    coeffs: Vec<FieldElement>,
}

impl QuadraticForm {
    pub fn from_upper(dim: usize, coeffs: Vec<FieldElement>) -> Result<Self> {
        if coeffs.len() != dim * dim {
            return Err(Error::DimensionMismatch { expected: dim * dim, got: coeffs.len() });
        }
        let mut coeffs = coeffs;
        for i in 0..dim {
            for j in 0..i {
                coeffs[i * dim + j] = FieldElement::ZERO;
            }
        }
        Ok(QuadraticForm { dim, coeffs })
    }

    /// `Q+ = x_1 y_1 + ... + x_m y_m` in hyperbolic coordinates.
    pub fn standard_plus(space: &Space) -> Self {
        let n = space.dim();
        let mut coeffs = vec![FieldElement::ZERO; n * n];
        for i in 0..space.m() {
            coeffs[2 * i * n + 2 * i + 1] = FieldElement::ONE;
        }
        QuadraticForm { dim: n, coeffs }
    }

    /// `Q+ + l^2`.
    pub fn from_functional(space: &Space, l: LinearFunctional) -> Self {
        let mut q = Self::standard_plus(space);
        let n = q.dim;
        for i in 0..n {
            q.coeffs[i * n + i] = space.field().square(space.coord(Vector(l.0), i));
        }
        q
    }

    /// Inverse of [`QuadraticForm::from_functional`].
    pub fn to_functional(&self, space: &Space) -> Result<LinearFunctional> {
        if self.polarization().gram != AlternatingForm::standard(space).gram {
            return Err(Error::NonStandardPolarization);
        }
        let diag: Vec<FieldElement> =
            (0..self.dim).map(|i| space.field().sqrt(self.coeff(i, i))).collect();
        Ok(LinearFunctional(space.vector(&diag)?.0))
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn coeff(&self, i: usize, j: usize) -> FieldElement {
        self.coeffs[i * self.dim + j]
    }

    pub fn eval(&self, space: &Space, v: Vector) -> Result<FieldElement> {
        if self.dim != space.dim() {
            return Err(Error::DimensionMismatch { expected: space.dim(), got: self.dim });
        }
        let field = space.field();
        let mut acc = FieldElement::ZERO;
        for i in 0..self.dim {
            let vi = space.coord(v, i);
            if vi.is_zero() {
                continue;
            }
            for j in i..self.dim {
                let c = self.coeff(i, j);
                if !c.is_zero() {
                    acc += field.mul(field.mul(c, vi), space.coord(v, j));
                }
            }
        }
        Ok(acc)
    }

    /// `C + C^T`.
    pub fn polarization(&self) -> AlternatingForm {
        let n = self.dim;
        let mut gram = vec![FieldElement::ZERO; n * n];
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    gram[i * n + j] = self.coeff(i.min(j), i.max(j));
                }
            }
        }
        AlternatingForm { dim: n, gram }
    }

    /// Rebuild a form from its values on the basis vectors and their pairwise sums.
    pub fn from_values(space: &Space, mut value: impl FnMut(Vector) -> FieldElement) -> Self {
        let n = space.dim();
        let diag: Vec<FieldElement> = (0..n).map(|i| value(space.basis_vector(i))).collect();
        let mut coeffs = vec![FieldElement::ZERO; n * n];
        for i in 0..n {
            coeffs[i * n + i] = diag[i];
            for j in i + 1..n {
                coeffs[i * n + j] = value(space.basis_vector(i) + space.basis_vector(j)) + diag[i] + diag[j];
            }
        }
        QuadraticForm { dim: n, coeffs }
    }

    /// `x -> Q(x g)`.
    pub fn compose(&self, space: &Space, g: &GroupElement) -> Result<Self> {
        let mut err = None;
        let out = QuadraticForm::from_values(space, |x| {
            self.eval(space, g.apply(space, x)).unwrap_or_else(|e| {
                err = Some(e);
                FieldElement::ZERO
            })
        });
        match err {
            Some(e) => Err(e),
            None => Ok(out),
        }
    }
}

/// Evaluates `Q(v)`.
pub fn quad_eval(space: &Space, form: &QuadraticForm, v: Vector) -> Result<FieldElement> {
    form.eval(space, v)
}

/// `(Q+, Q-)`, with `Q- = Q+ + x_1^2 + delta x_2^2` and `delta` the smallest
/// element of absolute trace 1.
pub fn standard_forms(space: &Space) -> (QuadraticForm, QuadraticForm) {
    let plus = QuadraticForm::standard_plus(space);
    let mut minus = plus.clone();
    let n = space.dim();
    minus.coeffs[0] = FieldElement::ONE;
    minus.coeffs[n + 1] = space.field().smallest_trace_one();
    (plus, minus)
}

/// The functional `l` with `Q- = Q+ + l^2`.
pub fn minus_functional(space: &Space) -> LinearFunctional {
    let field = space.field();
    let mut coords = vec![FieldElement::ZERO; space.dim()];
    coords[0] = FieldElement::ONE;
    coords[1] = field.sqrt(field.smallest_trace_one());
    LinearFunctional(space.vector(&coords).expect("valid coordinates").0)
}

/// Type of a quadratic form with non-degenerate polarization, from the Arf
/// invariant on a hyperbolic basis of its polarization.
pub fn classify_type(space: &Space, form: &QuadraticForm) -> Result<FormType> {
    if form.dim() != space.dim() {
        return Err(Error::DimensionMismatch { expected: space.dim(), got: form.dim() });
    }
    let polar = form.polarization();
    if !polar.is_nondegenerate(space)? {
        return Err(Error::DegeneratePolarization);
    }
    let basis = complete_hyperbolic_basis_for(space, &polar, &[])?;
    let field = space.field();
    let mut arf = FieldElement::ZERO;
    for pair in basis.chunks(2) {
        arf += field.mul(form.eval(space, pair[0])?, form.eval(space, pair[1])?);
    }
    Ok(if field.absolute_trace(arf) == 0 { FormType::Plus } else { FormType::Minus })
}

/// `q^{2m-1} + eps (q^m - q^{m-1})`, the number of zeros (including 0) of a
/// non-degenerate form of type `eps`.
pub fn zero_count_formula(m: usize, q: u64, ty: FormType) -> i128 {
    let q = q as i128;
    let qm = q.pow(m as u32);
    q.pow(2 * m as u32 - 1) + ty.sign() as i128 * (qm - qm / q)
}

/// Type of a form by brute-force counting its zeros over `V`.
pub fn classify_type_by_zero_count(space: &Space, form: &QuadraticForm, bound: u128) -> Result<FormType> {
    if !form.polarization().is_nondegenerate(space)? {
        return Err(Error::DegeneratePolarization);
    }
    let mut zeros = 0i128;
    for v in space.vectors(bound)? {
        if form.eval(space, v)?.is_zero() {
            zeros += 1;
        }
    }
    FormType::BOTH
        .into_iter()
        .find(|&ty| zero_count_formula(space.m(), space.q(), ty) == zeros)
        .ok_or(Error::DegeneratePolarization)
}

/// All `q^{2m}` forms `Q+ + l^2`, ordered by the packed functional `l`.
pub fn forms_with_standard_polarization(space: &Space, bound: u128) -> Result<Vec<QuadraticForm>> {
    let n = space.check_bound("form enumeration", bound)?;
    Ok((0..n).map(|l| QuadraticForm::from_functional(space, LinearFunctional(l))).collect())
}

/// Hyperbolic basis for the standard form, extending `partial`.
///
/// `partial` is a prefix of the output `(e_1, f_1, e_2, f_2, ...)`: its Gram
/// matrix must follow the standard pattern, and an odd-length prefix ends with
/// an `e_i` that still needs a partner.
pub fn complete_hyperbolic_basis(space: &Space, partial: &[Vector]) -> Result<Vec<Vector>> {
    complete_hyperbolic_basis_for(space, &AlternatingForm::standard(space), partial)
}

pub fn complete_hyperbolic_basis_for(space: &Space, form: &AlternatingForm, partial: &[Vector]) -> Result<Vec<Vector>> {
    let n = space.dim();
    if partial.len() > n {
        return Err(Error::NotExtendable(format!("{} vectors in a space of dimension {n}", partial.len())));
    }
    for (i, &a) in partial.iter().enumerate() {
        if a.is_zero() {
            return Err(Error::NotExtendable(format!("vector {i} is zero")));
        }
        for (j, &b) in partial.iter().enumerate().skip(i + 1) {
            let want = if i % 2 == 0 && j == i + 1 { FieldElement::ONE } else { FieldElement::ZERO };
            if form.eval(space, a, b) != want {
                return Err(Error::NotExtendable(format!(
                    "pairing of vectors {i} and {j} is {}, expected {want}",
                    form.eval(space, a, b)
                )));
            }
        }
    }

    let field = space.field();
    let mut basis: Vec<Vector> = partial.to_vec();
    let project = |basis: &[Vector], b: Vector| -> Vector {
        let mut out = b;
        for pair in basis.chunks_exact(2) {
            let (e, f) = (pair[0], pair[1]);
            out += space.scale(form.eval(space, b, f), e);
            out += space.scale(form.eval(space, b, e), f);
        }
        out
    };
    let candidates = |basis: &[Vector]| -> Vec<Vector> {
        let paired = basis.len() & !1;
        (0..n).map(|i| project(&basis[..paired], space.basis_vector(i))).collect()
    };

    while basis.len() < n {
        let e = if basis.len() % 2 == 1 {
            *basis.last().unwrap()
        } else {
            let e = candidates(&basis)
                .into_iter()
                .find(|c| !c.is_zero())
                .ok_or(Error::DegeneratePolarization)?;
            basis.push(e);
            e
        };
        let (y, c) = candidates(&basis)
            .into_iter()
            .map(|y| (y, form.eval(space, e, y)))
            .find(|(_, c)| !c.is_zero())
            .ok_or(Error::DegeneratePolarization)?;
        basis.push(space.scale(field.inv(c)?, y));
    }
    Ok(basis)
}

/// An element `g` of `Sp(V)` with `v g = v` and `u g = u2`, built by completing
/// `(v, u)` and `(v, u2)` to hyperbolic bases and mapping one onto the other.
pub fn witt_extend(space: &Space, v: Vector, u: Vector, u2: Vector) -> Result<GroupElement> {
    if v.is_zero() {
        return Err(Error::WittPrecondition("v is zero".into()));
    }
    for (name, w) in [("u", u), ("u'", u2)] {
        if space.in_span_of(w, v) {
            return Err(Error::WittPrecondition(format!("{name} lies in <v>")));
        }
    }
    let c = space.bilinear(v, u);
    if c != space.bilinear(v, u2) {
        return Err(Error::WittPrecondition("(v,u) differs from (v,u')".into()));
    }
    let field = space.field();
    let frame = |w: Vector| -> Result<Vec<Vector>> {
        if c.is_zero() {
            let f1 = isotropic_partner(space, v, w)?;
            complete_hyperbolic_basis(space, &[v, f1, w])
        } else {
            complete_hyperbolic_basis(space, &[v, space.scale(field.inv(c)?, w)])
        }
    };
    let from: Vec<u64> = frame(u)?.into_iter().map(|b| b.0).collect();
    let to: Vec<u64> = frame(u2)?.into_iter().map(|b| b.0).collect();
    let g = linalg::mat_mul(space, &linalg::inverse(space, &from)?, &to);
    Ok(GroupElement::from_rows(g))
}

/// Some `x` with `(v, x) = 1` and `(w, x) = 0`, for independent `v, w`.
fn isotropic_partner(space: &Space, v: Vector, w: Vector) -> Result<Vector> {
    let field = space.field();
    let basis = || (0..space.dim()).map(|i| space.basis_vector(i));
    let a = basis()
        .find(|&b| !space.bilinear(v, b).is_zero())
        .ok_or(Error::DegeneratePolarization)?;
    let a = space.scale(field.inv(space.bilinear(v, a))?, a);
    // y ranges over ker (v, .); (w, .) is nonzero there since w is not a multiple of v.
    let y = basis()
        .map(|b| b + space.scale(space.bilinear(v, b), a))
        .find(|&y| !space.bilinear(w, y).is_zero())
        .ok_or_else(|| Error::WittPrecondition("u is proportional to v".into()))?;
    let t = field.div(space.bilinear(w, a), space.bilinear(w, y))?;
    Ok(a + space.scale(t, y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::is_isometry;

    fn space(m: usize, f: u32) -> Space {
        Space::new(m, FieldContext::new(f).unwrap()).unwrap()
    }

    fn vec_of(space: &Space, c: &[u8]) -> Vector {
        space.vector(&c.iter().map(|&b| FieldElement(b)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn space_size_limits() {
        assert!(Space::new(0, FieldContext::new(1).unwrap()).is_err());
        assert!(Space::new(4, FieldContext::new(8).unwrap()).is_ok());
        assert!(Space::new(5, FieldContext::new(8).unwrap()).is_err());
    }

    #[test]
    fn evaluations_at_q2() {
        let s = space(1, 1);
        let (plus, minus) = standard_forms(&s);
        assert_eq!(quad_eval(&s, &plus, Vector::ZERO).unwrap(), FieldElement::ZERO);
        assert_eq!(quad_eval(&s, &plus, vec_of(&s, &[1, 1])).unwrap(), FieldElement::ONE);
        for c in [[1, 1], [1, 0], [0, 1]] {
            assert_eq!(quad_eval(&s, &minus, vec_of(&s, &c)).unwrap(), FieldElement::ONE);
        }
        // Q- = x^2 + xy + y^2
        assert_eq!(minus.coeff(0, 0), FieldElement::ONE);
        assert_eq!(minus.coeff(0, 1), FieldElement::ONE);
        assert_eq!(minus.coeff(1, 1), FieldElement::ONE);
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let s1 = space(1, 1);
        let s2 = space(2, 1);
        let (plus, _) = standard_forms(&s2);
        assert!(matches!(quad_eval(&s1, &plus, Vector::ZERO), Err(Error::DimensionMismatch { .. })));
        assert!(s1.vector(&[FieldElement::ONE]).is_err());
    }

    #[test]
    fn standard_forms_polarize_to_the_standard_form_and_have_expected_types() {
        for (m, f) in [(1, 1), (1, 3), (2, 1), (2, 2), (3, 1), (2, 3)] {
            let s = space(m, f);
            let (plus, minus) = standard_forms(&s);
            let std = AlternatingForm::standard(&s);
            assert_eq!(plus.polarization(), std);
            assert_eq!(minus.polarization(), std);
            assert_eq!(classify_type(&s, &plus).unwrap(), FormType::Plus);
            assert_eq!(classify_type(&s, &minus).unwrap(), FormType::Minus);
            assert_eq!(QuadraticForm::from_functional(&s, minus_functional(&s)), minus);
        }
    }

    #[test]
    fn zero_counts_by_brute_force() {
        let s = space(2, 1);
        let (plus, _) = standard_forms(&s);
        let zeros = s.vectors(u128::MAX).unwrap().filter(|&v| plus.eval(&s, v).unwrap().is_zero()).count();
        assert_eq!(zeros, 10);
        let s = space(1, 1);
        let (_, minus) = standard_forms(&s);
        let zeros = s.vectors(u128::MAX).unwrap().filter(|&v| minus.eval(&s, v).unwrap().is_zero()).count();
        assert_eq!(zeros, 1);
        assert_eq!(classify_type_by_zero_count(&s, &minus, u128::MAX).unwrap(), FormType::Minus);
    }

    #[test]
    fn zero_count_formula_validated_at_m1() {
        // Exhaustive check of the formula on every form with standard polarization, m = 1.
        for f in 1..=4 {
            let s = space(1, f);
            for form in forms_with_standard_polarization(&s, u128::MAX).unwrap() {
                let zeros = s.vectors(u128::MAX).unwrap().filter(|&v| form.eval(&s, v).unwrap().is_zero()).count();
                let ty = classify_type(&s, &form).unwrap();
                assert_eq!(zeros as i128, zero_count_formula(1, s.q(), ty));
            }
        }
    }

    #[test]
    fn degenerate_polarization_rejected() {
        let s = space(1, 1);
        let form = QuadraticForm::from_upper(2, vec![FieldElement::ONE; 4]).unwrap();
        assert!(classify_type(&s, &form).is_ok());
        let degenerate = QuadraticForm::from_upper(2, vec![FieldElement::ONE, FieldElement::ZERO, FieldElement::ZERO, FieldElement::ONE]).unwrap();
        assert!(matches!(classify_type(&s, &degenerate), Err(Error::DegeneratePolarization)));
    }

    #[test]
    fn form_counts_by_type() {
        for (m, f, plus, minus) in [(1, 1, 3, 1), (2, 1, 10, 6), (2, 2, 136, 120)] {
            let s = space(m, f);
            let forms = forms_with_standard_polarization(&s, DEFAULT_SPACE_BOUND).unwrap();
            assert_eq!(forms.len() as u128, s.vector_count());
            let n_plus = forms.iter().filter(|q| classify_type(&s, q).unwrap() == FormType::Plus).count();
            assert_eq!((n_plus, forms.len() - n_plus), (plus, minus));
            let distinct: std::collections::HashSet<_> = forms.iter().collect();
            assert_eq!(distinct.len(), forms.len());
        }
        assert!(matches!(
            forms_with_standard_polarization(&space(2, 4), 1 << 12),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn functional_round_trip_and_fast_type() {
        let s = space(2, 2);
        for l in 0..s.vector_count() as u64 {
            let form = QuadraticForm::from_functional(&s, LinearFunctional(l));
            assert_eq!(form.to_functional(&s).unwrap(), LinearFunctional(l));
            assert_eq!(classify_type(&s, &form).unwrap(), s.functional_form_type(LinearFunctional(l)));
        }
    }

    #[test]
    fn unconstrained_basis_is_standard() {
        for (m, f) in [(1, 1), (2, 2), (3, 1)] {
            let s = space(m, f);
            let basis = complete_hyperbolic_basis(&s, &[]).unwrap();
            let std: Vec<Vector> = (0..s.dim()).map(|i| s.basis_vector(i)).collect();
            assert_eq!(basis, std);
        }
    }

    fn assert_hyperbolic(s: &Space, basis: &[Vector]) {
        assert_eq!(basis.len(), s.dim());
        for (i, &a) in basis.iter().enumerate() {
            for (j, &b) in basis.iter().enumerate() {
                let want = if i / 2 == j / 2 && i != j { FieldElement::ONE } else { FieldElement::ZERO };
                assert_eq!(s.bilinear(a, b), want, "pair ({i},{j})");
            }
        }
    }

    #[test]
    fn completes_partial_prefix() {
        let s = space(1, 1);
        let e = vec_of(&s, &[1, 1]);
        let basis = complete_hyperbolic_basis(&s, &[e]).unwrap();
        assert_eq!(basis[0], e);
        assert_hyperbolic(&s, &basis);

        let s = space(3, 2);
        let e1 = vec_of(&s, &[1, 2, 3, 0, 1, 1]);
        let basis = complete_hyperbolic_basis(&s, &[e1]).unwrap();
        assert_hyperbolic(&s, &basis);
    }

    #[test]
    fn rejects_inconsistent_prefix() {
        let s = space(2, 1);
        let e1 = s.basis_vector(0);
        let f1 = s.basis_vector(1);
        assert!(matches!(complete_hyperbolic_basis(&s, &[e1, e1]), Err(Error::NotExtendable(_))));
        // f1 is not orthogonal to e1, so it cannot be e2.
        assert!(matches!(complete_hyperbolic_basis(&s, &[e1, s.basis_vector(3), f1]), Err(Error::NotExtendable(_))));
        assert!(matches!(complete_hyperbolic_basis(&s, &[Vector::ZERO]), Err(Error::NotExtendable(_))));
    }

    #[test]
    fn witt_identity_case() {
        let s = space(2, 1);
        let v = s.basis_vector(0);
        let u = s.basis_vector(1);
        let g = witt_extend(&s, v, u, u).unwrap();
        assert_eq!(g.apply(&s, v), v);
        assert_eq!(g.apply(&s, u), u);
        assert!(is_isometry(&s, &g));
    }

    #[test]
    fn witt_isotropic_case() {
        let s = space(2, 1);
        let v = s.basis_vector(0);
        let u = s.basis_vector(2);
        let u2 = s.basis_vector(2) + s.basis_vector(3);
        let g = witt_extend(&s, v, u, u2).unwrap();
        assert_eq!(g.apply(&s, v), v);
        assert_eq!(g.apply(&s, u), u2);
        assert!(is_isometry(&s, &g));
    }

    #[test]
    fn witt_preconditions() {
        let s = space(2, 1);
        let v = s.basis_vector(0);
        assert!(witt_extend(&s, v, v, s.basis_vector(2)).is_err());
        assert!(witt_extend(&s, v, s.basis_vector(1), s.basis_vector(2)).is_err());
        assert!(witt_extend(&s, Vector::ZERO, s.basis_vector(1), s.basis_vector(1)).is_err());
    }
}
