//! Dense linear algebra over GF(2^f) on bit-packed row vectors.
//!
//! A vector of length `n` is a `u64` holding `n` coordinates of `f` bits
//! each, coordinate `i` in bits `[i*f, (i+1)*f)`. A matrix is a slice of
//! `n` such rows and acts on row vectors from the right.

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::gf::FieldElement;
use crate::space::{Space, Vector};

pub type Rows = SmallVec<[u64; 8]>;

pub fn identity(space: &Space) -> Rows {
    (0..space.dim()).map(|i| space.basis_vector(i).0).collect()
}

/// `lambda * v`.
pub fn scale(space: &Space, lambda: FieldElement, v: u64) -> u64 {
    if lambda.is_zero() {
        return 0;
    }
    if lambda == FieldElement::ONE {
        return v;
    }
    let field = space.field();
    let f = space.field_degree();
    let mut out = 0u64;
    for i in 0..space.dim() {
        let c = space.coord(Vector(v), i);
        out |= (field.mul(lambda, c).0 as u64) << (i as u32 * f);
    }
    out
}

/// `x * rows`, i.e. the sum of `x_i * rows[i]`.
pub fn apply(space: &Space, rows: &[u64], x: u64) -> u64 {
    let mut out = 0;
    for (i, &r) in rows.iter().enumerate() {
        out ^= scale(space, space.coord(Vector(x), i), r);
    }
    out
}

pub fn mat_mul(space: &Space, a: &[u64], b: &[u64]) -> Rows {
    a.iter().map(|&r| apply(space, b, r)).collect()
}

pub fn rank(space: &Space, rows: &[u64]) -> usize {
    let mut work: Vec<u64> = rows.to_vec();
    let field = space.field();
    let mut rank = 0;
    for col in 0..space.dim() {
        let Some(pivot) = (rank..work.len()).find(|&r| !space.coord(Vector(work[r]), col).is_zero()) else {
            continue;
        };
        work.swap(rank, pivot);
        let inv = field.inv(space.coord(Vector(work[rank]), col)).expect("pivot is nonzero");
        work[rank] = scale(space, inv, work[rank]);
        let pivot_row = work[rank];
        for (r, row) in work.iter_mut().enumerate() {
            if r != rank {
                let c = space.coord(Vector(*row), col);
                *row ^= scale(space, c, pivot_row);
            }
        }
        rank += 1;
    }
    rank
}

/// Gauss-Jordan inverse of a square matrix.
pub fn inverse(space: &Space, rows: &[u64]) -> Result<Rows> {
    let n = space.dim();
    if rows.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: rows.len() });
    }
    let field = space.field();
    let mut a: Vec<u64> = rows.to_vec();
    let mut inv: Vec<u64> = identity(space).to_vec();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !space.coord(Vector(a[r]), col).is_zero())
            .ok_or(Error::SingularMatrix)?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = field.inv(space.coord(Vector(a[col]), col))?;
        a[col] = scale(space, p, a[col]);
        inv[col] = scale(space, p, inv[col]);
        let (ar, ir) = (a[col], inv[col]);
        for r in 0..n {
            if r != col {
                let c = space.coord(Vector(a[r]), col);
                if !c.is_zero() {
                    a[r] ^= scale(space, c, ar);
                    inv[r] ^= scale(space, c, ir);
                }
            }
        }
    }
    Ok(inv.into_iter().collect())
}

/// Precomputed multiples `c * row_i` of every row, so that `x * M` costs one
/// table lookup and one XOR per coordinate.
#[derive(Clone, Debug)]
pub struct ActionTable {
    dim: usize,
    degree: u32,
    mask: u64,
    q: usize,
    table: Vec<u64>,
}

impl ActionTable {
    pub fn new(space: &Space, rows: &[u64]) -> Self {
        let q = space.field().order();
        let mut table = vec![0u64; rows.len() * q];
        for (i, &row) in rows.iter().enumerate() {
            let base: Vec<u64> = space.field().basis().map(|b| scale(space, b, row)).collect();
            let block = &mut table[i * q..(i + 1) * q];
            for c in 1..q {
                block[c] = block[c & (c - 1)] ^ base[c.trailing_zeros() as usize];
            }
        }
        ActionTable {
            dim: rows.len(),
            degree: space.field_degree(),
            mask: space.field().mask() as u64,
            q,
            table,
        }
    }

    #[inline]
    pub fn apply(&self, x: u64) -> u64 {
        let mut out = 0;
        let mut rest = x;
        for i in 0..self.dim {
            let c = (rest & self.mask) as usize;
            out ^= self.table[i * self.q + c];
            rest >>= self.degree;
        }
        out
    }

    /// Row-wise product `rows * M` written into `out`.
    #[inline]
    pub fn right_multiply(&self, rows: &[u64], out: &mut [u64]) {
        for (o, &r) in out.iter_mut().zip(rows) {
            *o = self.apply(r);
        }
    }
}
