//! Arithmetic in GF(2^f) for `1 <= f <= 8`.
//!
//! Elements are polynomials over GF(2) of degree `< f`, stored as bitmasks.
//! Addition is XOR; multiplication goes through log/antilog tables built from
//! the modulus at construction time. The carry-less reference multiplier
//! [`FieldContext::mul_reference`] is kept around for building the tables and
//! for cross-checking them.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, AddAssign};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_DEGREE: u32 = 8;

/// An element of GF(2^f), interpreted relative to a [`FieldContext`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FieldElement(pub u8);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    #[inline]
    pub fn bits(self) -> u8 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl Add for FieldElement {
    type Output = FieldElement;
    #[inline]
    #[allow(clippy::suspicious_arithmetic_impl)] // characteristic 2
    fn add(self, rhs: FieldElement) -> FieldElement {
        FieldElement(self.0 ^ rhs.0)
    }
}

impl AddAssign for FieldElement {
    #[inline]
    #[allow(clippy::suspicious_op_assign_impl)]
    fn add_assign(&mut self, rhs: FieldElement) {
        self.0 ^= rhs.0;
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#x}", self.0)
    }
}

/// The field GF(2^f) with a fixed irreducible modulus.
#[derive(Clone, Debug)]
pub struct FieldContext {
    degree: u32,
    modulus: u16,
    generator: FieldElement,
    // exp has 2(q-1) entries so that exp[log a + log b] never wraps.
    exp: Vec<u8>,
    log: Vec<u16>,
    sqrt: Vec<u8>,
    trace: Vec<u8>,
}

impl FieldContext {
    /// GF(2^f) modulo the smallest (as a bitmask) irreducible polynomial of
    /// degree `f`.
    pub fn new(degree: u32) -> Result<Self> {
        check_degree(degree)?;
        let modulus = (1u16 << degree..1u16 << (degree + 1))
            .find(|&p| is_irreducible(p))
            .expect("an irreducible polynomial exists in every degree");
        Self::with_modulus(degree, modulus)
    }

    pub fn with_modulus(degree: u32, modulus: u16) -> Result<Self> {
        check_degree(degree)?;
        if poly_degree(modulus) != Some(degree) || !is_irreducible(modulus) {
            return Err(Error::NotIrreducible { degree, modulus });
        }
        let q = 1usize << degree;
        let order = q - 1;

        let generator = (1..q as u16)
            .map(|g| FieldElement(g as u8))
            .find(|&g| multiplicative_order(g, degree, modulus) == order)
            .expect("the multiplicative group of a finite field is cyclic");

        let mut exp = vec![0u8; 2 * order];
        let mut log = vec![0u16; q];
        let mut acc = 1u8;
        for (i, slot) in exp.iter_mut().take(order).enumerate() {
            *slot = acc;
            log[acc as usize] = i as u16;
            acc = clmul_reduce(acc, generator.0, degree, modulus);
        }
        for i in order..2 * order {
            exp[i] = exp[i - order];
        }

        let mut ctx = FieldContext {
            degree,
            modulus,
            generator,
            exp,
            log,
            sqrt: vec![0; q],
            trace: vec![0; q],
        };
        for bits in 0..q {
            let a = FieldElement(bits as u8);
            let sq = ctx.mul(a, a);
            ctx.sqrt[sq.0 as usize] = a.0;
            let mut t = FieldElement::ZERO;
            let mut pow = a;
            for _ in 0..degree {
                t += pow;
                pow = ctx.mul(pow, pow);
            }
            debug_assert!(t.0 <= 1, "trace must land in the prime field");
            ctx.trace[a.0 as usize] = t.0;
        }
        Ok(ctx)
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Bitmask of the `f + 1` modulus coefficients.
    #[inline]
    pub fn modulus(&self) -> u16 {
        self.modulus
    }

    #[inline]
    pub fn order(&self) -> usize {
        1 << self.degree
    }

    /// The smallest generator of the multiplicative group.
    #[inline]
    pub fn generator(&self) -> FieldElement {
        self.generator
    }

    #[inline]
    pub fn mask(&self) -> u8 {
        ((1u16 << self.degree) - 1) as u8
    }

    pub fn element(&self, bits: u8) -> Result<FieldElement> {
        if (bits as usize) < self.order() {
            Ok(FieldElement(bits))
        } else {
            Err(Error::ElementOutOfRange { bits, degree: self.degree })
        }
    }

    /// All field elements in bitmask order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + Clone + '_ {
        (0..self.order()).map(|b| FieldElement(b as u8))
    }

    /// The polynomial basis `1, t, t^2, ..., t^(f-1)` over GF(2).
    pub fn basis(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.degree).map(|i| FieldElement(1 << i))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement::ZERO;
        }
        let idx = self.log[a.0 as usize] as usize + self.log[b.0 as usize] as usize;
        FieldElement(self.exp[idx])
    }

    /// Polynomial product reduced by the modulus, without tables.
    pub fn mul_reference(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(clmul_reduce(a.0, b.0, self.degree, self.modulus))
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let order = self.order() - 1;
        let l = self.log[a.0 as usize] as usize;
        Ok(FieldElement(self.exp[(order - l) % order]))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Frobenius `a -> a^2`.
    #[inline]
    pub fn square(&self, a: FieldElement) -> FieldElement {
        self.mul(a, a)
    }

    /// Inverse of the Frobenius; every element of GF(2^f) has a unique square root.
    #[inline]
    pub fn sqrt(&self, a: FieldElement) -> FieldElement {
        FieldElement(self.sqrt[a.0 as usize])
    }

    /// Absolute trace `a + a^2 + ... + a^(2^(f-1))`, as a bit.
    #[inline]
    pub fn absolute_trace(&self, a: FieldElement) -> u8 {
        self.trace[a.0 as usize]
    }

    /// Smallest element of absolute trace 1.
    pub fn smallest_trace_one(&self) -> FieldElement {
        self.elements()
            .find(|&a| self.absolute_trace(a) == 1)
            .expect("the trace map is onto GF(2)")
    }

    /// `{a + a^2 : a in F_q}`.
    pub fn artin_schreier_image(&self) -> BTreeSet<FieldElement> {
        self.elements().map(|a| a + self.square(a)).collect()
    }
}

fn check_degree(degree: u32) -> Result<()> {
    if (1..=MAX_DEGREE).contains(&degree) {
        Ok(())
    } else {
        Err(Error::UnsupportedDegree(degree))
    }
}

fn poly_degree(p: u16) -> Option<u32> {
    (p != 0).then(|| 15 - p.leading_zeros())
}

fn poly_rem(mut a: u16, b: u16) -> u16 {
    let db = poly_degree(b).expect("nonzero divisor");
    while let Some(da) = poly_degree(a) {
        if da < db {
            break;
        }
        a ^= b << (da - db);
    }
    a
}

/// Exhaustive trial division by every polynomial of degree `1..=deg/2`.
pub fn is_irreducible(p: u16) -> bool {
    let Some(deg) = poly_degree(p) else {
        return false;
    };
    if deg == 0 {
        return false;
    }
    (2u16..1 << (deg / 2 + 1)).all(|d| poly_rem(p, d) != 0)
}

fn clmul_reduce(a: u8, b: u8, degree: u32, modulus: u16) -> u8 {
    let mut prod = 0u16;
    for i in 0..8 {
        if (b >> i) & 1 == 1 {
            prod ^= (a as u16) << i;
        }
    }
    for bit in (degree..16).rev() {
        if (prod >> bit) & 1 == 1 {
            prod ^= modulus << (bit - degree);
        }
    }
    prod as u8
}

fn multiplicative_order(g: FieldElement, degree: u32, modulus: u16) -> usize {
    let mut acc = g.0;
    let mut n = 1;
    while acc != 1 {
        acc = clmul_reduce(acc, g.0, degree, modulus);
        n += 1;
        if n > 1 << degree {
            return 0;
        }
    }
    n
}
