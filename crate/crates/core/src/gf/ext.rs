use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::factor::is_irreducible;
use super::field::{Elem, Field};
use super::poly::Poly;
use crate::error::{invalid, Error, Result};
use crate::numtheory::factorize_large;

/// `GF(q^d)` realised as `GF(q)[x] / (f)`, where `f` is the least monic
/// irreducible of degree `d` over the base field. Elements are reduced
/// polynomials of degree below `d`.
#[derive(Clone, Debug)]
pub struct ExtField {
    base: Field,
    degree: usize,
    modulus: Poly,
}

impl ExtField {
    pub fn new(base: &Field, degree: usize) -> Result<Self> {
        if degree == 0 {
            return Err(invalid("extension degree must be at least 1"));
        }
        let q = base.q() as u64;
        let count = q
            .checked_pow(degree as u32)
            .ok_or_else(|| Error::Overflow(format!("{q}^{degree}")))?;
        let modulus = (0..count)
            .map(|i| Poly::monic_from_index(base, degree, i))
            .find(is_irreducible)
            .ok_or_else(|| Error::Construction(format!("no irreducible of degree {degree}")))?;
        Ok(Self {
            base: base.clone(),
            degree,
            modulus,
        })
    }

    pub fn base(&self) -> &Field {
        &self.base
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    /// `q^d`.
    pub fn order(&self) -> u64 {
        (self.base.q() as u64).pow(self.degree as u32)
    }

    pub fn element(&self, p: &Poly) -> Poly {
        p.rem(&self.modulus)
    }

    /// The element whose coefficients are the base-`q` digits of `idx`.
    pub fn from_index(&self, mut idx: u64) -> Poly {
        let q = self.base.q() as u64;
        let mut c = Vec::with_capacity(self.degree);
        for _ in 0..self.degree {
            c.push((idx % q) as Elem);
            idx /= q;
        }
        Poly::new(&self.base, c)
    }

    pub fn embed(&self, c: Elem) -> Poly {
        Poly::constant(&self.base, c)
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        a.mul_mod(b, &self.modulus)
    }

    pub fn pow(&self, a: &Poly, e: u128) -> Poly {
        a.pow_mod(e, &self.modulus)
    }

    /// The smallest element (in encoding order) of multiplicative order
    /// `q^d - 1`.
    pub fn generator(&self) -> Result<Poly> {
        let order = self.order() - 1;
        let primes: Vec<u64> = factorize_large(order.max(1))?.primes().collect();
        let one = Poly::one(&self.base);
        (1..self.order())
            .map(|i| self.from_index(i))
            .find(|g| {
                primes
                    .iter()
                    .all(|&r| self.pow(g, (order / r) as u128) != one)
            })
            .ok_or_else(|| Error::Construction(format!("no generator for GF({})", self.order())))
    }

    /// Field norm to the base field: `x^((q^d - 1)/(q - 1))`.
    pub fn norm(&self, x: &Poly) -> Elem {
        let q = self.base.q() as u128;
        let e = (q.pow(self.degree as u32) - 1) / (q - 1);
        let n = self.pow(&self.element(x), e);
        debug_assert!(n.is_constant());
        n.coeff(0)
    }

    /// Minimal polynomial of `x` over the base field: the product of
    /// `X - x^(q^i)` over the distinct conjugates of `x`.
    pub fn minimal_polynomial(&self, x: &Poly) -> Poly {
        let x = self.element(x);
        let mut conjugates = vec![x.clone()];
        loop {
            let next = x_frobenius(self, conjugates.last().expect("nonempty"));
            if next == x {
                break;
            }
            conjugates.push(next);
        }
        // coefficients of prod (X - c), each an element of GF(q^d)
        let zero = Poly::zero(&self.base);
        let mut acc: Vec<Poly> = vec![Poly::one(&self.base)];
        for c in &conjugates {
            let mut next = vec![zero.clone(); acc.len() + 1];
            for (i, a) in acc.iter().enumerate() {
                next[i + 1] = next[i + 1].add(a);
                next[i] = next[i].sub(&self.mul(a, c));
            }
            acc = next;
        }
        let coeffs = acc
            .iter()
            .map(|a| {
                debug_assert!(a.is_constant());
                a.coeff(0)
            })
            .collect();
        Poly::new(&self.base, coeffs)
    }
}

fn x_frobenius(ext: &ExtField, a: &Poly) -> Poly {
    ext.pow(a, ext.base.q() as u128)
}

/// Norm from `GF(q^d)` to `GF(q)`.
pub fn norm(ext: &ExtField, x: &Poly) -> Elem {
    ext.norm(x)
}

/// Minimal polynomial over `GF(q)` of an element of `GF(q^d)`.
pub fn minimal_polynomial(ext: &ExtField, x: &Poly) -> Poly {
    ext.minimal_polynomial(x)
}
