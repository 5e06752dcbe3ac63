use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{invalid, Error, Result};
use crate::gf::{factor, Elem, Field, Poly};
use crate::numtheory::{factorize_large, lcm};

/// Square matrix over a finite field, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    n: usize,
    data: Vec<Elem>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix[{}x{} over GF({})]({})", self.n, self.n, self.field.q(), self.to_text())
    }
}

impl Matrix {
    pub fn zero(field: &Field, n: usize) -> Self {
        Self {
            field: field.clone(),
            n,
            data: vec![0; n * n],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let mut m = Self::zero(field, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(field: &Field, rows: &[Vec<Elem>]) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(invalid("matrix must be square"));
            }
            if let Some(&v) = row.iter().find(|&&v| v >= field.q()) {
                return Err(invalid(format!("entry {v} out of range for GF({})", field.q())));
            }
            data.extend_from_slice(row);
        }
        Ok(Self {
            field: field.clone(),
            n,
            data,
        })
    }

    /// Row-major entries; `data.len()` must be a perfect square.
    pub fn from_flat(field: &Field, n: usize, data: Vec<Elem>) -> Result<Self> {
        if data.len() != n * n {
            return Err(invalid("wrong number of entries"));
        }
        Ok(Self {
            field: field.clone(),
            n,
            data,
        })
    }

    /// Parses rows separated by `;` with entries separated by `,`.
    pub fn from_text(field: &Field, s: &str) -> Result<Self> {
        let rows = s
            .split(';')
            .map(|row| {
                row.split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<Elem>()
                            .map_err(|_| invalid(format!("bad matrix entry {t:?}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(field, &rows)
    }

    pub fn to_text(&self) -> String {
        let rows: Vec<String> = (0..self.n)
            .map(|i| {
                let r: Vec<String> = self.row(i).iter().map(|v| format!("{v}")).collect();
                r.join(",")
            })
            .collect();
        rows.join(";")
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[Elem] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.data[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.get(i, j) == u32::from(i == j)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let f = &self.field;
        let n = self.n;
        let mut out = Self::zero(f, n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                let orow = &other.data[k * n..(k + 1) * n];
                let dst = &mut out.data[i * n..(i + 1) * n];
                for (d, &b) in dst.iter_mut().zip(orow) {
                    *d = f.add(*d, f.mul(a, b));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Elem]) -> Vec<Elem> {
        let f = &self.field;
        (0..self.n)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect()
    }

    pub fn pow(&self, mut e: u128) -> Self {
        let mut acc = Self::identity(&self.field, self.n);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Signed power; negative exponents need an invertible matrix.
    pub fn pow_signed(&self, e: i128) -> Result<Self> {
        if e >= 0 {
            Ok(self.pow(e as u128))
        } else {
            Ok(self.inverse()?.pow(e.unsigned_abs()))
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(&self.field, self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn det(&self) -> Elem {
        let f = &self.field;
        let n = self.n;
        let mut a = self.data.clone();
        let mut det = 1;
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| a[r * n + col] != 0) else {
                return 0;
            };
            if piv != col {
                for j in 0..n {
                    a.swap(piv * n + j, col * n + j);
                }
                det = f.neg(det);
            }
            let p = a[col * n + col];
            det = f.mul(det, p);
            let pinv = f.inv(p).expect("pivot is nonzero");
            for r in col + 1..n {
                let factor = f.mul(a[r * n + col], pinv);
                if factor == 0 {
                    continue;
                }
                for j in col..n {
                    a[r * n + j] = f.sub(a[r * n + j], f.mul(factor, a[col * n + j]));
                }
            }
        }
        det
    }

    pub fn is_invertible(&self) -> bool {
        self.det() != 0
    }

    pub fn inverse(&self) -> Result<Self> {
        let f = &self.field;
        let n = self.n;
        let mut a = self.data.clone();
        let mut inv = Self::identity(f, n).data;
        for col in 0..n {
            let piv = (col..n).find(|&r| a[r * n + col] != 0).ok_or(Error::Singular)?;
            if piv != col {
                for j in 0..n {
                    a.swap(piv * n + j, col * n + j);
                    inv.swap(piv * n + j, col * n + j);
                }
            }
            let pinv = f.inv(a[col * n + col])?;
            for j in 0..n {
                a[col * n + j] = f.mul(a[col * n + j], pinv);
                inv[col * n + j] = f.mul(inv[col * n + j], pinv);
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = a[r * n + col];
                if factor == 0 {
                    continue;
                }
                for j in 0..n {
                    a[r * n + j] = f.sub(a[r * n + j], f.mul(factor, a[col * n + j]));
                    inv[r * n + j] = f.sub(inv[r * n + j], f.mul(factor, inv[col * n + j]));
                }
            }
        }
        Ok(Self {
            field: f.clone(),
            n,
            data: inv,
        })
    }

    /// Characteristic polynomial `det(xI - A)`, via reduction to upper
    /// Hessenberg form.
    pub fn char_poly(&self) -> Poly {
        let f = &self.field;
        let n = self.n;
        let mut h = self.data.clone();
        let at = |i: usize, j: usize| i * n + j;
        for m in 1..n.saturating_sub(1) {
            let Some(piv) = (m..n).find(|&i| h[at(i, m - 1)] != 0) else {
                continue;
            };
            if piv != m {
                for j in 0..n {
                    h.swap(at(piv, j), at(m, j));
                }
                for i in 0..n {
                    h.swap(at(i, piv), at(i, m));
                }
            }
            let pinv = f.inv(h[at(m, m - 1)]).expect("pivot is nonzero");
            for i in m + 1..n {
                let t = f.mul(h[at(i, m - 1)], pinv);
                if t == 0 {
                    continue;
                }
                for j in 0..n {
                    h[at(i, j)] = f.sub(h[at(i, j)], f.mul(t, h[at(m, j)]));
                }
                for r in 0..n {
                    h[at(r, m)] = f.add(h[at(r, m)], f.mul(t, h[at(r, i)]));
                }
            }
        }
        // p_m = (x - h_mm) p_{m-1} - sum_i h_im (prod_{j=i+1..m} h_{j,j-1}) p_{i-1}
        let mut polys: Vec<Poly> = vec![Poly::one(f)];
        for m in 0..n {
            let lin = Poly::linear(f, h[at(m, m)]);
            let mut pm = lin.mul(&polys[m]);
            let mut prod = 1;
            for i in (0..m).rev() {
                prod = f.mul(prod, h[at(i + 1, i)]);
                if prod == 0 {
                    break;
                }
                let c = f.mul(h[at(i, m)], prod);
                pm = pm.sub(&polys[i].scale(c));
            }
            polys.push(pm);
        }
        polys.pop().expect("at least the constant polynomial")
    }

    /// Companion matrix of a monic polynomial: ones on the subdiagonal and
    /// the negated lower coefficients in the last column.
    pub fn companion(poly: &Poly) -> Result<Self> {
        let d = poly.deg();
        if poly.is_constant() || !poly.is_monic() {
            return Err(invalid("companion matrix needs a monic polynomial of degree >= 1"));
        }
        if poly.coeff(0) == 0 {
            return Err(Error::Singular);
        }
        let f = poly.field();
        let mut m = Self::zero(f, d);
        for i in 1..d {
            m.set(i, i - 1, 1);
        }
        for i in 0..d {
            m.set(i, d - 1, f.neg(poly.coeff(i)));
        }
        Ok(m)
    }

    pub fn block_diag(blocks: &[Self]) -> Result<Self> {
        let first = blocks.first().ok_or_else(|| invalid("no blocks"))?;
        let f = first.field.clone();
        if blocks.iter().any(|b| b.field != f) {
            return Err(invalid("blocks over different fields"));
        }
        let n = blocks.iter().map(|b| b.n).sum();
        let mut m = Self::zero(&f, n);
        let mut off = 0;
        for b in blocks {
            for i in 0..b.n {
                for j in 0..b.n {
                    m.set(off + i, off + j, b.get(i, j));
                }
            }
            off += b.n;
        }
        Ok(m)
    }

    /// Injective encoding of the entries as an integer, when `q^(n^2)` fits.
    pub fn key(&self) -> Option<u128> {
        let q = self.field.q() as u128;
        self.data
            .iter()
            .try_fold(0u128, |acc, &v| acc.checked_mul(q)?.checked_add(v as u128))
    }

    /// Exact multiplicative order. A multiple is read off the characteristic
    /// polynomial (`p^s * lcm(q^d_i - 1)`) and reduced one prime at a time.
    pub fn order(&self) -> Result<u64> {
        if !self.is_invertible() {
            return Err(Error::Singular);
        }
        let q = self.field.q() as u64;
        let p = self.field.p() as u64;
        let factors = factor(&self.char_poly())?;
        let mut multiple = 1u64;
        let mut max_mult = 1;
        for (g, m) in &factors {
            let d = g.deg() as u32;
            let qd = q
                .checked_pow(d)
                .ok_or_else(|| Error::Overflow(format!("{q}^{d}")))?;
            multiple = lcm(multiple, qd - 1).ok_or_else(|| Error::Overflow(String::from("order")))?;
            max_mult = max_mult.max(*m);
        }
        let mut pk = 1u64;
        while pk < max_mult as u64 {
            pk = pk
                .checked_mul(p)
                .ok_or_else(|| Error::Overflow(String::from("order")))?;
        }
        multiple = multiple
            .checked_mul(pk)
            .ok_or_else(|| Error::Overflow(String::from("order")))?;
        if multiple > i64::MAX as u64 {
            return Err(Error::Overflow(String::from("order exceeds 2^63 - 1")));
        }
        if !self.pow(multiple as u128).is_identity() {
            return Err(Error::Construction(String::from("order bound failed")));
        }
        let mut order = multiple;
        for r in factorize_large(multiple)?.primes() {
            while order % r == 0 && self.pow((order / r) as u128).is_identity() {
                order /= r;
            }
        }
        Ok(order)
    }
}
