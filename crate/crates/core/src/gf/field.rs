use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{invalid, Error, Result};
use crate::numtheory::{factorize_large, is_prime};

/// Field elements are canonical integers `sum c_i p^i` in `0..q`, where
/// `c_i` are the coefficients of the residue modulo the defining polynomial.
pub type Elem = u32;

/// Largest supported field order.
pub const MAX_FIELD_ORDER: u64 = 1 << 16;

const NO_LOG: u32 = u32::MAX;

/// `(p, e)` with `q = p^e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldSpec {
    p: u32,
    e: u32,
}

impl FieldSpec {
    pub fn new(p: u32, e: u32) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if e == 0 {
            return Err(invalid("field degree must be at least 1"));
        }
        match (p as u64).checked_pow(e) {
            Some(q) if q <= MAX_FIELD_ORDER => Ok(Self { p, e }),
            Some(q) => Err(Error::FieldTooLarge(q)),
            None => Err(Error::FieldTooLarge(u64::MAX)),
        }
    }

    /// Splits a prime power `q` into `(p, e)`.
    pub fn from_order(q: u64) -> Result<Self> {
        if q < 2 {
            return Err(invalid(format!("{q} is not a prime power")));
        }
        if q > MAX_FIELD_ORDER {
            return Err(Error::FieldTooLarge(q));
        }
        let f = crate::numtheory::factorize(q)?;
        if !f.is_prime_power() {
            return Err(invalid(format!("{q} is not a prime power")));
        }
        let (p, e) = f.factors()[0];
        Self::new(p as u32, e)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn q(&self) -> u32 {
        self.p.pow(self.e)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q())
    }
}

struct Tables {
    spec: FieldSpec,
    q: u32,
    /// Defining polynomial over GF(p), low to high, monic of degree e.
    modulus: Vec<u32>,
    generator: Elem,
    /// `exp[i] = generator^i`, stored twice over so sums of logs need no reduction.
    exp: Vec<Elem>,
    log: Vec<u32>,
    /// `zech[k] = log(1 + generator^k)`, or `NO_LOG` when that sum is zero.
    zech: Vec<u32>,
}

/// A finite field `GF(p^e)` with log/antilog tables. Cloning is cheap.
#[derive(Clone)]
pub struct Field(Arc<Tables>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.0.spec == other.0.spec
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.spec)
    }
}

/// Constructs `GF(p^e)`. The defining polynomial is the least monic
/// irreducible of degree `e` over `GF(p)` (ordered by integer encoding).
pub fn field(p: u32, e: u32) -> Result<Field> {
    Field::new(FieldSpec::new(p, e)?)
}

impl Field {
    pub fn new(spec: FieldSpec) -> Result<Self> {
        let (p, e, q) = (spec.p, spec.e, spec.q());
        let modulus = if e == 1 {
            vec![0, 1]
        } else {
            least_irreducible_over_prime(p, e)
        };
        let slow = SlowArith { p, e, modulus: &modulus };

        let order = (q - 1) as u64;
        let order_primes: Vec<u64> = factorize_large(order.max(1))?.primes().collect();
        let generator = (1..q)
            .find(|&g| {
                order_primes
                    .iter()
                    .all(|&r| slow.pow(g, order / r) != 1)
            })
            .ok_or_else(|| Error::Construction(format!("no generator for GF({q})")))?;

        let n = (q - 1) as usize;
        let mut exp = vec![0u32; 2 * n.max(1)];
        let mut log = vec![NO_LOG; q as usize];
        let mut x = 1;
        for i in 0..n {
            exp[i] = x;
            exp[i + n] = x;
            log[x as usize] = i as u32;
            x = slow.mul(x, generator);
        }
        let mut zech = vec![NO_LOG; n];
        for (k, z) in zech.iter_mut().enumerate() {
            let s = slow.add(1, exp[k]);
            if s != 0 {
                *z = log[s as usize];
            }
        }
        Ok(Field(Arc::new(Tables {
            spec,
            q,
            modulus,
            generator,
            exp,
            log,
            zech,
        })))
    }

    pub fn spec(&self) -> FieldSpec {
        self.0.spec
    }

    pub fn p(&self) -> u32 {
        self.0.spec.p
    }

    pub fn q(&self) -> u32 {
        self.0.q
    }

    /// Defining polynomial coefficients over `GF(p)`, low to high.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    /// The smallest element (in encoding order) generating the unit group.
    pub fn generator(&self) -> Elem {
        self.0.generator
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.0.q
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let t = &*self.0;
        if t.spec.e == 1 {
            let s = a + b;
            if s >= t.q {
                s - t.q
            } else {
                s
            }
        } else if t.spec.p == 2 {
            a ^ b
        } else if a == 0 {
            b
        } else if b == 0 {
            a
        } else {
            let n = t.q - 1;
            let la = t.log[a as usize];
            let lb = t.log[b as usize];
            let k = if lb >= la { lb - la } else { lb + n - la };
            match t.zech[k as usize] {
                NO_LOG => 0,
                z => t.exp[(la + z) as usize],
            }
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        let t = &*self.0;
        if a == 0 || t.spec.p == 2 {
            a
        } else if t.spec.e == 1 {
            t.q - a
        } else {
            // -1 = generator^((q-1)/2) for odd q
            t.exp[(t.log[a as usize] + (t.q - 1) / 2) as usize]
        }
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            return 0;
        }
        let t = &*self.0;
        t.exp[(t.log[a as usize] + t.log[b as usize]) as usize]
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        let t = &*self.0;
        let n = t.q - 1;
        let l = t.log[a as usize];
        Ok(t.exp[((n - l) % n.max(1)) as usize])
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let t = &*self.0;
        let n = (t.q - 1) as u64;
        let l = (t.log[a as usize] as u64 * (e % n)) % n;
        t.exp[l as usize]
    }

    /// Power with a signed exponent; `a` must be nonzero when `e < 0`.
    pub fn pow_signed(&self, a: Elem, e: i64) -> Result<Elem> {
        if e >= 0 {
            return Ok(self.pow(a, e as u64));
        }
        let n = (self.q() - 1) as i64;
        let inv = self.inv(a)?;
        Ok(self.pow(inv, e.unsigned_abs() % n as u64))
    }

    /// Discrete log to base [`Field::generator`]; `None` for zero.
    pub fn log(&self, a: Elem) -> Option<u32> {
        match self.0.log[a as usize] {
            NO_LOG => None,
            l => Some(l),
        }
    }

    pub fn exp(&self, k: u64) -> Elem {
        let n = (self.q() - 1) as u64;
        self.0.exp[(k % n) as usize]
    }

    pub fn multiplicative_order(&self, a: Elem) -> Option<u64> {
        let l = self.log(a)? as u64;
        let n = (self.q() - 1) as u64;
        Some(n / crate::numtheory::gcd(l, n))
    }

    /// Embeds the integer `k` via `k mod p`.
    pub fn from_int(&self, k: i64) -> Elem {
        k.rem_euclid(self.p() as i64) as Elem
    }
}

/// The smallest generator of the multiplicative group of the field.
pub fn multiplicative_generator(f: &Field) -> Elem {
    f.generator()
}

// Digit-vector arithmetic used only while building tables.
struct SlowArith<'a> {
    p: u32,
    e: u32,
    modulus: &'a [u32],
}

impl SlowArith<'_> {
    fn digits(&self, mut a: u32) -> Vec<u32> {
        let mut d = vec![0; self.e as usize];
        for x in d.iter_mut() {
            *x = a % self.p;
            a /= self.p;
        }
        d
    }

    fn undigits(&self, d: &[u32]) -> u32 {
        d.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    fn add(&self, a: u32, b: u32) -> u32 {
        let (da, db) = (self.digits(a), self.digits(b));
        let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.undigits(&s)
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        let p = self.p as u64;
        let e = self.e as usize;
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u64; 2 * e];
        for i in 0..e {
            for j in 0..e {
                prod[i + j] = (prod[i + j] + da[i] as u64 * db[j] as u64) % p;
            }
        }
        for k in (e..2 * e).rev() {
            let c = prod[k];
            if c != 0 {
                for i in 0..e {
                    let sub = c * self.modulus[i] as u64 % p;
                    prod[k - e + i] = (prod[k - e + i] + p - sub) % p;
                }
                prod[k] = 0;
            }
        }
        let r: Vec<u32> = prod[..e].iter().map(|&x| x as u32).collect();
        self.undigits(&r)
    }

    fn pow(&self, a: u32, mut k: u64) -> u32 {
        let mut base = a;
        let mut acc = 1;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }
}

// Least monic irreducible of degree e over GF(p), by trial division with every
// monic polynomial of degree <= e/2.
fn least_irreducible_over_prime(p: u32, e: u32) -> Vec<u32> {
    let pe = (p as u64).pow(e);
    (0..pe)
        .map(|low| {
            let mut c = Vec::with_capacity(e as usize + 1);
            let mut v = low;
            for _ in 0..e {
                c.push((v % p as u64) as u32);
                v /= p as u64;
            }
            c.push(1);
            c
        })
        .find(|c| c[0] != 0 && !has_small_factor(c, p))
        .expect("irreducible polynomials exist in every degree")
}

fn has_small_factor(f: &[u32], p: u32) -> bool {
    let e = f.len() - 1;
    for deg in 1..=e / 2 {
        let count = (p as u64).pow(deg as u32);
        for low in 0..count {
            let mut g = Vec::with_capacity(deg + 1);
            let mut v = low;
            for _ in 0..deg {
                g.push((v % p as u64) as u32);
                v /= p as u64;
            }
            g.push(1);
            if rem_is_zero(f, &g, p) {
                return true;
            }
        }
    }
    false
}

fn rem_is_zero(f: &[u32], g: &[u32], p: u32) -> bool {
    let p = p as u64;
    let mut r: Vec<u64> = f.iter().map(|&x| x as u64).collect();
    let dg = g.len() - 1;
    for k in (dg..r.len()).rev() {
        let c = r[k];
        if c != 0 {
            for i in 0..=dg {
                let sub = c * g[i] as u64 % p;
                r[k - dg + i] = (r[k - dg + i] + p - sub) % p;
            }
        }
    }
    r[..dg].iter().all(|&x| x == 0)
}
