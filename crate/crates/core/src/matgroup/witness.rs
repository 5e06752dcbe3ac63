use alloc::format;
use core::fmt;

use super::matrix::Matrix;
use crate::error::{invalid, precondition, Error, Result};
use crate::gf::{is_irreducible, is_primitive, Elem, Field, Poly};
use crate::numtheory::{gcd, is_prime};

/// Which group between `SL_n(q)` and `GL_n(q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupKind {
    Sl,
    Gl,
    /// The subgroup of index `m` in `GL_n(q)`, with `m | q - 1` and `1 < m < q - 1`.
    Intermediate(u64),
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::Sl => f.write_str("SL"),
            GroupKind::Gl => f.write_str("GL"),
            GroupKind::Intermediate(m) => write!(f, "G[index {m}]"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    n: usize,
    field: Field,
    kind: GroupKind,
}

impl GroupSpec {
    pub fn new(n: usize, field: &Field, kind: GroupKind) -> Result<Self> {
        if n < 2 {
            return Err(invalid("dimension must be at least 2"));
        }
        let q1 = field.q() as u64 - 1;
        if let GroupKind::Intermediate(m) = kind {
            if m <= 1 || m >= q1 || q1 % m != 0 {
                return Err(invalid(format!(
                    "index {m} is not a proper divisor of q - 1 = {q1}"
                )));
            }
        }
        Ok(Self {
            n,
            field: field.clone(),
            kind,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    /// `|GL_n(q) : G|`.
    pub fn index(&self) -> u64 {
        match self.kind {
            GroupKind::Sl => self.field.q() as u64 - 1,
            GroupKind::Gl => 1,
            GroupKind::Intermediate(m) => m,
        }
    }

    /// 0 when `G = SL_n(q)` (which includes `GL_n(2)`), otherwise `-|GL_n(q) : G|`.
    pub fn alpha(&self) -> i64 {
        let idx = self.index();
        if idx == self.field.q() as u64 - 1 {
            0
        } else {
            -(idx as i64)
        }
    }

    /// The fixed generator of `GF(q)*`.
    pub fn zeta(&self) -> Elem {
        self.field.generator()
    }

    /// `det` of every witness element: `zeta^alpha`.
    pub fn witness_det(&self) -> Elem {
        self.field
            .pow_signed(self.zeta(), self.alpha())
            .expect("zeta is a unit")
    }

    /// `|G|`, when it fits.
    pub fn order(&self) -> Option<u128> {
        let q = self.field.q() as u128;
        let n = self.n as u32;
        let mut acc: u128 = q.checked_pow(n * (n - 1) / 2)?;
        for i in 1..=n {
            acc = acc.checked_mul(q.checked_pow(i)? - 1)?;
        }
        Some(acc / self.index() as u128)
    }

    /// Whether `m` lies in `G`: invertible with determinant in `<zeta^index>`.
    pub fn contains(&self, m: &Matrix) -> bool {
        if m.n() != self.n || m.field() != &self.field {
            return false;
        }
        let d = m.det();
        if d == 0 {
            return false;
        }
        let log = self.field.log(d).expect("nonzero") as u64;
        let idx = self.index();
        let q1 = self.field.q() as u64 - 1;
        // the determinant subgroup of G is <zeta^index> when index | q-1
        log % gcd(idx, q1) == 0
    }
}

/// `f` for the Singer element `Gamma_d`: the least primitive polynomial of
/// degree `d` (integer encoding order) with `(-1)^d f(0) = zeta`. Its
/// companion matrix has order `q^d - 1` and determinant `zeta`.
pub fn singer_polynomial(field: &Field, d: usize) -> Result<Poly> {
    if d == 0 {
        return Err(invalid("degree must be at least 1"));
    }
    let q = field.q() as u64;
    let qd = q
        .checked_pow(d as u32)
        .filter(|&v| v <= i64::MAX as u64)
        .ok_or_else(|| Error::Overflow(format!("{q}^{d} exceeds 2^63 - 1")))?;
    let zeta = field.generator();
    let c0 = if d % 2 == 0 { zeta } else { field.neg(zeta) } as u64;
    let rest = qd / q;
    for r in 0..rest {
        let f = Poly::monic_from_index(field, d, c0 + q * r);
        if is_primitive(&f)? {
            return Ok(f);
        }
    }
    Err(Error::Construction(format!(
        "no primitive polynomial of degree {d} with the required constant term"
    )))
}

/// `Gamma_d`: a Singer element of `GL_d(q)` with determinant `zeta`.
pub fn singer_gamma(d: usize, field: &Field) -> Result<Matrix> {
    Matrix::companion(&singer_polynomial(field, d)?)
}

// Gamma_d^e with e reduced modulo the order q^d - 1.
fn gamma_power(field: &Field, d: usize, e: i64) -> Result<Matrix> {
    let g = singer_gamma(d, field)?;
    let order = (field.q() as i128).pow(d as u32) - 1;
    Ok(g.pow((e as i128).rem_euclid(order) as u128))
}

impl GroupSpec {
    /// `Sigma_k = diag(Gamma_k^(alpha-1), Gamma_(n-k))` for `1 <= k <= n/2`.
    /// For `2k = n` the two blocks must have different characteristic
    /// polynomials, otherwise construction fails.
    pub fn sigma_k(&self, k: usize) -> Result<Matrix> {
        let n = self.n;
        if k == 0 || 2 * k > n {
            return Err(precondition(format!("Sigma_k needs 1 <= k <= n/2 (k = {k}, n = {n})")));
        }
        let a = gamma_power(&self.field, k, self.alpha() - 1)?;
        let b = singer_gamma(n - k, &self.field)?;
        if 2 * k == n && a.char_poly() == b.char_poly() {
            return Err(Error::Construction(format!(
                "Sigma_{k}: both blocks have the same characteristic polynomial"
            )));
        }
        Matrix::block_diag(&[a, b])
    }

    /// `T_j = diag(Gamma_j^(alpha-2), Gamma_(j+1), Gamma_(n-2j-1))` for `1 <= j < (n-2)/4`.
    pub fn t_j(&self, j: usize) -> Result<Matrix> {
        let n = self.n;
        if j == 0 || 4 * j + 2 >= n {
            return Err(precondition(format!("T_j needs 1 <= j < (n-2)/4 (j = {j}, n = {n})")));
        }
        Matrix::block_diag(&[
            gamma_power(&self.field, j, self.alpha() - 2)?,
            singer_gamma(j + 1, &self.field)?,
            singer_gamma(n - 2 * j - 1, &self.field)?,
        ])
    }

    /// `Y = diag(Gamma_p^(alpha-2), Gamma_5, Gamma_(n-p-5))` for `n = 10p`, `p > 5` prime.
    pub fn y_10p(&self) -> Result<Matrix> {
        let n = self.n;
        let p = n / 10;
        if n % 10 != 0 || p <= 5 || !is_prime(p as u64) {
            return Err(precondition(format!("Y needs n = 10p with p > 5 prime (n = {n})")));
        }
        Matrix::block_diag(&[
            gamma_power(&self.field, p, self.alpha() - 2)?,
            singer_gamma(5, &self.field)?,
            singer_gamma(n - p - 5, &self.field)?,
        ])
    }

    /// `g_lambda = diag(Gamma_a^(alpha-2), Gamma_b, Gamma_c)` for a coprime
    /// three-part partition `a <= b <= c` of `n`.
    pub fn g_lambda(&self, (a, b, c): (usize, usize, usize)) -> Result<Matrix> {
        check_partition(self.n, (a, b, c))?;
        Matrix::block_diag(&[
            gamma_power(&self.field, a, self.alpha() - 2)?,
            singer_gamma(b, &self.field)?,
            singer_gamma(c, &self.field)?,
        ])
    }

    /// `Gamma_n^(alpha+q-1)`, with a flag telling whether its
    /// characteristic polynomial is irreducible.
    pub fn omega_singer(&self) -> Result<OmegaElement> {
        let e = self.alpha() + self.field.q() as i64 - 1;
        let matrix = gamma_power(&self.field, self.n, e)?;
        let irreducible = is_irreducible(&matrix.char_poly());
        Ok(OmegaElement {
            matrix,
            irreducible,
        })
    }
}

#[derive(Debug, Clone)]
pub struct OmegaElement {
    pub matrix: Matrix,
    pub irreducible: bool,
}

pub(crate) fn check_partition(n: usize, (a, b, c): (usize, usize, usize)) -> Result<()> {
    if a == 0 || a > b || b > c || a + b + c != n {
        return Err(precondition(format!(
            "({a},{b},{c}) is not a sorted three-part partition of {n}"
        )));
    }
    if gcd(gcd(a as u64, b as u64), c as u64) != 1 {
        return Err(precondition(format!("parts ({a},{b},{c}) share a common factor")));
    }
    Ok(())
}

/// Free-function form of [`GroupSpec::alpha`].
pub fn alpha(g: &GroupSpec) -> i64 {
    g.alpha()
}

pub fn sigma_k(g: &GroupSpec, k: usize) -> Result<Matrix> {
    g.sigma_k(k)
}

pub fn t_j(g: &GroupSpec, j: usize) -> Result<Matrix> {
    g.t_j(j)
}

pub fn y_10p(g: &GroupSpec) -> Result<Matrix> {
    g.y_10p()
}

pub fn g_lambda(g: &GroupSpec, parts: (usize, usize, usize)) -> Result<Matrix> {
    g.g_lambda(parts)
}

pub fn omega_singer(g: &GroupSpec) -> Result<OmegaElement> {
    g.omega_singer()
}

/// Exact multiplicative order of an invertible matrix.
pub fn element_order(m: &Matrix) -> Result<u64> {
    m.order()
}
