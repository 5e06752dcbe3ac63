//! Lower and upper bounds for `kappa(G)` and `gamma(G)`, and the exact
//! values where upper and lower bounds meet. All bounds depend on `n` only.

use alloc::format;
use alloc::vec::Vec;

use crate::covering::{size_c_p, size_c_p1p2, size_d};
use crate::error::{precondition, Result};
use crate::numtheory::{
    euler_phi, factorize, floor_div_pi_squared, g_coprime_three_part, gcd, is_six_or_ten_times_prime,
    nu, phi_ktn,
};

/// A bound together with a short tag naming where it comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bound {
    pub value: u64,
    pub provenance: &'static str,
}

impl Bound {
    const fn new(value: u64, provenance: &'static str) -> Self {
        Self { value, provenance }
    }
}

pub mod tags {
    pub const UPPER_SINGLE_PRIME: &str = "upper:single-prime";
    pub const UPPER_TWO_PRIMES: &str = "upper:two-primes";
    pub const UPPER_D: &str = "upper:D";
    pub const LOWER_PHI: &str = "lower:phi";
    pub const LOWER_PSI: &str = "lower:psi";
    pub const LOWER_PI: &str = "lower:pi";
    pub const LOWER_PARTITION: &str = "lower:partition";
    pub const EXACT_SMALL: &str = "exact:n<=4";
    pub const EXACT_PRIME_POWER: &str = "exact:prime-power";
    pub const EXACT_TWO_PRIME_POWERS: &str = "exact:two-prime-powers";
    pub const EXACT_6P: &str = "exact:6p";
    pub const EXACT_10P: &str = "exact:10p";
}

fn check_n(n: u64, min: u64) -> Result<()> {
    if n < min {
        return Err(precondition(format!("n must be at least {min} (n = {n})")));
    }
    Ok(())
}

/// Smallest `|C_p|` over the prime divisors `p` of `n`.
pub fn upper_single_prime(n: u64) -> Result<u64> {
    check_n(n, 2)?;
    let mut best = u64::MAX;
    for p in factorize(n)?.primes() {
        best = best.min(size_c_p(n, p)?);
    }
    Ok(best)
}

/// `|C_{p1,p2}|` for the two smallest prime divisors.
pub fn upper_two_primes(n: u64) -> Result<u64> {
    check_n(n, 2)?;
    let f = factorize(n)?;
    let ps: Vec<u64> = f.primes().take(2).collect();
    if ps.len() < 2 {
        return Err(precondition(format!("n needs two distinct prime divisors (n = {n})")));
    }
    size_c_p1p2(n, ps[0], ps[1])
}

/// `floor(n/3) + phi(6,2,n) + nu(n)` for `n > 6`.
pub fn upper_d(n: u64) -> Result<u64> {
    size_d(n)
}

/// `phi(n)/2 + nu(n)`, a lower bound for `kappa` when `nu(n) >= 2`.
pub fn lower_phi(n: u64) -> Result<u64> {
    check_n(n, 2)?;
    if nu(n) < 2 {
        return Err(precondition(format!("n needs two distinct prime divisors (n = {n})")));
    }
    Ok(euler_phi(n) / 2 + nu(n) as u64)
}

/// `floor((n+6)/12) + phi(12,1,3n) + nu(n)`, plus `phi(12,0,n)` when
/// `gcd(n,6) = 1`; needs `nu(n) >= 3` and `n` not `6p` or `10p`.
pub fn lower_psi(n: u64) -> Result<u64> {
    check_n(n, 2)?;
    if nu(n) < 3 {
        return Err(precondition(format!("n needs three distinct prime divisors (n = {n})")));
    }
    if is_six_or_ten_times_prime(n) {
        return Err(precondition(format!("n must not equal 6p or 10p (n = {n})")));
    }
    let mut v = (n + 6) / 12 + phi_ktn(12, 1, 3 * n) + nu(n) as u64;
    if gcd(n, 6) == 1 {
        v += phi_ktn(12, 0, n);
    }
    Ok(v)
}

/// `floor(n/pi^2) + 1`, the least integer above `n/pi^2`.
pub fn lower_pi(n: u64) -> Result<u64> {
    check_n(n, 3)?;
    Ok(floor_div_pi_squared(n)? + 1)
}

/// `1 + ceil(2 g(n) / n)` for `nu(n) >= 3` and `n >= 98`.
pub fn lower_partition(n: u64) -> Result<u64> {
    check_n(n, 98)?;
    if nu(n) < 3 {
        return Err(precondition(format!("n needs three distinct prime divisors (n = {n})")));
    }
    let g2 = 2 * g_coprime_three_part(n);
    Ok(1 + g2.div_ceil(n))
}

/// The exact value of `gamma = kappa` when one of the known families applies,
/// tried in the order: `n <= 4`, `p^a`, `p^a q^b`, `6p`, `10p` with `p > 5`.
pub fn exact_gamma(n: u64) -> Option<Bound> {
    if n < 2 {
        return None;
    }
    if n <= 4 {
        return Some(Bound::new(2, tags::EXACT_SMALL));
    }
    let f = factorize(n).ok()?;
    let ps: Vec<u64> = f.primes().collect();
    match ps.as_slice() {
        [p] => Some(Bound::new((p - 1) * n / (2 * p) + 1, tags::EXACT_PRIME_POWER)),
        [p, q] => Some(Bound::new(
            (p - 1) * (q - 1) * n / (2 * p * q) + 2,
            tags::EXACT_TWO_PRIME_POWERS,
        )),
        _ => {
            if n % 6 == 0 && crate::numtheory::is_prime(n / 6) {
                Some(Bound::new(n / 6 + 2, tags::EXACT_6P))
            } else if n % 10 == 0 && n / 10 > 5 && crate::numtheory::is_prime(n / 10) {
                Some(Bound::new(2 * (n / 10) + 2, tags::EXACT_10P))
            } else {
                None
            }
        }
    }
}

/// Every applicable bound for one `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub n: u64,
    pub kappa_lower: Vec<Bound>,
    pub gamma_lower: Vec<Bound>,
    pub gamma_upper: Vec<Bound>,
    pub exact: Option<Bound>,
    /// Best lower and upper bound for `gamma`, each with its provenance.
    pub interval: (Bound, Bound),
}

impl BoundsReport {
    pub fn lo(&self) -> u64 {
        self.interval.0.value
    }

    pub fn hi(&self) -> u64 {
        self.interval.1.value
    }

    pub fn is_exact(&self) -> bool {
        self.lo() == self.hi()
    }
}

pub fn report(n: u64) -> Result<BoundsReport> {
    check_n(n, 2)?;
    let mut kappa_lower = Vec::new();
    if let Ok(v) = lower_phi(n) {
        kappa_lower.push(Bound::new(v, tags::LOWER_PHI));
    }
    if let Ok(v) = lower_psi(n) {
        kappa_lower.push(Bound::new(v, tags::LOWER_PSI));
    }
    let mut gamma_lower = Vec::new();
    if n >= 3 {
        gamma_lower.push(Bound::new(lower_pi(n)?, tags::LOWER_PI));
    }
    if let Ok(v) = lower_partition(n) {
        gamma_lower.push(Bound::new(v, tags::LOWER_PARTITION));
    }
    let mut gamma_upper = Vec::new();
    gamma_upper.push(Bound::new(upper_single_prime(n)?, tags::UPPER_SINGLE_PRIME));
    if let Ok(v) = upper_two_primes(n) {
        gamma_upper.push(Bound::new(v, tags::UPPER_TWO_PRIMES));
    }
    if let Ok(v) = upper_d(n) {
        gamma_upper.push(Bound::new(v, tags::UPPER_D));
    }
    let exact = exact_gamma(n);

    let lo = kappa_lower
        .iter()
        .chain(&gamma_lower)
        .copied()
        .reduce(|x, y| if y.value > x.value { y } else { x })
        .unwrap_or(Bound::new(1, "lower:trivial"));
    let hi = gamma_upper
        .iter()
        .copied()
        .reduce(|x, y| if y.value < x.value { y } else { x })
        .expect("the single-prime covering always applies");
    // an exact value lies between the two and collapses the interval
    let interval = match exact {
        Some(e) => (e, e),
        None => (lo, hi),
    };
    Ok(BoundsReport {
        n,
        kappa_lower,
        gamma_lower,
        gamma_upper,
        exact,
        interval,
    })
}
