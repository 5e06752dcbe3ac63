//! Integer kernel: factorisation, multiplicative functions, Lehmer's partial
//! totients and counts of partitions into three parts.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{invalid, precondition, Error, Result};

/// A positive integer together with its prime factorisation.
///
/// Primes are strictly increasing and every exponent is at least one; the
/// factor list of `1` is empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredInt {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl FactoredInt {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// Number of distinct prime divisors.
    pub fn nu(&self) -> u32 {
        self.factors.len() as u32
    }

    /// Number of prime divisors counted with multiplicity.
    pub fn big_omega(&self) -> u32 {
        self.factors.iter().map(|&(_, e)| e).sum()
    }

    pub fn smallest_prime(&self) -> Option<u64> {
        self.factors.first().map(|&(p, _)| p)
    }

    pub fn is_prime_power(&self) -> bool {
        self.factors.len() == 1
    }

    pub fn euler_phi(&self) -> u64 {
        self.factors
            .iter()
            .fold(1, |acc, &(p, e)| acc * (p - 1) * p.pow(e - 1))
    }

    pub fn moebius(&self) -> i64 {
        if self.factors.iter().any(|&(_, e)| e > 1) {
            0
        } else if self.factors.len() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn liouville(&self) -> i64 {
        if self.big_omega() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// All positive divisors in increasing order.
    pub fn divisors(&self) -> Vec<u64> {
        let mut divs = alloc::vec![1u64];
        for &(p, e) in &self.factors {
            let len = divs.len();
            let mut pk = 1;
            for _ in 0..e {
                pk *= p;
                for i in 0..len {
                    divs.push(divs[i] * pk);
                }
            }
        }
        divs.sort_unstable();
        divs
    }

    pub fn is_divisible_by(&self, d: u64) -> bool {
        d != 0 && self.n % d == 0
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> Option<u64> {
    if a == 0 || b == 0 {
        return Some(0);
    }
    (a / gcd(a, b)).checked_mul(b)
}

/// Trial-division factorisation. Intended for desk-scale `n` (up to about 1e7,
/// though any `u64` terminates eventually).
pub fn factorize(n: u64) -> Result<FactoredInt> {
    if n == 0 {
        return Err(invalid("cannot factorise 0"));
    }
    let mut factors = Vec::new();
    let mut m = n;
    let mut p = 2u64;
    while p.saturating_mul(p) <= m {
        if m % p == 0 {
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        factors.push((m, 1));
    }
    Ok(FactoredInt { n, factors })
}

/// Factorisation for large `u64` values (orders of matrix groups and of
/// extension-field unit groups), using Miller-Rabin and Pollard's rho.
pub fn factorize_large(n: u64) -> Result<FactoredInt> {
    if n == 0 {
        return Err(invalid("cannot factorise 0"));
    }
    let mut primes = Vec::new();
    let mut m = n;
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        while m % p == 0 {
            primes.push(p);
            m /= p;
        }
    }
    let mut stack = alloc::vec![m];
    while let Some(x) = stack.pop() {
        if x == 1 {
            continue;
        }
        if is_prime(x) {
            primes.push(x);
            continue;
        }
        let d = pollard_rho(x);
        stack.push(d);
        stack.push(x / d);
    }
    primes.sort_unstable();
    let mut factors: Vec<(u64, u32)> = Vec::new();
    for p in primes {
        match factors.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => factors.push((p, 1)),
        }
    }
    Ok(FactoredInt { n, factors })
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

// Brent's variant; `n` is odd and composite.
fn pollard_rho(n: u64) -> u64 {
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

fn factored(n: u64) -> FactoredInt {
    assert!(n >= 1, "argument must be positive");
    factorize(n).expect("n >= 1")
}

pub fn euler_phi(n: u64) -> u64 {
    factored(n).euler_phi()
}

pub fn moebius(n: u64) -> i64 {
    factored(n).moebius()
}

pub fn liouville(n: u64) -> i64 {
    factored(n).liouville()
}

/// Number of distinct prime divisors of `n`.
pub fn nu(n: u64) -> u32 {
    factored(n).nu()
}

/// A query `phi(k, t, n)`: integers coprime to `n` strictly between `nt/k`
/// and `n(t+1)/k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartialTotientQuery {
    k: u64,
    t: u64,
    n: u64,
}

impl PartialTotientQuery {
    pub fn new(k: u64, t: i64, n: u64) -> Result<Self> {
        if k == 0 || n == 0 {
            return Err(invalid("k and n must be positive"));
        }
        if t < 0 || t as u64 >= k {
            return Err(invalid(format!("need 0 <= t < k, got t = {t}, k = {k}")));
        }
        Ok(Self { k, t: t as u64, n })
    }

    pub fn k(&self) -> u64 {
        self.k
    }
    pub fn t(&self) -> u64 {
        self.t
    }
    pub fn n(&self) -> u64 {
        self.n
    }
}

/// Direct gcd scan over the open interval; endpoints are excluded even when
/// they are integers.
pub fn partial_totient(q: &PartialTotientQuery) -> u64 {
    let lo = q.n * q.t / q.k + 1;
    let hi_num = q.n * (q.t + 1);
    let hi = if hi_num % q.k == 0 {
        hi_num / q.k - 1
    } else {
        hi_num / q.k
    };
    (lo..=hi).filter(|&x| gcd(x, q.n) == 1).count() as u64
}

/// Convenience wrapper for `partial_totient` that panics on an invalid query.
pub fn phi_ktn(k: u64, t: u64, n: u64) -> u64 {
    let q = PartialTotientQuery::new(k, t as i64, n).expect("valid partial totient query");
    partial_totient(&q)
}

/// `phi(6, 2, n)` from `phi(n)/6` and the Liouville correction term.
pub fn phi_6_2_closed_form(n: u64) -> Result<u64> {
    if n < 7 {
        return Err(precondition(format!("phi(6,2,n) needs n > 6, got {n}")));
    }
    let f = factored(n);
    let phi = f.euler_phi() as i128;
    let lambda = f.liouville() as i128;
    let two_nu = 1i128 << f.nu();
    let vanishes = n % 9 == 0 || f.primes().any(|p| p % 3 == 1);
    // twelve times the correction term
    let corr12 = if vanishes {
        0
    } else if n % 3 == 0 {
        lambda * two_nu
    } else {
        2 * lambda * two_nu
    };
    let scaled = 2 * phi - corr12;
    if scaled < 0 || scaled % 12 != 0 {
        return Err(Error::Construction(format!(
            "closed form is not a non-negative integer for n = {n}"
        )));
    }
    Ok((scaled / 12) as u64)
}

/// `|phi(n) - k phi(k,t,n)| <= (k-1) 2^nu` for every `t` in `0..k`.
pub fn partial_totient_estimate_check(k: u64, n: u64) -> bool {
    let f = factored(n);
    let phi = f.euler_phi() as i128;
    let bound = (k as i128 - 1) * (1i128 << f.nu());
    (0..k).all(|t| (phi - k as i128 * phi_ktn(k, t, n) as i128).abs() <= bound)
}

/// Partitions of `n` into exactly three positive parts, by closed formula.
pub fn f_three_part(n: u64) -> u64 {
    let n = n as i128;
    let mut twelve_f = (n - 1) * (n - 2) + 6 * ((n - 1) / 2);
    if n % 3 == 0 {
        twelve_f += 4;
    }
    debug_assert_eq!(twelve_f % 12, 0);
    (twelve_f / 12) as u64
}

/// Partitions of `n` into exactly three positive parts, by enumeration.
pub fn f_three_part_oracle(n: u64) -> u64 {
    let mut count = 0;
    for c in 1..=n / 3 {
        for b in c..=(n - c) / 2 {
            let a = n - b - c;
            if a >= b {
                count += 1;
            }
        }
    }
    count
}

/// Partitions of `n` into three parts with no common divisor, by Möbius
/// inversion of [`f_three_part`].
pub fn g_coprime_three_part(n: u64) -> u64 {
    let f = factored(n);
    let total: i128 = f
        .divisors()
        .into_iter()
        .map(|d| moebius(d) as i128 * f_three_part(n / d) as i128)
        .sum();
    total as u64
}

/// All `(a, b, c)` with `a <= b <= c`, `a + b + c = n` and `gcd(a, b, c) = 1`,
/// in lexicographic order.
pub fn enumerate_p(n: u64) -> Vec<(u64, u64, u64)> {
    let mut out = Vec::new();
    for a in 1..=n / 3 {
        for b in a..=(n - a) / 2 {
            let c = n - a - b;
            if c >= b && gcd(gcd(a, b), c) == 1 {
                out.push((a, b, c));
            }
        }
    }
    out
}

// pi^2 = 9.869604401089358618834490999876..., bracketed at scale 1e18.
const PI2_SCALE: u128 = 1_000_000_000_000_000_000;
const PI2_LO: u128 = 9_869_604_401_089_358_618;
const PI2_HI: u128 = 9_869_604_401_089_358_619;

/// `floor(n / pi^2)`.
pub fn floor_div_pi_squared(n: u64) -> Result<u64> {
    let num = n as u128 * PI2_SCALE;
    let lo = num / PI2_HI;
    let hi = num / PI2_LO;
    if lo == hi {
        Ok(lo as u64)
    } else {
        Err(Error::Undecided)
    }
}

/// Whether `n^2/(2 pi^2) - (2/3) sqrt(n) < g(n)`, decided with integer
/// brackets for `pi^2` and `sqrt(n)`.
pub fn g_lower_bound_check(n: u64) -> Result<bool> {
    if n < 3 {
        return Err(precondition("n >= 3"));
    }
    if n > 1_000_000 {
        return Err(precondition("n <= 1e6"));
    }
    let g = g_coprime_three_part(n) as u128;
    // 3 n^2 < 2 pi^2 (3 g + 2 sqrt n), with sqrt n in [s, s+1] / T
    const T: u128 = 1_000_000;
    let n = n as u128;
    let s = (n * T * T).isqrt();
    let lhs = 3 * n * n * PI2_SCALE * T;
    if lhs < 2 * PI2_LO * (3 * g * T + 2 * s) {
        Ok(true)
    } else if lhs >= 2 * PI2_HI * (3 * g * T + 2 * (s + 1)) {
        Ok(false)
    } else {
        Err(Error::Undecided)
    }
}

/// The integer `w_p` with `(n-2)/4 <= w_p < n/2`, divisible by `p` and by no
/// other prime divisor of `n`, and prime to 3 unless `p = 3`.
///
/// Takes the smallest prime `r > 3` with `n/(4p) < r < n/(2p)`. If `r` does
/// not divide `n` (or equals `p`) the witness is `p r`; otherwise `n = 3pr`
/// and the witness is `p m` for the first `m` in `{r+1, r+2}` prime to 3.
pub fn bertrand_witness(p: u64, n: &FactoredInt) -> Result<u64> {
    let nn = n.n();
    if !is_prime(p) || nn % p != 0 {
        return Err(precondition(format!("{p} is not a prime divisor of {nn}")));
    }
    if n.nu() < 3 {
        return Err(precondition("n needs at least 3 distinct prime divisors"));
    }
    if is_six_or_ten_times_prime(nn) {
        return Err(precondition("n must not equal 6p or 10p for a prime p"));
    }
    // n/(4p) < r < n/(2p)  <=>  4pr > n and 2pr < n
    let mut r = 5u64;
    let r = loop {
        if 2 * p * r >= nn {
            return Err(Error::Construction(format!(
                "no prime r > 3 in (n/4p, n/2p) for p = {p}, n = {nn}"
            )));
        }
        if 4 * p * r > nn && is_prime(r) {
            break r;
        }
        r += 1;
    };
    if nn % r != 0 || r == p {
        return Ok(p * r);
    }
    if nn != 3 * p * r {
        return Err(Error::Construction(format!(
            "prime {r} divides {nn} but n != 3pr"
        )));
    }
    [r + 1, r + 2]
        .into_iter()
        .find(|m| m % 3 != 0)
        .map(|m| p * m)
        .ok_or_else(|| Error::Construction(format!("no m for r = {r}")))
}

pub fn is_six_or_ten_times_prime(n: u64) -> bool {
    [6u64, 10].iter().any(|&d| n % d == 0 && is_prime(n / d))
}

/// Multiplicative order of `a` modulo the prime `r` (with `a` prime to `r`).
pub fn multiplicative_order_mod_prime(a: u64, r: u64) -> u64 {
    let group = factorize_large(r - 1).expect("r > 1");
    let mut order = r - 1;
    for &(p, _) in group.factors() {
        while order % p == 0 && pow_mod(a, order / p, r) == 1 {
            order /= p;
        }
    }
    order
}

/// Smallest prime dividing `q^d - 1` but no `q^e - 1` with `e < d`.
pub fn primitive_prime_divisor(q: u64, d: u32) -> Result<Option<u64>> {
    if q < 2 || d == 0 {
        return Err(invalid("need q >= 2 and d >= 1"));
    }
    let qd = q
        .checked_pow(d)
        .ok_or_else(|| Error::Overflow(format!("{q}^{d}")))?;
    if qd - 1 <= 1 {
        return Ok(None);
    }
    let f = factorize_large(qd - 1)?;
    let found = f
        .primes()
        .find(|&r| multiplicative_order_mod_prime(q % r, r) == d as u64);
    Ok(found)
}
