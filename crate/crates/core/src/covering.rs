//! Classes of maximal subgroups, covering certificates and independent sets
//! of element classes.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{invalid, precondition, Result};
use crate::matgroup::{check_partition, CharShape, GroupKind, GroupSpec, Matrix};
use crate::numtheory::{
    bertrand_witness, enumerate_p, euler_phi, factorize, gcd, is_prime, is_six_or_ten_times_prime,
    nu, phi_6_2_closed_form, phi_ktn,
};

/// A conjugacy class of subgroups: the extension field subgroups `efs(d)` or
/// the stabilisers `sss(k)` of `k`-dimensional subspaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassDescriptor {
    Efs(u32),
    Sss(u32),
}

impl fmt::Display for ClassDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassDescriptor::Efs(d) => write!(f, "efs({d})"),
            ClassDescriptor::Sss(k) => write!(f, "sss({k})"),
        }
    }
}

impl ClassDescriptor {
    pub fn validate(&self, n: u64) -> Result<()> {
        match *self {
            ClassDescriptor::Efs(d) => {
                if !is_prime(d as u64) || n % d as u64 != 0 {
                    return Err(invalid(format!("efs({d}) needs a prime divisor of n = {n}")));
                }
            }
            ClassDescriptor::Sss(k) => {
                if k == 0 || k as u64 >= n {
                    return Err(invalid(format!("sss({k}) needs 1 <= k <= n-1 (n = {n})")));
                }
            }
        }
        Ok(())
    }
}

/// Whether the class certainly contains a conjugate of every element of the
/// given shape. `sss(k)`: some monic divisor of the characteristic polynomial
/// has degree `k`. `efs(p)`: every irreducible factor has degree divisible by `p`.
pub fn member(shape: &CharShape, c: ClassDescriptor) -> bool {
    match c {
        ClassDescriptor::Sss(k) => shape.has_invariant_dim(k),
        ClassDescriptor::Efs(p) => shape.degrees().all(|d| d % p == 0),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Cp,
    Cp1p2,
    D,
    Custom,
}

impl Method {
    pub fn tag(&self) -> &'static str {
        match self {
            Method::Cp => "C_p",
            Method::Cp1p2 => "C_p1p2",
            Method::D => "D",
            Method::Custom => "custom",
        }
    }
}

/// A claimed normal covering. Independent of `q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoveringCertificate {
    n: u64,
    kind: GroupKind,
    method: Method,
    classes: Vec<ClassDescriptor>,
    claimed_size: usize,
}

impl CoveringCertificate {
    pub fn new(
        n: u64,
        kind: GroupKind,
        method: Method,
        classes: Vec<ClassDescriptor>,
        claimed_size: usize,
    ) -> Result<Self> {
        if n < 2 {
            return Err(invalid("n must be at least 2"));
        }
        for c in &classes {
            c.validate(n)?;
        }
        for (i, c) in classes.iter().enumerate() {
            if classes[..i].contains(c) {
                return Err(invalid(format!("class {c} listed twice")));
            }
        }
        if claimed_size != classes.len() {
            return Err(invalid(format!(
                "claimed size {claimed_size} but {} classes listed",
                classes.len()
            )));
        }
        Ok(Self {
            n,
            kind,
            method,
            classes,
            claimed_size,
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn with_kind(mut self, kind: GroupKind) -> Self {
        self.kind = kind;
        self
    }

    pub fn method(&self) -> Method {
        self.method
    }

    pub fn classes(&self) -> &[ClassDescriptor] {
        &self.classes
    }

    pub fn claimed_size(&self) -> usize {
        self.claimed_size
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// A copy with one class removed (the method becomes `custom`).
    pub fn without(&self, index: usize) -> Self {
        let mut classes = self.classes.clone();
        classes.remove(index);
        let size = classes.len();
        Self {
            n: self.n,
            kind: self.kind,
            method: Method::Custom,
            classes,
            claimed_size: size,
        }
    }

    /// First class containing the shape, if any.
    pub fn covering_class(&self, shape: &CharShape) -> Option<ClassDescriptor> {
        self.classes.iter().copied().find(|&c| member(shape, c))
    }
}

fn certificate(n: u64, method: Method, classes: Vec<ClassDescriptor>) -> CoveringCertificate {
    let size = classes.len();
    CoveringCertificate::new(n, GroupKind::Gl, method, classes, size)
        .expect("constructions satisfy the certificate invariants")
}

fn check_prime_divisor(n: u64, p: u64) -> Result<()> {
    if n < 2 {
        return Err(precondition("n must be at least 2"));
    }
    if !is_prime(p) || n % p != 0 {
        return Err(precondition(format!("{p} is not a prime divisor of {n}")));
    }
    Ok(())
}

/// `C_p = {efs(p)} + {sss(k) : 1 <= k <= n/2, p does not divide k}`.
pub fn build_c_p(n: u64, p: u64) -> Result<CoveringCertificate> {
    check_prime_divisor(n, p)?;
    let mut classes = vec![ClassDescriptor::Efs(p as u32)];
    classes.extend(
        (1..=n / 2)
            .filter(|k| k % p != 0)
            .map(|k| ClassDescriptor::Sss(k as u32)),
    );
    Ok(certificate(n, Method::Cp, classes))
}

/// `floor((1 - 1/p) n/2) + 1 + eps`, `eps = 1` iff `p = 2` and `n/2` is odd.
pub fn size_c_p(n: u64, p: u64) -> Result<u64> {
    check_prime_divisor(n, p)?;
    let eps = u64::from(p == 2 && (n / 2) % 2 == 1);
    Ok((p - 1) * n / (2 * p) + 1 + eps)
}

/// `C_{p1,p2} = {efs(p1), efs(p2)} + {sss(k) : 1 <= k < n/2, p1, p2 do not divide k}`.
pub fn build_c_p1p2(n: u64, p1: u64, p2: u64) -> Result<CoveringCertificate> {
    check_prime_divisor(n, p1)?;
    check_prime_divisor(n, p2)?;
    if p1 == p2 {
        return Err(precondition("the two primes must differ"));
    }
    let mut classes = vec![ClassDescriptor::Efs(p1 as u32), ClassDescriptor::Efs(p2 as u32)];
    classes.extend(
        (1..n)
            .take_while(|k| 2 * k < n)
            .filter(|k| k % p1 != 0 && k % p2 != 0)
            .map(|k| ClassDescriptor::Sss(k as u32)),
    );
    Ok(certificate(n, Method::Cp1p2, classes))
}

/// `(1 - 1/p1)(1 - 1/p2) n/2 + 2`; the product is always an integer.
pub fn size_c_p1p2(n: u64, p1: u64, p2: u64) -> Result<u64> {
    check_prime_divisor(n, p1)?;
    check_prime_divisor(n, p2)?;
    if p1 == p2 {
        return Err(precondition("the two primes must differ"));
    }
    let num = (p1 - 1) * (p2 - 1) * n;
    let den = 2 * p1 * p2;
    debug_assert_eq!(num % den, 0);
    Ok(num / den + 2)
}

/// `D = {sss(k) : k <= n/3} + {sss(k) : n/3 < k <= n/2, gcd(k, n) = 1} + {efs(p) : p | n}`.
pub fn build_d(n: u64) -> Result<CoveringCertificate> {
    if n <= 6 {
        return Err(precondition(format!("the covering D needs n > 6 (n = {n})")));
    }
    let mut classes: Vec<ClassDescriptor> =
        (1..=n / 3).map(|k| ClassDescriptor::Sss(k as u32)).collect();
    classes.extend(
        (n / 3 + 1..=n / 2)
            .filter(|&k| 3 * k > n && gcd(k, n) == 1)
            .map(|k| ClassDescriptor::Sss(k as u32)),
    );
    classes.extend(
        factorize(n)?
            .primes()
            .map(|p| ClassDescriptor::Efs(p as u32)),
    );
    Ok(certificate(n, Method::D, classes))
}

/// `floor(n/3) + phi(6,2,n) + nu(n)`, computed with the closed form for `phi(6,2,n)`.
pub fn size_d(n: u64) -> Result<u64> {
    if n <= 6 {
        return Err(precondition(format!("the covering D needs n > 6 (n = {n})")));
    }
    Ok(n / 3 + phi_6_2_closed_form(n)? + nu(n) as u64)
}

/// A symbolic witness element; the group fixes `alpha` and `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Member {
    /// `Gamma_n^(alpha+q-1)`.
    Gamma,
    Sigma(u64),
    T(u64),
    Y(u64),
    GLambda(u64, u64, u64),
}

impl fmt::Display for Member {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Member::Gamma => f.write_str("Gamma_n^(alpha+q-1)"),
            Member::Sigma(k) => write!(f, "Sigma_{k}"),
            Member::T(j) => write!(f, "T_{j}"),
            Member::Y(p) => write!(f, "Y(p={p})"),
            Member::GLambda(a, b, c) => write!(f, "g_({a},{b},{c})"),
        }
    }
}

impl Member {
    pub fn validate(&self, n: u64) -> Result<()> {
        match *self {
            Member::Gamma => Ok(()),
            Member::Sigma(k) if k >= 1 && 2 * k <= n => Ok(()),
            Member::Sigma(k) => Err(precondition(format!("Sigma_{k} needs 1 <= k <= n/2 (n = {n})"))),
            Member::T(j) if j >= 1 && 4 * j + 2 < n => Ok(()),
            Member::T(j) => Err(precondition(format!("T_{j} needs 1 <= j < (n-2)/4 (n = {n})"))),
            Member::Y(p) if p > 5 && is_prime(p) && n == 10 * p => Ok(()),
            Member::Y(p) => Err(precondition(format!("Y(p={p}) needs n = 10p, p > 5 prime (n = {n})"))),
            Member::GLambda(a, b, c) => {
                check_partition(n as usize, (a as usize, b as usize, c as usize))
            }
        }
    }

    /// Degrees of the irreducible diagonal blocks.
    pub fn block_degrees(&self, n: u64) -> Vec<u64> {
        match *self {
            Member::Gamma => vec![n],
            Member::Sigma(k) => vec![k, n - k],
            Member::T(j) => vec![j, j + 1, n - 2 * j - 1],
            Member::Y(p) => vec![p, 5, n - p - 5],
            Member::GLambda(a, b, c) => vec![a, b, c],
        }
    }

    /// Shape read off the block structure, one entry per block.
    pub fn symbolic_shape(&self, n: u64) -> CharShape {
        let degs: Vec<u32> = self.block_degrees(n).iter().map(|&d| d as u32).collect();
        CharShape::from_block_degrees(&degs).expect("block degrees are positive")
    }

    pub fn matrix(&self, g: &GroupSpec) -> Result<Matrix> {
        let n = g.n() as u64;
        self.validate(n)?;
        match *self {
            Member::Gamma => Ok(g.omega_singer()?.matrix),
            Member::Sigma(k) => g.sigma_k(k as usize),
            Member::T(j) => g.t_j(j as usize),
            Member::Y(_) => g.y_10p(),
            Member::GLambda(a, b, c) => g.g_lambda((a as usize, b as usize, c as usize)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WitnessName {
    Phi,
    PhiPlus,
    Psi,
    Omega,
}

impl WitnessName {
    pub fn tag(&self) -> &'static str {
        match self {
            WitnessName::Phi => "Phi",
            WitnessName::PhiPlus => "PhiPlus",
            WitnessName::Psi => "Psi",
            WitnessName::Omega => "Omega",
        }
    }
}

/// A claimed independent set of element classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KappaWitness {
    n: u64,
    kind: GroupKind,
    name: WitnessName,
    members: Vec<Member>,
}

impl KappaWitness {
    pub fn new(n: u64, kind: GroupKind, name: WitnessName, members: Vec<Member>) -> Result<Self> {
        if n < 2 {
            return Err(invalid("n must be at least 2"));
        }
        for m in &members {
            m.validate(n)?;
        }
        Ok(Self {
            n,
            kind,
            name,
            members,
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn with_kind(mut self, kind: GroupKind) -> Self {
        self.kind = kind;
        self
    }

    pub fn name(&self) -> WitnessName {
        self.name
    }

    pub fn members(&self) -> &[Member] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

fn witness(n: u64, name: WitnessName, members: Vec<Member>) -> KappaWitness {
    KappaWitness::new(n, GroupKind::Gl, name, members).expect("constructions are valid")
}

/// `Phi = {Sigma_p : p | n prime, p < n/2} + {Sigma_k : k < n/2, gcd(n, k) = 1}`.
pub fn build_phi(n: u64) -> Result<KappaWitness> {
    if n <= 2 {
        return Err(precondition(format!("Phi needs n > 2 (n = {n})")));
    }
    let mut members: Vec<Member> = factorize(n)?
        .primes()
        .filter(|&p| 2 * p < n)
        .map(Member::Sigma)
        .collect();
    members.extend(
        (1..n)
            .take_while(|k| 2 * k < n)
            .filter(|&k| gcd(n, k) == 1)
            .map(Member::Sigma),
    );
    Ok(witness(n, WitnessName::Phi, members))
}

/// `phi(n)/2 + nu(n) - eps`, `eps = 1` iff `n = 2p` with `p` an odd prime.
pub fn size_phi(n: u64) -> Result<u64> {
    if n <= 2 {
        return Err(precondition(format!("Phi needs n > 2 (n = {n})")));
    }
    let eps = u64::from(n % 2 == 0 && n / 2 > 2 && is_prime(n / 2));
    Ok(euler_phi(n) / 2 + nu(n) as u64 - eps)
}

/// `Phi` with the extra class `Sigma_p` for `n = 2p`, `p` an odd prime.
pub fn build_phi_plus(n: u64) -> Result<KappaWitness> {
    let p = n / 2;
    if n % 2 != 0 || p <= 2 || !is_prime(p) {
        return Err(precondition(format!("PhiPlus needs n = 2p with p an odd prime (n = {n})")));
    }
    let mut members = build_phi(n)?.members;
    members.push(Member::Sigma(p));
    Ok(witness(n, WitnessName::PhiPlus, members))
}

fn check_psi(n: u64) -> Result<()> {
    if n < 2 || nu(n) < 3 {
        return Err(precondition(format!(
            "Psi needs at least 3 distinct prime divisors (n = {n})"
        )));
    }
    if is_six_or_ten_times_prime(n) {
        return Err(precondition(format!(
            "Psi needs n not equal to 6p or 10p for any prime p (n = {n})"
        )));
    }
    Ok(())
}

/// The second independent set:
/// `{T_j : j < (n-2)/4, j = 1 mod 3} + {Sigma_k : n/4 < k < n/2, gcd(3n, k) = 1}
///  + {Sigma_6b : b < n/12, gcd(n, 6b) = 1} + {Sigma_(w_p) : p | n}`.
pub fn build_psi(n: u64) -> Result<KappaWitness> {
    check_psi(n)?;
    let mut members: Vec<Member> = (1..)
        .step_by(3)
        .take_while(|j| 4 * j + 2 < n)
        .map(Member::T)
        .collect();
    members.extend(
        (n / 4 + 1..)
            .take_while(|k| 2 * k < n)
            .filter(|&k| 4 * k > n && gcd(3 * n, k) == 1)
            .map(Member::Sigma),
    );
    members.extend(
        (1..)
            .take_while(|b| 12 * b < n)
            .filter(|&b| gcd(n, 6 * b) == 1)
            .map(|b| Member::Sigma(6 * b)),
    );
    let fac = factorize(n)?;
    for p in fac.primes() {
        members.push(Member::Sigma(bertrand_witness(p, &fac)?));
    }
    Ok(witness(n, WitnessName::Psi, members))
}

/// `floor((n+6)/12) + phi(12,1,3n) + [gcd(n,6) = 1] phi(12,0,n) + nu(n)`.
pub fn size_psi(n: u64) -> Result<u64> {
    check_psi(n)?;
    let mut size = (n + 6) / 12 + phi_ktn(12, 1, 3 * n) + nu(n) as u64;
    if gcd(n, 6) == 1 {
        size += phi_ktn(12, 0, n);
    }
    Ok(size)
}

/// `Omega = {Gamma_n^(alpha+q-1)} + {g_lambda : lambda in P(n)}`.
pub fn build_omega(n: u64) -> Result<KappaWitness> {
    if n < 3 {
        return Err(precondition(format!("Omega needs n >= 3 (n = {n})")));
    }
    let mut members = vec![Member::Gamma];
    members.extend(
        enumerate_p(n)
            .into_iter()
            .map(|(a, b, c)| Member::GLambda(a, b, c)),
    );
    Ok(witness(n, WitnessName::Omega, members))
}

/// Why two members can share a class of subgroups.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Conflict {
    /// Both stabilise a subspace of this dimension.
    SharedDimension(u32),
    /// Both satisfy the extension-field criterion for this prime.
    SharedEfs(u32),
    /// The same constructor is listed twice.
    Duplicate,
}

impl fmt::Display for Conflict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Conflict::SharedDimension(k) => write!(f, "both stabilise a {k}-dimensional subspace"),
            Conflict::SharedEfs(p) => write!(f, "both meet the efs({p}) criterion"),
            Conflict::Duplicate => f.write_str("listed twice"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependenceReport {
    pub pairs_checked: usize,
    pub offending: Option<(Member, Member, Conflict)>,
}

impl IndependenceReport {
    pub fn passed(&self) -> bool {
        self.offending.is_none()
    }
}

/// Conflict between two members, from their block degrees.
pub fn pair_conflict(n: u64, x: &Member, y: &Member) -> Option<Conflict> {
    if x == y {
        return Some(Conflict::Duplicate);
    }
    let sx = x.symbolic_shape(n);
    let sy = y.symbolic_shape(n);
    let dx = sx.invariant_dim_table();
    let dy = sy.invariant_dim_table();
    if let Some(k) = (1..n as usize).find(|&k| dx[k] && dy[k]) {
        return Some(Conflict::SharedDimension(k as u32));
    }
    factorize(n)
        .expect("n >= 1")
        .primes()
        .map(|p| p as u32)
        .find(|&p| {
            member(&sx, ClassDescriptor::Efs(p)) && member(&sy, ClassDescriptor::Efs(p))
        })
        .map(Conflict::SharedEfs)
}

/// Checks every pair of members: no common invariant dimension strictly
/// between 0 and n, and no prime for which both meet the extension-field
/// criterion. Stops at the first offending pair.
pub fn structural_independence_check(w: &KappaWitness) -> IndependenceReport {
    let ms = w.members();
    let mut pairs = 0;
    for i in 0..ms.len() {
        for j in i + 1..ms.len() {
            pairs += 1;
            if let Some(c) = pair_conflict(w.n, &ms[i], &ms[j]) {
                return IndependenceReport {
                    pairs_checked: pairs,
                    offending: Some((ms[i], ms[j], c)),
                };
            }
        }
    }
    IndependenceReport {
        pairs_checked: pairs,
        offending: None,
    }
}

/// Counting data for the `g_lambda` members of `Omega`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaCountReport {
    pub n: u64,
    pub members: usize,
    /// Largest number of members inside one `sss(k)`, with that `k`.
    pub max_sss: (u32, usize),
    /// Members with `c = n/2` or equal to `(2, (n-2)/2, (n-2)/2)`: the
    /// `GL_(n/2)(q) wr C_2` class.
    pub wreath: usize,
    /// Members equal to `(2, (n-2)/2, (n-2)/2)` with `4 | n`: the
    /// `GL_(n/2)(q) o GL_2(q)` class.
    pub central: usize,
}

impl OmegaCountReport {
    /// `2 * max_sss <= n` and `4 * count <= n` for both exceptional classes.
    pub fn passed(&self) -> bool {
        let n = self.n as usize;
        2 * self.max_sss.1 <= n && 4 * self.wreath <= n && 4 * self.central <= n
    }
}

pub fn omega_count_check(w: &KappaWitness) -> OmegaCountReport {
    let n = w.n;
    let parts: Vec<(u64, u64, u64)> = w
        .members()
        .iter()
        .filter_map(|m| match *m {
            Member::GLambda(a, b, c) => Some((a, b, c)),
            _ => None,
        })
        .collect();
    let mut counts = vec![0usize; n as usize + 1];
    for &(a, b, c) in &parts {
        let table = CharShape::from_block_degrees(&[a as u32, b as u32, c as u32])
            .expect("positive parts")
            .invariant_dim_table();
        for k in 1..n as usize {
            if table[k] {
                counts[k] += 1;
            }
        }
    }
    let max_sss = (1..n as usize)
        .map(|k| (k as u32, counts[k]))
        .fold((0, 0), |best, cur| if cur.1 > best.1 { cur } else { best });
    let special = |&(a, b, c): &(u64, u64, u64)| n % 4 == 0 && a == 2 && 2 * b + 2 == n && b == c;
    let wreath = parts
        .iter()
        .filter(|t| (n % 2 == 0 && 2 * t.2 == n) || special(t))
        .count();
    let central = parts.iter().filter(|t| special(t)).count();
    OmegaCountReport {
        n,
        members: parts.len(),
        max_sss,
        wreath,
        central,
    }
}
