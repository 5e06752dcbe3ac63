//! Brute-force checks: covering certificates against every characteristic
//! shape of `GL_n(q)`, element-level cross-checks on tiny groups, and
//! sampled generation tests for witness pairs.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use hashbrown::{HashMap, HashSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::covering::{member, ClassDescriptor, CoveringCertificate, KappaWitness, Member};
use crate::error::{invalid, precondition, Error, Result};
use crate::gf::{count_irreducibles, Field};
use crate::matgroup::{char_shape, CharShape, GroupSpec, Matrix};

/// Size ceilings for the exhaustive checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_n: u64,
    pub max_q: u64,
    /// Largest group order for element-level work.
    pub max_group_order: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_n: 12,
            max_q: 5,
            max_group_order: 10_000_000,
        }
    }
}

/// Every characteristic shape of an invertible `n x n` matrix over `GF(q)`:
/// multisets of `(degree, multiplicity)` with `sum d m = n` in which degree
/// `d` occurs at most as often as there are monic irreducibles of degree `d`
/// other than `x`. Sorted and duplicate-free.
pub fn enumerate_shapes(n: u64, q: u64, limits: &Limits) -> Result<Vec<CharShape>> {
    if n == 0 || n > limits.max_n {
        return Err(precondition(format!("n = {n} outside 1..={}", limits.max_n)));
    }
    if q < 2 || q > limits.max_q {
        return Err(precondition(format!("q = {q} outside 2..={}", limits.max_q)));
    }
    let n = n as u32;
    let available: Vec<u128> = (0..=n)
        .map(|d| match d {
            0 => 0,
            1 => count_irreducibles(q, 1) - 1,
            _ => count_irreducibles(q, d),
        })
        .collect();
    // candidate entries in increasing order
    let mut parts = Vec::new();
    for d in 1..=n {
        for m in 1..=n / d {
            parts.push((d, m));
        }
    }
    let mut out = Vec::new();
    let mut used = vec![0u128; n as usize + 1];
    let mut current = Vec::new();
    extend_shapes(&parts, 0, n, &available, &mut used, &mut current, &mut out);
    out.sort();
    Ok(out)
}

fn extend_shapes(
    parts: &[(u32, u32)],
    start: usize,
    remaining: u32,
    available: &[u128],
    used: &mut [u128],
    current: &mut Vec<(u32, u32)>,
    out: &mut Vec<CharShape>,
) {
    if remaining == 0 {
        out.push(CharShape::new(current.clone()).expect("valid entries"));
        return;
    }
    for i in start..parts.len() {
        let (d, m) = parts[i];
        if d * m > remaining || used[d as usize] >= available[d as usize] {
            continue;
        }
        used[d as usize] += 1;
        current.push((d, m));
        // the same entry may repeat: it stands for a different irreducible
        extend_shapes(parts, i, remaining - d * m, available, used, current, out);
        current.pop();
        used[d as usize] -= 1;
    }
}

/// Outcome of checking a certificate against a set of shapes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub n: u64,
    pub q: u64,
    pub total_shapes: usize,
    pub covered: usize,
    pub uncovered: Vec<CharShape>,
    /// For each class of the certificate, the number of shapes it contains.
    pub hits: Vec<(ClassDescriptor, usize)>,
}

impl VerifyReport {
    pub fn empty(cert: &CoveringCertificate, q: u64) -> Self {
        Self {
            n: cert.n(),
            q,
            total_shapes: 0,
            covered: 0,
            uncovered: Vec::new(),
            hits: cert.classes().iter().map(|&c| (c, 0)).collect(),
        }
    }

    pub fn verified(&self) -> bool {
        self.uncovered.is_empty()
    }

    /// Combines reports over disjoint shape sets of the same certificate.
    /// Associative and commutative up to the normalised uncovered order.
    pub fn merge(mut self, other: Self) -> Self {
        debug_assert_eq!((self.n, self.q), (other.n, other.q));
        self.total_shapes += other.total_shapes;
        self.covered += other.covered;
        self.uncovered.extend(other.uncovered);
        self.uncovered.sort();
        for (h, o) in self.hits.iter_mut().zip(other.hits) {
            debug_assert_eq!(h.0, o.0);
            h.1 += o.1;
        }
        self
    }
}

/// Tests each shape against each class of the certificate.
pub fn evaluate_shapes(cert: &CoveringCertificate, q: u64, shapes: &[CharShape]) -> VerifyReport {
    let mut report = VerifyReport::empty(cert, q);
    for s in shapes {
        report.total_shapes += 1;
        let mut hit = false;
        for (c, count) in report.hits.iter_mut() {
            if member(s, *c) {
                *count += 1;
                hit = true;
            }
        }
        if hit {
            report.covered += 1;
        } else {
            report.uncovered.push(s.clone());
        }
    }
    report.uncovered.sort();
    report
}

pub fn check_cover(cert: &CoveringCertificate, q: u64, limits: &Limits) -> Result<VerifyReport> {
    let shapes = enumerate_shapes(cert.n(), q, limits)?;
    Ok(evaluate_shapes(cert, q, &shapes))
}

/// For each class, the first shape left uncovered when that class is
/// dropped, or `None` when the class is redundant at this `q`.
pub fn check_cover_minimality_probe(
    cert: &CoveringCertificate,
    q: u64,
    limits: &Limits,
) -> Result<Vec<(ClassDescriptor, Option<CharShape>)>> {
    let shapes = enumerate_shapes(cert.n(), q, limits)?;
    Ok((0..cert.len())
        .map(|i| {
            let reduced = cert.without(i);
            let witness = shapes
                .iter()
                .find(|s| reduced.covering_class(s).is_none())
                .cloned();
            (cert.classes()[i], witness)
        })
        .collect())
}

/// `|GL_n(q)|`, when it fits.
pub fn gl_order(n: u64, q: u64) -> Option<u128> {
    let q = q as u128;
    let n = u32::try_from(n).ok()?;
    let mut acc = q.checked_pow(n.checked_mul(n.checked_sub(1)?)? / 2)?;
    for i in 1..=n {
        acc = acc.checked_mul(q.checked_pow(i)? - 1)?;
    }
    Some(acc)
}

/// Element-level check over all of `GL_n(q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementReport {
    pub elements: u64,
    pub uncovered_elements: u64,
    /// Number of elements of each shape, in shape order.
    pub shape_counts: Vec<(CharShape, u64)>,
    /// The shape-level report restricted to the shapes that occur.
    pub report: VerifyReport,
}

impl ElementReport {
    pub fn shapes(&self) -> Vec<CharShape> {
        self.shape_counts.iter().map(|(s, _)| s.clone()).collect()
    }
}

/// Visits every invertible matrix of `GL_n(q)`.
pub fn for_each_invertible(
    field: &Field,
    n: usize,
    limits: &Limits,
    mut f: impl FnMut(&Matrix),
) -> Result<()> {
    let q = field.q() as u64;
    let order = gl_order(n as u64, q).ok_or_else(|| Error::Overflow(format!("|GL_{n}({q})|")))?;
    if order > limits.max_group_order {
        return Err(Error::Budget(format!(
            "|GL_{n}({q})| = {order} exceeds {}",
            limits.max_group_order
        )));
    }
    let cells = n * n;
    let mut data = vec![0u32; cells];
    loop {
        let m = Matrix::from_flat(field, n, data.clone())?;
        if m.is_invertible() {
            f(&m);
        }
        let mut i = 0;
        loop {
            if i == cells {
                return Ok(());
            }
            data[i] += 1;
            if data[i] < q as u32 {
                break;
            }
            data[i] = 0;
            i += 1;
        }
    }
}

pub fn exhaustive_element_check(
    cert: &CoveringCertificate,
    field: &Field,
    limits: &Limits,
) -> Result<ElementReport> {
    let n = cert.n() as usize;
    let q = field.q() as u64;
    let mut cache: HashMap<Vec<u32>, CharShape> = HashMap::new();
    let mut counts: BTreeMap<CharShape, u64> = BTreeMap::new();
    let mut error = None;
    for_each_invertible(field, n, limits, |m| {
        let cp = m.char_poly();
        let shape = match cache.get(cp.coeffs()) {
            Some(s) => s.clone(),
            None => match char_shape(m) {
                Ok(s) => {
                    cache.insert(cp.coeffs().to_vec(), s.clone());
                    s
                }
                Err(e) => {
                    error.get_or_insert(e);
                    return;
                }
            },
        };
        *counts.entry(shape).or_insert(0) += 1;
    })?;
    if let Some(e) = error {
        return Err(e);
    }
    let shapes: Vec<CharShape> = counts.keys().cloned().collect();
    let report = evaluate_shapes(cert, q, &shapes);
    let uncovered_elements = report
        .uncovered
        .iter()
        .map(|s| counts[s])
        .sum();
    Ok(ElementReport {
        elements: counts.values().sum(),
        uncovered_elements,
        shape_counts: counts.into_iter().collect(),
        report,
    })
}

/// Order of the group generated by `generators`, by breadth-first closure.
/// Fails once more than `budget` elements have been found.
pub fn subgroup_closure_order(generators: &[Matrix], budget: u64) -> Result<u64> {
    closure(generators, budget, None).map(|(size, _)| size)
}

/// Whether the matrices generate a group of order `target`, where `target`
/// is the order of a group known to contain them. Stops as soon as more than
/// `target / 2` elements are found.
pub fn generates(generators: &[Matrix], target: u128) -> Result<bool> {
    let target = u64::try_from(target).map_err(|_| Error::Overflow(format!("order {target}")))?;
    let (size, stopped) = closure(generators, target, Some(target / 2))?;
    Ok(stopped || size == target)
}

fn closure(generators: &[Matrix], budget: u64, stop_above: Option<u64>) -> Result<(u64, bool)> {
    let first = generators.first().ok_or_else(|| invalid("no generators"))?;
    let id = Matrix::identity(first.field(), first.n());
    let key = |m: &Matrix| {
        m.key()
            .ok_or_else(|| Error::Overflow(format!("q^(n^2) too large for closure keys")))
    };
    let mut seen: HashSet<u128> = HashSet::new();
    seen.insert(key(&id)?);
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        for g in generators {
            let y = x.mul(g);
            if seen.insert(key(&y)?) {
                let size = seen.len() as u64;
                if stop_above.is_some_and(|s| size > s) {
                    return Ok((size, true));
                }
                if size > budget {
                    return Err(Error::Budget(format!("closure exceeded {budget} elements")));
                }
                frontier.push(y);
            }
        }
    }
    Ok((seen.len() as u64, false))
}

/// A uniformly random element of `G`, by rejection from all matrices.
pub fn random_element(g: &GroupSpec, rng: &mut impl Rng) -> Matrix {
    let n = g.n();
    let q = g.field().q();
    loop {
        let data = (0..n * n).map(|_| rng.gen_range(0..q)).collect();
        let m = Matrix::from_flat(g.field(), n, data).expect("entries in range");
        if g.contains(&m) {
            return m;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairOutcome {
    pub x: Member,
    pub y: Member,
    pub samples: usize,
    pub generated: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpotCheckReport {
    pub pairs: Vec<PairOutcome>,
}

impl SpotCheckReport {
    pub fn passed(&self) -> bool {
        self.pairs.iter().all(|p| p.generated == p.samples)
    }

    pub fn failures(&self) -> impl Iterator<Item = &PairOutcome> {
        self.pairs.iter().filter(|p| p.generated < p.samples)
    }
}

/// For each pair of distinct members `x, y` and each of `samples` random
/// `h` in `G`, tests whether `<x, y^h> = G`.
pub fn independence_spot_check(
    members: &[Member],
    g: &GroupSpec,
    samples: usize,
    seed: u64,
    limits: &Limits,
) -> Result<SpotCheckReport> {
    let order = g
        .order()
        .ok_or_else(|| Error::Overflow(format!("|G| for n = {}", g.n())))?;
    if order > limits.max_group_order {
        return Err(Error::Budget(format!(
            "|G| = {order} exceeds {}",
            limits.max_group_order
        )));
    }
    let mats = members
        .iter()
        .map(|m| m.matrix(g))
        .collect::<Result<Vec<_>>>()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::new();
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            if members[i] == members[j] {
                continue;
            }
            let mut generated = 0;
            for _ in 0..samples {
                let h = random_element(g, &mut rng);
                let y = h.inverse()?.mul(&mats[j]).mul(&h);
                if generates(&[mats[i].clone(), y], order)? {
                    generated += 1;
                }
            }
            pairs.push(PairOutcome {
                x: members[i],
                y: members[j],
                samples,
                generated,
            });
        }
    }
    Ok(SpotCheckReport { pairs })
}

/// [`independence_spot_check`] on all members of a witness, realised in `G`.
pub fn witness_spot_check(
    w: &KappaWitness,
    field: &Field,
    samples: usize,
    seed: u64,
    limits: &Limits,
) -> Result<SpotCheckReport> {
    let g = GroupSpec::new(w.n() as usize, field, w.kind())?;
    independence_spot_check(w.members(), &g, samples, seed, limits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covering::{build_c_p, build_c_p1p2, build_d, build_phi, Method};
    use crate::gf::FieldSpec;
    use crate::matgroup::{singer_gamma, GroupKind};
    use crate::numtheory::factorize;
    use proptest::prelude::*;

    fn gf(q: u64) -> Field {
        Field::new(FieldSpec::from_order(q).unwrap()).unwrap()
    }

    fn sh(e: &[(u32, u32)]) -> CharShape {
        CharShape::new(e.to_vec()).unwrap()
    }

    #[test]
    fn shape_universe_examples() {
        let l = Limits::default();
        assert_eq!(enumerate_shapes(2, 2, &l).unwrap(), vec![sh(&[(1, 2)]), sh(&[(2, 1)])]);
        assert_eq!(
            enumerate_shapes(2, 3, &l).unwrap(),
            vec![sh(&[(1, 1), (1, 1)]), sh(&[(1, 2)]), sh(&[(2, 1)])]
        );
        assert_eq!(enumerate_shapes(1, 2, &l).unwrap(), vec![sh(&[(1, 1)])]);
        assert!(enumerate_shapes(13, 2, &l).is_err());
        assert!(enumerate_shapes(4, 7, &l).is_err());
        assert!(enumerate_shapes(0, 2, &l).is_err());
    }

    #[test]
    fn gl_orders() {
        assert_eq!(gl_order(2, 2), Some(6));
        assert_eq!(gl_order(3, 2), Some(168));
        assert_eq!(gl_order(4, 2), Some(20160));
        assert_eq!(gl_order(5, 2), Some(9999360));
        assert_eq!(gl_order(3, 3), Some(11232));
    }

    // the shapes met by actual matrices are exactly the enumerated ones
    #[test]
    fn universe_matches_elements() {
        let l = Limits::default();
        for (n, q) in [(2u64, 2u64), (3, 2), (4, 2), (2, 3), (3, 3), (2, 4), (2, 5)] {
            let cert = build_c_p(n, factorize(n).unwrap().primes().next().unwrap()).unwrap();
            let er = exhaustive_element_check(&cert, &gf(q), &l).unwrap();
            assert_eq!(er.elements as u128, gl_order(n, q).unwrap());
            assert_eq!(er.shapes(), enumerate_shapes(n, q, &l).unwrap(), "n={n} q={q}");
            assert_eq!(er.uncovered_elements, 0);
        }
    }

    #[test]
    fn element_check_examples() {
        let l = Limits::default();
        let er = exhaustive_element_check(&build_c_p(4, 2).unwrap(), &gf(2), &l).unwrap();
        assert_eq!((er.elements, er.uncovered_elements), (20160, 0));
        let er = exhaustive_element_check(&build_c_p(2, 2).unwrap(), &gf(2), &l).unwrap();
        assert_eq!((er.elements, er.uncovered_elements), (6, 0));
        let id = build_c_p(3, 3).unwrap().covering_class(&sh(&[(1, 3)]));
        assert_eq!(id, Some(ClassDescriptor::Sss(1)));
        let tight = Limits { max_group_order: 1000, ..Limits::default() };
        assert!(matches!(
            exhaustive_element_check(&build_c_p(4, 2).unwrap(), &gf(2), &tight),
            Err(Error::Budget(_))
        ));
    }

    #[test]
    fn covers_examples() {
        let l = Limits::default();
        let r = check_cover(&build_c_p(4, 2).unwrap(), 2, &l).unwrap();
        assert!(r.verified());
        assert_eq!(r.covered, r.total_shapes);
        for q in 2..=5 {
            assert!(check_cover(&build_c_p1p2(6, 2, 3).unwrap(), q, &l).unwrap().verified());
        }
        for q in [2, 3] {
            assert!(check_cover(&build_d(8).unwrap(), q, &l).unwrap().verified());
        }
    }

    #[test]
    fn all_constructions_cover() {
        let l = Limits::default();
        for q in 2..=5u64 {
            for n in 2..=12u64 {
                let ps: Vec<u64> = factorize(n).unwrap().primes().collect();
                let shapes = enumerate_shapes(n, q, &l).unwrap();
                let mut certs = Vec::new();
                if n <= 8 {
                    certs.extend(ps.iter().map(|&p| build_c_p(n, p).unwrap()));
                }
                for &a in &ps {
                    for &b in ps.iter().filter(|&&b| b > a) {
                        certs.push(build_c_p1p2(n, a, b).unwrap());
                    }
                }
                if n > 6 {
                    certs.push(build_d(n).unwrap());
                }
                for c in &certs {
                    let r = evaluate_shapes(c, q, &shapes);
                    assert!(r.verified(), "n={n} q={q} {:?}: {:?}", c.method(), r.uncovered);
                    assert_eq!(r.covered + r.uncovered.len(), r.total_shapes);
                }
            }
        }
    }

    #[test]
    fn minimality_probe_examples() {
        let l = Limits::default();
        let cert = build_c_p(4, 2).unwrap();
        let probe = check_cover_minimality_probe(&cert, 2, &l).unwrap();
        assert_eq!(probe[0].0, ClassDescriptor::Efs(2));
        // over GF(2) there is only one irreducible quadratic
        assert_eq!(probe[0].1, Some(sh(&[(2, 2)])));
        assert_eq!(probe[1].0, ClassDescriptor::Sss(1));
        assert!(probe[1].1.is_some());
        let r = check_cover(&cert.without(1), 2, &l).unwrap();
        assert!(r.uncovered.contains(&sh(&[(1, 1), (3, 1)])));
        let at3 = check_cover(&cert.without(0), 3, &l).unwrap();
        assert!(at3.uncovered.contains(&sh(&[(2, 1), (2, 1)])));
    }

    #[test]
    fn uncovered_shapes_reported() {
        let l = Limits::default();
        let cert = build_c_p(4, 2).unwrap().without(0);
        assert_eq!(cert.method(), Method::Custom);
        let r = check_cover(&cert, 2, &l).unwrap();
        assert!(!r.verified());
        assert_eq!(r.uncovered, vec![sh(&[(2, 2)]), sh(&[(4, 1)])]);
        let classes: Vec<ClassDescriptor> = r.hits.iter().map(|h| h.0).collect();
        assert_eq!(classes, cert.classes());
        assert!(r.hits.iter().all(|h| h.1 <= r.covered));
        assert!(r.hits.iter().map(|h| h.1).sum::<usize>() >= r.covered);
        let er = exhaustive_element_check(&cert, &gf(2), &l).unwrap();
        assert_eq!(er.report.uncovered, r.uncovered);
        assert!(er.uncovered_elements > 0);
    }

    #[test]
    fn duality_across_universe() {
        let l = Limits::default();
        for q in [2u64, 3] {
            for n in 2..=9u64 {
                for s in enumerate_shapes(n, q, &l).unwrap() {
                    for k in 1..n as u32 {
                        assert_eq!(
                            member(&s, ClassDescriptor::Sss(k)),
                            member(&s, ClassDescriptor::Sss(n as u32 - k))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn closure_examples() {
        let f = gf(2);
        assert_eq!(subgroup_closure_order(&[Matrix::identity(&f, 3)], 10).unwrap(), 1);
        let t = Matrix::from_text(&f, "1,1,0;0,1,0;0,0,1").unwrap();
        let g = singer_gamma(3, &f).unwrap();
        assert_eq!(subgroup_closure_order(&[g.clone(), t.clone()], 1000).unwrap(), 168);
        assert!(generates(&[g.clone(), t], 168).unwrap());
        assert_eq!(subgroup_closure_order(&[g.clone()], 1000).unwrap(), 7);
        assert!(!generates(&[g.clone()], 168).unwrap());
        assert!(matches!(subgroup_closure_order(&[g], 3), Err(Error::Budget(_))));
        assert!(subgroup_closure_order(&[], 3).is_err());
    }

    #[test]
    fn random_elements_lie_in_group() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let g = GroupSpec::new(3, &gf(5), GroupKind::Sl).unwrap();
        for _ in 0..50 {
            assert_eq!(random_element(&g, &mut rng).det(), 1);
        }
    }

    #[test]
    fn spot_check_examples() {
        let l = Limits::default();
        let f = gf(2);
        let g = GroupSpec::new(4, &f, GroupKind::Gl).unwrap();
        let g6 = GroupSpec::new(6, &f, GroupKind::Gl).unwrap();
        assert!(matches!(
            independence_spot_check(&[Member::Gamma], &g6, 1, 1, &l),
            Err(Error::Budget(_))
        ));
        let same = independence_spot_check(&[Member::Sigma(1), Member::Sigma(1)], &g, 5, 1, &l).unwrap();
        assert!(same.pairs.is_empty());
        let ok = independence_spot_check(&[Member::Gamma, Member::Sigma(1)], &g, 30, 3, &l).unwrap();
        assert!(ok.passed(), "{:?}", ok.pairs);
    }

    #[test]
    fn reducible_pair_fails_to_generate() {
        let f = gf(2);
        let a = Matrix::from_text(&f, "1,0,0;0,1,1;0,1,0").unwrap();
        let b = Matrix::from_text(&f, "1,1,0;0,0,1;0,1,1").unwrap();
        // both fix the first basis vector
        assert!(!generates(&[a, b], 168).unwrap());
    }

    // Gamma_3 and Sigma_1 both normalise a Singer subgroup of order 7, so a
    // quarter of the conjugates land in the same 7:3.
    #[test]
    fn gl32_pair_generation_rate() {
        let f = gf(2);
        let g = GroupSpec::new(3, &f, GroupKind::Gl).unwrap();
        let gamma = Member::Gamma.matrix(&g).unwrap();
        let sigma = Member::Sigma(1).matrix(&g).unwrap();
        let mut generated = 0;
        let mut total = 0;
        for_each_invertible(&f, 3, &Limits::default(), |h| {
            let y = h.inverse().unwrap().mul(&sigma).mul(h);
            total += 1;
            if generates(&[gamma.clone(), y], 168).unwrap() {
                generated += 1;
            }
        })
        .unwrap();
        assert_eq!(total, 168);
        assert_eq!(generated, 126);
        let r = witness_spot_check(&build_phi(3).unwrap(), &f, 10, 1, &Limits::default());
        assert!(r.unwrap().pairs.is_empty());
    }

    fn report_strategy() -> impl Strategy<Value = Vec<CharShape>> {
        Just(enumerate_shapes(6, 2, &Limits::default()).unwrap()).prop_shuffle()
    }

    proptest! {
        #[test]
        fn merge_is_order_independent(shapes in report_strategy(), cut in 0usize..40) {
            let cert = build_c_p(6, 3).unwrap().without(1);
            let whole = evaluate_shapes(&cert, 2, &shapes);
            let cut = cut.min(shapes.len());
            let a = evaluate_shapes(&cert, 2, &shapes[..cut]);
            let b = evaluate_shapes(&cert, 2, &shapes[cut..]);
            prop_assert_eq!(a.clone().merge(b.clone()), whole.clone());
            prop_assert_eq!(b.merge(a), whole);
        }
    }
}
