//! Factorisation of polynomials over `GF(q)`: square-free decomposition,
//! distinct-degree splitting, then deterministic equal-degree splitting.

use alloc::vec;
use alloc::vec::Vec;

use super::field::Field;
use super::poly::Poly;
use crate::error::{invalid, Error, Result};
use crate::numtheory::{factorize, factorize_large, moebius};

/// Complete factorisation into monic irreducibles with multiplicities, sorted
/// by degree and then by coefficients. The leading coefficient is dropped.
pub fn factor(poly: &Poly) -> Result<Vec<(Poly, u32)>> {
    if poly.is_zero() {
        return Err(invalid("cannot factor the zero polynomial"));
    }
    let mut out = Vec::new();
    for (sqfree, mult) in square_free(&poly.monic()) {
        for (block, d) in distinct_degree(&sqfree) {
            for irr in equal_degree(&block, d) {
                out.push((irr, mult));
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Square-free decomposition of a monic polynomial: pairs `(g, m)` with `g`
/// square-free, pairwise coprime, and `poly = prod g^m`.
pub fn square_free(poly: &Poly) -> Vec<(Poly, u32)> {
    let mut out = Vec::new();
    if poly.is_constant() {
        return out;
    }
    let p = poly.field().p();
    let d = poly.derivative();
    let mut c = poly.gcd(&d);
    let mut w = poly.exact_div(&c);
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let fac = w.exact_div(&y);
        if !fac.is_one() {
            out.push((fac, i));
        }
        w = y;
        c = c.exact_div(&w);
        i += 1;
    }
    if !c.is_one() {
        for (g, m) in square_free(&c.pth_root()) {
            out.push((g, m * p));
        }
    }
    // the same square-free part can appear twice after the p-th root step
    out.sort_by(|a, b| a.1.cmp(&b.1));
    let mut merged: Vec<(Poly, u32)> = Vec::new();
    for (g, m) in out {
        match merged.iter_mut().find(|(_, mm)| *mm == m) {
            Some((h, _)) => *h = h.mul(&g),
            None => merged.push((g, m)),
        }
    }
    merged
}

/// Splits a monic square-free polynomial into products of irreducibles of
/// equal degree: pairs `(product, degree)`.
pub fn distinct_degree(poly: &Poly) -> Vec<(Poly, usize)> {
    let field = poly.field().clone();
    let mut out = Vec::new();
    let mut f = poly.clone();
    let x = Poly::x(&field);
    let mut h = x.rem(&f);
    let mut i = 0;
    while f.deg() >= 2 * (i + 1) {
        i += 1;
        h = h.frobenius_mod(1, &f);
        let g = h.sub(&x).gcd(&f);
        if !g.is_one() {
            f = f.exact_div(&g);
            h = h.rem(&f);
            out.push((g, i));
        }
    }
    if f.deg() > 0 {
        let d = f.deg();
        out.push((f, d));
    }
    out
}

/// Splits a monic square-free product of irreducibles of degree `d`. Splitting
/// candidates are tried in a fixed order, so the result is deterministic.
pub fn equal_degree(poly: &Poly, d: usize) -> Vec<Poly> {
    let n = poly.deg();
    if n == d {
        return vec![poly.clone()];
    }
    let field = poly.field().clone();
    let q = field.q() as u64;
    let mut candidate = q; // the polynomial x
    loop {
        let a = index_to_poly(&field, candidate);
        candidate += 1;
        if a.deg() >= n {
            // exhausted every candidate of lower degree; cannot happen for
            // a product of at least two irreducibles
            unreachable!("equal-degree split found no separating polynomial");
        }
        let b = splitting_map(&a, poly, d);
        let g = b.gcd(poly);
        if !g.is_one() && g.deg() < n {
            let mut out = equal_degree(&g, d);
            out.extend(equal_degree(&poly.exact_div(&g), d));
            return out;
        }
    }
}

fn index_to_poly(field: &Field, mut idx: u64) -> Poly {
    let q = field.q() as u64;
    let mut c = Vec::new();
    while idx > 0 {
        c.push((idx % q) as u32);
        idx /= q;
    }
    Poly::new(field, c)
}

// Odd q: a^((q^d-1)/2) - 1. Even q = 2^e: the absolute trace
// a + a^2 + ... + a^(2^(ed-1)).
fn splitting_map(a: &Poly, modulus: &Poly, d: usize) -> Poly {
    let field = a.field();
    let q = field.q();
    if q % 2 == 1 {
        // (q^d - 1)/2 = ((q-1)/2) (1 + q + ... + q^(d-1))
        let c = a.pow_mod(((q - 1) / 2) as u128, modulus);
        let mut t = c.clone();
        let mut acc = c;
        for _ in 1..d {
            t = t.frobenius_mod(1, modulus);
            acc = acc.mul_mod(&t, modulus);
        }
        acc.sub(&Poly::one(field))
    } else {
        let e = q.trailing_zeros() as usize;
        let mut t = a.rem(modulus);
        let mut acc = t.clone();
        for _ in 1..e * d {
            t = t.mul_mod(&t, modulus);
            acc = acc.add(&t);
        }
        acc
    }
}

/// Rabin's irreducibility test.
pub fn is_irreducible(poly: &Poly) -> bool {
    let Some(d) = poly.degree() else {
        return false;
    };
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    let f = poly.monic();
    let x = Poly::x(f.field());
    if f.coeff(0) == 0 {
        return false;
    }
    if x.frobenius_mod(d, &f) != x.rem(&f) {
        return false;
    }
    let dd = factorize(d as u64).expect("d >= 1");
    let ok = dd.primes().all(|r| {
        let h = x.frobenius_mod(d / r as usize, &f);
        h.sub(&x).gcd(&f).is_one()
    });
    ok
}

/// Whether the monic irreducible `poly` has a root of multiplicative order
/// `q^d - 1`.
pub fn is_primitive(poly: &Poly) -> Result<bool> {
    let d = poly.deg() as u32;
    if d == 0 || !is_irreducible(poly) {
        return Ok(false);
    }
    let q = poly.field().q() as u64;
    let order = q
        .checked_pow(d)
        .ok_or_else(|| Error::Overflow(alloc::format!("{q}^{d}")))?
        - 1;
    let f = poly.monic();
    let x = Poly::x(f.field());
    let one = Poly::one(f.field());
    let primes = factorize_large(order)?;
    let primitive = primes
        .primes()
        .all(|r| x.pow_mod((order / r) as u128, &f) != one);
    Ok(primitive)
}

/// Number of monic irreducibles of degree `d` over `GF(q)`, by the Möbius
/// formula `(1/d) sum_{e | d} mu(d/e) q^e`.
pub fn count_irreducibles(q: u64, d: u32) -> u128 {
    assert!(d >= 1);
    let divs = factorize(d as u64).expect("d >= 1").divisors();
    let total: i128 = divs
        .into_iter()
        .map(|e| moebius(d as u64 / e) as i128 * (q as i128).pow(e as u32))
        .sum();
    (total / d as i128) as u128
}

/// Upper limit on `q^d` for [`irreducibles`].
pub const IRREDUCIBLE_SIEVE_LIMIT: u64 = 1 << 28;

/// All monic irreducibles of degree `d`, in encoding order, by sieving out
/// products of lower-degree irreducibles.
pub fn irreducibles(field: &Field, d: usize, exclude_x: bool) -> Result<Vec<Poly>> {
    if d == 0 {
        return Err(invalid("degree must be at least 1"));
    }
    let q = field.q() as u64;
    if q.checked_pow(d as u32).is_none_or(|t| t > IRREDUCIBLE_SIEVE_LIMIT) {
        return Err(Error::Overflow(alloc::format!(
            "q^d too large for sieve (q = {q}, d = {d})"
        )));
    }
    // lower coefficients (without the leading 1) of the irreducibles by degree
    let mut by_degree: Vec<Vec<Vec<u32>>> = vec![Vec::new(); d + 1];
    for deg in 1..=d {
        if deg < d && deg > d / 2 {
            continue;
        }
        let size = q.pow(deg as u32) as usize;
        let mut composite = vec![false; size];
        let mut prod = vec![0u32; deg + 1];
        for i in 1..=deg / 2 {
            let j = deg - i;
            let mut h = vec![0u32; j];
            for g in &by_degree[i] {
                h.iter_mut().for_each(|c| *c = 0);
                loop {
                    monic_product(field, g, &h, &mut prod);
                    let idx = prod[..deg].iter().rev().fold(0u64, |acc, &x| acc * q + x as u64);
                    composite[idx as usize] = true;
                    if !increment(&mut h, q as u32) {
                        break;
                    }
                }
            }
        }
        by_degree[deg] = (0..size)
            .filter(|&i| !composite[i])
            .map(|i| {
                let mut c = Vec::with_capacity(deg);
                let mut v = i as u64;
                for _ in 0..deg {
                    c.push((v % q) as u32);
                    v /= q;
                }
                c
            })
            .collect();
    }
    let mut out: Vec<Poly> = core::mem::take(&mut by_degree[d])
        .into_iter()
        .map(|mut c| {
            c.push(1);
            Poly::new(field, c)
        })
        .collect();
    if exclude_x && d == 1 {
        out.retain(|p| p.coeff(0) != 0);
    }
    Ok(out)
}

// product of two monic polynomials given by their lower coefficients
fn monic_product(field: &Field, a: &[u32], b: &[u32], out: &mut [u32]) {
    out.iter_mut().for_each(|c| *c = 0);
    let (da, db) = (a.len(), b.len());
    for i in 0..=da {
        let ai = if i == da { 1 } else { a[i] };
        if ai == 0 {
            continue;
        }
        for j in 0..=db {
            let bj = if j == db { 1 } else { b[j] };
            out[i + j] = field.add(out[i + j], field.mul(ai, bj));
        }
    }
}

fn increment(digits: &mut [u32], q: u32) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < q {
            return true;
        }
        *d = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::field;
    use proptest::prelude::*;

    fn poly(f: &Field, c: &[u32]) -> Poly {
        Poly::new(f, c.to_vec())
    }

    #[test]
    fn factor_examples() {
        let f = field(2, 1).unwrap();
        assert_eq!(
            factor(&poly(&f, &[0, 1, 1])).unwrap(),
            vec![(poly(&f, &[0, 1]), 1), (poly(&f, &[1, 1]), 1)]
        );
        let c = poly(&f, &[1, 1, 0, 1]);
        assert_eq!(factor(&c).unwrap(), vec![(c.clone(), 1)]);
        let q = poly(&f, &[1, 1, 1]);
        assert_eq!(factor(&q.mul(&q)).unwrap(), vec![(q, 2)]);
        assert!(factor(&Poly::zero(&f)).is_err());
        assert!(factor(&Poly::one(&f)).unwrap().is_empty());
    }

    #[test]
    fn factor_drops_leading_coefficient() {
        let f = field(5, 1).unwrap();
        let p = Poly::linear(&f, 1).mul(&Poly::linear(&f, 1)).scale(3);
        assert_eq!(factor(&p).unwrap(), vec![(Poly::linear(&f, 1), 2)]);
    }

    #[test]
    fn high_multiplicity_in_small_characteristic() {
        for (p, e) in [(2, 1), (3, 1), (2, 2)] {
            let f = field(p, e).unwrap();
            let g = Poly::linear(&f, 1);
            let h = poly(&f, &[1, 1, 1]);
            let mut prod = Poly::one(&f);
            for _ in 0..(2 * p as usize + 1) {
                prod = prod.mul(&g);
            }
            for _ in 0..p as usize {
                prod = prod.mul(&h);
            }
            let fac = factor(&prod).unwrap();
            let rebuilt = fac.iter().fold(Poly::one(&f), |acc, (g, m)| {
                (0..*m).fold(acc, |a, _| a.mul(g))
            });
            assert_eq!(rebuilt, prod);
            assert!(fac.iter().all(|(g, _)| is_irreducible(g)));
        }
    }

    #[test]
    fn irreducible_counts() {
        assert_eq!(count_irreducibles(2, 1), 2);
        assert_eq!(count_irreducibles(2, 4), 3);
        assert_eq!(count_irreducibles(3, 2), 3);
        let f2 = field(2, 1).unwrap();
        assert_eq!(irreducibles(&f2, 1, true).unwrap(), vec![poly(&f2, &[1, 1])]);
        for q in [2u32, 3, 4, 5, 7] {
            let spec = crate::gf::FieldSpec::from_order(q as u64).unwrap();
            let f = crate::gf::Field::new(spec).unwrap();
            for d in 1..=8usize {
                if (q as u64).pow(d as u32) > 1 << 20 {
                    continue;
                }
                let list = irreducibles(&f, d, true).unwrap();
                let extra = u128::from(d == 1);
                assert_eq!(list.len() as u128 + extra, count_irreducibles(q as u64, d as u32), "q={q} d={d}");
                assert!(list.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }

    // every enumerated irreducible of degree d divides x^(q^d) - x and no
    // x^(q^e) - x for a proper divisor e of d
    #[test]
    fn enumerated_irreducibles_divide_the_right_polynomials() {
        for q in [2u32, 3, 4] {
            let spec = crate::gf::FieldSpec::from_order(q as u64).unwrap();
            let f = crate::gf::Field::new(spec).unwrap();
            let x = Poly::x(&f);
            for d in 1..=6usize {
                for g in irreducibles(&f, d, false).unwrap() {
                    assert!(x.frobenius_mod(d, &g).sub(&x).rem(&g).is_zero());
                    for e in (1..d).filter(|e| d % e == 0) {
                        assert!(!x.frobenius_mod(e, &g).sub(&x).rem(&g).is_zero());
                    }
                    // Rabin agrees with the sieve
                    assert!(is_irreducible(&g));
                }
            }
        }
    }

    #[test]
    fn rabin_matches_sieve_on_all_cubics() {
        let f = field(3, 1).unwrap();
        let sieve = irreducibles(&f, 3, false).unwrap();
        let rabin: Vec<Poly> = (0..27)
            .map(|i| Poly::monic_from_index(&f, 3, i))
            .filter(is_irreducible)
            .collect();
        assert_eq!(sieve, rabin);
    }

    #[test]
    fn primitive_polynomials() {
        let f = field(2, 1).unwrap();
        assert!(is_primitive(&poly(&f, &[1, 1, 0, 1])).unwrap());
        // x^4+x^3+x^2+x+1 is irreducible with roots of order 5
        let p = poly(&f, &[1, 1, 1, 1, 1]);
        assert!(is_irreducible(&p));
        assert!(!is_primitive(&p).unwrap());
    }

    fn field_strategy() -> impl Strategy<Value = Field> {
        prop::sample::select(vec![(2u32, 1u32), (3, 1), (2, 2), (5, 1)])
            .prop_map(|(p, e)| field(p, e).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn factor_round_trips_products(
            f in field_strategy(),
            picks in prop::collection::vec((1usize..=4, 0usize..1000, 1u32..=3), 1..5),
        ) {
            let mut prod = Poly::one(&f);
            for (d, i, m) in picks {
                if prod.deg() + d * m as usize > 12 {
                    continue;
                }
                let list = irreducibles(&f, d, false).unwrap();
                let g = &list[i % list.len()];
                for _ in 0..m {
                    prod = prod.mul(g);
                }
            }
            let fac = factor(&prod).unwrap();
            let rebuilt = fac.iter().fold(Poly::one(&f), |acc, (g, m)| {
                (0..*m).fold(acc, |a, _| a.mul(g))
            });
            prop_assert_eq!(rebuilt, prod);
            prop_assert!(fac.iter().all(|(g, _)| is_irreducible(g) && g.is_monic()));
            prop_assert!(fac.windows(2).all(|w| w[0].0 < w[1].0));
        }
    }
}
