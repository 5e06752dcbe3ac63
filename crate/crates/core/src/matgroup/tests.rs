use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use proptest::prelude::*;

use super::*;
use crate::gf::{factor, field, is_irreducible, Field, FieldSpec, Poly};

fn gf(q: u64) -> Field {
    Field::new(FieldSpec::from_order(q).unwrap()).unwrap()
}

fn group(n: usize, q: u64, kind: GroupKind) -> GroupSpec {
    GroupSpec::new(n, &gf(q), kind).unwrap()
}

// every matrix of size n over the field, invertible or not
fn all_matrices(f: &Field, n: usize) -> Vec<Matrix> {
    let q = f.q();
    let cells = n * n;
    let total = (q as usize).pow(cells as u32);
    (0..total)
        .map(|mut idx| {
            let data = (0..cells)
                .map(|_| {
                    let v = (idx % q as usize) as u32;
                    idx /= q as usize;
                    v
                })
                .collect();
            Matrix::from_flat(f, n, data).unwrap()
        })
        .collect()
}

#[test]
fn companion_and_det_examples() {
    let f2 = field(2, 1).unwrap();
    let c = Matrix::companion(&Poly::from_text(&f2, "1,1,1").unwrap()).unwrap();
    assert_eq!(c.det(), 1);
    let f5 = field(5, 1).unwrap();
    let d = Matrix::block_diag(&[
        Matrix::from_rows(&f5, &[vec![2]]).unwrap(),
        Matrix::from_rows(&f5, &[vec![3]]).unwrap(),
    ])
    .unwrap();
    assert_eq!(d.det(), 1);
    let f3 = field(3, 1).unwrap();
    let id = Matrix::identity(&f3, 2);
    assert_eq!(id.char_poly(), Poly::linear(&f3, 1).mul(&Poly::linear(&f3, 1)));
    assert!(Matrix::companion(&Poly::from_text(&f2, "0,1").unwrap()).is_err());
    assert!(Matrix::companion(&Poly::one(&f2)).is_err());
}

#[test]
fn companion_char_poly_round_trips() {
    for q in [2u64, 3, 4, 5] {
        let f = gf(q);
        for d in 1..=5usize {
            for i in (0..(q as u64).pow(d as u32)).step_by(7) {
                let p = Poly::monic_from_index(&f, d, i);
                if p.coeff(0) == 0 {
                    continue;
                }
                assert_eq!(Matrix::companion(&p).unwrap().char_poly(), p);
            }
        }
    }
}

// char_poly(c) must equal det(cI - A) at every point; with q > n this pins
// the polynomial down
#[test]
fn char_poly_agrees_with_determinants() {
    let f = field(7, 1).unwrap();
    let mut seed = 1u64;
    for n in 1..=6usize {
        for _ in 0..30 {
            let data = (0..n * n)
                .map(|_| {
                    seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    ((seed >> 33) % 7) as u32
                })
                .collect();
            let a = Matrix::from_flat(&f, n, data).unwrap();
            let cp = a.char_poly();
            assert_eq!(cp.deg(), n);
            assert!(cp.is_monic());
            for c in 0..7 {
                let mut m = a.clone();
                for i in 0..n {
                    for j in 0..n {
                        let v = if i == j { f.sub(c, a.get(i, j)) } else { f.neg(a.get(i, j)) };
                        m.set(i, j, v);
                    }
                }
                assert_eq!(cp.eval(c), m.det());
            }
        }
    }
}

#[test]
fn inverse_and_text() {
    let f = field(3, 1).unwrap();
    let m = Matrix::from_text(&f, "1,2;0,1").unwrap();
    assert_eq!(m.to_text(), "1,2;0,1");
    assert!(m.mul(&m.inverse().unwrap()).is_identity());
    assert!(Matrix::from_text(&f, "1,2;1,2").unwrap().inverse().is_err());
    assert!(Matrix::from_text(&f, "1,2,0;1,2").is_err());
    assert!(Matrix::from_text(&f, "1,3;0,1").is_err());
}

#[test]
fn alpha_values() {
    assert_eq!(group(4, 3, GroupKind::Sl).alpha(), 0);
    assert_eq!(group(4, 3, GroupKind::Gl).alpha(), -1);
    assert_eq!(group(4, 5, GroupKind::Intermediate(2)).alpha(), -2);
    // GL_n(2) is SL_n(2)
    assert_eq!(group(4, 2, GroupKind::Gl).alpha(), 0);
    assert!(GroupSpec::new(4, &gf(5), GroupKind::Intermediate(3)).is_err());
    assert!(GroupSpec::new(4, &gf(5), GroupKind::Intermediate(4)).is_err());
    assert!(GroupSpec::new(1, &gf(5), GroupKind::Gl).is_err());
    for q in [2u64, 3, 4, 5, 7, 9, 13] {
        let q1 = q as i64 - 1;
        let mut kinds = vec![GroupKind::Sl, GroupKind::Gl];
        kinds.extend((2..q1).filter(|m| q1 % m == 0).map(|m| GroupKind::Intermediate(m as u64)));
        for kind in kinds {
            let a = group(3, q, kind).alpha();
            assert!((1 - q as i64) < a && a <= 0);
        }
    }
}

#[test]
fn group_orders() {
    assert_eq!(group(3, 2, GroupKind::Gl).order(), Some(168));
    assert_eq!(group(2, 3, GroupKind::Gl).order(), Some(48));
    assert_eq!(group(2, 3, GroupKind::Sl).order(), Some(24));
    assert_eq!(group(4, 2, GroupKind::Gl).order(), Some(20160));
}

#[test]
fn singer_examples() {
    let f2 = gf(2);
    let g = singer_gamma(3, &f2).unwrap();
    assert_eq!(g.order().unwrap(), 7);
    assert_eq!(g.det(), 1);
    let t = singer_polynomial(&f2, 3).unwrap().to_text();
    assert!(t == "1,1,0,1" || t == "1,0,1,1");
    let f5 = gf(5);
    assert_eq!(singer_gamma(1, &f5).unwrap().to_text(), "2");
    let f3 = gf(3);
    let p = singer_polynomial(&f3, 2).unwrap();
    assert_eq!(p.coeff(0), 2);
    assert_eq!(p.to_text(), "2,1,1");
    assert_eq!(singer_gamma(4, &f3).unwrap().order().unwrap(), 80);
    assert_eq!(element_order(&Matrix::identity(&f3, 3)).unwrap(), 1);
}

#[test]
fn singer_elements_have_full_order_and_det_zeta() {
    for q in [2u64, 3, 4, 5, 7] {
        let f = gf(q);
        for d in 1..=8usize {
            let g = singer_gamma(d, &f).unwrap();
            assert_eq!(g.order().unwrap(), q.pow(d as u32) - 1, "q={q} d={d}");
            assert_eq!(g.det(), f.generator(), "q={q} d={d}");
        }
    }
}

#[test]
fn sigma_examples() {
    let g = group(5, 2, GroupKind::Sl);
    let s = g.sigma_k(1).unwrap();
    assert_eq!(s.det(), 1);
    assert_eq!(s.get(0, 0), 1);
    let shape = char_shape(&s).unwrap();
    assert_eq!(shape.entries(), &[(1, 1), (4, 1)]);

    let g = group(4, 3, GroupKind::Gl);
    let s = g.sigma_k(1).unwrap();
    let zeta = g.zeta();
    assert_eq!(s.det(), g.field().inv(zeta).unwrap());
    assert!(g.sigma_k(3).is_err());
    assert!(g.sigma_k(0).is_err());
}

#[test]
fn t_j_examples() {
    let g = group(13, 2, GroupKind::Sl);
    let degs = |m: &Matrix| -> Vec<u32> {
        char_shape(m).unwrap().entries().iter().map(|&(d, _)| d).collect()
    };
    assert_eq!(degs(&g.t_j(1).unwrap()), vec![1, 2, 10]);
    assert_eq!(degs(&g.t_j(2).unwrap()), vec![2, 3, 8]);
    assert!(g.t_j(3).is_err());
    let g = group(13, 3, GroupKind::Gl);
    assert_eq!(g.t_j(1).unwrap().det(), g.field().inv(g.zeta()).unwrap());
}

#[test]
fn y_examples() {
    let g = group(70, 2, GroupKind::Sl);
    let y = g.y_10p().unwrap();
    assert_eq!(y.det(), 1);
    let shape = char_shape(&y).unwrap();
    assert_eq!(shape.entries(), &[(5, 1), (7, 1), (58, 1)]);
    assert!(group(30, 2, GroupKind::Sl).y_10p().is_err());
    assert!(group(50, 2, GroupKind::Sl).y_10p().is_err());
}

#[test]
fn g_lambda_examples() {
    let g = group(6, 3, GroupKind::Sl);
    let m = g.g_lambda((1, 1, 4)).unwrap();
    assert_eq!(m.det(), 1);
    let shape = char_shape(&m).unwrap();
    assert_eq!(shape.degrees().collect::<Vec<_>>(), vec![1, 1, 4]);
    let m = g.g_lambda((1, 2, 3)).unwrap();
    assert_eq!(char_shape(&m).unwrap().entries(), &[(1, 1), (2, 1), (3, 1)]);
    assert!(g.g_lambda((2, 2, 2)).is_err());
    assert!(g.g_lambda((1, 2, 2)).is_err());
    assert!(g.g_lambda((3, 2, 1)).is_err());
}

#[test]
fn omega_examples() {
    let g = group(3, 2, GroupKind::Sl);
    let o = g.omega_singer().unwrap();
    assert_eq!(o.matrix, singer_gamma(3, g.field()).unwrap());
    assert!(o.irreducible);
    let g = group(3, 3, GroupKind::Gl);
    assert_eq!(g.omega_singer().unwrap().matrix, singer_gamma(3, g.field()).unwrap());
    let g = group(4, 5, GroupKind::Gl);
    let o = g.omega_singer().unwrap();
    assert_eq!(o.matrix.det(), g.witness_det());
    assert!(g.contains(&o.matrix));
}

// determinants and first-block irreducibility for every legal parameter
#[test]
fn witness_determinants_and_irreducible_blocks() {
    for q in [2u64, 3, 4, 5] {
        for kind in [GroupKind::Sl, GroupKind::Gl] {
            for n in [5usize, 8, 11] {
                let g = group(n, q, kind);
                let target = g.witness_det();
                for k in 1..=n / 2 {
                    if let Ok(s) = g.sigma_k(k) {
                        assert_eq!(s.det(), target);
                        assert!(g.contains(&s));
                    }
                }
                for j in (1..n).take_while(|j| 4 * j + 2 < n) {
                    assert_eq!(g.t_j(j).unwrap().det(), target);
                }
                let a = g.alpha();
                for d in 1..=4usize {
                    let gamma = singer_gamma(d, g.field()).unwrap();
                    let ord = q.pow(d as u32) as i128 - 1;
                    for e in [a - 1, a - 2] {
                        let p = gamma.pow((e as i128).rem_euclid(ord) as u128);
                        assert!(is_irreducible(&p.char_poly()), "q={q} d={d} e={e}");
                    }
                }
            }
        }
    }
}

#[test]
fn shape_invariant_dims() {
    let s = CharShape::new(vec![(2, 1), (3, 1)]).unwrap();
    assert_eq!(invariant_dims(&s), vec![0, 2, 3, 5]);
    let s = CharShape::new(vec![(1, 2), (3, 1)]).unwrap();
    assert_eq!(s.invariant_dims(), vec![0, 1, 2, 3, 4, 5]);
    let s = CharShape::new(vec![(4, 1)]).unwrap();
    assert_eq!(s.invariant_dims(), vec![0, 4]);
    assert!(CharShape::new(vec![(0, 1)]).is_err());
    assert!(CharShape::new(vec![(1, 0)]).is_err());
}

// Brute force: all subspaces of GF(q)^n as sorted vector-index lists.
fn all_subspaces(f: &Field, n: usize) -> Vec<(usize, Vec<u32>)> {
    let q = f.q();
    let total = q.pow(n as u32);
    let to_vec = |mut i: u32| -> Vec<u32> {
        (0..n)
            .map(|_| {
                let v = i % q;
                i /= q;
                v
            })
            .collect()
    };
    let to_idx = |v: &[u32]| v.iter().rev().fold(0, |acc, &c| acc * q + c);
    let mut found: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut frontier: Vec<BTreeSet<u32>> = vec![[0u32].into_iter().collect()];
    while let Some(space) = frontier.pop() {
        if !found.insert(space.iter().copied().collect()) {
            continue;
        }
        for v in 0..total {
            if space.contains(&v) {
                continue;
            }
            let mut next = space.clone();
            let vv = to_vec(v);
            for &w in &space {
                let ww = to_vec(w);
                for c in 1..q {
                    let s: Vec<u32> = ww.iter().zip(&vv).map(|(&a, &b)| f.add(a, f.mul(c, b))).collect();
                    next.insert(to_idx(&s));
                }
            }
            frontier.push(next);
        }
    }
    found
        .into_iter()
        .map(|s| {
            let dim = (s.len() as f64).log(q as f64).round() as usize;
            (dim, s)
        })
        .collect()
}

#[test]
fn invariant_dims_match_subspace_enumeration() {
    for (n, q) in [(3usize, 2u64), (2, 3)] {
        let f = gf(q);
        let spaces = all_subspaces(&f, n);
        assert_eq!(spaces.len(), if q == 2 { 16 } else { 6 });
        let qq = q as u32;
        let to_vec = |mut i: u32| -> Vec<u32> {
            (0..n)
                .map(|_| {
                    let v = i % qq;
                    i /= qq;
                    v
                })
                .collect()
        };
        let to_idx = |v: &[u32]| v.iter().rev().fold(0, |acc, &c| acc * qq + c);
        let mut count = 0;
        for m in all_matrices(&f, n) {
            if !m.is_invertible() {
                continue;
            }
            count += 1;
            let dims: BTreeSet<u32> = spaces
                .iter()
                .filter(|(_, s)| s.iter().all(|&v| s.binary_search(&to_idx(&m.mul_vec(&to_vec(v)))).is_ok()))
                .map(|(d, _)| *d as u32)
                .collect();
            let shape = char_shape(&m).unwrap();
            assert_eq!(shape.invariant_dims(), dims.into_iter().collect::<Vec<_>>());
            assert_eq!(shape.total() as usize, n);
        }
        assert_eq!(count, if q == 2 { 168 } else { 48 });
    }
}

#[test]
fn char_shape_of_factors() {
    let f = gf(2);
    let p = Poly::from_text(&f, "1,1,1").unwrap();
    let m = Matrix::block_diag(&[
        Matrix::companion(&p).unwrap(),
        Matrix::companion(&p).unwrap(),
        Matrix::identity(&f, 1),
    ])
    .unwrap();
    assert_eq!(char_shape(&m).unwrap().entries(), &[(1, 1), (2, 2)]);
    assert_eq!(factor(&m.char_poly()).unwrap().len(), 2);
}

fn shape_strategy() -> impl Strategy<Value = CharShape> {
    prop::collection::vec((1u32..6, 1u32..4), 1..5).prop_map(|e| CharShape::new(e).unwrap())
}

proptest! {
    #[test]
    fn invariant_dims_are_self_dual(s in shape_strategy()) {
        let n = s.total();
        let dims = s.invariant_dims();
        let dual: Vec<u32> = dims.iter().rev().map(|d| n - d).collect();
        prop_assert_eq!(&dims, &dual);
        prop_assert_eq!(dims.first(), Some(&0));
        prop_assert_eq!(dims.last(), Some(&n));
    }

    #[test]
    fn block_diag_det_is_product(a in 1u32..5, b in 1u32..5, c in 1u32..5) {
        let f = gf(5);
        let m = Matrix::block_diag(&[
            Matrix::from_rows(&f, &[vec![a]]).unwrap(),
            Matrix::companion(&Poly::new(&f, vec![b, 1, 1])).unwrap(),
            Matrix::from_rows(&f, &[vec![c]]).unwrap(),
        ]).unwrap();
        prop_assert_eq!(m.det(), f.mul(f.mul(a, b), c));
    }
}
