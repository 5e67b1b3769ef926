use std::collections::BTreeMap;

use koszul_core::glinalg::bimodule::shifted_name;
use koszul_core::glinalg::*;
use num_integer::Integer;
use proptest::prelude::*;

fn perms(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = vec![];
    for p in perms(n - 1) {
        for k in 0..n {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out
}

fn reduced(x: &Scalar) -> bool {
    x.denom() > &0.into() && x.numer().gcd(x.denom()) == 1.into()
}

/// Sign by physically bubble-sorting the word and counting odd-odd swaps.
fn bubble_sign(perm: &[usize], degrees: &[i64]) -> i64 {
    let mut word: Vec<usize> = perm.to_vec();
    let mut sign = 1;
    for i in 0..word.len() {
        for j in 0..word.len() - 1 - i {
            if word[j] > word[j + 1] {
                if degrees[word[j]] % 2 != 0 && degrees[word[j + 1]] % 2 != 0 {
                    sign = -sign;
                }
                word.swap(j, j + 1);
            }
        }
    }
    sign
}

#[test]
fn koszul_sign_examples() {
    assert_eq!(koszul_sign(&[0, 1, 2], &[1, 3, 5]).unwrap(), Scalar::one());
    assert_eq!(koszul_sign(&[1, 0], &[1, 1]).unwrap(), -Scalar::one());
    assert_eq!(koszul_sign(&[1, 0], &[1, 2]).unwrap(), Scalar::one());
    assert_eq!(koszul_sign_1based(&[2, 1], &[1, 1]).unwrap(), -Scalar::one());
    assert!(koszul_sign(&[0, 0], &[1, 1]).is_err());
    assert!(koszul_sign(&[0], &[1, 1]).is_err());
}

#[test]
fn koszul_sign_matches_bubble_sort_on_s4() {
    for degrees in [[1, 1, 1, 1], [0, 1, 2, 3], [1, -1, 2, 1], [2, 2, 0, 4]] {
        for p in perms(4) {
            assert_eq!(koszul_sign(&p, &degrees).unwrap(), Scalar::int(bubble_sign(&p, &degrees)), "{p:?} {degrees:?}");
        }
    }
}

/// The regular representation of S3: basis e_p, sigma e_p = e_{sigma p}.
fn regular_s3() -> (SBimodule, Vec<Vec<usize>>) {
    let ps = perms(3);
    let b = Biarity::new(1, 3);
    let names: Vec<String> = ps.iter().map(|p| format!("e{p:?}")).collect();
    let space = GradedBasisSpace::new(names.iter().map(|n| (n.as_str(), 0)).collect()).unwrap();
    let mut m = SBimodule::default();
    m.components.insert(b, space);
    for g in 0..2 {
        let mut s: Vec<usize> = (0..3).collect();
        s.swap(g, g + 1);
        m.actions.insert((b, Side::Right, g), rho(&ps, &s));
    }
    (m, ps)
}

fn compose(s: &[usize], p: &[usize]) -> Vec<usize> {
    p.iter().map(|&k| s[k]).collect()
}

fn rho(ps: &[Vec<usize>], s: &[usize]) -> Matrix {
    let mut m = Matrix::zeros(ps.len(), ps.len());
    for (j, p) in ps.iter().enumerate() {
        let i = ps.iter().position(|q| *q == compose(s, p)).unwrap();
        m[(i, j)] = Scalar::one();
    }
    m
}

#[test]
fn action_is_a_homomorphism() {
    let (m, ps) = regular_s3();
    m.validate().unwrap();
    let b = Biarity::new(1, 3);
    assert_eq!(m.action(b, Side::Right, &[0, 1, 2]).unwrap(), Matrix::identity(6));
    for s in &ps {
        assert_eq!(m.action(b, Side::Right, s).unwrap(), rho(&ps, s), "{s:?}");
        for t in &ps {
            let st = m.action(b, Side::Right, &compose(s, t)).unwrap();
            let prod = m.action(b, Side::Right, s).unwrap().mul(&m.action(b, Side::Right, t).unwrap()).unwrap();
            assert_eq!(st, prod);
        }
    }
}

#[test]
fn validate_rejects_degree_mixing_actions() {
    let b = Biarity::new(1, 2);
    let mut m = SBimodule::default();
    m.components.insert(b, GradedBasisSpace::new(vec![("x", 0), ("y", 1)]).unwrap());
    let swap = Matrix::from_rows(vec![vec![Scalar::zero(), Scalar::one()], vec![Scalar::one(), Scalar::zero()]]).unwrap();
    m.actions.insert((b, Side::Right, 0), swap);
    assert!(m.validate().is_err());
}

#[test]
fn unit_bimodule() {
    let i = SBimodule::unit();
    assert_eq!(i.components.len(), 1);
    let space = &i.components[&Biarity::UNIT];
    assert_eq!(space.basis[0].name, "id");
    assert_eq!(space.basis[0].degree, 0);
}

#[test]
fn duplicate_basis_names_are_rejected() {
    assert!(GradedBasisSpace::new(vec![("x", 0), ("x", 1)]).is_err());
}

fn swap_module() -> SBimodule {
    let b = Biarity::new(1, 2);
    let mut m = SBimodule::default();
    m.components.insert(b, GradedBasisSpace::new(vec![("x", 1), ("y", 1)]).unwrap());
    let swap = Matrix::from_rows(vec![vec![Scalar::zero(), Scalar::one()], vec![Scalar::one(), Scalar::zero()]]).unwrap();
    m.actions.insert((b, Side::Right, 0), swap);
    m
}

fn sym_map(m: &SBimodule, a: i64, c: i64) -> SMap {
    let block = Matrix::from_rows(vec![vec![Scalar::int(a), Scalar::int(c)], vec![Scalar::int(c), Scalar::int(a)]]).unwrap();
    SMap { source: m.clone(), target: m.clone(), degree: 0, blocks: BTreeMap::from([(Biarity::new(1, 2), block)]) }
}

#[test]
fn shift_roundtrip_and_degrees() {
    let m = swap_module();
    let s = suspend(&m, 1);
    assert_eq!(s.components[&Biarity::new(1, 2)].basis[0].degree, 2);
    assert_eq!(s.components[&Biarity::new(1, 2)].basis[0].name, "s^1(x)");
    assert_eq!(suspend(&s, -1), m);
    assert_eq!(shifted_name("s^2(x)", -2), "x");
    let mut g = SBimodule::default();
    g.components.insert(Biarity::UNIT, GradedBasisSpace::new(vec![("g", 0)]).unwrap());
    assert_eq!(suspend(&g, 1).components[&Biarity::UNIT].basis[0].degree, 1);
}

#[test]
fn smap_identity_and_zero() {
    let m = swap_module();
    let f = sym_map(&m, 2, -3);
    f.validate().unwrap();
    let id = SMap::identity(&m);
    assert_eq!(compose_smap(&id, &f).unwrap(), f);
    assert_eq!(compose_smap(&f, &id).unwrap(), f);
    let z = SMap::zero(m.clone(), m.clone(), 0);
    assert!(compose_smap(&f, &z).unwrap().blocks.values().all(Matrix::is_zero));
    let odd = SMap { degree: 1, ..z.clone() };
    assert_eq!(compose_smap(&odd, &f).unwrap().degree, 1);
}

#[test]
fn non_equivariant_map_is_rejected() {
    let m = swap_module();
    let block = Matrix::from_rows(vec![vec![Scalar::one(), Scalar::zero()], vec![Scalar::zero(), Scalar::zero()]]).unwrap();
    let f = SMap { source: m.clone(), target: m, degree: 0, blocks: BTreeMap::from([(Biarity::new(1, 2), block)]) };
    assert!(f.validate().is_err());
}

#[test]
fn suspended_differential_squares_to_zero() {
    // x (degree 1) -> 3 y (degree 0), a two-generator complex.
    let mut m = SBimodule::default();
    m.components.insert(Biarity::UNIT, GradedBasisSpace::new(vec![("x", 1), ("y", 0)]).unwrap());
    let block = Matrix::from_rows(vec![vec![Scalar::zero(), Scalar::zero()], vec![Scalar::int(3), Scalar::zero()]]).unwrap();
    let d = SMap { source: m.clone(), target: m, degree: -1, blocks: BTreeMap::from([(Biarity::UNIT, block.clone())]) };
    d.validate().unwrap();
    let sd = suspend_smap(&d, 1);
    sd.validate().unwrap();
    assert_eq!(sd.blocks[&Biarity::UNIT], block.scale(&-Scalar::one()));
    assert!(compose_smap(&sd, &sd).unwrap().blocks.values().all(Matrix::is_zero));
    assert_eq!(suspend_smap(&sd, -1), d);
}

proptest! {
    #[test]
    fn scalars_stay_reduced(a in -50i64..50, b in 1i64..50, c in -50i64..50, e in 1i64..50) {
        let x = Scalar::new(a, b);
        let y = Scalar::new(c, e);
        for z in [&x + &y, &x - &y, &x * &y] {
            prop_assert!(reduced(&z));
        }
        // Cross-multiplication oracle for the sum.
        let s = &x + &y;
        prop_assert_eq!(s.numer() * (b * e), s.denom() * (a * e + c * b));
        if !y.is_zero() {
            prop_assert!(reduced(&(&x / &y)));
            prop_assert_eq!(&(&x / &y) * &y, x.clone());
        }
    }

    #[test]
    fn koszul_sign_is_multiplicative(seed in any::<u64>(), degrees in proptest::collection::vec(-3i64..4, 4)) {
        let ps = perms(4);
        let p = &ps[(seed % 24) as usize];
        let q = &ps[((seed / 24) % 24) as usize];
        // Apply p, then q to the reordered word.
        let pq: Vec<usize> = q.iter().map(|&k| p[k]).collect();
        let moved: Vec<i64> = p.iter().map(|&k| degrees[k]).collect();
        let lhs = koszul_sign(&pq, &degrees).unwrap();
        let rhs = &koszul_sign(p, &degrees).unwrap() * &koszul_sign(q, &moved).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn equivariant_products_match_naive_multiply(a in -9i64..9, c in -9i64..9, a2 in -9i64..9, c2 in -9i64..9) {
        let m = swap_module();
        let f = sym_map(&m, a, c);
        let g = sym_map(&m, a2, c2);
        let gf = compose_smap(&g, &f).unwrap();
        gf.validate().unwrap();
        let b = Biarity::new(1, 2);
        let (fb, gb) = (f.block(b), g.block(b));
        for i in 0..2 {
            for j in 0..2 {
                let mut s = Scalar::zero();
                for k in 0..2 {
                    s = &s + &(&gb[(i, k)] * &fb[(k, j)]);
                }
                prop_assert_eq!(&gf.block(b)[(i, j)], &s);
            }
        }
    }
}
