use num_complex::Complex;
use num_traits::{One, Zero};
use resonance_core::liealg::*;
use resonance_core::rational::{q, qi, Q};

fn spec(f: Family, n: u32) -> GroupSpec {
    GroupSpec::new(f, n).unwrap()
}

fn all_specs() -> Vec<GroupSpec> {
    let mut v = vec![GroupSpec::f4()];
    for n in 2..=5 {
        for f in [Family::SpinEven, Family::SpinOdd, Family::SU, Family::Sp] {
            v.push(spec(f, n));
        }
    }
    v
}

#[test]
fn constants_table() {
    let c = group_constants(&spec(Family::SU, 3));
    assert_eq!((c.m_half, c.m_long, c.rho_alpha, c.m_sup), (4, 1, q(3, 2), qi(2)));
    let c = group_constants(&GroupSpec::f4());
    assert_eq!((c.m_half, c.m_long, c.rho_alpha, c.m_sup), (8, 7, q(11, 2), qi(7)));
    let c = group_constants(&spec(Family::SpinEven, 3));
    assert_eq!((c.m_half, c.m_long, c.rho_alpha, c.m_sup, c.alpha_norm_sq), (0, 5, q(5, 2), qi(2), q(1, 10)));
    assert!(group_constants(&spec(Family::SpinOdd, 3)).pole_free);
    assert!(GroupSpec::new(Family::Sp, 1).is_err());
}

#[test]
fn constants_identities_and_alpha_norm() {
    for s in all_specs() {
        let c = group_constants(&s);
        assert_eq!(c.rho_alpha * qi(2), qi(c.m_long as i128) + q(c.m_half as i128, 2));
        assert_eq!(c.m_sup * qi(2), qi(c.m_half as i128 + c.m_long as i128 - 1));
        let a = alpha(&s);
        assert_eq!(inner(&s, &a, &a).unwrap(), c.alpha_norm_sq, "{:?}", s);
        let r = rho_restricted(&s);
        assert_eq!(inner(&s, &r, &r).unwrap(), c.rho_alpha * c.rho_alpha * c.alpha_norm_sq);
    }
}

/// Restricted root multiplicities read off from the g roots: count roots whose
/// pairing with α is |α|² (long) or |α|²/2 (half).
#[test]
fn multiplicities_from_roots() {
    for s in all_specs() {
        if s.family() == Family::Sp || s.family() == Family::F4 {
            // The split Cartan needs the Cayley transform; checked via ρ below.
            continue;
        }
        let c = group_constants(&s);
        let g = Gram::new(&s);
        let a = alpha(&s);
        let a2 = g.norm_sq(&a.coords);
        let rd = root_datum(&s, Algebra::G).unwrap();
        let long = rd.roots.iter().filter(|r| g.pair(&r.coords, &a.coords) == a2).count();
        let half = rd.roots.iter().filter(|r| g.pair(&r.coords, &a.coords) * qi(2) == a2).count();
        assert_eq!((half as u32, long as u32), (c.m_half, c.m_long), "{:?}", s);
    }
}

#[test]
fn root_counts() {
    assert_eq!(root_datum(&GroupSpec::f4(), Algebra::G).unwrap().roots.len(), 48);
    assert_eq!(root_datum(&GroupSpec::f4(), Algebra::M).unwrap().roots.len(), 18);
    assert_eq!(root_datum(&GroupSpec::f4(), Algebra::K).unwrap().roots.len(), 32);
    assert_eq!(root_datum(&GroupSpec::f4(), Algebra::K1).unwrap().roots.len(), 24);
    assert_eq!(root_datum(&spec(Family::SpinEven, 2), Algebra::G).unwrap().roots.len(), 8);
    assert!(root_datum(&spec(Family::SU, 2), Algebra::M).unwrap().roots.is_empty());
    assert!(root_datum(&spec(Family::SU, 2), Algebra::K1).is_err());
    for s in all_specs() {
        for alg in [Algebra::G, Algebra::K, Algebra::M] {
            let rd = root_datum(&s, alg).unwrap();
            assert_eq!(rd.roots.len(), 2 * rd.positive_roots.len());
            for r in &rd.positive_roots {
                let neg: Vec<Q> = r.coords.iter().map(|x| -x).collect();
                assert!(rd.roots.iter().any(|x| x.coords == neg));
            }
        }
    }
}

#[test]
fn f4_simple_roots_and_weyl_group() {
    let rd = root_datum(&GroupSpec::f4(), Algebra::G).unwrap();
    assert_eq!(rd.simple_roots.len(), 4);
    assert_eq!(rd.positive_roots.len(), 24);
    assert_eq!(f4_weyl_group().len(), 1152);
    let m = root_datum(&GroupSpec::f4(), Algebra::M).unwrap();
    assert_eq!(m.simple_roots.len(), 3);
}

#[test]
fn gram_closed_forms() {
    let g = killing_gram(&spec(Family::SpinEven, 2));
    assert_eq!(g, vec![vec![q(1, 6), Q::zero()], vec![Q::zero(), q(1, 6)]]);
    for n in 2..=5i128 {
        let g = killing_gram(&spec(Family::SU, n as u32));
        for i in 0..=n as usize {
            for j in 0..=n as usize {
                let d = if i == j { Q::one() } else { Q::zero() };
                assert_eq!(g[i][j], (d - q(1, n + 1)) / qi(2 * (n + 1)));
            }
        }
        let g = killing_gram(&spec(Family::Sp, n as u32));
        assert_eq!(g[0][0], q(1, 4 * (n + 2)));
    }
    assert_eq!(killing_gram(&GroupSpec::f4())[0][0], q(1, 18));
}

#[test]
fn gram_is_symmetric() {
    for s in all_specs() {
        let g = killing_gram(&s);
        for i in 0..g.len() {
            for j in 0..g.len() {
                assert_eq!(g[i][j], g[j][i]);
            }
            assert!(g[i][i] > Q::zero());
        }
    }
}

#[test]
fn inner_rejects_mismatched_lengths() {
    let s = spec(Family::SU, 3);
    let a = Weight::from_ints(&[1, 0], Algebra::G);
    assert!(inner(&s, &a, &alpha(&s)).is_err());
    let z = Weight::zero(&s, Algebra::G);
    assert_eq!(inner(&s, &z, &alpha(&s)).unwrap(), Q::zero());
}

#[test]
fn rho_of_examples() {
    for n in 2..=5u32 {
        let s = spec(Family::SpinEven, n);
        let rho = rho_of(&s, Algebra::K).unwrap();
        let want: Vec<Q> = (1..=n as i128).map(|j| qi(n as i128 - j)).collect();
        assert_eq!(rho.coords, want);
    }
    assert!(rho_of(&spec(Family::SU, 2), Algebra::M).unwrap().is_zero());
    // F4: ρ_M corresponds to the B3 vector (5/2, 3/2, 1/2) in the orthonormal f-basis.
    let rho = rho_of(&GroupSpec::f4(), Algebra::M).unwrap();
    assert_eq!(rho.coords, vec![q(9, 4), q(7, 4), q(3, 4), q(-1, 4)]);
}

#[test]
fn weyl_dim_examples() {
    let s = spec(Family::SpinEven, 3);
    assert_eq!(weyl_dim(&s, Algebra::K, &Weight::from_ints(&[0, 0, 0], Algebra::K)).unwrap(), 1);
    assert_eq!(weyl_dim(&s, Algebra::K, &Weight::from_ints(&[1, 0, 0], Algebra::K)).unwrap(), 6);
    assert!(weyl_dim(&s, Algebra::K, &Weight::from_ints(&[0, 1, 0], Algebra::K)).is_err());
    let f4 = GroupSpec::f4();
    // Spin(9): vector 9, spinor 16, adjoint 36.
    let half = q(1, 2);
    assert_eq!(weyl_dim(&f4, Algebra::K, &Weight::from_ints(&[1, 0, 0, 0], Algebra::K)).unwrap(), 9);
    assert_eq!(weyl_dim(&f4, Algebra::K, &Weight::new(vec![half; 4], Algebra::K)).unwrap(), 16);
    assert_eq!(weyl_dim(&f4, Algebra::K, &Weight::from_ints(&[1, 1, 0, 0], Algebra::K)).unwrap(), 36);
    // Spin(7) spinor through the f-basis embedding: b = (1/2,1/2,1/2) maps to (3/4,1/4,1/4,1/4).
    let spin7 = Weight::new(vec![q(3, 4), q(1, 4), q(1, 4), q(1, 4)], Algebra::M);
    assert_eq!(weyl_dim(&f4, Algebra::M, &spin7).unwrap(), 8);
    // Sp(2) x Sp(1) inside Sp(2,1): (1,0;1) is 4 x 2.
    let sp = spec(Family::Sp, 2);
    assert_eq!(weyl_dim(&sp, Algebra::K, &Weight::from_ints(&[1, 0, 1], Algebra::K)).unwrap(), 8);
    // U(3) inside SU(3,1): (1,0,-1) is the adjoint, dimension 8.
    let su = spec(Family::SU, 3);
    assert_eq!(weyl_dim(&su, Algebra::K, &Weight::from_ints(&[1, 0, -1, 5], Algebra::K)).unwrap(), 8);
}

#[test]
fn casimir_trivial_anchor() {
    for s in all_specs() {
        let triv = Weight::zero(&s, Algebra::M);
        let rho = group_constants(&s).rho_alpha;
        let rho_m = rho_of(&s, Algebra::M).unwrap();
        let rm2 = inner(&s, &rho_m, &rho_m).unwrap();
        for sign in [1, -1] {
            let lam = Complex::new(Q::zero(), rho * qi(sign));
            let hc = casimir_scalar(&s, &triv, lam, CasimirConvention::HarishChandra).unwrap();
            assert_eq!(hc, Complex::new(Q::zero(), Q::zero()));
            let p = casimir_scalar(&s, &triv, lam, CasimirConvention::Paper).unwrap();
            assert_eq!(p, Complex::new(rm2, Q::zero()));
        }
    }
}

#[test]
fn vogan_norm_spin_monotone() {
    let s = spec(Family::SpinEven, 4);
    let mut last = None;
    for m in 0..10 {
        let v = vogan_norm(&s, &Weight::from_ints(&[m, 0, 0, 0], Algebra::K)).unwrap();
        if let Some(l) = last {
            assert!(v > l);
        }
        last = Some(v);
    }
    let rho_k = rho_of(&s, Algebra::K).unwrap();
    let zero = Weight::zero(&s, Algebra::K);
    assert_eq!(vogan_norm(&s, &zero).unwrap(), qi(4) * inner(&s, &rho_k, &rho_k).unwrap());
}

#[test]
fn orbit_equality_examples() {
    let b = spec(Family::SpinEven, 3);
    let w = |xs: &[i128]| Weight::from_ints(xs, Algebra::G);
    assert!(weyl_orbit_equal(&b, &w(&[3, 1, 2]), &w(&[3, 1, 2])));
    assert!(weyl_orbit_equal(&b, &w(&[3, 1, 2]), &w(&[-3, 1, 2])));
    let a = spec(Family::SU, 2);
    assert!(weyl_orbit_equal(&a, &w(&[5, 2, -7]), &w(&[2, 5, -7])));
    assert!(!weyl_orbit_equal(&a, &w(&[5, 2, -7]), &w(&[-5, 2, -7])));
    let d = spec(Family::SpinOdd, 2);
    assert!(!weyl_orbit_equal(&d, &w(&[3, 2, 1]), &w(&[-3, 2, 1])));
    assert!(weyl_orbit_equal(&d, &w(&[3, 2, 1]), &w(&[-3, -2, 1])));
}

#[test]
fn f4_orbits_match_dominant_representatives() {
    let f4 = GroupSpec::f4();
    let pts: Vec<Weight> = [
        [qi(5), qi(-1), qi(-2), qi(-3)],
        [q(11, 2), q(5, 2), q(3, 2), q(1, 2)],
        [q(11, 2), q(-1, 2), q(-3, 2), q(-5, 2)],
        [qi(4), qi(3), qi(1), qi(1)],
        [q(7, 2), q(7, 2), q(1, 2), q(1, 2)],
    ]
    .iter()
    .map(|c| Weight::new(c.to_vec(), Algebra::G))
    .collect();
    for x in &pts {
        for y in &pts {
            let by_rep = dominant_representative(&f4, x) == dominant_representative(&f4, y);
            assert_eq!(weyl_orbit_equal(&f4, x, y), by_rep, "{:?} {:?}", x.coords, y.coords);
        }
    }
    assert!(weyl_orbit_equal(&f4, &pts[0], &pts[1]));
}
