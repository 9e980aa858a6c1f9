use proptest::prelude::*;
use resonance_core::branching::{m_weight, mhat, KType, MType};
use resonance_core::liealg::{group_constants, rho_of, Algebra, Family, Gram, GroupSpec};
use resonance_core::rational::{q, qi, Q};
use resonance_core::resonances::{atlas, resonance_family, Resonance};

fn spec(f: Family, n: u32) -> GroupSpec {
    GroupSpec::new(f, n).unwrap()
}

fn all_specs() -> Vec<GroupSpec> {
    let mut v = vec![GroupSpec::f4()];
    for n in 2..=4 {
        for f in [Family::SpinEven, Family::SpinOdd, Family::SU, Family::Sp] {
            v.push(spec(f, n));
        }
    }
    v
}

/// z from the closed expression, with the Gram matrix as the only input.
fn z_oracle(s: &GroupSpec, sigma: &MType, v: &Q) -> (Q, Q) {
    let g = Gram::new(s);
    let c = group_constants(s);
    let mu = m_weight(s, sigma);
    let rho_m = rho_of(s, Algebra::M).unwrap();
    let shifted: Vec<Q> = mu.coords.iter().zip(&rho_m.coords).map(|(a, b)| a + b).collect();
    let z_paper = v * v * c.alpha_norm_sq - c.rho_alpha * c.rho_alpha * c.alpha_norm_sq + g.norm_sq(&shifted);
    (z_paper, z_paper - g.norm_sq(&rho_m.coords))
}

#[test]
fn odd_spin_has_no_resonances() {
    for n in 2..=4 {
        let s = spec(Family::SpinOdd, n);
        let tau = KType::trivial(&s);
        assert!(resonance_family(&s, &tau, &MType::trivial(&s), 10).unwrap().is_empty());
    }
}

#[test]
fn spin6_trivial_pole_list() {
    let s = spec(Family::SpinEven, 3);
    let tau = KType::trivial(&s);
    let vs: Vec<Q> = resonance_family(&s, &tau, &MType::trivial(&s), 3).unwrap().iter().map(|r| r.v).collect();
    assert_eq!(&vs[..3], &[q(5, 2), q(7, 2), q(9, 2)]);
}

#[test]
fn su2_first_resonance() {
    let s = spec(Family::SU, 2);
    let tau = KType::trivial(&s);
    let r = &resonance_family(&s, &tau, &MType::trivial(&s), 2).unwrap()[0];
    assert_eq!(r.v, qi(1));
    let rho_m = rho_of(&s, Algebra::M).unwrap();
    assert_eq!(r.z_paper, Gram::new(&s).norm_sq(&rho_m.coords));
    assert_eq!(r.z_hc, qi(0));
}

#[test]
fn sigma_outside_restriction_is_rejected() {
    let s = spec(Family::SpinEven, 2);
    let tau = KType::trivial(&s);
    let sigma = MType { b0: None, b: vec![qi(1)] };
    assert_eq!(resonance_family(&s, &tau, &sigma, 2).unwrap_err().kind(), "domain");
}

#[test]
fn atlas_examples() {
    for s in all_specs() {
        let a = atlas(&s, &KType::trivial(&s), 4).unwrap();
        assert_eq!(a.families.len(), 1);
        assert!(a.families[0].sigma.is_trivial());
        assert_eq!(a.families[0].d_sigma, 1);
    }
    let s = spec(Family::SpinEven, 2);
    let a = atlas(&s, &KType::from_ints(&[1, 0]), 4).unwrap();
    let mut keys: Vec<Vec<Q>> = a.families.iter().map(|f| f.sigma.tuple()).collect();
    keys.sort();
    assert_eq!(keys, vec![vec![qi(0)], vec![qi(1)]]);
    assert_eq!(a.families.iter().map(|f| f.d_sigma).sum::<u128>(), 4);
}

#[test]
fn z_matches_closed_expression() {
    let taus: Vec<(GroupSpec, Vec<i128>)> = vec![
        (spec(Family::SpinEven, 3), vec![2, 1, 0]),
        (spec(Family::SU, 3), vec![1, 0, -1, 0]),
        (spec(Family::Sp, 2), vec![2, 1, 1]),
        (GroupSpec::f4(), vec![1, 0, 0, 0]),
    ];
    for (s, t) in taus {
        let tau = KType::from_ints(&t);
        let a = atlas(&s, &tau, 5).unwrap();
        assert_eq!(a.families.len(), mhat(&s, &tau).unwrap().len());
        for f in &a.families {
            for r in &f.resonances {
                assert_eq!((r.z_paper, r.z_hc), z_oracle(&s, &f.sigma, &r.v), "{s:?} {:?}", f.sigma);
            }
        }
    }
}

#[test]
fn bottom_of_spectrum_is_zero() {
    for s in all_specs() {
        let c = group_constants(&s);
        let (_, z_hc) = z_oracle(&s, &MType::trivial(&s), &c.rho_alpha);
        assert_eq!(z_hc, qi(0), "{s:?}");
    }
}

fn check_family(rs: &[Resonance]) {
    for w in rs.windows(2) {
        assert!(w[0].v < w[1].v);
        assert!(w[0].z_paper < w[1].z_paper);
    }
    for w in rs.windows(3) {
        // Second differences of a convex function on an arithmetic progression.
        let d1 = w[1].z_paper - w[0].z_paper;
        let d2 = w[2].z_paper - w[1].z_paper;
        if w[1].v - w[0].v == w[2].v - w[1].v {
            assert!(d2 > d1);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn families_are_monotone_and_prefix_stable(idx in 0usize..13, k_small in 0i128..6, extra in 1i128..6) {
        let s = all_specs()[idx];
        let tau = KType::trivial(&s);
        let small = atlas(&s, &tau, k_small).unwrap();
        let big = atlas(&s, &tau, k_small + extra).unwrap();
        for (a, b) in small.families.iter().zip(&big.families) {
            prop_assert_eq!(&a.sigma, &b.sigma);
            prop_assert_eq!(&a.resonances[..], &b.resonances[..a.resonances.len()]);
            check_family(&b.resonances);
        }
    }
}
