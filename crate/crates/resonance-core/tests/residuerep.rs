use num_bigint::BigUint;
use num_rational::Ratio;
use resonance_core::branching::{KType, MType};
use resonance_core::liealg::{inner, rho_of, Algebra, Family, GroupSpec, Weight};
use resonance_core::rational::{q, qi};
use resonance_core::residuerep::*;
use resonance_core::Q;

fn spec(f: Family, n: u32) -> GroupSpec {
    GroupSpec::new(f, n).unwrap()
}

fn all_specs() -> Vec<GroupSpec> {
    let mut v = vec![GroupSpec::f4()];
    for n in 2..=4 {
        for f in [Family::SpinEven, Family::SU, Family::Sp] {
            v.push(spec(f, n));
        }
    }
    v
}

fn pts(xs: &[(i128, i128)]) -> Vec<LatticePoint> {
    xs.iter().map(|&(x, y)| LatticePoint::new(x, y)).collect()
}

fn binom(n: i128, k: i128) -> i128 {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn classify_examples() {
    let s = spec(Family::SpinEven, 3);
    let info = classify(&s, &KType::from_ints(&[5, 0, 0]), 2).unwrap();
    assert_eq!(info.case, Case::Infinite);
    assert_eq!(info.minimal_ktype.coords, vec![qi(3), qi(0), qi(0)]);
    match &info.delta {
        Delta::MType { sigma, .. } => assert_eq!(sigma.b, vec![qi(3), qi(0)]),
        other => panic!("{other:?}"),
    }
    assert_eq!(info.nu, Nu::Real(q(3, 2)));
    assert!(info.unitary && !info.finite_dim);
    assert_eq!((info.gk_dim, info.orbit.label, info.orbit.real_dim), (5, OrbitLabel::LongRoot, 10));

    let info = classify(&s, &KType::trivial(&s), 1).unwrap();
    assert_eq!(info.case, Case::Finite);
    assert_eq!(info.nu, Nu::ILambda { k: 1, v: q(7, 2) });
    assert!(!info.unitary && info.finite_dim);
    assert_eq!(info.orbit.label, OrbitLabel::Zero);
    assert!(classify(&s, &KType::trivial(&s), 0).unwrap().unitary);

    let s = spec(Family::Sp, 3);
    let info = classify(&s, &KType::from_ints(&[4, 4, 0, 0]), 1).unwrap();
    assert_eq!(info.case, Case::East);
    match &info.delta {
        Delta::MType { sigma, .. } => assert_eq!(sigma, &MType { b0: Some(qi(0)), b: vec![qi(3), qi(3)] }),
        other => panic!("{other:?}"),
    }
    assert_eq!(info.nu, Nu::Real(q(3, 2)));
    assert!(!info.unitary);
    assert_eq!((info.orbit.label, info.orbit.real_dim), (OrbitLabel::HalfRoot, 22));
}

#[test]
fn classify_rejects() {
    let s = spec(Family::SU, 3);
    assert_eq!(classify(&s, &KType::from_ints(&[1, 0, 0, 0]), 0).unwrap_err().kind(), "not_applicable");
    assert_eq!(classify(&s, &KType::trivial(&s), -1).unwrap_err().kind(), "parameter");
    let odd = spec(Family::SpinOdd, 2);
    assert_eq!(classify(&odd, &KType::trivial(&odd), 0).unwrap_err().kind(), "not_applicable");
    assert_eq!(nilpotent_orbits(&odd).unwrap_err().kind(), "not_applicable");
    assert!(constituent_ktypes(&s, Case::Finite, 0, 5).is_err());
}

#[test]
fn constituent_examples() {
    let s = spec(Family::SpinEven, 3);
    assert_eq!(constituent_ktypes(&s, Case::Finite, 1, 10).unwrap(), pts(&[(0, 0), (1, 0)]));

    let s = spec(Family::SU, 3);
    let east = constituent_ktypes(&s, Case::East, 0, 4).unwrap();
    assert_eq!(east, pts(&[(2, 0), (3, -1), (3, 1), (4, -2), (4, 0), (4, 2)]));

    // The barrier q = 2k+2-p belongs to north, like the north minimum (2,0).
    let f4 = GroupSpec::f4();
    assert_eq!(constituent_ktypes(&f4, Case::West, 0, 10).unwrap(), pts(&[(0, 0)]));
    assert_eq!(point_case(&f4, 0, LatticePoint::new(1, 1)).unwrap(), Case::North);
    assert_eq!(point_case(&f4, 0, LatticePoint::new(2, 0)).unwrap(), Case::North);
    assert_eq!(point_case(&f4, 0, LatticePoint::new(8, 0)).unwrap(), Case::East);
}

#[test]
fn regions_partition_the_lattice() {
    for s in all_specs() {
        for k in 0..4 {
            let bound = 4 * k + 12;
            let mut all: Vec<LatticePoint> = cases(&s)
                .iter()
                .flat_map(|&c| constituent_ktypes(&s, c, k, bound).unwrap())
                .collect();
            let total = all.len();
            all.sort();
            all.dedup();
            assert_eq!(all.len(), total, "{s:?} k={k}: overlapping regions");
            let lattice: usize = (0..=bound)
                .map(|x| {
                    (-x..=x)
                        .filter(|&y| is_lattice_point(&s, LatticePoint::new(x, y)))
                        .count()
                })
                .sum();
            assert_eq!(total, lattice, "{s:?} k={k}: gaps");
        }
    }
}

#[test]
fn minimal_ktype_examples() {
    let s = spec(Family::SpinEven, 4);
    for k in 0..5 {
        let m = minimal_ktype_search(&s, Case::Infinite, k, 4 * k + 16).unwrap();
        assert_eq!(m.point, LatticePoint::new(k + 1, 0));
    }
    let s = spec(Family::SU, 3);
    let m = minimal_ktype_search(&s, Case::East, 0, 16).unwrap();
    assert_eq!(m.weight.coords, vec![qi(1), qi(0), qi(-1), qi(0)]);
    for s in all_specs() {
        let low = if s.family() == Family::SpinEven { Case::Finite } else { Case::West };
        let m = minimal_ktype_search(&s, low, 2, 20).unwrap();
        assert!(m.weight.is_zero());
    }
    let f4 = GroupSpec::f4();
    assert_eq!(minimal_ktype_search(&f4, Case::East, 0, 6).unwrap_err().kind(), "region");
}

#[test]
fn table_matches_vogan_search() {
    for s in all_specs() {
        for k in 0..=4 {
            for &c in cases(&s) {
                let entry = table_entry(&s, c, k).unwrap();
                let found = minimal_ktype_search(&s, c, k, 4 * k + 16).unwrap();
                assert_eq!(entry.minimal, found.point, "{s:?} {c:?} k={k}");
            }
        }
    }
}

#[test]
fn sp_north_minimum_moves_off_the_corner() {
    let s = spec(Family::Sp, 2);
    let info = classify(&s, &KType::from_ints(&[2, 0, 2]), 1).unwrap();
    assert_eq!(info.case, Case::North);
    assert_eq!(info.minimal_point, LatticePoint::new(3, 1));
    assert_eq!(info.minimal_ktype.coords, vec![qi(2), qi(1), qi(1)]);
    assert!(verify_langlands(&s, &info, 1));
}

#[test]
fn langlands_parameters_match() {
    for s in all_specs() {
        for k in 0..=5 {
            for &c in cases(&s) {
                let entry = table_entry(&s, c, k).unwrap();
                let tau = KType::new(lattice_weight(&s, entry.minimal).coords);
                let info = classify(&s, &tau, k).unwrap();
                assert_eq!(info.case, c);
                match info.delta {
                    Delta::MType { .. } => assert!(verify_langlands(&s, &info, k), "{s:?} {c:?} k={k}"),
                    Delta::DiscreteSeries { ref hc_param, .. } => {
                        assert!(hc_param.is_some(), "{s:?} {c:?} k={k}");
                        assert!(!verify_langlands(&s, &info, k));
                    }
                }
            }
        }
    }
}

#[test]
fn perturbed_nu_fails() {
    let s = spec(Family::SU, 3);
    let mut info = classify(&s, &KType::from_ints(&[2, 0, -2, 0]), 0).unwrap();
    assert!(verify_langlands(&s, &info, 0));
    info.nu = Nu::Real(q(3, 7));
    assert!(!verify_langlands(&s, &info, 0));
}

#[test]
fn discrete_series_parameters() {
    let s = spec(Family::SU, 2);
    for k in 0..4 {
        let e = table_entry(&s, Case::East, k).unwrap();
        let Delta::DiscreteSeries { blattner, hc_param } = e.delta else { panic!() };
        assert_eq!(blattner.coords, vec![qi(k + 1), qi(-(k + 1)), qi(0)]);
        assert_eq!(hc_param.unwrap().coords, vec![qi(k + 1), qi(-(k + 1)), qi(0)]);
    }
    let s = spec(Family::Sp, 2);
    for k in 0..4 {
        let e = table_entry(&s, Case::East, k).unwrap();
        let Delta::DiscreteSeries { blattner, hc_param } = e.delta else { panic!() };
        assert_eq!(blattner.coords, vec![qi(k + 2), qi(k + 2), qi(0)]);
        assert_eq!(hc_param.unwrap().coords, vec![qi(k + 3), qi(k + 2), qi(1)]);
    }
}

#[test]
fn casimir_examples() {
    let f4 = GroupSpec::f4();
    let c = casimir_k_eigenvalue(&f4, LatticePoint::new(0, 0)).unwrap();
    assert_eq!(c.normalized, qi(0));
    let s = spec(Family::SpinEven, 3);
    assert_eq!(casimir_k_eigenvalue(&s, LatticePoint::new(1, 0)).unwrap().normalized, qi(5));
    let s = spec(Family::Sp, 3);
    let c = casimir_k_eigenvalue(&s, LatticePoint::new(0, 0)).unwrap();
    assert_eq!((c.raw, c.normalized), (qi(1), qi(0)));
    assert!(casimir_k_eigenvalue(&s, LatticePoint::new(1, 0)).is_err());
}

#[test]
fn casimir_is_proportional_to_highest_weight_form() {
    for s in all_specs() {
        let rho2 = rho_of(&s, Algebra::K).unwrap().scale(qi(2));
        let form = |w: &Weight| inner(&s, w, &w.add(&rho2)).unwrap();
        let mut ratio: Option<Q> = None;
        for x in 0..8 {
            for y in -x..=x {
                let p = LatticePoint::new(x, y);
                if !is_lattice_point(&s, p) || (x == 0 && y == 0) {
                    continue;
                }
                let c = casimir_k_eigenvalue(&s, p).unwrap().normalized;
                let f = form(&lattice_weight(&s, p));
                let r = c / f;
                assert_eq!(*ratio.get_or_insert(r), r, "{s:?} at {p:?}");
            }
        }
    }
}

fn f4_closed_dim(p: i128, q_: i128) -> Ratio<i128> {
    let fact = |x: i128| (1..=x).product::<i128>();
    let delta = |p: i128, q_: i128| -> Ratio<i128> {
        let (a, b) = ((p + q_) / 2, (p - q_) / 2);
        if b < 1 {
            return Ratio::from_integer(0);
        }
        Ratio::new(fact(a + 6), fact(a + 2)) * Ratio::new(fact(b + 3), fact(b - 1))
    };
    let c = Ratio::new(
        (q_ + 1) * (q_ + 3) * (q_ + 5) * (2 * q_ + 8) * (2 * q_ + 6) * (2 * q_ + 4),
        4096 * 81 * 25 * 7,
    );
    c * (delta(p + 2, q_) - delta(p, q_))
}

#[test]
fn ktype_dimensions_match_closed_forms() {
    for n in 2..=4 {
        let s = spec(Family::SpinEven, n as u32);
        for m in 0..10 {
            let d = binom(m + 2 * n - 1, 2 * n - 1) - binom(m + 2 * n - 3, 2 * n - 1);
            assert_eq!(ktype_dim(&s, LatticePoint::new(m, 0)), BigUint::from(d as u64));
        }
        let s = spec(Family::SU, n as u32);
        for m in 0..10 {
            for l in (-m..=m).step_by(2) {
                let (a, b) = ((m - l) / 2, (m + l) / 2);
                let d = binom(a + n - 1, n - 1) * binom(b + n - 1, n - 1) - binom(a + n - 2, n - 1) * binom(b + n - 2, n - 1);
                assert_eq!(ktype_dim(&s, LatticePoint::new(m, l)), BigUint::from(d as u64), "SU n={n} ({m},{l})");
            }
        }
    }
    let f4 = GroupSpec::f4();
    for p in 0..12 {
        for q_ in ((p % 2)..=p).step_by(2) {
            let d = f4_closed_dim(p, q_);
            assert!(d.is_integer());
            assert_eq!(ktype_dim(&f4, LatticePoint::new(p, q_)), BigUint::from(d.to_integer() as u64));
        }
    }
    // Sp(n) x Sp(1): the Sp(1) factor contributes l+1.
    let s = spec(Family::Sp, 2);
    assert_eq!(ktype_dim(&s, LatticePoint::new(0, 0)), BigUint::from(1u32));
    assert_eq!(ktype_dim(&s, LatticePoint::new(1, 1)), BigUint::from(8u32));
    assert_eq!(ktype_dim(&s, LatticePoint::new(2, 0)), BigUint::from(5u32));
}

#[test]
fn gk_count_examples() {
    let s = spec(Family::SpinEven, 3);
    // Eigenvalue of m=1 is 5, of m=2 is 12.
    assert_eq!(gk_count(&s, Case::Infinite, 0, 2.3).unwrap(), BigUint::from(6u32));
    let t = 40.0;
    let counts = gk_counts(&s, Case::Infinite, 0, &[t]).unwrap();
    let top = (0..).take_while(|m: &i128| ((m + 2) * (m + 2) - 4) as f64 <= t * t).last().unwrap();
    let tele = binom(top + 5, 5) + binom(top + 4, 5) - binom(4, 5) - binom(5, 5);
    assert_eq!(counts[0], BigUint::from(tele as u64));

    let s = spec(Family::SU, 3);
    let a = gk_count(&s, Case::West, 2, 50.0).unwrap();
    let b = gk_count(&s, Case::West, 2, 500.0).unwrap();
    assert_eq!(a, b);
    let grid = [3.0, 10.0, 7.0, 30.0];
    let c = gk_counts(&s, Case::North, 1, &grid).unwrap();
    assert!(c[0] <= c[2] && c[2] <= c[1] && c[1] <= c[3]);
    assert!(gk_count(&s, Case::North, 1, -1.0).is_err());
}

#[test]
fn gk_exponents_small_grids() {
    let grid = geometric_grid(300.0, 4.0, 10);
    let s = spec(Family::SpinEven, 3);
    let e = gk_exponent_estimate(&s, Case::Infinite, 0, &grid).unwrap();
    assert!((e - 5.0).abs() < 0.15, "{e}");
    let s = spec(Family::SU, 3);
    let e = gk_exponent_estimate(&s, Case::North, 0, &grid).unwrap();
    assert!((e - 3.0).abs() < 0.15, "{e}");
    let e = gk_exponent_estimate(&s, Case::West, 0, &grid).unwrap();
    assert!(e.abs() < 1e-12);
    assert_eq!(gk_exponent_estimate(&s, Case::East, 0, &[1.0, 2.0]).unwrap_err().kind(), "degenerate_grid");
    assert_eq!(gk_exponent_estimate(&s, Case::East, 0, &[1.0, 3.0, 2.0, 4.0]).unwrap_err().kind(), "degenerate_grid");
    let f4 = GroupSpec::f4();
    assert_eq!(gk_exponent_estimate(&f4, Case::East, 30, &[1.0, 2.0, 3.0, 4.0]).unwrap_err().kind(), "degenerate_grid");
}

#[test]
fn orbit_catalogues() {
    let dims = |s: &GroupSpec| nilpotent_orbits(s).unwrap().iter().map(|o| o.real_dim).collect::<Vec<_>>();
    let s = spec(Family::SpinEven, 3);
    assert_eq!(dims(&s), vec![0, 10]);
    assert_eq!(nilpotent_orbits(&s).unwrap()[1].complex_partition, Some(vec![3, 1, 1, 1, 1]));
    assert_eq!(dims(&spec(Family::SU, 2)), vec![0, 6, 4, 4]);
    assert_eq!(dims(&spec(Family::Sp, 2)), vec![0, 14, 10]);
    assert_eq!(dims(&GroupSpec::f4()), vec![0, 30, 22]);
    for s in all_specs() {
        for o in nilpotent_orbits(&s).unwrap() {
            if let Some(p) = &o.complex_partition {
                let total: u32 = p.iter().sum();
                let defining = match s.family() {
                    Family::SpinEven => 2 * s.n() + 1,
                    Family::SU => s.n() + 1,
                    _ => 2 * s.n() + 2,
                };
                assert_eq!(total, defining);
            }
        }
    }
}

#[test]
fn cases_biject_onto_orbits() {
    for s in all_specs() {
        let mut labels: Vec<OrbitLabel> = Vec::new();
        for &c in cases(&s) {
            let e = table_entry(&s, c, 2).unwrap();
            let info = classify(&s, &KType::new(lattice_weight(&s, e.minimal).coords), 2).unwrap();
            assert_eq!(info.orbit.real_dim, 2 * info.gk_dim);
            assert_eq!(info.finite_dim, info.gk_dim == 0);
            labels.push(info.orbit.label);
        }
        let mut all: Vec<OrbitLabel> = nilpotent_orbits(&s).unwrap().iter().map(|o| o.label).collect();
        labels.sort();
        all.sort();
        assert_eq!(labels, all, "{s:?}");
    }
}

#[test]
fn boundary_policy_is_reported() {
    for s in all_specs() {
        let info = classify(&s, &KType::trivial(&s), 0).unwrap();
        assert!(!info.boundary_policy.is_empty());
    }
}
