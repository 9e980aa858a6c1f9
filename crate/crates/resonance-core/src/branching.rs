//! Restriction of K-types to M.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::liealg::{Algebra, Family, GroupSpec, Weight};
use crate::rational::{is_integer, q, qi, uniform_parity, Q};

/// Highest weight of a K-type in ambient coordinates.
///
/// Spin(2n,1): `(a1,…,an)`. Spin(2n+1,1): `(a1,…,an)`. SU(n,1): `(a1,…,an, a(n+1))`
/// where the last entry is the U(1) weight. Sp(n,1): `(a1,…,an, a(n+1))` where the last
/// entry labels the Sp(1) factor. F4: `(a1,…,a4)` for Spin(9).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KType {
    pub coords: Vec<Q>,
}

impl KType {
    pub fn new(coords: Vec<Q>) -> KType {
        KType { coords }
    }

    pub fn from_ints(xs: &[i128]) -> KType {
        KType { coords: xs.iter().map(|&x| qi(x)).collect() }
    }

    pub fn trivial(spec: &GroupSpec) -> KType {
        KType { coords: vec![Q::zero(); k_len(spec)] }
    }
}

/// An M-type by its family-specific parameters.
///
/// Spin(2n,1): `b = (b1,…,b(n-1))`. Spin(2n+1,1): `b = (b1,…,bn)`. SU(n,1) and
/// Sp(n,1): `b0` plus `b = (b2,…,bn)`. F4: `b = (b1,b2,b3)` for Spin(7).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MType {
    pub b0: Option<Q>,
    pub b: Vec<Q>,
}

impl MType {
    pub fn trivial(spec: &GroupSpec) -> MType {
        let n = spec.n() as usize;
        match spec.family() {
            Family::SpinEven => MType { b0: None, b: vec![Q::zero(); n - 1] },
            Family::SpinOdd => MType { b0: None, b: vec![Q::zero(); n] },
            Family::SU | Family::Sp => MType { b0: Some(Q::zero()), b: vec![Q::zero(); n - 1] },
            Family::F4 => MType { b0: None, b: vec![Q::zero(); 3] },
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.b0.map_or(true, |x| x.is_zero()) && self.b.iter().all(Zero::is_zero)
    }

    /// The raw tuple with `b0` first when present.
    pub fn tuple(&self) -> Vec<Q> {
        let mut v: Vec<Q> = self.b0.into_iter().collect();
        v.extend_from_slice(&self.b);
        v
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MTypeEntry {
    pub sigma: MType,
    pub multiplicity: u64,
}

fn k_len(spec: &GroupSpec) -> usize {
    let n = spec.n() as usize;
    match spec.family() {
        Family::SpinEven | Family::SpinOdd => n,
        Family::SU | Family::Sp => n + 1,
        Family::F4 => 4,
    }
}

/// Embeds a K-type into ambient coordinates.
pub fn k_weight(spec: &GroupSpec, tau: &KType) -> Weight {
    let mut c = tau.coords.clone();
    c.resize(spec.rank(), Q::zero());
    Weight::new(c, Algebra::K)
}

/// Embeds an M-type into ambient coordinates.
pub fn m_weight(spec: &GroupSpec, sigma: &MType) -> Weight {
    let dim = spec.rank();
    let mut c = vec![Q::zero(); dim];
    match spec.family() {
        Family::SpinEven | Family::SpinOdd => c[..sigma.b.len()].copy_from_slice(&sigma.b),
        Family::SU => {
            let b0 = sigma.b0.unwrap_or_default();
            c[0] = b0;
            c[dim - 1] = b0;
            c[1..1 + sigma.b.len()].copy_from_slice(&sigma.b);
        }
        Family::Sp => {
            let b0 = sigma.b0.unwrap_or_default();
            c[0] = b0;
            c[1] = -b0;
            c[2..2 + sigma.b.len()].copy_from_slice(&sigma.b);
        }
        Family::F4 => {
            let (b1, b2, b3) = (sigma.b[0], sigma.b[1], sigma.b[2]);
            let h = q(1, 2);
            c = vec![h * (b1 + b2 + b3), h * (b1 + b2 - b3), h * (b1 - b2 + b3), h * (-b1 + b2 + b3)];
        }
    }
    Weight::new(c, Algebra::M)
}

fn check_len(spec: &GroupSpec, tau: &KType) -> Result<()> {
    let want = k_len(spec);
    if tau.coords.len() != want {
        return Err(Error::Dimension { expected: want, got: tau.coords.len() });
    }
    Ok(())
}

fn nonincreasing(xs: &[Q]) -> bool {
    xs.windows(2).all(|w| w[0] >= w[1])
}

/// Checks the dominance and integrality conditions for a K-type.
pub fn validate_ktype(spec: &GroupSpec, tau: &KType) -> Result<()> {
    check_len(spec, tau)?;
    let a = &tau.coords;
    let n = spec.n() as usize;
    let bad = |why: &str| Err(Error::Domain(format!("invalid K-type {:?}: {}", fmt_tuple(a), why)));
    match spec.family() {
        Family::SpinEven => {
            if !uniform_parity(a) {
                return bad("coordinates must be all integers or all half-integers");
            }
            if !nonincreasing(&a[..n - 1]) || a[n - 2] < a[n - 1].abs() {
                return bad("need a1 >= ... >= a(n-1) >= |an|");
            }
        }
        Family::SpinOdd => {
            if !uniform_parity(a) {
                return bad("coordinates must be all integers or all half-integers");
            }
            if !nonincreasing(a) || a[n - 1].is_negative() {
                return bad("need a1 >= ... >= an >= 0");
            }
        }
        Family::SU => {
            if !a.iter().all(is_integer) {
                return bad("coordinates must be integers");
            }
            if !nonincreasing(&a[..n]) {
                return bad("need a1 >= ... >= an");
            }
        }
        Family::Sp => {
            if !a.iter().all(is_integer) {
                return bad("coordinates must be integers");
            }
            if !nonincreasing(&a[..n]) || a[n - 1].is_negative() || a[n].is_negative() {
                return bad("need a1 >= ... >= an >= 0 and a(n+1) >= 0");
            }
        }
        Family::F4 => {
            if !uniform_parity(a) {
                return bad("coordinates must be all integers or all half-integers");
            }
            if !nonincreasing(a) || a[3].is_negative() {
                return bad("need a1 >= a2 >= a3 >= a4 >= 0");
            }
        }
    }
    Ok(())
}

fn fmt_tuple(a: &[Q]) -> Vec<alloc::string::String> {
    a.iter().map(|x| format!("{}", x)).collect()
}

/// Values `lo, lo+1, …, hi` congruent to `like` modulo ℤ.
fn steps(lo: Q, hi: Q, like: Q) -> Vec<Q> {
    let frac = like - like.floor();
    let mut start = lo.ceil() - Q::one() + frac;
    while start < lo {
        start += Q::one();
    }
    let mut out = Vec::new();
    let mut x = start;
    while x <= hi {
        out.push(x);
        x += Q::one();
    }
    out
}

/// Cartesian product of per-slot candidate lists, keeping nonincreasing tuples.
fn product(slots: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let mut acc: Vec<Vec<Q>> = vec![Vec::new()];
    for s in slots {
        let mut next = Vec::new();
        for prefix in &acc {
            for x in s {
                if prefix.last().map_or(true, |p| p >= x) {
                    let mut v = prefix.clone();
                    v.push(*x);
                    next.push(v);
                }
            }
        }
        acc = next;
    }
    acc
}

/// Interlacing `a1 ≥ b1 ≥ a2 ≥ … ≥ b(r-1) ≥ |ar|` (B to B or D to B).
fn interlace_to_b(a: &[Q]) -> Vec<Vec<Q>> {
    let r = a.len();
    let slots: Vec<Vec<Q>> = (0..r - 1)
        .map(|j| {
            let lo = if j + 1 == r - 1 { a[r - 1].abs() } else { a[j + 1] };
            steps(lo, a[j], a[j])
        })
        .collect();
    product(&slots)
}

/// Interlacing `a1 ≥ b1 ≥ a2 ≥ … ≥ ar ≥ |br|` (B to D).
fn interlace_to_d(a: &[Q]) -> Vec<Vec<Q>> {
    let r = a.len();
    let slots: Vec<Vec<Q>> = (0..r)
        .map(|j| if j + 1 < r { steps(a[j + 1], a[j], a[j]) } else { steps(-a[j], a[j], a[j]) })
        .collect();
    let mut out = product(&slots[..r - 1]);
    out = out
        .into_iter()
        .flat_map(|p| slots[r - 1].iter().map(move |x| {
            let mut v = p.clone();
            v.push(*x);
            v
        }))
        .collect();
    out
}

/// Spins (as doubled integers) in an iterated Clebsch–Gordan product.
fn clebsch_gordan(ps: &[i128]) -> BTreeMap<i128, u64> {
    let mut acc: BTreeMap<i128, u64> = BTreeMap::new();
    acc.insert(0, 1);
    for &p in ps {
        let mut next = BTreeMap::new();
        for (&s, &m) in &acc {
            let mut t = (s - p).abs();
            while t <= s + p {
                *next.entry(t).or_insert(0) += m;
                t += 2;
            }
        }
        acc = next;
    }
    acc
}

fn to_int(x: &Q) -> i128 {
    *x.numer() / *x.denom()
}

/// The M-types in the restriction of `tau`, each with its multiplicity.
pub fn mhat(spec: &GroupSpec, tau: &KType) -> Result<Vec<MTypeEntry>> {
    validate_ktype(spec, tau)?;
    let a = &tau.coords;
    let n = spec.n() as usize;
    let mut acc: BTreeMap<MType, u64> = BTreeMap::new();
    match spec.family() {
        Family::SpinEven => {
            for b in interlace_to_b(a) {
                *acc.entry(MType { b0: None, b }).or_insert(0) += 1;
            }
        }
        Family::SpinOdd => {
            for b in interlace_to_d(a) {
                *acc.entry(MType { b0: None, b }).or_insert(0) += 1;
            }
        }
        Family::SU => {
            let slots: Vec<Vec<Q>> = (1..n).map(|j| steps(a[j], a[j - 1], a[j])).collect();
            let total: Q = a.iter().fold(Q::zero(), |s, x| s + x);
            for b in product(&slots) {
                let sb = b.iter().fold(Q::zero(), |s, x| s + x);
                let b0 = (total - sb) / qi(2);
                *acc.entry(MType { b0: Some(b0), b }).or_insert(0) += 1;
            }
        }
        Family::Sp => {
            let lam = &a[..n];
            let a_last = to_int(&a[n]);
            let pad = |i: usize| if i < n { lam[i] } else { Q::zero() };
            let slots: Vec<Vec<Q>> = (0..n - 1).map(|i| steps(pad(i + 2), pad(i), Q::zero())).collect();
            for mu in product(&slots) {
                let mut all: Vec<i128> = lam.iter().chain(mu.iter()).map(to_int).collect();
                all.push(0);
                all.sort_unstable_by(|x, y| y.cmp(x));
                let ps: Vec<i128> = (0..n).map(|i| all[2 * i] - all[2 * i + 1]).collect();
                for (b1, m) in clebsch_gordan(&ps) {
                    for j in 0..=a_last.min(b1) {
                        let b0 = q(a_last + b1 - 2 * j, 2);
                        *acc.entry(MType { b0: Some(b0), b: mu.clone() }).or_insert(0) += m;
                    }
                }
            }
        }
        Family::F4 => {
            let h = q(1, 2);
            for c in interlace_to_d(a) {
                let d = [
                    h * (c[0] + c[1] + c[2] - c[3]),
                    h * (c[0] + c[1] - c[2] + c[3]),
                    h * (c[0] - c[1] + c[2] + c[3]),
                    h * (-c[0] + c[1] + c[2] + c[3]),
                ];
                for b in interlace_to_b(&d) {
                    *acc.entry(MType { b0: None, b }).or_insert(0) += 1;
                }
            }
        }
    }
    Ok(acc.into_iter().map(|(sigma, multiplicity)| MTypeEntry { sigma, multiplicity }).collect())
}

pub fn contains_trivial_m(spec: &GroupSpec, tau: &KType) -> Result<bool> {
    Ok(mhat(spec, tau)?.iter().any(|e| e.sigma.is_trivial()))
}

/// Shape parameters of a K-type containing the trivial M-type.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TauParams {
    /// `(N, 0, …, 0)`.
    Spin { n_top: i128 },
    /// `(M1, 0, …, 0, −M2, L)` with `L = M2 − M1`.
    SU { m1: i128, m2: i128, l: i128 },
    /// `(t1, t2, 0, …, 0, t(n+1))` with `t(n+1) = t1 − t2`.
    Sp { t1: i128, t2: i128, t3: i128 },
    /// `(a/2, b/2, b/2, b/2)`.
    F4 { a: i128, b: i128 },
}

impl TauParams {
    /// Coordinates of the K-type lattice point: `(m)`, `(m,l)` or `(p,q)`.
    pub fn lattice(&self) -> (i128, i128) {
        match *self {
            TauParams::Spin { n_top } => (n_top, 0),
            TauParams::SU { m1, m2, l } => (m1 + m2, l),
            TauParams::Sp { t1, t2, t3 } => (t1 + t2, t3),
            TauParams::F4 { a, b } => (a, b),
        }
    }
}

pub fn tau_params(spec: &GroupSpec, tau: &KType) -> Result<TauParams> {
    validate_ktype(spec, tau)?;
    let a = &tau.coords;
    let n = spec.n() as usize;
    let shape = |why: &str| {
        Err(Error::NotApplicable(format!("K-type {:?} {}", fmt_tuple(a), why)))
    };
    let ints = a.iter().all(is_integer);
    match spec.family() {
        Family::SpinEven => {
            if !ints || a[1..].iter().any(|x| !x.is_zero()) {
                return shape("is not of the form (N, 0, ..., 0)");
            }
            Ok(TauParams::Spin { n_top: to_int(&a[0]) })
        }
        Family::SpinOdd => shape("has no residue classification: the density has no poles"),
        Family::SU => {
            if a[1..n - 1].iter().any(|x| !x.is_zero()) || a[0].is_negative() || a[n - 1].is_positive() {
                return shape("is not of the form (M1, 0, ..., 0, -M2, L)");
            }
            let (m1, m2, l) = (to_int(&a[0]), -to_int(&a[n - 1]), to_int(&a[n]));
            if (m1 + m2 + l).rem_euclid(2) != 0 {
                return shape("violates the parity condition M1 + M2 + L even");
            }
            Ok(TauParams::SU { m1, m2, l })
        }
        Family::Sp => {
            if a[2..n].iter().any(|x| !x.is_zero()) {
                return shape("is not of the form (t1, t2, 0, ..., 0, t(n+1))");
            }
            let (t1, t2, t3) = (to_int(&a[0]), to_int(&a[1]), to_int(&a[n]));
            if (t1 + t2 + t3).rem_euclid(2) != 0 {
                return shape("violates the parity condition t1 + t2 + t(n+1) even");
            }
            Ok(TauParams::Sp { t1, t2, t3 })
        }
        Family::F4 => {
            if a[1] != a[2] || a[2] != a[3] {
                return shape("is not of the form (a/2, b/2, b/2, b/2)");
            }
            let (x, y) = (to_int(&(a[0] * qi(2))), to_int(&(a[1] * qi(2))));
            if (x - y).rem_euclid(2) != 0 {
                return shape("violates the parity condition a - b even");
            }
            Ok(TauParams::F4 { a: x, b: y })
        }
    }
}
