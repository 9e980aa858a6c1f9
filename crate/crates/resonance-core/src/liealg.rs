//! Root data, Killing inner products and Weyl group arithmetic.
//!
//! Every weight lives in the ambient ε-coordinates of a Cartan subalgebra of
//! `g_C`: n coordinates for Spin(2n,1), n+1 for Spin(2n+1,1), SU(n,1) and
//! Sp(n,1), four for F4. Subalgebra weights (K or M) use the same ambient
//! coordinates, so a single Gram matrix pairs everything.
//!
//! For Sp(n,1) two Cartans are in play. K-weights use the compact Cartan
//! with `Sp(n)` on the first n coordinates and `Sp(1)` on the last. M-weights
//! and infinitesimal characters use the split Cartan, where the restricted
//! root is `e1 + e2` and M = Sp(1) x Sp(n-1) sits on `e1 - e2` and
//! `e3..e(n+1)`. Both Cartans carry the same W-invariant Gram matrix.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use num_complex::Complex;
use num_traits::{One, Signed, Zero};
use once_cell::race::OnceBox;

use crate::error::{Error, Result};
use crate::rational::{q, qi, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    SpinEven,
    SpinOdd,
    SU,
    Sp,
    F4,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::SpinEven => "spin-even",
            Family::SpinOdd => "spin-odd",
            Family::SU => "su",
            Family::Sp => "sp",
            Family::F4 => "f4",
        }
    }

    pub fn from_name(s: &str) -> Option<Family> {
        Some(match s {
            "spin-even" => Family::SpinEven,
            "spin-odd" => Family::SpinOdd,
            "su" => Family::SU,
            "sp" => Family::Sp,
            "f4" => Family::F4,
            _ => return None,
        })
    }
}

/// A group in one of the rank one families. F4 stores `n = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupSpec {
    family: Family,
    n: u32,
}

impl GroupSpec {
    pub fn new(family: Family, n: u32) -> Result<GroupSpec> {
        if family == Family::F4 {
            return Ok(GroupSpec { family, n: 0 });
        }
        if n < 2 {
            return Err(Error::Parameter(format!("{} requires n >= 2, got {}", family.name(), n)));
        }
        if n > 40 {
            return Err(Error::Parameter(format!("n = {} is outside the supported range", n)));
        }
        Ok(GroupSpec { family, n })
    }

    pub fn f4() -> GroupSpec {
        GroupSpec { family: Family::F4, n: 0 }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of ambient ε-coordinates.
    pub fn rank(&self) -> usize {
        let n = self.n as usize;
        match self.family {
            Family::SpinEven => n,
            Family::SpinOdd | Family::SU | Family::Sp => n + 1,
            Family::F4 => 4,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Algebra {
    G,
    K,
    /// The Spin(8) between Spin(9) and Spin(7); F4 only.
    K1,
    M,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    pub coords: Vec<Q>,
    pub algebra: Algebra,
}

impl Weight {
    pub fn new(coords: Vec<Q>, algebra: Algebra) -> Weight {
        Weight { coords, algebra }
    }

    pub fn zero(spec: &GroupSpec, algebra: Algebra) -> Weight {
        Weight { coords: vec![Q::zero(); spec.rank()], algebra }
    }

    pub fn from_ints(xs: &[i128], algebra: Algebra) -> Weight {
        Weight { coords: xs.iter().map(|&x| qi(x)).collect(), algebra }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        Weight { coords, algebra: self.algebra }
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect();
        Weight { coords, algebra: self.algebra }
    }

    pub fn scale(&self, c: Q) -> Weight {
        Weight { coords: self.coords.iter().map(|a| a * c).collect(), algebra: self.algebra }
    }

    pub fn retag(mut self, algebra: Algebra) -> Weight {
        self.algebra = algebra;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatum {
    pub roots: Vec<Weight>,
    pub positive_roots: Vec<Weight>,
    pub simple_roots: Vec<Weight>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupConstants {
    pub m_half: u32,
    pub m_long: u32,
    pub rho_alpha: Q,
    /// ½(m_half + m_long − 1); not an integer for Spin(2n+1,1).
    pub m_sup: Q,
    pub alpha_norm_sq: Q,
    /// Spin(2n+1,1) has a polynomial density with no poles.
    pub pole_free: bool,
}

pub fn group_constants(spec: &GroupSpec) -> GroupConstants {
    let n = spec.n;
    let (m_half, m_long) = match spec.family {
        Family::SpinEven => (0, 2 * n - 1),
        Family::SpinOdd => (0, 2 * n),
        Family::SU => (2 * (n - 1), 1),
        Family::Sp => (4 * (n - 1), 3),
        Family::F4 => (8, 7),
    };
    let (h, l) = (m_half as i128, m_long as i128);
    GroupConstants {
        m_half,
        m_long,
        rho_alpha: q(2 * l + h, 4),
        m_sup: q(h + l - 1, 2),
        alpha_norm_sq: q(2, h + 4 * l),
        pole_free: spec.family == Family::SpinOdd,
    }
}

fn unit(dim: usize, i: usize, c: Q) -> Vec<Q> {
    let mut v = vec![Q::zero(); dim];
    v[i] = c;
    v
}

fn pm_pairs(dim: usize, idx: &[usize], out: &mut Vec<Vec<Q>>) {
    for (a, &i) in idx.iter().enumerate() {
        for &j in &idx[a + 1..] {
            for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let mut v = vec![Q::zero(); dim];
                v[i] = qi(si);
                v[j] = qi(sj);
                out.push(v);
            }
        }
    }
}

fn roots_b(dim: usize, idx: &[usize]) -> Vec<Vec<Q>> {
    let mut out = Vec::new();
    pm_pairs(dim, idx, &mut out);
    for &i in idx {
        out.push(unit(dim, i, Q::one()));
        out.push(unit(dim, i, -Q::one()));
    }
    out
}

fn roots_c(dim: usize, idx: &[usize]) -> Vec<Vec<Q>> {
    let mut out = Vec::new();
    pm_pairs(dim, idx, &mut out);
    for &i in idx {
        out.push(unit(dim, i, qi(2)));
        out.push(unit(dim, i, qi(-2)));
    }
    out
}

fn roots_d(dim: usize, idx: &[usize]) -> Vec<Vec<Q>> {
    let mut out = Vec::new();
    pm_pairs(dim, idx, &mut out);
    out
}

fn roots_a(dim: usize, idx: &[usize]) -> Vec<Vec<Q>> {
    let mut out = Vec::new();
    for &i in idx {
        for &j in idx {
            if i != j {
                let mut v = vec![Q::zero(); dim];
                v[i] = Q::one();
                v[j] = -Q::one();
                out.push(v);
            }
        }
    }
    out
}

fn roots_f4() -> Vec<Vec<Q>> {
    let mut out = roots_b(4, &[0, 1, 2, 3]);
    for mask in 0..16u32 {
        out.push((0..4).map(|i| if mask >> i & 1 == 1 { q(-1, 2) } else { q(1, 2) }).collect());
    }
    out
}

fn f4_alpha() -> Vec<Q> {
    vec![q(1, 2), q(-1, 2), q(-1, 2), q(-1, 2)]
}

fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

/// Regular vector making the given simple roots all pair to 1.
fn positivity_from_simple(simple: &[Vec<Q>]) -> Vec<Q> {
    let r = simple.len();
    let mut a: Vec<Vec<Q>> = (0..r)
        .map(|i| {
            let mut row: Vec<Q> = (0..r).map(|j| dot(&simple[i], &simple[j])).collect();
            row.push(Q::one());
            row
        })
        .collect();
    let c = solve_augmented(&mut a);
    let dim = simple[0].len();
    let mut h = vec![Q::zero(); dim];
    for (ci, s) in c.iter().zip(simple) {
        for (hk, sk) in h.iter_mut().zip(s) {
            *hk += ci * sk;
        }
    }
    h
}

/// Gauss–Jordan on an augmented square system; the matrix must be invertible.
fn solve_augmented(a: &mut [Vec<Q>]) -> Vec<Q> {
    let r = a.len();
    for col in 0..r {
        let piv = (col..r).find(|&i| !a[i][col].is_zero()).expect("singular system");
        a.swap(col, piv);
        let p = a[col][col];
        for x in a[col].iter_mut() {
            *x /= p;
        }
        for i in 0..r {
            if i != col && !a[i][col].is_zero() {
                let f = a[i][col];
                let pivot_row = a[col].clone();
                for (x, y) in a[i].iter_mut().zip(&pivot_row) {
                    *x -= f * y;
                }
            }
        }
    }
    a.iter().map(|row| row[r]).collect()
}

fn invert(m: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let r = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut row = row.clone();
            row.extend((0..r).map(|j| if i == j { Q::one() } else { Q::zero() }));
            row
        })
        .collect();
    for col in 0..r {
        let piv = (col..r).find(|&i| !a[i][col].is_zero()).expect("singular matrix");
        a.swap(col, piv);
        let p = a[col][col];
        for x in a[col].iter_mut() {
            *x /= p;
        }
        for i in 0..r {
            if i != col && !a[i][col].is_zero() {
                let f = a[i][col];
                let pivot_row = a[col].clone();
                for (x, y) in a[i].iter_mut().zip(&pivot_row) {
                    *x -= f * y;
                }
            }
        }
    }
    a.into_iter().map(|row| row[r..].to_vec()).collect()
}

struct RawDatum {
    roots: Vec<Vec<Q>>,
    positivity: Vec<Q>,
}

fn raw_datum(spec: &GroupSpec, algebra: Algebra) -> Result<RawDatum> {
    let dim = spec.rank();
    let n = spec.n as usize;
    let std_h: Vec<Q> = (0..dim).map(|i| qi((dim - i) as i128)).collect();
    let all: Vec<usize> = (0..dim).collect();
    if algebra == Algebra::K1 && spec.family != Family::F4 {
        return Err(Error::Unsupported("the intermediate algebra k1 exists only for F4".into()));
    }
    let roots = match (spec.family, algebra) {
        (Family::SpinEven, Algebra::G) => roots_b(dim, &all),
        (Family::SpinEven, Algebra::K) => roots_d(dim, &all),
        (Family::SpinEven, Algebra::M) => roots_b(dim, &all[..n - 1]),
        (Family::SpinOdd, Algebra::G) => roots_d(dim, &all),
        (Family::SpinOdd, Algebra::K) => roots_b(dim, &all[..n]),
        (Family::SpinOdd, Algebra::M) => roots_d(dim, &all[..n]),
        (Family::SU, Algebra::G) => roots_a(dim, &all),
        (Family::SU, Algebra::K) => roots_a(dim, &all[..n]),
        (Family::SU, Algebra::M) => roots_a(dim, &all[1..n]),
        (Family::Sp, Algebra::G) => roots_c(dim, &all),
        (Family::Sp, Algebra::K) => {
            let mut r = roots_c(dim, &all[..n]);
            r.push(unit(dim, n, qi(2)));
            r.push(unit(dim, n, qi(-2)));
            r
        }
        (Family::Sp, Algebra::M) => {
            let mut r = roots_c(dim, &all[2..]);
            let mut a = vec![Q::zero(); dim];
            a[0] = Q::one();
            a[1] = -Q::one();
            r.push(a.iter().map(|x| -x).collect());
            r.push(a);
            r
        }
        (Family::F4, Algebra::G) => {
            let simple = f4_simple_g();
            return Ok(RawDatum { roots: roots_f4(), positivity: positivity_from_simple(&simple) });
        }
        (Family::F4, Algebra::K) => roots_b(4, &all),
        (Family::F4, Algebra::K1) => roots_d(4, &all),
        (Family::F4, Algebra::M) => {
            let a = f4_alpha();
            let roots = roots_f4().into_iter().filter(|r| dot(r, &a).is_zero()).collect();
            let simple = f4_simple_m();
            return Ok(RawDatum { roots, positivity: positivity_from_simple(&simple) });
        }
        (_, Algebra::K1) => unreachable!(),
    };
    Ok(RawDatum { roots, positivity: std_h })
}

fn f4_simple_g() -> Vec<Vec<Q>> {
    vec![
        vec![qi(0), qi(1), qi(-1), qi(0)],
        vec![qi(0), qi(0), qi(1), qi(-1)],
        vec![qi(0), qi(0), qi(0), qi(1)],
        f4_alpha(),
    ]
}

fn f4_simple_m() -> Vec<Vec<Q>> {
    vec![
        vec![qi(0), qi(1), qi(-1), qi(0)],
        vec![qi(0), qi(0), qi(1), qi(-1)],
        vec![q(1, 2), q(-1, 2), q(1, 2), q(1, 2)],
    ]
}

pub fn root_datum(spec: &GroupSpec, algebra: Algebra) -> Result<RootDatum> {
    let raw = raw_datum(spec, algebra)?;
    let positive: Vec<Vec<Q>> = raw
        .roots
        .iter()
        .filter(|r| dot(r, &raw.positivity) > Q::zero())
        .cloned()
        .collect();
    let pos_set: BTreeSet<Vec<Q>> = positive.iter().cloned().collect();
    // A positive root is simple iff it is not a sum of two positive roots.
    let simple: Vec<Vec<Q>> = positive
        .iter()
        .filter(|r| {
            !positive.iter().any(|a| {
                let diff: Vec<Q> = r.iter().zip(a.iter()).map(|(x, y)| x - y).collect();
                pos_set.contains(&diff)
            })
        })
        .cloned()
        .collect();
    let wrap = |v: Vec<Vec<Q>>| v.into_iter().map(|c| Weight::new(c, algebra)).collect();
    Ok(RootDatum { roots: wrap(raw.roots), positive_roots: wrap(positive), simple_roots: wrap(simple) })
}

/// Inner product on weights dual to `B(H,H') = Σ_{β ∈ Φ(g)} β(H)β(H')`.
#[derive(Clone, Debug)]
pub struct Gram {
    matrix: Vec<Vec<Q>>,
    scalar: Option<Q>,
}

impl Gram {
    pub fn new(spec: &GroupSpec) -> Gram {
        let dim = spec.rank();
        let roots = raw_datum(spec, Algebra::G).expect("g is always available").roots;
        let mut b = vec![vec![Q::zero(); dim]; dim];
        for r in &roots {
            for i in 0..dim {
                for j in 0..dim {
                    b[i][j] += r[i] * r[j];
                }
            }
        }
        let matrix = if spec.family == Family::SU {
            // B kills (1,…,1); take the pseudo-inverse through B + uuᵀ.
            let nn = qi(dim as i128);
            for row in b.iter_mut() {
                for x in row.iter_mut() {
                    *x += Q::one();
                }
            }
            let mut inv = invert(&b);
            for row in inv.iter_mut() {
                for x in row.iter_mut() {
                    *x -= Q::one() / (nn * nn);
                }
            }
            inv
        } else {
            invert(&b)
        };
        let d0 = matrix[0][0];
        let scalar = (0..dim)
            .all(|i| (0..dim).all(|j| matrix[i][j] == if i == j { d0 } else { Q::zero() }))
            .then_some(d0);
        Gram { matrix, scalar }
    }

    pub fn matrix(&self) -> &[Vec<Q>] {
        &self.matrix
    }

    pub fn pair(&self, a: &[Q], b: &[Q]) -> Q {
        if let Some(c) = self.scalar {
            return c * dot(a, b);
        }
        let mut acc = Q::zero();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                acc += ai * self.matrix[i][j] * bj;
            }
        }
        acc
    }

    pub fn norm_sq(&self, a: &[Q]) -> Q {
        self.pair(a, a)
    }
}

pub fn killing_gram(spec: &GroupSpec) -> Vec<Vec<Q>> {
    Gram::new(spec).matrix
}

pub fn inner(spec: &GroupSpec, w1: &Weight, w2: &Weight) -> Result<Q> {
    let dim = spec.rank();
    for w in [w1, w2] {
        if w.coords.len() != dim {
            return Err(Error::Dimension { expected: dim, got: w.coords.len() });
        }
    }
    Ok(Gram::new(spec).pair(&w1.coords, &w2.coords))
}

pub fn rho_of(spec: &GroupSpec, algebra: Algebra) -> Result<Weight> {
    let rd = root_datum(spec, algebra)?;
    let mut rho = vec![Q::zero(); spec.rank()];
    for r in &rd.positive_roots {
        for (x, y) in rho.iter_mut().zip(&r.coords) {
            *x += y / qi(2);
        }
    }
    Ok(Weight::new(rho, algebra))
}

/// The restricted root α in ambient coordinates.
pub fn alpha(spec: &GroupSpec) -> Weight {
    let dim = spec.rank();
    let coords = match spec.family {
        Family::SpinEven | Family::SpinOdd => unit(dim, dim - 1, Q::one()),
        Family::SU => {
            let mut v = unit(dim, 0, Q::one());
            v[dim - 1] = -Q::one();
            v
        }
        Family::Sp => {
            let mut v = unit(dim, 0, Q::one());
            v[1] = Q::one();
            v
        }
        Family::F4 => f4_alpha(),
    };
    Weight::new(coords, Algebra::G)
}

/// Half-sum of restricted roots with multiplicity, `ρ_α·α`.
pub fn rho_restricted(spec: &GroupSpec) -> Weight {
    alpha(spec).scale(group_constants(spec).rho_alpha)
}

/// Dominance and integrality of `mu` for the given algebra.
pub fn is_dominant_integral(spec: &GroupSpec, algebra: Algebra, mu: &Weight) -> Result<bool> {
    let rd = root_datum(spec, algebra)?;
    let g = Gram::new(spec);
    Ok(rd.simple_roots.iter().all(|b| {
        let c = qi(2) * g.pair(&mu.coords, &b.coords) / g.norm_sq(&b.coords);
        c >= Q::zero() && c.is_integer()
    }))
}

pub fn weyl_dim(spec: &GroupSpec, algebra: Algebra, mu: &Weight) -> Result<u128> {
    let dim = spec.rank();
    if mu.coords.len() != dim {
        return Err(Error::Dimension { expected: dim, got: mu.coords.len() });
    }
    if !is_dominant_integral(spec, algebra, mu)? {
        return Err(Error::Domain("weight is not dominant integral".into()));
    }
    let rd = root_datum(spec, algebra)?;
    let rho = rho_of(spec, algebra)?;
    let shifted = mu.add(&rho);
    let g = Gram::new(spec);
    let mut d = Q::one();
    for b in &rd.positive_roots {
        d *= g.pair(&shifted.coords, &b.coords) / g.pair(&rho.coords, &b.coords);
    }
    if !d.is_integer() || *d.numer() <= 0 {
        return Err(Error::Domain(format!("Weyl product {} is not a positive integer", d)));
    }
    Ok(*d.numer() as u128)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CasimirConvention {
    /// `−⟨λ,λ⟩ − ⟨ρ,ρ⟩ + ⟨μ_σ+ρ_m, μ_σ+ρ_m⟩`.
    Paper,
    /// The same minus `⟨ρ_m,ρ_m⟩`, vanishing on the trivial representation.
    HarishChandra,
}

/// Casimir scalar on the principal series `π^σ_λ` with `λ = lambda·α`.
pub fn casimir_scalar(
    spec: &GroupSpec,
    sigma_weight: &Weight,
    lambda: Complex<Q>,
    convention: CasimirConvention,
) -> Result<Complex<Q>> {
    let g = Gram::new(spec);
    let consts = group_constants(spec);
    let rho_m = rho_of(spec, Algebra::M)?;
    if sigma_weight.coords.len() != spec.rank() {
        return Err(Error::Dimension { expected: spec.rank(), got: sigma_weight.coords.len() });
    }
    let a2 = consts.alpha_norm_sq;
    let shifted = sigma_weight.add(&rho_m);
    let mut real = -consts.rho_alpha * consts.rho_alpha * a2 + g.norm_sq(&shifted.coords);
    if convention == CasimirConvention::HarishChandra {
        real -= g.norm_sq(&rho_m.coords);
    }
    let lam_sq = lambda * lambda;
    Ok(Complex::new(real - lam_sq.re * a2, -lam_sq.im * a2))
}

/// `⟨μ+2ρ_K, μ+2ρ_K⟩` for a K-weight.
pub fn vogan_norm(spec: &GroupSpec, mu: &Weight) -> Result<Q> {
    if mu.coords.len() != spec.rank() {
        return Err(Error::Dimension { expected: spec.rank(), got: mu.coords.len() });
    }
    let rho_k = rho_of(spec, Algebra::K)?;
    let x = mu.add(&rho_k.scale(qi(2)));
    Ok(Gram::new(spec).norm_sq(&x.coords))
}

fn sorted_abs(xs: &[Q]) -> Vec<Q> {
    let mut v: Vec<Q> = xs.iter().map(|x| x.abs()).collect();
    v.sort();
    v
}

fn trace_zero_sorted(xs: &[Q]) -> Vec<Q> {
    let mean = xs.iter().fold(Q::zero(), |a, b| a + b) / qi(xs.len() as i128);
    let mut v: Vec<Q> = xs.iter().map(|x| x - mean).collect();
    v.sort();
    v
}

type Mat4 = [[Q; 4]; 4];

fn reflection4(b: &[Q]) -> Mat4 {
    let nb = dot(b, b);
    let mut m = [[Q::zero(); 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            let id = if i == j { Q::one() } else { Q::zero() };
            m[i][j] = id - qi(2) * b[i] * b[j] / nb;
        }
    }
    m
}

fn mul4(a: &Mat4, b: &Mat4) -> Mat4 {
    let mut m = [[Q::zero(); 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                m[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    m
}

static F4_WEYL: OnceBox<Vec<Mat4>> = OnceBox::new();

/// W(F4) as 4x4 rational matrices, built by closure over simple reflections.
pub fn f4_weyl_group() -> &'static [Mat4] {
    F4_WEYL.get_or_init(|| {
        let gens: Vec<Mat4> = f4_simple_g().iter().map(|b| reflection4(b)).collect();
        let mut id = [[Q::zero(); 4]; 4];
        for (i, row) in id.iter_mut().enumerate() {
            row[i] = Q::one();
        }
        let mut seen: BTreeSet<Mat4> = BTreeSet::new();
        seen.insert(id);
        let mut frontier = vec![id];
        let mut all = vec![id];
        while let Some(w) = frontier.pop() {
            for s in &gens {
                let ws = mul4(s, &w);
                if seen.insert(ws) {
                    frontier.push(ws);
                    all.push(ws);
                }
            }
        }
        alloc::boxed::Box::new(all)
    })
}

/// Whether some element of `W(g_C)` carries `chi1` to `chi2`.
pub fn weyl_orbit_equal(spec: &GroupSpec, chi1: &Weight, chi2: &Weight) -> bool {
    let (a, b) = (&chi1.coords, &chi2.coords);
    if a.len() != spec.rank() || b.len() != spec.rank() {
        return false;
    }
    match spec.family {
        Family::SpinEven | Family::Sp => sorted_abs(a) == sorted_abs(b),
        Family::SpinOdd => {
            if sorted_abs(a) != sorted_abs(b) {
                return false;
            }
            let has_zero = a.iter().any(Zero::is_zero);
            let negs = |v: &[Q]| v.iter().filter(|x| x.is_negative()).count() % 2;
            has_zero || negs(a) == negs(b)
        }
        Family::SU => trace_zero_sorted(a) == trace_zero_sorted(b),
        Family::F4 => f4_weyl_group().iter().any(|w| {
            (0..4).all(|i| (0..4).fold(Q::zero(), |acc, j| acc + w[i][j] * a[j]) == b[i])
        }),
    }
}

/// Dominant representative of the `W(g_C)`-orbit of a weight, by repeated
/// simple reflections. Independent of the explicit group descriptions used in
/// [`weyl_orbit_equal`].
pub fn dominant_representative(spec: &GroupSpec, chi: &Weight) -> Weight {
    let rd = root_datum(spec, Algebra::G).expect("g is always available");
    let g = Gram::new(spec);
    let mut x = chi.coords.clone();
    loop {
        let hit = rd.simple_roots.iter().find(|b| g.pair(&x, &b.coords).is_negative());
        match hit {
            None => break,
            Some(b) => {
                let c = qi(2) * g.pair(&x, &b.coords) / g.norm_sq(&b.coords);
                for (xi, bi) in x.iter_mut().zip(&b.coords) {
                    *xi -= c * bi;
                }
            }
        }
    }
    if spec.family == Family::SU {
        let mean = x.iter().fold(Q::zero(), |a, b| a + b) / qi(x.len() as i128);
        for xi in x.iter_mut() {
            *xi -= mean;
        }
    }
    Weight::new(x, Algebra::G)
}
