//! Residue representations `E_k` at the poles of the trivial M-type.
//!
//! K-types of the spherical principal series form a two-parameter lattice
//! (one parameter for Spin(2n,1)). Lines through the lattice cut it into the
//! constituents of the composition series, and `E_k` is the constituent that
//! contains the K-type of the resolvent's τ.
//!
//! Lattice points and their K-weights:
//!
//! | family | point | K-weight |
//! |---|---|---|
//! | Spin(2n,1) | `m` | `(m, 0, …, 0)` |
//! | SU(n,1) | `(m, l)` | `(m1, 0, …, 0, −m2, l)`, `m1 = (m−l)/2`, `m2 = (m+l)/2` |
//! | Sp(n,1) | `(m, l)` | `(m1, m2, 0, …, 0, l)`, `m1 = (m+l)/2`, `m2 = (m−l)/2` |
//! | F4 | `(p, q)` | `(p/2, q/2, q/2, q/2)` |

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::branching::{contains_trivial_m, m_weight, tau_params, KType, MType, TauParams};
use crate::error::{Error, Result};
use crate::liealg::{
    alpha, group_constants, rho_of, root_datum, vogan_norm, weyl_orbit_equal, Algebra, Family, Gram,
    GroupSpec, Weight,
};
use crate::rational::{q, qi, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Case {
    /// Spin(2n,1), `N ≤ k`.
    Finite,
    /// Spin(2n,1), `N ≥ k+1`.
    Infinite,
    East,
    North,
    South,
    West,
}

impl Case {
    pub fn name(self) -> &'static str {
        match self {
            Case::Finite => "finite",
            Case::Infinite => "big",
            Case::East => "east",
            Case::North => "north",
            Case::South => "south",
            Case::West => "west",
        }
    }

    pub fn from_name(s: &str) -> Option<Case> {
        Some(match s {
            "finite" => Case::Finite,
            "big" | "infinite" => Case::Infinite,
            "east" => Case::East,
            "north" => Case::North,
            "south" => Case::South,
            "west" => Case::West,
            _ => return None,
        })
    }

    /// The circled numeral used for the constituent in each family.
    pub fn symbol_for(self, family: Family) -> &'static str {
        match self {
            Case::Finite | Case::East => "①",
            Case::Infinite | Case::North => "②",
            Case::South => "③",
            Case::West if family == Family::SU => "④",
            Case::West => "③",
        }
    }
}

/// Cases available for a family, in table order.
pub fn cases(spec: &GroupSpec) -> &'static [Case] {
    match spec.family() {
        Family::SpinEven => &[Case::Infinite, Case::Finite],
        Family::SU => &[Case::East, Case::North, Case::South, Case::West],
        Family::Sp | Family::F4 => &[Case::East, Case::North, Case::West],
        Family::SpinOdd => &[],
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint {
    /// `m` for Spin, SU and Sp; `p` for F4.
    pub x: i128,
    /// `l` for SU and Sp; `q` for F4; zero for Spin.
    pub y: i128,
}

impl LatticePoint {
    pub fn new(x: i128, y: i128) -> LatticePoint {
        LatticePoint { x, y }
    }
}

fn need_classifiable(spec: &GroupSpec) -> Result<()> {
    if spec.family() == Family::SpinOdd {
        return Err(Error::NotApplicable("Spin(2n+1,1) has no poles, hence no residue representations".into()));
    }
    Ok(())
}

fn need_case(spec: &GroupSpec, case: Case) -> Result<()> {
    need_classifiable(spec)?;
    if !cases(spec).contains(&case) {
        return Err(Error::Parameter(format!("case {} does not exist for {}", case.name(), spec.family().name())));
    }
    Ok(())
}

pub fn is_lattice_point(spec: &GroupSpec, pt: LatticePoint) -> bool {
    let LatticePoint { x, y } = pt;
    match spec.family() {
        Family::SpinEven => x >= 0 && y == 0,
        Family::SU => x >= 0 && y.abs() <= x && (x + y) % 2 == 0,
        Family::Sp | Family::F4 => x >= 0 && y >= 0 && y <= x && (x + y) % 2 == 0,
        Family::SpinOdd => false,
    }
}

/// K-weight of a lattice point, in ambient coordinates.
pub fn lattice_weight(spec: &GroupSpec, pt: LatticePoint) -> Weight {
    let n = spec.n() as usize;
    let mut c = vec![Q::zero(); spec.rank()];
    let LatticePoint { x, y } = pt;
    match spec.family() {
        Family::SpinEven | Family::SpinOdd => c[0] = qi(x),
        Family::SU => {
            c[0] = q(x - y, 2);
            c[n - 1] = -q(x + y, 2);
            c[n] = qi(y);
        }
        Family::Sp => {
            c[0] = q(x + y, 2);
            c[1] = q(x - y, 2);
            c[n] = qi(y);
        }
        Family::F4 => c = vec![q(x, 2), q(y, 2), q(y, 2), q(y, 2)],
    }
    Weight::new(c, Algebra::K)
}

/// Lattice point of a K-type containing the trivial M-type.
pub fn params_point(p: &TauParams) -> LatticePoint {
    let (x, y) = p.lattice();
    LatticePoint { x, y }
}

/// The constituent holding a lattice point at the pole indexed by `k`.
pub fn point_case(spec: &GroupSpec, k: i128, pt: LatticePoint) -> Result<Case> {
    need_classifiable(spec)?;
    if !is_lattice_point(spec, pt) {
        return Err(Error::Domain(format!("({}, {}) is not a lattice point", pt.x, pt.y)));
    }
    let LatticePoint { x: m, y: l } = pt;
    Ok(match spec.family() {
        Family::SpinEven => {
            if m >= k + 1 {
                Case::Infinite
            } else {
                Case::Finite
            }
        }
        Family::SU => {
            let outer = (m - 2 * k - 1).abs() + 1;
            if m >= 2 * k + 2 && l.abs() <= m - 2 * k - 2 {
                Case::East
            } else if l >= outer {
                Case::North
            } else if l <= -outer {
                Case::South
            } else {
                Case::West
            }
        }
        Family::Sp | Family::F4 => {
            let east_offset = if spec.family() == Family::Sp { 4 } else { 8 };
            if l <= m - 2 * k - east_offset {
                Case::East
            } else if l < 2 * k + 2 - m {
                Case::West
            } else {
                Case::North
            }
        }
        Family::SpinOdd => unreachable!(),
    })
}

/// How points on the barrier lines are assigned.
pub fn boundary_policy(spec: &GroupSpec) -> &'static str {
    match spec.family() {
        Family::SpinEven => "big: m >= k+1; finite: m <= k",
        Family::SU => {
            "east: m >= 2k+2 and |l| <= m-2k-2 (closed); north: l >= |m-2k-1|+1; \
             south: l <= -(|m-2k-1|+1); west: the remaining points, |l| < 2k+2-m (open)"
        }
        Family::Sp => "east: l <= m-2k-4 (closed); west: l < 2k+2-m (open); north: the rest",
        Family::F4 => "east: q <= p-2k-8 (closed); west: q < 2k+2-p (open); north: the rest",
        Family::SpinOdd => "",
    }
}

/// All lattice points of a constituent with first coordinate at most `bound`.
pub fn constituent_ktypes(spec: &GroupSpec, case: Case, k: i128, bound: i128) -> Result<Vec<LatticePoint>> {
    need_case(spec, case)?;
    let mut out = Vec::new();
    for x in 0..=bound.max(-1) {
        let ys: Vec<i128> = match spec.family() {
            Family::SpinEven => vec![0],
            Family::SU => (-x..=x).step_by(2).collect(),
            _ => ((x % 2)..=x).step_by(2).collect(),
        };
        for y in ys {
            let pt = LatticePoint { x, y };
            if point_case(spec, k, pt)? == case {
                out.push(pt);
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalKType {
    pub point: LatticePoint,
    pub weight: Weight,
    pub norm: Q,
    /// Other points attaining the same norm; the lexicographically smallest wins.
    pub ties: Vec<LatticePoint>,
}

pub fn minimal_ktype_search(spec: &GroupSpec, case: Case, k: i128, bound: i128) -> Result<MinimalKType> {
    let mut best: Option<(Q, LatticePoint)> = None;
    let mut ties = Vec::new();
    for pt in constituent_ktypes(spec, case, k, bound)? {
        let nrm = vogan_norm(spec, &lattice_weight(spec, pt))?;
        match &best {
            Some((b, _)) if nrm > *b => {}
            Some((b, _)) if nrm == *b => ties.push(pt),
            _ => {
                best = Some((nrm, pt));
                ties.clear();
            }
        }
    }
    let (norm, point) = best
        .ok_or_else(|| Error::Region(format!("constituent {} is empty up to bound {}", case.name(), bound)))?;
    Ok(MinimalKType { point, weight: lattice_weight(spec, point), norm, ties })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Delta {
    MType { sigma: MType, weight: Weight },
    DiscreteSeries { blattner: Weight, hc_param: Option<Weight> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Nu {
    /// `ν = c·α`.
    Real(Q),
    /// `ν = iλ_k` with `λ_k = −iv`.
    ILambda { k: i128, v: Q },
    /// Discrete series carry no `(δ, ν)`.
    NotApplicable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OrbitLabel {
    Zero,
    HalfRoot,
    LongRoot,
    N1,
    N2,
}

impl OrbitLabel {
    pub fn name(self) -> &'static str {
        match self {
            OrbitLabel::Zero => "zero",
            OrbitLabel::HalfRoot => "half_root",
            OrbitLabel::LongRoot => "long_root",
            OrbitLabel::N1 => "n1",
            OrbitLabel::N2 => "n2",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitRecord {
    pub label: OrbitLabel,
    pub real_dim: u32,
    /// Jordan type in the defining representation of `g_C`; `None` for F4.
    pub complex_partition: Option<Vec<u32>>,
    pub description: String,
}

fn partition(head: &[u32], ones: u32) -> Vec<u32> {
    let mut v = head.to_vec();
    v.extend(core::iter::repeat(1).take(ones as usize));
    v
}

pub fn nilpotent_orbits(spec: &GroupSpec) -> Result<Vec<OrbitRecord>> {
    need_classifiable(spec)?;
    let n = spec.n();
    let rec = |label, real_dim, p: Option<Vec<u32>>, d: &str| OrbitRecord {
        label,
        real_dim,
        complex_partition: p,
        description: d.into(),
    };
    Ok(match spec.family() {
        Family::SpinEven => vec![
            rec(OrbitLabel::Zero, 0, Some(partition(&[], 2 * n + 1)), "zero orbit"),
            rec(OrbitLabel::LongRoot, 4 * n - 2, Some(partition(&[3], 2 * n - 2)), "unique nonzero orbit"),
        ],
        Family::SU => vec![
            rec(OrbitLabel::Zero, 0, Some(partition(&[], n + 1)), "zero orbit"),
            rec(OrbitLabel::HalfRoot, 4 * n - 2, Some(partition(&[3], n - 2)), "principal orbit"),
            rec(OrbitLabel::N1, 2 * n, Some(partition(&[2], n - 1)), "minimal orbit, first real form"),
            rec(OrbitLabel::N2, 2 * n, Some(partition(&[2], n - 1)), "minimal orbit, second real form"),
        ],
        Family::Sp => vec![
            rec(OrbitLabel::Zero, 0, Some(partition(&[], 2 * n + 2)), "zero orbit"),
            rec(OrbitLabel::HalfRoot, 8 * n - 2, Some(partition(&[3, 3], 2 * n - 4)), "principal orbit"),
            rec(OrbitLabel::LongRoot, 4 * n + 2, Some(partition(&[2, 2], 2 * n - 2)), "minimal orbit"),
        ],
        Family::F4 => vec![
            rec(OrbitLabel::Zero, 0, None, "zero orbit"),
            rec(OrbitLabel::HalfRoot, 30, None, "principal orbit"),
            rec(OrbitLabel::LongRoot, 22, None, "minimal orbit"),
        ],
        Family::SpinOdd => unreachable!(),
    })
}

pub fn gk_dim(spec: &GroupSpec, case: Case) -> u32 {
    let n = spec.n();
    match (spec.family(), case) {
        (Family::SpinEven, Case::Infinite) => 2 * n - 1,
        (Family::SU, Case::East) => 2 * n - 1,
        (Family::SU, Case::North) | (Family::SU, Case::South) => n,
        (Family::Sp, Case::East) => 4 * n - 1,
        (Family::Sp, Case::North) => 2 * n + 1,
        (Family::F4, Case::East) => 15,
        (Family::F4, Case::North) => 11,
        _ => 0,
    }
}

fn orbit_label(spec: &GroupSpec, case: Case) -> OrbitLabel {
    match (spec.family(), case) {
        (_, Case::Finite) | (_, Case::West) => OrbitLabel::Zero,
        (Family::SpinEven, _) => OrbitLabel::LongRoot,
        (_, Case::East) => OrbitLabel::HalfRoot,
        (Family::SU, Case::North) => OrbitLabel::N2,
        (Family::SU, Case::South) => OrbitLabel::N1,
        _ => OrbitLabel::LongRoot,
    }
}

/// Langlands data for `E_k` in a given constituent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableEntry {
    pub minimal: LatticePoint,
    pub delta: Delta,
    pub nu: Nu,
}

fn mtype(spec: &GroupSpec, b0: Option<Q>, b: Vec<Q>) -> Delta {
    let sigma = MType { b0, b };
    let weight = m_weight(spec, &sigma);
    Delta::MType { sigma, weight }
}

fn padded(len: usize, head: &[Q]) -> Vec<Q> {
    let mut v = head.to_vec();
    v.resize(len, Q::zero());
    v
}

/// Pole `v` of the trivial M-type indexed by `k` from the first pole.
pub fn pole_value(spec: &GroupSpec, k: i128) -> Q {
    group_constants(spec).rho_alpha + qi(k)
}

pub fn table_entry(spec: &GroupSpec, case: Case, k: i128) -> Result<TableEntry> {
    need_case(spec, case)?;
    let n = spec.n() as i128;
    if matches!(case, Case::Finite | Case::West) {
        let t = MType::trivial(spec);
        return Ok(TableEntry {
            minimal: LatticePoint::new(0, 0),
            delta: mtype(spec, t.b0, t.b),
            nu: Nu::ILambda { k, v: pole_value(spec, k) },
        });
    }
    let kk = k + 1;
    let entry = match (spec.family(), case) {
        (Family::SpinEven, _) => TableEntry {
            minimal: LatticePoint::new(kk, 0),
            delta: mtype(spec, None, padded(n as usize - 1, &[qi(kk)])),
            nu: Nu::Real(q(2 * n - 3, 2)),
        },
        (Family::SU, Case::East) => {
            let minimal = LatticePoint::new(2 * kk, 0);
            if n == 2 {
                TableEntry { minimal, delta: discrete_series(spec, k, minimal), nu: Nu::NotApplicable }
            } else {
                let mut b = vec![Q::zero(); n as usize - 1];
                b[0] = qi(kk);
                b[n as usize - 2] = qi(-kk);
                TableEntry { minimal, delta: mtype(spec, Some(Q::zero()), b), nu: Nu::Real(q(n - 2, 2)) }
            }
        }
        (Family::SU, Case::North) | (Family::SU, Case::South) => {
            // On a tie the smaller m wins.
            let m_small = if kk <= n - 1 { 0 } else { (kk + 1 - n).div_euclid(2) };
            let (m, l) = (kk + m_small, kk - m_small);
            let nu = Nu::Real(q(k + n - 1, 2));
            let mut b = vec![Q::zero(); n as usize - 1];
            if case == Case::North {
                b[n as usize - 2] = qi(-kk);
                TableEntry { minimal: LatticePoint::new(m, l), delta: mtype(spec, Some(q(kk, 2)), b), nu }
            } else {
                b[0] = qi(kk);
                TableEntry { minimal: LatticePoint::new(m, -l), delta: mtype(spec, Some(q(-kk, 2)), b), nu }
            }
        }
        (Family::Sp, Case::East) => {
            let minimal = LatticePoint::new(2 * k + 4, 0);
            if n == 2 {
                TableEntry { minimal, delta: discrete_series(spec, k, minimal), nu: Nu::NotApplicable }
            } else {
                let b = padded(n as usize - 1, &[qi(k + 2), qi(k + 2)]);
                TableEntry { minimal, delta: mtype(spec, Some(Q::zero()), b), nu: Nu::Real(q(2 * n - 3, 2)) }
            }
        }
        (Family::Sp, Case::North) => {
            // Past k = 2n-4 the minimum slides down the line m + l = 2k+2.
            let shift = (k - 2 * n + 5).max(0) / 2;
            TableEntry {
                minimal: LatticePoint::new(kk + shift, kk - shift),
                delta: mtype(spec, Some(q(kk, 2)), padded(n as usize - 1, &[qi(kk)])),
                nu: Nu::Real(q(2 * n + k, 2)),
            }
        }
        (Family::F4, Case::East) => TableEntry {
            minimal: LatticePoint::new(2 * k + 8, 0),
            delta: mtype(spec, None, vec![q(k + 4, 2); 3]),
            nu: Nu::Real(q(k + 1, 2)),
        },
        (Family::F4, Case::North) => TableEntry {
            minimal: LatticePoint::new((3 * k + 5).div_euclid(2), k.div_euclid(2)),
            delta: mtype(spec, None, vec![q(kk, 2); 3]),
            nu: Nu::Real(q(k + 10, 2)),
        },
        _ => unreachable!(),
    };
    Ok(entry)
}

fn discrete_series(spec: &GroupSpec, k: i128, minimal: LatticePoint) -> Delta {
    let blattner = lattice_weight(spec, minimal);
    let hc_param = hc_parameter(spec, &blattner, &chi_pole(spec, k));
    Delta::DiscreteSeries { blattner, hc_param }
}

/// `χ(triv, λ_k)` at the pole indexed by `k`.
pub fn chi_pole(spec: &GroupSpec, k: i128) -> Weight {
    chi(spec, &Weight::zero(spec, Algebra::M), pole_value(spec, k))
}

/// `χ(σ, ν) = ν·α + μ_σ + ρ_m` in ambient coordinates of the split Cartan.
pub fn chi(spec: &GroupSpec, mu_sigma: &Weight, nu: Q) -> Weight {
    let rho_m = rho_of(spec, Algebra::M).expect("m is always available");
    alpha(spec).scale(nu).add(mu_sigma).add(&rho_m).retag(Algebra::G)
}

/// Harish-Chandra parameter of the discrete series with the given Blattner
/// parameter and infinitesimal character: a regular `Λ` in the Weyl orbit of
/// `chi`, dominant for K, with `Λ + ρ_n − ρ_c = blattner` where the
/// positive system is the one making `Λ` dominant.
pub fn hc_parameter(spec: &GroupSpec, blattner: &Weight, chi: &Weight) -> Option<Weight> {
    let g_roots = root_datum(spec, Algebra::G).ok()?.roots;
    let k_roots: BTreeSet<Vec<Q>> =
        root_datum(spec, Algebra::K).ok()?.roots.into_iter().map(|r| r.coords).collect();
    let k_positive = root_datum(spec, Algebra::K).ok()?.positive_roots;
    let gram = Gram::new(spec);
    for lam in orbit_candidates(spec, &chi.coords)? {
        if g_roots.iter().any(|r| gram.pair(&lam, &r.coords).is_zero())
            || k_positive.iter().any(|r| gram.pair(&lam, &r.coords) < Q::zero())
        {
            continue;
        }
        let mut shift = vec![Q::zero(); lam.len()];
        for r in &g_roots {
            if gram.pair(&lam, &r.coords) > Q::zero() {
                let sign = if k_roots.contains(&r.coords) { -q(1, 2) } else { q(1, 2) };
                for (t, x) in shift.iter_mut().zip(&r.coords) {
                    *t += x * sign;
                }
            }
        }
        let d: Vec<Q> = lam.iter().zip(&shift).zip(&blattner.coords).map(|((l, s), b)| l + s - b).collect();
        let same = if spec.family() == Family::SU {
            // Ambient SU coordinates are defined modulo the trace.
            d.windows(2).all(|w| w[0] == w[1])
        } else {
            d.iter().all(Zero::is_zero)
        };
        if same {
            return Some(Weight::new(lam, Algebra::G));
        }
    }
    None
}

/// Weyl orbit of a weight for the classical families with discrete series.
fn orbit_candidates(spec: &GroupSpec, x: &[Q]) -> Option<Vec<Vec<Q>>> {
    let signed = match spec.family() {
        Family::Sp | Family::SpinEven => true,
        Family::SU => false,
        _ => return None,
    };
    let r = x.len();
    let mut perms: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..r {
        let mut next = vec![];
        for p in &perms {
            for i in (0..r).filter(|i| !p.contains(i)) {
                let mut v = p.clone();
                v.push(i);
                next.push(v);
            }
        }
        perms = next;
    }
    let masks = if signed { 1u32 << r } else { 1 };
    let mut out = BTreeSet::new();
    for p in &perms {
        for mask in 0..masks {
            out.insert((0..r).map(|i| if mask >> i & 1 == 1 { -x[p[i]] } else { x[p[i]] }).collect::<Vec<Q>>());
        }
    }
    Some(out.into_iter().collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueRepInfo {
    pub spec: GroupSpec,
    pub k: i128,
    pub params: TauParams,
    pub case: Case,
    pub minimal_point: LatticePoint,
    pub minimal_ktype: Weight,
    pub delta: Delta,
    pub nu: Nu,
    pub unitary: bool,
    pub finite_dim: bool,
    pub gk_dim: u32,
    pub orbit: OrbitRecord,
    pub boundary_policy: &'static str,
}

pub fn classify(spec: &GroupSpec, tau: &KType, k: i128) -> Result<ResidueRepInfo> {
    need_classifiable(spec)?;
    if k < 0 {
        return Err(Error::Parameter("k must be nonnegative".into()));
    }
    if !contains_trivial_m(spec, tau)? {
        return Err(Error::NotApplicable("the K-type does not contain the trivial M-type".into()));
    }
    let params = tau_params(spec, tau)?;
    classify_params(spec, params, k)
}

/// Classification from shape parameters.
pub fn classify_params(spec: &GroupSpec, params: TauParams, k: i128) -> Result<ResidueRepInfo> {
    let case = point_case(spec, k, params_point(&params))?;
    let entry = table_entry(spec, case, k)?;
    let discrete = matches!(entry.delta, Delta::DiscreteSeries { .. });
    let unitary = match case {
        Case::Finite | Case::West => k == 0,
        Case::Infinite => true,
        Case::East => spec.family() == Family::SU || discrete,
        Case::North => spec.family() != Family::SU,
        Case::South => false,
    };
    let label = orbit_label(spec, case);
    let orbit = nilpotent_orbits(spec)?.into_iter().find(|o| o.label == label).expect("catalogue is complete");
    Ok(ResidueRepInfo {
        spec: *spec,
        k,
        params,
        case,
        minimal_point: entry.minimal,
        minimal_ktype: lattice_weight(spec, entry.minimal),
        delta: entry.delta,
        nu: entry.nu,
        unitary,
        finite_dim: matches!(case, Case::Finite | Case::West),
        gk_dim: gk_dim(spec, case),
        orbit,
        boundary_policy: boundary_policy(spec),
    })
}

/// Whether `χ(δ, ν)` and `χ(triv, λ_k)` agree modulo `W(g_C)`.
pub fn verify_langlands(spec: &GroupSpec, info: &ResidueRepInfo, k: i128) -> bool {
    let Delta::MType { weight, .. } = &info.delta else {
        return false;
    };
    let nu = match info.nu {
        Nu::Real(c) => c,
        Nu::ILambda { v, .. } => v,
        Nu::NotApplicable => return false,
    };
    weyl_orbit_equal(spec, &chi_pole(spec, k), &chi(spec, weight, nu))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CasimirK {
    /// Shifted so that the trivial K-type gives 0.
    pub normalized: Q,
    /// The closed form before shifting.
    pub raw: Q,
}

pub fn casimir_k_eigenvalue(spec: &GroupSpec, pt: LatticePoint) -> Result<CasimirK> {
    need_classifiable(spec)?;
    if !is_lattice_point(spec, pt) {
        return Err(Error::Domain(format!("({}, {}) is not a lattice point", pt.x, pt.y)));
    }
    let n = spec.n() as i128;
    let LatticePoint { x: m, y: l } = pt;
    let sq = |v: i128| qi(v * v);
    let raw = match spec.family() {
        Family::SpinEven => sq(m + n - 1) - sq(n - 1),
        Family::SU => (sq(m + n - 1) - sq(n - 1) + qi(3) * sq(l)) / qi(2),
        Family::Sp => (sq(m + 2 * n - 1) - sq(2 * n - 1) + qi(3) * sq(l + 1) - qi(1)) / qi(2),
        Family::F4 => q((m + 7) * (m + 7), 4) + q(3 * (l + 3) * (l + 3), 4) - qi(19),
        Family::SpinOdd => unreachable!(),
    };
    let offset = if spec.family() == Family::Sp { qi(1) } else { Q::zero() };
    Ok(CasimirK { normalized: raw - offset, raw })
}

/// Weyl dimension of K-types in big-integer arithmetic on doubled coordinates.
struct KDims {
    roots: Vec<Vec<i64>>,
    rho2: Vec<i64>,
    denom: BigUint,
}

impl KDims {
    fn new(spec: &GroupSpec) -> KDims {
        let rd = root_datum(spec, Algebra::K).expect("k is always available");
        let to2 = |v: &[Q]| -> Vec<i64> { v.iter().map(|x| (x * qi(2)).to_integer() as i64).collect() };
        let roots: Vec<Vec<i64>> = rd.positive_roots.iter().map(|r| to2(&r.coords)).collect();
        let rho2 = to2(&rho_of(spec, Algebra::K).expect("k is always available").coords);
        let mut denom = BigUint::from(1u32);
        for r in &roots {
            denom *= dot64(&rho2, r) as u64;
        }
        KDims { roots, rho2, denom }
    }

    fn dim(&self, mu: &Weight) -> BigUint {
        let shifted: Vec<i64> =
            mu.coords.iter().zip(&self.rho2).map(|(x, r)| (x * qi(2)).to_integer() as i64 + r).collect();
        let mut num = BigUint::from(1u32);
        for r in &self.roots {
            num *= dot64(&shifted, r) as u64;
        }
        num / &self.denom
    }
}

fn dot64(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Dimension of the K-type at a lattice point.
pub fn ktype_dim(spec: &GroupSpec, pt: LatticePoint) -> BigUint {
    KDims::new(spec).dim(&lattice_weight(spec, pt))
}

/// A first lattice coordinate beyond which the Casimir value exceeds `t²`.
fn x_limit(spec: &GroupSpec, t: f64) -> i128 {
    let n = spec.n() as f64;
    let t2 = t * t;
    let lim = match spec.family() {
        Family::SpinEven => libm::sqrt(t2 + (n - 1.0) * (n - 1.0)) - (n - 1.0),
        Family::SU => libm::sqrt(2.0 * t2 + (n - 1.0) * (n - 1.0)) - (n - 1.0),
        Family::Sp => libm::sqrt(2.0 * t2 + (2.0 * n - 1.0) * (2.0 * n - 1.0)) - (2.0 * n - 1.0),
        Family::F4 => 2.0 * libm::sqrt(t2 + 19.0) - 7.0,
        Family::SpinOdd => 0.0,
    };
    lim.max(0.0) as i128 + 1
}

/// `N(t)` for each `t` in `ts`: the summed dimensions of the constituent's
/// K-types whose normalized Casimir eigenvalue is at most `t²`.
pub fn gk_counts(spec: &GroupSpec, case: Case, k: i128, ts: &[f64]) -> Result<Vec<BigUint>> {
    need_case(spec, case)?;
    if ts.iter().any(|t| !(*t > 0.0) || !t.is_finite()) {
        return Err(Error::Parameter("t must be positive and finite".into()));
    }
    let mut order: Vec<usize> = (0..ts.len()).collect();
    order.sort_by(|&a, &b| ts[a].total_cmp(&ts[b]));
    let sorted_t2: Vec<f64> = order.iter().map(|&i| ts[i] * ts[i]).collect();
    let t_max = ts.iter().cloned().fold(0.0, f64::max);
    let dims = KDims::new(spec);
    let mut buckets = vec![BigUint::zero(); ts.len()];
    for pt in constituent_ktypes(spec, case, k, x_limit(spec, t_max))? {
        let c = casimir_k_eigenvalue(spec, pt)?.normalized;
        let cf = c.numer().to_f64().unwrap_or(f64::INFINITY) / c.denom().to_f64().unwrap_or(1.0);
        let first = sorted_t2.partition_point(|t2| *t2 < cf);
        if first < buckets.len() {
            buckets[first] += dims.dim(&lattice_weight(spec, pt));
        }
    }
    let mut acc = BigUint::zero();
    let mut out = vec![BigUint::zero(); ts.len()];
    for (b, &i) in buckets.into_iter().zip(&order) {
        acc += b;
        out[i] = acc.clone();
    }
    Ok(out)
}

pub fn gk_count(spec: &GroupSpec, case: Case, k: i128, t: f64) -> Result<BigUint> {
    Ok(gk_counts(spec, case, k, &[t])?.remove(0))
}

/// Least-squares slope of `log N(t)` against `log t` over the upper half of
/// the grid.
pub fn gk_exponent_estimate(spec: &GroupSpec, case: Case, k: i128, t_grid: &[f64]) -> Result<f64> {
    if t_grid.len() < 4 {
        return Err(Error::DegenerateGrid("need at least four grid points".into()));
    }
    if t_grid[0] <= 0.0 || t_grid.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::DegenerateGrid("grid must be positive and strictly increasing".into()));
    }
    let counts = gk_counts(spec, case, k, t_grid)?;
    let half = t_grid.len() / 2;
    let pts: Vec<(f64, f64)> = t_grid[half..]
        .iter()
        .zip(&counts[half..])
        .filter(|(_, c)| !c.is_zero())
        .map(|(t, c)| (libm::log(*t), big_log(c)))
        .collect();
    if pts.len() < 2 {
        return Err(Error::DegenerateGrid("N(t) vanishes on the upper half of the grid".into()));
    }
    let np = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / np;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / np;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    Ok(sxy / sxx)
}

fn big_log(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return libm::log(x.to_f64().expect("fits in f64"));
    }
    let shift = bits - 64;
    libm::log((x >> shift).to_f64().expect("fits in f64")) + shift as f64 * core::f64::consts::LN_2
}

/// Geometric grid of `points` values from `t_max/ratio` to `t_max`.
pub fn geometric_grid(t_max: f64, ratio: f64, points: usize) -> Vec<f64> {
    let start = t_max / ratio;
    let steps = (points.max(2) - 1) as f64;
    (0..points).map(|i| start * libm::pow(ratio, i as f64 / steps)).collect()
}
