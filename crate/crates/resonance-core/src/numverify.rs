//! Floating-point checks of the exact pole data: residues by circle
//! quadrature, and the contour-shift identity with a Gaussian test function.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::PI;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::liealg::group_constants;
use crate::plancherel::{poles, residue_coefficient, PlancherelDensity, PoleRecord};
use crate::rational::{fmt_q, to_f64, Q};

#[derive(Clone, Debug, PartialEq)]
pub enum ExactValue {
    /// `c/π` with rational `c`.
    OverPi(BigRational),
    /// A reference computed another way (the unshifted integral).
    Reference(Complex64),
}

impl ExactValue {
    pub fn to_complex(&self) -> Complex64 {
        match self {
            ExactValue::OverPi(c) => Complex64::new(big_to_f64(c) / PI, 0.0),
            ExactValue::Reference(z) => *z,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct QuadratureReport {
    pub target: String,
    pub exact: ExactValue,
    pub numeric: Complex64,
    pub abs_err: f64,
    /// `abs_err / scale`; `None` when the scale is zero.
    pub rel_err: Option<f64>,
    /// Magnitude the relative error refers to.
    pub scale: f64,
    /// Integrand evaluations.
    pub samples: usize,
    /// Pole values whose residues entered the comparison.
    pub crossed: Vec<Q>,
}

impl QuadratureReport {
    /// The relative error, or the absolute one when there is no scale.
    pub fn error(&self) -> f64 {
        self.rel_err.unwrap_or(self.abs_err)
    }
}

fn big_to_f64(x: &BigRational) -> f64 {
    let (n, d) = (x.numer(), x.denom());
    match (n.to_f64(), d.to_f64()) {
        (Some(a), Some(b)) if a.is_finite() && b.is_finite() => a / b,
        _ => {
            // Scale both down to keep the quotient finite.
            let shift = n.bits().max(d.bits()).saturating_sub(900);
            let a = (n.abs() >> shift).to_f64().unwrap_or(0.0);
            let b = (d >> shift).to_f64().unwrap_or(1.0);
            if n.is_negative() { -a / b } else { a / b }
        }
    }
}

/// Distance from `λ = −iv` to the nearest other zero of the hyperbolic
/// factor's denominator.
fn isolation_radius(v: &Q) -> f64 {
    let v = to_f64(v);
    if v > 0.0 { (2.0 * v).min(1.0) } else { 1.0 }
}

/// `(1/2πi)∮ p(λα)/λ dλ` on a circle around `λ = −i·v`, trapezoid rule.
pub fn circle_integral(d: &PlancherelDensity, v: &Q, radius: f64, samples: usize) -> Complex64 {
    let center = Complex64::new(0.0, -to_f64(v));
    let mut acc = Complex64::zero();
    for j in 0..samples {
        let theta = 2.0 * PI * (j as f64 + 0.5) / samples as f64;
        let e = Complex64::new(libm::cos(theta), libm::sin(theta));
        acc += d.quotient(center + e * radius) * e;
    }
    acc * (radius / samples as f64)
}

pub fn residue_quadrature(
    d: &PlancherelDensity,
    rec: &PoleRecord,
    radius: f64,
    samples: usize,
) -> Result<QuadratureReport> {
    if samples < 64 {
        return Err(Error::Parameter(format!("need at least 64 samples, got {samples}")));
    }
    if !(radius > 0.0) || radius >= isolation_radius(&rec.v) {
        return Err(Error::Geometry(format!(
            "radius {radius} must lie in (0, {}) around v = {}",
            isolation_radius(&rec.v),
            fmt_q(&rec.v)
        )));
    }
    let numeric = circle_integral(d, &rec.v, radius, samples);
    let exact = ExactValue::OverPi(rec.residue_coeff.clone());
    let reference = exact.to_complex();
    let abs_err = (numeric - reference).norm();
    let scale = reference.norm();
    Ok(QuadratureReport {
        target: format!("residue of p/λ at λ = -i·{}", fmt_q(&rec.v)),
        exact,
        numeric,
        abs_err,
        rel_err: (scale > 0.0).then(|| abs_err / scale),
        scale,
        samples,
        crossed: alloc::vec![rec.v],
    })
}

const KRONROD_NODES: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];
const KRONROD_WEIGHTS: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
const GAUSS_WEIGHTS: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

/// Gauss–Kronrod 7/15 on one panel: (Kronrod value, error estimate).
fn gk15<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64) -> (Complex64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = fc * KRONROD_WEIGHTS[7];
    let mut g = fc * GAUSS_WEIGHTS[3];
    for i in 0..7 {
        let x = h * KRONROD_NODES[i];
        let pair = f(c - x) + f(c + x);
        k += pair * KRONROD_WEIGHTS[i];
        if i % 2 == 1 {
            g += pair * GAUSS_WEIGHTS[i / 2];
        }
    }
    (k * h, ((k - g) * h).norm())
}

/// Globally adaptive Gauss–Kronrod integration of a complex function over
/// `[a, b]`: the panel with the largest error estimate is bisected until the
/// summed estimate drops below `rel_tol` times the current value or the panel
/// budget runs out.
/// Returns the integral, the error estimate and the number of evaluations.
pub fn integrate<F: Fn(f64) -> Complex64>(f: F, a: f64, b: f64, rel_tol: f64) -> (Complex64, f64, usize) {
    const MAX_PANELS: usize = 4000;
    let (v, e) = gk15(&f, a, b);
    let mut panels = alloc::vec![(a, b, v, e)];
    let mut evals = 15;
    loop {
        let total_err: f64 = panels.iter().map(|p| p.3).sum();
        let value: Complex64 = panels.iter().map(|p| p.2).sum();
        if total_err <= rel_tol * value.norm() || panels.len() >= MAX_PANELS {
            break;
        }
        let worst = (0..panels.len()).max_by(|&i, &j| panels[i].3.total_cmp(&panels[j].3)).expect("nonempty");
        let (lo, hi, _, _) = panels.swap_remove(worst);
        let mid = 0.5 * (lo + hi);
        let (v1, e1) = gk15(&f, lo, mid);
        let (v2, e2) = gk15(&f, mid, hi);
        evals += 30;
        panels.push((lo, mid, v1, e1));
        panels.push((mid, hi, v2, e2));
    }
    panels.sort_by(|x, y| x.0.total_cmp(&y.0));
    let err = panels.iter().map(|p| p.3).sum();
    (pairwise_sum(&panels.iter().map(|p| p.2).collect::<Vec<_>>()), err, evals)
}

fn pairwise_sum(xs: &[Complex64]) -> Complex64 {
    match xs.len() {
        0 => Complex64::zero(),
        1 => xs[0],
        n => pairwise_sum(&xs[..n / 2]) + pairwise_sum(&xs[n / 2..]),
    }
}

/// The Gaussian test function `g(λ) = exp(−λ²)`.
fn gauss(z: Complex64) -> Complex64 {
    (-(z * z)).exp()
}

/// Checks `∫_ℝ F = ∫_{ℝ−i·shift} F − 2πi Σ_{v<shift} Res_{λ=−iv} F` with
/// `F(λ) = g(λ)·(p(λα)/λ)·(ζ − λ|α|)^{-1}`.
///
/// The region between the two lines is traversed clockwise, hence the minus
/// sign. The relative defect refers to the largest of `|∫_ℝ F|`,
/// `|∫_{ℝ−i·shift} F|` and `Σ|2π·residue term|`: on the shifted line `|g|`
/// grows like `e^{shift²}`, so the individual terms can be far larger than
/// their sum.
pub fn contour_shift_check(
    d: &PlancherelDensity,
    zeta: Complex64,
    shift: &Q,
    truncation: f64,
    tol: f64,
) -> Result<QuadratureReport> {
    if !(zeta.im > 0.0) {
        return Err(Error::Configuration("zeta must lie in the upper half-plane".into()));
    }
    if *shift <= Q::zero() || d.is_lattice_value(shift) {
        return Err(Error::Configuration(format!("shift {} must be positive and off the pole lattice", fmt_q(shift))));
    }
    if residue_coefficient(d, &Q::zero()).is_some() {
        return Err(Error::Configuration("the density has a pole on the real line".into()));
    }
    let s = to_f64(shift);
    let norm_alpha = libm::sqrt(to_f64(&group_constants(&d.spec).alpha_norm_sq));
    if zeta.im <= tol || (zeta.im / norm_alpha) <= tol {
        return Err(Error::Configuration("zeta is too close to the real axis".into()));
    }
    let integrand = |lambda: Complex64| gauss(lambda) * d.quotient(lambda) / (zeta - lambda * norm_alpha);
    // Tail bound at the truncation point, on both lines.
    let tail = |t: f64| {
        [Complex64::new(t, 0.0), Complex64::new(t, -s)]
            .iter()
            .map(|z| integrand(*z).norm() + integrand(-z.conj()).norm())
            .fold(0.0, f64::max)
    };
    let tail_bound = tail(truncation);
    let poles_below: Vec<PoleRecord> =
        poles(d, (shift - d.b_max).ceil().to_integer().max(0) + 1).into_iter().filter(|p| p.v < *shift).collect();
    let mut residue_sum = Complex64::zero();
    let mut residue_scale = 0.0;
    for p in &poles_below {
        let lam = Complex64::new(0.0, -to_f64(&p.v));
        let c = big_to_f64(&p.residue_coeff) / PI;
        let term = Complex64::new(0.0, 2.0 * PI) * gauss(lam) * c / (zeta - lam * norm_alpha);
        residue_sum += term;
        residue_scale += term.norm();
    }
    let (lhs, _, n1) = integrate(|x| integrand(Complex64::new(x, 0.0)), -truncation, truncation, tol * 1e-3);
    let (shifted, _, n2) = integrate(
        |x| integrand(Complex64::new(x, -s)),
        -truncation,
        truncation,
        tol * 1e-3,
    );
    let scale = lhs.norm().max(shifted.norm()).max(residue_scale);
    if tail_bound * 2.0 > tol * 0.1 * scale {
        return Err(Error::Configuration(format!(
            "truncation {truncation} too small: tail bound {tail_bound:e} exceeds the tolerance"
        )));
    }
    let numeric = shifted - residue_sum;
    let abs_err = (numeric - lhs).norm();
    Ok(QuadratureReport {
        target: format!(
            "contour shift by {} with zeta = {}{:+}i, {} pole(s) crossed",
            fmt_q(shift),
            zeta.re,
            zeta.im,
            poles_below.len()
        ),
        exact: ExactValue::Reference(lhs),
        numeric,
        abs_err,
        rel_err: (scale > 0.0).then(|| abs_err / scale),
        scale,
        samples: n1 + n2,
        crossed: poles_below.iter().map(|p| p.v).collect(),
    })
}

/// Default truncation used by callers that do not choose one.
pub fn default_truncation(shift: &Q) -> f64 {
    to_f64(shift) + 8.0
}
