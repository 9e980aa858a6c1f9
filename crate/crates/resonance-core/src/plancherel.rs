//! Plancherel densities `p_σ(λα)` and their poles.
//!
//! Every density has the shape `(−1)^s λ h(πλ) Π_j (λ² + E_j²)` where `h` is
//! `tanh` for even `s` and `coth` for odd `s`. The exponents `E_j = B_j + ρ_α − j`
//! come from per-family linear forms `B_j` in the M-type parameters.

use alloc::vec::Vec;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::branching::MType;
use crate::error::{Error, Result};
use crate::liealg::{group_constants, Family, GroupSpec};
use crate::rational::{q, qi, to_f64, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Tanh,
    Coth,
    /// Spin(2n+1,1): no hyperbolic factor and no poles.
    Constant,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Tanh => "tanh",
            Kind::Coth => "coth",
            Kind::Constant => "constant",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlancherelDensity {
    pub spec: GroupSpec,
    pub sigma: MType,
    pub s: i128,
    pub kind: Kind,
    pub exponents: Vec<Q>,
    pub b_max: Q,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoleRecord {
    /// `λ = −i·v`.
    pub v: Q,
    /// `v − B_max`; negative when a pole sits below `B_max`.
    pub k_theorem: i128,
    /// `v` minus the first genuine pole.
    pub k_section5: i128,
    pub order: u32,
    /// `c` with `Res_{λ=−iv} p_σ(λα)/λ = c/π`.
    pub residue_coeff: BigRational,
}

/// The linear forms `B_j` of the M-type parameters.
pub fn b_forms(spec: &GroupSpec, sigma: &MType) -> Vec<Q> {
    let b = &sigma.b;
    let b0 = sigma.b0.unwrap_or_default();
    let n = spec.n() as usize;
    let one = Q::one();
    match spec.family() {
        Family::SpinEven => b.clone(),
        Family::SpinOdd => Vec::new(),
        Family::SU => b.iter().map(|x| x - b0).collect(),
        Family::Sp => {
            // b holds (b2,…,bn); b(n+1) is zero.
            let bj = |j: usize| if j <= n { b[j - 2] } else { Q::zero() };
            let mut out: Vec<Q> = (1..=n).map(|j| bj(j + 1) - b0 - one).collect();
            out.extend((n + 1..2 * n).map(|j| -b0 - bj(2 * n + 1 - j) - one));
            out
        }
        Family::F4 => {
            let (b1, b2, b3) = (b[0], b[1], b[2]);
            alloc::vec![b1 + b2 + b3, b1 + b2 - b3, b1, b2, b3, -b1 + b2 + b3, -b1 + b2 - b3]
        }
    }
}

/// Parity parameter `s`.
pub fn parity_s(spec: &GroupSpec, sigma: &MType) -> i128 {
    let b0 = sigma.b0.unwrap_or_default();
    let two = qi(2);
    let v = match spec.family() {
        Family::SpinEven | Family::F4 => two * sigma.b[0],
        Family::SpinOdd => Q::zero(),
        Family::SU => two * b0 + qi(spec.n() as i128 - 1),
        Family::Sp => two * b0,
    };
    debug_assert!(v.is_integer());
    v.to_integer()
}

pub fn density(spec: &GroupSpec, sigma: &MType) -> PlancherelDensity {
    let rho = group_constants(spec).rho_alpha;
    let s = parity_s(spec, sigma);
    let exponents: Vec<Q> = b_forms(spec, sigma)
        .into_iter()
        .enumerate()
        .map(|(i, b)| b + rho - qi(i as i128 + 1))
        .collect();
    let kind = if spec.family() == Family::SpinOdd {
        Kind::Constant
    } else if s.rem_euclid(2) == 0 {
        Kind::Tanh
    } else {
        Kind::Coth
    };
    let b_max = match (exponents.first(), exponents.last()) {
        (Some(f), Some(l)) => f.abs().max(l.abs()),
        _ => Q::zero(),
    };
    PlancherelDensity { spec: *spec, sigma: sigma.clone(), s, kind, exponents, b_max }
}

impl PlancherelDensity {
    fn sign(&self) -> f64 {
        if self.s.rem_euclid(2) == 0 {
            1.0
        } else {
            -1.0
        }
    }

    /// Smallest nonnegative value on the pole lattice.
    pub fn lattice_start(&self) -> Option<Q> {
        match self.kind {
            Kind::Tanh => Some(q(1, 2)),
            Kind::Coth => Some(Q::zero()),
            Kind::Constant => None,
        }
    }

    pub fn is_lattice_value(&self, v: &Q) -> bool {
        match self.kind {
            Kind::Tanh => *v.denom() == 2 && !v.is_negative(),
            Kind::Coth => v.is_integer() && !v.is_negative(),
            Kind::Constant => false,
        }
    }

    /// How many exponents have `|E_j| = v`.
    pub fn zero_multiplicity(&self, v: &Q) -> usize {
        self.exponents.iter().filter(|e| e.abs() == *v).count()
    }

    /// Value of `p_σ(λα)/λ`, the function integrated against the resolvent.
    pub fn quotient(&self, lambda: Complex64) -> Complex64 {
        let pi = core::f64::consts::PI;
        let poly = self.poly(lambda);
        match self.kind {
            Kind::Constant => poly,
            Kind::Tanh => ctanh(lambda * pi) * poly * self.sign(),
            Kind::Coth if lambda.norm() == 0.0 => {
                // A zero exponent gives a double zero of the polynomial.
                if self.exponents.iter().any(Zero::is_zero) {
                    Complex64::new(0.0, 0.0)
                } else {
                    Complex64::new(f64::INFINITY, 0.0)
                }
            }
            Kind::Coth => ccoth(lambda * pi) * poly * self.sign(),
        }
    }

    fn poly(&self, lambda: Complex64) -> Complex64 {
        let l2 = lambda * lambda;
        self.exponents.iter().fold(Complex64::new(1.0, 0.0), |acc, e| {
            let ef = to_f64(e);
            acc * (l2 + ef * ef)
        })
    }

    pub fn first_pole(&self) -> Option<Q> {
        let mut v = self.lattice_start()?;
        loop {
            if self.zero_multiplicity(&v) == 0 {
                return Some(v);
            }
            v += Q::one();
        }
    }
}

/// `tanh(a+ib) = (sinh 2a + i sin 2b) / (cosh 2a + cos 2b)`, saturating for large `|a|`.
pub fn ctanh(z: Complex64) -> Complex64 {
    if z.re.abs() > 20.0 {
        return Complex64::new(z.re.signum(), 0.0);
    }
    let (a2, b2) = (2.0 * z.re, 2.0 * z.im);
    let den = libm::cosh(a2) + libm::cos(b2);
    Complex64::new(libm::sinh(a2) / den, libm::sin(b2) / den)
}

/// `coth(a+ib) = (sinh 2a − i sin 2b) / (cosh 2a − cos 2b)`.
pub fn ccoth(z: Complex64) -> Complex64 {
    if z.re.abs() > 20.0 {
        return Complex64::new(z.re.signum(), 0.0);
    }
    let (a2, b2) = (2.0 * z.re, 2.0 * z.im);
    let den = libm::cosh(a2) - libm::cos(b2);
    Complex64::new(libm::sinh(a2) / den, -libm::sin(b2) / den)
}

fn big(x: &Q) -> BigRational {
    BigRational::new(BigInt::from(*x.numer()), BigInt::from(*x.denom()))
}

/// `(−1)^s Π_j (E_j² − v²)` for a genuine pole `v`; `None` off the pole set.
pub fn residue_coefficient(d: &PlancherelDensity, v: &Q) -> Option<BigRational> {
    if !d.is_lattice_value(v) || d.zero_multiplicity(v) > 0 {
        return None;
    }
    let v2 = big(&(v * v));
    let mut c = BigRational::one();
    for e in &d.exponents {
        c *= big(&(e * e)) - &v2;
    }
    if d.s.rem_euclid(2) == 1 {
        c = -c;
    }
    Some(c)
}

/// Evaluates `p_σ(λα)`.
pub fn evaluate(d: &PlancherelDensity, lambda: Complex64) -> Result<Complex64> {
    if d.kind == Kind::Constant {
        return Ok(lambda * d.poly(lambda));
    }
    if lambda.re == 0.0 {
        let t = lambda.im.abs();
        let nearest = libm::round(t * 2.0) / 2.0;
        if (t - nearest).abs() <= 1e-12 * nearest.max(1.0) {
            let v = q((nearest * 2.0) as i128, 2);
            if d.is_lattice_value(&v) {
                let mult = d.zero_multiplicity(&v);
                if v.is_zero() {
                    // λ·coth(πλ) tends to 1/π.
                    let val = if mult == 0 { d.poly(Complex64::new(0.0, 0.0)) * d.sign() / core::f64::consts::PI } else { Complex64::new(0.0, 0.0) };
                    return Ok(val);
                }
                if mult == 0 {
                    return Err(Error::Pole { v });
                }
                return Ok(Complex64::new(0.0, 0.0));
            }
        }
    }
    if lambda == Complex64::new(0.0, 0.0) {
        return Ok(Complex64::new(0.0, 0.0));
    }
    Ok(lambda * d.quotient(lambda))
}

/// Poles of `p_σ(λα)/λ` at `λ = −iv` with `0 ≤ v ≤ B_max + k_max`.
pub fn poles(d: &PlancherelDensity, k_max: i128) -> Vec<PoleRecord> {
    let (Some(mut v), Some(first)) = (d.lattice_start(), d.first_pole()) else {
        return Vec::new();
    };
    let top = d.b_max + qi(k_max);
    let mut out = Vec::new();
    while v <= top {
        if let Some(c) = residue_coefficient(d, &v) {
            out.push(PoleRecord {
                v,
                k_theorem: (v - d.b_max).to_integer(),
                k_section5: (v - first).to_integer(),
                order: 1,
                residue_coeff: c,
            });
        }
        v += Q::one();
    }
    out
}
