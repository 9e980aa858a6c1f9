//! Resonance atlas: one family of resonances per M-type in the restriction of τ.

use alloc::format;
use alloc::vec::Vec;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::Zero;

use crate::branching::{m_weight, mhat, KType, MType};
use crate::error::{Error, Result};
use crate::liealg::{casimir_scalar, group_constants, weyl_dim, Algebra, CasimirConvention, GroupSpec};
use crate::plancherel::{density, poles, PlancherelDensity};
use crate::rational::Q;

pub const DEFAULT_K_MAX: i128 = 32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Resonance {
    pub sigma: MType,
    pub k_theorem: i128,
    pub k_section5: i128,
    /// The pole sits at `λ = −iv`.
    pub v: Q,
    pub z_paper: Q,
    pub z_hc: Q,
    pub residue_coeff: BigRational,
}

impl Resonance {
    /// `ζ_σ = −iv|α|` at the pole, as a float (|α| is irrational in general).
    pub fn zeta_imag(&self, spec: &GroupSpec) -> f64 {
        let a2 = group_constants(spec).alpha_norm_sq;
        -crate::rational::to_f64(&self.v) * libm::sqrt(crate::rational::to_f64(&a2))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResonanceFamily {
    pub sigma: MType,
    pub multiplicity: u64,
    pub d_sigma: u128,
    pub density: PlancherelDensity,
    pub resonances: Vec<Resonance>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResonanceAtlas {
    pub spec: GroupSpec,
    pub tau: KType,
    pub families: Vec<ResonanceFamily>,
}

fn family_for(spec: &GroupSpec, sigma: &MType, d: &PlancherelDensity, k_max: i128) -> Result<Vec<Resonance>> {
    let mu = m_weight(spec, sigma);
    poles(d, k_max)
        .into_iter()
        .map(|p| {
            let lam = Complex::new(Q::zero(), -p.v);
            let z_paper = casimir_scalar(spec, &mu, lam, CasimirConvention::Paper)?.re;
            let z_hc = casimir_scalar(spec, &mu, lam, CasimirConvention::HarishChandra)?.re;
            Ok(Resonance {
                sigma: sigma.clone(),
                k_theorem: p.k_theorem,
                k_section5: p.k_section5,
                v: p.v,
                z_paper,
                z_hc,
                residue_coeff: p.residue_coeff,
            })
        })
        .collect()
}

pub fn resonance_family(spec: &GroupSpec, tau: &KType, sigma: &MType, k_max: i128) -> Result<Vec<Resonance>> {
    if !mhat(spec, tau)?.iter().any(|e| e.sigma == *sigma) {
        return Err(Error::Domain(format!("M-type {:?} does not occur in the K-type", sigma.tuple())));
    }
    family_for(spec, sigma, &density(spec, sigma), k_max)
}

pub fn atlas(spec: &GroupSpec, tau: &KType, k_max: i128) -> Result<ResonanceAtlas> {
    if k_max < 0 {
        return Err(Error::Parameter("k_max must be nonnegative".into()));
    }
    let families = mhat(spec, tau)?
        .into_iter()
        .map(|e| {
            let d = density(spec, &e.sigma);
            let resonances = family_for(spec, &e.sigma, &d, k_max)?;
            let d_sigma = weyl_dim(spec, Algebra::M, &m_weight(spec, &e.sigma))?;
            Ok(ResonanceFamily { sigma: e.sigma, multiplicity: e.multiplicity, d_sigma, density: d, resonances })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ResonanceAtlas { spec: *spec, tau: tau.clone(), families })
}
