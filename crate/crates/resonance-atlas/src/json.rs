//! Canonical JSON for the core types. Rationals are emitted as `"p/q"`
//! strings and objects use sorted keys, so emitting, parsing and emitting
//! again is byte-identical.

use num_bigint::BigUint;
use num_complex::Complex64;
use resonance_core::branching::{KType, MType, MTypeEntry, TauParams};
use resonance_core::liealg::{GroupConstants, GroupSpec, Weight};
use resonance_core::numverify::{ExactValue, QuadratureReport};
use resonance_core::plancherel::{Kind, PlancherelDensity, PoleRecord};
use resonance_core::rational::fmt_q;
use resonance_core::residuerep::{Delta, LatticePoint, Nu, OrbitRecord, ResidueRepInfo};
use resonance_core::resonances::{Resonance, ResonanceAtlas};
use resonance_core::{Error, Q};
use serde_json::{json, Map, Value};

pub fn rational(x: &Q) -> Value {
    Value::String(fmt_q(x))
}

pub fn big_rational(x: &num_rational::BigRational) -> Value {
    Value::String(x.to_string())
}

pub fn tuple(xs: &[Q]) -> Value {
    Value::Array(xs.iter().map(rational).collect())
}

/// Integers that may exceed `u64` become strings.
pub fn big_uint(x: &BigUint) -> Value {
    match u64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => Value::String(x.to_string()),
    }
}

pub fn u128_value(x: u128) -> Value {
    match u64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => Value::String(x.to_string()),
    }
}

/// Finite floats as numbers, anything else as `null`.
pub fn float(x: f64) -> Value {
    serde_json::Number::from_f64(x).map_or(Value::Null, Value::Number)
}

pub fn complex(z: Complex64) -> Value {
    json!({ "re": float(z.re), "im": float(z.im) })
}

pub fn group(s: &GroupSpec) -> Value {
    let mut m = Map::new();
    m.insert("family".into(), json!(s.family().name()));
    if s.family() != resonance_core::liealg::Family::F4 {
        m.insert("n".into(), json!(s.n()));
    }
    Value::Object(m)
}

pub fn constants(s: &GroupSpec, c: &GroupConstants) -> Value {
    json!({
        "group": group(s),
        "m_half": c.m_half,
        "m_long": c.m_long,
        "rho_alpha": rational(&c.rho_alpha),
        "m_sup": rational(&c.m_sup),
        "alpha_norm_sq": rational(&c.alpha_norm_sq),
        "pole_free": c.pole_free,
    })
}

pub fn ktype(t: &KType) -> Value {
    tuple(&t.coords)
}

pub fn mtype(m: &MType) -> Value {
    json!({
        "b0": m.b0.as_ref().map_or(Value::Null, rational),
        "b": tuple(&m.b),
    })
}

pub fn weight(w: &Weight) -> Value {
    tuple(&w.coords)
}

pub fn mhat_entry(e: &MTypeEntry, d_sigma: u128) -> Value {
    json!({ "sigma": mtype(&e.sigma), "multiplicity": e.multiplicity, "d_sigma": u128_value(d_sigma) })
}

pub fn kind(k: Kind) -> &'static str {
    match k {
        Kind::Tanh => "tanh",
        Kind::Coth => "coth",
        Kind::Constant => "constant",
    }
}

pub fn density(d: &PlancherelDensity) -> Value {
    json!({
        "kind": kind(d.kind),
        "s": json!(d.s as i64),
        "exponents": tuple(&d.exponents),
        "b_max": rational(&d.b_max),
    })
}

pub fn pole(p: &PoleRecord) -> Value {
    json!({
        "v": rational(&p.v),
        "k_theorem": p.k_theorem as i64,
        "k_section5": p.k_section5 as i64,
        "residue_coeff": big_rational(&p.residue_coeff),
    })
}

pub fn resonance(r: &Resonance) -> Value {
    json!({
        "v": rational(&r.v),
        "k_theorem": r.k_theorem as i64,
        "k_section5": r.k_section5 as i64,
        "z_paper": rational(&r.z_paper),
        "z_hc": rational(&r.z_hc),
        "residue_coeff": big_rational(&r.residue_coeff),
    })
}

pub fn atlas(a: &ResonanceAtlas) -> Value {
    let families: Vec<Value> = a
        .families
        .iter()
        .map(|f| {
            json!({
                "sigma": mtype(&f.sigma),
                "multiplicity": f.multiplicity,
                "d_sigma": u128_value(f.d_sigma),
                "density": density(&f.density),
                "resonances": f.resonances.iter().map(resonance).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({ "group": group(&a.spec), "tau": ktype(&a.tau), "families": families })
}

pub fn point(p: LatticePoint) -> Value {
    json!([p.x as i64, p.y as i64])
}

pub fn params(p: &TauParams) -> Value {
    match *p {
        TauParams::Spin { n_top } => json!({ "N": n_top as i64 }),
        TauParams::SU { m1, m2, l } => json!({ "M1": m1 as i64, "M2": m2 as i64, "L": l as i64 }),
        TauParams::Sp { t1, t2, t3 } => json!({ "t1": t1 as i64, "t2": t2 as i64, "t_last": t3 as i64 }),
        TauParams::F4 { a, b } => json!({ "a": a as i64, "b": b as i64 }),
    }
}

pub fn delta(d: &Delta) -> Value {
    match d {
        Delta::MType { sigma, weight: w } => json!({ "type": "m_type", "sigma": mtype(sigma), "weight": weight(w) }),
        Delta::DiscreteSeries { blattner, hc_param } => json!({
            "type": "discrete_series",
            "blattner": weight(blattner),
            "hc_param": hc_param.as_ref().map_or(Value::Null, weight),
        }),
    }
}

pub fn nu(n: &Nu) -> Value {
    match n {
        Nu::Real(c) => json!({ "type": "real", "coeff": rational(c) }),
        Nu::ILambda { k, v } => json!({ "type": "i_lambda", "k": *k as i64, "v": rational(v) }),
        Nu::NotApplicable => json!({ "type": "not_applicable" }),
    }
}

pub fn orbit(o: &OrbitRecord) -> Value {
    json!({
        "label": o.label.name(),
        "real_dim": o.real_dim,
        "complex_partition": o.complex_partition.as_ref().map_or(Value::Null, |p| json!(p)),
        "description": o.description,
    })
}

pub fn classification(info: &ResidueRepInfo, tau: &KType, langlands: Option<bool>) -> Value {
    json!({
        "group": group(&info.spec),
        "tau": ktype(tau),
        "k": info.k as i64,
        "params": params(&info.params),
        "case": info.case.name(),
        "case_symbol": info.case.symbol_for(info.spec.family()),
        "minimal_ktype": { "point": point(info.minimal_point), "weight": weight(&info.minimal_ktype) },
        "delta": delta(&info.delta),
        "nu": nu(&info.nu),
        "unitary": info.unitary,
        "finite_dim": info.finite_dim,
        "gk_dim": info.gk_dim,
        "orbit": orbit(&info.orbit),
        "boundary_policy": info.boundary_policy,
        "langlands_check": langlands.map_or(Value::Null, Value::Bool),
    })
}

pub fn report(r: &QuadratureReport, tol: f64, passed: bool) -> Value {
    let exact = match &r.exact {
        ExactValue::OverPi(c) => json!({ "type": "over_pi", "coeff": big_rational(c) }),
        ExactValue::Reference(z) => json!({ "type": "reference", "value": complex(*z) }),
    };
    json!({
        "target": r.target,
        "exact": exact,
        "numeric": complex(r.numeric),
        "abs_err": float(r.abs_err),
        "rel_err": r.rel_err.map_or(Value::Null, float),
        "scale": float(r.scale),
        "samples": r.samples,
        "crossed": tuple(&r.crossed),
        "tolerance": float(tol),
        "passed": passed,
    })
}

pub fn error(e: &Error) -> Value {
    json!({ "error": { "kind": e.kind(), "message": e.to_string() } })
}

/// Pretty-printed canonical text with a trailing newline.
pub fn emit(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values are always serializable");
    s.push('\n');
    s
}
