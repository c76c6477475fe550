//! JSON result documents and CSV matrix output.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use gainspec_core::{HermitianMatrix, Spectrum, TheoremVerdict, Witness};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

/// Row-major `[re, im]` pairs.
pub type MatrixData = Vec<Vec<[f64; 2]>>;

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ResultDocument {
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub matrices: BTreeMap<String, MatrixData>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub spectra: BTreeMap<String, SpectrumRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub verdicts: Vec<VerdictRecord>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub facts: BTreeMap<String, Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumRecord {
    pub eigenvalues: Vec<f64>,
    pub spectral_radius: f64,
    pub nullity: usize,
    pub zero_threshold: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub theorem_id: String,
    pub holds: bool,
    pub slack: f64,
    pub lhs: f64,
    pub rhs: f64,
    #[serde(default)]
    pub witness: Option<Value>,
    #[serde(default)]
    pub notes: Vec<String>,
}

/// Rounds `x` to the nearest integer when it is within `1e-12` (relative,
/// floor 1) of it. Used for computed quantities only, never for matrix entries.
pub fn snap(x: f64) -> f64 {
    let r = x.round();
    if (x - r).abs() <= 1e-12 * x.abs().max(1.0) {
        r + 0.0
    } else {
        x
    }
}

pub fn matrix_data(m: &HermitianMatrix) -> MatrixData {
    m.rows().into_iter().map(|row| row.into_iter().map(|z| [z.re, z.im]).collect()).collect()
}

pub fn matrix_from_data(data: &MatrixData) -> gainspec_core::Result<HermitianMatrix> {
    let rows: Vec<Vec<Complex64>> =
        data.iter().map(|row| row.iter().map(|&[re, im]| Complex64::new(re, im)).collect()).collect();
    HermitianMatrix::from_rows(&rows)
}

impl SpectrumRecord {
    pub fn new(s: &Spectrum) -> Self {
        Self {
            eigenvalues: s.eigenvalues().iter().map(|&x| snap(x)).collect(),
            spectral_radius: snap(s.spectral_radius()),
            nullity: s.nullity(),
            zero_threshold: s.zero_threshold(),
        }
    }
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|x| x + 1).collect()
}

pub fn witness_value(w: &Witness) -> Value {
    match w {
        Witness::Cycle(c) => json!({"kind": "cycle", "vertices": one_based(&c.vertices), "gain": c.gain.to_string()}),
        Witness::Switching(z) => {
            json!({"kind": "switching", "zeta": z.values().iter().map(|g| g.to_string()).collect::<Vec<_>>()})
        }
        Witness::Ordering(o) => json!({"kind": "ordering", "sequence": one_based(&o.sequence())}),
        Witness::Statements(s) => json!({"kind": "statements", "values": s}),
        Witness::Spectra { first, second } => json!({
            "kind": "spectra",
            "first": first.iter().map(|&x| snap(x)).collect::<Vec<_>>(),
            "second": second.iter().map(|&x| snap(x)).collect::<Vec<_>>(),
        }),
    }
}

impl From<&TheoremVerdict> for VerdictRecord {
    fn from(v: &TheoremVerdict) -> Self {
        Self {
            theorem_id: v.theorem.to_string(),
            holds: v.holds,
            slack: snap(v.slack),
            lhs: snap(v.lhs),
            rhs: snap(v.rhs),
            witness: v.witness.as_ref().map(witness_value),
            notes: v.notes.clone(),
        }
    }
}

impl ResultDocument {
    pub fn all_hold(&self) -> bool {
        self.verdicts.iter().all(|v| v.holds)
    }

    pub fn to_json(&self) -> String {
        to_json(&serde_json::to_value(self).expect("documents serialize"))
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

/// `%.17g`, except that integral values print without a fraction or exponent.
pub fn format_float(x: f64) -> String {
    if !x.is_finite() {
        return "null".into();
    }
    if x == 0.0 {
        return "0".into();
    }
    if x.fract() == 0.0 && x.abs() < 1e17 {
        return format!("{x:.0}");
    }
    let sci = format!("{x:.16e}");
    let (_, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..17).contains(&exp) {
        let fixed = format!("{:.*}", (16 - exp) as usize, x);
        trim_fraction(&fixed).to_string()
    } else {
        let (mantissa, _) = sci.split_once('e').expect("exponent");
        format!("{}e{}", trim_fraction(mantissa), exp)
    }
}

fn trim_fraction(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn inline(v: &Value) -> bool {
    match v {
        Value::Object(_) => false,
        Value::Array(items) => items.iter().all(inline),
        _ => true,
    }
}

fn write_compact(out: &mut String, v: &Value) {
    match v {
        Value::Null => out.push_str("null"),
        Value::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
        Value::Number(n) => match (n.as_u64(), n.as_i64()) {
            (Some(u), _) => {
                let _ = write!(out, "{u}");
            }
            (None, Some(i)) => {
                let _ = write!(out, "{i}");
            }
            _ => out.push_str(&format_float(n.as_f64().expect("finite"))),
        },
        Value::String(s) => out.push_str(&Value::String(s.clone()).to_string()),
        Value::Array(items) => {
            out.push('[');
            for (k, x) in items.iter().enumerate() {
                if k > 0 {
                    out.push(',');
                }
                write_compact(out, x);
            }
            out.push(']');
        }
        Value::Object(_) => unreachable!("objects are never inlined"),
    }
}

fn write_pretty(out: &mut String, v: &Value, indent: usize) {
    if inline(v) {
        return write_compact(out, v);
    }
    let pad = "  ".repeat(indent + 1);
    match v {
        Value::Array(items) => {
            out.push_str("[\n");
            for (k, x) in items.iter().enumerate() {
                out.push_str(&pad);
                write_pretty(out, x, indent + 1);
                out.push_str(if k + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&"  ".repeat(indent));
            out.push(']');
        }
        Value::Object(map) => {
            if map.is_empty() {
                out.push_str("{}");
                return;
            }
            let mut keys: Vec<&String> = map.keys().collect();
            keys.sort();
            out.push_str("{\n");
            for (k, key) in keys.iter().enumerate() {
                out.push_str(&pad);
                out.push_str(&Value::String((*key).clone()).to_string());
                out.push_str(": ");
                write_pretty(out, &map[*key], indent + 1);
                out.push_str(if k + 1 < keys.len() { ",\n" } else { "\n" });
            }
            out.push_str(&"  ".repeat(indent));
            out.push('}');
        }
        _ => unreachable!(),
    }
}

/// Deterministic JSON: sorted keys, two-space indentation for objects, arrays
/// without objects on one line, floats via [`format_float`].
pub fn to_json(v: &Value) -> String {
    let mut out = String::new();
    write_pretty(&mut out, v, 0);
    out.push('\n');
    out
}

pub fn format_complex(z: Complex64) -> String {
    let im = if z.im == 0.0 { 0.0 } else { z.im };
    let sign = if im.is_sign_negative() { '-' } else { '+' };
    format!("{}{}{}i", format_float(z.re), sign, format_float(im.abs()))
}

/// One matrix row per line, `re+imi` cells.
pub fn to_csv(m: &HermitianMatrix) -> String {
    let mut out = String::new();
    for i in 0..m.dim() {
        let cells: Vec<String> = m.row(i).iter().map(|&z| format_complex(z)).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}
