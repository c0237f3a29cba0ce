use std::collections::BTreeMap;

use grs_core::dinv::format_rational;
use grs_core::{parse_matrix, parse_pd, Error, Int, KnotInput, ObstructionReport, Rational};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::Value;

/// One line of a batch input file.
#[derive(Clone, Debug, Deserialize)]
pub struct KnotRecord {
    pub name: String,
    #[serde(default)]
    pub pd: Option<String>,
    /// Matrix rows, as a JSON array or a string in the same syntax.
    #[serde(default)]
    pub goeritz: Option<Value>,
    #[serde(default)]
    pub expected: Option<Expected>,
}

/// Reference values, used only for comparison.
#[derive(Clone, Debug, Deserialize)]
pub struct Expected {
    #[serde(default)]
    pub det: Option<Value>,
    /// Nonzero D invariants keyed by `q = p^e`.
    #[serde(default, rename = "D")]
    pub d: BTreeMap<String, Value>,
}

impl KnotRecord {
    pub fn input(&self) -> Result<KnotInput, Error> {
        match (&self.pd, &self.goeritz) {
            (Some(pd), None) => Ok(KnotInput::Diagram(parse_pd(pd)?)),
            (None, Some(Value::String(s))) => Ok(KnotInput::Matrix(parse_matrix(s)?)),
            (None, Some(v)) => Ok(KnotInput::Matrix(parse_matrix(&v.to_string())?)),
            (Some(_), Some(_)) => Err(Error::PdSyntax("record has both `pd` and `goeritz`".into())),
            (None, None) => Err(Error::PdSyntax("record has neither `pd` nor `goeritz`".into())),
        }
    }
}

fn value_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.trim().to_string(),
        other => other.to_string(),
    }
}

fn parse_rational(s: &str) -> Option<Rational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let (n, d): (Int, Int) = (n.trim().parse().ok()?, d.trim().parse().ok()?);
            (!d.is_zero()).then(|| Rational::new(n, d))
        }
        None => s.parse::<Int>().ok().map(Rational::from_integer),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Match,
    Mismatch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub status: CheckStatus,
    /// `+1` or `-1`: the global sign relating computed to expected D values.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sign: Option<i8>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub problems: Vec<String>,
}

/// Nonzero D values keyed by `q = p^e`.
pub fn nonzero_d(report: &ObstructionReport) -> BTreeMap<Int, Rational> {
    report.nonzero_d().map(|d| (d.q(), d.value.clone())).collect()
}

/// Compares a report with reference values: the determinant exactly, the
/// nonzero D values up to one global sign.
pub fn check(report: &ObstructionReport, expected: &Expected) -> Check {
    let mut problems = Vec::new();
    if let Some(det) = &expected.det {
        let want = value_text(det);
        if want != report.det.to_string() {
            problems.push(format!("det {} != expected {want}", report.det));
        }
    }
    let mut want = BTreeMap::new();
    for (q, v) in &expected.d {
        match (q.parse::<Int>(), parse_rational(&value_text(v))) {
            (Ok(q), Some(v)) if !v.is_zero() => {
                want.insert(q, v);
            }
            (Ok(_), Some(_)) => {}
            _ => problems.push(format!("unreadable expected entry {q}: {v}")),
        }
    }
    let got = nonzero_d(report);
    let negated: BTreeMap<Int, Rational> = want.iter().map(|(q, v)| (q.clone(), -v.clone())).collect();
    let sign = if got == want {
        Some(1)
    } else if got == negated {
        Some(-1)
    } else {
        let show = |m: &BTreeMap<Int, Rational>| {
            let parts: Vec<String> = m.iter().map(|(q, v)| format!("D{q}={}", format_rational(v))).collect();
            format!("{{{}}}", parts.join(", "))
        };
        problems.push(format!("nonzero D {} != expected {} up to sign", show(&got), show(&want)));
        None
    };
    let status = if problems.is_empty() { CheckStatus::Match } else { CheckStatus::Mismatch };
    Check { status, sign: if problems.is_empty() { sign } else { None }, problems }
}
