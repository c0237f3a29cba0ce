//! JSON serialization of obstruction reports (schema version 1).
//!
//! Integers that fit in an `i64` are JSON numbers, larger ones strings.
//! Rationals are strings in lowest terms, `"a/b"` or `"a"`.

use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

use crate::diagram::FormSource;
use crate::dinv::format_rational;
use crate::grs::{ObstructionReport, Verdict};
use crate::{Int, Rational};

pub const SCHEMA_VERSION: u32 = 1;

/// An arbitrary-precision integer on the wire.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonInt(pub Int);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

/// A rational on the wire.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonRational(pub Rational);

impl Serialize for JsonRational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(&self.0))
    }
}

fn ints(v: &[Int]) -> Vec<JsonInt> {
    v.iter().cloned().map(JsonInt).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct H2Json {
    pub order: JsonInt,
    pub cyclic: bool,
    pub invariant_factors: Vec<JsonInt>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpinCJson {
    pub h: Vec<JsonInt>,
    pub d: JsonRational,
    /// A characteristic vector attaining the maximum.
    pub alpha: Vec<JsonInt>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DJson {
    pub p: JsonInt,
    pub e: u32,
    pub value: JsonRational,
}

/// Wire form of an [`ObstructionReport`].
#[derive(Clone, Debug, Serialize)]
pub struct ReportJson {
    pub schema: u32,
    pub name: String,
    pub det: JsonInt,
    pub factors: Vec<(JsonInt, u32)>,
    pub h2: H2Json,
    pub mirror_flag: bool,
    pub source: FormSource,
    pub goeritz: Vec<Vec<JsonInt>>,
    pub spinc: Vec<SpinCJson>,
    #[serde(rename = "D")]
    pub d: Vec<DJson>,
    pub noncyclic_primes: Vec<JsonInt>,
    pub verdict: Verdict,
}

impl From<&ObstructionReport> for ReportJson {
    fn from(r: &ObstructionReport) -> Self {
        let h2 = r.h2();
        ReportJson {
            schema: SCHEMA_VERSION,
            name: r.name.clone(),
            det: JsonInt(r.det.clone()),
            factors: r.factors.iter().map(|(p, m)| (JsonInt(p.clone()), *m)).collect(),
            h2: H2Json {
                order: JsonInt(h2.order.clone()),
                cyclic: h2.cyclic,
                invariant_factors: ints(&h2.invariant_factors),
            },
            mirror_flag: r.form.mirror_flag(),
            source: r.form.source().clone(),
            goeritz: r.form.matrix().to_rows().iter().map(|row| ints(row)).collect(),
            spinc: r
                .table
                .entries()
                .iter()
                .map(|e| SpinCJson {
                    h: ints(&e.spinc.label),
                    d: JsonRational(e.d.value().clone()),
                    alpha: ints(e.spinc.rep.coords()),
                })
                .collect(),
            d: r
                .d_values
                .iter()
                .map(|d| DJson { p: JsonInt(d.p.clone()), e: d.e, value: JsonRational(d.value.clone()) })
                .collect(),
            noncyclic_primes: ints(&r.noncyclic_primes),
            verdict: r.verdict,
        }
    }
}

pub fn to_json_string(r: &ObstructionReport) -> String {
    serde_json::to_string(&ReportJson::from(r)).expect("report serialization cannot fail")
}

/// Compact PD-style rendering of a matrix, accepted back by
/// [`parse_matrix`](crate::parse_matrix).
pub fn matrix_literal(r: &ObstructionReport) -> String {
    r.form.matrix().to_string()
}
