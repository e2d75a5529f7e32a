//! Structured check verdicts, serialized as JSON lines and CSV summaries.
//!
//! Schema: {"predicate": str, "instance": shorthand-or-descriptor,
//! "verdict": "pass|fail|skip", "values": {name: exact-string},
//! "witness": optional}. Values are exact decimal strings for integers and
//! "p/q" strings for non-integer rationals; nothing is ever rounded here.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::matroid::Descriptor;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum InstanceRef {
    Name(String),
    Descriptor(Box<Descriptor>),
}

impl InstanceRef {
    pub fn name(s: impl Into<String>) -> InstanceRef {
        InstanceRef::Name(s.into())
    }

    pub fn id(&self) -> String {
        match self {
            InstanceRef::Name(s) => s.clone(),
            InstanceRef::Descriptor(d) => {
                serde_json::to_string(d).unwrap_or_else(|_| "<descriptor>".into())
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub predicate: String,
    pub instance: InstanceRef,
    pub verdict: Verdict,
    pub values: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
}

impl CheckReport {
    pub fn new(predicate: impl Into<String>, instance: InstanceRef, verdict: Verdict) -> Self {
        CheckReport {
            predicate: predicate.into(),
            instance,
            verdict,
            values: BTreeMap::new(),
            witness: None,
            timestamp: None,
        }
    }

    pub fn set_value(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.values.insert(key.into(), value.into());
    }

    pub fn set_int(&mut self, key: impl Into<String>, value: &BigInt) {
        self.values.insert(key.into(), value.to_string());
    }

    pub fn set_rational(&mut self, key: impl Into<String>, value: &BigRational) {
        self.values.insert(key.into(), exact_string(value));
    }

    pub fn with_value(mut self, key: impl Into<String>, value: impl Into<String>) -> Self {
        self.set_value(key, value);
        self
    }

    pub fn with_witness(mut self, witness: serde_json::Value) -> Self {
        self.witness = Some(witness);
        self
    }

    pub fn is_fail(&self) -> bool {
        self.verdict == Verdict::Fail
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }

    /// One CSV row: instance, predicate, verdict, "k=v;..." values.
    pub fn to_csv_row(&self) -> String {
        let values = self
            .values
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(";");
        format!(
            "{},{},{},{}",
            csv_field(&self.instance.id()),
            csv_field(&self.predicate),
            match self.verdict {
                Verdict::Pass => "pass",
                Verdict::Fail => "fail",
                Verdict::Skip => "skip",
            },
            csv_field(&values)
        )
    }
}

pub const CSV_HEADER: &str = "instance,predicate,verdict,values";

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Exact rendering: integers in decimal, other rationals as "p/q".
pub fn exact_string(q: &BigRational) -> String {
    if q.is_integer() {
        q.to_integer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rounding {
    Nearest,
    Down,
    Up,
}

/// Decimal rendering with `digits` places after the point; exact values
/// shorter than that are not padded with garbage, only truncated zeros.
pub fn decimal_string(q: &BigRational, digits: usize, rounding: Rounding) -> String {
    let a = q.abs();
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = &a * BigRational::from(scale.clone());
    let floor = scaled.floor().to_integer();
    let exactly = BigRational::from(floor.clone()) == scaled;
    let n = match rounding {
        _ if exactly => floor,
        Rounding::Down => {
            if q.is_negative() {
                floor + BigInt::one()
            } else {
                floor
            }
        }
        Rounding::Up => {
            if q.is_negative() {
                floor
            } else {
                floor + BigInt::one()
            }
        }
        Rounding::Nearest => {
            let rem = scaled - BigRational::from(floor.clone());
            if rem >= BigRational::new(BigInt::one(), BigInt::from(2)) {
                floor + BigInt::one()
            } else {
                floor
            }
        }
    };
    let sign = if q.is_negative() && !n.is_zero() { "-" } else { "" };
    let digits_str = format!("{:0>width$}", n.to_string(), width = digits + 1);
    let split = digits_str.len() - digits;
    let (int_part, frac_part) = digits_str.split_at(split);
    if digits == 0 {
        format!("{sign}{int_part}")
    } else {
        let frac = frac_part.trim_end_matches('0');
        if frac.is_empty() {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{frac}")
        }
    }
}

pub fn unix_timestamp() -> u64 {
    std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}
