//! The output record and its three renderings.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde_json::{json, Value};
use tilecensus::genfunc::{CaseTag, FaceDegree, Schlafli};
use tilecensus::RationalGF;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Genfunc,
    Census,
    Verify,
    Asym,
}

impl CommandKind {
    fn as_str(&self) -> &'static str {
        match self {
            CommandKind::Genfunc => "genfunc",
            CommandKind::Census => "census",
            CommandKind::Verify => "verify",
            CommandKind::Asym => "asym",
        }
    }
}

#[derive(Debug, Clone)]
pub struct GrowthBlock {
    pub classification: &'static str,
    pub z0: Option<f64>,
    pub z0_interval: Option<(f64, f64)>,
    pub lambda: f64,
    pub amplitude: Option<f64>,
    pub reciprocity: &'static str,
}

#[derive(Debug, Clone)]
pub struct Mismatch {
    pub series: &'static str,
    pub n: usize,
    pub expected: BigInt,
    pub observed: BigInt,
}

/// One generation of a verify run: map counts next to series values.
#[derive(Debug, Clone)]
pub struct VerifyRow {
    pub n: usize,
    pub map: [Option<u64>; 4],
    pub series: [BigInt; 4],
}

impl VerifyRow {
    pub fn matches(&self) -> bool {
        self.map
            .iter()
            .zip(&self.series)
            .all(|(m, s)| m.is_none_or(|m| BigInt::from(m) == *s))
    }
}

#[derive(Debug, Clone)]
pub struct OracleBlock {
    pub requested_depth: usize,
    pub trusted_depth: usize,
    pub vertices: usize,
    pub budget: usize,
    pub budget_exhausted: bool,
    pub matched: bool,
    pub first_mismatch: Option<Mismatch>,
    pub structure_violation: Option<String>,
    pub rows: Vec<VerifyRow>,
}

#[derive(Debug, Clone)]
pub struct OutputRecord {
    pub command: CommandKind,
    pub symbol: Schlafli,
    pub case_tag: CaseTag,
    pub gf: RationalGF,
    pub series: Option<Vec<BigInt>>,
    pub type_series: Option<[Vec<BigInt>; 3]>,
    pub growth: Option<GrowthBlock>,
    pub oracle: Option<OracleBlock>,
}

fn p_json(p: FaceDegree) -> Value {
    match p {
        FaceDegree::Finite(p) => json!(p),
        FaceDegree::Infinite => json!("inf"),
    }
}

fn big_strings(xs: &[BigInt]) -> Value {
    Value::Array(xs.iter().map(|x| Value::String(x.to_string())).collect())
}

fn opt_f64(x: Option<f64>) -> Value {
    x.map_or(Value::Null, |x| json!(x))
}

impl OutputRecord {
    pub fn to_json(&self) -> Value {
        let mut obj = serde_json::Map::new();
        obj.insert("command".into(), json!(self.command.as_str()));
        obj.insert(
            "symbol".into(),
            json!({ "p": p_json(self.symbol.p), "q": self.symbol.q }),
        );
        obj.insert("case_tag".into(), json!(self.case_tag.as_str()));
        obj.insert(
            "gf".into(),
            json!({
                "num": big_strings(self.gf.num().coeffs()),
                "den": big_strings(self.gf.den().coeffs()),
            }),
        );
        if let Some(v) = &self.series {
            obj.insert("series".into(), big_strings(v));
        }
        if let Some([a, b, c]) = &self.type_series {
            obj.insert(
                "type_series".into(),
                json!({ "a": big_strings(a), "b": big_strings(b), "c": big_strings(c) }),
            );
        }
        if let Some(g) = &self.growth {
            obj.insert(
                "growth".into(),
                json!({
                    "classification": g.classification,
                    "z0": opt_f64(g.z0),
                    "z0_interval": g.z0_interval.map_or(Value::Null, |(lo, hi)| json!([lo, hi])),
                    "lambda": g.lambda,
                    "amplitude": opt_f64(g.amplitude),
                    "denominator_reciprocity": g.reciprocity,
                }),
            );
        }
        if let Some(o) = &self.oracle {
            let mismatch = o.first_mismatch.as_ref().map_or(Value::Null, |m| {
                json!({
                    "series": m.series,
                    "n": m.n,
                    "expected": m.expected.to_string(),
                    "observed": m.observed.to_string(),
                })
            });
            let map_v: Vec<BigInt> = o
                .rows
                .iter()
                .map(|r| BigInt::from(r.map[0].unwrap_or(0)))
                .collect();
            obj.insert(
                "oracle".into(),
                json!({
                    "requested_depth": o.requested_depth,
                    "trusted_depth": o.trusted_depth,
                    "vertices": o.vertices,
                    "budget": o.budget,
                    "budget_exhausted": o.budget_exhausted,
                    "match": o.matched,
                    "first_mismatch": mismatch,
                    "structure_violation": o.structure_violation,
                    "v": big_strings(&map_v),
                }),
            );
        }
        Value::Object(obj)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json()).expect("serializable");
                s.push('\n');
                s
            }
            Format::Csv => self.to_csv(),
            Format::Plain => self.to_plain(),
        }
    }

    fn to_csv(&self) -> String {
        let mut out = String::new();
        match self.command {
            CommandKind::Genfunc => {
                out.push_str("part,power,coefficient\n");
                for (part, poly) in [("num", self.gf.num()), ("den", self.gf.den())] {
                    for (k, c) in poly.coeffs().iter().enumerate() {
                        let _ = writeln!(out, "{part},{k},{c}");
                    }
                }
            }
            CommandKind::Census => {
                let v = self.series.as_deref().unwrap_or_default();
                match &self.type_series {
                    Some([a, b, c]) => {
                        out.push_str("n,v,a,b,c\n");
                        for n in 0..v.len() {
                            let _ = writeln!(out, "{n},{},{},{},{}", v[n], a[n], b[n], c[n]);
                        }
                    }
                    None => {
                        out.push_str("n,v\n");
                        for (n, x) in v.iter().enumerate() {
                            let _ = writeln!(out, "{n},{x}");
                        }
                    }
                }
            }
            CommandKind::Verify => {
                out.push_str(
                    "n,v_map,v_series,a_map,a_series,b_map,b_series,c_map,c_series,match\n",
                );
                if let Some(o) = &self.oracle {
                    for r in &o.rows {
                        let _ = write!(out, "{}", r.n);
                        for (m, s) in r.map.iter().zip(&r.series) {
                            let m = m.map_or(String::new(), |m| m.to_string());
                            let _ = write!(out, ",{m},{s}");
                        }
                        let _ = writeln!(out, ",{}", r.matches());
                    }
                }
            }
            CommandKind::Asym => {
                out.push_str("field,value\n");
                for (k, v) in self.growth_fields() {
                    let _ = writeln!(out, "{k},{v}");
                }
            }
        }
        out
    }

    fn to_plain(&self) -> String {
        let mut out = String::new();
        match self.command {
            CommandKind::Genfunc => {
                let _ = writeln!(out, "{}", self.case_tag);
                let _ = writeln!(out, "{}", self.gf.num());
                let _ = writeln!(out, "{}", self.gf.den());
            }
            CommandKind::Census => {
                let v = self.series.as_deref().unwrap_or_default();
                for n in 0..v.len() {
                    match &self.type_series {
                        Some([a, b, c]) => {
                            let _ = writeln!(out, "{} {} {} {}", v[n], a[n], b[n], c[n]);
                        }
                        None => {
                            let _ = writeln!(out, "{}", v[n]);
                        }
                    }
                }
            }
            CommandKind::Verify => {
                if let Some(o) = &self.oracle {
                    let _ = writeln!(out, "match {}", o.matched);
                    let _ = writeln!(out, "trusted_depth {}", o.trusted_depth);
                    let _ = writeln!(out, "vertices {}", o.vertices);
                    let _ = writeln!(out, "budget_exhausted {}", o.budget_exhausted);
                    if let Some(m) = &o.first_mismatch {
                        let _ = writeln!(
                            out,
                            "first_mismatch {}({}) expected {} observed {}",
                            m.series, m.n, m.expected, m.observed
                        );
                    }
                    if let Some(v) = &o.structure_violation {
                        let _ = writeln!(out, "structure_violation {v}");
                    }
                }
            }
            CommandKind::Asym => {
                for (k, v) in self.growth_fields() {
                    let _ = writeln!(out, "{k} {v}");
                }
            }
        }
        out
    }

    fn growth_fields(&self) -> Vec<(&'static str, String)> {
        let Some(g) = &self.growth else {
            return Vec::new();
        };
        let opt = |x: Option<f64>| x.map_or(String::new(), |x| x.to_string());
        vec![
            ("classification", g.classification.to_string()),
            ("z0", opt(g.z0)),
            ("z0_lo", opt(g.z0_interval.map(|i| i.0))),
            ("z0_hi", opt(g.z0_interval.map(|i| i.1))),
            ("lambda", g.lambda.to_string()),
            ("amplitude", opt(g.amplitude)),
            ("denominator_reciprocity", g.reciprocity.to_string()),
        ]
    }
}

/// Error object printed on stdout in JSON mode.
pub fn error_json(kind: &str, message: &str) -> String {
    let mut s = serde_json::to_string_pretty(&json!({
        "error": { "kind": kind, "message": message }
    }))
    .expect("serializable");
    s.push('\n');
    s
}
