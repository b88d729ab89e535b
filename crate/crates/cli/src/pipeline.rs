//! From a frame document to a result document.

use std::fmt::Write as _;

use freecr_core::crverify::{self, CRReport, Check};
use freecr_core::exactfield::Chart;
use freecr_core::invariant::{
    compute_invariant, flatness_verdict, InvariantError, InvariantTensor, StructureFunctions,
    Tensor, GAUGE,
};
use freecr_core::vfields::{build_frame, VfError};
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::frame::{FrameDocument, FrameError};

pub const SIGN_RULE: &str = "dθ^a(X_b, X_c) = -θ^a([X_b, X_c]); X_{[ij]} = -[X_i, conj(X_j)]";
pub const INDEX_STORAGE: &str = "indices are 1-based in the order of the family name; \
barred indices are written unbarred (f^{rs}_{ijk} is f^{r s̄}_{i j k̄}, P^{ij}_{rst} is P^{i j̄}_{r s t̄}); \
conjugation partners are listed separately";
pub const LEVI_LEVI: &str =
    "f^r_{ijkl} and f^{rs}_{ijkl} are antisymmetric in the two pairs and store half of dθ(X_{[ij]}, X_{[kl]})";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Flat,
    NotFlat,
    Rejected,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Flat => "flat",
            Verdict::NotFlat => "not_flat",
            Verdict::Rejected => "rejected",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Entry {
    pub family: String,
    pub index: Vec<usize>,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessEntry {
    pub check: String,
    pub pair: [usize; 2],
    pub residual: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Checks {
    pub nondegenerate: Option<bool>,
    pub totally_real: Option<bool>,
    pub integrable: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Conventions {
    pub sign_rule: String,
    pub index_storage: String,
    pub levi_levi: String,
    pub gauge: String,
    pub c_variant: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResultDocument {
    pub format: u32,
    pub command: String,
    pub input_sha256: String,
    pub n: usize,
    /// Only for `invariant`.
    pub verdict: Option<Verdict>,
    pub passed: bool,
    pub rejected_by: Option<String>,
    pub message: Option<String>,
    pub checks: Checks,
    pub witnesses: Vec<WitnessEntry>,
    /// Nonzero entry count per structure-function family, in a fixed order.
    pub family_counts: Vec<(String, usize)>,
    pub structure_functions: Vec<Entry>,
    pub coefficients: Vec<Entry>,
    pub p: Vec<Entry>,
    pub nijenhuis: Vec<Entry>,
    pub conventions: Conventions,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    let d = Sha256::digest(bytes);
    let mut s = String::with_capacity(64);
    for b in d {
        write!(s, "{b:02x}").unwrap();
    }
    s
}

fn entries(family: &str, t: &Tensor, chart: &Chart) -> Vec<Entry> {
    let mut out: Vec<Entry> = t
        .nonzero()
        .into_iter()
        .map(|(idx, v)| Entry {
            family: family.to_string(),
            index: idx.iter().map(|k| k + 1).collect(),
            value: v.to_text(chart),
        })
        .collect();
    out.sort_by(|a, b| a.index.cmp(&b.index));
    out
}

fn check_name(c: Check) -> &'static str {
    match c {
        Check::TotallyReal => "totally_real",
        Check::Integrable => "integrable",
    }
}

impl ResultDocument {
    fn new(command: &str, digest: String, n: usize) -> Self {
        ResultDocument {
            format: 1,
            command: command.to_string(),
            input_sha256: digest,
            n,
            verdict: None,
            passed: false,
            rejected_by: None,
            message: None,
            checks: Checks::default(),
            witnesses: Vec::new(),
            family_counts: Vec::new(),
            structure_functions: Vec::new(),
            coefficients: Vec::new(),
            p: Vec::new(),
            nijenhuis: Vec::new(),
            conventions: Conventions {
                sign_rule: SIGN_RULE.to_string(),
                index_storage: INDEX_STORAGE.to_string(),
                levi_levi: LEVI_LEVI.to_string(),
                gauge: GAUGE.to_string(),
                c_variant: None,
            },
        }
    }

    fn reject(&mut self, check: &str, message: String) {
        self.passed = false;
        if self.command == "invariant" {
            self.verdict = Some(Verdict::Rejected);
        }
        self.rejected_by = Some(check.to_string());
        self.message = Some(message);
    }

    fn record_cr(&mut self, r: &CRReport) {
        self.checks = Checks {
            nondegenerate: Some(r.nondegenerate),
            totally_real: Some(r.totally_real),
            integrable: Some(r.integrable),
        };
        self.witnesses = r
            .witnesses
            .iter()
            .map(|w| WitnessEntry {
                check: check_name(w.check).to_string(),
                pair: [w.i + 1, w.j + 1],
                residual: w.residual.to_text(),
            })
            .collect();
        if let Some(nt) = &r.nijenhuis {
            let chart = Chart::standard(self.n);
            for (i, row) in nt.iter().enumerate() {
                for (j, col) in row.iter().enumerate() {
                    for (k, v) in col.iter().enumerate() {
                        if !v.is_zero() {
                            self.nijenhuis.push(Entry {
                                family: "N".into(),
                                index: vec![i + 1, j + 1, k + 1],
                                value: v.to_text(&chart),
                            });
                        }
                    }
                }
            }
        }
    }

    fn record_invariant(&mut self, sf: &StructureFunctions, p: &InvariantTensor) {
        let chart = sf.chart.as_ref();
        for (name, t) in sf.families() {
            let e = entries(name, t, chart);
            self.family_counts.push((name.to_string(), e.len()));
            self.structure_functions.extend(e);
        }
        self.coefficients
            .extend(entries("A^i_{rs}", &p.coeffs.a, chart));
        self.coefficients
            .extend(entries("B^i_{sr}", &p.coeffs.b, chart));
        self.coefficients
            .extend(entries("C^i_{rs}", &p.coeffs.c, chart));
        self.p = entries("P^{ij}_{rst}", &p.p, chart);
        self.conventions.c_variant = Some(p.c_variant.as_str().to_string());
    }
}

/// Parse the input and stop at the first input error.
pub fn load(text: &str) -> Result<FrameDocument, FrameError> {
    crate::frame::parse_frame(text)
}

fn frame_stage(
    doc: &FrameDocument,
    out: &mut ResultDocument,
) -> Result<Option<freecr_core::vfields::CRFrame>, FrameError> {
    let fields = doc.vector_fields()?;
    let base = doc.base_point_values()?;
    match build_frame(fields, base) {
        Ok(f) => Ok(Some(f)),
        Err(e @ VfError::DegenerateFrame { .. }) => {
            out.checks.nondegenerate = Some(false);
            out.reject("nondegenerate", e.to_string());
            Ok(None)
        }
        Err(e) => {
            out.reject("frame", e.to_string());
            Ok(None)
        }
    }
}

/// Frame construction and the CR checks only.
pub fn run_check(doc: &FrameDocument, input: &[u8]) -> Result<ResultDocument, FrameError> {
    let mut out = ResultDocument::new("check", sha256_hex(input), doc.n);
    let Some(frame) = frame_stage(doc, &mut out)? else {
        return Ok(out);
    };
    match crverify::verify(&frame) {
        Ok(r) => {
            out.record_cr(&r);
            out.passed = r.passed();
            if !r.totally_real {
                out.reject(
                    "totally_real",
                    "a bracket [X_i, X_j] has a Levi component".into(),
                );
            }
        }
        Err(e) => out.reject("crverify", e.to_string()),
    }
    Ok(out)
}

/// The whole pipeline. Rejections are reported inside the document.
pub fn run_pipeline(doc: &FrameDocument, input: &[u8]) -> Result<ResultDocument, FrameError> {
    let mut out = ResultDocument::new("invariant", sha256_hex(input), doc.n);
    let Some(frame) = frame_stage(doc, &mut out)? else {
        return Ok(out);
    };
    let report = match crverify::verify(&frame) {
        Ok(r) => r,
        Err(e) => {
            out.reject("crverify", e.to_string());
            return Ok(out);
        }
    };
    out.record_cr(&report);
    if !report.totally_real {
        out.reject(
            "totally_real",
            "a bracket [X_i, X_j] has a Levi component".into(),
        );
        return Ok(out);
    }
    if !report.integrable {
        if !out.nijenhuis.is_empty() {
            out.passed = true;
            out.verdict = Some(Verdict::NotFlat);
            out.message = Some("the Nijenhuis tensor is nonzero; P is not computed".into());
        } else {
            out.reject(
                "integrable",
                "the invariant computation needs an integrable frame".into(),
            );
        }
        return Ok(out);
    }
    let (sf, p) = match compute_invariant(&frame) {
        Ok(x) => x,
        Err(e) => {
            let check = match e {
                InvariantError::NonCommuting { .. } => "commuting_frame",
                InvariantError::NotInSpan { .. } => "span",
                InvariantError::TraceResidual { .. } => "trace_free",
                _ => "invariant",
            };
            out.reject(check, e.to_string());
            return Ok(out);
        }
    };
    out.record_invariant(&sf, &p);
    match flatness_verdict(&p, report.nijenhuis.as_ref()) {
        Ok(f) => {
            out.passed = true;
            out.verdict = Some(if f.flat {
                Verdict::Flat
            } else {
                Verdict::NotFlat
            });
        }
        Err(e) => out.reject("invariant", e.to_string()),
    }
    Ok(out)
}
