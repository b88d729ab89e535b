//! Result documents for the Lie algebra commands.

use freecr_core::liealg::{build_algebra, verify_algebra, AlgebraReport, Failure};
use freecr_core::model::{fefferman_verify, FeffermanReport};
use serde::Serialize;

use crate::render::TextDoc;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FailureEntry {
    pub check: String,
    pub labels: Vec<String>,
}

fn failures(fs: &[Failure]) -> Vec<FailureEntry> {
    fs.iter()
        .map(|f| FailureEntry {
            check: f.check.to_string(),
            labels: f.labels.clone(),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlgebraDocument {
    pub format: u32,
    pub command: String,
    pub n: usize,
    pub seed: u64,
    pub passed: bool,
    pub dim: usize,
    pub grade_dims: Vec<(i32, usize)>,
    pub jacobi_mode: String,
    pub jacobi_triples: usize,
    pub killing_rank: usize,
    pub center_kernel_dim: usize,
    pub center_spanned_by_identity: bool,
    pub center_trace: String,
    pub center_su_kernel_dim: usize,
    pub lemma2_complex_kernel_dim: usize,
    pub lemma2_real_dim: usize,
    pub lemma2_basis_is_e_j: bool,
    pub lemma2_lambdas: Vec<String>,
    pub lemma2_real_endomorphism_dim: usize,
    pub codiff_trivial_ok: bool,
    pub codiff_equivariant_trials: usize,
    pub codiff_equivariant_ok: bool,
    pub trace_free_coclosed_ok: bool,
    pub failures: Vec<FailureEntry>,
}

impl AlgebraDocument {
    pub fn from_report(r: &AlgebraReport, seed: u64) -> Self {
        let mut fs = failures(&r.grading_failures);
        fs.extend(failures(&r.jacobi_failures));
        fs.extend(failures(&r.bracket_failures));
        AlgebraDocument {
            format: 1,
            command: "algebra verify".into(),
            n: r.n,
            seed,
            passed: r.passed(),
            dim: r.dim,
            grade_dims: r.grade_dims.clone(),
            jacobi_mode: if r.jacobi_exhaustive {
                "exhaustive"
            } else {
                "sampled"
            }
            .into(),
            jacobi_triples: r.jacobi_triples,
            killing_rank: r.killing_rank,
            center_kernel_dim: r.center.kernel_dim,
            center_spanned_by_identity: r.center.spanned_by_identity,
            center_trace: r.center.trace.to_string(),
            center_su_kernel_dim: r.center.su_kernel_dim,
            lemma2_complex_kernel_dim: r.lemma2.complex_kernel_dim,
            lemma2_real_dim: r.lemma2.real_dim,
            lemma2_basis_is_e_j: r.lemma2.basis_is_e_j,
            lemma2_lambdas: r.lemma2.lambdas.iter().map(|l| l.to_string()).collect(),
            lemma2_real_endomorphism_dim: r.lemma2.real_endomorphism_dim,
            codiff_trivial_ok: r.codiff_trivial_ok,
            codiff_equivariant_trials: r.codiff_equivariant_trials,
            codiff_equivariant_ok: r.codiff_equivariant_ok,
            trace_free_coclosed_ok: r.trace_free_coclosed_ok,
            failures: fs,
        }
    }

    pub fn to_text(&self) -> String {
        let mut d = TextDoc::default();
        d.kv("format", self.format)
            .kv("command", &self.command)
            .kv("n", self.n)
            .kv("seed", self.seed)
            .kv("passed", self.passed)
            .kv("dim", self.dim)
            .kv(
                "jacobi",
                format!("{} ({} triples)", self.jacobi_mode, self.jacobi_triples),
            )
            .kv("killing_rank_g-1", self.killing_rank)
            .kv("center_kernel_dim", self.center_kernel_dim)
            .kv(
                "center_spanned_by_identity",
                self.center_spanned_by_identity,
            )
            .kv("center_trace", &self.center_trace)
            .kv("center_su_kernel_dim", self.center_su_kernel_dim)
            .kv("lemma2_complex_kernel_dim", self.lemma2_complex_kernel_dim)
            .kv("lemma2_real_dim", self.lemma2_real_dim)
            .kv("lemma2_basis_is_e_j", self.lemma2_basis_is_e_j)
            .kv("lemma2_lambdas", self.lemma2_lambdas.join(", "))
            .kv(
                "lemma2_real_endomorphism_dim",
                self.lemma2_real_endomorphism_dim,
            )
            .kv("codiff_trivial_ok", self.codiff_trivial_ok)
            .kv(
                "codiff_equivariant",
                format!(
                    "{} ({} trials)",
                    self.codiff_equivariant_ok, self.codiff_equivariant_trials
                ),
            )
            .kv("trace_free_coclosed_ok", self.trace_free_coclosed_ok);
        d.table(
            "grades",
            &["grade", "real_dim"],
            self.grade_dims
                .iter()
                .map(|(g, k)| vec![g.to_string(), k.to_string()])
                .collect(),
        );
        d.table(
            "failures",
            &["check", "elements"],
            self.failures
                .iter()
                .map(|f| vec![f.check.clone(), f.labels.join(",")])
                .collect(),
        );
        d.render()
    }
}

pub fn algebra_document(n: usize, seed: u64) -> AlgebraDocument {
    AlgebraDocument::from_report(&verify_algebra(n, seed), seed)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FeffermanDocument {
    pub format: u32,
    pub command: String,
    pub n: usize,
    pub passed: bool,
    pub pairs_checked: usize,
    pub injective: bool,
    pub grade_compatible: bool,
    pub q_codimension: usize,
    pub relation_failures: Vec<String>,
    pub homomorphism_failures: Vec<(String, String)>,
}

impl FeffermanDocument {
    pub fn from_report(r: &FeffermanReport) -> Self {
        FeffermanDocument {
            format: 1,
            command: "fefferman verify".into(),
            n: r.n,
            passed: r.passed(),
            pairs_checked: r.pairs_checked,
            injective: r.injective,
            grade_compatible: r.grade_compatible,
            q_codimension: r.q_codimension,
            relation_failures: r.relation_failures.clone(),
            homomorphism_failures: r.homomorphism_failures.clone(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut d = TextDoc::default();
        d.kv("format", self.format)
            .kv("command", &self.command)
            .kv("n", self.n)
            .kv("passed", self.passed)
            .kv("pairs_checked", self.pairs_checked)
            .kv("injective", self.injective)
            .kv("grade_compatible", self.grade_compatible)
            .kv("q_codimension", self.q_codimension);
        d.table(
            "relation_failures",
            &["element"],
            self.relation_failures
                .iter()
                .map(|l| vec![l.clone()])
                .collect(),
        );
        d.table(
            "homomorphism_failures",
            &["x", "y"],
            self.homomorphism_failures
                .iter()
                .map(|(a, b)| vec![a.clone(), b.clone()])
                .collect(),
        );
        d.render()
    }
}

pub fn fefferman_document(n: usize) -> FeffermanDocument {
    FeffermanDocument::from_report(&fefferman_verify(&build_algebra(n)))
}
