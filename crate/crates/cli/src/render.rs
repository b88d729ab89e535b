//! Text rendering: `key: value` lines followed by `[section]` tables with
//! tab-separated columns.

use std::fmt::Write as _;

use crate::pipeline::{Entry, ResultDocument};

#[derive(Default)]
pub struct TextDoc {
    head: Vec<(String, String)>,
    tables: Vec<(String, Vec<String>, Vec<Vec<String>>)>,
}

impl TextDoc {
    pub fn kv(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.head.push((key.to_string(), value.to_string()));
        self
    }

    pub fn table(&mut self, name: &str, columns: &[&str], rows: Vec<Vec<String>>) -> &mut Self {
        self.tables.push((
            name.to_string(),
            columns.iter().map(|c| c.to_string()).collect(),
            rows,
        ));
        self
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        for (k, v) in &self.head {
            writeln!(s, "{k}: {v}").unwrap();
        }
        for (name, cols, rows) in &self.tables {
            writeln!(s, "\n[{name}]").unwrap();
            writeln!(s, "{}", cols.join("\t")).unwrap();
            for r in rows {
                writeln!(s, "{}", r.join("\t")).unwrap();
            }
        }
        s
    }
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

fn index_text(idx: &[usize]) -> String {
    idx.iter()
        .map(|k| k.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn entry_rows(es: &[Entry]) -> Vec<Vec<String>> {
    es.iter()
        .map(|e| vec![e.family.clone(), index_text(&e.index), e.value.clone()])
        .collect()
}

pub fn result_text(r: &ResultDocument) -> String {
    let mut d = TextDoc::default();
    d.kv("format", r.format)
        .kv("command", &r.command)
        .kv("input_sha256", &r.input_sha256)
        .kv("n", r.n);
    if r.command == "invariant" {
        d.kv("verdict", opt(&r.verdict.map(|v| v.as_str())));
    }
    d.kv("passed", r.passed)
        .kv("rejected_by", opt(&r.rejected_by))
        .kv("message", opt(&r.message))
        .kv("nondegenerate", opt(&r.checks.nondegenerate))
        .kv("totally_real", opt(&r.checks.totally_real))
        .kv("integrable", opt(&r.checks.integrable))
        .kv("sign_rule", &r.conventions.sign_rule)
        .kv("index_storage", &r.conventions.index_storage)
        .kv("levi_levi", &r.conventions.levi_levi)
        .kv("gauge", &r.conventions.gauge)
        .kv("c_variant", opt(&r.conventions.c_variant));
    d.table(
        "witnesses",
        &["check", "pair", "residual"],
        r.witnesses
            .iter()
            .map(|w| vec![w.check.clone(), index_text(&w.pair), w.residual.clone()])
            .collect(),
    );
    d.table(
        "nijenhuis",
        &["family", "index", "value"],
        entry_rows(&r.nijenhuis),
    );
    d.table(
        "family_counts",
        &["family", "nonzero"],
        r.family_counts
            .iter()
            .map(|(f, c)| vec![f.clone(), c.to_string()])
            .collect(),
    );
    d.table(
        "structure_functions",
        &["family", "index", "value"],
        entry_rows(&r.structure_functions),
    );
    d.table(
        "coefficients",
        &["family", "index", "value"],
        entry_rows(&r.coefficients),
    );
    d.table("p", &["family", "index", "value"], entry_rows(&r.p));
    d.render()
}
