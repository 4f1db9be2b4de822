//! Human-readable summary of verification records.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::{Verdict, VerificationRecord};
use crate::ledger::CATALOG;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl Counts {
    fn add(&mut self, v: Verdict) {
        match v {
            Verdict::Pass => self.pass += 1,
            Verdict::Fail => self.fail += 1,
            Verdict::Skipped => self.skipped += 1,
        }
    }
}

/// Counts per check, in order of first appearance.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct Summary {
    pub checks: Vec<(String, Counts)>,
    pub total: Counts,
}

impl Summary {
    pub fn of(records: &[VerificationRecord]) -> Self {
        let mut s = Summary::default();
        for r in records {
            let i = match s.checks.iter().position(|(c, _)| *c == r.check) {
                Some(i) => i,
                None => {
                    s.checks.push((r.check.clone(), Counts::default()));
                    s.checks.len() - 1
                }
            };
            s.checks[i].1.add(r.verdict);
            s.total.add(r.verdict);
        }
        s
    }

    pub fn line(&self) -> String {
        format!(
            "{} PASS, {} FAIL, {} SKIPPED",
            self.total.pass, self.total.fail, self.total.skipped
        )
    }
}

fn num(v: Option<f64>) -> String {
    v.map_or_else(|| "-".to_string(), |v| format!("{v:.17e}"))
}

fn point(r: &VerificationRecord) -> String {
    r.point
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Summary table, failure details and the discrepancy ledger.
pub fn render_report(records: &[VerificationRecord]) -> String {
    let summary = Summary::of(records);
    let mut out = String::new();
    let w = &mut out;
    writeln!(w, "summary: {}", summary.line()).unwrap();
    if !summary.checks.is_empty() {
        writeln!(w).unwrap();
        writeln!(w, "{:<28} {:>6} {:>6} {:>8}", "check", "pass", "fail", "skipped").unwrap();
        for (c, n) in &summary.checks {
            writeln!(w, "{c:<28} {:>6} {:>6} {:>8}", n.pass, n.fail, n.skipped).unwrap();
        }
    }

    let fails: Vec<_> = records.iter().filter(|r| r.verdict == Verdict::Fail).collect();
    if !fails.is_empty() {
        writeln!(w, "\nfailures:").unwrap();
        for r in fails {
            writeln!(
                w,
                "  #{} {} [{}] closed form {} oracle {} rel diff {} (tol {:e})",
                r.index,
                r.check,
                point(r),
                num(r.closed_form_value),
                num(r.oracle_value),
                num(r.rel_diff),
                r.tolerance
            )
            .unwrap();
            if let Some(q) = r.quadrature_rel_diff {
                writeln!(w, "      quadrature {} rel diff {q:e}", num(r.quadrature_value)).unwrap();
            }
            if let Some(note) = &r.ledger_note {
                writeln!(w, "      {note}").unwrap();
            }
        }
    }

    let mut skips: BTreeMap<String, usize> = BTreeMap::new();
    for r in records.iter().filter(|r| r.verdict == Verdict::Skipped) {
        let reason = r.reason.map_or("unknown", |s| s.name());
        *skips.entry(format!("{} ({reason})", r.check)).or_default() += 1;
    }
    if !skips.is_empty() {
        writeln!(w, "\nskipped:").unwrap();
        for (k, n) in skips {
            writeln!(w, "  {k}: {n}").unwrap();
        }
    }

    writeln!(w, "\nledger:").unwrap();
    for d in CATALOG {
        let hits: Vec<_> = records
            .iter()
            .filter_map(|r| r.discrepancies.iter().find(|x| x.id == d.id).map(|x| (r, x)))
            .collect();
        writeln!(w, "  {} ({} records)", d.id, hits.len()).unwrap();
        writeln!(w, "      printed: {}", d.printed).unwrap();
        writeln!(w, "      adopted: {}", d.adopted).unwrap();
        writeln!(w, "      evidence: {}", d.evidence).unwrap();
        if let Some((r, x)) = hits.iter().find(|(_, x)| x.printed_value.is_some()).or(hits.first()) {
            writeln!(
                w,
                "      e.g. #{} {} [{}]: oracle {} printed {}",
                r.index,
                r.check,
                point(r),
                num(r.oracle_value),
                num(x.printed_value)
            )
            .unwrap();
        }
    }
    out
}
