//! Subcommand bodies. Each returns the process exit code, or an error
//! message for usage and I/O problems.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use chartables::{build_table, Eigentable, Family, TableJson};
use criteria::{Criterion, CriterionReport, Method, SpectrumMode, Verdict, CATEGORIFICATION_CRITERIA};
use fusionring::{verify_axioms, FusionRing};
use rayon::prelude::*;
use serde::Serialize;

use crate::{RingMethod, TableFormat};

type CmdResult = Result<ExitCode, String>;

fn status(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn pretty<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), String> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| format!("cannot write {}: {e}", p.display())),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| e.to_string()),
    }
}

fn read(p: &Path) -> Result<String, String> {
    std::fs::read_to_string(p).map_err(|e| format!("cannot read {}: {e}", p.display()))
}

fn table_for(q: u64, family: Family) -> Result<Eigentable, String> {
    if q < 2 {
        return Err(format!("q must be at least 2, got {q}"));
    }
    build_table(family, q).map_err(|e| e.to_string())
}

pub fn table(q: u64, family: Family, format: TableFormat) -> CmdResult {
    let t = table_for(q, family)?;
    let text = match format {
        TableFormat::Json => pretty(&t.to_json()),
        TableFormat::Text => {
            let mut s = format!("# {} q={} rank={} fpdim={}\n", t.family, t.q, t.rank, t.fpdim_total);
            let sizes: Vec<String> = t.class_sizes.iter().map(|c| c.to_string()).collect();
            s += &format!("class sizes: {}\n", sizes.join(", "));
            for (lab, row) in t.row_labels.iter().zip(&t.entries) {
                let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                s += &format!("{lab}: {}\n", cells.join(", "));
            }
            s
        }
    };
    emit(&text, None)?;
    Ok(ExitCode::SUCCESS)
}

fn build_ring(q: u64, family: Family, method: RingMethod) -> Result<FusionRing, String> {
    let t = table_for(q, family)?;
    match method {
        RingMethod::Verlinde => verlinde::reconstruct(&t).map_err(|e| e.to_string()),
        RingMethod::Closed => closedrules::rules(q, family).map_err(|e| e.to_string()),
    }
}

pub fn ring(q: u64, family: Family, method: RingMethod, out: Option<&Path>) -> CmdResult {
    let r = build_ring(q, family, method)?;
    emit(&pretty(&r.to_json()), out)?;
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct Mismatch {
    i: usize,
    j: usize,
    k: usize,
    ring: u32,
    table: u32,
}

#[derive(Serialize)]
struct VerifyReport {
    axioms_ok: bool,
    commutative: bool,
    /// At most the first 20, in sorted order.
    violations: Vec<fusionring::Violation>,
    violation_count: usize,
    table_match: Option<bool>,
    table_mismatch: Option<Mismatch>,
}

pub fn verify(ring_path: &Path, table_path: Option<&Path>) -> CmdResult {
    let r = FusionRing::from_json_str(&read(ring_path)?).map_err(|e| e.to_string())?;
    let axioms = verify_axioms(&r);
    let mut rep = VerifyReport {
        axioms_ok: axioms.ok(),
        commutative: axioms.commutative,
        violations: axioms.violations.iter().take(20).cloned().collect(),
        violation_count: axioms.violations.len(),
        table_match: None,
        table_mismatch: None,
    };
    if let Some(tp) = table_path {
        let tj: TableJson = serde_json::from_str(&read(tp)?).map_err(|e| format!("malformed table: {e}"))?;
        let t = Eigentable::from_json(tj).map_err(|e| e.to_string())?;
        match verlinde::reconstruct(&t) {
            Ok(rt) if rt.rank == r.rank => {
                let n = r.rank;
                let first = (0..n)
                    .flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
                    .find(|&(i, j, k)| r.get(i, j, k) != rt.get(i, j, k));
                rep.table_match = Some(first.is_none());
                rep.table_mismatch =
                    first.map(|(i, j, k)| Mismatch { i, j, k, ring: r.get(i, j, k), table: rt.get(i, j, k) });
            }
            Ok(_) => rep.table_match = Some(false),
            Err(e) => return Err(format!("table does not reconstruct a ring: {e}")),
        }
    }
    let ok = rep.axioms_ok && rep.table_match != Some(false);
    emit(&pretty(&rep), None)?;
    Ok(status(ok))
}

fn parse_only(only: Option<&[String]>) -> Result<Vec<Criterion>, String> {
    match only {
        None => Ok(CATEGORIFICATION_CRITERIA.to_vec()),
        Some(names) => names.iter().map(|s| s.trim().parse()).collect(),
    }
}

pub fn criteria(q: u64, family: Family, only: Option<&[String]>, exhaustive: bool) -> CmdResult {
    let which = parse_only(only)?;
    table_for(q, family)?;
    let mode = if exhaustive { SpectrumMode::Exhaustive } else { SpectrumMode::Fast };
    let reports = criteria::run_selected(q, family, &which, mode).map_err(|e| e.to_string())?;
    let ok = reports.iter().all(CriterionReport::passed);
    emit(&pretty(&reports), None)?;
    Ok(status(ok))
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
struct ScanRecord {
    q: u64,
    family: Family,
    criterion: Criterion,
    verdict: Verdict,
    method: Method,
    elapsed_ms: u64,
}

pub struct ScanArgs {
    pub q_from: u64,
    pub q_to: u64,
    pub families: Vec<Family>,
    pub jobs: usize,
    pub only: Option<Vec<String>>,
    pub out: Option<PathBuf>,
    pub timings: bool,
}

pub fn scan(a: ScanArgs) -> CmdResult {
    if a.q_from < 2 || a.q_to < a.q_from {
        return Err(format!("need 2 ≤ q-from ≤ q-to, got {}..{}", a.q_from, a.q_to));
    }
    if a.jobs == 0 {
        return Err("jobs must be positive".into());
    }
    let which = parse_only(a.only.as_deref())?;
    let mut families = a.families.clone();
    families.sort();
    families.dedup();
    let work: Vec<(u64, Family)> =
        (a.q_from..=a.q_to).flat_map(|q| families.iter().map(move |&f| (q, f))).collect();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(a.jobs).build().map_err(|e| e.to_string())?;
    let results: Vec<Result<Vec<ScanRecord>, String>> = pool.install(|| {
        work.par_iter()
            .map(|&(q, f)| {
                let t = build_table(f, q).map_err(|e| e.to_string())?;
                let ring = verlinde::reconstruct(&t).map_err(|e| e.to_string())?;
                Ok(which
                    .iter()
                    .map(|&c| {
                        let start = Instant::now();
                        let rep = criteria::evaluate(c, &t, &ring, SpectrumMode::Fast);
                        let elapsed_ms = if a.timings { start.elapsed().as_millis() as u64 } else { 0 };
                        ScanRecord { q, family: f, criterion: c, verdict: rep.verdict, method: rep.method, elapsed_ms }
                    })
                    .collect())
            })
            .collect()
    });
    let mut records = Vec::new();
    for r in results {
        records.extend(r?);
    }
    records.sort_by(|x, y| (x.q, x.family, x.criterion).cmp(&(y.q, y.family, y.criterion)));
    let mut text = String::new();
    for r in &records {
        text += &serde_json::to_string(r).expect("serializable");
        text.push('\n');
    }
    emit(&text, a.out.as_deref())?;
    Ok(status(records.iter().all(|r| r.verdict == Verdict::Pass)))
}

#[derive(Serialize)]
struct ModsearchOutput {
    candidates: Vec<modsearch::ModularTypeCandidate>,
    note: String,
}

pub fn modsearch(max_rank: usize, npp: bool, unique_unit: bool, certificate: Option<&Path>) -> CmdResult {
    if !(1..=11).contains(&max_rank) {
        return Err(format!("max-rank must be in 1..=11, got {max_rank}"));
    }
    let opts = modsearch::SearchOptions { max_rank, unique_unit, non_prime_power: npp };
    let (candidates, cert) = modsearch::search_with(opts);
    if let Some(p) = certificate {
        emit(&pretty(&cert), Some(p))?;
    }
    let ok = candidates.is_empty();
    emit(&pretty(&ModsearchOutput { candidates, note: cert.note.clone() }), None)?;
    Ok(status(ok))
}

#[derive(Serialize)]
struct CrosscheckOutput {
    q: u64,
    family: Family,
    equal: bool,
    mismatch: Option<Mismatch>,
}

pub fn crosscheck(q: u64, family: Family) -> CmdResult {
    let closed = build_ring(q, family, RingMethod::Closed)?;
    let recon = build_ring(q, family, RingMethod::Verlinde)?;
    let mismatch = if closed.rank != recon.rank {
        Some(Mismatch { i: 0, j: 0, k: 0, ring: closed.rank as u32, table: recon.rank as u32 })
    } else {
        let n = closed.rank;
        (0..n)
            .flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
            .find(|&(i, j, k)| closed.get(i, j, k) != recon.get(i, j, k))
            .map(|(i, j, k)| Mismatch { i, j, k, ring: closed.get(i, j, k), table: recon.get(i, j, k) })
    };
    let equal = mismatch.is_none() && closed.dual == recon.dual;
    emit(&pretty(&CrosscheckOutput { q, family, equal, mismatch }), None)?;
    Ok(status(equal))
}
