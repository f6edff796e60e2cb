//! Rendering of command results. Text output is for people; CSV and JSON
//! payloads are byte-deterministic for a given command line.

use std::io::Write;
use std::time::Instant;

use serde::Serialize;

use polycount_core::asymptotics::{AsymptoticConstants, ConvergenceReport, Kind};
use polycount_core::polytopes::coefficient_table_with_stats;
use polycount_core::verify::VerifyReport;
use polycount_core::{CountRow, Exec};

use crate::Format;

pub const CSV_HEADER: &str = "d,vertices,c,c_plus,c_minus";

#[derive(Serialize)]
struct JsonRow {
    d: usize,
    vertices: usize,
    c: String,
    c_plus: String,
    c_minus: String,
}

#[derive(Serialize)]
struct JsonTable {
    rows: Vec<JsonRow>,
}

pub fn table(w: &mut dyn Write, format: Format, rows: &[CountRow]) -> anyhow::Result<()> {
    match format {
        Format::Csv => {
            writeln!(w, "{CSV_HEADER}")?;
            for r in rows {
                writeln!(w, "{},{},{},{},{}", r.d, r.vertices, r.c, r.c_plus, r.c_minus)?;
            }
        }
        Format::Json => {
            let rows: Vec<JsonRow> = rows
                .iter()
                .map(|r| JsonRow {
                    d: r.d,
                    vertices: r.vertices,
                    c: r.c.to_string(),
                    c_plus: r.c_plus.to_string(),
                    c_minus: r.c_minus.to_string(),
                })
                .collect();
            serde_json::to_writer_pretty(&mut *w, &JsonTable { rows })?;
            writeln!(w)?;
        }
        Format::Text => {
            let width = rows.last().map_or(1, |r| r.c_plus.to_string().len()).max(6);
            writeln!(w, "{:>4} {:>8} {:>width$} {:>width$} {:>width$}", "d", "vertices", "c", "c_plus", "c_minus")?;
            for r in rows {
                writeln!(w, "{:>4} {:>8} {:>width$} {:>width$} {:>width$}", r.d, r.vertices, r.c, r.c_plus, r.c_minus)?;
            }
        }
    }
    Ok(())
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn verify(w: &mut dyn Write, format: Format, r: &VerifyReport) -> anyhow::Result<()> {
    let failed = r.failures().count();
    let findings = r.findings().count();
    let passed = r.checks.len() - failed - findings;
    match format {
        Format::Csv => {
            writeln!(w, "name,status,detail")?;
            for c in &r.checks {
                writeln!(w, "{},{},{}", csv_field(&c.name), c.status, csv_field(&c.detail))?;
            }
        }
        Format::Json => {
            let checks: Vec<_> = r
                .checks
                .iter()
                .map(|c| serde_json::json!({ "name": c.name, "status": c.status.to_string(), "detail": c.detail }))
                .collect();
            let doc = serde_json::json!({
                "max_size": r.max_size,
                "passed": r.passed(),
                "checks": checks,
            });
            serde_json::to_writer_pretty(&mut *w, &doc)?;
            writeln!(w)?;
        }
        Format::Text => {
            for c in &r.checks {
                writeln!(w, "{c}")?;
            }
            writeln!(w, "{} checks: {passed} passed, {findings} findings, {failed} failed", r.checks.len())?;
            writeln!(w, "count of record for achiral polytopes: 2P - P+")?;
        }
    }
    Ok(())
}

/// `x` to `digits` significant digits; scientific notation outside
/// `[1e-4, 1e15)`.
pub fn sig(x: f64, digits: usize) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0".into();
    }
    let mag = x.abs().log10().floor() as i32;
    if !(-4..15).contains(&mag) {
        return format!("{:.*e}", digits.saturating_sub(1), x);
    }
    let decimals = (digits as i32 - 1 - mag).max(0) as usize;
    format!("{x:.decimals$}")
}

pub fn asymptotics(w: &mut dyn Write, format: Format, r: &ConvergenceReport, p: usize) -> anyhow::Result<()> {
    let k = AsymptoticConstants::get();
    let constants = [
        ("gamma", k.gamma),
        ("rho", k.rho),
        ("lambda", k.lambda),
        ("alpha", k.alpha),
        ("C", k.big_c),
        ("C_prime", k.big_c_prime),
        ("c_amplitude", k.c_amplitude),
        ("c_plus_amplitude", k.c_plus_amplitude),
    ];
    match format {
        Format::Csv => {
            writeln!(w, "kind,d,exact,estimate,ratio,relative_error")?;
            for row in &r.rows {
                writeln!(
                    w,
                    "{},{},{},{},{},{}",
                    row.kind.name(),
                    row.d,
                    row.exact,
                    sig(row.estimate, p),
                    sig(row.ratio, p),
                    sig(row.relative_error, p)
                )?;
            }
        }
        Format::Json => {
            let consts: serde_json::Map<_, _> =
                constants.iter().map(|(n, v)| (n.to_string(), serde_json::Value::String(sig(*v, p)))).collect();
            let d0: serde_json::Map<_, _> =
                r.d0.iter().map(|(k, v)| (k.name().to_string(), serde_json::json!(v))).collect();
            let rows: Vec<_> = r
                .rows
                .iter()
                .map(|row| {
                    serde_json::json!({
                        "kind": row.kind.name(),
                        "d": row.d,
                        "exact": row.exact.to_string(),
                        "estimate": sig(row.estimate, p),
                        "ratio": sig(row.ratio, p),
                        "relative_error": sig(row.relative_error, p),
                    })
                })
                .collect();
            let doc = serde_json::json!({ "constants": consts, "monotone_from": d0, "rows": rows });
            serde_json::to_writer_pretty(&mut *w, &doc)?;
            writeln!(w)?;
        }
        Format::Text => {
            for (n, v) in constants {
                writeln!(w, "{n:>16} = {}", sig(v, p))?;
            }
            for kind in Kind::ALL {
                writeln!(w)?;
                let from = r.d0[&kind].map_or("never".to_string(), |d| format!("d = {d}"));
                writeln!(w, "{} (relative error decreasing from {from})", kind.name())?;
                writeln!(w, "{:>5} {:>20} {:>20} {:>20}", "d", "estimate", "ratio", "relative_error")?;
                for row in r.rows_of(kind) {
                    writeln!(
                        w,
                        "{:>5} {:>20} {:>20} {:>20}",
                        row.d,
                        sig(row.estimate, p),
                        sig(row.ratio, p),
                        sig(row.relative_error, p)
                    )?;
                }
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Serialize)]
pub struct BenchRow {
    pub n: usize,
    pub operations: u64,
    pub sequential_ms: f64,
    pub parallel_ms: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Bench {
    pub rows: Vec<BenchRow>,
}

/// Largest allowed growth of the operation count per doubling of `N`; an
/// `N log N` algorithm stays just above 2, a quadratic one reaches 4.
pub const MAX_DOUBLING_RATIO: f64 = 3.0;

impl Bench {
    pub fn operation_ratios(&self) -> Vec<f64> {
        self.rows.windows(2).map(|w| w[1].operations as f64 / w[0].operations as f64).collect()
    }

    /// Operation counts strictly increase and grow by less than
    /// [`MAX_DOUBLING_RATIO`] per doubling.
    pub fn sub_quadratic(&self) -> bool {
        self.operation_ratios().iter().all(|&r| r > 1.0 && r < MAX_DOUBLING_RATIO)
    }
}

pub fn ladder(max_n: usize, steps: usize) -> Vec<usize> {
    let mut v: Vec<usize> = (0..=steps).map(|i| max_n >> i).filter(|&n| n >= 2).collect();
    v.reverse();
    v.dedup();
    v
}

fn timed(n: usize, exec: Exec) -> anyhow::Result<(u64, f64)> {
    let t = Instant::now();
    let (_, stats) = coefficient_table_with_stats(n, exec)?;
    Ok((stats.operations, t.elapsed().as_secs_f64() * 1e3))
}

pub fn bench(ladder: &[usize]) -> anyhow::Result<Bench> {
    let mut rows = Vec::new();
    for &n in ladder {
        let (operations, sequential_ms) = timed(n, Exec::Sequential)?;
        let (_, parallel_ms) = timed(n, Exec::Parallel)?;
        rows.push(BenchRow { n, operations, sequential_ms, parallel_ms });
    }
    Ok(Bench { rows })
}

pub fn write_bench(w: &mut dyn Write, format: Format, b: &Bench) -> anyhow::Result<()> {
    let ratios = b.operation_ratios();
    match format {
        Format::Csv => {
            writeln!(w, "n,operations,sequential_ms,parallel_ms")?;
            for r in &b.rows {
                writeln!(w, "{},{},{:.3},{:.3}", r.n, r.operations, r.sequential_ms, r.parallel_ms)?;
            }
        }
        Format::Json => {
            let ops: Vec<_> = b.rows.iter().map(|r| serde_json::json!({ "n": r.n, "operations": r.operations })).collect();
            let doc = serde_json::json!({
                "scaling": { "rows": ops, "doubling_ratios": ratios, "sub_quadratic": b.sub_quadratic() },
                "timings_nondeterministic": b.rows,
            });
            serde_json::to_writer_pretty(&mut *w, &doc)?;
            writeln!(w)?;
        }
        Format::Text => {
            writeln!(w, "operation counts")?;
            writeln!(w, "{:>8} {:>14} {:>10}", "N", "operations", "ratio")?;
            for (i, r) in b.rows.iter().enumerate() {
                let ratio = if i == 0 { "-".to_string() } else { format!("{:.3}", ratios[i - 1]) };
                writeln!(w, "{:>8} {:>14} {:>10}", r.n, r.operations, ratio)?;
            }
            writeln!(
                w,
                "scaling: {} (doubling ratio bound {MAX_DOUBLING_RATIO})",
                if b.sub_quadratic() { "sub-quadratic" } else { "NOT sub-quadratic" }
            )?;
            writeln!(w)?;
            writeln!(w, "timings (wall clock, not deterministic)")?;
            writeln!(w, "{:>8} {:>14} {:>14}", "N", "sequential ms", "parallel ms")?;
            for r in &b.rows {
                writeln!(w, "{:>8} {:>14.3} {:>14.3}", r.n, r.sequential_ms, r.parallel_ms)?;
            }
        }
    }
    Ok(())
}
