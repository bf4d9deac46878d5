//! Grid runs: one CSV row per instance, plus the run configuration and,
//! optionally, the rebuilt ledger.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::Result;
use clap::{Args, ValueEnum};
use serde::{Deserialize, Serialize};

use antimagic::errata::{Fix, Fixes};
use antimagic::io::{self, FORMAT};
use antimagic::ledger::unledgered_fixes;
use antimagic::matrixlab::Corona;
use antimagic::build_ledger;

use crate::expr::{slug, Span};
use crate::targets::{self, fix_name, Built};
use crate::write;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Target {
    La,
    Lat,
    Join,
    SkEmpty,
    DstarEmpty,
    SkK2,
    DstarK2,
}

#[derive(Debug, Clone, Args, Serialize, Deserialize)]
pub struct SweepArgs {
    #[arg(value_enum)]
    pub target: Target,
    /// Ranges are inclusive, `a..b`. Unset ranges take the target's default grid.
    #[arg(long)]
    pub n: Option<Span>,
    #[arg(long)]
    pub k: Option<Span>,
    #[arg(long)]
    pub k1: Option<Span>,
    #[arg(long)]
    pub k2: Option<Span>,
    #[arg(long)]
    pub r: Option<Span>,
    #[arg(long)]
    pub csv: Option<PathBuf>,
    /// Rebuild the ledger into this file; fails if a correction used by the
    /// grid has no entry.
    #[arg(long)]
    pub ledger: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub instance: String,
    pub params: String,
    pub claimed: usize,
    pub achieved: usize,
    pub certified: bool,
    pub meets_claim: bool,
    /// Corrections the construction relied on, `;`-separated.
    pub fixes: String,
    pub elapsed_ms: u64,
}

/// The resolved grid, written next to the CSV.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunConfig {
    pub format: u32,
    pub target: Target,
    pub n: Option<Span>,
    pub k: Option<Span>,
    pub k1: Option<Span>,
    pub k2: Option<Span>,
    pub r: Option<Span>,
    pub points: usize,
}

fn span(s: Option<Span>, lo: u32, hi: u32) -> Span {
    s.unwrap_or(Span { lo, hi })
}

type Job = (String, Box<dyn Fn() -> Result<Built>>);

/// Grid points and how to build each. Double-star grids keep only `k1 <= k2`.
fn plan(a: &SweepArgs) -> (RunConfig, Vec<Job>) {
    let mut cfg = RunConfig { format: FORMAT, target: a.target, n: None, k: None, k1: None, k2: None, r: None, points: 0 };
    let mut jobs: Vec<Job> = Vec::new();
    let fx = Fixes::all();
    match a.target {
        Target::La | Target::Lat => {
            let (n, k) = match a.target {
                Target::La => (span(a.n, 2, 10), span(a.k, 2, 10)),
                _ => (span(a.n, 3, 8), span(a.k, 2, 8)),
            };
            (cfg.n, cfg.k) = (Some(n), Some(k));
            for n in n.iter() {
                for k in k.iter() {
                    let t = a.target;
                    jobs.push((
                        format!("n={n};k={k}"),
                        Box::new(move || if t == Target::La { targets::la(n, k, fx) } else { targets::lat(n, k, fx) }),
                    ));
                }
            }
        }
        Target::Join => {
            let n = span(a.n, 3, 10);
            cfg.n = Some(n);
            for n in n.iter() {
                jobs.push((format!("n={n}"), Box::new(move || targets::join(n, fx))));
            }
        }
        Target::SkEmpty | Target::SkK2 => {
            let (k, r) = match a.target {
                Target::SkEmpty => (span(a.k, 2, 8), span(a.r, 1, 8)),
                _ => (span(a.k, 1, 7), span(a.r, 1, 6)),
            };
            (cfg.k, cfg.r) = (Some(k), Some(r));
            for k in k.iter() {
                for r in r.iter() {
                    let c = match a.target {
                        Target::SkEmpty => Corona::SkEmpty { k, r },
                        _ => Corona::SkK2 { k, r },
                    };
                    jobs.push((format!("k={k};r={r}"), Box::new(move || targets::matrix(c, fx))));
                }
            }
        }
        Target::DstarEmpty | Target::DstarK2 => {
            let (k1, k2, r) = (span(a.k1, 1, 4), span(a.k2, 1, 5), span(a.r, 1, 6));
            (cfg.k1, cfg.k2, cfg.r) = (Some(k1), Some(k2), Some(r));
            for k1 in k1.iter() {
                for k2 in k2.iter().filter(|&k2| k2 >= k1) {
                    for r in r.iter() {
                        let c = match a.target {
                            Target::DstarEmpty => Corona::DstarEmpty { k1, k2, r },
                            _ => Corona::DstarK2 { k1, k2, r },
                        };
                        jobs.push((format!("k1={k1};k2={k2};r={r}"), Box::new(move || targets::matrix(c, fx))));
                    }
                }
            }
        }
    }
    cfg.points = jobs.len();
    (cfg, jobs)
}

/// Runs the grid and returns the rows and the set of corrections used.
pub fn rows(a: &SweepArgs) -> (RunConfig, Vec<SweepRow>, BTreeSet<Fix>) {
    let (cfg, jobs) = plan(a);
    let mut used = BTreeSet::new();
    let mut out = Vec::with_capacity(jobs.len());
    for (params, job) in jobs {
        let t0 = Instant::now();
        let row = match job() {
            Ok(b) => {
                let r = b.labeling.check();
                used.extend(b.fixes.iter().copied());
                SweepRow {
                    instance: b.name,
                    params,
                    claimed: b.claim.colors(),
                    achieved: r.color_count,
                    certified: r.certified(),
                    meets_claim: r.certified() && b.claim.met_by(r.color_count),
                    fixes: b.fixes.iter().map(fix_name).collect::<Vec<_>>().join(";"),
                    elapsed_ms: t0.elapsed().as_millis() as u64,
                }
            }
            Err(e) => SweepRow {
                instance: format!("error: {e}"),
                params,
                claimed: 0,
                achieved: 0,
                certified: false,
                meets_claim: false,
                fixes: String::new(),
                elapsed_ms: t0.elapsed().as_millis() as u64,
            },
        };
        out.push(row);
    }
    (cfg, out, used)
}

pub fn run(out: &Path, a: SweepArgs) -> Result<u8> {
    let (cfg, rows, used) = rows(&a);
    let name = slug(&format!("sweep-{}", serde_json::to_value(a.target)?.as_str().unwrap_or("grid")));
    let csv_path = a.csv.clone().unwrap_or_else(|| out.join(format!("{name}.csv")));
    write(&csv_path, &io::write_csv(&rows)?)?;
    let mut cfg_json = serde_json::to_string_pretty(&cfg)?;
    cfg_json.push('\n');
    write(&csv_path.with_extension("config.json"), &cfg_json)?;

    let bad: Vec<&SweepRow> = rows.iter().filter(|r| !r.meets_claim).collect();
    println!("{} instances, {} certified at the claimed count -> {}", rows.len(), rows.len() - bad.len(), csv_path.display());
    for r in &bad {
        println!("FLAGGED {} [{}]: {} colors, claimed {}", r.instance, r.params, r.achieved, r.claimed);
    }
    let mut code = if bad.is_empty() { 0 } else { 2 };

    if let Some(path) = &a.ledger {
        let ledger = build_ledger()?;
        let missing: Vec<Fix> = unledgered_fixes(&ledger).into_iter().filter(|f| used.contains(f)).collect();
        if !missing.is_empty() {
            let names: Vec<String> = missing.iter().map(fix_name).collect();
            println!("corrections without a ledger entry: {}", names.join(", "));
            code = 2;
        }
        let json = ledger.to_json();
        let changed = std::fs::read_to_string(path).map_or(true, |old| old != json);
        write(path, &json)?;
        println!("ledger {} -> {}", if changed { "updated" } else { "unchanged" }, path.display());
    }
    Ok(code)
}
