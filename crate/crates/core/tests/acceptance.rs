//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Two criteria are red for reasons that lie outside the code (see README).
//! For those the run checks that the failure is exactly the documented one,
//! so the target fails if they turn green or fail differently.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use antimagic::construct_la::{claimed_color_count_la, label_firecracker};
use antimagic::construct_lat::{join_transfer, total_label_f2k, total_label_firecracker, total_label_fn1};
use antimagic::errata::Fix;
use antimagic::graphs::{make_complete_two, make_firecracker, make_path, make_star};
use antimagic::ledger::{unledgered_fixes, EntryKind};
use antimagic::matrixlab::{
    appendix_fixture, assemble_dstar_empty, assemble_dstar_k2, assemble_sk_k2, Appendix, Corona, LabelingMatrix,
};
use antimagic::oracle::{exact_chi_la, exact_chi_lat, OracleResult, Outcome, SearchBudget};
use antimagic::verify::{clique_lower_bound, leaf_lower_bound};
use antimagic::{build_ledger, AnyLabeling, Graph, Report, VertexRef};

type Verdict = Result<String, String>;

fn timed(limit: Duration, f: impl FnOnce() -> Verdict) -> Verdict {
    let t0 = Instant::now();
    let v = f();
    let dt = t0.elapsed();
    let ms = dt.as_millis();
    match v {
        Ok(d) if dt > limit => Err(format!("{d}; took {ms} ms, budget {} ms", limit.as_millis())),
        Ok(d) => Ok(format!("{d} ({ms} ms)")),
        Err(d) => Err(d),
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn la_grid() -> Result<Vec<(u32, u32, Graph, Report)>, String> {
    let mut out = Vec::new();
    for n in 2..=10 {
        for k in 2..=10 {
            let l = label_firecracker(n, k).map_err(|e| format!("F_{{{n},{k}}}: {e}"))?;
            let r = l.check();
            out.push((n, k, l.graph, r));
        }
    }
    Ok(out)
}

fn criterion_1() -> Verdict {
    timed(Duration::from_secs(5), || {
        let grid = la_grid()?;
        for (n, k, g, r) in &grid {
            let want = claimed_color_count_la(*n, *k).map_err(|e| e.to_string())? as usize;
            ensure(r.certified() && r.color_count == want, || format!("F_{{{n},{k}}}: {}", r.summary(g)))?;
        }
        Ok(format!("{} instances certified at nk-n+1", grid.len()))
    })
}

fn weight_at(g: &Graph, r: &Report, v: VertexRef) -> Result<u64, String> {
    g.vertex(&v).map(|i| r.weights[i]).ok_or_else(|| format!("no vertex {v}"))
}

fn criterion_2() -> Verdict {
    let l = label_firecracker(3, 2).map_err(|e| e.to_string())?;
    ensure(l.check().color_count == 4, || "F_{3,2} is not 4-colored".into())?;
    let l = label_firecracker(3, 3).map_err(|e| e.to_string())?;
    let r = l.check();
    for i in 1..=3 {
        let w = weight_at(&l.graph, &r, VertexRef::SpineCenter(i))?;
        ensure(w == 21, || format!("F_{{3,3}}: w(u{i}) = {w}"))?;
    }
    let (a, b) = (weight_at(&l.graph, &r, VertexRef::Leaf(1, 1))?, weight_at(&l.graph, &r, VertexRef::Leaf(2, 1))?);
    ensure((a, b) == (5, 9), || format!("F_{{3,3}}: w(v1,1) = {a}, w(v2,1) = {b}"))?;
    let l = label_firecracker(2, 3).map_err(|e| e.to_string())?;
    let w = weight_at(&l.graph, &l.check(), VertexRef::SpineCenter(1))?;
    ensure(w == 13, || format!("F_{{2,3}}: w(u1) = {w}"))?;
    Ok("F_{3,2}: 4 colors; F_{3,3}: w(u_i) = 21, w(v1,1) = 5, w(v2,1) = 9; F_{2,3}: w(u1) = 13".into())
}

fn criterion_3() -> Verdict {
    timed(Duration::from_secs(5), || {
        for n in 3..=20u32 {
            let r = total_label_fn1(n).map_err(|e| e.to_string())?.check();
            let want = vec![5 * n as u64 - 1, 5 * n as u64];
            ensure(r.certified() && r.colors() == want, || format!("F_{{{n},1}}: classes {:?}", r.colors()))?;
        }
        for k in 3..=12u64 {
            let r = total_label_f2k(k as u32).map_err(|e| e.to_string())?.check();
            let mut want = if k % 2 == 1 {
                vec![4 * k + 5, 4 * k + 7, (2 * k * k + 7 * k + 5) / 2]
            } else {
                vec![4 * k + 4, 4 * k + 5, (2 * k * k + 7 * k + 8) / 2]
            };
            want.sort_unstable();
            ensure(r.certified() && r.colors() == want, || format!("F_{{2,{k}}}: classes {:?}", r.colors()))?;
        }
        for n in 3..=8 {
            for k in 2..=8 {
                let r = total_label_firecracker(n, k).map_err(|e| e.to_string())?.check();
                ensure(r.certified() && r.color_count <= 3, || format!("F_{{{n},{k}}}: {} colors", r.color_count))?;
            }
        }
        Ok("F_{n,1} n=3..20 at {5n-1,5n}; F_{2,k} k=3..12 at the printed classes; F_{n,k} 42 instances at <= 3".into())
    })
}

fn criterion_4() -> Verdict {
    for n in 3..=10 {
        let e = join_transfer(&total_label_fn1(n).map_err(|e| e.to_string())?);
        let r = e.check();
        ensure(r.certified() && r.color_count == 3, || format!("F_{{{n},1}} v K_1: {}", r.summary(&e.graph)))?;
    }
    Ok("F_{n,1} v K_1 certified at 3 colors for n = 3..10".into())
}

fn corona_grid() -> Vec<Corona> {
    let mut v = Vec::new();
    for k in 2..=8 {
        for r in 1..=8 {
            v.push(Corona::SkEmpty { k, r });
        }
    }
    for k1 in 1..=4 {
        for k2 in k1..=5 {
            for r in 1..=6 {
                v.push(Corona::DstarEmpty { k1, k2, r });
            }
        }
    }
    for k in 1..=7 {
        for r in 1..=6 {
            v.push(Corona::SkK2 { k, r });
        }
    }
    for k1 in 1..=4 {
        for k2 in k1..=5 {
            for r in 1..=6 {
                v.push(Corona::DstarK2 { k1, k2, r });
            }
        }
    }
    v
}

fn criterion_5() -> Verdict {
    timed(Duration::from_secs(10), || {
        let grid = corona_grid();
        for c in &grid {
            let (l, _) = c.traced(antimagic::errata::Fixes::all()).map_err(|e| format!("{c}: {e}"))?;
            let r = l.check();
            ensure(r.certified() && r.color_count == c.claimed_colors(), || format!("{c}: {}", r.summary(&l.graph)))?;
        }
        Ok(format!("{} edge-corona instances certified at 3/4/4/5", grid.len()))
    })
}

/// Distinct row sums per printed class, in the printed order.
fn class_sums(id: Appendix, m: &LabelingMatrix) -> Vec<BTreeSet<u64>> {
    let sums = m.row_sums();
    let in_class = |v: &VertexRef, class: usize| -> bool {
        use VertexRef::*;
        match (id, class, v) {
            (Appendix::B, 0, HubCenter(0)) => true,
            (Appendix::B, 1, HubLeaf(_)) => true,
            (Appendix::B, 2, CopyVertex(_, _, 1)) => true,
            (Appendix::B, 3, CopyVertex(_, _, 2)) => true,
            (Appendix::B, _, _) => false,
            (_, 0, HubCenter(1)) | (_, 1, HubCenter(2)) | (_, 2, HubLeaf(_)) => true,
            (Appendix::A, 3, CopyVertex(..)) => true,
            (Appendix::C, 3, CopyVertex(_, _, 1)) | (Appendix::C, 4, CopyVertex(_, _, 2)) => true,
            _ => false,
        }
    };
    (0..id.printed_row_sums().len())
        .map(|c| m.order().iter().zip(&sums).filter(|(v, _)| in_class(v, c)).map(|(_, &s)| s).collect())
        .collect()
}

fn appendix_check(id: Appendix, built: &LabelingMatrix) -> Result<(), String> {
    let fixture = appendix_fixture(id);
    let mut errors = Vec::new();
    let diff = built.entries().zip(fixture.entries()).filter(|(a, b)| a != b).count();
    if diff > 0 {
        errors.push(format!("{diff} entries differ from the printed matrix"));
    }
    let got = class_sums(id, built);
    let want: Vec<BTreeSet<u64>> = id.printed_row_sums().iter().map(|&s| BTreeSet::from([s])).collect();
    if got != want {
        errors.push(format!("class row sums {got:?}, printed {:?}", id.printed_row_sums()));
    }
    ensure(errors.is_empty(), || format!("{}: {}", id.corona(), errors.join(", ")))
}

fn criterion_6() -> Verdict {
    let built = [
        (Appendix::A, assemble_dstar_empty(4, 5, 4)),
        (Appendix::B, assemble_sk_k2(7, 5)),
        (Appendix::C, assemble_dstar_k2(3, 4, 6)),
    ];
    let mut errors = Vec::new();
    for (id, m) in built {
        let m = m.map_err(|e| e.to_string())?;
        if let Err(e) = appendix_check(id, &m) {
            errors.push(e);
        }
    }
    if errors.is_empty() {
        Ok("A, B and C reproduced entry for entry with the printed row sums".into())
    } else {
        Err(errors.join("; "))
    }
}

/// The documented reason criterion 6 is red: A and B are exact; for C the
/// printed value 345 is ruled out by the handshake identity, and the printed
/// matrix has two v-blocks in swapped order.
fn criterion_6_reason() -> Result<String, String> {
    appendix_check(Appendix::A, &assemble_dstar_empty(4, 5, 4).map_err(|e| e.to_string())?)?;
    appendix_check(Appendix::B, &assemble_sk_k2(7, 5).map_err(|e| e.to_string())?)?;
    let built = assemble_dstar_k2(3, 4, 6).map_err(|e| e.to_string())?;
    let fixture = appendix_fixture(Appendix::C);
    // handshake: 3316 + 5088 + 7·1676 + 48x + 48·506 = 2·(1 + … + 248)
    let m = built.entries().count() as u64;
    let (copies, leaves) = (48u64, 7u64);
    let rest = 3316 + 5088 + leaves * 1676 + copies * 506;
    let x = (m * (m + 1)).checked_sub(rest).filter(|d| d % copies == 0).map(|d| d / copies);
    ensure(m == 248 && x == Some(361), || format!("handshake gives x = {x:?} for m = {m}"))?;
    let got = class_sums(Appendix::C, &built);
    let want: Vec<BTreeSet<u64>> = [3316, 5088, 1676, 361, 506].iter().map(|&s| BTreeSet::from([s])).collect();
    ensure(got == want, || format!("construction row sums {got:?}"))?;
    let fixture_u1 = &class_sums(Appendix::C, &fixture)[3];
    ensure(*fixture_u1 == BTreeSet::from([345, 361, 377]), || format!("printed matrix u^j1 rows {fixture_u1:?}"))?;
    let diff = built.entries().zip(fixture.entries()).filter(|(a, b)| a != b).count();
    ensure(diff == 16, || format!("{diff} differing entries, expected the 16 of the two swapped blocks"))?;
    let ledger = build_ledger().map_err(|e| e.to_string())?;
    for id in ["appendix-c-block-order", "appendix-c-row-sum"] {
        let e = ledger.entries.iter().find(|e| e.id == id).ok_or_else(|| format!("ledger lacks {id}"))?;
        ensure(e.kind == EntryKind::Conflict && e.witness.certified, || format!("{id} not a certified conflict"))?;
    }
    Ok("printed ω(u^{j1}) = 345 contradicts the handshake identity, which forces 361 (the construction's value); \
        the printed matrix swaps the v-blocks of copies 1 and 2 (16 entries) and shows 345/361/377 on those rows; \
        A and B are exact; both conflicts are in errata.json"
        .into())
}

fn oracle_check(r: &OracleResult, want: usize, what: &str) -> Result<(), String> {
    ensure(r.value() == Some(want), || format!("{what}: {:?}, expected {want}", r.outcome))?;
    let w: &AnyLabeling = r.witness.as_ref().ok_or_else(|| format!("{what}: no witness"))?;
    let rep = w.check();
    ensure(rep.certified() && rep.color_count == want, || format!("{what}: witness {}", rep.summary(w.graph())))?;
    ensure(r.elapsed_ms < 60_000, || format!("{what}: {} ms", r.elapsed_ms))
}

struct OracleRun {
    failures: Vec<String>,
    s1: Outcome,
}

fn run_oracle() -> Result<OracleRun, String> {
    let b = SearchBudget::default();
    let la = |g: &Graph| exact_chi_la(g, b).map_err(|e| e.to_string());
    let lat = |g: &Graph| exact_chi_lat(g, b).map_err(|e| e.to_string());
    let mut failures = Vec::new();
    let mut record = |res: Result<(), String>| {
        if let Err(e) = res {
            failures.push(e);
        }
    };
    record(oracle_check(&la(&make_path(6).unwrap())?, 3, "chi_la(P_6)"));
    record(oracle_check(&la(&make_firecracker(3, 2).unwrap())?, 4, "chi_la(F_{3,2})"));
    let mut s1 = Outcome::Exhausted;
    for k in 1..=4u32 {
        let r = la(&make_star(k).unwrap())?;
        if k == 1 {
            s1 = r.outcome;
        }
        record(oracle_check(&r, k as usize + 1, &format!("chi_la(S_{k})")));
    }
    record(oracle_check(&lat(&make_firecracker(3, 1).unwrap())?, 2, "chi_lat(F_{3,1})"));
    record(oracle_check(&lat(&make_complete_two())?, 2, "chi_lat(K_2)"));
    record(oracle_check(&lat(&make_path(4).unwrap())?, 3, "chi_lat(P_4)"));
    Ok(OracleRun { failures, s1 })
}

fn criterion_7(run: &OracleRun) -> Verdict {
    if run.failures.is_empty() {
        Ok("all ten oracle values match with certified witnesses".into())
    } else {
        Err(run.failures.join("; "))
    }
}

/// The documented reason criterion 7 is red: only `S_1` fails, because `S_1`
/// is `K_2`, which has no local antimagic labeling at all.
fn criterion_7_reason(run: &OracleRun) -> Result<String, String> {
    let s1 = make_star(1).unwrap();
    ensure(s1.order() == 2 && s1.size() == 1, || "S_1 is not K_2".into())?;
    ensure(run.s1 == Outcome::Infeasible, || format!("S_1 gave {:?}", run.s1))?;
    ensure(run.failures.len() == 1 && run.failures[0].starts_with("chi_la(S_1)"), || run.failures.join("; "))?;
    Ok("chi_la(S_1) is infeasible, not 2: S_1 = K_2 and both ends carry the one label; \
        the other nine values match with certified witnesses"
        .into())
}

fn criterion_8() -> Verdict {
    let mut count = 0;
    for (n, k, g, r) in la_grid()? {
        let leaf = leaf_lower_bound(&g).ok_or_else(|| format!("F_{{{n},{k}}} is not a tree"))?;
        ensure(r.color_count == leaf, || format!("F_{{{n},{k}}}: {} colors, leaf bound {leaf}", r.color_count))?;
        ensure(r.color_count >= clique_lower_bound(&g), || format!("F_{{{n},{k}}}: below clique bound"))?;
        count += 1;
    }
    for c in corona_grid() {
        let l = c.labeling().map_err(|e| e.to_string())?;
        let (r, q) = (l.check(), clique_lower_bound(&l.graph));
        ensure(r.color_count >= q, || format!("{c}: {} colors < clique bound {q}", r.color_count))?;
        count += 1;
    }
    for n in 3..=10 {
        let t = total_label_fn1(n).map_err(|e| e.to_string())?;
        let e = join_transfer(&t);
        let (r, q) = (e.check(), clique_lower_bound(&e.graph));
        ensure(r.color_count >= q, || format!("F_{{{n},1}} v K_1: below clique bound {q}"))?;
        count += 1;
    }
    Ok(format!("{count} edge-labeled instances respect their bounds; leaf bound tight on all 81 firecrackers"))
}

fn criterion_9() -> Verdict {
    let committed = include_str!("../../../errata.json");
    let ledger = build_ledger().map_err(|e| e.to_string())?;
    ensure(ledger.to_json() == committed, || "rebuilt ledger differs from errata.json".into())?;
    let missing = unledgered_fixes(&ledger);
    ensure(missing.is_empty(), || format!("corrections without an entry: {missing:?}"))?;
    for e in &ledger.entries {
        ensure(e.witness.certified && e.witness.report.starts_with("certified"), || format!("{}: {}", e.id, e.witness.report))?;
    }
    let toggles = ledger.entries.iter().filter(|e| e.fix.is_some()).count();
    ensure(toggles == Fix::ALL.len(), || format!("{toggles} toggle entries"))?;
    Ok(format!("{} entries ({toggles} corrections), rebuilt byte-identically, all witnesses certified", ledger.entries.len()))
}

fn main() -> ExitCode {
    // `cargo test` passes harness flags such as `--nocapture`; only a name filter matters.
    if std::env::args().skip(1).any(|a| a == "--list") {
        println!("acceptance: test");
        return ExitCode::SUCCESS;
    }
    let oracle = run_oracle();
    let mut ok = true;
    let mut line = |n: usize, v: Verdict, known: Option<Result<String, String>>| match (v, known) {
        (Ok(d), None) => println!("criterion {n}: PASS  {d}"),
        (Err(d), None) => {
            println!("criterion {n}: FAIL  {d}");
            ok = false;
        }
        (Err(d), Some(Ok(why))) => {
            println!("criterion {n}: FAIL  {d}");
            println!("             documented: {why}");
        }
        (Err(d), Some(Err(other))) => {
            println!("criterion {n}: FAIL  {d}");
            println!("             NOT the documented failure: {other}");
            ok = false;
        }
        (Ok(d), Some(_)) => {
            println!("criterion {n}: PASS  {d}");
            println!("             expected red; the documentation is out of date");
            ok = false;
        }
    };
    line(1, criterion_1(), None);
    line(2, criterion_2(), None);
    line(3, criterion_3(), None);
    line(4, criterion_4(), None);
    line(5, criterion_5(), None);
    line(6, criterion_6(), Some(criterion_6_reason()));
    match &oracle {
        Ok(run) => line(7, criterion_7(run), Some(criterion_7_reason(run))),
        Err(e) => line(7, Err(e.clone()), None),
    }
    line(8, criterion_8(), None);
    line(9, criterion_9(), None);
    if ok {
        println!("acceptance: all criteria green except the two documented reds");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: unexpected result");
        ExitCode::FAILURE
    }
}
