//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::Command;
use std::time::Instant;

use nulla_core::gf2::{BitVector, Gf2Matrix};
use nulla_core::graph::{
    canonical_form, complete, enumerate_nonisomorphic, is_4critical, moser_spindle, wheel, wheel_hub, write_graph6,
    Graph,
};
use nulla_core::nulla::{
    certificate_search, degree1_search_fast, nulla_degree, one_in_span, NullaDegree, Schedule, SearchOptions,
};
use nulla_core::pathcover::{
    corollary_obstruction, cover_to_certificate, enumerate_paths2, path_cover_search, prop22_predicates, verify_cover,
    Path2, PathCover,
};
use nulla_core::poly::{prop21_system, verify_certificate, BayerSystem, Prop21Variant};
use nulla_core::Edge;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn nulla(args: &[&str]) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_nulla"))
        .args(args)
        .output()
        .map_err(|e| format!("spawning nulla: {e}"))?;
    if !out.status.success() {
        return Err(format!(
            "nulla {} exited with {}: {}",
            args.join(" "),
            out.status,
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    String::from_utf8(out.stdout).map_err(|e| e.to_string())
}

/// `(n, degree_1, degree_4, four_critical)` per CSV census row.
fn census_csv(text: &str) -> Result<Vec<(usize, usize, usize, usize)>, String> {
    let mut rd = csv::Reader::from_reader(text.as_bytes());
    let headers = rd.headers().map_err(|e| e.to_string())?.clone();
    let col = |name: &str| {
        headers
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| format!("missing column {name}"))
    };
    let (n, d1, d4, total) = (col("n")?, col("degree_1")?, col("degree_4")?, col("four_critical")?);
    let mut rows = Vec::new();
    for rec in rd.records() {
        let rec = rec.map_err(|e| e.to_string())?;
        let get = |i: usize| rec[i].parse::<usize>().map_err(|e| e.to_string());
        rows.push((get(n)?, get(d1)?, get(d4)?, get(total)?));
    }
    Ok(rows)
}

/// All order-`n+1` classes from the order-`n` representatives.
fn next_order(level: &[Graph]) -> Vec<Graph> {
    let mut forms = BTreeSet::new();
    for g in level {
        let k = g.n();
        for mask in 0u32..1 << k {
            let h = g.extended((0..k).filter(|&v| mask >> v & 1 == 1)).unwrap();
            forms.insert(canonical_form(&h).unwrap());
        }
    }
    forms.iter().map(|f| f.to_graph()).collect()
}

fn corpus_file(dir: &Path, graphs: &[Graph], name: &str) -> Result<String, String> {
    let mut text = String::new();
    for g in graphs {
        text.push_str(&write_graph6(g).map_err(|e| e.to_string())?);
        text.push('\n');
    }
    let path = dir.join(name);
    std::fs::write(&path, text).map_err(|e| e.to_string())?;
    Ok(path.to_string_lossy().into_owned())
}

fn criterion1() -> Outcome {
    let rows = census_csv(&nulla(&["census", "--enumerate", "4..7", "--format", "csv"])?)?;
    let expected = vec![(4, 1, 0, 1), (5, 0, 0, 0), (6, 1, 0, 1), (7, 1, 1, 2)];
    ensure(rows == expected, || format!("rows {rows:?}, expected {expected:?}"))?;
    Ok("rows 4-7 (n, N=1, N=4, total) = (4,1,0,1) (5,0,0,0) (6,1,0,1) (7,1,1,2)".into())
}

fn criterion2() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let order7 = enumerate_nonisomorphic(7).map_err(|e| e.to_string())?;
    let order8 = next_order(&order7);
    ensure(order8.len() == 12346, || {
        format!("order-8 corpus has {} graphs", order8.len())
    })?;
    let file = corpus_file(dir.path(), &order8, "graphs8.g6")?;
    let rows = census_csv(&nulla(&["census", "--in", &file, "--format", "csv"])?)?;
    ensure(rows == vec![(8, 2, 3, 5)], || {
        format!("order-8 row {rows:?}, expected (8, 2, 3, 5)")
    })?;
    let order9 = next_order(&order8);
    ensure(order9.len() == 274668, || {
        format!("order-9 corpus has {} graphs", order9.len())
    })?;
    let file = corpus_file(dir.path(), &order9, "graphs9.g6")?;
    let rows = census_csv(&nulla(&["census", "--in", &file, "--format", "csv"])?)?;
    ensure(rows == vec![(9, 5, 16, 21)], || {
        format!("order-9 row {rows:?}, expected (9, 5, 16, 21)")
    })?;
    Ok("row 8 = (2, 3, 5) over all 12346 order-8 graphs; row 9 = (5, 16, 21) over all 274668 order-9 graphs".into())
}

fn criterion3() -> Outcome {
    let k4 = complete(4);
    let r = nulla_degree(&k4, 4, Schedule::Mod3, &SearchOptions::default()).map_err(|e| e.to_string())?;
    ensure(r.degree == Some(NullaDegree::Exact(1)), || {
        format!("degree {:?}", r.degree)
    })?;
    let cert = r.certificate.ok_or("no certificate")?;
    let sum = cert.combination(&BayerSystem::new(&k4)).map_err(|e| e.to_string())?;
    ensure(sum.is_one(), || format!("combination expands to {sum}"))?;
    Ok(format!("degree 1; {} certificate terms expand to 1", cert.size()))
}

fn hub_cover(n: usize) -> PathCover {
    let w = wheel_hub(n);
    (0..n).map(|i| Path2::new(i, w, (i + 1) % n)).collect()
}

fn criterion4() -> Outcome {
    for n in [5, 7, 9, 11] {
        let g = wheel(n).map_err(|e| e.to_string())?;
        ensure(path_cover_search(&g).map_err(|e| e.to_string())?.is_some(), || {
            format!("W{n}: no cover")
        })?;
        let cover = hub_cover(n);
        let check = verify_cover(&g, &cover).map_err(|e| e.to_string())?;
        ensure(check.is_valid(), || {
            format!("W{n}: hub cover fails: {:?}", check.violations())
        })?;
        let cert = cover_to_certificate(&g, &cover).map_err(|e| e.to_string())?;
        ensure(
            verify_certificate(&BayerSystem::new(&g), &cert).map_err(|e| e.to_string())?,
            || format!("W{n}: lifted certificate does not verify"),
        )?;
    }
    for n in [4, 6, 8, 10] {
        let g = wheel(n).map_err(|e| e.to_string())?;
        let r = nulla_degree(&g, 4, Schedule::Mod3, &SearchOptions::default()).map_err(|e| e.to_string())?;
        ensure(r.colorable && r.degree.is_none(), || {
            format!("W{n} not reported 3-colorable")
        })?;
    }
    Ok("W5, W7, W9, W11 covered, hub covers verify and lift; W4..W10 even reported 3-colorable".into())
}

fn criterion5() -> Outcome {
    let m = moser_spindle();
    ensure(path_cover_search(&m).map_err(|e| e.to_string())?.is_none(), || {
        "cover found".into()
    })?;
    let w = corollary_obstruction(&m)
        .map_err(|e| e.to_string())?
        .ok_or("no obstruction")?;
    ensure(w.edge == Edge::new(0, 6), || format!("obstruction edge {}", w.edge))?;
    let r = nulla_degree(&m, 4, Schedule::Mod3, &SearchOptions::default()).map_err(|e| e.to_string())?;
    ensure(r.degree == Some(NullaDegree::Exact(4)), || {
        format!("degree {:?}", r.degree)
    })?;
    Ok("no cover; obstruction edge 0-6; degree 4".into())
}

fn criterion6() -> Outcome {
    let mut classes = 0;
    let mut degree_one = 0;
    for n in 0..=6 {
        for g in enumerate_nonisomorphic(n).map_err(|e| e.to_string())? {
            classes += 1;
            let cover = path_cover_search(&g).map_err(|e| e.to_string())?.is_some();
            let full = certificate_search(&g, 1, &SearchOptions::default())
                .map_err(|e| e.to_string())?
                .is_some();
            let fast = degree1_search_fast(&g).map_err(|e| e.to_string())?.is_some();
            ensure(cover == full && full == fast, || {
                format!(
                    "{}: cover {cover}, certificate {full}, fast {fast}",
                    write_graph6(&g).unwrap()
                )
            })?;
            degree_one += full as usize;
        }
    }
    Ok(format!(
        "{classes} classes with n <= 6, {degree_one} with degree one, 0 disagreements"
    ))
}

fn criterion7() -> Outcome {
    let mut graphs = 0;
    for n in 1..=5usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        for mask in 0u32..1 << pairs.len() {
            let g = Graph::from_edges(
                n,
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &e)| e),
            )
            .map_err(|e| e.to_string())?;
            graphs += 1;
            let span = |v| {
                one_in_span(&prop21_system(&g, v), 1 << 30)
                    .map(|s| s.is_some())
                    .map_err(|e| e.to_string())
            };
            let a = span(Prop21Variant::OriginalTimesMonomials)?;
            let b = span(Prop21Variant::Set3)?;
            let c = span(Prop21Variant::Set4)?;
            ensure(a == b && b == c, || {
                format!("{}: variant (2) {a}, set3 {b}, set4 {c}", write_graph6(&g).unwrap())
            })?;
        }
    }
    Ok(format!("{graphs} labeled graphs with n <= 5, 0 disagreements"))
}

fn criterion8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x2022);
    let mut agree_true = 0;
    for _ in 0..10_000 {
        let n = rng.gen_range(3..=10);
        let p = rng.gen_range(0.2..0.9);
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let g = Graph::from_edges(n, pairs.into_iter().filter(|_| rng.gen_bool(p))).map_err(|e| e.to_string())?;
        let keep = rng.gen_range(0.05..0.95);
        let paths: Vec<Path2> = enumerate_paths2(&g)
            .into_iter()
            .filter(|_| rng.gen_bool(keep))
            .collect();
        let (p1, p2, p3) = prop22_predicates(&g, &paths);
        ensure(p1 == p2 && p2 == p3, || {
            format!("({p1}, {p2}, {p3}) on {}", write_graph6(&g).unwrap())
        })?;
        agree_true += p1 as usize;
    }
    Ok(format!(
        "10000 random instances agree ({agree_true} with all three true)"
    ))
}

fn criterion9() -> Outcome {
    let mut checked = Vec::new();
    for n in 4..=7 {
        for g in enumerate_nonisomorphic(n).map_err(|e| e.to_string())? {
            if !is_4critical(&g).map_err(|e| e.to_string())? {
                continue;
            }
            let opts = SearchOptions::default();
            if certificate_search(&g, 1, &opts).map_err(|e| e.to_string())?.is_some() {
                continue;
            }
            for d in [2, 3] {
                let found = certificate_search(&g, d, &opts).map_err(|e| e.to_string())?.is_some();
                ensure(!found, || {
                    format!("{} has a degree-{d} certificate", write_graph6(&g).unwrap())
                })?;
            }
            checked.push(write_graph6(&g).unwrap());
        }
    }
    ensure(!checked.is_empty(), || {
        "no 4-critical graph without degree one found".into()
    })?;
    Ok(format!(
        "degrees 2 and 3 fail on {} ({})",
        checked.len(),
        checked.join(", ")
    ))
}

/// Exhaustive reference over column subsets.
fn brute_rank_and_solve(a: &[Vec<bool>], b: &[bool], cols: usize) -> (usize, Option<Vec<bool>>) {
    let rows = a.len();
    let mut span = BTreeSet::new();
    let mut sol = None;
    for x in 0u32..1 << cols {
        let v: Vec<bool> = (0..rows)
            .map(|r| {
                (0..cols)
                    .filter(|&c| x >> c & 1 == 1)
                    .fold(false, |acc, c| acc ^ a[r][c])
            })
            .collect();
        if sol.is_none() && v == b {
            sol = Some((0..cols).map(|c| x >> c & 1 == 1).collect());
        }
        span.insert(v);
    }
    (span.len().trailing_zeros() as usize, sol)
}

fn criterion10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut feasible = 0;
    for _ in 0..1000 {
        let rows = rng.gen_range(1..=10);
        let cols = rng.gen_range(1..=12);
        let density = rng.gen_range(0.1..0.9);
        let a: Vec<Vec<bool>> = (0..rows)
            .map(|_| (0..cols).map(|_| rng.gen_bool(density)).collect())
            .collect();
        let b: Vec<bool> = (0..rows).map(|_| rng.gen_bool(0.5)).collect();
        let mut m = Gf2Matrix::zeros(rows, cols).map_err(|e| e.to_string())?;
        for (r, row) in a.iter().enumerate() {
            for (c, &bit) in row.iter().enumerate() {
                m.set(r, c, bit);
            }
        }
        let (rank, sol) = brute_rank_and_solve(&a, &b, cols);
        ensure(m.rank() == rank, || format!("rank {} vs brute force {rank}", m.rank()))?;
        let res = m.solve(&BitVector::from_bools(&b)).map_err(|e| e.to_string())?;
        ensure(res.feasible == sol.is_some(), || {
            format!("feasible {} vs brute force", res.feasible)
        })?;
        ensure(res.rank == rank, || "solve rank differs".into())?;
        if let Some(x) = res.solution {
            let ax = m.mul_vec(&x).map_err(|e| e.to_string())?;
            ensure(ax == BitVector::from_bools(&b), || {
                "returned solution does not satisfy A x = b".into()
            })?;
            feasible += 1;
        }
    }
    Ok(format!(
        "1000 random matrices up to 10x12 ({feasible} feasible), rank and solvability exact"
    ))
}

fn criterion11() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let graphs: Vec<Graph> = (5..=7).flat_map(|n| enumerate_nonisomorphic(n).unwrap()).collect();
    let file = corpus_file(dir.path(), &graphs, "mixed.g6")?;
    let commands: Vec<Vec<&str>> = vec![
        vec!["census", "--enumerate", "4..7", "--format", "csv"],
        vec!["census", "--enumerate", "4..7", "--format", "json"],
        vec!["census", "--in", &file, "--format", "json", "--workers", "3"],
        vec!["analyze", "--gen", "moser-spindle", "--format", "json"],
        vec!["analyze", "--gen", "wheel:9", "--format", "csv"],
        vec![
            "analyze",
            "--enumerate",
            "4..4",
            "--format",
            "json",
            "--schedule",
            "all",
        ],
        vec!["hajos", "C~", "0,1", "gen:k4", "2,3", "--format", "json"],
    ];
    for args in &commands {
        let a = nulla(args)?;
        let b = nulla(args)?;
        ensure(a == b, || format!("nulla {} differs between runs", args.join(" ")))?;
    }
    Ok(format!("{} commands byte-identical across two runs", commands.len()))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("census --enumerate 4..7 counts for orders 4-7", criterion1),
        ("census counts for orders 8 and 9 from graph6 corpora", criterion2),
        ("K4 has degree 1 with a verified certificate", criterion3),
        ("odd wheels covered, even wheels 3-colorable", criterion4),
        ("Moser spindle: no cover, obstruction edge 0-6, degree 4", criterion5),
        ("cover / degree-one / reduced-family equivalence for n <= 6", criterion6),
        ("equivalent degree-one families agree for n <= 5", criterion7),
        ("parity predicates agree on 10^4 random path sets", criterion8),
        ("degrees 2 and 3 fail whenever degree 1 fails (n <= 7)", criterion9),
        ("GF(2) rank/solve agree with brute force", criterion10),
        ("byte-identical CSV/JSON across runs", criterion11),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {:>2}: {name} [{detail}] ({secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {:>2}: {name} [{why}] ({secs:.1}s)", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
