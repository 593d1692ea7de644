//! Acceptance suite. Prints one PASS/FAIL line per criterion.
//!
//! A criterion listed in `UNATTAINABLE` is still run as stated and still
//! prints FAIL when it fails; it only stops that failure from setting the exit
//! status. Any other failure, or an unattainable criterion that unexpectedly
//! passes, exits non-zero.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use qramsey::bounds::{dependent_set_tail, hypergeometric_tail, lambda_star};
use qramsey::constructions::{construct_chappell_gimbel, sample_gnp_half, sample_weighted, weighted_params};
use qramsey::exact::{exact_fixed, verify_no_homogeneous_fixed, verify_no_homogeneous_variable, ExactConfig, ThresholdFn};
use qramsey::finders::{fixed_pipeline, skew_local_search, skew_stable_search, thin_sampled};
use qramsey::rng;
use qramsey::{decode_graph6, encode_graph6, Graph, Side};
use rand::seq::index;
use rand::Rng;
use rayon::prelude::*;

type Check = std::result::Result<String, String>;

/// Criteria whose statement cannot hold for any implementation, with the
/// reason.
const UNATTAINABLE: &[(u32, &str)] = &[(
    8,
    "|V| = z floor((1 - 1/(2z)) k) <= zk - k/2 < z(k-1) whenever k > 2z",
)];

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit_secs: u64) -> std::result::Result<(), String> {
    ensure(elapsed.as_secs_f64() < limit_secs as f64, || {
        format!("took {:.1}s, limit {limit_secs}s", elapsed.as_secs_f64())
    })
}

fn binom2(m: usize) -> f64 {
    m as f64 * (m as f64 - 1.0) / 2.0
}

/// `|e - C(m,2)/2| - nu sqrt(m^3 ln m)`, written out independently of the crate.
fn skew_oracle(edges: usize, m: usize, nu: f64) -> f64 {
    if m < 2 {
        return 0.0;
    }
    let mf = m as f64;
    (edges as f64 - 0.5 * binom2(m)).abs() - nu * (mf * mf * mf * mf.ln()).sqrt()
}

fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.order();
    (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect()
}

fn edges_within(adj: &[Vec<bool>], s: &[usize]) -> usize {
    let mut e = 0;
    for (i, &u) in s.iter().enumerate() {
        for &v in &s[i + 1..] {
            e += adj[u][v] as usize;
        }
    }
    e
}

fn min_side_degree(adj: &[Vec<bool>], s: &[usize], side: Side) -> usize {
    s.iter()
        .map(|&u| {
            let d = s.iter().filter(|&&v| v != u && adj[u][v]).count();
            match side {
                Side::Graph => d,
                Side::Complement => s.len() - 1 - d,
            }
        })
        .min()
        .unwrap_or(0)
}

fn criterion_1() -> Check {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let start = Instant::now();
    let mut seen = Vec::new();
    pool.install(|| -> std::result::Result<(), String> {
        for k in 2..=5 {
            let r = exact_fixed(1, k, ExactConfig::default()).map_err(|e| e.to_string())?;
            ensure(r.value == k, || format!("exact_fixed(1,{k}) = {}", r.value))?;
            seen.push(format!("(1,{k})={}", r.value));
        }
        let r = exact_fixed(2, 6, ExactConfig::default()).map_err(|e| e.to_string())?;
        ensure(r.value == 8, || format!("exact_fixed(2,6) = {}", r.value))?;
        let largest = r.graphs_enumerated.values().copied().max().unwrap_or(0);
        ensure(largest <= 12346, || format!("enumerated {largest} classes at one order"))?;
        seen.push(format!("(2,6)={}", r.value));
        Ok(())
    })?;
    let elapsed = start.elapsed();
    within(elapsed, 60)?;
    Ok(format!("{} in {:.2}s single-threaded", seen.join(" "), elapsed.as_secs_f64()))
}

fn criterion_2() -> Check {
    let start = Instant::now();
    let mut seen = Vec::new();
    for (k, t) in [(5, 1), (6, 2), (7, 2), (9, 2)] {
        let g = construct_chappell_gimbel(k, t).map_err(|e| e.to_string())?;
        ensure(g.order() == k + 2 * t - 3, || format!("CG({k},{t}) has order {}", g.order()))?;
        let cert = verify_no_homogeneous_fixed(&g, k, t, u64::MAX).map_err(|e| e.to_string())?;
        ensure(cert.verified, || format!("CG({k},{t}) has a {t}-homogeneous {k}-set: {:?}", cert.witness))?;
        seen.push(format!("CG({k},{t}) n={} subsets={}", g.order(), cert.subsets_checked));
    }
    within(start.elapsed(), 10)?;
    Ok(seen.join(", "))
}

fn criterion_3() -> Check {
    let start = Instant::now();
    ensure(lambda_star(0.5).abs() <= 1e-14, || format!("L(1/2) = {}", lambda_star(0.5)))?;
    for x in [0.0, 1.0] {
        let v = lambda_star(x);
        ensure((v - std::f64::consts::LN_2).abs() <= 1e-14, || format!("L({x}) = {v}"))?;
    }
    let steps = 5000;
    for i in 0..=steps {
        let eps = i as f64 * 1e-4;
        let x = 0.5 - eps;
        let gap = 0.5 - x;
        ensure(lambda_star(x) >= 2.0 * gap * gap, || format!("L(1/2 - {eps}) < 2 eps^2"))?;
    }
    for i in 0..steps {
        let (a, b) = (i as f64 * 1e-4, (i + 1) as f64 * 1e-4);
        ensure(lambda_star(a) > lambda_star(b), || format!("not decreasing on [{a}, {b}]"))?;
        let (c, d) = (0.5 + a, 0.5 + b);
        ensure(lambda_star(c) < lambda_star(d), || format!("not increasing on [{c}, {d}]"))?;
    }
    within(start.elapsed(), 1)?;
    Ok(format!("{} grid points, {:.3}s", steps + 1, start.elapsed().as_secs_f64()))
}

fn criterion_4() -> Check {
    let start = Instant::now();
    // All 8 labelled graphs on 3 vertices, one bit per pair.
    let pairs = [(0, 1), (0, 2), (1, 2)];
    let independent = (0u32..8)
        .filter(|&mask| {
            let mut deg = [0; 3];
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    deg[u] += 1;
                    deg[v] += 1;
                }
            }
            deg.iter().all(|&d| d == 0)
        })
        .count();
    let brute = independent as f64 / 8.0;
    let bound = dependent_set_tail(0, 3).map_err(|e| e.to_string())?;
    ensure(bound == brute && brute == 0.125, || format!("tail {bound} vs brute force {brute}"))?;

    let draws = 100_000u64;
    let mut cells = Vec::new();
    for &(n, b, a) in &[(20u64, 10u64, 10u64), (40, 10, 20), (60, 30, 20), (100, 30, 50), (200, 50, 80)] {
        let mean = (a * b) as f64 / n as f64;
        for frac in [0.1, 0.25, 0.5, 0.8] {
            cells.push((n, b, a, (frac * mean).max(0.5)));
        }
    }
    assert_eq!(cells.len(), 20);
    let worst = cells
        .par_iter()
        .enumerate()
        .map(|(c, &(n, b, a, d))| -> std::result::Result<f64, String> {
            let bound = hypergeometric_tail(n, b, a, d).map_err(|e| e.to_string())?;
            let cut = (a * b) as f64 / n as f64 - d;
            let mut stream = rng::stream(4, c as u64);
            let mut hits = 0u64;
            for _ in 0..draws {
                let marked = index::sample(&mut stream, n as usize, b as usize)
                    .iter()
                    .filter(|&i| (i as u64) < a)
                    .count();
                hits += (marked as f64 <= cut) as u64;
            }
            let freq = hits as f64 / draws as f64;
            let sigma = (bound * (1.0 - bound) / draws as f64).sqrt();
            ensure(freq <= bound + 3.0 * sigma, || {
                format!("cell N={n} b={b} a={a} d={d}: frequency {freq} > bound {bound} + 3 sigma")
            })?;
            Ok(freq - bound)
        })
        .collect::<std::result::Result<Vec<f64>, String>>()?
        .into_iter()
        .fold(f64::NEG_INFINITY, f64::max);
    within(start.elapsed(), 30)?;
    Ok(format!("tail(0,3) = 1/8; 20 cells x {draws} draws, max(freq - bound) = {worst:.4}"))
}

fn criterion_5() -> Check {
    let start = Instant::now();
    let mut summary = Vec::new();
    for nu in [0.0, 0.1, 0.5] {
        let results: Vec<std::result::Result<bool, String>> = (0..100u64)
            .into_par_iter()
            .map(|i| {
                let n = 8 + (i % 5) as usize;
                let g = sample_gnp_half(n, 500 + i);
                let adj = adjacency(&g);
                let mut best = 0.0f64;
                for mask in 0u32..1 << n {
                    let s: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                    best = best.max(skew_oracle(edges_within(&adj, &s), s.len(), nu));
                }
                let out = skew_local_search(&g, nu, i, 200).map_err(|e| e.to_string())?;
                let s = out.set.members().to_vec();
                let m = s.len();
                let e = edges_within(&adj, &s);
                let value = skew_oracle(e, m, nu);
                ensure(value <= best + 1e-9, || format!("graph {i}: value {value} above the maximum {best}"))?;
                if m >= 2 {
                    let side = if e as f64 >= 0.5 * binom2(m) { Side::Graph } else { Side::Complement };
                    let bound = 0.5 * (m as f64 - 1.0) + nu * (m as f64 * (m as f64).ln()).sqrt();
                    for &v in &s {
                        let rest: Vec<usize> = s.iter().copied().filter(|&u| u != v).collect();
                        let removed = skew_oracle(edges_within(&adj, &rest), m - 1, nu);
                        ensure(removed <= value + 1e-12, || format!("graph {i}: removing {v} improves"))?;
                        let d = s.iter().filter(|&&u| u != v && adj[v][u]).count();
                        let side_degree = if side == Side::Graph { d } else { m - 1 - d };
                        ensure(side_degree as f64 >= bound, || {
                            format!("graph {i}, nu {nu}: vertex {v} has degree {side_degree} < {bound}")
                        })?;
                    }
                    if let Ok((stable, _)) = skew_stable_search(&g, nu, i, 200) {
                        ensure(stable == out.set, || format!("graph {i}: stable search disagrees"))?;
                    }
                }
                Ok((value - best).abs() <= 1e-9)
            })
            .collect();
        let mut attained = 0;
        for r in results {
            attained += r? as usize;
        }
        ensure(attained >= 95, || format!("nu = {nu}: maximum attained on {attained}/100"))?;
        summary.push(format!("nu={nu}: {attained}/100"));
    }
    within(start.elapsed(), 300)?;
    Ok(format!("{}; removal-stable in all cases", summary.join(", ")))
}

fn criterion_6() -> Check {
    let start = Instant::now();
    let (k, eps) = (50usize, 0.5);
    let mut graphs = Vec::new();
    let mut seed = 0u64;
    while graphs.len() < 100 {
        let h = sample_gnp_half(400, 6_000 + seed);
        if (0..400).map(|v| h.degree(v)).min().unwrap() >= 170 {
            graphs.push((seed, h));
        }
        seed += 1;
    }
    let outcomes: Vec<std::result::Result<bool, String>> = graphs
        .par_iter()
        .map(|(seed, h)| {
            let delta = (0..400).map(|v| h.degree(v)).min().unwrap();
            let c = delta as f64 / 400.0;
            match thin_sampled(h, k, eps, *seed, 20) {
                Ok(out) => {
                    let s = out.set.members();
                    ensure(s.len() == k, || format!("seed {seed}: |S| = {}", s.len()))?;
                    let adj = adjacency(h);
                    let achieved = min_side_degree(&adj, s, Side::Graph);
                    ensure(achieved as f64 >= (c - eps) * (k - 1) as f64, || {
                        format!("seed {seed}: delta(h[S]) = {achieved} below (c - eps)(k - 1)")
                    })?;
                    Ok(true)
                }
                Err(qramsey::Error::SamplesExhausted { .. }) => Ok(false),
                Err(e) => Err(format!("seed {seed}: {e}")),
            }
        })
        .collect();
    let mut ok = 0;
    for o in outcomes {
        ok += o? as usize;
    }
    ensure(ok >= 99, || format!("succeeded on {ok}/100"))?;
    within(start.elapsed(), 120)?;
    Ok(format!("{ok}/100 within 20 samples ({seed} draws to find 100 graphs with delta >= 170)"))
}

fn criterion_7() -> Check {
    let start = Instant::now();
    let k = 400usize;
    let n = (4.0 * k as f64 * (k as f64).ln()).ceil() as usize;
    let threshold = 0.5 * 399.0 - 2.0 * (399.0 * 400f64.ln()).sqrt();
    let mut lowest = usize::MAX;
    for seed in 0..20u64 {
        let g = sample_gnp_half(n, 7_000 + seed);
        let w = fixed_pipeline(&g, k, seed).map_err(|e| format!("seed {seed}: {e}"))?;
        ensure(w.set.len() == k, || format!("seed {seed}: order {}", w.set.len()))?;
        ensure(w.min_degree as f64 >= threshold, || format!("seed {seed}: min degree {}", w.min_degree))?;
        ensure(w.verify(&g).map_err(|e| e.to_string())?, || format!("seed {seed}: witness fails verify"))?;
        // Independent recount straight from the adjacency bits.
        let s = w.set.members();
        let recount = s
            .iter()
            .map(|&u| {
                let d = s.iter().filter(|&&v| v != u && g.has_edge(u, v)).count();
                if w.side == Side::Graph { d } else { k - 1 - d }
            })
            .min()
            .unwrap();
        ensure(recount == w.min_degree, || format!("seed {seed}: recount {recount} != {}", w.min_degree))?;
        lowest = lowest.min(recount);
    }
    within(start.elapsed(), 300)?;
    Ok(format!("n = {n}, 20/20 witnesses of order 400, lowest min degree {lowest} >= {threshold:.2}"))
}

fn criterion_8() -> Check {
    let start = Instant::now();
    let (k, nu) = (100usize, 0.14);
    let mut notes = Vec::new();
    let mut bookend_failures = Vec::new();
    for z in [1usize, 2] {
        let params = weighted_params(k, nu, Some(z)).map_err(|e| e.to_string())?;
        let mut edges = vec![vec![0u64; z]; z];
        let mut pairs = vec![vec![0u64; z]; z];
        for seed in 0..200u64 {
            let (g, labels) = sample_weighted(&params, seed);
            for u in 0..g.order() {
                for v in u + 1..g.order() {
                    let (a, b) = (labels[u].min(labels[v]), labels[u].max(labels[v]));
                    pairs[a][b] += 1;
                    edges[a][b] += g.has_edge(u, v) as u64;
                }
            }
        }
        let mut worst = 0.0f64;
        for a in 0..z {
            for b in a..z {
                let p = params.p[a][b];
                let total = pairs[a][b] as f64;
                let sigma = (total * p * (1.0 - p)).sqrt();
                let dev = (edges[a][b] as f64 - total * p).abs() / sigma;
                ensure(dev <= 4.0, || format!("z={z} block pair ({a},{b}) off by {dev:.2} sigma"))?;
                worst = worst.max(dev);
            }
        }
        let order = params.order();
        let k_ln_k = k as f64 * (k as f64).ln();
        ensure((order as f64) < k_ln_k, || format!("z={z}: |V| = {order} >= k ln k"))?;
        if order < z * (k - 1) {
            bookend_failures.push(format!("z={z}: |V| = {order} < z(k-1) = {}", z * (k - 1)));
        }
        notes.push(format!("z={z}: |V|={order}, worst {worst:.2} sigma"));
    }

    // Small instances: exhaustive checks recorded as observations.
    let threshold = ThresholdFn::Weighted(nu);
    let (mut verified, mut refuted) = (0, 0);
    for k in 6..=8usize {
        for z in 1..=3usize {
            let params = weighted_params(k, nu, Some(z)).map_err(|e| e.to_string())?;
            for seed in 0..3u64 {
                let (g, _) = sample_weighted(&params, seed);
                let mut cert = verify_no_homogeneous_variable(&g, k, threshold, u64::MAX).map_err(|e| e.to_string())?;
                cert.asymptotic = Some(params.asymptotic);
                ensure(cert.asymptotic == Some(false), || "small instance flagged asymptotic".into())?;
                ensure(cert.recheck(u64::MAX).map_err(|e| e.to_string())?, || "certificate recheck failed".into())?;
                if cert.verified {
                    verified += 1;
                } else {
                    refuted += 1;
                }
            }
        }
    }
    notes.push(format!("k<=8 observations: {verified} verified, {refuted} refuted, all non-asymptotic"));
    within(start.elapsed(), 180)?;
    if bookend_failures.is_empty() {
        Ok(notes.join("; "))
    } else {
        Err(format!(
            "order bookend |V| >= z(k-1) fails ({}); other checks passed: {}",
            bookend_failures.join(", "),
            notes.join("; ")
        ))
    }
}

fn criterion_9() -> Check {
    ensure(encode_graph6(&Graph::empty(0)).map_err(|e| e.to_string())? == b"?", || "n = 0 vector".into())?;
    ensure(encode_graph6(&Graph::complete(3)).map_err(|e| e.to_string())? == b"Bw", || "K3 vector".into())?;
    ensure(decode_graph6(b"Bw").map_err(|e| e.to_string())? == Graph::complete(3), || "decode Bw".into())?;
    ensure(decode_graph6(b"?").map_err(|e| e.to_string())?.order() == 0, || "decode ?".into())?;
    let mut stream = rng::stream(9, 0);
    for i in 0..1000 {
        let n = stream.random_range(0..=32usize);
        let p: f64 = stream.random();
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if stream.random::<f64>() < p {
                    g.add_edge(u, v);
                }
            }
        }
        let bytes = encode_graph6(&g).map_err(|e| e.to_string())?;
        let back = decode_graph6(&bytes).map_err(|e| e.to_string())?;
        ensure(back == g, || format!("graph {i} (n = {n}) does not round-trip"))?;
        ensure(encode_graph6(&back).map_err(|e| e.to_string())? == bytes, || format!("graph {i} re-encodes differently"))?;
    }
    Ok("1000 random graphs n <= 32 round-trip byte-exact; ? and Bw vectors".into())
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, fn() -> Check); 9] = [
        (1, "exact small values", criterion_1),
        (2, "construction certification", criterion_2),
        (3, "rate function suite", criterion_3),
        (4, "tail-bound domination", criterion_4),
        (5, "skew-stable oracle equivalence", criterion_5),
        (6, "thinning contract", criterion_6),
        (7, "fixed pipeline", criterion_7),
        (8, "weighted construction", criterion_8),
        (9, "graph6 serialization", criterion_9),
    ];
    let mut unexpected = 0;
    for (id, name, check) in criteria {
        let known = UNATTAINABLE.iter().find(|(i, _)| *i == id).map(|(_, why)| *why);
        match (check(), known) {
            (Ok(detail), None) => println!("PASS criterion {id} ({name}): {detail}"),
            (Ok(detail), Some(_)) => {
                unexpected += 1;
                println!("PASS criterion {id} ({name}): {detail} [listed as unattainable; update the list]");
            }
            (Err(detail), None) => {
                unexpected += 1;
                println!("FAIL criterion {id} ({name}): {detail}");
            }
            (Err(detail), Some(why)) => {
                println!("FAIL criterion {id} ({name}): {detail} [unattainable as stated: {why}]")
            }
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
