//! The reproducible catalogue of exact values and inequalities, each with a
//! time limit. Used by `rprime verify-paper` and the acceptance suite.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bounds::{family_bound, multicolor_ramsey_bound, pair_bound, ramsey_bound};
use crate::clique::{max_clique, max_independent};
use crate::error::Result;
use crate::graph::{enumerate_labeled_graphs, graphs_in_range, labeled_graph_count, pairs, Graph};
use crate::greedy::{greedy_pair_proof, greedy_pair_remark, pair_proof_guarantee, pair_remark_guarantee, VertexRule};
use crate::par::{map_reduce, Exec};
use crate::rho::{rho_prime, rho_prime_bruteforce};
use crate::search::{search_threshold, Instance, SearchOptions, Threshold, ThresholdKind};
use crate::vdw::{rho_w, w_classical_check, w_prime_search, IntervalColoring};

#[derive(Clone, Debug, Serialize)]
pub struct ClaimResult {
    pub id: &'static str,
    pub claim: &'static str,
    pub expected: String,
    pub computed: String,
    pub passed: bool,
    pub elapsed_ms: f64,
    pub limit_ms: u64,
    pub within_limit: bool,
}

type Outcome = (String, String, bool);

struct Claim {
    id: &'static str,
    claim: &'static str,
    limit: Duration,
    run: fn(&SearchOptions) -> Result<Outcome>,
}

const CLAIMS: &[Claim] = &[
    Claim {
        id: "rprime4",
        claim: "R'(4) = 3",
        limit: Duration::from_secs(1),
        run: rprime4,
    },
    Claim {
        id: "rprime5",
        claim: "R(3) = R'(5) = 6, C5 below both",
        limit: Duration::from_secs(5),
        run: rprime5,
    },
    Claim {
        id: "c5",
        claim: "rho'(C5) = 4, omega(C5) = alpha(C5) = 2",
        limit: Duration::from_millis(1),
        run: c5,
    },
    Claim {
        id: "three_vertex",
        claim: "3-vertex graphs with 0..3 edges have |A| = 1, 2, 2, 3",
        limit: Duration::from_millis(1),
        run: three_vertex,
    },
    Claim {
        id: "family_small",
        claim: "R'_m(m) = 1, R'_m(m+1) = 2, R'_m(m+2) = 3 for m = 2, 3",
        limit: Duration::from_secs(1),
        run: family_small,
    },
    Claim {
        id: "wprime",
        claim: "W'(2,n) = 1, 2, 3, 6 for n = 1..4; rho_w(bbwbb) = 3",
        limit: Duration::from_secs(1),
        run: wprime,
    },
    Claim {
        id: "bounds",
        claim: "exact values within closed-form bounds; two-color forms coincide",
        limit: Duration::from_millis(1),
        run: bounds_check,
    },
    Claim {
        id: "inequalities",
        claim: "R(3) <= R'(5); R'(n+1) <= 2R'(n); R'_m(n+1) <= 2+m(R'_m(n)-1); W(2,3) <= W'(2,5)",
        limit: Duration::from_secs(30),
        run: inequalities,
    },
    Claim {
        id: "greedy_sweep",
        claim: "greedy pair guarantees on every labeled graph with n <= 7",
        limit: Duration::from_secs(60),
        run: greedy_sweep,
    },
    Claim {
        id: "oracle",
        claim: "rho' equals brute force (n <= 5 exhaustive, 1000 random n <= 16)",
        limit: Duration::from_secs(10),
        run: oracle,
    },
];

pub fn claim_ids() -> Vec<&'static str> {
    CLAIMS.iter().map(|c| c.id).collect()
}

/// Runs every claim (or only `only`), in catalogue order.
pub fn run_claims(only: Option<&str>, exec: Exec) -> Vec<ClaimResult> {
    let opts = SearchOptions::with_exec(exec);
    CLAIMS
        .iter()
        .filter(|c| only.is_none_or(|id| c.id == id))
        .map(|c| {
            let start = Instant::now();
            let outcome = (c.run)(&opts);
            let elapsed = start.elapsed();
            let (expected, computed, ok) = outcome.unwrap_or_else(|e| ("-".into(), format!("error: {e}"), false));
            let within_limit = elapsed < c.limit;
            ClaimResult {
                id: c.id,
                claim: c.claim,
                expected,
                computed,
                passed: ok && within_limit,
                elapsed_ms: elapsed.as_secs_f64() * 1e3,
                limit_ms: c.limit.as_millis() as u64,
                within_limit,
            }
        })
        .collect()
}

fn exact(t: &Threshold) -> Result<u64> {
    t.validate()?;
    Ok(t.value)
}

fn lower_graph(t: &Threshold) -> Option<Graph> {
    match t.lower.as_ref()?.instance().ok()? {
        Instance::Graph(g) => Some(g),
        _ => None,
    }
}

fn is_five_cycle(g: &Graph) -> bool {
    g.n() == 5 && (0..5).all(|v| g.degree(v) == 2) && {
        let mut seen = crate::graph::VertexSet::singleton(0);
        for _ in 0..5 {
            for v in seen.iter() {
                seen = seen.union(g.neighbors(v));
            }
        }
        seen.len() == 5
    }
}

fn rprime4(opts: &SearchOptions) -> Result<Outcome> {
    let t = search_threshold(ThresholdKind::RPrime, 4, 2, opts)?;
    let value = exact(&t)?;
    let scanned = t.upper.as_ref().and_then(|c| c.scanned_count);
    let lower_n = t.lower.as_ref().map(|c| c.parameters.size);
    Ok((
        "3 (8 graphs scanned, 2-vertex counterexample)".into(),
        format!(
            "{value} ({} graphs scanned, {}-vertex counterexample)",
            scanned.unwrap_or(0),
            lower_n.unwrap_or(0)
        ),
        value == 3 && scanned == Some(8) && lower_n == Some(2),
    ))
}

fn rprime5(opts: &SearchOptions) -> Result<Outcome> {
    let rp = search_threshold(ThresholdKind::RPrime, 5, 2, opts)?;
    let r = search_threshold(ThresholdKind::Ramsey, 3, 2, opts)?;
    let (a, b) = (exact(&rp)?, exact(&r)?);
    let c5_below = [&rp, &r]
        .iter()
        .all(|t| lower_graph(t).is_some_and(|g| is_five_cycle(&g)));
    let scanned = [&rp, &r].map(|t| t.upper.as_ref().and_then(|c| c.scanned_count).unwrap_or(0));
    Ok((
        "R'(5) = 6, R(3) = 6, C5 witnesses, 32768 scanned".into(),
        format!(
            "R'(5) = {a}, R(3) = {b}, C5 witnesses: {c5_below}, scanned {} / {}",
            scanned[0], scanned[1]
        ),
        a == 6 && b == 6 && c5_below && scanned == [32768, 32768],
    ))
}

fn c5(_: &SearchOptions) -> Result<Outcome> {
    let g = Graph::cycle(5)?;
    let w = rho_prime(&g);
    w.validate(&g)?;
    let (omega, alpha) = (max_clique(&g).0, max_independent(&g).0);
    Ok((
        "rho' = 4, omega = 2, alpha = 2".into(),
        format!("rho' = {}, omega = {omega}, alpha = {alpha}", w.value),
        w.value == 4 && omega == 2 && alpha == 2,
    ))
}

fn three_vertex(_: &SearchOptions) -> Result<Outcome> {
    let graphs = [
        Graph::empty(3)?,
        Graph::from_edges(3, &[(0, 1)])?,
        Graph::from_edges(3, &[(0, 1), (1, 2)])?,
        Graph::complete(3)?,
    ];
    let mut sizes = Vec::new();
    for g in &graphs {
        let w = rho_prime(g);
        w.validate(g)?;
        sizes.push(w.a.len());
    }
    Ok(("[1, 2, 2, 3]".into(), format!("{sizes:?}"), sizes == [1, 2, 2, 3]))
}

fn family_small(opts: &SearchOptions) -> Result<Outcome> {
    let mut computed = Vec::new();
    let mut ok = true;
    for m in [2usize, 3] {
        for (n, expected) in [(m, 1), (m + 1, 2), (m + 2, 3)] {
            let v = exact(&search_threshold(ThresholdKind::RPrimeM, n as u64, m, opts)?)?;
            ok &= v == expected;
            computed.push(v);
        }
    }
    Ok(("[1, 2, 3, 1, 2, 3]".into(), format!("{computed:?}"), ok))
}

fn wprime(opts: &SearchOptions) -> Result<Outcome> {
    let mut values = Vec::new();
    let mut witness = String::new();
    for n in 1..=4 {
        let t = w_prime_search(2, n, opts)?;
        values.push(exact(&t)?);
        if n == 4 {
            witness = t.lower.and_then(|c| c.witness_coloring).unwrap_or_default();
        }
    }
    let bbwbb = rho_w(&IntervalColoring::from_text("bbwbb", 2)?).0;
    Ok((
        "[1, 2, 3, 6], witness aabaa, rho_w(bbwbb) = 3".into(),
        format!("{values:?}, witness {witness}, rho_w(bbwbb) = {bbwbb}"),
        values == [1, 2, 3, 6] && witness == "aabaa" && bbwbb == 3,
    ))
}

/// Values reproduced by the other claims, checked against the closed forms.
fn bounds_check(_: &SearchOptions) -> Result<Outcome> {
    let mut ok = true;
    // R'(n) for n = 2..5
    for (n, v) in [(2, 1), (3, 2), (4, 3), (5, 6)] {
        ok &= v <= pair_bound(n)?;
    }
    ok &= 6 <= ramsey_bound(3)?;
    ok &= 6 <= multicolor_ramsey_bound(3, 2)?;
    for m in [2u64, 3] {
        for (n, v) in [(m, 1), (m + 1, 2), (m + 2, 3)] {
            ok &= v <= family_bound(n, m)?;
        }
    }
    let coincide = (2..=10).all(|n| multicolor_ramsey_bound(n, 2).ok() == ramsey_bound(n).ok());
    Ok((
        "all within bounds; forms coincide for n = 2..10".into(),
        format!("within bounds: {ok}; coincide: {coincide}"),
        ok && coincide,
    ))
}

fn inequalities(opts: &SearchOptions) -> Result<Outcome> {
    let rp: Vec<u64> = (2..=5)
        .map(|n| search_threshold(ThresholdKind::RPrime, n, 2, opts).and_then(|t| exact(&t)))
        .collect::<Result<_>>()?;
    let r3 = exact(&search_threshold(ThresholdKind::Ramsey, 3, 2, opts)?)?;
    let mut ok = r3 <= rp[3];
    // rp[i] = R'(i + 2)
    for i in 0..3 {
        ok &= rp[i + 1] <= 2 * rp[i];
    }
    let mut fam_ok = true;
    for m in [2usize, 3] {
        let vals: Vec<u64> = (m..=m + 2)
            .map(|n| search_threshold(ThresholdKind::RPrimeM, n as u64, m, opts).and_then(|t| exact(&t)))
            .collect::<Result<_>>()?;
        for w in vals.windows(2) {
            fam_ok &= w[1] <= 2 + m as u64 * (w[0] - 1);
        }
    }
    let w23_holds = w_classical_check(2, 3, 9, opts)? && !w_classical_check(2, 3, 8, opts)?;
    let wp25 = exact(&w_prime_search(2, 5, opts)?)?;
    let vdw_ok = w23_holds && 9 <= wp25;
    Ok((
        "all inequalities hold; W(2,3) = 9 <= W'(2,5)".into(),
        format!(
            "R(3) = {r3} <= R'(5) = {}; R'(2..5) = {rp:?}; family step: {fam_ok}; W(2,3) = 9: {w23_holds}, W'(2,5) = {wp25}",
            rp[3]
        ),
        ok && fam_ok && vdw_ok,
    ))
}

/// Violations of either greedy guarantee among all labeled graphs on `n`
/// vertices, lowest-index pivots.
pub fn greedy_violations(n: usize, exec: Exec) -> Result<u64> {
    let count = labeled_graph_count(n)?;
    Ok(map_reduce(
        count,
        exec,
        0u64,
        |code| {
            let g = graphs_in_range(n, code..code + 1).next().expect("one graph");
            let mut bad = 0;
            match greedy_pair_proof(&g, VertexRule::LowestIndex) {
                Ok((w, _)) if w.validate(&g).is_ok() && w.value >= pair_proof_guarantee(n) => {}
                _ => bad += 1,
            }
            if n >= 2 {
                match greedy_pair_remark(&g, VertexRule::LowestIndex) {
                    Ok((w, _))
                        if w.validate(&g).is_ok()
                            && w.a.intersection(w.b).is_empty()
                            && w.value >= pair_remark_guarantee(n) => {}
                    _ => bad += 1,
                }
            }
            bad
        },
        |a, b| a + b,
    ))
}

fn greedy_sweep(opts: &SearchOptions) -> Result<Outcome> {
    let mut total = 0;
    let mut graphs = 0;
    for n in 1..=7 {
        total += greedy_violations(n, opts.exec)?;
        graphs += labeled_graph_count(n)?;
    }
    Ok((
        "0 violations".into(),
        format!("{total} violations over {graphs} graphs"),
        total == 0,
    ))
}

fn oracle(_: &SearchOptions) -> Result<Outcome> {
    let mut mismatches = 0;
    let mut checked = 0;
    for n in 1..=5 {
        for g in enumerate_labeled_graphs(n)? {
            checked += 1;
            if rho_prime(&g).value != rho_prime_bruteforce(&g)? {
                mismatches += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=16);
        let p: f64 = rng.gen_range(0.0..=1.0);
        let edges: Vec<_> = pairs(n).filter(|_| rng.gen_bool(p)).collect();
        let g = Graph::from_edges(n, &edges)?;
        checked += 1;
        if rho_prime(&g).value != rho_prime_bruteforce(&g)? {
            mismatches += 1;
        }
    }
    Ok((
        "0 mismatches".into(),
        format!("{mismatches} mismatches over {checked} graphs"),
        mismatches == 0,
    ))
}
