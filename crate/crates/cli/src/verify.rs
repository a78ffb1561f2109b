//! Theorem-verification harness.
//!
//! Every suite checks one claim on seeded random instances and on a fixed set
//! of edge cases (paths, cycles of both signs, stars, complete graphs and the
//! square with a pendant edge). Each check gets its own seed, so a failure is
//! written out as a graph file carrying `# suite` and `# check-seed` comments
//! that `replay` runs again.

use std::fs;
use std::path::{Path, PathBuf};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use signed_total::balance::{
    has_adjacent_edges, is_paths_and_cycles, is_paths_and_positive_cycles, line_clique_bound,
};
use signed_total::generators::{random_graph_with, random_regular_with};
use signed_total::operators::cycle_sign;
use signed_total::*;
use thiserror::Error;

use crate::formats::{parse_graph, write_graph, FormatError};

type Generate = fn(&mut ChaCha8Rng, usize) -> Option<SignedGraph>;
type Check = fn(&SignedGraph, &mut ChaCha8Rng) -> Result<(), String>;

pub struct Suite {
    pub name: &'static str,
    pub anchor: &'static str,
    /// Largest order drawn, whatever `--n-max` asks for.
    pub n_cap: usize,
    generate: Generate,
    applies: fn(&SignedGraph) -> bool,
    check: Check,
}

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("n-max must be at least 1")]
    EmptyRange,
    #[error("counterexample file: {0}")]
    Replay(String),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub check_seed: u64,
    pub message: String,
    pub file: Option<PathBuf>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub name: &'static str,
    pub anchor: &'static str,
    pub n_max: usize,
    pub tried: usize,
    pub passed: usize,
    pub failures: Vec<Failure>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub trials: usize,
    pub suites: Vec<SuiteReport>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(|s| s.failures.is_empty())
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for s in &self.suites {
            let status = if s.failures.is_empty() { "PASS" } else { "FAIL" };
            out.push_str(&format!(
                "{status} {:<28} {:>4}/{:<4} n<={:<2} {}\n",
                s.name, s.passed, s.tried, s.n_max, s.anchor
            ));
            for f in &s.failures {
                out.push_str(&format!("     check-seed {}: {}\n", f.check_seed, f.message));
                if let Some(file) = &f.file {
                    out.push_str(&format!("     counterexample {}\n", file.display()));
                }
            }
        }
        let failed = self.suites.iter().filter(|s| !s.failures.is_empty()).count();
        out.push_str(&format!("{} suites, {failed} failed\n", self.suites.len()));
        out
    }
}

pub struct VerifyOptions {
    /// A suite name, or `all`.
    pub suite: String,
    pub n_max: usize,
    pub trials: usize,
    pub seed: u64,
    pub counterexample_dir: PathBuf,
}

pub fn suites() -> Vec<Suite> {
    vec![
        Suite {
            name: "incidence-laplacian",
            anchor: "B_η B_η^T = L_Σ",
            n_cap: 12,
            generate: any_graph,
            applies: always,
            check: check_incidence,
        },
        Suite {
            name: "line-graph-constructions",
            anchor: "A_{L_C} = 2I − B^T B, σ(ef) = −η(v,e)η(v,f), L_C(Σ) = −L_S(Σ)",
            n_cap: 9,
            generate: any_graph,
            applies: always,
            check: check_line_constructions,
        },
        Suite {
            name: "negative-line-balance",
            anchor: "L_S(−G) is balanced and L_C(−G) antibalanced",
            n_cap: 9,
            generate: any_graph,
            applies: always,
            check: check_negative_line_balance,
        },
        Suite {
            name: "line-balance",
            anchor: "L_C(Σ) balanced iff paths and positive cycles; L_S(Σ) balanced iff Σ antibalanced",
            n_cap: 9,
            generate: any_graph,
            applies: always,
            check: check_line_balance,
        },
        Suite {
            name: "line-frustration",
            anchor: "ν(L_S(Σ)) = ℓ(−Σ), ℓ(L_C(Σ)) ≥ Σ_v ⌊(d(v)−1)²/4⌋",
            n_cap: 7,
            generate: any_graph,
            applies: always,
            check: check_line_frustration,
        },
        Suite {
            name: "reorientation-stability",
            anchor: "T_*(Σ_η) and T_*(Σ_η') are switching equivalent",
            n_cap: 9,
            generate: any_graph,
            applies: always,
            check: check_reorientation,
        },
        Suite {
            name: "switching-stability",
            anchor: "Σ ~ Σ' implies T_*(Σ) ~ T_*(Σ') for orientations B and SB",
            n_cap: 9,
            generate: any_graph,
            applies: always,
            check: check_switching,
        },
        Suite {
            name: "total-triangles",
            anchor: "T_* has 2t + m + Σ C(d_i+1,3) triangles, T_C exactly 2t⁺ positive, T_S exactly t + m negative",
            n_cap: 10,
            generate: any_graph,
            applies: always,
            check: check_triangles,
        },
        Suite {
            name: "total-structure",
            anchor: "balance, antibalance, ℓ, ν and λ_max of T_*(Σ), parts (i)-(vii)",
            n_cap: 6,
            generate: any_graph,
            applies: always,
            check: check_structure,
        },
        Suite {
            name: "regular-total-spectrum",
            anchor: "2 with multiplicity (r/2 − 1)n, pairs from each eigenvalue of Σ",
            n_cap: 10,
            generate: regular_graph,
            applies: regular_at_least_2,
            check: check_regular_spectrum,
        },
        Suite {
            name: "spectral-interval",
            anchor: "the spectrum of T_*(Σ) lies in the interval from λ_1 and λ_n",
            n_cap: 12,
            generate: regular_graph,
            applies: regular_at_least_2,
            check: check_interval,
        },
        Suite {
            name: "product-spectrum",
            anchor: "spec(Σ1 + Σ2) = spec(Σ1) + spec(Σ2)",
            n_cap: 5,
            generate: any_graph,
            applies: always,
            check: check_product,
        },
        Suite {
            name: "polynomial-spectrum",
            anchor: "spec(p(G_σ)) = Σ_i spec(G_σ^i)^{c_i}",
            n_cap: 6,
            generate: small_regular_graph,
            applies: small_regular,
            check: check_polynomial,
        },
        Suite {
            name: "main-eigenvalues",
            anchor: "exactly two main eigenvalues: r and −2",
            n_cap: 10,
            generate: even_regular_positive,
            applies: is_even_regular_positive,
            check: check_main,
        },
        Suite {
            name: "frustration-oracle",
            anchor: "ℓ by switching enumeration equals minimum edge deletion",
            n_cap: 7,
            generate: sparse_graph,
            applies: at_most_12_edges,
            check: check_oracle,
        },
        Suite {
            name: "cycle-sign-transfer",
            anchor: "every cycle of Σ keeps its signature in L_C(Σ)",
            n_cap: 8,
            generate: random_cycle,
            applies: is_cycle,
            check: check_cycle_transfer,
        },
    ]
}

pub fn run(opts: &VerifyOptions) -> Result<VerifyReport, VerifyError> {
    if opts.n_max == 0 {
        return Err(VerifyError::EmptyRange);
    }
    let selected: Vec<Suite> = suites()
        .into_iter()
        .filter(|s| opts.suite == "all" || opts.suite == s.name)
        .collect();
    if selected.is_empty() {
        return Err(VerifyError::UnknownSuite(opts.suite.clone()));
    }
    let suites = selected
        .par_iter()
        .map(|s| run_suite(s, opts))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(VerifyReport { seed: opts.seed, trials: opts.trials, suites })
}

fn run_suite(suite: &Suite, opts: &VerifyOptions) -> Result<SuiteReport, VerifyError> {
    let n_max = opts.n_max.min(suite.n_cap);
    let base = suite_seed(suite.name, opts.seed);
    let mut report = SuiteReport {
        name: suite.name,
        anchor: suite.anchor,
        n_max,
        tried: 0,
        passed: 0,
        failures: Vec::new(),
    };
    let mut instances = Vec::new();
    for t in 0..opts.trials {
        let check_seed = mix(base, t as u64);
        if let Some(g) = (suite.generate)(&mut generation_rng(check_seed), n_max) {
            instances.push((check_seed, g));
        }
    }
    for (i, g) in fixtures(n_max).into_iter().filter(|g| (suite.applies)(g)).enumerate() {
        instances.push((mix(base, (opts.trials + i) as u64), g));
    }
    for (check_seed, g) in instances {
        report.tried += 1;
        match (suite.check)(&g, &mut check_rng(check_seed)) {
            Ok(()) => report.passed += 1,
            Err(message) => {
                let file = write_counterexample(&opts.counterexample_dir, suite.name, check_seed, &message, &g)?;
                report.failures.push(Failure { check_seed, message, file: Some(file) });
            }
        }
    }
    Ok(report)
}

fn write_counterexample(
    dir: &Path,
    suite: &str,
    check_seed: u64,
    message: &str,
    g: &SignedGraph,
) -> Result<PathBuf, VerifyError> {
    let io = |path: &Path| {
        let path = path.to_path_buf();
        move |source| VerifyError::Io { path, source }
    };
    fs::create_dir_all(dir).map_err(io(dir))?;
    let path = dir.join(format!("counterexample-{suite}-{check_seed:016x}.sg"));
    let text = format!(
        "# suite {suite}\n# check-seed {check_seed}\n# {}\n{}",
        message.replace('\n', " "),
        write_graph(g)
    );
    fs::write(&path, text).map_err(io(&path))?;
    Ok(path)
}

/// Result of running a counterexample file again.
#[derive(Clone, Debug, Serialize)]
pub struct Replay {
    pub suite: String,
    pub check_seed: u64,
    pub result: Result<(), String>,
}

pub fn replay(text: &str) -> Result<Replay, VerifyError> {
    let mut suite = None;
    let mut check_seed = None;
    for line in text.lines() {
        if let Some(name) = line.strip_prefix("# suite ") {
            suite = Some(name.trim().to_string());
        } else if let Some(seed) = line.strip_prefix("# check-seed ") {
            let seed = seed.trim().parse().map_err(|_| VerifyError::Replay(format!("bad check-seed `{seed}`")))?;
            check_seed = Some(seed);
        }
    }
    let suite = suite.ok_or_else(|| VerifyError::Replay("missing `# suite` line".into()))?;
    let check_seed = check_seed.ok_or_else(|| VerifyError::Replay("missing `# check-seed` line".into()))?;
    let g = parse_graph(text)?;
    let found = suites()
        .into_iter()
        .find(|s| s.name == suite)
        .ok_or_else(|| VerifyError::UnknownSuite(suite.clone()))?;
    let result = (found.check)(&g, &mut check_rng(check_seed));
    Ok(Replay { suite, check_seed, result })
}

fn suite_seed(name: &str, seed: u64) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in name.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    mix(h, seed)
}

/// SplitMix64 step of `a + b`.
fn mix(a: u64, b: u64) -> u64 {
    let mut z = a.wrapping_add(b).wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn generation_rng(check_seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(check_seed)
}

fn check_rng(check_seed: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(check_seed);
    rng.set_stream(1);
    rng
}

pub fn fixtures(n_max: usize) -> Vec<SignedGraph> {
    let uniform = |kind, n, sign| family(kind, n, &SignPattern::Uniform(sign)).expect("valid family");
    let mut out = Vec::new();
    for n in 1..=n_max {
        out.push(uniform(Family::Path, n, Sign::Plus));
    }
    for n in 3..=n_max {
        out.push(uniform(Family::Cycle, n, Sign::Plus));
        out.push(uniform(Family::Cycle, n, Sign::Plus).map_signs(|id, e| if id == 0 { -e.sign } else { e.sign }));
        out.push(uniform(Family::Cycle, n, Sign::Minus));
    }
    for n in 2..=n_max {
        out.push(uniform(Family::Star, n, Sign::Plus));
        out.push(uniform(Family::Complete, n, Sign::Plus));
        out.push(uniform(Family::Complete, n, Sign::Minus));
    }
    if n_max >= 5 {
        out.push(square_with_pendant());
    }
    out
}

fn always(_: &SignedGraph) -> bool {
    true
}

fn regular_at_least_2(g: &SignedGraph) -> bool {
    g.regular_degree().is_some_and(|r| r >= 2)
}

fn small_regular(g: &SignedGraph) -> bool {
    g.regular_degree().is_some_and(|r| r == 2 || r == 3) && g.vertex_count() <= 6
}

fn is_even_regular_positive(g: &SignedGraph) -> bool {
    g.is_all_positive() && g.regular_degree().is_some_and(|r| r >= 2 && r % 2 == 0)
}

fn at_most_12_edges(g: &SignedGraph) -> bool {
    g.edge_count() <= 12
}

fn is_cycle(g: &SignedGraph) -> bool {
    g.vertex_count() >= 3 && g.regular_degree() == Some(2) && g.components().len() == 1
}

fn any_graph(rng: &mut ChaCha8Rng, n_max: usize) -> Option<SignedGraph> {
    let n = rng.random_range(1..=n_max);
    let p = rng.random_range(0.2..0.8);
    let negative = rng.random_range(0.0..=1.0);
    random_graph_with(rng, n, p, negative).ok()
}

fn sparse_graph(rng: &mut ChaCha8Rng, n_max: usize) -> Option<SignedGraph> {
    (0..100).filter_map(|_| any_graph(rng, n_max)).find(at_most_12_edges)
}

fn regular_with_degrees(rng: &mut ChaCha8Rng, n_max: usize, degrees: &[usize]) -> Option<SignedGraph> {
    let options: Vec<(usize, usize)> = degrees
        .iter()
        .flat_map(|&d| (d + 1..=n_max).filter(move |n| (n * d).is_multiple_of(2)).map(move |n| (n, d)))
        .collect();
    if options.is_empty() {
        return None;
    }
    let (n, d) = options[rng.random_range(0..options.len())];
    let negative = rng.random_range(0.0..=1.0);
    random_regular_with(rng, n, d, negative).ok()
}

fn regular_graph(rng: &mut ChaCha8Rng, n_max: usize) -> Option<SignedGraph> {
    regular_with_degrees(rng, n_max, &[2, 3, 4, 5, 6])
}

fn small_regular_graph(rng: &mut ChaCha8Rng, n_max: usize) -> Option<SignedGraph> {
    regular_with_degrees(rng, n_max, &[2, 3])
}

fn even_regular_positive(rng: &mut ChaCha8Rng, n_max: usize) -> Option<SignedGraph> {
    regular_with_degrees(rng, n_max, &[2, 4, 6]).map(|g| g.map_signs(|_, _| Sign::Plus))
}

fn random_cycle(rng: &mut ChaCha8Rng, n_max: usize) -> Option<SignedGraph> {
    if n_max < 3 {
        return None;
    }
    let n = rng.random_range(3..=n_max);
    let signs = (0..n).map(|_| if rng.random_bool(0.5) { Sign::Minus } else { Sign::Plus }).collect();
    family(Family::Cycle, n, &SignPattern::PerEdge(signs)).ok()
}

fn ensure(ok: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(message())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn ell(g: &SignedGraph) -> Result<usize, String> {
    frustration_index(g).map(|r| r.value).map_err(err)
}

fn witnessed_equivalence(a: &SignedGraph, b: &SignedGraph) -> Result<bool, String> {
    Ok(match switching_equivalent(a, b).map_err(err)? {
        Some(w) => switch(a, &w.set).map_err(err)? == *b,
        None => false,
    })
}

fn check_incidence(g: &SignedGraph, rng: &mut ChaCha8Rng) -> Result<(), String> {
    let eta = Orientation::random(g, rng);
    let b = incidence_matrix(g, &eta).map_err(err)?;
    ensure(&b * &b.transpose() == g.laplacian_matrix(), || "B B^T differs from L".into())
}

fn check_line_constructions(g: &SignedGraph, rng: &mut ChaCha8Rng) -> Result<(), String> {
    let eta = Orientation::random(g, rng);
    for v in Variant::BOTH {
        let by_matrix = line_graph_matrix(g, &eta, v).map_err(err)?;
        let by_rule = line_graph(g, &eta, v).map_err(err)?;
        ensure(by_matrix == by_rule, || format!("L_{v}: matrix and sign-rule constructions differ"))?;
    }
    let lc = line_graph(g, &eta, Variant::Combinatorial).map_err(err)?;
    let ls = line_graph(g, &eta, Variant::Spectral).map_err(err)?;
    ensure(lc == ls.negate(), || "L_C differs from -L_S".into())
}

fn check_negative_line_balance(g: &SignedGraph, rng: &mut ChaCha8Rng) -> Result<(), String> {
    let neg = g.map_signs(|_, _| Sign::Minus);
    let eta = Orientation::random(&neg, rng);
    let ls = line_graph(&neg, &eta, Variant::Spectral).map_err(err)?;
    ensure(is_balanced(&ls).is_some(), || "L_S(-G) is unbalanced".into())?;
    let lc = line_graph(&neg, &eta, Variant::Combinatorial).map_err(err)?;
    ensure(is_antibalanced(&lc), || "L_C(-G) is not antibalanced".into())
}

fn check_line_balance(g: &SignedGraph, rng: &mut ChaCha8Rng) -> Result<(), String> {
    let eta = Orientation::random(g, rng);
    let lc = is_balanced(&line_graph(g, &eta, Variant::Combinatorial).map_err(err)?).is_some();
    let want = is_paths_and_positive_cycles(g);
    ensure(lc == want, || format!("L_C balanced = {lc}, paths and positive cycles = {want}"))?;
    let ls = is_balanced(&line_graph(g, &eta, Variant::Spectral).map_err(err)?).is_some();
    let anti = is_antibalanced(g);
    ensure(ls == anti, || format!("L_S balanced = {ls}, antibalanced = {anti}"))
}

fn check_line_frustration(g: &SignedGraph, rng: &mut ChaCha8Rng) -> Result<(), String> {
    let eta = Orientation::random(g, rng);
    let ls = line_graph(g, &eta, Variant::Spectral).map_err(err)?;
    let nu = frustration_number(&ls).value;
    let target = ell(&g.negate())?;
    ensure(nu == target, || format!("nu(L_S) = {nu}, ell(-Σ) = {target}"))?;
    let ell_ls = ell(&ls)?;
    ensure(ell_ls >= nu, || format!("ell(L_S) = {ell_ls} < nu(L_S) = {nu}"))?;
    let ell_lc = ell(&line_graph(g, &eta, Variant::Combinatorial).map_err(err)?)?;
    let bound = line_clique_bound(g);
    ensure(ell_lc >= bound, || format!("ell(L_C) = {ell_lc} < {bound}"))
}

fn check_reorientation(g: &SignedGraph, rng: &mut ChaCha8Rng) -> Result<(), String> {
    let eta = Orientation::random(g, rng);
    let other = Orientation::random(g, rng);
    for v in Variant::BOTH {
        let a = total_graph(g, &eta, v).map_err(err)?;
        let b = total_graph(g, &other, v).map_err(err)?;
        ensure(witnessed_equivalence(&a, &b)?, || format!("T_{v} under two orientations not equivalent"))?;
    }
    Ok(())
}

fn check_switching(g: &SignedGraph, rng: &mut ChaCha8Rng) -> Result<(), String> {
    let eta = Orientation::random(g, rng);
    let set: Vec<usize> = (0..g.vertex_count()).filter(|_| rng.random_bool(0.5)).collect();
    let (h, eta_h) = switch_oriented(g, &eta, &set).map_err(err)?;
    for v in Variant::BOTH {
        let a = total_graph(g, &eta, v).map_err(err)?;
        let b = total_graph(&h, &eta_h, v).map_err(err)?;
        ensure(witnessed_equivalence(&a, &b)?, || format!("T_{v} not equivalent after switching {set:?}"))?;
    }
    Ok(())
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        0
    } else {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }
}

fn check_triangles(g: &SignedGraph, rng: &mut ChaCha8Rng) -> Result<(), String> {
    let eta = Orientation::random(g, rng);
    let t = triangle_census(g);
    let m = g.edge_count();
    let total = 2 * t.total() + m + g.degrees().iter().map(|&d| binomial(d + 1, 3)).sum::<usize>();
    let tc = triangle_census(&total_graph(g, &eta, Variant::Combinatorial).map_err(err)?);
    let ts = triangle_census(&total_graph(g, &eta, Variant::Spectral).map_err(err)?);
    ensure(tc.total() == total && ts.total() == total, || {
        format!("triangle totals {} and {}, expected {total}", tc.total(), ts.total())
    })?;
    ensure(tc.positive == 2 * t.positive, || format!("T_C has {} positive triangles, expected {}", tc.positive, 2 * t.positive))?;
    ensure(ts.negative == t.total() + m, || format!("T_S has {} negative triangles, expected {}", ts.negative, t.total() + m))
}

fn check_structure(g: &SignedGraph, rng: &mut ChaCha8Rng) -> Result<(), String> {
    let eta = Orientation::random(g, rng);
    let m = g.edge_count();
    let tau = vertex_cover_number(g).size;
    let anti = is_antibalanced(g);
    for v in Variant::BOTH {
        let t = total_graph(g, &eta, v).map_err(err)?;
        let line = line_graph(g, &eta, v).map_err(err)?;

        let balanced = is_balanced(&t).is_some();
        ensure(balanced == (m == 0), || format!("(i) T_{v} balanced = {balanced} with m = {m}"))?;

        let want_anti = match v {
            Variant::Spectral => !has_adjacent_edges(g),
            Variant::Combinatorial => anti,
        };
        let t_anti = is_antibalanced(&t);
        ensure(t_anti == want_anti, || format!("(ii) T_{v} antibalanced = {t_anti}, expected {want_anti}"))?;

        let lt = ell(&t)?;
        let ll = ell(&line)?;
        ensure(lt >= m + ll, || format!("(iii) ell(T_{v}) = {lt} < {m} + {ll}"))?;
        if v == Variant::Spectral || is_paths_and_cycles(g) {
            ensure(lt == m + ll, || format!("(iii) ell(T_{v}) = {lt} != {m} + {ll}"))?;
        }

        let want_m = match v {
            Variant::Spectral => anti,
            Variant::Combinatorial => is_paths_and_positive_cycles(g),
        };
        ensure((lt == m) == want_m, || format!("(iv) ell(T_{v}) = {lt}, m = {m}, condition {want_m}"))?;

        let nt = frustration_number(&t).value;
        ensure(nt >= tau, || format!("(v) nu(T_{v}) = {nt} < tau = {tau}"))?;
        if v == Variant::Spectral {
            if anti {
                ensure(nt == tau, || format!("(v) nu(T_S) = {nt} != tau = {tau}"))?;
            }
            let nl = frustration_number(&line).value;
            ensure(nt <= tau + nl, || format!("(vi) nu(T_S) = {nt} > {tau} + {nl}"))?;
        }

        if m > 0 {
            let lambda = spectrum(&t, Which::Adjacency).largest().unwrap_or(0.0);
            let bound = lambda_max_bound(&t).map_err(err)?;
            ensure(lambda <= bound + 1e-9, || format!("(vii) λ_max(T_{v}) = {lambda} > {bound}"))?;
        }
    }
    Ok(())
}

fn check_regular_spectrum(g: &SignedGraph, rng: &mut ChaCha8Rng) -> Result<(), String> {
    let eta = Orientation::random(g, rng);
    for v in Variant::BOTH {
        let formula = total_spectrum_formula(g, v).map_err(err)?;
        let direct = spectrum(&total_graph(g, &eta, v).map_err(err)?, Which::Adjacency);
        let diff = formula.max_difference(&direct);
        ensure(diff.is_some_and(|d| d <= 1e-7), || format!("T_{v}: formula differs by {diff:?}"))?;
    }
    Ok(())
}

fn check_interval(g: &SignedGraph, rng: &mut ChaCha8Rng) -> Result<(), String> {
    let eta = Orientation::random(g, rng);
    let r = g.regular_degree().unwrap_or(0);
    for v in Variant::BOTH {
        if v == Variant::Combinatorial && r < 4 {
            continue;
        }
        let (lo, hi) = spectrum_interval(g, v).map_err(err)?;
        let direct = spectrum(&total_graph(g, &eta, v).map_err(err)?, Which::Adjacency);
        let outside = direct.values().iter().find(|&&x| x < lo - 1e-9 || x > hi + 1e-9);
        ensure(outside.is_none(), || format!("T_{v}: eigenvalue {outside:?} outside [{lo}, {hi}]"))?;
    }
    Ok(())
}

fn check_product(g: &SignedGraph, rng: &mut ChaCha8Rng) -> Result<(), String> {
    let other = any_graph(rng, g.vertex_count().max(2)).ok_or("no second factor")?;
    let direct = spectrum(&cartesian_product(g, &other), Which::Adjacency);
    let summed = multiset_sum(&spectrum(g, Which::Adjacency), &spectrum(&other, Which::Adjacency));
    let diff = direct.max_difference(&summed);
    ensure(diff.is_some_and(|d| d <= 1e-7), || format!("product spectrum differs by {diff:?}"))
}

fn check_polynomial(g: &SignedGraph, rng: &mut ChaCha8Rng) -> Result<(), String> {
    let k = rng.random_range(0..=2);
    let mut coefficients: Vec<usize> = (0..=k).map(|_| rng.random_range(0..=2)).collect();
    coefficients[k] = rng.random_range(1..=2);
    let p = PolySpec::new(coefficients.clone()).map_err(err)?;
    let eta = Orientation::random(g, rng);
    let direct = spectrum(&polynomial_compose(&p, g, &eta).map_err(err)?, Which::Adjacency);
    let predicted = polynomial_spectrum(&p, g).map_err(err)?;
    let diff = direct.max_difference(&predicted);
    ensure(diff.is_some_and(|d| d <= 1e-7), || format!("coefficients {coefficients:?}: differs by {diff:?}"))
}

fn check_main(g: &SignedGraph, _: &mut ChaCha8Rng) -> Result<(), String> {
    let r = g.regular_degree().ok_or("not regular")? as f64;
    let eta = eulerian_orientation(g).map_err(err)?;
    let t = total_graph(g, &eta, Variant::Spectral).map_err(err)?;
    let main = main_eigenvalues(&t).map_err(err)?;
    let ok = main.values.len() == 2 && (main.values[0] - r).abs() <= 1e-7 && (main.values[1] + 2.0).abs() <= 1e-7;
    ensure(ok, || format!("main eigenvalues {:?}, expected [{r}, -2]", main.values))
}

fn check_oracle(g: &SignedGraph, _: &mut ChaCha8Rng) -> Result<(), String> {
    let fast = frustration_index(g).map_err(err)?;
    let slow = frustration_index_by_deletion(g);
    ensure(fast.value == slow.value, || format!("switching gives {}, deletion gives {}", fast.value, slow.value))?;
    ensure(balanced_after_edge_deletion(g, &fast.witness), || "witness does not balance".into())
}

fn check_cycle_transfer(g: &SignedGraph, _: &mut ChaCha8Rng) -> Result<(), String> {
    let k = g.vertex_count();
    let mut order = vec![0];
    while order.len() < k {
        let last = *order.last().expect("nonempty");
        let next = g
            .neighbors(last)
            .iter()
            .map(|&(w, _)| w)
            .find(|w| !order.contains(w))
            .ok_or("not a cycle")?;
        order.push(next);
    }
    let sign = cycle_sign(g, &order).ok_or("not a cycle")?;
    // Edge ids around the cycle, in traversal order.
    let edges: Vec<usize> = (0..k)
        .map(|i| g.find_edge(order[i], order[(i + 1) % k]).ok_or("not a cycle"))
        .collect::<Result<_, _>>()?;
    let eta = Orientation::canonical(g);
    let lc = line_graph(g, &eta, Variant::Combinatorial).map_err(err)?;
    let ls = line_graph(g, &eta, Variant::Spectral).map_err(err)?;
    ensure(cycle_sign(&lc, &edges) == Some(sign), || "L_C changed the cycle sign".into())?;
    let want = if k.is_multiple_of(2) { sign } else { -sign };
    ensure(cycle_sign(&ls, &edges) == Some(want), || "L_S cycle sign is wrong".into())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn options(suite: &str, dir: &Path) -> VerifyOptions {
        VerifyOptions { suite: suite.into(), n_max: 5, trials: 10, seed: 3, counterexample_dir: dir.to_path_buf() }
    }

    #[test]
    fn suite_names_are_unique() {
        let mut names: Vec<_> = suites().iter().map(|s| s.name).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), suites().len());
    }

    #[test]
    fn deterministic() {
        let dir = std::env::temp_dir();
        let a = run(&options("total-triangles", &dir)).unwrap();
        let b = run(&options("total-triangles", &dir)).unwrap();
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
        assert!(a.passed());
    }

    #[test]
    fn unknown_suite() {
        assert!(matches!(run(&options("nope", Path::new("."))), Err(VerifyError::UnknownSuite(_))));
    }

    #[test]
    fn failing_check_writes_replayable_file() {
        let dir = tempfile::tempdir().unwrap();
        let g = square_with_pendant();
        let path = write_counterexample(dir.path(), "frustration-oracle", 77, "made up", &g).unwrap();
        let text = fs::read_to_string(&path).unwrap();
        assert_eq!(parse_graph(&text).unwrap(), g);
        let r = replay(&text).unwrap();
        assert_eq!((r.suite.as_str(), r.check_seed), ("frustration-oracle", 77));
        assert_eq!(r.result, Ok(()));
    }

    #[test]
    fn checks_reject_wrong_claims() {
        let g = square_with_pendant();
        let mut rng = check_rng(1);
        assert!(check_oracle(&g, &mut rng).is_ok());
        assert!(check_main(&g, &mut rng).is_err());
    }
}
