use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use proptest::prelude::*;
use signed_total::{Orientation, Sign, SignedGraph};
use signed_total_cli::formats::{parse_graph, parse_orientation, write_graph, write_orientation};

fn sgtotal(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_sgtotal"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn sgtotal");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn ok(args: &[&str], stdin: &str) -> String {
    let out = sgtotal(args, stdin);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn in_dir(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sgtotal")).current_dir(dir).args(args).output().unwrap()
}

fn graph_strategy() -> impl Strategy<Value = SignedGraph> {
    (1usize..8).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let count = pairs.len();
        proptest::collection::vec(0u8..3, count).prop_map(move |choice| {
            let edges = pairs.iter().zip(&choice).filter_map(|(&(u, v), &c)| match c {
                1 => Some((u, v, Sign::Plus)),
                2 => Some((u, v, Sign::Minus)),
                _ => None,
            });
            SignedGraph::new(n, edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn graph_file_round_trip(g in graph_strategy()) {
        prop_assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn orientation_file_round_trip(g in graph_strategy(), seed in any::<u64>()) {
        use rand::SeedableRng;
        let eta = Orientation::random(&g, &mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let back = parse_orientation(&write_orientation(&eta), &g).unwrap();
        prop_assert_eq!(back.etas(), eta.etas());
        prop_assert_eq!(back.checksum(), eta.checksum());
    }
}

#[test]
fn frustration_of_unbalanced_square() {
    let g = ok(&["gen", "--family", "cycle", "--n", "4", "--signs", "+++-"], "");
    let out = ok(&["invariant", "frustration-index"], &g);
    assert_eq!(out.lines().next(), Some("frustration-index 1"));
}

#[test]
fn spectral_line_graph_of_negative_triangle_is_balanced() {
    let g = ok(&["gen", "--family", "complete", "--n", "3", "--signs", "-"], "");
    let ls = ok(&["op", "ls"], &g);
    let out = ok(&["invariant", "balance"], &ls);
    assert_eq!(out.lines().next(), Some("balanced yes"));
}

#[test]
fn orientation_file_drives_operator() {
    let dir = tempfile::tempdir().unwrap();
    let g = ok(&["gen", "--family", "random", "--n", "6", "--seed", "3"], "");
    let eta = ok(&["orient", "--mode", "seeded", "--seed", "9"], &g);
    let eta_path = dir.path().join("g.or");
    std::fs::write(&eta_path, eta).unwrap();
    let tc = ok(&["op", "tc", "--orientation", eta_path.to_str().unwrap()], &g);
    let parsed = parse_graph(&tc).unwrap();
    let base = parse_graph(&g).unwrap();
    assert_eq!(parsed.vertex_count(), base.vertex_count() + base.edge_count());
}

#[test]
fn verify_all_suites_pass() {
    let dir = tempfile::tempdir().unwrap();
    let out = in_dir(dir.path(), &["verify", "--suite", "all", "--n-max", "6", "--trials", "100", "--seed", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    for s in signed_total_cli::verify::suites() {
        assert!(text.lines().any(|l| l.starts_with("PASS") && l.contains(s.name)), "{} missing", s.name);
    }
    assert!(!dir.path().join("counterexamples").exists());
}

#[test]
fn verify_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["verify", "--n-max", "5", "--trials", "20", "--seed", "42", "--json"];
    let a = in_dir(dir.path(), &args);
    let b = in_dir(dir.path(), &args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let report: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(report["suites"].as_array().unwrap().len(), signed_total_cli::verify::suites().len());
}

#[test]
fn dot_export() {
    let g = ok(&["gen", "--family", "cycle", "--n", "3", "--signs", "+-+"], "");
    let dot = ok(&["export-dot", "--name", "tri"], &g);
    assert!(dot.starts_with("graph \"tri\" {"));
    assert!(dot.trim_end().ends_with('}'));
    assert_eq!(dot.matches(" -- ").count(), 3);
    assert_eq!(dot.matches("style=dashed").count(), 1);
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k4.sg");
    ok(&["gen", "--family", "complete", "--n", "4", "-o", path.to_str().unwrap()], "");
    let g = parse_graph(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(g.edge_count(), 6);
    let out = ok(&["spectrum", "-i", path.to_str().unwrap()], "");
    assert!(out.contains("\n3 1\n") && out.contains("\n-1 3\n"), "{out}");
}

#[test]
fn regular_formula_and_main_eigenvalues() {
    let g = ok(&["gen", "--family", "cycle", "--n", "5"], "");
    let out = ok(&["spectrum-formula", "--variant", "ts", "--interval"], &g);
    assert!(out.lines().any(|l| l.starts_with("interval ")));
    let eta = ok(&["orient", "--mode", "eulerian"], &g);
    let dir = tempfile::tempdir().unwrap();
    let eta_path = dir.path().join("c5.or");
    std::fs::write(&eta_path, eta).unwrap();
    let ts = ok(&["op", "ts", "--orientation", eta_path.to_str().unwrap()], &g);
    let main = ok(&["main-eigenvalues"], &ts);
    assert!(main.starts_with("main-count 2\nmain-eigenvalue 2 "), "{main}");
    assert!(main.contains("main-eigenvalue -2 "), "{main}");
}

#[test]
fn product_and_poly() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.sg");
    let b = dir.path().join("b.sg");
    std::fs::write(&a, ok(&["gen", "--family", "path", "--n", "2"], "")).unwrap();
    std::fs::write(&b, ok(&["gen", "--family", "cycle", "--n", "3", "--signs", "-"], "")).unwrap();
    let prism = parse_graph(&ok(&["product", "--a", a.to_str().unwrap(), "--b", b.to_str().unwrap()], "")).unwrap();
    assert_eq!((prism.vertex_count(), prism.edge_count()), (6, 9));

    let c4 = ok(&["gen", "--family", "cycle", "--n", "4"], "");
    let composed = parse_graph(&ok(&["poly", "--coeffs", "0,1,1"], &c4)).unwrap();
    assert_eq!(composed.vertex_count(), 4 * 8);
    let predicted = ok(&["poly", "--coeffs", "0,1,1", "--spectrum"], &c4);
    let total: usize = predicted.lines().skip(1).map(|l| l.split(' ').nth(1).unwrap().parse::<usize>().unwrap()).sum();
    assert_eq!(total, 32);
}

#[test]
fn malformed_input_exits_2() {
    for (args, stdin) in [
        (vec!["invariant", "balance"], "SG 1\nn 2\ne 0 5 +\n"),
        (vec!["spectrum"], "not a graph"),
        (vec!["spectrum-formula", "--variant", "tc"], "SG 1\nn 3\ne 0 1 +\n"),
        (vec!["orient", "--mode", "eulerian"], "SG 1\nn 2\ne 0 1 +\n"),
        (vec!["gen", "--family", "regular", "--n", "5"], ""),
        (vec!["gen", "--family", "bogus", "--n", "5"], ""),
        (vec!["verify", "--suite", "nope"], ""),
    ] {
        let out = sgtotal(&args, stdin);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn replay_counterexample_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cx.sg");
    let body = ok(&["gen", "--family", "cycle", "--n", "5", "--signs", "+-+-+"], "");
    std::fs::write(&path, format!("# suite line-balance\n# check-seed 5\n{body}")).unwrap();
    let out = ok(&["verify", "--replay", path.to_str().unwrap()], "");
    assert_eq!(out, "PASS line-balance check-seed 5\n");
}

#[test]
fn unbalanced_graph_prints_negative_cycle() {
    let text = ok(&["gen", "--family", "random", "--n", "7", "--p", "0.6", "--seed", "11"], "");
    let g = parse_graph(&text).unwrap();
    let out = ok(&["invariant", "balance"], &text);
    assert!(out.starts_with("balanced no\n"), "{out}");
    let cycle: Vec<usize> = out.lines().nth(1).unwrap().split(' ').skip(1).map(|v| v.parse().unwrap()).collect();
    assert_eq!(signed_total::operators::cycle_sign(&g, &cycle), Some(Sign::Minus));
}
