use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use signed_total::generators::random_regular_with;
use signed_total::*;
use signed_total_cli::dot::to_dot;
use signed_total_cli::formats::{parse_graph, parse_orientation, write_graph, write_orientation};
use signed_total_cli::number::fmt_num;
use signed_total_cli::verify::{self, VerifyOptions};

/// Signed graphs, their line and total graphs, and checks of their properties.
#[derive(Parser)]
#[command(name = "sgtotal", version)]
struct Cli {
    /// Graph file to read (stdin when omitted).
    #[arg(short, long, global = true)]
    input: Option<PathBuf>,
    /// File to write (stdout when omitted).
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph.
    Gen {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        /// `+`/`-` per edge, or one character for all edges.
        #[arg(long, default_value = "+")]
        signs: String,
        /// Edge probability for `random`.
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        /// Probability that an edge is negative, for `random` and `regular`.
        #[arg(long, default_value_t = 0.5)]
        neg_p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Vertex degree for `regular`.
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Choose an orientation satisfying the sign rule.
    Orient {
        #[arg(long, value_enum, default_value = "canonical")]
        mode: ModeArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Apply a line or total graph operator.
    Op {
        #[arg(value_enum)]
        operator: OperatorArg,
        /// Orientation file; the canonical orientation when omitted.
        #[arg(long)]
        orientation: Option<PathBuf>,
    },
    /// Switch at a set of vertices.
    Switch {
        /// Comma-separated vertex ids.
        #[arg(long, value_delimiter = ',')]
        set: Vec<usize>,
    },
    /// Compute a balance or frustration invariant with its witness.
    Invariant {
        #[arg(value_enum)]
        kind: InvariantArg,
    },
    /// Eigenvalues with multiplicities.
    Spectrum {
        /// Use the signed Laplacian instead of the adjacency matrix.
        #[arg(long)]
        laplacian: bool,
    },
    /// Spectrum of a total graph of a regular graph, from the graph's own spectrum.
    SpectrumFormula {
        #[arg(long, value_enum)]
        variant: TotalArg,
        /// Also print the interval containing the spectrum.
        #[arg(long)]
        interval: bool,
    },
    /// Eigenvalues whose eigenspace is not orthogonal to the all-ones vector.
    MainEigenvalues,
    /// Degree bound on the largest adjacency eigenvalue, next to the actual value.
    BoundLambdaMax,
    /// Cartesian product of two graph files.
    Product {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
    /// Polynomial composition c0 K1 + c1 G + c2 T(G) + ... under Cartesian products.
    Poly {
        /// Comma-separated coefficients c0,c1,...
        #[arg(long, value_delimiter = ',', required = true)]
        coeffs: Vec<usize>,
        #[arg(long)]
        orientation: Option<PathBuf>,
        /// Print the predicted spectrum instead of the graph.
        #[arg(long)]
        spectrum: bool,
    },
    /// Graphviz rendering, negative edges dashed.
    ExportDot {
        #[arg(long, default_value = "G")]
        name: String,
    },
    /// Check the theorems on random and fixed instances.
    Verify {
        /// Suite name, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value = "counterexamples")]
        counterexample_dir: PathBuf,
        /// Rerun the check stored in a counterexample file.
        #[arg(long)]
        replay: Option<PathBuf>,
        /// Print the suite names and exit.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Path,
    Cycle,
    Complete,
    Star,
    Random,
    Regular,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Canonical,
    Seeded,
    Eulerian,
}

#[derive(Clone, Copy, ValueEnum)]
enum OperatorArg {
    Lc,
    Ls,
    Tc,
    Ts,
}

#[derive(Clone, Copy, ValueEnum)]
enum TotalArg {
    Tc,
    Ts,
}

#[derive(Clone, Copy, ValueEnum)]
enum InvariantArg {
    Balance,
    Antibalance,
    FrustrationIndex,
    FrustrationNumber,
    VertexCover,
    Triangles,
}

/// A failed run: exit 1 for a failed verification, 2 for anything else.
struct Failure {
    code: u8,
    message: String,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure { code: 2, message: e.to_string() }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(text) => match emit(cli.output.as_deref(), &text) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("sgtotal: {e}");
                ExitCode::from(2)
            }
        },
        Err(Failure { code, message }) => {
            if !message.is_empty() {
                eprintln!("sgtotal: {message}");
            }
            ExitCode::from(code)
        }
    }
}

fn emit(path: Option<&Path>, text: &str) -> io::Result<()> {
    match path {
        Some(p) => fs::write(p, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::from(format!("{}: {e}", path.display())))
}

fn read_input(path: Option<&Path>) -> Result<String, Failure> {
    match path {
        Some(p) => read_file(p),
        None => {
            let mut text = String::new();
            io::stdin().read_to_string(&mut text)?;
            Ok(text)
        }
    }
}

fn input_graph(cli: &Cli) -> Result<SignedGraph, Failure> {
    Ok(parse_graph(&read_input(cli.input.as_deref())?)?)
}

fn orientation_for(g: &SignedGraph, path: Option<&Path>) -> Result<Orientation, Failure> {
    match path {
        Some(p) => Ok(parse_orientation(&read_file(p)?, g)?),
        None => Ok(Orientation::canonical(g)),
    }
}

fn ids(values: &[usize]) -> String {
    values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn keyed(key: &str, values: &[usize]) -> String {
    if values.is_empty() {
        format!("{key}\n")
    } else {
        format!("{key} {}\n", ids(values))
    }
}

/// Vertices of a cycle with negative sign product, for an unbalanced graph.
fn negative_cycle(g: &SignedGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut potential = vec![Sign::Plus; n];
    for root in 0..n {
        if parent[root] != usize::MAX {
            continue;
        }
        parent[root] = root;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &(w, e) in g.neighbors(u) {
                if parent[w] == usize::MAX {
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    potential[w] = potential[u] * g.edge(e).sign;
                    queue.push_back(w);
                }
            }
        }
    }
    let Some(bad) = g.edges().iter().find(|e| potential[e.u] * potential[e.v] != e.sign) else {
        return Vec::new();
    };
    let (mut a, mut b) = (bad.u, bad.v);
    let (mut up, mut down) = (vec![a], vec![b]);
    while a != b {
        if depth[a] >= depth[b] {
            a = parent[a];
            up.push(a);
        } else {
            b = parent[b];
            down.push(b);
        }
    }
    down.pop();
    up.extend(down.into_iter().rev());
    up
}

fn grouped(s: &Spectrum) -> String {
    let mut out = String::from("# eigenvalue multiplicity\n");
    for (x, k) in s.grouped() {
        out.push_str(&format!("{} {k}\n", fmt_num(x)));
    }
    out
}

fn run(cli: &Cli) -> Result<String, Failure> {
    match &cli.command {
        Command::Gen { family: kind, n, signs, p, neg_p, seed, degree } => {
            let g = match kind {
                FamilyArg::Random => random_graph(*n, *p, *neg_p, *seed)?,
                FamilyArg::Regular => {
                    let degree = degree.ok_or("--degree is required for the regular family")?;
                    random_regular_with(&mut ChaCha8Rng::seed_from_u64(*seed), *n, degree, *neg_p)?
                }
                FamilyArg::Path | FamilyArg::Cycle | FamilyArg::Complete | FamilyArg::Star => {
                    let kind = match kind {
                        FamilyArg::Path => Family::Path,
                        FamilyArg::Cycle => Family::Cycle,
                        FamilyArg::Complete => Family::Complete,
                        _ => Family::Star,
                    };
                    let pattern = SignPattern::parse(signs).ok_or_else(|| format!("bad sign pattern `{signs}`"))?;
                    family(kind, *n, &pattern)?
                }
            };
            Ok(write_graph(&g))
        }
        Command::Orient { mode, seed } => {
            let g = input_graph(cli)?;
            let eta = match mode {
                ModeArg::Canonical => orient(&g, OrientMode::Canonical),
                ModeArg::Seeded => orient(&g, OrientMode::Seeded(*seed)),
                ModeArg::Eulerian => eulerian_orientation(&g)?,
            };
            Ok(write_orientation(&eta))
        }
        Command::Op { operator, orientation } => {
            let g = input_graph(cli)?;
            let eta = orientation_for(&g, orientation.as_deref())?;
            let h = match operator {
                OperatorArg::Lc => line_graph(&g, &eta, Variant::Combinatorial)?,
                OperatorArg::Ls => line_graph(&g, &eta, Variant::Spectral)?,
                OperatorArg::Tc => total_graph(&g, &eta, Variant::Combinatorial)?,
                OperatorArg::Ts => total_graph(&g, &eta, Variant::Spectral)?,
            };
            Ok(write_graph(&h))
        }
        Command::Switch { set } => {
            let g = input_graph(cli)?;
            Ok(write_graph(&switch(&g, set)?))
        }
        Command::Invariant { kind } => {
            let g = input_graph(cli)?;
            Ok(match kind {
                InvariantArg::Balance => match is_balanced(&g) {
                    Some(w) => format!("balanced yes\n{}", keyed("switching-set", &w.set)),
                    None => format!("balanced no\n{}", keyed("negative-cycle", &negative_cycle(&g))),
                },
                InvariantArg::Antibalance => match is_balanced(&g.negate()) {
                    Some(w) => format!("antibalanced yes\n{}", keyed("switching-set", &w.set)),
                    None => format!("antibalanced no\n{}", keyed("positive-cycle", &negative_cycle(&g.negate()))),
                },
                InvariantArg::FrustrationIndex => {
                    let r = frustration_index(&g)?;
                    format!("frustration-index {}\n{}", r.value, keyed("witness-edges", &r.witness))
                }
                InvariantArg::FrustrationNumber => {
                    let r = frustration_number(&g);
                    format!("frustration-number {}\n{}", r.value, keyed("witness-vertices", &r.witness))
                }
                InvariantArg::VertexCover => {
                    let c = vertex_cover_number(&g);
                    format!("vertex-cover {}\n{}", c.size, keyed("vertices", &c.vertices))
                }
                InvariantArg::Triangles => {
                    let t = triangle_census(&g);
                    format!("triangles {}\npositive {}\nnegative {}\n", t.total(), t.positive, t.negative)
                }
            })
        }
        Command::Spectrum { laplacian } => {
            let g = input_graph(cli)?;
            let which = if *laplacian { Which::Laplacian } else { Which::Adjacency };
            Ok(grouped(&spectrum(&g, which)))
        }
        Command::SpectrumFormula { variant, interval } => {
            let g = input_graph(cli)?;
            let variant = match variant {
                TotalArg::Tc => Variant::Combinatorial,
                TotalArg::Ts => Variant::Spectral,
            };
            let mut out = grouped(&total_spectrum_formula(&g, variant)?);
            if *interval {
                let (lo, hi) = spectrum_interval(&g, variant)?;
                out.push_str(&format!("interval {} {}\n", fmt_num(lo), fmt_num(hi)));
            }
            Ok(out)
        }
        Command::MainEigenvalues => {
            let g = input_graph(cli)?;
            let main = main_eigenvalues(&g)?;
            let mut out = format!("main-count {}\n", main.values.len());
            for (x, p) in main.values.iter().zip(&main.projections) {
                out.push_str(&format!("main-eigenvalue {} projection {}\n", fmt_num(*x), fmt_num(*p)));
            }
            Ok(out)
        }
        Command::BoundLambdaMax => {
            let g = input_graph(cli)?;
            let bound = lambda_max_bound(&g)?;
            let lambda = spectrum(&g, Which::Adjacency).largest().unwrap_or(0.0);
            Ok(format!("bound {}\nlambda-max {}\n", fmt_num(bound), fmt_num(lambda)))
        }
        Command::Product { a, b } => {
            let a = parse_graph(&read_file(a)?)?;
            let b = parse_graph(&read_file(b)?)?;
            Ok(write_graph(&cartesian_product(&a, &b)))
        }
        Command::Poly { coeffs, orientation, spectrum: predicted } => {
            let g = input_graph(cli)?;
            let p = PolySpec::new(coeffs.clone())?;
            if *predicted {
                Ok(grouped(&polynomial_spectrum(&p, &g)?))
            } else {
                let eta = orientation_for(&g, orientation.as_deref())?;
                Ok(write_graph(&polynomial_compose(&p, &g, &eta)?))
            }
        }
        Command::ExportDot { name } => Ok(to_dot(&input_graph(cli)?, name)),
        Command::Verify { suite, n_max, trials, seed, json, counterexample_dir, replay, list } => {
            if *list {
                return Ok(verify::suites().iter().map(|s| format!("{} {}\n", s.name, s.anchor)).collect());
            }
            if let Some(path) = replay {
                let r = verify::replay(&read_file(path)?)?;
                let text = if *json {
                    format!("{}\n", serde_json::to_string_pretty(&r)?)
                } else {
                    match &r.result {
                        Ok(()) => format!("PASS {} check-seed {}\n", r.suite, r.check_seed),
                        Err(m) => format!("FAIL {} check-seed {}: {m}\n", r.suite, r.check_seed),
                    }
                };
                return finish(cli, text, r.result.is_ok());
            }
            let options = VerifyOptions {
                suite: suite.clone(),
                n_max: *n_max,
                trials: *trials,
                seed: *seed,
                counterexample_dir: counterexample_dir.clone(),
            };
            let report = verify::run(&options)?;
            let text = if *json {
                format!("{}\n", serde_json::to_string_pretty(&report)?)
            } else {
                report.render()
            };
            finish(cli, text, report.passed())
        }
    }
}

/// Passing runs return their text; failing ones write it and exit 1.
fn finish(cli: &Cli, text: String, passed: bool) -> Result<String, Failure> {
    if passed {
        return Ok(text);
    }
    emit(cli.output.as_deref(), &text)?;
    Err(Failure { code: 1, message: String::new() })
}
