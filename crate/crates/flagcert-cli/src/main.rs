//! flagcert: every pipeline stage of the K4⁻ codegree verification as a
//! subcommand, with file outputs, machine-readable stats, and a run
//! manifest.
//!
//! Exit codes: 0 success (and a passing verification), 1 verification
//! failed, 2 input error, 3 cost guard.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;
use sha2::{Digest, Sha256};

use flagcert::certificate::{parse_certificate, verify_certificate, IdentityParts};
use flagcert::constructions::{
    delete_vertices, h6, is_cycle, iterated_blowup, random_tournament, BlowupSpec,
};
use flagcert::density::{GraphBasis, LiftCounts, PairDensityTable};
use flagcert::expressions::{
    codegree_expressions, target_vector, tight_path_expressions, FlagContext,
};
use flagcert::flags::{FlagList, TypeGraph};
use flagcert::hadamard::{skew_hadamard_to_tournament, tournament_to_skew_hadamard};
use flagcert::hypergraph::{enumerate_free, ThreeGraph};
use flagcert::io;
use flagcert::tournaments::{
    delta2, enumerate_tournaments, paley_tournament, realize_as_tournament, t_exact,
    t_upper_bound, Tournament,
};

#[derive(Parser)]
#[command(name = "flagcert", version, about)]
struct Cli {
    /// Cap the number of worker threads.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Directory for output files and the run manifest.
    #[arg(long, global = true, default_value = ".")]
    output_dir: PathBuf,
    /// Stats format on stdout.
    #[arg(long, global = true, default_value = "text", value_parser = ["text", "json"])]
    format: String,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the canonical K4⁻-free 3-graphs on k vertices.
    Enumerate { k: u8 },
    /// Generate the σ-flags on k vertices for a named type.
    Flags { type_name: String, k: u8 },
    /// Expand an expression family over 𝓕₇ (codegree | tightpath | target).
    Expressions { kind: String },
    /// Write a flag pair-density table.
    Pairdensity {
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        k1: u8,
        #[arg(long)]
        k2: u8,
        /// Target graph level (defaults to k1 + k2 − v(σ)).
        #[arg(long)]
        target: Option<u8>,
    },
    /// Verify a certificate file against the identity.
    Verify { cert: PathBuf },
    /// Tournament-side computations.
    Tournaments {
        #[command(subcommand)]
        sub: TournamentCmd,
    },
    /// Skew Hadamard bridge.
    Hadamard {
        #[command(subcommand)]
        sub: HadamardCmd,
    },
    /// Lower-bound constructions.
    Construct {
        #[command(subcommand)]
        sub: ConstructCmd,
    },
}

#[derive(Subcommand)]
enum TournamentCmd {
    /// Enumerate tournaments on k vertices up to isomorphism.
    Enum {
        k: u8,
        /// Also count the tournament-realizable graphs of 𝓕₇.
        #[arg(long)]
        realize_count: bool,
    },
    /// Find a tournament T with C(T) isomorphic to the given graph.
    Realize { graph: String },
    /// Exact t(n) = max δ₂ over tournaments on n vertices.
    Texact { n: u8 },
}

#[derive(Subcommand)]
enum HadamardCmd {
    /// Build the skew Hadamard matrix of order n+1 from a doubly regular
    /// tournament (inline `n:bits` or @file).
    FromTournament { tournament: String },
    /// Read a doubly regular tournament back from a matrix file.
    ToTournament { matrix: PathBuf },
    /// The quadratic-residue tournament on a prime q ≡ 3 (mod 4).
    Paley { q: u64 },
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// Iterated balanced H₆ blow-up with tournament seeds.
    Blowup {
        #[arg(long)]
        n: u16,
        #[arg(long)]
        depth: u32,
        #[arg(long)]
        seed: u64,
        /// Use Paley tournaments in parts of fitting prime size.
        #[arg(long)]
        paley: bool,
    },
    /// Uniformly random tournament from a named seeded generator.
    RandomTournament {
        #[arg(long)]
        n: u8,
        #[arg(long)]
        seed: u64,
    },
    /// Delete the highest-labeled vertices from a tournament.
    Delete {
        #[arg(long)]
        input: String,
        #[arg(long)]
        count: u8,
    },
    /// The 6-vertex Frankl–Füredi graph with 5-cycle links.
    H6,
}

enum Failure {
    Input(String),
    CostGuard(String),
    VerifyFailed,
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::VerifyFailed => 1,
            Failure::Input(_) => 2,
            Failure::CostGuard(_) => 3,
        }
    }
}

#[derive(Serialize)]
struct FileDigest {
    path: String,
    sha256: String,
}

#[derive(Serialize)]
struct RunManifest {
    command: Vec<String>,
    version: String,
    inputs: Vec<FileDigest>,
    outputs: Vec<FileDigest>,
    timing_ms: u128,
}

struct Run {
    output_dir: PathBuf,
    json: bool,
    inputs: Vec<FileDigest>,
    outputs: Vec<FileDigest>,
    started: Instant,
}

impl Run {
    fn new(cli: &Cli) -> Result<Run, Failure> {
        fs::create_dir_all(&cli.output_dir)
            .map_err(|e| Failure::Input(format!("cannot create output dir: {e}")))?;
        Ok(Run {
            output_dir: cli.output_dir.clone(),
            json: cli.format == "json",
            inputs: Vec::new(),
            outputs: Vec::new(),
            started: Instant::now(),
        })
    }

    fn read_input(&mut self, path: &Path) -> Result<String, Failure> {
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
        self.inputs.push(FileDigest {
            path: path.display().to_string(),
            sha256: hex_digest(text.as_bytes()),
        });
        Ok(text)
    }

    fn write_output(&mut self, name: &str, content: &str) -> Result<PathBuf, Failure> {
        let path = self.output_dir.join(name);
        fs::write(&path, content)
            .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display())))?;
        self.outputs.push(FileDigest {
            path: path.display().to_string(),
            sha256: hex_digest(content.as_bytes()),
        });
        Ok(path)
    }

    fn stats(&self, text: String, jsonv: serde_json::Value) {
        if self.json {
            println!("{}", serde_json::to_string_pretty(&jsonv).unwrap());
        } else {
            println!("{text}");
        }
    }

    fn finish(self) -> Result<(), Failure> {
        let manifest = RunManifest {
            command: std::env::args().collect(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            inputs: self.inputs,
            outputs: self.outputs,
            timing_ms: self.started.elapsed().as_millis(),
        };
        let path = self.output_dir.join("manifest.json");
        fs::write(&path, serde_json::to_string_pretty(&manifest).unwrap())
            .map_err(|e| Failure::Input(format!("cannot write manifest: {e}")))?;
        Ok(())
    }
}

fn hex_digest(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    let out = hasher.finalize();
    out.iter().map(|b| format!("{b:02x}")).collect()
}

fn rat_str(r: &flagcert::Rat) -> String {
    if r.denom() == &num::BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Inline `n:bits` or `@path` to a tournament file's first entry.
fn tournament_arg(run: &mut Run, arg: &str) -> Result<Tournament, Failure> {
    let text;
    let line = if let Some(path) = arg.strip_prefix('@') {
        text = run.read_input(Path::new(path))?;
        let parsed = io::read_tournament_list(&text)
            .map_err(|e| Failure::Input(e.to_string()))?;
        return parsed
            .into_iter()
            .next()
            .ok_or_else(|| Failure::Input("tournament file is empty".into()));
    } else {
        arg
    };
    line.parse::<Tournament>()
        .map_err(|e| Failure::Input(e.to_string()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Input(msg) => eprintln!("input error: {msg}"),
                Failure::CostGuard(msg) => eprintln!("cost guard: {msg}"),
                Failure::VerifyFailed => eprintln!("verification failed"),
            }
            ExitCode::from(f.code())
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let mut run = Run::new(cli)?;
    match &cli.command {
        Command::Enumerate { k } => {
            let graphs = enumerate_free(*k).map_err(guard_or_input_g)?;
            let mut hist = std::collections::BTreeMap::new();
            for g in &graphs {
                *hist.entry(g.edge_count()).or_insert(0usize) += 1;
            }
            let path = run.write_output(&format!("graphs_{k}.txt"), &io::write_graph_list(&graphs))?;
            run.stats(
                format!(
                    "enumerated {} K4⁻-free graphs on {k} vertices -> {}\nedge histogram: {:?}",
                    graphs.len(),
                    path.display(),
                    hist
                ),
                json!({"count": graphs.len(), "histogram": hist, "file": path.display().to_string()}),
            );
        }
        Command::Flags { type_name, k } => {
            let sigma = TypeGraph::by_name(type_name).map_err(|e| Failure::Input(e.to_string()))?;
            let list = FlagList::generate(&sigma, *k).map_err(guard_or_input_f)?;
            let path =
                run.write_output(&format!("flags_{type_name}_{k}.txt"), &io::write_flag_list(&list))?;
            run.stats(
                format!("{} {type_name}-flags on {k} vertices -> {}", list.len(), path.display()),
                json!({"type": type_name, "k": k, "count": list.len(), "file": path.display().to_string()}),
            );
        }
        Command::Expressions { kind } => {
            let ctx = FlagContext::build().map_err(|e| Failure::Input(e.to_string()))?;
            let (name, sections) = match kind.as_str() {
                "target" => (
                    "expr_target.txt",
                    vec![("target".to_string(), target_vector(&ctx.f7))],
                ),
                "tightpath" => {
                    let ps = tight_path_expressions(&ctx).map_err(|e| Failure::Input(e.to_string()))?;
                    (
                        "expr_tightpath.txt",
                        ps.into_iter()
                            .enumerate()
                            .map(|(i, p)| (format!("P{i}"), p))
                            .collect(),
                    )
                }
                "codegree" => {
                    let ds = codegree_expressions(&ctx);
                    let n = ctx.f7.len();
                    (
                        "expr_codegree.txt",
                        ds.iter()
                            .map(|d| {
                                let mut dense = vec![flagcert::rat(0, 1); n];
                                for &(g, num) in &d.numer {
                                    dense[g as usize] = flagcert::rat(num, d.denom);
                                }
                                (d.id.clone(), dense)
                            })
                            .collect(),
                    )
                }
                other => {
                    return Err(Failure::Input(format!(
                        "unknown expression kind {other:?} (expected codegree, tightpath or target)"
                    )))
                }
            };
            let count = sections.len();
            let path = run.write_output(name, &io::write_expressions(&sections))?;
            run.stats(
                format!("{count} expression section(s) -> {}", path.display()),
                json!({"kind": kind, "sections": count, "file": path.display().to_string()}),
            );
        }
        Command::Pairdensity { sigma, k1, k2, target } => {
            let sigma_t = TypeGraph::by_name(sigma).map_err(|e| Failure::Input(e.to_string()))?;
            let s = sigma_t.n();
            if *k1 < s || *k2 < s {
                return Err(Failure::Input(format!(
                    "flag sizes must be at least v({sigma}) = {s}"
                )));
            }
            let natural = k1 + k2 - s;
            let target_k = target.unwrap_or(natural);
            if target_k > 7 {
                return Err(Failure::CostGuard("target level beyond 7 vertices".into()));
            }
            let flags1 = FlagList::generate(&sigma_t, *k1).map_err(guard_or_input_f)?;
            let flags2 = FlagList::generate(&sigma_t, *k2).map_err(guard_or_input_f)?;
            let basis = GraphBasis::new(target_k).map_err(guard_or_input_g)?;
            let table = if target_k == natural {
                PairDensityTable::direct(&flags1, &flags2, &basis).map_err(guard_or_input_f)?
            } else {
                let mid = GraphBasis::new(natural).map_err(guard_or_input_g)?;
                let lift = LiftCounts::new(&mid, &basis);
                PairDensityTable::composed(&flags1, &flags2, &mid, &lift, &basis)
                    .map_err(guard_or_input_f)?
            };
            let name = format!("pairdensity_{sigma}_{k1}_{k2}_{target_k}.txt");
            let path = run.write_output(&name, &io::write_pair_density(&table))?;
            run.stats(
                format!(
                    "pair densities for {} x {} {sigma}-flags over F{target_k} -> {}",
                    flags1.len(),
                    flags2.len(),
                    path.display()
                ),
                json!({"sigma": sigma, "k1": k1, "k2": k2, "target": target_k,
                       "flags1": flags1.len(), "flags2": flags2.len(),
                       "file": path.display().to_string()}),
            );
        }
        Command::Verify { cert } => {
            let text = run.read_input(cert)?;
            let cert = parse_certificate(&text).map_err(|e| Failure::Input(e.to_string()))?;
            let ctx = FlagContext::build().map_err(|e| Failure::Input(e.to_string()))?;
            let parts = IdentityParts::build(&ctx).map_err(|e| Failure::Input(e.to_string()))?;
            let (verdict, slack) =
                verify_certificate(&cert, &ctx, &parts).map_err(|e| Failure::Input(e.to_string()))?;
            let slack_path =
                run.write_output("slack.txt", &io::write_expressions(&[("slack".into(), slack.clone())]))?;
            let witness = verdict.first_negative.map(|g| {
                format!(
                    "first negative slack at graph {g} ({}) = {}",
                    ctx.f7.graphs[g],
                    rat_str(&slack[g])
                )
            });
            run.stats(
                format!(
                    "psd_ok={} positivity_ok={} slack_ok={} support_ok={} pass={}\n\
                     slacks: {} positive, {} zero, {} negative -> {}{}",
                    verdict.psd_ok,
                    verdict.positivity_ok,
                    verdict.slack_ok,
                    verdict.support_ok,
                    verdict.pass,
                    verdict.positive_slacks,
                    verdict.zero_slacks,
                    verdict.negative_slacks,
                    slack_path.display(),
                    witness.map(|w| format!("\n{w}")).unwrap_or_default()
                ),
                json!({
                    "psd_ok": verdict.psd_ok,
                    "positivity_ok": verdict.positivity_ok,
                    "slack_ok": verdict.slack_ok,
                    "support_ok": verdict.support_ok,
                    "pass": verdict.pass,
                    "positive_slacks": verdict.positive_slacks,
                    "zero_slacks": verdict.zero_slacks,
                    "negative_slacks": verdict.negative_slacks,
                    "slack_file": slack_path.display().to_string(),
                }),
            );
            if !verdict.pass {
                run.finish()?;
                return Err(Failure::VerifyFailed);
            }
        }
        Command::Tournaments { sub } => match sub {
            TournamentCmd::Enum { k, realize_count } => {
                let ts = enumerate_tournaments(*k).map_err(guard_or_input_t)?;
                let path =
                    run.write_output(&format!("tournaments_{k}.txt"), &io::write_tournament_list(&ts))?;
                let mut text = format!("{} non-isomorphic tournaments on {k} vertices -> {}", ts.len(), path.display());
                let mut j = json!({"count": ts.len(), "file": path.display().to_string()});
                if *realize_count {
                    let f7 = enumerate_free(7).map_err(guard_or_input_g)?;
                    let realizable = f7
                        .iter()
                        .filter(|g| realize_as_tournament(g).is_some())
                        .count();
                    text.push_str(&format!("\n{}\n{realizable}", ts.len()));
                    j["realizable_in_F7"] = json!(realizable);
                }
                run.stats(text, j);
            }
            TournamentCmd::Realize { graph } => {
                let g: ThreeGraph = graph.parse().map_err(|e: flagcert::GraphError| Failure::Input(e.to_string()))?;
                match realize_as_tournament(&g) {
                    Some(t) => {
                        let path = run.write_output("realized_tournament.txt", &io::write_tournament_list(&[t.clone()]))?;
                        run.stats(
                            format!("realizable: {t} -> {}", path.display()),
                            json!({"realizable": true, "tournament": t.to_string(), "file": path.display().to_string()}),
                        );
                    }
                    None => {
                        run.stats(
                            "not tournament-realizable".to_string(),
                            json!({"realizable": false}),
                        );
                    }
                }
            }
            TournamentCmd::Texact { n } => {
                let value = t_exact(*n).map_err(guard_or_input_t)?;
                let bound = t_upper_bound(*n).map_err(guard_or_input_t)?;
                let path = run.write_output(
                    &format!("texact_{n}.txt"),
                    &format!("n={n}
t_exact={value}
upper_bound={bound}
"),
                )?;
                run.stats(
                    format!("t({n}) = {value} (upper bound {bound}) -> {}", path.display()),
                    json!({"n": n, "t_exact": value, "upper_bound": bound, "file": path.display().to_string()}),
                );
            }
        },
        Command::Hadamard { sub } => match sub {
            HadamardCmd::FromTournament { tournament } => {
                let t = tournament_arg(&mut run, tournament)?;
                let h = tournament_to_skew_hadamard(&t).map_err(|e| Failure::Input(e.to_string()))?;
                let path = run.write_output(&format!("hadamard_{}.txt", h.order()), &io::write_matrix(&h))?;
                run.stats(
                    format!("skew Hadamard matrix of order {} -> {}", h.order(), path.display()),
                    json!({"order": h.order(), "file": path.display().to_string()}),
                );
            }
            HadamardCmd::ToTournament { matrix } => {
                let text = run.read_input(matrix)?;
                let h = io::read_matrix(&text).map_err(|e| Failure::Input(e.to_string()))?;
                let t = skew_hadamard_to_tournament(&h).map_err(|e| Failure::Input(e.to_string()))?;
                let d2 = delta2(&t);
                let path = run.write_output(&format!("tournament_{}.txt", t.n()), &io::write_tournament_list(&[t.clone()]))?;
                run.stats(
                    format!("doubly regular tournament on {} vertices, δ₂ = {d2} -> {}", t.n(), path.display()),
                    json!({"n": t.n(), "delta2": d2, "file": path.display().to_string()}),
                );
            }
            HadamardCmd::Paley { q } => {
                let t = paley_tournament(*q).map_err(|e| Failure::Input(e.to_string()))?;
                let d2 = delta2(&t);
                let path = run.write_output(&format!("paley_{q}.txt"), &io::write_tournament_list(&[t.clone()]))?;
                run.stats(
                    format!("Paley tournament on {q} vertices, δ₂ = {d2} -> {}", path.display()),
                    json!({"q": q, "delta2": d2, "file": path.display().to_string()}),
                );
            }
        },
        Command::Construct { sub } => match sub {
            ConstructCmd::Blowup { n, depth, seed, paley } => {
                let spec = BlowupSpec { n: *n, depth: *depth, seed: *seed, paley: *paley };
                let result = iterated_blowup(&spec).map_err(guard_or_input_c)?;
                let free = if *n <= 60 {
                    Some(result.graph.is_k4minus_free_exhaustive().map_err(guard_or_input_c)?)
                } else {
                    None
                };
                let path = run.write_output(
                    &format!("blowup_n{n}_t{depth}_s{seed}.txt"),
                    &io::write_large_system(&result.graph),
                )?;
                run.stats(
                    format!(
                        "blow-up n={n} depth={depth} seed={seed}: {} edges, δ₂ = {}, density = {}\n\
                         reference edge count (2/7 − 6^(−2t)/28)·C(n,3) = {}{} -> {}",
                        result.edge_count,
                        result.min_codegree,
                        rat_str(&result.density),
                        rat_str(&result.reference_edges),
                        free.map(|f| format!("\nK4⁻-free (exhaustive): {f}")).unwrap_or_default(),
                        path.display()
                    ),
                    json!({
                        "n": n, "depth": depth, "seed": seed, "paley": paley,
                        "edge_count": result.edge_count,
                        "min_codegree": result.min_codegree,
                        "density": rat_str(&result.density),
                        "reference_edges": rat_str(&result.reference_edges),
                        "k4minus_free": free,
                        "file": path.display().to_string(),
                    }),
                );
            }
            ConstructCmd::RandomTournament { n, seed } => {
                let t = random_tournament(*n, *seed);
                let d2 = delta2(&t);
                let path = run.write_output(
                    &format!("random_tournament_n{n}_s{seed}.txt"),
                    &io::write_tournament_list(&[t.clone()]),
                )?;
                run.stats(
                    format!("random tournament n={n} seed={seed}: δ₂ = {d2} -> {}", path.display()),
                    json!({"n": n, "seed": seed, "delta2": d2, "file": path.display().to_string()}),
                );
            }
            ConstructCmd::Delete { input, count } => {
                let t = tournament_arg(&mut run, input)?;
                let (smaller, d2) =
                    delete_vertices(&t, *count).map_err(|e| Failure::Input(e.to_string()))?;
                let path = run.write_output(
                    &format!("deleted_{}.txt", smaller.n()),
                    &io::write_tournament_list(&[smaller.clone()]),
                )?;
                run.stats(
                    format!("deleted {count} vertices: n = {}, δ₂ = {d2} -> {}", smaller.n(), path.display()),
                    json!({"n": smaller.n(), "count": count, "delta2": d2, "file": path.display().to_string()}),
                );
            }
            ConstructCmd::H6 => {
                let g = h6();
                let links_ok = (1..=6).all(|v| is_cycle(&g.link(v), 5));
                let path = run.write_output("h6.txt", &io::write_graph_list(&[g.clone()]))?;
                run.stats(
                    format!(
                        "H6: {} edges, all links 5-cycles: {links_ok}, K4⁻-free: {} -> {}",
                        g.edge_count(),
                        g.is_k4minus_free(),
                        path.display()
                    ),
                    json!({"edge_count": g.edge_count(), "links_are_5_cycles": links_ok,
                           "k4minus_free": g.is_k4minus_free(), "file": path.display().to_string()}),
                );
            }
        },
    }
    run.finish()
}

fn guard_or_input_f(e: flagcert::flags::FlagError) -> Failure {
    match e {
        flagcert::flags::FlagError::SizeGuard(..)
        | flagcert::flags::FlagError::Graph(flagcert::GraphError::SizeGuard(..)) => {
            Failure::CostGuard(e.to_string())
        }
        _ => Failure::Input(e.to_string()),
    }
}

fn guard_or_input_g(e: flagcert::GraphError) -> Failure {
    match e {
        flagcert::GraphError::SizeGuard(..) => Failure::CostGuard(e.to_string()),
        _ => Failure::Input(e.to_string()),
    }
}

fn guard_or_input_t(e: flagcert::tournaments::TournamentError) -> Failure {
    match e {
        flagcert::tournaments::TournamentError::SizeGuard(..) => Failure::CostGuard(e.to_string()),
        _ => Failure::Input(e.to_string()),
    }
}

fn guard_or_input_c(e: flagcert::constructions::ConstructionError) -> Failure {
    use flagcert::constructions::ConstructionError::*;
    match e {
        SizeGuard(..) | CheckGuard(..) | TooFewVertices(..) => Failure::CostGuard(e.to_string()),
        _ => Failure::Input(e.to_string()),
    }
}
