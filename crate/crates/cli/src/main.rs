use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use arctype::constructions::{build_family, cycle, describe, factor_prime, registry_entry, TABLE1};
use arctype::partitions::{count_marked, count_plain};
use arctype::realize::{realize, CertificateMode, RealizeConfig, VerifyMode};
use arctype::symmetry::{analyze, arc_type_with};
use arctype::{AutConfig, Error, Graph, MarkedPartition};

#[derive(Parser)]
#[command(name = "arctype", version, about = "Arc-types of vertex-transitive graphs")]
struct Cli {
    /// Node budget for the automorphism search.
    #[arg(long, global = true, default_value_t = AutConfig::default().budget)]
    aut_budget: u64,

    /// Largest graph whose arc-type `realize` verifies directly.
    #[arg(long, global = true, default_value_t = 1500)]
    verify_max_vertices: usize,

    /// Write the constructed graph (construct, realize) or the report (other
    /// commands) to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Reserved; no command uses randomness.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Automorphism group, transitivity flags, edge-type and arc-type of a graph file.
    Analyze {
        path: PathBuf,
        /// Exit with an error when the graph is not vertex-transitive.
        #[arg(long)]
        require_vt: bool,
    },
    /// Build a graph from a family spec such as `circulant:7:1,2` or `named:holt`.
    Construct { spec: String },
    /// Synthesize and certify a graph with the given arc-type.
    Realize {
        arc_type: String,
        #[arg(long, value_enum, default_value_t = Verify::Auto)]
        verify: Verify,
    },
    /// Prime factorization with respect to the Cartesian product.
    Factor { path: PathBuf },
    /// Number of partitions and marked partitions of 1..=d.
    CountTypes { d: usize },
    /// Rebuild the valency <= 4 table and check every row.
    Table1,
}

#[derive(Clone, Copy, ValueEnum)]
enum Verify {
    Auto,
    Direct,
    Compositional,
    Off,
}

impl From<Verify> for VerifyMode {
    fn from(v: Verify) -> VerifyMode {
        match v {
            Verify::Auto => VerifyMode::Auto,
            Verify::Direct => VerifyMode::Direct,
            Verify::Compositional => VerifyMode::Compositional,
            Verify::Off => VerifyMode::Off,
        }
    }
}

/// A command failure after part of the report was produced.
struct Failure {
    report: String,
    message: String,
}

type Outcome = std::result::Result<String, Failure>;

fn fail(report: String, message: impl ToString) -> Failure {
    Failure {
        report,
        message: message.to_string(),
    }
}

fn load(path: &Path) -> Result<Graph, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    Graph::from_edge_list(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_analyze(path: &Path, require_vt: bool, aut: &AutConfig) -> Outcome {
    let g = load(path).map_err(|e| fail(String::new(), e))?;
    let mut r = String::new();
    writeln!(r, "n: {}", g.n()).unwrap();
    writeln!(r, "m: {}", g.edge_count()).unwrap();
    match g.valency() {
        Some(k) => writeln!(r, "valency: {k}").unwrap(),
        None => writeln!(r, "valency: irregular").unwrap(),
    }
    writeln!(r, "connected: {}", yes_no(g.n() > 0 && g.is_connected())).unwrap();
    let a = match analyze(&g, aut) {
        Ok(a) => a,
        Err(e) => return Err(fail(r, e)),
    };
    let c = &a.classification;
    writeln!(r, "aut-order: {}", c.aut_order).unwrap();
    writeln!(r, "vertex-orbits: {}", c.vertex_orbits).unwrap();
    writeln!(r, "edge-orbits: {}", c.edge_orbits).unwrap();
    writeln!(r, "arc-orbits: {}", c.arc_orbits).unwrap();
    writeln!(r, "vertex-transitive: {}", yes_no(c.vertex_transitive)).unwrap();
    writeln!(r, "edge-transitive: {}", yes_no(c.edge_transitive)).unwrap();
    writeln!(r, "arc-transitive: {}", yes_no(c.arc_transitive)).unwrap();
    writeln!(r, "half-arc-transitive: {}", yes_no(c.half_arc_transitive)).unwrap();
    writeln!(r, "grr: {}", yes_no(c.zero_symmetric)).unwrap();
    match (&a.edge_type, &a.arc_type) {
        (Some(e), Some(t)) => {
            writeln!(r, "edge-type: {e}").unwrap();
            writeln!(r, "arc-type: {t}").unwrap();
        }
        _ => {
            let diag = format!("not vertex-transitive ({} vertex orbits)", c.vertex_orbits);
            writeln!(r, "edge-type: {diag}").unwrap();
            writeln!(r, "arc-type: {diag}").unwrap();
            if require_vt {
                return Err(fail(r, Error::NotVertexTransitive(c.vertex_orbits)));
            }
        }
    }
    Ok(r)
}

fn cmd_construct(spec: &str, aut: &AutConfig, out: Option<&Path>) -> Outcome {
    let mut loader = |p: &str| load(Path::new(p)).map_err(|e| Error::InvalidSpec(e));
    let g = build_family(spec, &mut loader, aut).map_err(|e| fail(String::new(), e))?;
    let mut r = String::new();
    writeln!(r, "spec: {spec}").unwrap();
    writeln!(r, "n: {}", g.n()).unwrap();
    writeln!(r, "m: {}", g.edge_count()).unwrap();
    match g.valency() {
        Some(k) => writeln!(r, "valency: {k}").unwrap(),
        None => writeln!(r, "valency: irregular").unwrap(),
    }
    match out {
        Some(path) => {
            fs::write(path, g.to_edge_list()).map_err(|e| fail(r.clone(), format!("{}: {e}", path.display())))?;
            writeln!(r, "written: {}", path.display()).unwrap();
        }
        None => r.push_str(&g.to_edge_list()),
    }
    Ok(r)
}

fn cmd_realize(spec: &str, verify: Verify, config: &RealizeConfig, out: Option<&Path>) -> Outcome {
    let p: MarkedPartition = spec.parse().map_err(|e: Error| fail(String::new(), e))?;
    let config = RealizeConfig {
        mode: verify.into(),
        ..*config
    };
    let mut r = String::new();
    writeln!(r, "arc-type: {p}").unwrap();
    let z = realize(&p, &config).map_err(|e| fail(r.clone(), e))?;
    let bp = &z.blueprint;
    let cert = &z.certificate;
    writeln!(r, "case: {}", bp.case_trace).unwrap();
    writeln!(r, "blocks: {}", bp.blocks.len()).unwrap();
    for (i, b) in bp.blocks.iter().enumerate() {
        writeln!(r, "block {}: {} arc-type {} on {} vertices", i + 1, b.spec, b.arc_type, b.spec.vertex_count()).unwrap();
    }
    writeln!(r, "vertices: {}", z.graph.n()).unwrap();
    writeln!(r, "edges: {}", z.graph.edge_count()).unwrap();
    writeln!(r, "certificate: {}", cert.mode).unwrap();
    if let Some(t) = &cert.verified_arc_type {
        writeln!(r, "verified-arc-type: {t}").unwrap();
    }
    if matches!(cert.mode, CertificateMode::Compositional | CertificateMode::Literature) {
        for (i, b) in cert.blocks.iter().enumerate() {
            let status = match &b.verified_arc_type {
                Some(t) => format!("arc-type {t}"),
                None => "arc-type not recomputed (over budget)".to_string(),
            };
            writeln!(r, "block {} check: {status}, prime: {}", i + 1, yes_no(b.prime)).unwrap();
        }
        if let Some(d) = cert.blocks_pairwise_distinct {
            writeln!(r, "blocks-pairwise-non-isomorphic: {}", yes_no(d)).unwrap();
        }
    }
    if let Some(path) = out {
        fs::write(path, z.graph.to_edge_list()).map_err(|e| fail(r.clone(), format!("{}: {e}", path.display())))?;
        writeln!(r, "written: {}", path.display()).unwrap();
    }
    Ok(r)
}

fn cmd_factor(path: &Path) -> Outcome {
    let g = load(path).map_err(|e| fail(String::new(), e))?;
    let mut r = String::new();
    writeln!(r, "n: {}", g.n()).unwrap();
    writeln!(r, "m: {}", g.edge_count()).unwrap();
    let f = factor_prime(&g).map_err(|e| fail(r.clone(), e))?;
    let names: Vec<String> = f.factors.iter().map(describe).collect();
    writeln!(r, "factors: {}", names.join(", ")).unwrap();
    writeln!(r, "prime: {}", yes_no(f.is_prime())).unwrap();
    match f.verify(&g) {
        Ok(()) => writeln!(r, "certificate: ok").unwrap(),
        Err(e) => return Err(fail(r, e)),
    }
    Ok(r)
}

fn cmd_count_types(d: usize) -> Outcome {
    let mut r = String::new();
    for i in 1..=d {
        writeln!(r, "{i}, {}, {}", count_plain(i), count_marked(i)).unwrap();
    }
    Ok(r)
}

fn cmd_table1(aut: &AutConfig) -> Outcome {
    let mut r = String::new();
    let mut failures = 0;
    let mut built = 0;
    for row in TABLE1.iter() {
        let Some(id) = row.example else {
            // Connected 2-valent graphs are exactly the cycles, and every cycle
            // is arc-transitive.
            let found: Vec<String> = (3..=12)
                .map(|n| cycle_arc_type(n, aut))
                .filter(|t| t.as_deref() != Ok("2"))
                .map(|t| t.unwrap_or_else(|e| e.to_string()))
                .collect();
            let ok = found.is_empty();
            failures += usize::from(!ok);
            writeln!(
                r,
                "{}: arc-type {} edge-type {} impossible: {}",
                row.case,
                row.arc_type,
                row.edge_type,
                if ok { "yes (every cycle has arc-type 2)" } else { "NO" }
            )
            .unwrap();
            continue;
        };
        built += 1;
        let entry = registry_entry(id).map_err(|e| fail(r.clone(), e))?;
        let g = entry.build();
        let (et, at) = match analyze(&g, aut).and_then(|a| Ok((a.edge_type()?.clone(), a.arc_type()?.clone()))) {
            Ok(x) => (x.0.to_string(), x.1.to_string()),
            Err(e) => (format!("error: {e}"), format!("error: {e}")),
        };
        let ok = et == row.edge_type && at == row.arc_type;
        failures += usize::from(!ok);
        writeln!(
            r,
            "{}: {} on {} vertices, edge-type {} arc-type {}: {}",
            row.case,
            id,
            g.n(),
            et,
            at,
            if ok { "match" } else { "MISMATCH" }
        )
        .unwrap();
    }
    writeln!(r, "constructed: {built}").unwrap();
    writeln!(r, "mismatches: {failures}").unwrap();
    if failures > 0 {
        return Err(fail(r, format!("{failures} table rows do not match")));
    }
    Ok(r)
}

fn cycle_arc_type(n: usize, aut: &AutConfig) -> arctype::Result<String> {
    Ok(arc_type_with(&cycle(n), aut)?.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let _ = cli.seed;
    let aut = AutConfig::with_budget(cli.aut_budget);
    let config = RealizeConfig {
        aut,
        verify_max_vertices: cli.verify_max_vertices,
        ..RealizeConfig::default()
    };
    let out = cli.out.as_deref();
    let (outcome, report_to_file) = match &cli.command {
        Command::Analyze { path, require_vt } => (cmd_analyze(path, *require_vt, &aut), true),
        Command::Construct { spec } => (cmd_construct(spec, &aut, out), false),
        Command::Realize { arc_type, verify } => (cmd_realize(arc_type, *verify, &config, out), false),
        Command::Factor { path } => (cmd_factor(path), true),
        Command::CountTypes { d } => (cmd_count_types(*d), true),
        Command::Table1 => (cmd_table1(&aut), true),
    };
    let (report, error) = match outcome {
        Ok(r) => (r, None),
        Err(f) => (f.report, Some(f.message)),
    };
    match out.filter(|_| report_to_file) {
        Some(path) => {
            if let Err(e) = fs::write(path, &report) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::FAILURE;
            }
        }
        None => print!("{report}"),
    }
    match error {
        Some(msg) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
        None => ExitCode::SUCCESS,
    }
}
