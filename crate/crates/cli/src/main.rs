use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cr_atlas_core::catalog::{
    build_catalog, classify, decide_equivalence, verify, CatalogFile, Report,
};
use cr_atlas_core::maximal_group::{maximal_cr_group, CrManifold};
use cr_atlas_core::nonstandard_cr::{parse_complex, recognize, NonStandardError};
use cr_atlas_core::rational::q;
use cr_atlas_core::standard_cr::{parse_tuple, StandardError};
use cr_atlas_core::{NonStandardCR, PaintedDiagram, StandardCR};

#[derive(Parser)]
#[command(
    name = "cr-atlas",
    version,
    about = "Classify compact homogeneous CR manifolds of hypersurface type"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads for enumeration (defaults to the number of CPUs).
    #[arg(long, env = "CR_ATLAS_THREADS", global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Full report for one manifold.
    Classify(ManifoldArgs),
    /// Catalog of all classes up to a rank and tuple bound.
    Enumerate {
        #[arg(long)]
        max_rank: usize,
        #[arg(long)]
        tuple_bound: i64,
        /// Write the catalog JSON here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide whether two manifolds are CR equivalent (exit 0 yes, 1 no).
    Equivalent {
        /// `A2[1,2] p=(2,-1)` or `Spin7/SU3 t=1/2`.
        first: String,
        second: String,
        /// Also identify a structure with its conjugate `-J`.
        #[arg(long)]
        allow_conjugate: bool,
    },
    /// Maximal connected compact group of CR automorphisms.
    MaximalGroup(ManifoldArgs),
    /// Catalog file operations.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// Recompute every entry of a catalog file (exit 0 consistent, 1 not).
    Verify { file: PathBuf },
}

#[derive(Args)]
struct ManifoldArgs {
    /// Painted diagram such as `B3[1]`.
    #[arg(long, conflicts_with_all = ["group", "isotropy", "t"], requires = "tuple")]
    diagram: Option<String>,
    /// Integers on the black nodes, e.g. `2,-1`.
    #[arg(long, allow_hyphen_values = true)]
    tuple: Option<String>,
    /// Transitive group `G`, e.g. `Spin7`.
    #[arg(long, requires = "isotropy")]
    group: Option<String>,
    /// Isotropy `L`, e.g. `SU3`.
    #[arg(long)]
    isotropy: Option<String>,
    /// Modulus `re[,im]` in the punctured unit disc (default `1/2`).
    #[arg(long, allow_hyphen_values = true)]
    t: Option<String>,
}

/// A failure reported on stderr as JSON with exit code 2.
struct Failure {
    kind: &'static str,
    message: String,
}

impl From<StandardError> for Failure {
    fn from(e: StandardError) -> Self {
        Failure {
            kind: e.kind(),
            message: e.to_string(),
        }
    }
}

impl From<NonStandardError> for Failure {
    fn from(e: NonStandardError) -> Self {
        Failure {
            kind: e.kind(),
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        kind: "Usage",
        message: message.into(),
    }
}

fn nonstandard(group: &str, isotropy: &str, t: Option<&str>) -> Result<NonStandardCR, Failure> {
    let (re, im) = match t {
        Some(t) => {
            parse_complex(t).ok_or_else(|| Failure::from(NonStandardError::Parse(t.to_string())))?
        }
        None => (q(1, 2), q(0, 1)),
    };
    let entry = recognize(group, isotropy)?.ok_or_else(|| NonStandardError::NotInCatalog {
        group: group.to_string(),
        isotropy: isotropy.to_string(),
    })?;
    Ok(NonStandardCR::new(entry, re, im)?)
}

fn manifold_from_args(a: &ManifoldArgs) -> Result<CrManifold, Failure> {
    match (&a.diagram, &a.group) {
        (Some(d), None) => {
            let diagram: PaintedDiagram =
                d.parse()
                    .map_err(|e: cr_atlas_core::flag::FlagError| Failure {
                        kind: "ParseError",
                        message: e.to_string(),
                    })?;
            let t = a.tuple.as_deref().unwrap_or_default();
            let tuple = parse_tuple(t).ok_or_else(|| StandardError::Parse(t.to_string()))?;
            Ok(CrManifold::Standard(StandardCR::new(diagram, tuple)?))
        }
        (None, Some(g)) => Ok(CrManifold::NonStandard(nonstandard(
            g,
            a.isotropy.as_deref().unwrap_or_default(),
            a.t.as_deref(),
        )?)),
        _ => Err(usage("give either --diagram/--tuple or --group/--isotropy")),
    }
}

fn manifold_from_text(s: &str) -> Result<CrManifold, Failure> {
    if s.contains('/') {
        Ok(CrManifold::NonStandard(s.parse()?))
    } else {
        Ok(CrManifold::Standard(s.parse()?))
    }
}

fn report_text(r: &Report) -> String {
    let kind = match r.kind {
        cr_atlas_core::catalog::ManifoldKind::Standard => "standard",
        cr_atlas_core::catalog::ManifoldKind::NonStandard => "non-standard",
    };
    let mut lines = vec![
        format!("manifold:      {}", r.name),
        format!("type:          {kind}"),
        format!("dimension:     {}", r.dimension),
        format!("L:             {}", r.isotropy_l),
        format!("K:             {}", r.isotropy_k),
    ];
    if let Some([p, n]) = r.levi {
        lines.push(format!("Levi:          ({p},{n})"));
    }
    if let Some(row) = r.table2_row {
        lines.push(format!("catalog row:   {row}"));
    }
    lines.push(format!("maximal group: {}", r.maximal_group));
    lines.push(format!("center dim:    {}", r.center_dim));
    lines.join("\n")
}

fn pretty(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    match &cli.command {
        Command::Classify(a) => {
            let r = classify(&manifold_from_args(a)?);
            println!(
                "{}",
                if cli.format == Format::Json {
                    pretty(&r)
                } else {
                    report_text(&r)
                }
            );
            Ok(0)
        }
        Command::MaximalGroup(a) => {
            let r = maximal_cr_group(&manifold_from_args(a)?);
            if cli.format == Format::Json {
                println!("{}", pretty(&r));
            } else {
                println!("{}", r.symbolic());
                if let Some(f) = &r.a_side_flag_name {
                    println!("flag:      {f}");
                }
                println!("isotropy:  {}", r.a_side_isotropy_b);
            }
            Ok(0)
        }
        Command::Enumerate {
            max_rank,
            tuple_bound,
            out,
        } => {
            let c = build_catalog(*max_rank, *tuple_bound).map_err(|e| Failure {
                kind: "InvalidBound",
                message: e.to_string(),
            })?;
            let text = c.to_json_string();
            match out {
                Some(path) => {
                    fs::write(path, &text).map_err(|e| Failure {
                        kind: "Io",
                        message: e.to_string(),
                    })?;
                    if cli.format == Format::Json {
                        println!("{}", json!({"entries": c.entries.len(), "out": path}));
                    } else {
                        println!("{} entries written to {}", c.entries.len(), path.display());
                    }
                }
                None if cli.format == Format::Json => print!("{text}"),
                None => {
                    for e in &c.entries {
                        let levi = e
                            .report
                            .levi
                            .map(|[p, n]| format!("({p},{n})"))
                            .unwrap_or_else(|| "-".into());
                        println!(
                            "{}\tL={}\tLevi={levi}\tA={}",
                            e.report.name, e.report.isotropy_l, e.report.maximal_group
                        );
                    }
                }
            }
            Ok(0)
        }
        Command::Equivalent {
            first,
            second,
            allow_conjugate,
        } => {
            let v = decide_equivalence(
                &manifold_from_text(first)?,
                &manifold_from_text(second)?,
                *allow_conjugate,
            );
            if cli.format == Format::Json {
                println!("{}", pretty(&v));
            } else {
                println!(
                    "{}: {}",
                    if v.equivalent {
                        "equivalent"
                    } else {
                        "inequivalent"
                    },
                    v.reason
                );
            }
            Ok(if v.equivalent { 0 } else { 1 })
        }
        Command::Catalog {
            action: CatalogAction::Verify { file },
        } => {
            let text = fs::read_to_string(file).map_err(|e| Failure {
                kind: "Io",
                message: e.to_string(),
            })?;
            let c = CatalogFile::from_json_str(&text).map_err(|e| Failure {
                kind: "InvalidCatalog",
                message: e.to_string(),
            })?;
            let problems = verify(&c);
            if cli.format == Format::Json {
                println!(
                    "{}",
                    pretty(
                        &json!({"ok": problems.is_empty(), "entries": c.entries.len(), "problems": problems})
                    )
                );
            } else if problems.is_empty() {
                println!("ok: {} entries", c.entries.len());
            } else {
                problems.iter().for_each(|p| println!("{p}"));
            }
            Ok(if problems.is_empty() { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("{}", json!({"error": "Usage", "message": e.to_string()}));
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            let v: Value = json!({"error": f.kind, "message": f.message});
            eprintln!("{v}");
            ExitCode::from(2)
        }
    }
}
