use std::path::{Path, PathBuf};
use std::process::ExitCode;

use cfon_cli::audit::AuditMethod;
use cfon_cli::{audit, color, generate, parse_family, CliError, ColorInput, Method};
use clap::{Parser, Subcommand, ValueEnum};
use graph_core::{parse_coloring, parse_edge_list, Graph};
use verify_exact::{cap_from_env, exact, verify, Variant};

/// Conflict-free open/closed neighborhood coloring.
#[derive(Parser)]
#[command(name = "cfon", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Open,
    Closed,
    PartialOpen,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Open => Variant::Open,
            VariantArg::Closed => Variant::Closed,
            VariantArg::PartialOpen => Variant::PartialOpen,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Color a graph and print a report.
    Color {
        graph: PathBuf,
        #[arg(long, value_enum)]
        method: Method,
        /// Path decomposition, tagged (semi-nice) or plain.
        #[arg(long)]
        decomposition: Option<PathBuf>,
        /// Feedback vertex set or cluster modulator, one vertex id per line.
        #[arg(long)]
        certificate: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Check a coloring file against a graph.
    Verify {
        graph: PathBuf,
        coloring: PathBuf,
        #[arg(long, value_enum, default_value = "open")]
        variant: VariantArg,
    },
    /// Optimum number of colors by exhaustive search.
    Exact {
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "open")]
        variant: VariantArg,
        /// Largest graph the search accepts; defaults to CFON_ORACLE_CAP or 12.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Write a generated instance.
    Generate {
        #[arg(long)]
        family: String,
        #[arg(long, default_value = "")]
        params: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Graph file; a planted certificate goes to <out>.cert.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a method's invariant audit.
    Audit {
        graph: PathBuf,
        #[arg(long, value_enum)]
        method: AuditMethod,
    },
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    parse_edge_list(&read(path)?).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Precondition(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.cmd {
        Cmd::Color { graph, method, decomposition, certificate, seed } => {
            let g = load_graph(&graph)?;
            let input = ColorInput {
                decomposition: decomposition.as_deref().map(read).transpose()?,
                certificate: certificate.as_deref().map(read).transpose()?,
                seed,
            };
            let report = color(&g, &graph.display().to_string(), method, &input)?;
            print!("{}", report.render(true));
            Ok(report.exit_code())
        }
        Cmd::Verify { graph, coloring, variant } => {
            let g = load_graph(&graph)?;
            let c = parse_coloring(&read(&coloring)?, g.n())
                .map_err(|e| CliError::Parse(format!("{}: {e}", coloring.display())))?;
            let verdict = verify(&g, &c, variant.into())?;
            print!("{}", verdict.to_text());
            println!("colors_used: {}", verdict.colors_used);
            Ok(if verdict.valid { 0 } else { 1 })
        }
        Cmd::Exact { graph, variant, cap } => {
            let g = load_graph(&graph)?;
            let variant: Variant = variant.into();
            let (k, c) = exact(&g, cap.unwrap_or_else(cap_from_env), variant)?;
            println!("variant: {}", variant.name());
            println!("n: {}", g.n());
            println!("optimum: {k}");
            print!("```\n{}```\n", c.to_text());
            Ok(0)
        }
        Cmd::Generate { family, params, seed, out } => {
            let fam = parse_family(&family, &params)?;
            let gen = generate(&fam, seed)?;
            let text = gen.graph.to_edge_list();
            match out {
                Some(path) => {
                    write(&path, &text)?;
                    if let Some(cert) = &gen.certificate {
                        let mut p = path.into_os_string();
                        p.push(".cert");
                        write(Path::new(&p), cert)?;
                    }
                }
                None => {
                    print!("{text}");
                    if let Some(cert) = &gen.certificate {
                        print!("c certificate\n{}", cert.lines().map(|l| format!("c {l}\n")).collect::<String>());
                    }
                }
            }
            Ok(0)
        }
        Cmd::Audit { graph, method } => {
            let g = load_graph(&graph)?;
            let a = audit(&g, method)?;
            print!("{}", a.render());
            Ok(if a.holds() { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("cfon: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
