use clap::{Args, Parser, Subcommand};
use nlie_kit::cli::{
    parse_pair, parse_range, run_dimensions, run_module, run_prolong, run_prolong_sweep_harmonic,
    run_prolong_sweep_pairs, run_q2, run_verify, Budget, CmdOutput, ModuleSpec, VerifyInput,
};
use nlie_kit::{Error, Result};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

/// Exact calculators for n-ary Lie algebras: identity verification, module
/// prolongation, classification dimensions, and obstruction spans.
#[derive(Parser)]
#[command(name = "nlie-kit", version, about)]
struct Cli {
    /// Cap on size parameters: arity up to N, degrees up to N-2
    /// (default 6). Raise to explore larger cases; runtime is exact
    /// arithmetic and grows quickly.
    #[arg(long, global = true)]
    budget: Option<usize>,

    /// Write the machine-readable JSON report to this path.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Args)]
struct ModuleFlags {
    /// The algebra acting on itself, as a module over its wedge algebra.
    #[arg(long)]
    adjoint: bool,

    /// Harmonic polynomial module of this degree.
    #[arg(long, value_name = "T")]
    harmonic: Option<usize>,

    /// Weighted pair "T,R" (arity 3 only).
    #[arg(long, value_name = "T,R")]
    tensor: Option<String>,

    /// Wedge square of the defining module.
    #[arg(long)]
    wedge2: bool,

    /// Module JSON document produced by the `module` subcommand.
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,
}

impl ModuleFlags {
    fn resolve(&self) -> Result<Option<ModuleSpec>> {
        let mut specs: Vec<ModuleSpec> = Vec::new();
        if self.adjoint {
            specs.push(ModuleSpec::Adjoint);
        }
        if let Some(t) = self.harmonic {
            specs.push(ModuleSpec::Harmonic(t));
        }
        if let Some(pair) = &self.tensor {
            let (t, r) = parse_pair(pair)?;
            specs.push(ModuleSpec::Tensor(t, r));
        }
        if self.wedge2 {
            specs.push(ModuleSpec::WedgeSquare);
        }
        if let Some(path) = &self.file {
            specs.push(ModuleSpec::Json {
                name: path.display().to_string(),
                content: read_file(path)?,
            });
        }
        if specs.len() > 1 {
            return Err(Error::Usage(
                "choose exactly one of --adjoint, --harmonic, --tensor, --wedge2, --file".into(),
            ));
        }
        Ok(specs.pop())
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the fundamental identity of an n-ary algebra.
    Verify {
        /// Use the built-in vector-products algebra of this arity.
        #[arg(long, value_name = "N")]
        vn: Option<usize>,

        /// Read structure constants from a text file.
        #[arg(long, value_name = "PATH")]
        file: Option<PathBuf>,
    },

    /// Decide whether a module extends to the n-ary bracket.
    Prolong {
        /// Arity of the bracket (the module lives over the orthogonal
        /// algebra of size N+1).
        #[arg(long, value_name = "N")]
        n: usize,

        #[command(flatten)]
        module: ModuleFlags,

        /// Sweep harmonic degrees A..B instead of checking one module
        /// (with --r: sweep weighted pairs, arity 3 only).
        #[arg(long, value_name = "A..B")]
        t: Option<String>,

        /// Weight range for the second factor of a pair sweep.
        #[arg(long, value_name = "A..B")]
        r: Option<String>,
    },

    /// Tabulate the closed-form module dimensions against harmonic kernels.
    Dimensions {
        /// Arity or arity range (default 2..4).
        #[arg(long, value_name = "A..B")]
        n: Option<String>,

        /// Degree or degree range (default 0..budget).
        #[arg(long, value_name = "A..B")]
        t: Option<String>,
    },

    /// Span of the quadratic obstruction generators.
    Q2 {
        /// Arity of the bracket.
        #[arg(long, value_name = "N")]
        n: usize,
    },

    /// Build or import a module, report its invariants, and export it as
    /// a JSON document.
    Module {
        /// Arity of the bracket (optional when importing with --file).
        #[arg(long, value_name = "N")]
        n: Option<usize>,

        #[command(flatten)]
        module: ModuleFlags,
    },
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Usage(format!("cannot read {}: {e}", path.display())))
}

fn dispatch(cli: &Cli) -> Result<CmdOutput> {
    let budget = cli.budget.map(Budget::new).unwrap_or_default();
    match &cli.command {
        Cmd::Verify { vn, file } => {
            let input = match (vn, file) {
                (Some(n), None) => VerifyInput::VectorProducts(*n),
                (None, Some(path)) => VerifyInput::Text {
                    name: path.display().to_string(),
                    content: read_file(path)?,
                },
                _ => {
                    return Err(Error::Usage(
                        "choose exactly one of --vn N or --file PATH".into(),
                    ))
                }
            };
            run_verify(&input, &budget)
        }
        Cmd::Prolong { n, module, t, r } => {
            let spec = module.resolve()?;
            match (t, r, spec) {
                (None, None, Some(spec)) => run_prolong(*n, &spec, &budget),
                (Some(t), None, None) => {
                    run_prolong_sweep_harmonic(*n, parse_range(t)?, &budget)
                }
                (Some(t), Some(r), None) => {
                    run_prolong_sweep_pairs(*n, parse_range(t)?, parse_range(r)?, &budget)
                }
                (None, Some(_), _) => Err(Error::Usage("--r needs --t to form a pair sweep".into())),
                (Some(_), _, Some(_)) => Err(Error::Usage(
                    "choose either one module flag or a sweep range, not both".into(),
                )),
                (None, None, None) => Err(Error::Usage(
                    "choose a module (--adjoint, --harmonic T, --tensor T,R, --wedge2, --file PATH) or a sweep (--t A..B [--r A..B])".into(),
                )),
            }
        }
        Cmd::Dimensions { n, t } => {
            let n_range = n.as_deref().map(parse_range).transpose()?;
            let t_range = t.as_deref().map(parse_range).transpose()?;
            run_dimensions(n_range, t_range, &budget)
        }
        Cmd::Q2 { n } => run_q2(*n, &budget),
        Cmd::Module { n, module } => {
            let spec = module.resolve()?.ok_or_else(|| {
                Error::Usage(
                    "choose a module (--adjoint, --harmonic T, --tensor T,R, --wedge2, --file PATH)"
                        .into(),
                )
            })?;
            run_module(*n, &spec, &budget)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            if let Some(path) = &cli.json {
                if let Err(e) = std::fs::write(path, out.json.as_bytes()) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
