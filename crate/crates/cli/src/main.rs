//! `chamberkit`: command-line access to the chamber, root and invariant
//! computations. Exit codes: 0 success, 1 usage error, 2 precondition error.

mod render;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use chamberkit::braid::{abelianization, build_presentation, span_check};
use chamberkit::curves::{enumerate_negative_spheres, lemma_classes_audit, square_zero_spheres};
use chamberkit::invariants::{analyze, emit_table};
use chamberkit::lattice::parse_rational;
use chamberkit::packing::{relative_packing_feasible, PackingSpec};
use chamberkit::reduction::{reduce_to_fundamental_domain, ReductionTrace};
use chamberkit::roots::{enumerate_exceptional, enumerate_roots};
use chamberkit::{BasisTag, FormClass};
use clap::{Parser, Subcommand, ValueEnum};

use render::{Format, Output};

#[derive(Parser)]
#[command(name = "chamberkit", version, about = "Reduced symplectic forms on rational surfaces")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Shorthand for `--format json`.
    #[arg(long, global = true, conflicts_with = "markdown")]
    json: bool,
    /// Shorthand for `--format markdown`.
    #[arg(long, global = true)]
    markdown: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Markdown,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce a form and report its face, Γ_L, N and the π₀/π₁ data.
    Analyze {
        /// Form literal, e.g. "(1 | 1/3, 1/3, 1/3)" or "(mu, f | a1, ...)".
        form: String,
    },
    /// Regenerate the face table for k = 2..5.
    Table {
        k: usize,
        /// Show the published values next to the derived ones.
        #[arg(long)]
        paper_compare: bool,
    },
    /// List the -2 roots (or -1 classes) of CP² # k(-CP²).
    Roots {
        k: usize,
        #[arg(long)]
        exceptional: bool,
    },
    /// Carry a form into the reduced domain and print the trace.
    Reduce {
        form: String,
        /// Rescale the result to ν = 1.
        #[arg(long)]
        normalize: bool,
    },
    /// Negative spheres and the simple-class audit for a reduced form.
    Curves {
        form: String,
        /// List the negative sphere families (default when --audit is absent).
        #[arg(long)]
        families: bool,
        /// Search every class with coefficients bounded by BOUND.
        #[arg(long, value_name = "BOUND")]
        audit: Option<i64>,
    },
    /// Relative ball packing test for five sizes.
    Packing {
        #[arg(num_args = 5, value_names = ["C1", "C2", "C3", "C4", "C5"], required = true)]
        sizes: Vec<String>,
    },
    /// Pure braid group bookkeeping.
    Braid {
        #[command(subcommand)]
        action: BraidCommand,
    },
    /// Replay a reduction log and check its END line.
    VerifyTrace {
        /// Log file, or `-` for standard input.
        path: PathBuf,
    },
}

#[derive(Subcommand)]
enum BraidCommand {
    /// Abelianization of the sphere pure braid group (modulo the centre by default).
    Abelianize {
        n: usize,
        #[arg(long)]
        no_quotient: bool,
    },
    /// Whether the given generators span the abelianization, e.g. "2-4,2-5,3-4".
    Span { n: usize, generators: String },
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<chamberkit::Error> for Failure {
    fn from(e: chamberkit::Error) -> Self {
        match e {
            chamberkit::Error::Parse(_) => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

fn parse_form(s: &str) -> Result<FormClass, Failure> {
    s.parse::<FormClass>().map_err(Failure::from)
}

fn parse_generators(s: &str) -> Result<Vec<(usize, usize)>, Failure> {
    s.split(',')
        .map(|item| {
            let t = item.trim().trim_start_matches(['A', 'a']);
            let pair = match t.split_once('-') {
                Some((i, j)) => i.trim().parse().ok().zip(j.trim().parse().ok()),
                None if t.len() == 2 => t[..1].parse().ok().zip(t[1..].parse().ok()),
                None => None,
            };
            match pair {
                Some((i, j)) if i < j => Ok((i, j)),
                _ => Err(Failure::Usage(format!(
                    "bad generator `{item}`; write i-j with i < j, e.g. 2-4"
                ))),
            }
        })
        .collect()
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(v) = std::env::var("CHAMBERKIT_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Failure::Usage(format!("CHAMBERKIT_THREADS must be a positive integer, got `{v}`")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure::Usage(e.to_string()))
}

fn run(cli: Cli) -> Result<Output, Failure> {
    configure_threads()?;
    let format = if cli.json {
        Format::Json
    } else if cli.markdown {
        Format::Markdown
    } else {
        match cli.format {
            FormatArg::Text => Format::Text,
            FormatArg::Markdown => Format::Markdown,
            FormatArg::Json => Format::Json,
        }
    };
    let out = match cli.command {
        Command::Analyze { form } => render::analyze(&analyze(&parse_form(&form)?)?, format),
        Command::Table { k, paper_compare } => render::table(&emit_table(k)?, paper_compare, format),
        Command::Roots { k, exceptional } => {
            let classes = if exceptional {
                enumerate_exceptional(k)?.classes
            } else {
                enumerate_roots(k)?.roots
            };
            render::roots(k, exceptional, &classes, format)
        }
        Command::Reduce { form, normalize } => {
            let w = parse_form(&form)?;
            let (reduced, trace) = reduce_to_fundamental_domain(&w)?;
            let normalized = if normalize { Some(reduced.normalized()?) } else { None };
            render::reduce(&trace, normalized.as_ref(), format)
        }
        Command::Curves { form, families, audit } => {
            let w = parse_form(&form)?;
            let w = match w.basis() {
                BasisTag::H(k) if k >= 2 => w.to_basis(BasisTag::BF(k - 1))?,
                _ => w,
            };
            let spheres = if families || audit.is_none() {
                let n = w.exceptional_areas().len();
                Some((enumerate_negative_spheres(&w)?, square_zero_spheres(n)?))
            } else {
                None
            };
            let report = audit.map(|b| lemma_classes_audit(&w, b)).transpose()?;
            render::curves(&w, spheres.as_ref(), report.as_ref(), format)
        }
        Command::Packing { sizes } => {
            let sizes = sizes
                .iter()
                .map(|s| parse_rational(s))
                .collect::<Result<Vec<_>, _>>()?;
            let spec = PackingSpec::new(sizes)?;
            render::packing(&spec, &relative_packing_feasible(&spec), format)
        }
        Command::Braid { action } => match action {
            BraidCommand::Abelianize { n, no_quotient } => {
                let p = build_presentation(n, !no_quotient)?;
                render::abelianize(&p, &abelianization(&p), format)
            }
            BraidCommand::Span { n, generators } => {
                let subset = parse_generators(&generators)?;
                let p = build_presentation(n, true)?;
                let spans = span_check(&p, &subset)?;
                render::span(n, &subset, spans, format)
            }
        },
        Command::VerifyTrace { path } => {
            let mut text = String::new();
            let read = if path.as_os_str() == "-" {
                std::io::stdin().read_to_string(&mut text).map(|_| ())
            } else {
                std::fs::read_to_string(&path).map(|t| text = t)
            };
            read.map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            let trace = ReductionTrace::from_log(&text)?;
            let replayed = trace.replay()?;
            render::verify(&trace, &replayed, format)
        }
    };
    Ok(out)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{}", out.body);
            ExitCode::from(if out.ok { 0 } else { 2 })
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("forms:  \"(nu | c1, ..., ck)\" or \"(mu, f | a1, ..., an)\", numbers as p/q");
            eprintln!("traces: START <form>, then REFLECT <class> | PERMUTE <i> <j> | NEGATE, then END <form>");
            ExitCode::from(1)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
