//! Command-line front end: expansions, addition traces, tables, and the
//! verification/conjecture harness.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use goldbase::digits::RadixGlyph;
use goldbase::quad::{Base, QuadInt};
use goldbase::report::{run_conjecture, run_suite, ConjectureId, ReportEnvelope, SuiteId};
use goldbase::representation::{
    expansion_of, normalize_with_trace, RewriteRule, Scheme,
};
use goldbase::scan;
use goldbase::silver::silver_expansion_of;
use goldbase::table::{phi_rows, render_phi_table, render_silver_table, silver_rows, TableFormat};

#[derive(Parser)]
#[command(
    name = "goldbase",
    version,
    about = "Exact base-φ and base-σ numeration: expansions, addition, tables, verification"
)]
struct Cli {
    /// Digit scheme (`standard` is accepted as a synonym for `bergman`).
    #[arg(long, global = true, value_enum, default_value_t = SchemeArg::Bergman)]
    scheme: SchemeArg,

    /// Numeration base: the golden ratio φ or the silver mean σ = 1 + √2.
    #[arg(long, global = true, value_enum, default_value_t = BaseArg::Phi)]
    base: BaseArg,

    /// Radix-point glyph used when printing expansions.
    #[arg(
        long,
        global = true,
        value_enum,
        env = "GOLDBASE_RADIX",
        default_value_t = RadixArg::Middot
    )]
    radix: RadixArg,

    /// Worker threads for range scans; 0 uses every core.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the expansion of N.
    Repr {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
    /// Add two naturals digit-wise in base φ and normalize the sum.
    Add {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
        /// Print the digit-wise sum and every rewrite step.
        #[arg(long)]
        trace: bool,
    },
    /// Print the expansion table for a range of N.
    Table {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        from: u64,
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        to: u64,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// Run a named verification suite and print its JSON report.
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: SuiteId,
        /// Scan bound override (closed-form index for lemma41/51/61).
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max: Option<u64>,
    },
    /// Run a named conjecture scan and print its JSON report.
    Conjecture {
        #[arg(value_parser = parse_conjecture)]
        target: ConjectureId,
        /// Scan bound override.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max: Option<u64>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SchemeArg {
    #[value(alias = "standard")]
    Bergman,
    Canonical,
}

impl From<SchemeArg> for Scheme {
    fn from(arg: SchemeArg) -> Scheme {
        match arg {
            SchemeArg::Bergman => Scheme::Bergman,
            SchemeArg::Canonical => Scheme::Canonical,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BaseArg {
    Phi,
    Silver,
}

impl From<BaseArg> for Base {
    fn from(arg: BaseArg) -> Base {
        match arg {
            BaseArg::Phi => Base::Phi,
            BaseArg::Silver => Base::Silver,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RadixArg {
    Middot,
    Dot,
}

impl From<RadixArg> for RadixGlyph {
    fn from(arg: RadixArg) -> RadixGlyph {
        match arg {
            RadixArg::Middot => RadixGlyph::MiddleDot,
            RadixArg::Dot => RadixGlyph::AsciiDot,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Csv,
    Json,
}

impl From<FormatArg> for TableFormat {
    fn from(arg: FormatArg) -> TableFormat {
        match arg {
            FormatArg::Text => TableFormat::Text,
            FormatArg::Csv => TableFormat::Csv,
            FormatArg::Json => TableFormat::Json,
        }
    }
}

fn parse_suite(s: &str) -> Result<SuiteId, String> {
    s.parse().map_err(|e: goldbase::report::UnknownSuite| e.to_string())
}

fn parse_conjecture(s: &str) -> Result<ConjectureId, String> {
    s.parse().map_err(|e: goldbase::report::UnknownConjecture| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.jobs > 0 {
        scan::configure_threads(cli.jobs);
    }
    let scheme = Scheme::from(cli.scheme);
    let base = Base::from(cli.base);
    let glyph = RadixGlyph::from(cli.radix);

    match cli.command {
        Command::Repr { n } => {
            let rep = match base {
                Base::Phi => expansion_of(n, scheme),
                Base::Silver => silver_expansion_of(n, scheme),
            };
            println!("{}", rep.render(glyph));
            ExitCode::SUCCESS
        }
        Command::Add { n, m, trace } => run_add(n, m, trace, scheme, base, glyph),
        Command::Table { from, to, format } => {
            if from > to {
                eprintln!("error: empty range {from}..{to}");
                return ExitCode::from(2);
            }
            let rendered = match base {
                Base::Phi => render_phi_table(&phi_rows(from, to, glyph), format.into()),
                Base::Silver => render_silver_table(&silver_rows(from, to, glyph), format.into()),
            };
            print!("{rendered}");
            ExitCode::SUCCESS
        }
        Command::Verify { suite, max } => emit_report(run_suite(suite, max)),
        Command::Conjecture { target, max } => emit_report(run_conjecture(target, max)),
    }
}

fn run_add(
    n: u64,
    m: u64,
    trace: bool,
    scheme: Scheme,
    base: Base,
    glyph: RadixGlyph,
) -> ExitCode {
    if base != Base::Phi {
        eprintln!("error: addition traces are implemented for --base phi only");
        return ExitCode::from(2);
    }
    let lhs = expansion_of(n, scheme);
    let rhs = expansion_of(m, scheme);
    let sum = lhs.add_digitwise(&rhs);
    let steps = match normalize_with_trace(&sum, scheme) {
        Ok(steps) => steps,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if trace {
        println!(
            "{} ⊞ {} = {}",
            lhs.render(glyph),
            rhs.render(glyph),
            sum.render(glyph)
        );
        let target = QuadInt::from_int(Base::Phi, n + m);
        for step in &steps.steps {
            if step.after.value() != target {
                eprintln!("error: rewrite step changed the value at exponent {}", step.exponent);
                return ExitCode::FAILURE;
            }
            let label = match step.rule {
                RewriteRule::Carry => "carry",
                RewriteRule::Shift => "golden shift",
                RewriteRule::Canonical => "canonical pair",
            };
            println!(
                "→ {}  ({label} at exponent {})",
                step.after.render(glyph),
                step.exponent
            );
        }
    }
    println!("{}", steps.result.render(glyph));
    ExitCode::SUCCESS
}

fn emit_report(envelope: ReportEnvelope) -> ExitCode {
    let json = serde_json::to_string_pretty(&envelope).expect("report serializes");
    println!("{json}");
    for record in &envelope.details {
        let mark = match (record.exploratory, record.pass) {
            (true, _) => "·",
            (false, true) => "✔",
            (false, false) => "✘",
        };
        eprintln!("{mark} {} — {}", record.name, record.detail);
    }
    eprintln!(
        "{}: {:?} ({} checks, {} ms)",
        envelope.suite,
        envelope.verdict,
        envelope.details.len(),
        envelope.elapsed_ms
    );
    if envelope.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
