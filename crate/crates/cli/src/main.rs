use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use drawings_core::arrangement::{
    b_regions_inside, classify_b_region_geometric, classify_h_region, count_bounded_with_limit,
    default_weights, h_regions, ArrangementError, ArrangementKind,
};
use drawings_core::enumerate::{EnumError, Enumerator, ObjectClass, DEFAULT_LIMIT};
use drawings_core::maps::{convert, ClassId, MapError};
use drawings_core::series::{self, SeriesError};
use drawings_core::verify::run_battery;
use drawings_core::{ObjectError, OrderedPartition, Sign, SignedPermutation};

#[derive(Parser)]
#[command(name = "drawings", version, about = "Enumerate and convert drawings of plane trees and the objects in bijection with them")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every object of a class on [n], one per line, sorted.
    Enumerate {
        class: ObjectClass,
        n: usize,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: usize,
    },
    /// Number of objects of a class on [n].
    Count {
        class: ObjectClass,
        n: usize,
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: usize,
    },
    /// Map an object along the bijection chain.
    Convert {
        #[arg(long)]
        from: ClassId,
        #[arg(long)]
        to: ClassId,
        text: String,
    },
    /// Classify a region: a signed permutation for `b`, an ordered partition for `h`.
    Classify {
        kind: Kind,
        text: String,
        #[arg(long, default_value = "+", allow_hyphen_values = true, value_parser = parse_sign)]
        orientation: Sign,
    },
    /// Number of bounded regions of the sliced arrangement.
    CountBounded {
        kind: Kind,
        n: usize,
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: usize,
    },
    /// Coefficients n! [x^n] of a generating function, n = 0..=order.
    Series {
        which: Which,
        #[arg(long, default_value_t = 10)]
        order: usize,
    },
    /// Run the full verification battery.
    Verify {
        #[arg(long, default_value_t = 5)]
        n_max: usize,
        /// Raise n-max to 6.
        #[arg(long)]
        deep: bool,
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    B,
    H,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    B,
    P,
}

fn parse_sign(s: &str) -> Result<Sign, String> {
    match s {
        "+" | "plus" => Ok(Sign::Plus),
        "-" | "minus" => Ok(Sign::Minus),
        _ => Err(format!("expected + or -, got {s:?}")),
    }
}

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Object(#[from] ObjectError),
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Enum(#[from] EnumError),
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("verification failed: {failed} of {total} checks")]
    VerificationFailed { failed: usize, total: usize },
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::VerificationFailed { .. } | CliError::Enum(EnumError::MismatchFound { .. }) => 2,
            _ => 1,
        }
    }
}

fn run(command: Command, out: &mut impl Write) -> Result<(), CliError> {
    match command {
        Command::Enumerate { class, n, json, limit } => {
            let objects = Enumerator::new(limit).enumerate_class(class, n)?;
            let texts: Vec<String> = objects.iter().map(ToString::to_string).collect();
            if json {
                let doc = serde_json::json!({ "class": class.name(), "n": n, "count": texts.len(), "objects": texts });
                writeln!(out, "{doc}")?;
            } else {
                for t in texts {
                    writeln!(out, "{t}")?;
                }
            }
        }
        Command::Count { class, n, limit } => {
            writeln!(out, "{}", Enumerator::new(limit).count_class(class, n)?)?;
        }
        Command::Convert { from, to, text } => {
            let x = from.parse_object(&text)?;
            writeln!(out, "{}", convert(&x, from, to)?)?;
        }
        Command::Classify { kind: Kind::B, text, .. } => {
            let s: SignedPermutation = text.parse()?;
            let (class, cert) = classify_b_region_geometric(&default_weights(s.n()), &s)?;
            writeln!(out, "region: {s}")?;
            writeln!(out, "class: {class}")?;
            write!(out, "{cert}")?;
        }
        Command::Classify { kind: Kind::H, text, orientation } => {
            let p: OrderedPartition = text.parse()?;
            let (plus, minus) = h_regions(&p);
            let region = if orientation.is_plus() { plus } else { minus };
            let w = default_weights(p.n());
            let inside = b_regions_inside(&p, orientation);
            writeln!(out, "region: {p} {orientation}")?;
            writeln!(out, "inequalities: {region}")?;
            writeln!(out, "class: {}", classify_h_region(&p, orientation))?;
            writeln!(out, "b-regions: {}", inside.len())?;
            for s in inside {
                let (class, cert) = classify_b_region_geometric(&w, &s)?;
                writeln!(out, "b-region: {s} ({class})")?;
                write!(out, "{cert}")?;
            }
        }
        Command::CountBounded { kind, n, limit } => {
            let kind = match kind {
                Kind::B => ArrangementKind::B,
                Kind::H => ArrangementKind::H,
            };
            writeln!(out, "{}", count_bounded_with_limit(kind, n, limit)?)?;
        }
        Command::Series { which, order } => {
            let coeffs = match which {
                Which::B => series::egf_b(order)?,
                Which::P => series::egf_p(order)?,
            };
            for c in coeffs {
                writeln!(out, "{c}")?;
            }
        }
        Command::Verify { n_max, deep, limit } => {
            let n_max = if deep { n_max.max(6) } else { n_max };
            let checks = run_battery(n_max, limit.max(n_max))?;
            for c in &checks {
                writeln!(out, "{c}")?;
            }
            let failed = checks.iter().filter(|c| !c.ok).count();
            writeln!(out, "{} checks, {failed} failed", checks.len())?;
            if failed > 0 {
                out.flush()?;
                return Err(CliError::VerificationFailed { failed, total: checks.len() });
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            let msg = e.to_string();
            eprintln!("{}", msg.lines().next().unwrap_or("invalid arguments"));
            return ExitCode::from(1);
        }
    };
    let mut out = BufWriter::new(io::stdout().lock());
    let result = run(cli.command, &mut out).and_then(|()| out.flush().map_err(CliError::from));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
