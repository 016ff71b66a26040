mod filter;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nsg_core::enumerate::{par_fold, Bound};
use nsg_core::{
    classify, classify_b1_b2, decompose, invariant_report, type_sequence, verify, NumericalSemigroup,
    ParseSemigroupError, VerifyError,
};
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use filter::{Field, Filter, FilterError};

#[derive(Parser)]
#[command(name = "nsg", version, about = "Invariants and classification of numerical semigroups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// e, c, δ, n, r, b, k, s, edim and the type sequence.
    Invariants(Single),
    /// Skeleton and towers.
    Decompose(Single),
    /// Matching families and the canonical label.
    Classify(Single),
    /// All semigroups within a genus or conductor bound.
    Enumerate(EnumerateArgs),
    /// Check one statement over every semigroup up to a genus.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args)]
struct Single {
    /// Generators such as `4,7,13`, or `gaps:1,2,3,5`.
    spec: Option<String>,
    #[arg(long, conflicts_with_all = ["spec", "gaps"])]
    gens: Option<String>,
    #[arg(long, conflicts_with_all = ["spec", "gens"])]
    gaps: Option<String>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("bound").required(true).args(["max_genus", "max_conductor"]))]
struct EnumerateArgs {
    #[arg(long)]
    max_genus: Option<u32>,
    #[arg(long)]
    max_conductor: Option<u32>,
    /// e.g. `b=2 and e<=5`, over e, c, genus, n, r, b, k.
    #[arg(long)]
    filter: Option<String>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    theorem: String,
    #[arg(long, default_value_t = 12)]
    max_genus: u32,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Construct(String),
    #[error(transparent)]
    Filter(#[from] FilterError),
    #[error(transparent)]
    Theorem(#[from] VerifyError),
    #[error("{0}")]
    Usage(String),
    #[error("i/o: {0}")]
    Io(#[from] io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) | CliError::Filter(_) | CliError::Theorem(_) | CliError::Usage(_) => 2,
            CliError::Construct(_) => 3,
            CliError::Io(_) | CliError::Csv(_) | CliError::Json(_) => 4,
        }
    }
}

impl From<ParseSemigroupError> for CliError {
    fn from(err: ParseSemigroupError) -> Self {
        match err {
            ParseSemigroupError::Syntax(_) => CliError::Parse(err.to_string()),
            ParseSemigroupError::Invalid(_) => CliError::Construct(err.to_string()),
        }
    }
}

impl Single {
    fn semigroup(&self) -> Result<NumericalSemigroup, CliError> {
        let text = match (&self.spec, &self.gens, &self.gaps) {
            (Some(s), _, _) => s.clone(),
            (_, Some(g), _) => g.clone(),
            (_, _, Some(g)) => format!("gaps:{g}"),
            _ => return Err(CliError::Usage("give a semigroup: SPEC, --gens or --gaps".into())),
        };
        Ok(text.parse()?)
    }
}

fn sink(out: &Option<PathBuf>) -> Result<Box<dyn Write>, CliError> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

/// One CSV / JSON-lines record per semigroup.
#[derive(Serialize)]
struct Row {
    generators: String,
    e: u32,
    c: u32,
    genus: u32,
    n: u32,
    r: u32,
    b: i64,
    k: u32,
    p: u32,
    h: u32,
    type_sequence: String,
    label: &'static str,
}

impl Row {
    fn of(s: &NumericalSemigroup) -> Row {
        let rep = invariant_report(s);
        let d = decompose(s);
        Row {
            generators: s.generators_string(),
            e: rep.e,
            c: rep.c,
            genus: rep.delta,
            n: rep.n,
            r: rep.r,
            b: rep.b,
            k: rep.k,
            p: d.p,
            h: d.h,
            type_sequence: type_sequence(s).dashed(),
            label: classify(s).label.id(),
        }
    }

    fn field(&self, f: Field) -> i64 {
        match f {
            Field::E => self.e as i64,
            Field::C => self.c as i64,
            Field::Genus => self.genus as i64,
            Field::N => self.n as i64,
            Field::R => self.r as i64,
            Field::B => self.b,
            Field::K => self.k as i64,
        }
    }
}

fn csv_writer(w: Box<dyn Write>) -> csv::Writer<Box<dyn Write>> {
    csv::WriterBuilder::new().delimiter(b';').from_writer(w)
}

fn write_rows(rows: &[Row], format: Format, w: Box<dyn Write>) -> Result<(), CliError> {
    match format {
        Format::Csv => {
            let mut wr = csv_writer(w);
            for row in rows {
                wr.serialize(row)?;
            }
            wr.flush()?;
        }
        Format::Json => {
            let mut w = w;
            for row in rows {
                serde_json::to_writer(&mut w, row)?;
                writeln!(w)?;
            }
            w.flush()?;
        }
        Format::Text => {
            let mut w = w;
            for row in rows {
                writeln!(
                    w,
                    "<{}>  e={} c={} genus={} r={} b={} k={}  [{}]  {}",
                    row.generators, row.e, row.c, row.genus, row.r, row.b, row.k, row.type_sequence, row.label
                )?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn emit_json(value: &impl Serialize, w: &mut dyn Write) -> Result<(), CliError> {
    serde_json::to_writer(&mut *w, value)?;
    writeln!(w)?;
    Ok(())
}

fn cmd_invariants(args: &Single) -> Result<(), CliError> {
    let s = args.semigroup()?;
    let mut w = sink(&args.out)?;
    match args.format {
        Format::Json => {
            let rep = invariant_report(&s);
            let mut v = serde_json::to_value(&rep)?;
            v["generators"] = json!(s.generators());
            v["ts"] = json!(type_sequence(&s));
            emit_json(&v, &mut w)?;
        }
        Format::Csv => return write_rows(&[Row::of(&s)], Format::Csv, w),
        Format::Text => {
            let rep = invariant_report(&s);
            writeln!(w, "S = {s} = {}", s.value_set_string())?;
            writeln!(
                w,
                "e = {}, c = {}, delta = {}, n = {}, r = {}, b = {}, k = {}, s = {}, edim = {}",
                rep.e, rep.c, rep.delta, rep.n, rep.r, rep.b, rep.k, rep.s, rep.edim
            )?;
            writeln!(w, "type sequence = {:?}", type_sequence(&s).entries())?;
        }
    }
    w.flush()?;
    Ok(())
}

fn cmd_decompose(args: &Single) -> Result<(), CliError> {
    let s = args.semigroup()?;
    let d = decompose(&s);
    let mut w = sink(&args.out)?;
    match args.format {
        Format::Json => {
            let mut v = serde_json::to_value(&d)?;
            v["skeleton"] = json!(d.skeleton());
            v["towers"] = json!((0..d.ys.len()).map(|i| d.tower(i)).collect::<Vec<_>>());
            emit_json(&v, &mut w)?;
        }
        Format::Csv => return write_rows(&[Row::of(&s)], Format::Csv, w),
        Format::Text => writeln!(w, "{d}")?,
    }
    w.flush()?;
    Ok(())
}

fn cmd_classify(args: &Single) -> Result<(), CliError> {
    let s = args.semigroup()?;
    let cls = classify(&s);
    let cor = classify_b1_b2(&s);
    let mut w = sink(&args.out)?;
    match args.format {
        Format::Json => {
            let mut v = json!({
                "generators": s.generators(),
                "label": cls.label.id(),
                "b": cls.b,
                "r": cls.r,
                "matches": cls.matches,
            });
            if let nsg_core::ClassificationLabel::Unclassified { q, .. } = cls.label {
                v["q"] = json!(q);
            }
            if let Some(c) = &cor {
                v["corollary"] = serde_json::to_value(c)?;
            }
            emit_json(&v, &mut w)?;
        }
        Format::Csv => return write_rows(&[Row::of(&s)], Format::Csv, w),
        Format::Text => {
            writeln!(w, "S = {s} = {}", s.value_set_string())?;
            writeln!(w, "b = {}, r = {}", cls.b, cls.r)?;
            match &cls.label {
                nsg_core::ClassificationLabel::Unclassified { q, .. } => {
                    writeln!(w, "label: unclassified, q = {q}")?;
                }
                _ => writeln!(w, "label: {}", cls.label.id())?,
            }
            for m in &cls.matches {
                let branch = m.branch.map(|b| format!(" ({b})")).unwrap_or_default();
                writeln!(w, "  matches {}{branch}: e = {}, c = {}, p = {}, ys = {:?}", m.family, m.e, m.c, m.p, m.ys)?;
            }
            if let Some(c) = &cor {
                writeln!(
                    w,
                    "  listed as {} with t.s. {:?} ({})",
                    c.family.family,
                    c.stated_ts.entries(),
                    if c.verified { "confirmed" } else { "MISMATCH" }
                )?;
            }
        }
    }
    w.flush()?;
    Ok(())
}

fn cmd_enumerate(args: &EnumerateArgs) -> Result<(), CliError> {
    let filter: Filter = match &args.filter {
        Some(f) => f.parse()?,
        None => Filter::default(),
    };
    let bound = match (args.max_genus, args.max_conductor) {
        (Some(g), None) if g >= 1 => Bound::Genus(g),
        (None, Some(c)) if c >= 2 => Bound::Conductor(c),
        (Some(_), None) => return Err(CliError::Usage("--max-genus must be at least 1".into())),
        (None, Some(_)) => return Err(CliError::Usage("--max-conductor must be at least 2".into())),
        _ => return Err(CliError::Usage("give exactly one of --max-genus, --max-conductor".into())),
    };
    let mut rows = par_fold(
        bound,
        Vec::new,
        |acc: &mut Vec<(NumericalSemigroup, Row)>, s| {
            let row = Row::of(s);
            if filter.accepts(|f| row.field(f)) {
                acc.push((s.clone(), row));
            }
        },
        |mut a, b| {
            a.extend(b);
            a
        },
    );
    rows.sort_by(|a, b| a.0.cmp(&b.0));
    let rows: Vec<Row> = rows.into_iter().map(|(_, r)| r).collect();
    write_rows(&rows, args.format, sink(&args.out)?)?;
    eprintln!("{} semigroups", rows.len());
    Ok(())
}

fn cmd_verify(args: &VerifyArgs) -> Result<bool, CliError> {
    let rep = verify(&args.theorem, args.max_genus)?;
    let mut w = sink(&args.out)?;
    match args.format {
        Format::Json | Format::Csv => emit_json(&rep, &mut w)?,
        Format::Text => {
            writeln!(
                w,
                "{} over {}: {} semigroups, {} checks, {} ({} ms)",
                rep.theorem_id,
                rep.bound,
                rep.semigroups_checked,
                rep.checks_evaluated,
                if rep.verified { "verified" } else { "FAILED" },
                rep.elapsed
            )?;
            for c in &rep.counterexamples {
                writeln!(w, "  <{}>: {}", c.semigroup, c.check)?;
            }
        }
    }
    w.flush()?;
    Ok(rep.verified)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Invariants(a) => cmd_invariants(a).map(|_| true),
        Command::Decompose(a) => cmd_decompose(a).map(|_| true),
        Command::Classify(a) => cmd_classify(a).map(|_| true),
        Command::Enumerate(a) => cmd_enumerate(a).map(|_| true),
        Command::Verify(a) => cmd_verify(a),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("nsg: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
