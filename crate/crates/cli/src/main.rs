//! `tribracket`: command-line access to the library.
//!
//! Exit codes: 0 on success, 1 when an input parses but fails a
//! mathematical precondition, 2 on usage or parse errors.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use tribracket::algebra::{ensure_tribracket, make_alexander, make_dehn, validate};
use tribracket::diagrams::{extract_faces, parse_pd_file, Diagram};
use tribracket::enumeration::{classify, enumerate_tribrackets, parse_census, product_table, reference_registry};
use tribracket::enumeration::{Census, Filter};
use tribracket::invariants::{batch_report, enumerate_colorings};
use tribracket::morphisms::{are_isomorphic, enumerate_homs, homset_tribracket, parse_tensor_with_legend};
use tribracket::{Error, GroupTable, TribracketTable};

/// Largest order handled without `--allow-long`.
const QUICK_ORDER: usize = 4;

#[derive(Parser)]
#[command(name = "tribracket", version, about = "Finite tribrackets and their knot invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check both axioms and the entropic condition.
    Check { tensor: PathBuf },
    /// Print a tensor from a standard family.
    #[command(subcommand)]
    Gen(Family),
    /// List every tribracket of order n.
    Enumerate {
        n: usize,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// List one representative per isomorphism class of order n.
    Classify {
        n: usize,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Find an isomorphism between two tables.
    Iso { a: PathBuf, b: PathBuf },
    /// List the homomorphisms from T to X.
    Hom { source: PathBuf, target: PathBuf },
    /// Print the homset tribracket Hom(T, X) with its legend.
    Homset { source: PathBuf, target: PathBuf },
    /// Label every Hom(A, B) for classes A, B of a census file.
    ProductTable { census: PathBuf },
    /// List the region colorings of diagrams by a tribracket.
    Color {
        pd: PathBuf,
        tensor: PathBuf,
        #[arg(long)]
        name: Option<String>,
    },
    /// Report lines for selected diagrams of a PD file.
    Invariant {
        pd: PathBuf,
        tensor: PathBuf,
        #[arg(long)]
        name: Option<String>,
    },
    /// Report lines for every diagram of a PD file.
    Batch {
        pd: PathBuf,
        tensor: PathBuf,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Subcommand)]
enum Family {
    /// [x,y,z] = ty + sz - tsx mod n.
    Alexander { n: usize, s: i64, t: i64 },
    /// [x,y,z] = y x^-1 z over a group such as Z4, S3, D4 or Z2xZ2.
    Dehn { group: String },
}

#[derive(clap::Args)]
struct SearchArgs {
    #[arg(long)]
    entropic_only: bool,
    #[arg(long)]
    jobs: Option<usize>,
    /// Permit orders above 4.
    #[arg(long)]
    allow_long: bool,
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl Failure {
    fn at(place: &Path, e: Error) -> Self {
        let msg = format!("{}: {e}", place.display());
        if e.is_usage() {
            Failure::Usage(msg)
        } else {
            Failure::Domain(msg)
        }
    }
}

type Outcome = Result<String, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

/// A tensor file, optionally with a legend, named after its file stem.
fn load_tensor(path: &Path) -> Result<TribracketTable, Failure> {
    let (t, _) = parse_tensor_with_legend(&read(path)?).map_err(|e| Failure::at(path, e))?;
    let name = path.file_stem().map(|s| s.to_string_lossy().into_owned());
    Ok(match name {
        Some(n) => t.with_name(n),
        None => t,
    })
}

fn load_tribracket(path: &Path) -> Result<TribracketTable, Failure> {
    let t = load_tensor(path)?;
    ensure_tribracket(&t).map_err(|e| Failure::at(path, e))?;
    Ok(t)
}

fn load_diagrams(path: &Path, name: Option<&str>) -> Result<Vec<Diagram>, Failure> {
    let all = parse_pd_file(&read(path)?).map_err(|e| Failure::at(path, e))?;
    match name {
        None => Ok(all),
        Some(n) => {
            let picked: Vec<Diagram> = all.into_iter().filter(|d| d.name() == n).collect();
            if picked.is_empty() {
                Err(Failure::Usage(format!("{}: no diagram named {n:?}", path.display())))
            } else {
                Ok(picked)
            }
        }
    }
}

fn with_jobs<T: Send>(jobs: Option<usize>, work: impl FnOnce() -> T + Send) -> Result<T, Failure> {
    match jobs {
        None => Ok(work()),
        Some(0) => Err(Failure::Usage("--jobs must be at least 1".into())),
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .map(|pool| pool.install(work))
            .map_err(|e| Failure::Usage(format!("cannot start {k} workers: {e}"))),
    }
}

fn one_based(xs: &[usize]) -> String {
    xs.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(" ")
}

fn search(n: usize, args: &SearchArgs, classes: bool) -> Outcome {
    if n > QUICK_ORDER && !args.allow_long {
        return Err(Failure::Usage(format!(
            "order {n} can run for a very long time; pass --allow-long to proceed"
        )));
    }
    let filter = if args.entropic_only { Filter::EntropicOnly } else { Filter::All };
    let tables = with_jobs(args.jobs, || {
        if classes {
            classify(n, filter)
        } else {
            Ok(enumerate_tribrackets(n, filter))
        }
    })?
    .map_err(|e| Failure::Domain(format!("order {n}: {e}")))?;
    Ok(Census::new(n, filter, tables).to_text())
}

fn run(cli: Cli) -> Outcome {
    let mut out = String::new();
    match cli.command {
        Command::Check { tensor } => {
            let t = load_tensor(&tensor)?;
            let report = validate(&t);
            if !report.is_tribracket() {
                return Err(Failure::Domain(format!("{}: {report}", tensor.display())));
            }
            writeln!(out, "{report}").unwrap();
        }
        Command::Gen(family) => {
            let t = match family {
                Family::Alexander { n, s, t } => make_alexander(n, s, t),
                Family::Dehn { group } => GroupTable::from_spec(&group).and_then(|g| make_dehn(&g)),
            };
            let t = t.map_err(|e| {
                if e.is_usage() {
                    Failure::Usage(e.to_string())
                } else {
                    Failure::Domain(e.to_string())
                }
            })?;
            write!(out, "{t}").unwrap();
        }
        Command::Enumerate { n, search: args } => out = search(n, &args, false)?,
        Command::Classify { n, search: args } => out = search(n, &args, true)?,
        Command::Iso { a, b } => {
            let (ta, tb) = (load_tribracket(&a)?, load_tribracket(&b)?);
            match are_isomorphic(&ta, &tb) {
                Some(cert) => writeln!(out, "isomorphic: {}", one_based(&cert.permutation)).unwrap(),
                None => writeln!(out, "nonisomorphic").unwrap(),
            }
        }
        Command::Hom { source, target } => {
            let (s, t) = (load_tribracket(&source)?, load_tribracket(&target)?);
            let homs = enumerate_homs(&s, &t);
            writeln!(out, "homs={}", homs.len()).unwrap();
            for (i, h) in homs.iter().enumerate() {
                writeln!(out, "{}: {}", i + 1, one_based(&h.image)).unwrap();
            }
        }
        Command::Homset { source, target } => {
            let s = load_tribracket(&source)?;
            let t = load_tribracket(&target)?;
            let h = homset_tribracket(&s, &t).map_err(|e| Failure::at(&target, e))?;
            write!(out, "{h}").unwrap();
        }
        Command::ProductTable { census } => {
            let sections = parse_census(&read(&census)?).map_err(|e| Failure::at(&census, e))?;
            let tables: Vec<TribracketTable> = sections.into_iter().flat_map(|c| c.tables).collect();
            for t in &tables {
                ensure_tribracket(t).map_err(|e| Failure::at(&census, e))?;
            }
            let p = product_table(&tables).map_err(|e| Failure::at(&census, e))?;
            write!(out, "{p}").unwrap();
            for c in p.discovered() {
                writeln!(out, "\n{}", c.label).unwrap();
                write!(out, "{}", c.table).unwrap();
            }
        }
        Command::Color { pd, tensor, name } => {
            let x = load_tribracket(&tensor)?;
            for d in load_diagrams(&pd, name.as_deref())? {
                let regions = extract_faces(&d).map_err(|e| Failure::at(&pd, e))?.region_count();
                let colorings = enumerate_colorings(&d, &x).map_err(|e| Failure::at(&tensor, e))?;
                writeln!(out, "{} regions={} colorings={}", d.name(), regions, colorings.len()).unwrap();
                for c in colorings {
                    writeln!(out, "{}", one_based(&c.assignment)).unwrap();
                }
            }
        }
        Command::Invariant { pd, tensor, name } => {
            let x = load_tribracket(&tensor)?;
            let diagrams = load_diagrams(&pd, name.as_deref())?;
            out = report(&diagrams, &x, &tensor)?;
        }
        Command::Batch { pd, tensor, jobs } => {
            let x = load_tribracket(&tensor)?;
            let diagrams = load_diagrams(&pd, None)?;
            out = with_jobs(jobs, || report(&diagrams, &x, &tensor))??;
        }
    }
    Ok(out)
}

fn report(diagrams: &[Diagram], x: &TribracketTable, tensor: &Path) -> Outcome {
    let mut registry = reference_registry();
    let lines = batch_report(diagrams, x, &mut registry).map_err(|e| Failure::at(tensor, e))?;
    Ok(lines.iter().map(|l| format!("{l}\n")).collect())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
