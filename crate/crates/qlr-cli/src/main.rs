//! Command-line surface: compute inverse images, enumerate recording
//! tableaux, audit the bijection, inspect slack data, and render documents.
//!
//! Exit codes: 0 success, 1 usage, 2 parse error, 3 invariant violation,
//! 4 coverage failure.

mod doc;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use doc::TableauDocument;
use qlr::kweight::{classify_n2, generate_khw_set, k_weight, Extremal, N2Class};
use qlr::partition::Partition;
use qlr::recording::RecordingTableau;
use qlr::reduction::{reduce, reduce_inverse, removals, SymplecticColumn};
use qlr::slack::slack_profile;
use qlr::tableau::SkewTableau;
use qlr::{enumerate_rec, lr_aii_inverse_traced, AuditSet};

#[derive(Parser)]
#[command(name = "qlr", version, about = "Quantum Littlewood-Richardson tableau toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Text,
    Structured,
}

#[derive(Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
enum Kind {
    Highest,
    Lowest,
    #[default]
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Apply the inverse map to a symplectic tableau and a recording tableau
    Inverse {
        /// Document holding the symplectic tableau
        s_file: PathBuf,
        /// Document holding the recording tableau
        q_file: PathBuf,
        /// Print one block per strip: slack data, bumped column, expansion,
        /// and the intermediate tableau
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Audit the inverse map against brute force over all shapes up to a size
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 6)]
        max_size: usize,
        /// Directory for audit-table caching (incremental reruns)
        #[arg(long)]
        cache_dir: Option<PathBuf>,
    },
    /// Generate the k-highest/-lowest weight tableaux of a shape
    Khw {
        #[arg(long)]
        n: usize,
        /// Outer shape, comma-separated parts (empty for the empty shape)
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum, default_value_t)]
        kind: Kind,
    },
    /// Reduce an increasing column to its symplectic core
    Reduce {
        /// Comma-separated entries
        #[arg(long)]
        column: String,
    },
    /// Expand a symplectic column back to a prescribed length
    Expand {
        /// Comma-separated entries (empty for the empty column)
        #[arg(long)]
        column: String,
        #[arg(long)]
        length: usize,
        #[arg(long)]
        n: usize,
    },
    /// Enumerate the recording tableaux of a skew shape
    RecEnum {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Print the slack data of a recording tableau
    Slack {
        q_file: PathBuf,
    },
    /// Re-render a tableau document (text or structured JSON)
    Render {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Alphabet half-bound, required for text input
        #[arg(long)]
        n: Option<usize>,
        /// Skip the semistandardness check
        #[arg(long)]
        raw: bool,
    },
}

enum Failure {
    Parse(String),
    Invariant(String),
    Coverage(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Parse(_) => 2,
            Failure::Invariant(_) => 3,
            Failure::Coverage(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Parse(m) | Failure::Invariant(m) | Failure::Coverage(m) => m,
        }
    }
}

impl From<qlr::Error> for Failure {
    fn from(e: qlr::Error) -> Failure {
        Failure::Invariant(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn parse_partition(text: &str) -> Result<Partition, Failure> {
    let trimmed = text.trim();
    if trimmed.is_empty() || trimmed == "-" || trimmed == "()" || trimmed == "0" {
        return Ok(Partition::empty());
    }
    let parts: Result<Vec<usize>, _> = trimmed.split(',').map(|p| p.trim().parse()).collect();
    let parts = parts.map_err(|_| Failure::Parse(format!("bad partition {text:?}")))?;
    Partition::try_new(parts).map_err(|e| Failure::Parse(e.to_string()))
}

fn parse_column(text: &str) -> Result<Vec<usize>, Failure> {
    let trimmed = text.trim();
    if trimmed.is_empty() || trimmed == "-" || trimmed == "()" {
        return Ok(Vec::new());
    }
    trimmed
        .split(',')
        .map(|p| p.trim().parse())
        .collect::<Result<Vec<usize>, _>>()
        .map_err(|_| Failure::Parse(format!("bad column {text:?}")))
}

fn read_document(path: &PathBuf, n_flag: Option<usize>) -> Result<TableauDocument, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
    TableauDocument::parse(&text, n_flag)
        .map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn read_semistandard(path: &PathBuf) -> Result<(SkewTableau, usize), Failure> {
    let doc = read_document(path, None)?;
    let t = doc
        .to_tableau()
        .map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
    if !t.is_semistandard() {
        return Err(Failure::Parse(format!(
            "{}: tableau is not semistandard",
            path.display()
        )));
    }
    Ok((t, doc.n))
}

fn read_recording(path: &PathBuf) -> Result<RecordingTableau, Failure> {
    let doc = read_document(path, None)?;
    let t = doc
        .to_tableau()
        .map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
    RecordingTableau::new(t, doc.n)
        .map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn render(t: &SkewTableau, n: usize, format: Format) -> String {
    match format {
        Format::Text => t.to_string(),
        Format::Structured => TableauDocument::from_tableau(t, n).render_json(),
    }
}

fn column_display(column: &[usize]) -> String {
    if column.is_empty() {
        "()".to_string()
    } else {
        column
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn rows_display(rows: &[usize]) -> String {
    if rows.is_empty() {
        "()".to_string()
    } else {
        format!(
            "({})",
            rows.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Inverse {
            s_file,
            q_file,
            trace,
            format,
        } => {
            let (s, s_n) = read_semistandard(&s_file)?;
            let q = read_recording(&q_file)?;
            if s_n != q.n() {
                return Err(Failure::Parse(format!(
                    "alphabet bounds disagree: S has n = {s_n}, Q has n = {}",
                    q.n()
                )));
            }
            let (result, traces) = lr_aii_inverse_traced(&s, &q)?;
            let mut out = String::new();
            if trace {
                for step in &traces {
                    writeln!(
                        out,
                        "strip {}: size {}, slack {}, rows {}, target length {}",
                        step.strip,
                        step.size,
                        step.slack,
                        rows_display(&step.rows),
                        step.target_len
                    )
                    .unwrap();
                    writeln!(out, "bumped: {}", column_display(&step.bumped)).unwrap();
                    writeln!(out, "expanded: {}", column_display(&step.expanded)).unwrap();
                    writeln!(out, "tableau:").unwrap();
                    writeln!(out, "{}", step.result).unwrap();
                    writeln!(out).unwrap();
                }
                writeln!(out, "result:").unwrap();
            }
            writeln!(out, "{}", render(&result, q.n(), format)).unwrap();
            print!("{out}");
            Ok(())
        }
        Command::Verify {
            n,
            max_size,
            cache_dir,
        } => {
            let mut set = AuditSet::new(cache_dir);
            let mut total = 0usize;
            let mut failures = Vec::new();
            println!("shape audit for n = {n}, |lambda| <= {max_size}");
            println!("{:<18} {:>8} {:>8}  {:<9} covered", "lambda", "sst", "pairs", "injective");
            for lambda in Partition::all_up_to(max_size, 2 * n) {
                let report = &set.table(&lambda, n).report;
                let pairs: usize = report.per_mu.iter().map(|(_, s, r)| s * r).sum();
                println!(
                    "{:<18} {:>8} {:>8}  {:<9} {}",
                    lambda.to_string(),
                    report.sst_count,
                    pairs,
                    if report.injective { "yes" } else { "NO" },
                    if report.covered { "yes" } else { "NO" }
                );
                total += report.sst_count;
                if !report.covered {
                    failures.push(lambda.to_string());
                }
            }
            if failures.is_empty() {
                println!("all shapes covered ({total} tableaux)");
                Ok(())
            } else {
                Err(Failure::Coverage(format!(
                    "coverage failed for {}",
                    failures.join(", ")
                )))
            }
        }
        Command::Khw { n, lambda, kind } => {
            let lambda = parse_partition(&lambda)?;
            if lambda.len() > 2 * n {
                return Err(Failure::Parse(format!(
                    "{lambda} has more than 2n = {} rows",
                    2 * n
                )));
            }
            let kinds: &[Extremal] = match kind {
                Kind::Highest => &[Extremal::Highest],
                Kind::Lowest => &[Extremal::Lowest],
                Kind::Both => &[Extremal::Highest, Extremal::Lowest],
            };
            for &k in kinds {
                let label = match k {
                    Extremal::Highest => "k-highest",
                    Extremal::Lowest => "k-lowest",
                };
                let generated = generate_khw_set(&lambda, n, k)?;
                println!("{label} weight tableaux of shape {lambda}, n = {n}: {}", generated.len());
                for (mu, t) in &generated {
                    let weight = k_weight(t, n);
                    let type_label = if n == 2 {
                        match classify_n2(t).0 {
                            N2Class::Type1 => " [type1]",
                            N2Class::Type2 => " [type2]",
                            N2Class::Reject => " [unclassified]",
                        }
                    } else {
                        ""
                    };
                    println!("mu = {mu}, k-weight = {weight}{type_label}");
                    if !t.is_empty() {
                        println!("{t}");
                    } else {
                        println!("(empty)");
                    }
                    println!();
                }
            }
            Ok(())
        }
        Command::Reduce { column } => {
            let entries = parse_column(&column)?;
            if !entries.windows(2).all(|w| w[0] < w[1]) || entries.first() == Some(&0) {
                return Err(Failure::Parse(format!(
                    "column {entries:?} is not strictly increasing"
                )));
            }
            let removed = removals(&entries);
            let reduced = reduce(&entries);
            println!("removed: {}", column_display(&removed));
            println!("reduced: {}", column_display(reduced.entries()));
            Ok(())
        }
        Command::Expand { column, length, n } => {
            let entries = parse_column(&column)?;
            let column = SymplecticColumn::try_new(entries)
                .map_err(|e| Failure::Parse(e.to_string()))?;
            let expanded = reduce_inverse(&column, length, 2 * n)?;
            println!("{}", column_display(&expanded));
            Ok(())
        }
        Command::RecEnum {
            n,
            lambda,
            mu,
            format,
        } => {
            let lambda = parse_partition(&lambda)?;
            let mu = parse_partition(&mu)?;
            let recs = enumerate_rec(&lambda, &mu, n);
            println!(
                "recording tableaux of {}/{} at n = {n}: {}",
                lambda,
                mu,
                recs.len()
            );
            for q in &recs {
                match format {
                    Format::Text => println!("{}\n", q.filling()),
                    Format::Structured => {
                        println!("{}", TableauDocument::from_tableau(q.filling(), n).render_json())
                    }
                }
            }
            Ok(())
        }
        Command::Slack { q_file } => {
            let q = read_recording(&q_file)?;
            let profile = slack_profile(&q);
            println!("strips: {}", profile.num_strips());
            println!(
                "slack sequence: {}",
                column_display(&profile.slack_sequence())
            );
            let vectors = profile
                .row_vector_sequence()
                .iter()
                .map(|r| rows_display(r))
                .collect::<Vec<_>>()
                .join(" ");
            println!("slack row vectors: {vectors}");
            println!("incidence matrix:");
            for row in profile.incidence_matrix() {
                println!(
                    "{}",
                    row.iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                );
            }
            Ok(())
        }
        Command::Render {
            file,
            format,
            n,
            raw,
        } => {
            let doc = read_document(&file, n)?;
            let t = doc
                .to_tableau()
                .map_err(|e| Failure::Parse(format!("{}: {e}", file.display())))?;
            if !raw && !t.is_semistandard() {
                return Err(Failure::Parse(format!(
                    "{}: tableau is not semistandard (use --raw to render anyway)",
                    file.display()
                )));
            }
            match format {
                Format::Text => println!("{t}"),
                Format::Structured => println!("{}", TableauDocument::from_tableau(&t, doc.n).render_json()),
            }
            Ok(())
        }
    }
}
