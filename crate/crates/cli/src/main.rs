//! Command line front end. Every subcommand is a thin shell around one
//! library call plus formatting; exit code 0 means success or a Valid
//! verdict, 2 a Rejected verdict, 1 a usage or domain error.

mod output;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use cutseq::bridge::{sequence_to_slope, slope_to_sequence};
use cutseq::error::Error;
use cutseq::geometry::{billiard_path, sturmian_prefix, Aim, Point};
use cutseq::rational::Rational;
use cutseq::render::{render_svg, RenderSpec, SlopeSpec, Trajectory, View};
use cutseq::surd::QuadraticSurd;
use cutseq::transforms::{apply_matrix, ShearMatrix};
use cutseq::words::{Alphabet, Balance, FiniteWord, PeriodicWord, Verdict, WordAnalysis};
use cutseq::ContinuedFraction;

use output::*;

#[derive(Parser)]
#[command(
    name = "cutseq",
    about = "Exact translation between torus trajectory slopes and their symbolic codings",
    version
)]
struct Cli {
    /// Emit a schema-stable JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Continued fraction of a rational or quadratic-surd value.
    Cf {
        /// `p/q`, an integer, or a surd like `sqrt(2)` or `(1+sqrt(5))/2`.
        value: String,
        /// Print only the first K partial quotients.
        #[arg(long)]
        terms: Option<usize>,
    },
    /// Periodic cutting sequence of a nonnegative rational slope.
    Slope2seq { slope: String },
    /// Slope and rewrite trace of a periodic cutting sequence.
    Seq2slope { word: String },
    /// Validity verdict for a periodic word, with the rewrite trace.
    Validate { word: String },
    /// Complexity table p(1..n) of a word; periodic words use cyclic factors.
    Complexity {
        word: String,
        #[arg(long)]
        n: usize,
    },
    /// Balance check over factor lengths up to MAX.
    Balance {
        word: String,
        /// Default: period length for periodic words, length/4 for finite.
        #[arg(long)]
        max: Option<usize>,
    },
    /// Complexity-based class: cutting-sequence, sturmian-consistent, or rejected.
    Classify { word: String },
    /// Sturmian prefix of an irrational slope, printed in the 0/1 alphabet.
    Sturmian {
        slope: String,
        #[arg(long)]
        intercept: String,
        #[arg(long)]
        n: usize,
    },
    /// Exact billiard simulation: bounce table and detected period.
    Simulate {
        /// Nonnegative rational slope `p/q`, or `vertical`.
        slope: String,
        /// Starting point `x,y` inside the closed unit square.
        #[arg(long)]
        start: String,
        #[arg(long)]
        bounces: usize,
    },
    /// Factor a determinant-1 nonnegative matrix into basic shears R and L.
    Decompose { matrix: String },
    /// Apply such a matrix to a periodic cutting sequence.
    Apply { matrix: String, word: String },
    /// Draw a trajectory as a deterministic SVG file.
    Render(RenderArgs),
}

#[derive(Args)]
struct RenderArgs {
    #[arg(long, value_enum)]
    view: ViewArg,
    /// `p/q`, a surd like `sqrt(2)`, or `vertical`.
    #[arg(long)]
    slope: String,
    /// Intercept of the line at x = 0 (torus and unfolded views).
    #[arg(long, conflicts_with = "start")]
    intercept: Option<String>,
    /// Starting point `x,y` (billiard view).
    #[arg(long)]
    start: Option<String>,
    /// Number of crossings or bounces to trace.
    #[arg(long)]
    steps: usize,
    /// Canvas size of one panel in pixels.
    #[arg(long, default_value_t = 480)]
    size: u32,
    /// Leave out the unit grid.
    #[arg(long)]
    no_grid: bool,
    /// Draw A/B edge labels.
    #[arg(long)]
    labels: bool,
    /// Trajectory stroke width in pixels.
    #[arg(long, default_value_t = 2)]
    stroke: u32,
    /// Slope of a second trajectory drawn in a side panel.
    #[arg(long)]
    compare_slope: Option<String>,
    /// Intercept of the second trajectory.
    #[arg(long)]
    compare_intercept: Option<String>,
    /// Output SVG path.
    #[arg(short, long)]
    out: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum ViewArg {
    Billiard,
    Torus,
    Unfolded,
}

/// What a successful handler hands back: the text lines, the JSON object,
/// and whether the outcome is a rejection (exit code 2).
struct Report {
    text: String,
    json: serde_json::Value,
    rejected: bool,
}

impl Report {
    fn ok(text: String, json: serde_json::Value) -> Self {
        Report { text, json, rejected: false }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let kind = err.kind();
            if kind == ErrorKind::DisplayHelp || kind == ErrorKind::DisplayVersion {
                print!("{err}");
                return ExitCode::SUCCESS;
            }
            eprint!("{err}");
            return ExitCode::from(1);
        }
    };
    let json = cli.json;
    match run(cli.command) {
        Ok(report) => {
            if json {
                println!("{}", serde_json::to_string_pretty(&report.json).expect("serializable"));
            } else {
                println!("{}", report.text);
            }
            if report.rejected {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::Rejected(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn run(command: Command) -> Result<Report, Error> {
    match command {
        Command::Cf { value, terms } => cf_command(&value, terms),
        Command::Slope2seq { slope } => {
            let slope: Rational = slope.parse()?;
            let word = slope_to_sequence(&slope)?;
            Ok(Report::ok(
                word.to_string(),
                serde_json::to_value(SequenceOut {
                    slope: slope.to_string(),
                    word: word.to_string(),
                })
                .expect("schema"),
            ))
        }
        Command::Seq2slope { word } => {
            let parsed: PeriodicWord = word.parse()?;
            let (slope, trace) = sequence_to_slope(&parsed)?;
            let steps: Vec<String> = trace.steps().iter().map(|s| s.to_string()).collect();
            let text = format!("{slope}\ntrace: {}", steps.join(" "));
            Ok(Report::ok(
                text,
                serde_json::to_value(SlopeOut {
                    word: parsed.to_string(),
                    slope: slope.to_string(),
                    trace: steps,
                })
                .expect("schema"),
            ))
        }
        Command::Validate { word } => {
            let parsed: PeriodicWord = word.parse()?;
            match parsed.validate_cutting_sequence() {
                Verdict::Valid { steps } => {
                    let trace: Vec<String> = steps.iter().map(|s| s.to_string()).collect();
                    let text = format!("Valid\ntrace: {}", trace.join(" "));
                    Ok(Report::ok(
                        text,
                        serde_json::to_value(ValidateOut {
                            word: parsed.to_string(),
                            verdict: "valid".into(),
                            trace,
                            rule: None,
                            reason: None,
                        })
                        .expect("schema"),
                    ))
                }
                Verdict::Rejected(r) => {
                    let text = format!("Rejected: {r}");
                    Ok(Report {
                        text,
                        json: serde_json::to_value(ValidateOut {
                            word: parsed.to_string(),
                            verdict: "rejected".into(),
                            trace: vec![],
                            rule: Some(r.rule),
                            reason: Some(r.to_string()),
                        })
                        .expect("schema"),
                        rejected: true,
                    })
                }
            }
        }
        Command::Complexity { word, n } => complexity_command(&word, n),
        Command::Balance { word, max } => balance_command(&word, max),
        Command::Classify { word } => classify_command(&word),
        Command::Sturmian { slope, intercept, n } => {
            let slope: QuadraticSurd = slope.parse()?;
            let intercept: Rational = intercept.parse()?;
            let prefix = sturmian_prefix(&slope, &intercept, n)?;
            let text = prefix.format(Alphabet::Binary);
            Ok(Report::ok(
                text.clone(),
                serde_json::to_value(SturmianOut {
                    slope: slope.to_string(),
                    intercept: intercept.to_string(),
                    n,
                    word: text,
                })
                .expect("schema"),
            ))
        }
        Command::Simulate { slope, start, bounces } => simulate_command(&slope, &start, bounces),
        Command::Decompose { matrix } => {
            let m: ShearMatrix = matrix.parse()?;
            let word = m.decompose();
            debug_assert_eq!(word.product(), m);
            Ok(Report::ok(
                word.to_string(),
                serde_json::to_value(DecomposeOut {
                    matrix: m.to_string(),
                    word: word.to_string(),
                })
                .expect("schema"),
            ))
        }
        Command::Apply { matrix, word } => {
            let m: ShearMatrix = matrix.parse()?;
            let alphabet = Alphabet::detect(&word);
            let parsed: PeriodicWord = word.parse()?;
            let image = apply_matrix(&m, &parsed)?;
            Ok(Report::ok(
                image.format(alphabet),
                serde_json::to_value(ApplyOut {
                    matrix: m.to_string(),
                    input: parsed.format(alphabet),
                    output: image.format(alphabet),
                })
                .expect("schema"),
            ))
        }
        Command::Render(args) => render_command(args),
    }
}

fn cf_command(value: &str, terms: Option<usize>) -> Result<Report, Error> {
    // rationals take the finite expansion; anything else is parsed as a surd
    if let Ok(rational) = value.parse::<Rational>() {
        let cf = ContinuedFraction::expand(&rational)?;
        let quotients: Vec<String> = cf.head().iter().map(|a| a.to_string()).collect();
        let truncated = matches!(terms, Some(k) if k < quotients.len());
        let text = if truncated {
            format_prefix(&quotients[..terms.expect("present")])
        } else {
            cf.to_string()
        };
        let quotients = if truncated {
            quotients[..terms.expect("present")].to_vec()
        } else {
            quotients
        };
        return Ok(Report::ok(
            text.clone(),
            serde_json::to_value(CfOut {
                input: rational.to_string(),
                kind: "rational".into(),
                cf: text,
                quotients,
                tail: None,
                truncated,
            })
            .expect("schema"),
        ));
    }
    let surd: QuadraticSurd = value.parse()?;
    match terms {
        Some(k) => {
            let prefix = surd.cf_prefix(k)?;
            let quotients: Vec<String> = prefix.iter().map(|a| a.to_string()).collect();
            let complete = surd.is_rational() && prefix.len() < k;
            let text = if complete {
                ContinuedFraction::finite(prefix.clone())?.to_string()
            } else {
                format_prefix(&quotients)
            };
            Ok(Report::ok(
                text.clone(),
                serde_json::to_value(CfOut {
                    input: surd.to_string(),
                    kind: "surd-prefix".into(),
                    cf: text,
                    quotients,
                    tail: None,
                    truncated: !complete,
                })
                .expect("schema"),
            ))
        }
        None => {
            let cf = ContinuedFraction::expand_quadratic(&surd)?;
            let quotients: Vec<String> = cf.head().iter().map(|a| a.to_string()).collect();
            let tail = cf
                .tail()
                .map(|t| t.iter().map(|a| a.to_string()).collect::<Vec<_>>());
            Ok(Report::ok(
                cf.to_string(),
                serde_json::to_value(CfOut {
                    input: surd.to_string(),
                    kind: if cf.is_periodic() { "surd-periodic" } else { "rational" }.into(),
                    cf: cf.to_string(),
                    quotients,
                    tail,
                    truncated: false,
                })
                .expect("schema"),
            ))
        }
    }
}

fn format_prefix(quotients: &[String]) -> String {
    match quotients {
        [] => "[...]".into(),
        [first] => format!("[{first}; ...]"),
        [first, rest @ ..] => format!("[{first}; {}, ...]", rest.join(", ")),
    }
}

/// A word argument: `(...)` star form parses as periodic, bare letters as a
/// finite word.
enum WordArg {
    Periodic(PeriodicWord),
    Finite(FiniteWord),
}

fn parse_word_arg(text: &str) -> Result<(WordArg, Alphabet), Error> {
    let alphabet = Alphabet::detect(text);
    let trimmed = text.trim();
    if trimmed.starts_with('(') {
        Ok((WordArg::Periodic(trimmed.parse()?), alphabet))
    } else {
        Ok((WordArg::Finite(trimmed.parse()?), alphabet))
    }
}

fn complexity_command(word: &str, n: usize) -> Result<Report, Error> {
    if n == 0 {
        return Err(Error::Domain("need n >= 1".into()));
    }
    let (arg, _) = parse_word_arg(word)?;
    let mut rows = Vec::with_capacity(n);
    for length in 1..=n {
        let p = match &arg {
            WordArg::Periodic(w) => w.complexity(length)?,
            WordArg::Finite(w) => w.complexity(length)?,
        };
        rows.push(ComplexityRow { n: length, p });
    }
    let text = rows
        .iter()
        .map(|r| format!("p({}) = {}", r.n, r.p))
        .collect::<Vec<_>>()
        .join("\n");
    let word_text = match &arg {
        WordArg::Periodic(w) => w.to_string(),
        WordArg::Finite(w) => w.to_string(),
    };
    Ok(Report::ok(
        text,
        serde_json::to_value(ComplexityOut { word: word_text, values: rows }).expect("schema"),
    ))
}

fn balance_command(word: &str, max: Option<usize>) -> Result<Report, Error> {
    let (arg, alphabet) = parse_word_arg(word)?;
    let n_max = max.unwrap_or(match &arg {
        WordArg::Periodic(w) => w.period_len(),
        WordArg::Finite(w) => (w.len() / 4).max(1),
    });
    let (verdict, witness) = match &arg {
        WordArg::Periodic(w) => (w.balance(n_max), w.unbalance_witness(n_max)),
        WordArg::Finite(w) => (w.balance(n_max), w.unbalance_witness(n_max)),
    };
    match verdict {
        Balance::Balanced => Ok(Report::ok(
            format!("Balanced (factor lengths up to {n_max})"),
            serde_json::to_value(BalanceOut {
                balanced: true,
                n_max,
                heavy: None,
                light: None,
                witness: None,
            })
            .expect("schema"),
        )),
        Balance::Unbalanced { u, v } => {
            let w_text = witness.as_ref().map(|w| w.format(alphabet));
            let mut text = format!(
                "Unbalanced: {} carries two more ones than {}",
                u.format(alphabet),
                v.format(alphabet)
            );
            if let Some(wt) = &w_text {
                text.push_str(&format!("\nwitness W = \"{wt}\": both 0W0 and 1W1 occur"));
            }
            Ok(Report::ok(
                text,
                serde_json::to_value(BalanceOut {
                    balanced: false,
                    n_max,
                    heavy: Some(u.format(alphabet)),
                    light: Some(v.format(alphabet)),
                    witness: w_text,
                })
                .expect("schema"),
            ))
        }
    }
}

fn classify_command(word: &str) -> Result<Report, Error> {
    let (arg, _) = parse_word_arg(word)?;
    const CAVEAT: &str = "note: finite evidence certifies consistency only, never Sturmian-ness";
    let (class, detail) = match &arg {
        WordArg::Periodic(w) => {
            let plateau = w.complexity_plateau();
            ("cutting-sequence", format!("complexity flattens at n = {plateau}"))
        }
        WordArg::Finite(w) => {
            let n_max = (w.len() / 4).clamp(1, 32);
            let mut plateau = None;
            let mut staircase = true;
            let mut prev = None;
            for n in 1..=n_max {
                let p = w.complexity(n)?;
                if prev == Some(p) {
                    plateau = Some(n - 1);
                    break;
                }
                if p != n + 1 {
                    staircase = false;
                }
                prev = Some(p);
            }
            if let Some(at) = plateau {
                ("cutting-sequence", format!("complexity flattens at n = {at}"))
            } else if staircase && w.balance(n_max).is_balanced() {
                (
                    "sturmian-consistent",
                    format!("p(n) = n + 1 and balanced for all n <= {n_max}"),
                )
            } else {
                ("rejected", format!("complexity or balance fails within n <= {n_max}"))
            }
        }
    };
    let text = format!("{class}\n{detail}\n{CAVEAT}");
    Ok(Report {
        text,
        json: serde_json::to_value(ClassifyOut {
            class: class.into(),
            detail,
            caveat: CAVEAT.into(),
        })
        .expect("schema"),
        rejected: class == "rejected",
    })
}

fn parse_point(text: &str) -> Result<Point, Error> {
    let (x, y) = text
        .split_once(',')
        .ok_or_else(|| Error::Parse(format!("expected a point like `1/2,0`, got `{text}`")))?;
    Ok(Point::new(x.trim().parse()?, y.trim().parse()?))
}

fn parse_aim(text: &str) -> Result<Aim, Error> {
    if text.trim().eq_ignore_ascii_case("vertical") {
        Ok(Aim::Vertical)
    } else {
        Ok(Aim::Slope(text.parse()?))
    }
}

fn simulate_command(slope: &str, start: &str, bounces: usize) -> Result<Report, Error> {
    let aim = parse_aim(slope)?;
    let start = parse_point(start)?;
    let path = billiard_path(&aim, &start, bounces)?;
    let mut lines: Vec<String> = path
        .bounces
        .iter()
        .enumerate()
        .map(|(i, b)| format!("{} {} {} {}", i + 1, b.edge, b.point.x, b.point.y))
        .collect();
    match path.period {
        Some(p) => lines.push(format!("period: {p}")),
        None => lines.push(format!("no period within {bounces} bounces")),
    }
    let rows: Vec<BounceRow> = path
        .bounces
        .iter()
        .map(|b| BounceRow {
            edge: b.edge.to_string(),
            x: b.point.x.to_string(),
            y: b.point.y.to_string(),
            param: b.param.to_string(),
        })
        .collect();
    Ok(Report::ok(
        lines.join("\n"),
        serde_json::to_value(SimulateOut {
            slope: slope.to_string(),
            start: format!("{},{}", start.x, start.y),
            bounces: rows,
            period: path.period,
        })
        .expect("schema"),
    ))
}

fn parse_slope_spec(text: &str) -> Result<SlopeSpec, Error> {
    let trimmed = text.trim();
    if trimmed.eq_ignore_ascii_case("vertical") {
        return Ok(SlopeSpec::Vertical);
    }
    if let Ok(r) = trimmed.parse::<Rational>() {
        return Ok(SlopeSpec::Rational(r));
    }
    let surd: QuadraticSurd = trimmed.parse()?;
    Ok(match surd.to_rational() {
        Some(r) => SlopeSpec::Rational(r),
        None => SlopeSpec::Surd(surd),
    })
}

fn render_command(args: RenderArgs) -> Result<Report, Error> {
    let view = match args.view {
        ViewArg::Billiard => View::Billiard,
        ViewArg::Torus => View::Torus,
        ViewArg::Unfolded => View::Unfolded,
    };
    let slope = parse_slope_spec(&args.slope)?;
    let start = match (&args.start, &args.intercept) {
        (Some(s), None) => {
            let p = parse_point(s)?;
            (p.x, p.y)
        }
        (None, Some(r)) => (Rational::zero(), r.parse()?),
        (None, None) => (Rational::zero(), Rational::zero()),
        (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
    };
    let compare = match (&args.compare_slope, &args.compare_intercept) {
        (Some(s), r) => {
            let slope = parse_slope_spec(s)?;
            let intercept: Rational = match r {
                Some(r) => r.parse()?,
                None => Rational::zero(),
            };
            Some(Trajectory { slope, start: (Rational::zero(), intercept) })
        }
        (None, Some(_)) => {
            return Err(Error::Domain("--compare-intercept needs --compare-slope".into()))
        }
        (None, None) => None,
    };
    let spec = RenderSpec {
        view,
        trajectory: Trajectory { slope, start },
        steps: args.steps,
        size: args.size,
        grid: !args.no_grid,
        labels: args.labels,
        stroke: args.stroke,
        compare,
    };
    let svg = render_svg(&spec)?;
    std::fs::write(&args.out, svg.as_bytes())
        .map_err(|e| Error::Domain(format!("cannot write {}: {e}", args.out)))?;
    Ok(Report::ok(
        format!("wrote {} ({} bytes)", args.out, svg.len()),
        serde_json::to_value(RenderOut { path: args.out.clone(), bytes: svg.len() })
            .expect("schema"),
    ))
}
