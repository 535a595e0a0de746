//! `dyckdiv` — explore how the divisors of an integer (or any finite set of
//! positive rationals) spread out, through class words and their factorization.

mod check;
mod render;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dyckdiv::{
    components, delta, divisors, is_densely_divisible, is_densely_divisible_sweep,
    is_densely_divisible_via_word, lambda_class, step_function, BalancedWord, ClassWordBundle,
    PositiveSet, Rational, TriWord,
};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "dyckdiv",
    version,
    about = "Dyck words of divisor sets: class words, factorization, dense divisibility, interval components"
)]
struct Cli {
    /// Scale factor as an integer, a fraction p/q, or a finite decimal (parsed exactly); must exceed 1
    #[arg(long, global = true, value_name = "LAMBDA")]
    lambda: Option<Rational>,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Comma-separated positive rationals to analyze instead of the divisors of N
    #[arg(long, global = true, value_name = "R1,R2,...")]
    set: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, PartialEq)]
enum Format {
    Text,
    Json,
    Svg,
    /// Alias for text when rendering paths
    Ascii,
}

#[derive(ValueEnum, Clone, Copy, PartialEq)]
enum WordKind {
    /// The two-letter word reading S △ λS
    Class,
    /// The three-letter word reading S ∪ λS
    Hooley,
    /// The class word for λ′ just above λ
    RightLimit,
}

impl WordKind {
    fn name(self) -> &'static str {
        match self {
            WordKind::Class => "class",
            WordKind::Hooley => "hooley",
            WordKind::RightLimit => "right-limit",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print a word of N (or of --set) with its metadata
    Word {
        n: Option<u64>,
        #[arg(long, value_enum, default_value_t = WordKind::Class)]
        kind: WordKind,
    },
    /// Decide λ-dense divisibility of N three independent ways (exit 0 yes, 1 no, 2 disagreement)
    Dense { n: u64 },
    /// Largest number of divisors of N in any window ]R/λ, R]
    Delta { n: u64 },
    /// Connected components of the union of intervals [ln s, ln s + ln λ]
    Components { n: Option<u64> },
    /// Component count of N (or of --set) as a step function of λ, with Ω alongside
    Scan { n: Option<u64> },
    /// Draw a word over {a,b,c} as an ASCII or SVG lattice path
    Render {
        word: String,
        /// SVG pixels per unit step
        #[arg(long, default_value_t = 40)]
        cell_size: u32,
    },
    /// Re-verify every identity over 1..=N_MAX and the given λ values (exit 1 on any failure)
    Check {
        n_max: u64,
        /// Comma-separated λ values, each above 1
        #[arg(long, value_delimiter = ',', required = true)]
        lambdas: Vec<Rational>,
    },
    /// Factor a word (or the chosen word of N / --set) into irreducible words
    Factor {
        target: Option<String>,
        #[arg(long, value_enum, default_value_t = WordKind::Class)]
        kind: WordKind,
    },
}

fn main() -> ExitCode {
    // Die quietly when the output pipe closes (e.g. `dyckdiv scan 1000 | head`).
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }

    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match &cli.command {
        Command::Word { n, kind } => cmd_word(&cli, *n, *kind),
        Command::Dense { n } => cmd_dense(&cli, *n),
        Command::Delta { n } => cmd_delta(&cli, *n),
        Command::Components { n } => cmd_components(&cli, *n),
        Command::Scan { n } => cmd_scan(&cli, *n),
        Command::Render { word, cell_size } => cmd_render(&cli, word, *cell_size),
        Command::Check { n_max, lambdas } => cmd_check(&cli, *n_max, lambdas),
        Command::Factor { target, kind } => cmd_factor(&cli, target.as_deref(), *kind),
    }
}

/// Where the analyzed set came from, for echoing in output.
enum Source {
    Integer(u64),
    Explicit,
}

fn parse_set(text: &str) -> Result<PositiveSet, String> {
    let mut values = Vec::new();
    for piece in text.split(',') {
        let piece = piece.trim();
        if piece.is_empty() {
            return Err(String::from("--set must be a comma-separated list of rationals"));
        }
        values.push(piece.parse::<Rational>().map_err(|e| e.to_string())?);
    }
    PositiveSet::new(values).map_err(|e| e.to_string())
}

fn resolve_set(cli: &Cli, n: Option<u64>) -> Result<(Source, PositiveSet), String> {
    match (n, &cli.set) {
        (Some(_), Some(_)) => Err(String::from("give either N or --set, not both")),
        (Some(n), None) => {
            let profile = divisors(n).map_err(|e| e.to_string())?;
            Ok((Source::Integer(n), profile.divisors().clone()))
        }
        (None, Some(text)) => Ok((Source::Explicit, parse_set(text)?)),
        (None, None) => Err(String::from("give N or --set")),
    }
}

fn require_lambda(cli: &Cli) -> Result<&Rational, String> {
    let lambda = cli
        .lambda
        .as_ref()
        .ok_or_else(|| String::from("this command needs --lambda"))?;
    if *lambda <= Rational::one() {
        return Err(String::from("lambda must be strictly greater than 1"));
    }
    Ok(lambda)
}

fn reject_set(cli: &Cli, command: &str) -> Result<(), String> {
    if cli.set.is_some() {
        return Err(format!("{command} works on integers; --set does not apply"));
    }
    Ok(())
}

/// Human spelling of a word: the empty word prints as ε.
fn spell(word: &str) -> &str {
    if word.is_empty() {
        "ε"
    } else {
        word
    }
}

fn attach_source(value: &mut Value, source: &Source, set: &PositiveSet) {
    let object = value.as_object_mut().expect("output objects");
    match source {
        Source::Integer(n) => {
            object.insert(String::from("n"), json!(n));
        }
        Source::Explicit => {
            let elements: Vec<String> = set.iter().map(|r| r.to_string()).collect();
            object.insert(String::from("set"), json!(elements));
        }
    }
}

fn yes_no(flag: bool) -> &'static str {
    if flag {
        "yes"
    } else {
        "no"
    }
}

fn cmd_word(cli: &Cli, n: Option<u64>, kind: WordKind) -> Result<ExitCode, String> {
    let (source, set) = resolve_set(cli, n)?;
    let lambda = require_lambda(cli)?;
    let bundle =
        ClassWordBundle::build(set.clone(), lambda.clone()).map_err(|e| e.to_string())?;

    let word_text;
    let mut counts: Vec<(&str, usize)> = Vec::new();
    match kind {
        WordKind::Class => {
            word_text = bundle.class_word.to_string();
            counts.push(("omega", bundle.class_word.omega().map_err(|e| e.to_string())?));
            counts.push(("height", bundle.class_word.height().map_err(|e| e.to_string())?));
        }
        WordKind::Hooley => {
            word_text = bundle.hooley_word.to_string();
            counts.push(("theta", bundle.hooley_word.theta().map_err(|e| e.to_string())?));
        }
        WordKind::RightLimit => {
            let word = bundle.hooley_word.split_flats();
            counts.push(("omega", word.omega().map_err(|e| e.to_string())?));
            counts.push(("height", word.height().map_err(|e| e.to_string())?));
            word_text = word.to_string();
        }
    }

    match cli.format {
        Format::Json => {
            let mut out = json!({
                "lambda": lambda.to_string(),
                "kind": kind.name(),
                "word": word_text,
                "length": word_text.len(),
                "regular": bundle.regular,
            });
            for (key, value) in &counts {
                out.as_object_mut()
                    .unwrap()
                    .insert(String::from(*key), json!(value));
            }
            attach_source(&mut out, &source, &set);
            println!("{out}");
        }
        Format::Text | Format::Ascii => {
            println!("{}", spell(&word_text));
            let meta: Vec<String> = counts
                .iter()
                .map(|(key, value)| format!("{key} {value}"))
                .collect();
            println!(
                "length {}  {}  regular {}",
                word_text.len(),
                meta.join("  "),
                yes_no(bundle.regular)
            );
        }
        Format::Svg => return Err(String::from("word prints text or JSON; use render for SVG")),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_dense(cli: &Cli, n: u64) -> Result<ExitCode, String> {
    reject_set(cli, "dense")?;
    let lambda = require_lambda(cli)?;
    let by_ratio = is_densely_divisible(n, lambda).map_err(|e| e.to_string())?;
    let by_sweep = is_densely_divisible_sweep(n, lambda).map_err(|e| e.to_string())?;
    let by_word = is_densely_divisible_via_word(n, lambda).map_err(|e| e.to_string())?;
    let agree = by_ratio == by_sweep && by_sweep == by_word;

    if cli.format == Format::Json {
        let verdict = if agree { json!(by_ratio) } else { json!(null) };
        println!(
            "{}",
            json!({
                "n": n,
                "lambda": lambda.to_string(),
                "densely_divisible": verdict,
                "deciders": {
                    "consecutive_ratio": by_ratio,
                    "sweep": by_sweep,
                    "word": by_word,
                },
            })
        );
    } else if agree {
        println!("{} (3/3 deciders agree)", yes_no(by_ratio));
    } else {
        println!(
            "internal disagreement: ratio={by_ratio} sweep={by_sweep} word={by_word}"
        );
    }

    Ok(if !agree {
        ExitCode::from(2)
    } else if by_ratio {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_delta(cli: &Cli, n: u64) -> Result<ExitCode, String> {
    reject_set(cli, "delta")?;
    let lambda = require_lambda(cli)?;
    let value = delta(n, lambda).map_err(|e| e.to_string())?;
    if cli.format == Format::Json {
        println!(
            "{}",
            json!({ "n": n, "lambda": lambda.to_string(), "delta": value })
        );
    } else {
        println!("{value}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_components(cli: &Cli, n: Option<u64>) -> Result<ExitCode, String> {
    let (source, set) = resolve_set(cli, n)?;
    let lambda = require_lambda(cli)?;
    let report = components(&set, lambda).map_err(|e| e.to_string())?;

    // A span (u, v) is the closed multiplicative interval [u, λv]; its
    // logarithms form one connected component.
    let spans: Vec<(Rational, Rational)> = report
        .spans()
        .iter()
        .map(|(start, end)| (start.clone(), lambda * end))
        .collect();

    if cli.format == Format::Json {
        let span_values: Vec<Value> = spans
            .iter()
            .map(|(start, end)| {
                json!({
                    "start": start.to_string(),
                    "end": end.to_string(),
                    "log_start_approx": start.to_f64().ln(),
                    "log_end_approx": end.to_f64().ln(),
                })
            })
            .collect();
        let mut out = json!({
            "lambda": lambda.to_string(),
            "components": report.count(),
            "spans": span_values,
        });
        attach_source(&mut out, &source, &set);
        println!("{out}");
    } else {
        println!("components: {}", report.count());
        for (i, (start, end)) in spans.iter().enumerate() {
            println!(
                "span {}: [{start}, {end}]   log [{:.6}, {:.6}] (approx)",
                i + 1,
                start.to_f64().ln(),
                end.to_f64().ln(),
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_scan(cli: &Cli, n: Option<u64>) -> Result<ExitCode, String> {
    let (source, set) = resolve_set(cli, n)?;
    let report = step_function(&set).map_err(|e| e.to_string())?;
    let breakpoints = report.breakpoints();

    // One probe per λ-interval: a midpoint for the open first interval, the
    // left endpoint for each closed-left one.
    let mut rows: Vec<(String, Option<String>, usize, usize)> = Vec::new();
    let one = Rational::one();
    for (i, &count) in report.values().iter().enumerate() {
        let (probe, from, to) = if i == 0 {
            let probe = match breakpoints.first() {
                Some(b) => Rational::midpoint(&one, b),
                None => Rational::from_integer(2),
            };
            (probe, one.to_string(), breakpoints.first().map(|b| b.to_string()))
        } else {
            let b = &breakpoints[i - 1];
            (b.clone(), b.to_string(), breakpoints.get(i).map(|b| b.to_string()))
        };
        let omega = lambda_class(&set, &probe)
            .map_err(|e| e.to_string())?
            .omega()
            .map_err(|e| e.to_string())?;
        if omega != count {
            return Err(format!(
                "internal: omega {omega} != component count {count} on interval starting at {from}"
            ));
        }
        rows.push((from, to, omega, count));
    }

    if cli.format == Format::Json {
        let intervals: Vec<Value> = rows
            .iter()
            .map(|(from, to, omega, count)| {
                json!({ "from": from, "to": to, "omega": omega, "components": count })
            })
            .collect();
        let mut out = json!({
            "breakpoints": breakpoints.iter().map(|b| b.to_string()).collect::<Vec<_>>(),
            "intervals": intervals,
        });
        attach_source(&mut out, &source, &set);
        println!("{out}");
    } else {
        let labels: Vec<String> = rows
            .iter()
            .enumerate()
            .map(|(i, (from, to, _, _))| {
                let open = if i == 0 { "(" } else { "[" };
                match to {
                    Some(to) => format!("{open}{from}, {to})"),
                    None => format!("{open}{from}, ∞)"),
                }
            })
            .collect();
        let header = "lambda interval";
        let width = labels
            .iter()
            .map(|l| l.chars().count())
            .max()
            .unwrap_or(0)
            .max(header.len());
        println!("{header:width$}  omega  components");
        for (label, (_, _, omega, count)) in labels.iter().zip(&rows) {
            let pad = width - label.chars().count();
            println!("{label}{:pad$}  {omega:5}  {count:10}", "");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_render(cli: &Cli, word: &str, cell_size: u32) -> Result<ExitCode, String> {
    let word: TriWord = word.parse().map_err(|e: dyckdiv::Error| e.to_string())?;
    if word.is_empty() {
        return Err(String::from("cannot render the empty word"));
    }
    if cell_size == 0 {
        return Err(String::from("--cell-size must be positive"));
    }
    match cli.format {
        Format::Svg => print!("{}", render::svg(&word, cell_size)),
        Format::Text | Format::Ascii => print!("{}", render::ascii(&word)),
        Format::Json => return Err(String::from("render outputs ascii or svg, not JSON")),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_check(cli: &Cli, n_max: u64, lambdas: &[Rational]) -> Result<ExitCode, String> {
    if n_max == 0 {
        return Err(String::from("N_MAX must be at least 1"));
    }
    if lambdas.iter().any(|l| *l <= Rational::one()) {
        return Err(String::from("every lambda must be strictly greater than 1"));
    }
    let outcome = check::run(n_max, lambdas);

    if cli.format == Format::Json {
        println!(
            "{}",
            json!({
                "n_max": n_max,
                "lambdas": lambdas.iter().map(|l| l.to_string()).collect::<Vec<_>>(),
                "checks": outcome.checks,
                "failures": outcome.failures,
            })
        );
    } else if outcome.failures.is_empty() {
        println!("all {} checks passed", outcome.checks);
    } else {
        for failure in outcome.failures.iter().take(10) {
            println!("FAILED: {failure}");
        }
        if outcome.failures.len() > 10 {
            println!("... and {} more", outcome.failures.len() - 10);
        }
    }
    Ok(if outcome.failures.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_factor(cli: &Cli, target: Option<&str>, kind: WordKind) -> Result<ExitCode, String> {
    enum Input {
        Two(BalancedWord),
        Three(TriWord),
    }

    let (mut context, input) = match target {
        Some(text) if text.bytes().all(|b| b.is_ascii_digit()) && !text.is_empty() => {
            reject_set(cli, "factor N")?;
            let n: u64 = text.parse().map_err(|_| String::from("N out of range"))?;
            let lambda = require_lambda(cli)?;
            let profile = divisors(n).map_err(|e| e.to_string())?;
            let bundle = ClassWordBundle::build(profile.divisors().clone(), lambda.clone())
                .map_err(|e| e.to_string())?;
            let context = json!({
                "n": n,
                "lambda": lambda.to_string(),
                "kind": kind.name(),
            });
            let input = match kind {
                WordKind::Class => Input::Two(bundle.class_word),
                WordKind::Hooley => Input::Three(bundle.hooley_word),
                WordKind::RightLimit => Input::Two(bundle.hooley_word.split_flats()),
            };
            (context, input)
        }
        Some(text) => {
            if text.contains('c') {
                let word: TriWord = text.parse().map_err(|e: dyckdiv::Error| e.to_string())?;
                (json!({}), Input::Three(word))
            } else {
                let word: BalancedWord =
                    text.parse().map_err(|e: dyckdiv::Error| e.to_string())?;
                (json!({}), Input::Two(word))
            }
        }
        None => {
            let (_, set) = resolve_set(cli, None)?;
            let lambda = require_lambda(cli)?;
            let bundle = ClassWordBundle::build(set.clone(), lambda.clone())
                .map_err(|e| e.to_string())?;
            let mut context = json!({
                "lambda": lambda.to_string(),
                "kind": kind.name(),
            });
            attach_source(&mut context, &Source::Explicit, &set);
            let input = match kind {
                WordKind::Class => Input::Two(bundle.class_word),
                WordKind::Hooley => Input::Three(bundle.hooley_word),
                WordKind::RightLimit => Input::Two(bundle.hooley_word.split_flats()),
            };
            (context, input)
        }
    };

    let (word_text, factors, count_key, count) = match &input {
        Input::Two(word) => {
            let factors = word.irreducible_factors().map_err(|e| e.to_string())?;
            let texts: Vec<String> = factors.iter().map(|f| f.to_string()).collect();
            (word.to_string(), texts, "omega", factors.len())
        }
        Input::Three(word) => {
            let factors = word.irreducible_factors().map_err(|e| e.to_string())?;
            let texts: Vec<String> = factors.iter().map(|f| f.to_string()).collect();
            (word.to_string(), texts, "theta", factors.len())
        }
    };

    if cli.format == Format::Json {
        let object = context.as_object_mut().unwrap();
        object.insert(String::from("word"), json!(word_text));
        object.insert(String::from("factors"), json!(factors));
        object.insert(String::from(count_key), json!(count));
        println!("{context}");
    } else {
        println!("{}", spell(&factors.join(" · ")));
        println!("{count_key} {count}");
    }
    Ok(ExitCode::SUCCESS)
}
