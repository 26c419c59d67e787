//! Command-line front end for the swap calculus on Thompson's group V.
//!
//! Words evaluate through a named generating set (`--gens`); swap literals
//! `<a b>` resolve in every set. Maps compose left to right. Exit codes:
//! 0 success / all relations pass, 1 verification failure or inequality,
//! 2 usage, parse or input errors.

use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cantor_swaps::address::Address;
use cantor_swaps::algorithms::{
    decompose_swap_with_cap, run_suite, suite_by_name, VerificationReport, DEFAULT_DECOMPOSE_CAP,
    SUITE_NAMES,
};
use cantor_swaps::element::VElement;
use cantor_swaps::presentations::{genset_by_name, GeneratingSet, Presentation, Relator, SwapTable};
use cantor_swaps::words::{parse, parse_word_file, GenName, Word, WordExpr};

/// Exact computation in R. Thompson's group V using swaps of Cantor space.
#[derive(Parser)]
#[command(name = "cantor-swaps", version, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum RenderFormat {
    Ascii,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum SourceSet {
    Abc,
    Uv,
    Swaps,
}

#[derive(Clone, Copy, ValueEnum)]
enum TargetSet {
    Abc,
    Uv,
    /// words over the four generators <00 01>, <01 10>, <10 11>, <1 00>
    Swaps4,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression and print the canonical element dump
    Eval {
        /// Generating set resolving named generators
        #[arg(long, default_value = "swaps")]
        gens: String,
        /// Expression, or - to read a word file from stdin
        expr: String,
    },
    /// Test whether two expressions evaluate to the same element
    Eq {
        #[arg(long, default_value = "swaps")]
        gens: String,
        /// First expression, or - to read both from stdin
        lhs: String,
        /// Second expression (omit when reading from stdin)
        rhs: Option<String>,
    },
    /// Canonicalize an element dump read from a file or stdin (-)
    Canon { input: String },
    /// Apply an evaluated expression to an address
    Act {
        #[arg(long, default_value = "swaps")]
        gens: String,
        expr: String,
        address: String,
    },
    /// Express the swap <alpha beta> as a word in the four basic generators
    Decompose {
        alpha: String,
        beta: String,
        /// Cap on the label lengths (default 8; env CANTOR_SWAPS_MAX_DEPTH)
        #[arg(long)]
        max_depth: Option<usize>,
    },
    /// Re-express a word between generating sets
    Convert {
        #[arg(long, value_enum)]
        from: SourceSet,
        #[arg(long, value_enum)]
        to: TargetSet,
        expr: String,
        #[arg(long)]
        max_depth: Option<usize>,
    },
    /// Render an element as a domain/range tree pair
    Treepair {
        #[arg(long, default_value = "swaps")]
        gens: String,
        #[arg(long, value_enum, default_value = "ascii")]
        format: RenderFormat,
        expr: String,
    },
    /// Run a relation suite (or `all`), or a relator file
    Verify {
        /// Suite name; see suite-list
        suite: Option<String>,
        /// Verify relators from a word file instead of a built-in suite
        #[arg(long)]
        relators_file: Option<String>,
        #[arg(long, default_value = "swaps")]
        gens: String,
        /// Print only the machine-readable report lines
        #[arg(long)]
        quiet: bool,
    },
    /// List the built-in suite names
    SuiteList,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Eval { gens, expr } => {
            let set = lookup_genset(&gens)?;
            for e in read_expressions(&expr, None)? {
                let elem = set.eval(&e).map_err(|err| err.to_string())?;
                print!("{}", elem.dump());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Eq { gens, lhs, rhs } => {
            let set = lookup_genset(&gens)?;
            let exprs = read_expressions(&lhs, rhs.as_deref())?;
            if exprs.len() != 2 {
                return Err(format!("eq needs exactly two expressions, got {}", exprs.len()));
            }
            let a = set.eval(&exprs[0]).map_err(|e| e.to_string())?;
            let b = set.eval(&exprs[1]).map_err(|e| e.to_string())?;
            if a == b {
                println!("equal");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("different");
                Ok(ExitCode::from(1))
            }
        }
        Command::Canon { input } => {
            let text = read_input(&input)?;
            let elem = VElement::from_dump(&text).map_err(|e| e.to_string())?;
            print!("{}", elem.dump());
            Ok(ExitCode::SUCCESS)
        }
        Command::Act { gens, expr, address } => {
            let set = lookup_genset(&gens)?;
            let e = parse_one(&expr)?;
            let elem = set.eval(&e).map_err(|err| err.to_string())?;
            let addr: Address = address.parse().map_err(|e| format!("{e}"))?;
            match elem.act(&addr) {
                Some(image) => println!("{image}"),
                None => println!("undefined"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Decompose { alpha, beta, max_depth } => {
            let alpha: Address = alpha.parse().map_err(|e| format!("{e}"))?;
            let beta: Address = beta.parse().map_err(|e| format!("{e}"))?;
            let cap = depth_cap(max_depth, DEFAULT_DECOMPOSE_CAP);
            let word =
                decompose_swap_with_cap(&alpha, &beta, cap).map_err(|e| e.to_string())?;
            println!("{word}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Convert { from, to, expr, max_depth } => {
            let e = parse_one(&expr)?;
            let out = convert(&e, from, to, depth_cap(max_depth, DEFAULT_DECOMPOSE_CAP))?;
            println!("{out}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Treepair { gens, format, expr } => {
            let set = lookup_genset(&gens)?;
            let e = parse_one(&expr)?;
            let elem = set.eval(&e).map_err(|err| err.to_string())?;
            let pair = elem.to_tree_pair();
            match format {
                RenderFormat::Ascii => print!("{}", pair.render_ascii()),
                RenderFormat::Dot => print!("{}", pair.render_dot()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, relators_file, gens, quiet } => {
            let reports = if let Some(path) = relators_file {
                vec![run_file_suite(&path, &gens)?]
            } else {
                let name = suite.ok_or("verify needs a suite name or --relators-file")?;
                run_named_suites(&name)?
            };
            let mut all_pass = true;
            for report in &reports {
                if quiet {
                    println!("{}", report.machine_line());
                } else {
                    print!("{report}");
                }
                all_pass &= report.passed_all();
            }
            Ok(if all_pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::SuiteList => {
            for name in SUITE_NAMES {
                println!("{name}");
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn lookup_genset(name: &str) -> Result<GeneratingSet, String> {
    genset_by_name(name)
        .ok_or_else(|| format!("unknown generating set {name:?} (abc, uv, cfp, swaps)"))
}

fn parse_one(text: &str) -> Result<WordExpr, String> {
    parse(text).map_err(|e| e.to_string())
}

/// The expression argument, or the non-comment lines of stdin when it is -.
fn read_expressions(first: &str, second: Option<&str>) -> Result<Vec<WordExpr>, String> {
    if first == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).map_err(|e| e.to_string())?;
        let exprs = parse_word_file(&text).map_err(|e| e.to_string())?;
        return Ok(exprs.into_iter().map(|(_, e)| e).collect());
    }
    let mut out = vec![parse_one(first)?];
    if let Some(s) = second {
        out.push(parse_one(s)?);
    }
    Ok(out)
}

fn read_input(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).map_err(|e| e.to_string())?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))
    }
}

fn depth_cap(flag: Option<usize>, default: usize) -> usize {
    flag.or_else(|| {
        std::env::var("CANTOR_SWAPS_MAX_DEPTH").ok().and_then(|v| v.parse().ok())
    })
    .unwrap_or(default)
}

fn run_named_suites(name: &str) -> Result<Vec<VerificationReport>, String> {
    if name == "all" {
        return SUITE_NAMES
            .iter()
            .map(|n| build_and_run(n))
            .collect::<Result<Vec<_>, _>>();
    }
    Ok(vec![build_and_run(name)?])
}

fn build_and_run(name: &str) -> Result<VerificationReport, String> {
    let suite = suite_by_name(name)
        .map_err(|e| e.to_string())?
        .ok_or_else(|| format!("unknown suite {name:?}; see suite-list"))?;
    Ok(run_suite(&suite))
}

fn run_file_suite(path: &str, gens: &str) -> Result<VerificationReport, String> {
    let set = lookup_genset(gens)?;
    let text = read_input(path)?;
    let exprs = parse_word_file(&text).map_err(|e| e.to_string())?;
    let relators = exprs
        .into_iter()
        .map(|(line, e)| Relator::from_word(format!("line {line}"), e))
        .collect();
    let suite = Presentation {
        name: format!("file:{path}"),
        generators: set.generator_names().map(String::from).collect(),
        relators,
        genset: set,
    };
    Ok(run_suite(&suite))
}

/// Generator-substitution conversion along the routes the conversion
/// formulas cover; swap literals pass through unchanged except on the
/// swap-rewriting routes.
fn convert(
    e: &WordExpr,
    from: SourceSet,
    to: TargetSet,
    cap: usize,
) -> Result<Word, String> {
    let word = e.flatten();
    match (from, to) {
        (SourceSet::Abc, TargetSet::Uv) => substitute(&word, &[
            ("a", "u^3"),
            ("b", "v"),
            ("c", "(u^3)^(v u^-2 v u^3 v) (u^3)^(v u^-1 v u^3 v)"),
        ]),
        (SourceSet::Uv, TargetSet::Abc) => substitute(&word, &[
            ("u", "a (a^b a^(b^-1))^(c a c a^b a^(b^-1 a))"),
            ("v", "b"),
        ]),
        (SourceSet::Swaps, TargetSet::Abc) => {
            let table = SwapTable::build().map_err(|e| e.to_string())?;
            rewrite_swaps(&word, |pair| {
                table
                    .entry_for(pair)
                    .cloned()
                    .ok_or_else(|| format!("{pair} has labels beyond level 3; no abc word"))
            })
        }
        (SourceSet::Swaps, TargetSet::Swaps4) => rewrite_swaps(&word, |pair| {
            decompose_swap_with_cap(pair.alpha(), pair.beta(), cap)
                .map(word_to_expr)
                .map_err(|e| e.to_string())
        }),
        (SourceSet::Abc, TargetSet::Abc) | (SourceSet::Uv, TargetSet::Uv) => Ok(word),
        _ => Err("unsupported route; conversions: abc->uv, uv->abc, swaps->abc, swaps->swaps4"
            .to_string()),
    }
}

fn word_to_expr(word: Word) -> WordExpr {
    WordExpr::product(
        word.letters()
            .iter()
            .map(|(g, exp)| {
                let gen = WordExpr::Gen(g.clone());
                if *exp < 0 {
                    gen.inverse()
                } else {
                    gen
                }
            })
            .collect(),
    )
}

fn substitute(word: &Word, rules: &[(&str, &str)]) -> Result<Word, String> {
    let mut factors = Vec::new();
    for (gen, exp) in word.letters() {
        let factor = match gen {
            GenName::Symbol(s) => {
                let (_, replacement) = rules
                    .iter()
                    .find(|(name, _)| name == s)
                    .ok_or_else(|| format!("no conversion rule for generator {s:?}"))?;
                parse_one(replacement)?
            }
            GenName::Swap(p) => WordExpr::swap(p.clone()),
        };
        factors.push(if *exp < 0 { factor.inverse() } else { factor });
    }
    Ok(WordExpr::product(factors).flatten())
}

fn rewrite_swaps(
    word: &Word,
    mut rule: impl FnMut(&cantor_swaps::address::SwapPair) -> Result<WordExpr, String>,
) -> Result<Word, String> {
    let mut factors = Vec::new();
    for (gen, exp) in word.letters() {
        let factor = match gen {
            GenName::Swap(p) => rule(p)?,
            GenName::Symbol(s) => {
                return Err(format!("named generator {s:?} in a swaps-source word"))
            }
        };
        factors.push(if *exp < 0 { factor.inverse() } else { factor });
    }
    Ok(WordExpr::product(factors).flatten())
}
