//! Command-line surface for the `propindep` library.
//!
//! One query per invocation. Decision subcommands encode their verdict in
//! the exit code (0 holds, 1 does not hold) so they compose in shell
//! scripts; listings and formulas go to standard output; diagnostics and
//! errors go to standard error. Exit code 2 signals a usage problem and 3 a
//! resource limit (brute-force cap or output-size bound).

mod twins;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use propindep::applications::{
    self, circ_entails, natural_consequence, relevant_to, strictly_relevant_1995,
    strictly_relevant_1997, update, update_lit,
};
use propindep::clauses::{to_cnf_distributed, write_dimacs};
use propindep::forgetting::{
    forget_lit_limited, forget_var_limited, lit_equivalent, var_equivalent, DEFAULT_MAX_SIZE,
};
use propindep::independence::{
    dep_lit, dep_var, lit_independent_set, lit_simplify, var_independent, var_simplify,
};
use propindep::primes::{prime_implicants_limited, prime_implicates_limited};
use propindep::sat;
use propindep::{
    parse_file, CircPartition, Error, Formula, ForgetStrategy, Literal, LiteralSet, Oracle,
    PrimeLimits, PrimeSet, Var, VarSet,
};

/// Dependence analysis, forgetting and related reasoning over formula files.
///
/// FILE arguments use the formula file format: `#` comments, an optional
/// `vars:` header, one formula per line, read as their conjunction. Inline
/// formulas (`--query`, `--with`) use the same grammar.
#[derive(Parser)]
#[command(name = "propindep", version, disable_help_subcommand = true)]
struct Cli {
    /// Cap on brute-force enumeration, in variables, for `oracle` commands.
    #[arg(long, global = true, value_name = "N", default_value_t = 20)]
    max_bf: usize,

    /// Abort instead of producing output larger than N: atom occurrences
    /// for formula results, working-set clauses for prime computation.
    #[arg(long, global = true, value_name = "N")]
    max_size: Option<usize>,

    /// Output format. `records` prints stable `key=value` lines; `dimacs`
    /// applies to CNF-convertible results (forget, simplify, update,
    /// primes --kind ip).
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Records,
    Dimacs,
}

#[derive(Subcommand)]
enum Command {
    /// Print the literals the formula depends on.
    Deplit(FileArgs),
    /// Print the variables the formula depends on.
    Depvar(FileArgs),
    /// Decide whether the formula is independent of the given literals or
    /// variables (exit 0 yes, 1 no).
    Indep(IndepArgs),
    /// Rewrite the formula to mention only literals or variables it
    /// depends on.
    Simplify(SimplifyArgs),
    /// Print the strongest consequence independent of the given literals
    /// or variables.
    Forget(ForgetArgs),
    /// Decide whether two files carry the same information about the given
    /// literals or variables (everything else is forgotten first; with no
    /// selection, plain equivalence).
    Equiv(EquivArgs),
    /// List the prime implicates or prime implicants.
    Primes(PrimesArgs),
    /// Decide entailment under minimization of `--p`, with `--q` fixed and
    /// `--z` varying.
    Circ(CircArgs),
    /// Update the formula with new information: release what it says about
    /// the variables the new formula depends on, then adjoin it.
    Update(UpdateArgs),
    /// Decide a relevance notion between the formula and a variable set.
    Relevance(RelevanceArgs),
    /// Decide consequence that introduces no new literal dependencies.
    Natural(NaturalArgs),
    /// Brute-force model-enumeration twins of every subcommand, for
    /// cross-checking the symbolic implementations.
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Dependent literals, by per-literal model checks.
    Deplit(FileArgs),
    /// Dependent variables, by per-variable model checks.
    Depvar(FileArgs),
    /// Independence, by model checks.
    Indep(IndepArgs),
    /// A simplified equivalent built from the model set.
    Simplify(SimplifyArgs),
    /// Forgetting, computed on the model set.
    Forget(ForgetArgs),
    /// Restricted equivalence, by comparing forgotten model sets.
    Equiv(EquivArgs),
    /// Prime implicates or implicants, by exhaustive clause enumeration.
    Primes(PrimesArgs),
    /// Minimal-model entailment, by enumerating the minimal models.
    Circ(CircArgs),
    /// Update, computed on the model set.
    Update(UpdateArgs),
    /// Relevance notions, decided on worlds.
    Relevance(RelevanceArgs),
    /// Dependency-conservative consequence, by model checks.
    Natural(NaturalArgs),
}

#[derive(Args)]
struct FileArgs {
    /// Formula file.
    file: PathBuf,
}

#[derive(Args)]
struct IndepArgs {
    /// Formula file.
    file: PathBuf,
    #[command(flatten)]
    sel: Selection,
}

#[derive(Args)]
struct SimplifyArgs {
    /// Formula file.
    file: PathBuf,
    /// What to strip: literals the formula is independent of, or variables.
    #[arg(long, value_enum)]
    mode: SimplifyMode,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SimplifyMode {
    Lit,
    Var,
}

#[derive(Args)]
struct ForgetArgs {
    /// Formula file.
    file: PathBuf,
    #[command(flatten)]
    sel: Selection,
    /// Computation strategy: definitional, dnf-path, prime-path,
    /// resolution-path or auto.
    #[arg(long, default_value = "auto", value_parser = parse_strategy)]
    strategy: ForgetStrategy,
}

#[derive(Args)]
struct EquivArgs {
    /// First formula file.
    a: PathBuf,
    /// Second formula file.
    b: PathBuf,
    #[command(flatten)]
    sel: OptionalSelection,
}

#[derive(Args)]
struct PrimesArgs {
    /// Formula file.
    file: PathBuf,
    /// ip for prime implicates, pi for prime implicants.
    #[arg(long, value_enum)]
    kind: PrimeKind,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PrimeKind {
    Ip,
    Pi,
}

#[derive(Args)]
struct CircArgs {
    /// Formula file.
    file: PathBuf,
    /// Minimized variables (comma or space separated).
    #[arg(long, value_name = "VARS", default_value = "")]
    p: String,
    /// Fixed variables.
    #[arg(long, value_name = "VARS", default_value = "")]
    q: String,
    /// Varying variables.
    #[arg(long, value_name = "VARS", default_value = "")]
    z: String,
    /// Formula to test for entailment in the minimal models.
    #[arg(long, value_name = "FORMULA")]
    query: String,
}

#[derive(Args)]
struct UpdateArgs {
    /// Formula file.
    file: PathBuf,
    /// The new information, as a formula.
    #[arg(long, value_name = "FORMULA")]
    with: String,
    /// Literals to spare from forgetting (comma or space separated).
    #[arg(long, value_name = "LITS")]
    persist: Option<String>,
}

#[derive(Args)]
struct NaturalArgs {
    /// Formula file.
    file: PathBuf,
    /// Candidate consequence, as a formula.
    #[arg(long, value_name = "FORMULA")]
    query: String,
}

#[derive(Args)]
struct RelevanceArgs {
    /// Formula file.
    file: PathBuf,
    /// Topic variables (comma or space separated).
    #[arg(long, value_name = "VARS")]
    vars: String,
    /// Which notion to decide.
    #[arg(long, value_enum)]
    notion: Notion,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Notion {
    /// Fixing the topic variables can tip the formula's truth value.
    Influence,
    /// The formula depends on some topic variable.
    Relevant,
    /// Every irredundant clausal consequence mentions the topic.
    Strict95,
    /// The formula is about the topic and nothing else.
    Strict97,
}

/// Exactly one of `--lits` or `--vars`.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct Selection {
    /// Literals, comma or space separated (e.g. "a,~b").
    #[arg(long, value_name = "LITS")]
    lits: Option<String>,
    /// Variables, comma or space separated.
    #[arg(long, value_name = "VARS")]
    vars: Option<String>,
}

/// At most one of `--lits` or `--vars`.
#[derive(Args)]
#[group(required = false, multiple = false)]
struct OptionalSelection {
    /// Observable literals: everything else is forgotten before comparing.
    #[arg(long, value_name = "LITS")]
    lits: Option<String>,
    /// Observable variables.
    #[arg(long, value_name = "VARS")]
    vars: Option<String>,
}

fn parse_strategy(s: &str) -> Result<ForgetStrategy, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// What a subcommand produced; the common carrier for all output formats.
enum Output {
    Verdict(bool),
    Lits(LiteralSet),
    Vars(VarSet),
    Formula(Formula),
    Primes(PrimeSet),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let start = Instant::now();
    match run(&cli).and_then(|out| emit(&cli, out, start)) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::CapExceeded { .. } | Error::SizeLimit { .. } => 3,
                _ => 2,
            })
        }
    }
}

fn run(cli: &Cli) -> Result<Output, Error> {
    let size_limit = cli.max_size.unwrap_or(DEFAULT_MAX_SIZE);
    match &cli.command {
        Command::Deplit(args) => Ok(Output::Lits(dep_lit(&read_formula(&args.file)?))),
        Command::Depvar(args) => Ok(Output::Vars(dep_var(&read_formula(&args.file)?))),
        Command::Indep(args) => {
            let f = read_formula(&args.file)?;
            let verdict = match parse_selection(&args.sel)? {
                Picked::Lits(lits) => lit_independent_set(&f, &lits),
                Picked::Vars(vars) => var_independent(&f, &vars),
            };
            Ok(Output::Verdict(verdict))
        }
        Command::Simplify(args) => {
            let f = read_formula(&args.file)?;
            let out = match args.mode {
                SimplifyMode::Lit => lit_simplify(&f),
                SimplifyMode::Var => var_simplify(&f),
            };
            Ok(Output::Formula(out))
        }
        Command::Forget(args) => {
            let f = read_formula(&args.file)?;
            let out = match parse_selection(&args.sel)? {
                Picked::Lits(lits) => forget_lit_limited(&f, &lits, args.strategy, size_limit)?,
                Picked::Vars(vars) => forget_var_limited(&f, &vars, args.strategy, size_limit)?,
            };
            Ok(Output::Formula(out))
        }
        Command::Equiv(args) => {
            let a = read_formula(&args.a)?;
            let b = read_formula(&args.b)?;
            let verdict = match parse_optional_selection(&args.sel)? {
                Some(Picked::Lits(lits)) => lit_equivalent(&a, &b, &lits)?,
                Some(Picked::Vars(vars)) => var_equivalent(&a, &b, &vars)?,
                None => sat::equivalent(&a, &b),
            };
            Ok(Output::Verdict(verdict))
        }
        Command::Primes(args) => {
            let f = read_formula(&args.file)?;
            let limits = PrimeLimits {
                max_clauses: cli.max_size.unwrap_or(PrimeLimits::default().max_clauses),
                ..PrimeLimits::default()
            };
            let set = match args.kind {
                PrimeKind::Ip => prime_implicates_limited(&f, limits)?,
                PrimeKind::Pi => prime_implicants_limited(&f, limits)?,
            };
            Ok(Output::Primes(set))
        }
        Command::Circ(args) => {
            let f = read_formula(&args.file)?;
            let part = parse_partition(args)?;
            let query = parse_inline(&args.query)?;
            Ok(Output::Verdict(circ_entails(&f, &part, &query)?))
        }
        Command::Update(args) => {
            let f = read_formula(&args.file)?;
            let with = parse_inline(&args.with)?;
            let out = match &args.persist {
                Some(p) => update_lit(&f, &with, &parse_lits(p)?),
                None => update(&f, &with),
            };
            Ok(Output::Formula(out))
        }
        Command::Relevance(args) => {
            let f = read_formula(&args.file)?;
            let vars = parse_vars(&args.vars)?;
            let verdict = match args.notion {
                Notion::Influence => applications::influenceable(&f, &vars),
                Notion::Relevant => relevant_to(&f, &vars),
                Notion::Strict95 => strictly_relevant_1995(&f, &vars)?,
                Notion::Strict97 => strictly_relevant_1997(&f, &vars),
            };
            Ok(Output::Verdict(verdict))
        }
        Command::Natural(args) => {
            let f = read_formula(&args.file)?;
            let query = parse_inline(&args.query)?;
            Ok(Output::Verdict(natural_consequence(&f, &query)))
        }
        Command::Oracle(cmd) => twins::run(cmd, Oracle::new(cli.max_bf)),
    }
}

/// Prints the result in the requested format and picks the exit code:
/// 0, or 1 for a negative verdict.
fn emit(cli: &Cli, out: Output, start: Instant) -> Result<ExitCode, Error> {
    if let (Some(limit), Output::Formula(f)) = (cli.max_size, &out) {
        let size = f.size();
        if size > limit {
            return Err(Error::SizeLimit { size, limit });
        }
    }
    let code = match &out {
        Output::Verdict(false) => ExitCode::from(1),
        _ => ExitCode::SUCCESS,
    };
    match cli.format {
        Format::Text => match &out {
            Output::Verdict(v) => println!("{v}"),
            Output::Lits(ls) => println!("{}", join(ls.iter())),
            Output::Vars(vs) => println!("{}", join(vs.iter())),
            Output::Formula(f) => println!("{f}"),
            Output::Primes(set) => {
                let empty = match set {
                    PrimeSet::Implicates(c) => c.is_empty(),
                    PrimeSet::Implicants(t) => t.is_empty(),
                };
                if !empty {
                    println!("{set}");
                }
            }
        },
        Format::Records => {
            println!("status=ok");
            println!("command={}", command_name(&cli.command));
            match &out {
                Output::Verdict(v) => println!("verdict={v}"),
                Output::Lits(ls) => println!("lits={}", join(ls.iter())),
                Output::Vars(vs) => println!("vars={}", join(vs.iter())),
                Output::Formula(f) => println!("formula={f}"),
                Output::Primes(set) => {
                    println!("kind={}", set.kind());
                    match set {
                        PrimeSet::Implicates(c) => {
                            println!("count={}", c.len());
                            for clause in c.iter() {
                                println!("item={clause}");
                            }
                        }
                        PrimeSet::Implicants(t) => {
                            println!("count={}", t.len());
                            for term in t.iter() {
                                println!("item={term}");
                            }
                        }
                    }
                }
            }
            println!("millis={}", start.elapsed().as_millis());
        }
        Format::Dimacs => {
            let limit = cli.max_size.unwrap_or(DEFAULT_MAX_SIZE);
            let cnf = match &out {
                Output::Formula(f) => to_cnf_distributed(f, limit)?,
                Output::Primes(PrimeSet::Implicates(c)) => c.clone(),
                _ => {
                    return Err(Error::InvalidStrategy(
                        "dimacs output needs a CNF-convertible result \
                         (forget, simplify, update, primes --kind ip)"
                            .into(),
                    ))
                }
            };
            print!("{}", write_dimacs(&cnf));
        }
    }
    Ok(code)
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Deplit(_) => "deplit",
        Command::Depvar(_) => "depvar",
        Command::Indep(_) => "indep",
        Command::Simplify(_) => "simplify",
        Command::Forget(_) => "forget",
        Command::Equiv(_) => "equiv",
        Command::Primes(_) => "primes",
        Command::Circ(_) => "circ",
        Command::Update(_) => "update",
        Command::Relevance(_) => "relevance",
        Command::Natural(_) => "natural",
        Command::Oracle(c) => match c {
            OracleCommand::Deplit(_) => "oracle deplit",
            OracleCommand::Depvar(_) => "oracle depvar",
            OracleCommand::Indep(_) => "oracle indep",
            OracleCommand::Simplify(_) => "oracle simplify",
            OracleCommand::Forget(_) => "oracle forget",
            OracleCommand::Equiv(_) => "oracle equiv",
            OracleCommand::Primes(_) => "oracle primes",
            OracleCommand::Circ(_) => "oracle circ",
            OracleCommand::Update(_) => "oracle update",
            OracleCommand::Relevance(_) => "oracle relevance",
            OracleCommand::Natural(_) => "oracle natural",
        },
    }
}

fn join<T: std::fmt::Display>(items: impl Iterator<Item = T>) -> String {
    items
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

enum Picked {
    Lits(LiteralSet),
    Vars(VarSet),
}

fn parse_selection(sel: &Selection) -> Result<Picked, Error> {
    match (&sel.lits, &sel.vars) {
        (Some(l), None) => Ok(Picked::Lits(parse_lits(l)?)),
        (None, Some(v)) => Ok(Picked::Vars(parse_vars(v)?)),
        // clap's group constraint guarantees exactly one.
        _ => unreachable!("selection group enforces exactly one flag"),
    }
}

fn parse_optional_selection(sel: &OptionalSelection) -> Result<Option<Picked>, Error> {
    match (&sel.lits, &sel.vars) {
        (Some(l), None) => Ok(Some(Picked::Lits(parse_lits(l)?))),
        (None, Some(v)) => Ok(Some(Picked::Vars(parse_vars(v)?))),
        (None, None) => Ok(None),
        _ => unreachable!("selection group forbids both flags"),
    }
}

fn parse_partition(args: &CircArgs) -> Result<CircPartition, Error> {
    CircPartition::new(parse_vars(&args.p)?, parse_vars(&args.q)?, parse_vars(&args.z)?)
}

fn list_tokens(s: &str) -> impl Iterator<Item = &str> {
    s.split([',', ' ', '\t']).filter(|t| !t.is_empty())
}

fn parse_vars(s: &str) -> Result<VarSet, Error> {
    list_tokens(s)
        .map(|tok| {
            if propindep::formula::is_identifier(tok) {
                Ok(Var::new(tok))
            } else {
                Err(propindep::ParseError::new(
                    0,
                    format!("`{tok}` is not a valid variable name"),
                )
                .into())
            }
        })
        .collect()
}

fn parse_lits(s: &str) -> Result<LiteralSet, Error> {
    list_tokens(s)
        .map(|tok| tok.parse::<Literal>().map_err(Error::from))
        .collect()
}

fn parse_inline(s: &str) -> Result<Formula, Error> {
    propindep::parse(s).map_err(Error::from)
}

fn read_formula(path: &Path) -> Result<Formula, Error> {
    let text = fs::read_to_string(path).map_err(|e| {
        Error::Parse(propindep::ParseError::new(
            0,
            format!("cannot read `{}`: {e}", path.display()),
        ))
    })?;
    Ok(parse_file(&text)?.conjunction())
}
