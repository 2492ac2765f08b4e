//! Brute-force twins of the symbolic subcommands.
//!
//! Every twin decides or constructs its result by enumerating worlds (or,
//! for primes, candidate clauses) through the model-enumeration oracle, so
//! agreement between a subcommand and its twin checks the symbolic
//! implementation against the definitions. Runtime is exponential in the
//! variable count and gated by `--max-bf`.

use std::collections::BTreeMap;

use propindep::clauses::{Clause, ClauseSet, Term, TermSet};
use propindep::formula::literals_over;
use propindep::semantics::{eval, formula_from_models};
use propindep::{
    Error, Formula, Literal, LiteralSet, Oracle, PrimeSet, Var, VarSet, World, WorldSet,
};

use crate::{
    parse_inline, parse_lits, parse_optional_selection, parse_partition, parse_selection,
    parse_vars, read_formula, Notion, OracleCommand, Output, Picked, PrimeKind, SimplifyMode,
};

pub fn run(cmd: &OracleCommand, oracle: Oracle) -> Result<Output, Error> {
    match cmd {
        OracleCommand::Deplit(args) => {
            let f = read_formula(&args.file)?;
            Ok(Output::Lits(bf_dep_lit(&oracle, &f)?))
        }
        OracleCommand::Depvar(args) => {
            let f = read_formula(&args.file)?;
            Ok(Output::Vars(bf_dep_var(&oracle, &f)?))
        }
        OracleCommand::Indep(args) => {
            let f = read_formula(&args.file)?;
            let verdict = match parse_selection(&args.sel)? {
                Picked::Lits(lits) => {
                    let mut all = true;
                    for l in &lits {
                        all &= oracle.lit_independent(&f, l)?;
                    }
                    all
                }
                Picked::Vars(vars) => {
                    let mut all = true;
                    for v in &vars {
                        all &= oracle.var_independent(&f, v)?;
                    }
                    all
                }
            };
            Ok(Output::Verdict(verdict))
        }
        OracleCommand::Simplify(args) => {
            let f = read_formula(&args.file)?;
            let out = match args.mode {
                // The dependent variables support the whole model set, so
                // projecting the models onto them loses nothing.
                SimplifyMode::Var => {
                    let dep = bf_dep_var(&oracle, &f)?;
                    let models = oracle.models(&f, &f.vars())?;
                    let projected: WorldSet = models
                        .iter()
                        .map(|w| World::from_fn(&dep, |v| w.value(v).unwrap()))
                        .collect();
                    formula_from_models(&projected, &dep)
                }
                // The prime implicates mention exactly the dependent
                // literals; their conjunction is the simplified form.
                SimplifyMode::Lit => bf_prime_implicates(&oracle, &f)?.to_formula(),
            };
            Ok(Output::Formula(out))
        }
        OracleCommand::Forget(args) => {
            let f = read_formula(&args.file)?;
            let (lits, sel_vars) = match parse_selection(&args.sel)? {
                Picked::Lits(ls) => {
                    let vs = ls.iter().map(|l| l.var().clone()).collect::<VarSet>();
                    (ls, vs)
                }
                Picked::Vars(vs) => (literals_over(&vs), vs),
            };
            let over: VarSet = f.vars().union(&sel_vars).cloned().collect();
            let models = oracle.forget_lit_models(&f, &lits, &over)?;
            Ok(Output::Formula(formula_from_models(&models, &over)))
        }
        OracleCommand::Equiv(args) => {
            let a = read_formula(&args.a)?;
            let b = read_formula(&args.b)?;
            let over: VarSet = a.vars().union(&b.vars()).cloned().collect();
            let verdict = match parse_optional_selection(&args.sel)? {
                None => oracle.equivalent(&a, &b)?,
                Some(Picked::Lits(window)) => {
                    bf_window_lit(&oracle, &a, &window, &over)?
                        == bf_window_lit(&oracle, &b, &window, &over)?
                }
                Some(Picked::Vars(window)) => {
                    bf_window_var(&oracle, &a, &window, &over)?
                        == bf_window_var(&oracle, &b, &window, &over)?
                }
            };
            Ok(Output::Verdict(verdict))
        }
        OracleCommand::Primes(args) => {
            let f = read_formula(&args.file)?;
            let set = match args.kind {
                PrimeKind::Ip => PrimeSet::Implicates(bf_prime_implicates(&oracle, &f)?),
                PrimeKind::Pi => PrimeSet::Implicants(bf_prime_implicants(&oracle, &f)?),
            };
            Ok(Output::Primes(set))
        }
        OracleCommand::Circ(args) => {
            let f = read_formula(&args.file)?;
            let part = parse_partition(args)?;
            let query = parse_inline(&args.query)?;
            let mut need = f.vars();
            need.extend(query.vars());
            if !need.is_subset(&part.universe()) {
                return Err(Error::InvalidPartition(
                    "the partition must cover the variables of the formula and the query".into(),
                ));
            }
            let minimal = oracle.circ_models(&f, &part)?;
            let mut verdict = true;
            for w in minimal.iter() {
                verdict &= eval(&query, w)?;
            }
            Ok(Output::Verdict(verdict))
        }
        OracleCommand::Update(args) => {
            let f = read_formula(&args.file)?;
            let with = parse_inline(&args.with)?;
            let release: LiteralSet = match &args.persist {
                Some(p) => literals_over(&bf_dep_var(&oracle, &with)?)
                    .difference(&parse_lits(p)?)
                    .cloned()
                    .collect(),
                None => literals_over(&bf_dep_var(&oracle, &with)?),
            };
            let over: VarSet = f.vars().union(&with.vars()).cloned().collect();
            let released = oracle.forget_lit_models(&f, &release, &over)?;
            let mut kept = WorldSet::new();
            for w in released.iter() {
                if eval(&with, w)? {
                    kept.insert(w.clone());
                }
            }
            Ok(Output::Formula(formula_from_models(&kept, &over)))
        }
        OracleCommand::Relevance(args) => {
            let f = read_formula(&args.file)?;
            let vars = parse_vars(&args.vars)?;
            let verdict = match args.notion {
                Notion::Influence => bf_influenceable(&oracle, &f, &vars)?,
                Notion::Relevant => {
                    let mut any = false;
                    for v in &vars {
                        any |= !oracle.var_independent(&f, v)?;
                    }
                    any
                }
                Notion::Strict95 => {
                    let clauses = bf_prime_implicates(&oracle, &f)?;
                    !clauses.is_empty()
                        && clauses
                            .iter()
                            .all(|c| c.vars().iter().any(|v| vars.contains(v)))
                }
                Notion::Strict97 => {
                    let mut on_topic = false;
                    for v in &vars {
                        on_topic |= !oracle.var_independent(&f, v)?;
                    }
                    let mut off_topic_free = true;
                    for v in f.vars().difference(&vars) {
                        off_topic_free &= oracle.var_independent(&f, v)?;
                    }
                    on_topic && off_topic_free
                }
            };
            Ok(Output::Verdict(verdict))
        }
        OracleCommand::Natural(args) => {
            let f = read_formula(&args.file)?;
            let query = parse_inline(&args.query)?;
            if !oracle.entails(&f, &query)? {
                return Ok(Output::Verdict(false));
            }
            for l in literals_over(&query.vars()) {
                if !oracle.lit_independent(&query, &l)? && oracle.lit_independent(&f, &l)? {
                    return Ok(Output::Verdict(false));
                }
            }
            Ok(Output::Verdict(true))
        }
    }
}

fn bf_dep_lit(oracle: &Oracle, f: &Formula) -> Result<LiteralSet, Error> {
    let mut out = LiteralSet::new();
    for l in literals_over(&f.vars()) {
        if !oracle.lit_independent(f, &l)? {
            out.insert(l);
        }
    }
    Ok(out)
}

fn bf_dep_var(oracle: &Oracle, f: &Formula) -> Result<VarSet, Error> {
    let mut out = VarSet::new();
    for v in f.vars() {
        if !oracle.var_independent(f, &v)? {
            out.insert(v);
        }
    }
    Ok(out)
}

/// Forgets everything outside the literal window and returns the model set.
fn bf_window_lit(
    oracle: &Oracle,
    f: &Formula,
    window: &LiteralSet,
    over: &VarSet,
) -> Result<WorldSet, Error> {
    let drop: LiteralSet = f.lits().difference(window).cloned().collect();
    oracle.forget_lit_models(f, &drop, over)
}

fn bf_window_var(
    oracle: &Oracle,
    f: &Formula,
    window: &VarSet,
    over: &VarSet,
) -> Result<WorldSet, Error> {
    let drop: VarSet = f.vars().difference(window).cloned().collect();
    oracle.forget_lit_models(f, &literals_over(&drop), over)
}

/// All entailed clauses over `f`'s variables, reduced to the subset-minimal
/// antichain. Enumerates every sign pattern (absent, positive, negative per
/// variable), so it is three-to-the-variables expensive — verification
/// scale only.
fn bf_prime_implicates(oracle: &Oracle, f: &Formula) -> Result<ClauseSet, Error> {
    let vars: Vec<Var> = f.vars().into_iter().collect();
    let models = oracle.models(f, &f.vars())?;
    let mut entailed: Vec<Clause> = Vec::new();
    let mut signs = vec![0u8; vars.len()];
    'patterns: loop {
        let clause: Clause = signs
            .iter()
            .zip(&vars)
            .filter_map(|(s, v)| match s {
                1 => Some(Literal::new(v.clone(), true)),
                2 => Some(Literal::new(v.clone(), false)),
                _ => None,
            })
            .collect();
        let mut holds = true;
        'models: for w in models.iter() {
            for l in clause.literals() {
                if w.satisfies(l)? {
                    continue 'models;
                }
            }
            holds = false;
            break;
        }
        if holds {
            entailed.push(clause);
        }
        for slot in signs.iter_mut() {
            *slot += 1;
            if *slot < 3 {
                continue 'patterns;
            }
            *slot = 0;
        }
        return Ok(entailed.into_iter().collect::<ClauseSet>().reduce());
    }
}

/// Prime implicants read off the implicates of the negation.
fn bf_prime_implicants(oracle: &Oracle, f: &Formula) -> Result<TermSet, Error> {
    let neg = bf_prime_implicates(oracle, &Formula::not(f.clone()))?;
    Ok(neg
        .iter()
        .map(|c| c.literals().map(|l| l.negated()).collect::<Term>())
        .collect())
}

/// Whether some two worlds agreeing outside `topic` disagree on `f`: the
/// world-level reading of "the topic can influence the formula".
fn bf_influenceable(oracle: &Oracle, f: &Formula, topic: &VarSet) -> Result<bool, Error> {
    let u = f.vars();
    let outside: VarSet = u.difference(topic).cloned().collect();
    let models = oracle.models(f, &u)?;
    let mut groups: BTreeMap<Vec<(Var, bool)>, [bool; 2]> = BTreeMap::new();
    for w in oracle.worlds(&u)? {
        let key: Vec<(Var, bool)> = w
            .iter()
            .filter(|(v, _)| outside.contains(*v))
            .map(|(v, b)| (v.clone(), b))
            .collect();
        let entry = groups.entry(key).or_insert([false, false]);
        entry[usize::from(models.contains(&w))] = true;
    }
    Ok(groups.values().any(|e| e[0] && e[1]))
}
