//! Literal and variable forgetting.
//!
//! Forgetting a literal `l` weakens a formula exactly enough to make it
//! independent of `l`: the result is the logically strongest consequence
//! that no longer depends on `l`. One step is
//! `Σ_{l←1} ∨ (¬l ∧ Σ_{l←0})`, and sets are forgotten one literal at a
//! time (the order does not affect the result up to equivalence). Forgetting
//! a variable forgets both signs: one step is `Σ_{x←1} ∨ Σ_{x←0}`.
//!
//! Several strategies compute the same function with different cost
//! profiles; `auto` picks by input shape. All of them refuse to grow past a
//! configurable size and abort with an explicit error instead of thrashing.

use std::fmt;
use std::str::FromStr;

use crate::clauses::{
    as_clause_set, as_term_set, to_cnf_distributed, to_dnf_distributed, ClauseSet, TermSet,
};
use crate::error::{Error, Result};
use crate::formula::{literals_over, Formula, Literal, LiteralSet, VarSet};
use crate::primes::{prime_implicates_limited, PrimeLimits};
use crate::sat;

/// How to compute a forgetting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ForgetStrategy {
    /// Apply the defining rewrite literal by literal, with constant
    /// propagation after each step. Always applicable; worst-case
    /// exponential output.
    Definitional,
    /// Convert to DNF (guarded by the size limit), then delete forgotten
    /// literals from terms — polynomial once the DNF is in hand.
    DnfPath,
    /// Compute prime implicates and keep the ones free of forgotten
    /// literals.
    PrimePath,
    /// Variable elimination by resolution on a CNF; only for variable
    /// forgetting (a literal set must mention both signs of each variable).
    ResolutionPath,
    /// DNF input takes the DNF path; CNF input takes resolution for
    /// variable forgetting; everything else is definitional.
    #[default]
    Auto,
}

impl fmt::Display for ForgetStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ForgetStrategy::Definitional => "definitional",
            ForgetStrategy::DnfPath => "dnf-path",
            ForgetStrategy::PrimePath => "prime-path",
            ForgetStrategy::ResolutionPath => "resolution-path",
            ForgetStrategy::Auto => "auto",
        })
    }
}

impl FromStr for ForgetStrategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<ForgetStrategy> {
        match s {
            "definitional" => Ok(ForgetStrategy::Definitional),
            "dnf-path" => Ok(ForgetStrategy::DnfPath),
            "prime-path" => Ok(ForgetStrategy::PrimePath),
            "resolution-path" => Ok(ForgetStrategy::ResolutionPath),
            "auto" => Ok(ForgetStrategy::Auto),
            other => Err(Error::InvalidStrategy(format!(
                "unknown strategy `{other}` (expected definitional, dnf-path, prime-path, resolution-path or auto)"
            ))),
        }
    }
}

/// Default bound on intermediate and final result sizes, in atom
/// occurrences.
pub const DEFAULT_MAX_SIZE: usize = 1 << 20;

fn size_check(f: &Formula, limit: usize) -> Result<()> {
    let size = f.size();
    if size > limit {
        Err(Error::SizeLimit { size, limit })
    } else {
        Ok(())
    }
}

/// One defining step: `Σ_{l←1} ∨ (¬l ∧ Σ_{l←0})`. Conditioning the second
/// disjunct keeps the variable from reappearing when both signs get
/// forgotten. Formulas not mentioning the variable are already independent
/// of the literal and pass through untouched.
fn forget_one_lit(f: &Formula, l: &Literal) -> Formula {
    if !f.vars().contains(l.var()) {
        return f.clone();
    }
    Formula::or(vec![
        f.condition(l, true),
        Formula::and(vec![Formula::lit(&l.negated()), f.condition(l, false)]),
    ])
    .simplify_constants()
}

/// Forgets the literals of `L` in the given order, by the defining rewrite.
/// Exposed so order-insensitivity is checkable from outside; `forget_lit`
/// always uses sorted order.
pub fn forget_lit_ordered(f: &Formula, order: &[Literal], max_size: usize) -> Result<Formula> {
    let mut cur = f.simplify_constants();
    for l in order {
        cur = forget_one_lit(&cur, l);
        size_check(&cur, max_size)?;
    }
    Ok(cur)
}

fn forget_var_definitional(f: &Formula, vars: &VarSet, max_size: usize) -> Result<Formula> {
    let mut cur = f.simplify_constants();
    for v in vars {
        if !cur.vars().contains(v) {
            continue;
        }
        cur = Formula::or(vec![
            cur.condition_var(v, true),
            cur.condition_var(v, false),
        ])
        .simplify_constants();
        size_check(&cur, max_size)?;
    }
    Ok(cur)
}

/// Forgets literals in a DNF: deletes same-sign occurrences from every
/// term. Polynomial; errors on inconsistent input terms (deletion is only
/// sound for consistent terms).
pub fn forget_lit_dnf(dnf: &TermSet, lits: &LiteralSet) -> Result<TermSet> {
    for t in dnf {
        if !t.is_consistent() {
            return Err(Error::InconsistentTerm(t.to_string()));
        }
    }
    Ok(dnf.iter().map(|t| t.without(lits)).collect::<TermSet>().reduce())
}

/// Forgetting read off the prime implicates: exactly the `L`-free ones
/// survive.
pub fn forget_via_primes(f: &Formula, lits: &LiteralSet) -> Result<ClauseSet> {
    forget_via_primes_limited(f, lits, PrimeLimits::default())
}

fn forget_via_primes_limited(
    f: &Formula,
    lits: &LiteralSet,
    limits: PrimeLimits,
) -> Result<ClauseSet> {
    let primes = prime_implicates_limited(f, limits)?;
    Ok(primes
        .clauses()
        .unwrap()
        .iter()
        .filter(|c| c.literals().all(|l| !lits.contains(l)))
        .cloned()
        .collect())
}

/// Variable forgetting on a CNF by resolution: for each variable in turn,
/// clauses mentioning it are replaced by all non-tautological resolvents on
/// it, then the set is subsumption-reduced.
pub fn forget_var_resolution(clauses: &ClauseSet, vars: &VarSet) -> ClauseSet {
    let mut set = clauses.reduce();
    for v in vars {
        let pos_lit = Literal::new(v.clone(), true);
        let neg_lit = pos_lit.negated();
        let mut rest = ClauseSet::new();
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for c in &set {
            if c.contains(&pos_lit) {
                pos.push(c.clone());
            } else if c.contains(&neg_lit) {
                neg.push(c.clone());
            } else {
                rest.insert(c.clone());
            }
        }
        for a in &pos {
            for b in &neg {
                let mut r = a.without(&[pos_lit.clone()].into_iter().collect());
                for l in b.literals() {
                    if l != &neg_lit {
                        r.insert(l.clone());
                    }
                }
                if !r.is_tautology() {
                    rest.insert(r);
                }
            }
        }
        set = rest.reduce();
    }
    set
}

fn var_set_of_sign_closed(lits: &LiteralSet) -> Option<VarSet> {
    let vars: VarSet = lits.iter().map(|l| l.var().clone()).collect();
    for v in &vars {
        if !lits.contains(&Literal::new(v.clone(), true))
            || !lits.contains(&Literal::new(v.clone(), false))
        {
            return None;
        }
    }
    Some(vars)
}

/// Literal forgetting with an explicit size bound.
pub fn forget_lit_limited(
    f: &Formula,
    lits: &LiteralSet,
    strategy: ForgetStrategy,
    max_size: usize,
) -> Result<Formula> {
    match strategy {
        ForgetStrategy::Definitional => {
            let order: Vec<Literal> = lits.iter().cloned().collect();
            forget_lit_ordered(f, &order, max_size)
        }
        ForgetStrategy::DnfPath => {
            let dnf = match as_term_set(f) {
                Some(d) => d.reduce(),
                None => to_dnf_distributed(f, max_size)?,
            };
            let forgotten = forget_lit_dnf(&dnf, lits)?;
            let out = forgotten.to_formula();
            size_check(&out, max_size)?;
            Ok(out)
        }
        ForgetStrategy::PrimePath => {
            let clauses = forget_via_primes(f, lits)?;
            let out = clauses.to_formula();
            size_check(&out, max_size)?;
            Ok(out)
        }
        ForgetStrategy::ResolutionPath => match var_set_of_sign_closed(lits) {
            Some(vars) => forget_var_limited(f, &vars, strategy, max_size),
            None => Err(Error::InvalidStrategy(
                "resolution forgets variables; the literal set must contain both signs of every variable".into(),
            )),
        },
        ForgetStrategy::Auto => {
            if as_term_set(f).is_some() {
                forget_lit_limited(f, lits, ForgetStrategy::DnfPath, max_size)
            } else if as_clause_set(f).is_some() && var_set_of_sign_closed(lits).is_some() {
                forget_lit_limited(f, lits, ForgetStrategy::ResolutionPath, max_size)
            } else {
                forget_lit_limited(f, lits, ForgetStrategy::Definitional, max_size)
            }
        }
    }
}

/// Forgets a set of literals: the strongest consequence of `f` that is
/// independent of every literal in `lits`.
pub fn forget_lit(f: &Formula, lits: &LiteralSet, strategy: ForgetStrategy) -> Result<Formula> {
    forget_lit_limited(f, lits, strategy, DEFAULT_MAX_SIZE)
}

/// Variable forgetting with an explicit size bound.
pub fn forget_var_limited(
    f: &Formula,
    vars: &VarSet,
    strategy: ForgetStrategy,
    max_size: usize,
) -> Result<Formula> {
    match strategy {
        ForgetStrategy::Definitional => forget_var_definitional(f, vars, max_size),
        ForgetStrategy::DnfPath | ForgetStrategy::PrimePath => {
            forget_lit_limited(f, &literals_over(vars), strategy, max_size)
        }
        ForgetStrategy::ResolutionPath => {
            let clauses = match as_clause_set(f) {
                Some(c) => c,
                None => to_cnf_distributed(f, max_size)?,
            };
            let out = forget_var_resolution(&clauses, vars).to_formula();
            size_check(&out, max_size)?;
            Ok(out)
        }
        ForgetStrategy::Auto => {
            if as_term_set(f).is_some() {
                forget_var_limited(f, vars, ForgetStrategy::DnfPath, max_size)
            } else if as_clause_set(f).is_some() {
                forget_var_limited(f, vars, ForgetStrategy::ResolutionPath, max_size)
            } else {
                forget_var_limited(f, vars, ForgetStrategy::Definitional, max_size)
            }
        }
    }
}

/// Forgets a set of variables: the strongest consequence of `f` saying
/// nothing about any of them. Equivalent to forgetting both signs of each.
pub fn forget_var(f: &Formula, vars: &VarSet, strategy: ForgetStrategy) -> Result<Formula> {
    forget_var_limited(f, vars, strategy, DEFAULT_MAX_SIZE)
}

/// Whether `a` and `b` carry the same information about the literals in
/// `lits`: forgetting everything else in each leaves equivalent formulas
/// (compared over the union alphabet).
pub fn lit_equivalent(a: &Formula, b: &Formula, lits: &LiteralSet) -> Result<bool> {
    let keep = |f: &Formula| -> LiteralSet {
        f.lits().difference(lits).cloned().collect()
    };
    let fa = forget_lit(a, &keep(a), ForgetStrategy::Auto)?;
    let fb = forget_lit(b, &keep(b), ForgetStrategy::Auto)?;
    Ok(sat::equivalent(&fa, &fb))
}

/// Whether `a` and `b` carry the same information about the variables in
/// `vars`.
pub fn var_equivalent(a: &Formula, b: &Formula, vars: &VarSet) -> Result<bool> {
    let keep = |f: &Formula| -> VarSet {
        f.vars().difference(vars).cloned().collect()
    };
    let fa = forget_var(a, &keep(a), ForgetStrategy::Auto)?;
    let fb = forget_var(b, &keep(b), ForgetStrategy::Auto)?;
    Ok(sat::equivalent(&fa, &fb))
}
