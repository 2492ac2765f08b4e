//! Semantic literal/variable independence and simplification.
//!
//! A formula is independent of a literal `l` when some equivalent formula
//! never mentions `l` with that sign; semantically this reduces to a single
//! entailment, `Σ ⊨ Σ_{l←0}`, which is the test used throughout. Variable
//! independence (no equivalent formula mentions the variable at all) reduces
//! to `Σ_{x←0} ≡ Σ_{x←1}` per variable.
//!
//! `dep_lit`/`dep_var` collect the literals and variables a formula really
//! depends on; the simplifiers rewrite a formula so that its syntax mentions
//! exactly those.

use std::collections::BTreeMap;

use crate::clauses::ClauseSet;
use crate::formula::{Formula, Literal, LiteralSet, Var, VarSet};
use crate::error::{Error, Result};
use crate::primes::{self, PrimeLimits};
use crate::sat::{self, FragmentTag};
use crate::semantics::World;

/// Whether `f` is independent of the single literal `l`: conditioning `l`
/// away loses nothing.
pub fn lit_independent(f: &Formula, l: &Literal) -> bool {
    sat::entails(f, &f.condition(l, false))
}

/// Whether `f` is independent of every literal in `L`. Literals over
/// variables foreign to `f` are trivially independent.
pub fn lit_independent_set(f: &Formula, lits: &LiteralSet) -> bool {
    let present = f.lits();
    lits.iter()
        .filter(|l| present.contains(l))
        .all(|l| lit_independent(f, l))
}

/// Whether `f` is independent of the single variable `v`: both
/// conditionings agree.
pub fn var_independent_one(f: &Formula, v: &Var) -> bool {
    if !f.vars().contains(v) {
        return true;
    }
    sat::equivalent(&f.condition_var(v, false), &f.condition_var(v, true))
}

/// Whether `f` is independent of every variable in `V`.
pub fn var_independent(f: &Formula, vars: &VarSet) -> bool {
    vars.iter().all(|v| var_independent_one(f, v))
}

/// The literals `f` depends on — always a subset of `f.lits()`.
pub fn dep_lit(f: &Formula) -> LiteralSet {
    f.lits()
        .into_iter()
        .filter(|l| !lit_independent(f, l))
        .collect()
}

/// The variables `f` depends on — always a subset of `f.vars()`.
pub fn dep_var(f: &Formula) -> VarSet {
    f.vars()
        .into_iter()
        .filter(|v| !var_independent_one(f, v))
        .collect()
}

/// Whether `f` depends on every literal of `L`.
pub fn fully_lit_dependent(f: &Formula, lits: &LiteralSet) -> bool {
    let dep = dep_lit(f);
    lits.iter().all(|l| dep.contains(l))
}

/// Whether `f` depends on every variable of `V`.
pub fn fully_var_dependent(f: &Formula, vars: &VarSet) -> bool {
    let dep = dep_var(f);
    vars.iter().all(|v| dep.contains(v))
}

/// Whether every literal `f` mentions is one it depends on.
pub fn is_lit_simplified(f: &Formula) -> bool {
    f.lits() == dep_lit(f)
}

/// Whether every variable `f` mentions is one it depends on.
pub fn is_var_simplified(f: &Formula) -> bool {
    f.vars() == dep_var(f)
}

/// Conditions away independent variables until the formula mentions only
/// variables it depends on. Variables are tried in sorted order and
/// independence is re-tested on the current formula after each rewrite.
/// The result is equivalent and never larger.
pub fn var_simplify(f: &Formula) -> Formula {
    let mut cur = f.simplify_constants();
    for v in f.vars() {
        if !cur.vars().contains(&v) {
            continue;
        }
        if var_independent_one(&cur, &v) {
            cur = cur.condition_var(&v, false);
        }
    }
    cur
}

/// Rewrites the formula until it mentions only literals it depends on.
/// Literals are tried in sorted order: positive before negative per
/// variable.
///
/// Variables the formula does not depend on are conditioned away first, on
/// the original syntax — sound and never growing — and when nothing
/// one-sided remains afterwards the result is returned as is. Otherwise
/// the formula moves to negation normal form (which may duplicate the
/// operands of `<->` and `^`; the result never grows past that form) and
/// every occurrence of an independent literal is replaced by `false`, same
/// sign only. The replacement never weakens the formula, but it can
/// strengthen it when complementary leaves interact (as in
/// `(a | ~a) & (~a | b)`, which is independent of `a` yet not equivalent to
/// its `a`-erased form `~a`), so each one is kept only after an entailment
/// check. Whatever survives that is removed by a forgetting step,
/// `Σ_{l←1} ∨ (¬l ∧ Σ_{l←0})`, which is equivalent exactly because `l` is
/// independent and reintroduces only the (dependent) opposite sign, so
/// every variable is handled at most once. The step is factored through
/// the formula tree (see [`forget_step`]) to confine its two-branch
/// expansion to the smallest coupled subtree, but on formulas built to
/// resist the constant folding it relies on the expansion can still pad
/// the result, so the stepped form is weighed against the two prime
/// normal forms — which mention exactly the dependent literals by
/// construction — and the smallest of the three is returned.
pub fn lit_simplify(f: &Formula) -> Formula {
    let mut cur = var_simplify(f);
    if is_lit_simplified(&cur) {
        return cur;
    }
    cur = cur.nnf().simplify_constants();
    for l in cur.lits() {
        if !cur.lits().contains(&l) {
            continue;
        }
        if lit_independent(&cur, &l) {
            let candidate = replace_literal(&cur, &l).simplify_constants();
            // Erasing leaves of an NNF formula only removes models, so a
            // single entailment decides equivalence.
            if sat::entails(&cur, &candidate) {
                cur = candidate;
            }
        }
    }
    if is_lit_simplified(&cur) {
        return cur;
    }
    let mut best = forget_surviving(cur.clone());
    let limits = PrimeLimits {
        max_clauses: 4096,
        max_cnf_literals: 1 << 16,
    };
    let prime_forms = [
        primes::prime_implicates_limited(&cur, limits),
        primes::prime_implicants_limited(&cur, limits),
    ];
    for form in prime_forms.into_iter().flatten() {
        let candidate = form.to_formula();
        if candidate.size() < best.size() {
            best = candidate;
        }
    }
    best
}

/// Applies forgetting steps until no independent literal remains.
fn forget_surviving(mut cur: Formula) -> Formula {
    loop {
        let mut changed = false;
        for l in cur.lits() {
            if cur.lits().contains(&l) && lit_independent(&cur, &l) {
                cur = forget_step(&cur, &l).simplify_constants();
                changed = true;
            }
        }
        if !changed {
            return cur;
        }
    }
}

/// Replaces every NNF leaf equal to the literal `l` by `false`. Only leaves
/// of the same sign are touched; the opposite literal stays.
fn replace_literal(f: &Formula, l: &Literal) -> Formula {
    match f {
        Formula::True | Formula::False => f.clone(),
        Formula::Atom(v) => {
            if l.is_positive() && v == l.var() {
                Formula::False
            } else {
                f.clone()
            }
        }
        Formula::Not(g) => match g.as_ref() {
            Formula::Atom(v) if !l.is_positive() && v == l.var() => Formula::False,
            _ => f.clone(),
        },
        Formula::And(cs) => Formula::And(cs.iter().map(|c| replace_literal(c, l)).collect()),
        Formula::Or(cs) => Formula::Or(cs.iter().map(|c| replace_literal(c, l)).collect()),
        _ => unreachable!("literal replacement runs on negation normal form"),
    }
}

/// One forgetting step for `l`, distributed through the connectives that
/// admit it. `step(a | b) ≡ step(a) | step(b)` holds unconditionally, and
/// `step(t & r) ≡ step(t) & r` whenever `r` does not mention the variable,
/// so the expansion is confined to the smallest coupled subtrees.
fn forget_step(f: &Formula, l: &Literal) -> Formula {
    if !f.vars().contains(l.var()) {
        return f.clone();
    }
    match f {
        Formula::And(cs) => {
            let (touched, rest): (Vec<Formula>, Vec<Formula>) = cs
                .iter()
                .cloned()
                .partition(|c| c.vars().contains(l.var()));
            let stepped = if touched.len() == 1 {
                forget_step(&touched[0], l)
            } else {
                flat_forget_step(&Formula::and(touched), l)
            };
            Formula::and(rest.into_iter().chain([stepped]).collect())
        }
        Formula::Or(cs) => Formula::or(cs.iter().map(|c| forget_step(c, l)).collect()),
        _ => flat_forget_step(f, l),
    }
}

fn flat_forget_step(f: &Formula, l: &Literal) -> Formula {
    Formula::or(vec![
        f.condition(l, true),
        Formula::and(vec![Formula::lit(&l.negated()), f.condition(l, false)]),
    ])
}

/// The dependence inventory of a formula, with a witnessing model for each
/// dependent literal: a model of `f` that forcing `¬l` takes outside the
/// models of `f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DependenceReport {
    pub dep_lit: LiteralSet,
    pub dep_var: VarSet,
    pub witnesses: BTreeMap<Literal, World>,
}

/// Computes [`DependenceReport`] for a formula.
pub fn dependence_report(f: &Formula) -> DependenceReport {
    let dep_lit = dep_lit(f);
    let dep_var = dep_var(f);
    let mut witnesses = BTreeMap::new();
    for l in &dep_lit {
        // A witness satisfies f but not f conditioned on ¬l; by the
        // substitution property that is exactly a model that forcing ¬l
        // ejects.
        let query = Formula::and(vec![
            f.clone(),
            Formula::not(f.condition(l, false)),
        ]);
        if let Some(w) = sat::satisfying_world(&query) {
            witnesses.insert(l.clone(), w);
        }
    }
    DependenceReport {
        dep_lit,
        dep_var,
        witnesses,
    }
}

/// Fragment fast path for literal independence on clause sets: each clause
/// of the conditioned set must already follow from the set. The tag must
/// describe `clauses`; conditioning preserves membership in all three
/// fragments, which is checked in debug builds.
pub fn lit_independent_clauses(
    clauses: &ClauseSet,
    tag: FragmentTag,
    l: &Literal,
) -> Result<bool> {
    if tag == FragmentTag::General {
        return Err(Error::InvalidStrategy(
            "no fast independence path for the general fragment".into(),
        ));
    }
    let conditioned = clauses.condition(l, false);
    debug_assert!(fragment_preserved(&conditioned, tag));
    for c in &conditioned {
        // Clauses the conditioning left verbatim are members of the set and
        // follow from it trivially; only the rewritten ones need proving.
        if clauses.contains(c) {
            continue;
        }
        if !sat::fragment_entails(clauses, tag, c)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Fragment fast path for variable independence: the set and its `v := 0`
/// conditioning must be interderivable clause by clause.
pub fn var_independent_clauses(
    clauses: &ClauseSet,
    tag: FragmentTag,
    v: &Var,
) -> Result<bool> {
    if tag == FragmentTag::General {
        return Err(Error::InvalidStrategy(
            "no fast independence path for the general fragment".into(),
        ));
    }
    let conditioned = clauses.condition_var(v, false);
    debug_assert!(fragment_preserved(&conditioned, tag));
    for c in &conditioned {
        // Untouched clauses are members of the other set; skip them.
        if clauses.contains(c) {
            continue;
        }
        if !sat::fragment_entails(clauses, tag, c)? {
            return Ok(false);
        }
    }
    for c in clauses {
        if conditioned.contains(c) {
            continue;
        }
        if !sat::fragment_entails(&conditioned, tag, c)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn fragment_preserved(clauses: &ClauseSet, tag: FragmentTag) -> bool {
    match tag {
        FragmentTag::Horn => clauses.is_horn(),
        FragmentTag::Krom => clauses.is_krom(),
        FragmentTag::RenamableHorn => sat::renaming(clauses).is_some(),
        FragmentTag::General => true,
    }
}
