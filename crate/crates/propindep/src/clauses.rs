//! Clauses, terms, and normal-form conversions.
//!
//! A [`Clause`] is a set of literals read disjunctively, a [`Term`] one read
//! conjunctively. [`ClauseSet`] and [`TermSet`] are their conjunctive and
//! disjunctive collections: a clause set is a CNF, a term set a DNF.
//!
//! CNF conversion offers two routes: plain distribution (exact variables,
//! exponential worst case, guarded by a size budget) and a definitional
//! encoding that introduces fresh auxiliary variables but stays linear.
//! [`to_cnf`] distributes when the result stays within twice the formula
//! size and falls back to the definitional encoding otherwise.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::formula::{Formula, Literal, LiteralSet, Var, VarSet};

/// A disjunction of literals. The empty clause is `false`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Clause(LiteralSet);

/// A conjunction of literals. The empty term is `true`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Term(LiteralSet);

macro_rules! literal_collection {
    ($ty:ident) => {
        impl $ty {
            pub fn new(lits: impl IntoIterator<Item = Literal>) -> $ty {
                $ty(lits.into_iter().collect())
            }

            pub fn empty() -> $ty {
                $ty(LiteralSet::new())
            }

            pub fn literals(&self) -> impl Iterator<Item = &Literal> {
                self.0.iter()
            }

            pub fn lits(&self) -> &LiteralSet {
                &self.0
            }

            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }

            pub fn contains(&self, l: &Literal) -> bool {
                self.0.contains(l)
            }

            pub fn insert(&mut self, l: Literal) {
                self.0.insert(l);
            }

            pub fn vars(&self) -> VarSet {
                self.0.iter().map(|l| l.var().clone()).collect()
            }

            pub fn mentions(&self, v: &Var) -> bool {
                self.0.contains(&Literal::new(v.clone(), true))
                    || self.0.contains(&Literal::new(v.clone(), false))
            }

            /// Removes the given literals (same sign only).
            pub fn without(&self, lits: &LiteralSet) -> $ty {
                $ty(self.0.difference(lits).cloned().collect())
            }

            pub fn union(&self, other: &$ty) -> $ty {
                $ty(self.0.union(&other.0).cloned().collect())
            }

            pub fn positive_count(&self) -> usize {
                self.0.iter().filter(|l| l.is_positive()).count()
            }
        }

        impl FromIterator<Literal> for $ty {
            fn from_iter<I: IntoIterator<Item = Literal>>(iter: I) -> $ty {
                $ty::new(iter)
            }
        }
    };
}

literal_collection!(Clause);
literal_collection!(Term);

impl Clause {
    /// A clause containing some literal and its negation is valid.
    pub fn is_tautology(&self) -> bool {
        self.0.iter().any(|l| self.0.contains(&l.negated()))
    }

    /// `self` subsumes `other` when it is a subset of it (and therefore
    /// entails it).
    pub fn subsumes(&self, other: &Clause) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn to_formula(&self) -> Formula {
        Formula::or(self.0.iter().map(Formula::lit).collect())
    }
}

impl Term {
    /// A term containing some literal and its negation is inconsistent.
    pub fn is_consistent(&self) -> bool {
        !self.0.iter().any(|l| self.0.contains(&l.negated()))
    }

    /// `self` subsumes `other` when `other` is a superset (and therefore
    /// entails `self`).
    pub fn subsumes(&self, other: &Term) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn to_formula(&self) -> Formula {
        Formula::and(self.0.iter().map(Formula::lit).collect())
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("false");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" | ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("true");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" & ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// A conjunction of clauses (a CNF).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ClauseSet(BTreeSet<Clause>);

/// A disjunction of terms (a DNF).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct TermSet(BTreeSet<Term>);

macro_rules! collection_of {
    ($ty:ident, $item:ident) => {
        impl $ty {
            pub fn new() -> $ty {
                $ty(BTreeSet::new())
            }

            pub fn iter(&self) -> impl Iterator<Item = &$item> {
                self.0.iter()
            }

            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }

            pub fn contains(&self, item: &$item) -> bool {
                self.0.contains(item)
            }

            pub fn insert(&mut self, item: $item) -> bool {
                self.0.insert(item)
            }

            pub fn remove(&mut self, item: &$item) -> bool {
                self.0.remove(item)
            }

            pub fn vars(&self) -> VarSet {
                self.0.iter().flat_map(|c| c.vars()).collect()
            }

            /// Total number of literal occurrences.
            pub fn total_literals(&self) -> usize {
                self.0.iter().map(|c| c.len()).sum()
            }
        }

        impl FromIterator<$item> for $ty {
            fn from_iter<I: IntoIterator<Item = $item>>(iter: I) -> $ty {
                $ty(iter.into_iter().collect())
            }
        }

        impl IntoIterator for $ty {
            type Item = $item;
            type IntoIter = std::collections::btree_set::IntoIter<$item>;
            fn into_iter(self) -> Self::IntoIter {
                self.0.into_iter()
            }
        }

        impl<'a> IntoIterator for &'a $ty {
            type Item = &'a $item;
            type IntoIter = std::collections::btree_set::Iter<'a, $item>;
            fn into_iter(self) -> Self::IntoIter {
                self.0.iter()
            }
        }
    };
}

collection_of!(ClauseSet, Clause);
collection_of!(TermSet, Term);

impl ClauseSet {
    pub fn to_formula(&self) -> Formula {
        Formula::and(self.0.iter().map(Clause::to_formula).collect()).simplify_constants()
    }

    /// Drops tautologies and subsumed clauses, keeping the minimal
    /// antichain.
    pub fn reduce(&self) -> ClauseSet {
        let mut kept: Vec<&Clause> = Vec::new();
        for c in self.0.iter().filter(|c| !c.is_tautology()) {
            if kept.iter().any(|k| k.subsumes(c)) {
                continue;
            }
            kept.retain(|k| !c.subsumes(k));
            kept.push(c);
        }
        kept.into_iter().cloned().collect()
    }

    /// Conditions every clause on `v := value`: satisfied clauses vanish,
    /// falsified literals are removed (possibly leaving an empty clause).
    pub fn condition_var(&self, v: &Var, value: bool) -> ClauseSet {
        let satisfied = Literal::new(v.clone(), value);
        let falsified = satisfied.negated();
        self.0
            .iter()
            .filter(|c| !c.contains(&satisfied))
            .map(|c| c.without(&[falsified.clone()].into_iter().collect()))
            .collect()
    }

    /// Conditions on a literal: `condition(l, true)` makes `l` true.
    pub fn condition(&self, l: &Literal, value: bool) -> ClauseSet {
        let var_value = if l.is_positive() { value } else { !value };
        self.condition_var(l.var(), var_value)
    }

    /// At most one positive literal per clause.
    pub fn is_horn(&self) -> bool {
        self.0.iter().all(|c| c.positive_count() <= 1)
    }

    /// At most two literals per clause.
    pub fn is_krom(&self) -> bool {
        self.0.iter().all(|c| c.len() <= 2)
    }

    /// Flips the sign of every occurrence of the given variables.
    pub fn rename(&self, flip: &VarSet) -> ClauseSet {
        self.0
            .iter()
            .map(|c| {
                c.literals()
                    .map(|l| {
                        if flip.contains(l.var()) {
                            l.negated()
                        } else {
                            l.clone()
                        }
                    })
                    .collect()
            })
            .collect()
    }
}

impl TermSet {
    pub fn to_formula(&self) -> Formula {
        Formula::or(self.0.iter().map(Term::to_formula).collect()).simplify_constants()
    }

    /// Drops inconsistent terms and terms subsumed by a smaller one.
    pub fn reduce(&self) -> TermSet {
        let mut kept: Vec<&Term> = Vec::new();
        for t in self.0.iter().filter(|t| t.is_consistent()) {
            if kept.iter().any(|k| k.subsumes(t)) {
                continue;
            }
            kept.retain(|k| !t.subsumes(k));
            kept.push(t);
        }
        kept.into_iter().cloned().collect()
    }
}

impl fmt::Display for ClauseSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Display for TermSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

fn as_literal(f: &Formula) -> Option<Literal> {
    match f {
        Formula::Atom(v) => Some(Literal::new(v.clone(), true)),
        Formula::Not(g) => match g.as_ref() {
            Formula::Atom(v) => Some(Literal::new(v.clone(), false)),
            _ => None,
        },
        _ => None,
    }
}

fn flatten_disjuncts(f: &Formula, out: &mut Vec<Literal>) -> bool {
    match f {
        Formula::Or(cs) => cs.iter().all(|c| flatten_disjuncts(c, out)),
        Formula::False => true,
        _ => match as_literal(f) {
            Some(l) => {
                out.push(l);
                true
            }
            None => false,
        },
    }
}

fn flatten_conjuncts(f: &Formula, out: &mut Vec<Literal>) -> bool {
    match f {
        Formula::And(cs) => cs.iter().all(|c| flatten_conjuncts(c, out)),
        Formula::True => true,
        _ => match as_literal(f) {
            Some(l) => {
                out.push(l);
                true
            }
            None => false,
        },
    }
}

/// Reads a formula as a CNF if it has that shape: a conjunction of
/// disjunctions of literals (modulo nesting and constants). `true` is the
/// empty clause set and `false` the set holding the empty clause.
pub fn as_clause_set(f: &Formula) -> Option<ClauseSet> {
    fn gather(f: &Formula, out: &mut Vec<Clause>) -> bool {
        match f {
            Formula::True => true,
            Formula::False => {
                out.push(Clause::empty());
                true
            }
            Formula::And(cs) => cs.iter().all(|c| gather(c, out)),
            other => {
                let mut lits = Vec::new();
                if flatten_disjuncts(other, &mut lits) {
                    out.push(Clause::new(lits));
                    true
                } else {
                    false
                }
            }
        }
    }
    let mut out = Vec::new();
    gather(f, &mut out).then(|| out.into_iter().collect())
}

/// Reads a formula as a DNF if it has that shape. `false` is the empty term
/// set and `true` the set holding the empty term.
pub fn as_term_set(f: &Formula) -> Option<TermSet> {
    fn gather(f: &Formula, out: &mut Vec<Term>) -> bool {
        match f {
            Formula::False => true,
            Formula::True => {
                out.push(Term::empty());
                true
            }
            Formula::Or(cs) => cs.iter().all(|c| gather(c, out)),
            other => {
                let mut lits = Vec::new();
                if flatten_conjuncts(other, &mut lits) {
                    out.push(Term::new(lits));
                    true
                } else {
                    false
                }
            }
        }
    }
    let mut out = Vec::new();
    gather(f, &mut out).then(|| out.into_iter().collect())
}

fn budget_check(total: usize, limit: usize) -> Result<()> {
    if total > limit {
        Err(Error::SizeLimit {
            size: total,
            limit,
        })
    } else {
        Ok(())
    }
}

/// CNF by distribution over the negation normal form. No new variables are
/// introduced; the working set is capped at `max_literals` total literal
/// occurrences.
pub fn to_cnf_distributed(f: &Formula, max_literals: usize) -> Result<ClauseSet> {
    fn cnf(f: &Formula, limit: usize) -> Result<ClauseSet> {
        match f {
            Formula::True => Ok(ClauseSet::new()),
            Formula::False => Ok([Clause::empty()].into_iter().collect()),
            Formula::And(cs) => {
                let mut acc = ClauseSet::new();
                for c in cs {
                    for clause in cnf(c, limit)? {
                        acc.insert(clause);
                    }
                    acc = acc.reduce();
                    budget_check(acc.total_literals(), limit)?;
                }
                Ok(acc)
            }
            Formula::Or(cs) => {
                let mut acc: ClauseSet = [Clause::empty()].into_iter().collect();
                for c in cs {
                    let child = cnf(c, limit)?;
                    let mut next = ClauseSet::new();
                    for a in &acc {
                        for b in &child {
                            let merged = a.union(b);
                            if !merged.is_tautology() {
                                next.insert(merged);
                            }
                        }
                    }
                    acc = next.reduce();
                    budget_check(acc.total_literals(), limit)?;
                }
                Ok(acc)
            }
            lit => match as_literal(lit) {
                Some(l) => Ok([Clause::new([l])].into_iter().collect()),
                None => unreachable!("negation normal form reached a non-literal leaf"),
            },
        }
    }
    cnf(&f.simplify_constants().nnf(), max_literals)
}

/// DNF by distribution, dual to [`to_cnf_distributed`]. Inconsistent terms
/// are dropped as they arise.
pub fn to_dnf_distributed(f: &Formula, max_literals: usize) -> Result<TermSet> {
    fn dnf(f: &Formula, limit: usize) -> Result<TermSet> {
        match f {
            Formula::False => Ok(TermSet::new()),
            Formula::True => Ok([Term::empty()].into_iter().collect()),
            Formula::Or(cs) => {
                let mut acc = TermSet::new();
                for c in cs {
                    for term in dnf(c, limit)? {
                        acc.insert(term);
                    }
                    acc = acc.reduce();
                    budget_check(acc.total_literals(), limit)?;
                }
                Ok(acc)
            }
            Formula::And(cs) => {
                let mut acc: TermSet = [Term::empty()].into_iter().collect();
                for c in cs {
                    let child = dnf(c, limit)?;
                    let mut next = TermSet::new();
                    for a in &acc {
                        for b in &child {
                            let merged = a.union(b);
                            if merged.is_consistent() {
                                next.insert(merged);
                            }
                        }
                    }
                    acc = next.reduce();
                    budget_check(acc.total_literals(), limit)?;
                }
                Ok(acc)
            }
            lit => match as_literal(lit) {
                Some(l) => Ok([Term::new([l])].into_iter().collect()),
                None => unreachable!("negation normal form reached a non-literal leaf"),
            },
        }
    }
    dnf(&f.simplify_constants().nnf(), max_literals)
}

/// Picks a prefix for auxiliary variable names that no input variable
/// shares, so fresh names can never collide with user variables.
fn fresh_prefix(vars: &VarSet) -> String {
    let mut candidates = std::iter::once("_aux".to_string())
        .chain((0..).map(|i| format!("_aux{i}")));
    candidates
        .find(|p| !vars.iter().any(|v| v.name().starts_with(p.as_str())))
        .unwrap()
}

/// Definitional CNF: every conjunction/disjunction node gets a fresh
/// variable constrained to be equivalent to it. Linear in the formula size;
/// the result is satisfiable exactly when the input is, and agrees with it
/// on the input variables.
pub fn to_cnf_definitional(f: &Formula) -> ClauseSet {
    let simplified = f.simplify_constants();
    match simplified {
        Formula::True => return ClauseSet::new(),
        Formula::False => return [Clause::empty()].into_iter().collect(),
        _ => {}
    }
    let nnf = simplified.nnf();
    let prefix = fresh_prefix(&nnf.vars());
    let mut clauses = ClauseSet::new();
    let mut counter = 0usize;

    fn define(
        f: &Formula,
        prefix: &str,
        counter: &mut usize,
        clauses: &mut ClauseSet,
    ) -> Literal {
        if let Some(l) = as_literal(f) {
            return l;
        }
        let reps: Vec<Literal> = match f {
            Formula::And(cs) | Formula::Or(cs) => cs
                .iter()
                .map(|c| define(c, prefix, counter, clauses))
                .collect(),
            _ => unreachable!("negation normal form contains only and/or/literals"),
        };
        let me = Literal::positive(Var::new(format!("{prefix}{counter}")));
        *counter += 1;
        match f {
            Formula::And(_) => {
                // me -> r_i for each child; (r_1 & ... & r_k) -> me.
                for r in &reps {
                    clauses.insert(Clause::new([me.negated(), r.clone()]));
                }
                clauses.insert(Clause::new(
                    reps.iter()
                        .map(Literal::negated)
                        .chain([me.clone()])
                        .collect::<Vec<_>>(),
                ));
            }
            Formula::Or(_) => {
                // r_i -> me for each child; me -> (r_1 | ... | r_k).
                for r in &reps {
                    clauses.insert(Clause::new([r.negated(), me.clone()]));
                }
                clauses.insert(Clause::new(
                    reps.iter()
                        .cloned()
                        .chain([me.negated()])
                        .collect::<Vec<_>>(),
                ));
            }
            _ => unreachable!(),
        }
        me
    }

    let root = define(&nnf, &prefix, &mut counter, &mut clauses);
    clauses.insert(Clause::new([root]));
    clauses
}

/// CNF conversion for solving: distributes when the distributed form stays
/// within twice the formula size (never introducing variables), otherwise
/// switches to the definitional encoding. Auxiliary variables, when present,
/// use a reserved `_aux` prefix chosen to avoid the input's variables.
pub fn to_cnf(f: &Formula) -> ClauseSet {
    let budget = (2 * f.size()).max(16);
    match to_cnf_distributed(f, budget) {
        Ok(c) => c,
        Err(_) => to_cnf_definitional(f),
    }
}

/// Serializes to DIMACS CNF. Variables are numbered 1..n in sorted order and
/// their names recorded in `c varname <id> <name>` comment lines.
pub fn write_dimacs(clauses: &ClauseSet) -> String {
    let vars: Vec<Var> = clauses.vars().into_iter().collect();
    let mut out = String::new();
    for (i, v) in vars.iter().enumerate() {
        out.push_str(&format!("c varname {} {}\n", i + 1, v.name()));
    }
    out.push_str(&format!("p cnf {} {}\n", vars.len(), clauses.len()));
    for c in clauses {
        for l in c.literals() {
            let id = vars.binary_search(l.var()).unwrap() + 1;
            let signed = if l.is_positive() {
                id as i64
            } else {
                -(id as i64)
            };
            out.push_str(&format!("{signed} "));
        }
        out.push_str("0\n");
    }
    out
}

/// Parses DIMACS CNF, honoring `c varname` lines; variables without a
/// recorded name are called `v<id>`.
pub fn read_dimacs(text: &str) -> Result<ClauseSet> {
    let mut names: std::collections::BTreeMap<usize, String> = Default::default();
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = ClauseSet::new();
    let mut current: Vec<Literal> = Vec::new();
    let mut closed = true;

    let err = |line: usize, message: &str| Error::Dimacs {
        line,
        message: message.to_string(),
    };

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('c') {
            let fields: Vec<&str> = comment.split_whitespace().collect();
            if fields.len() == 3 && fields[0] == "varname" {
                let id: usize = fields[1]
                    .parse()
                    .map_err(|_| err(lineno, "bad varname id"))?;
                if names.insert(id, fields[2].to_string()).is_some() {
                    return Err(err(lineno, "duplicate varname id"));
                }
            }
            continue;
        }
        if let Some(rest) = line.strip_prefix('p') {
            if header.is_some() {
                return Err(err(lineno, "duplicate header"));
            }
            let fields: Vec<&str> = rest.split_whitespace().collect();
            if fields.len() != 3 || fields[0] != "cnf" {
                return Err(err(lineno, "header must be `p cnf <vars> <clauses>`"));
            }
            let nv = fields[1].parse().map_err(|_| err(lineno, "bad var count"))?;
            let nc = fields[2]
                .parse()
                .map_err(|_| err(lineno, "bad clause count"))?;
            header = Some((nv, nc));
            continue;
        }
        let (nv, _) = header.ok_or_else(|| err(lineno, "clause before header"))?;
        for tok in line.split_whitespace() {
            let n: i64 = tok.parse().map_err(|_| err(lineno, "bad literal"))?;
            if n == 0 {
                clauses.insert(Clause::new(current.drain(..)));
                closed = true;
                continue;
            }
            let id = n.unsigned_abs() as usize;
            if id > nv {
                return Err(err(lineno, "literal out of declared range"));
            }
            let name = names
                .get(&id)
                .cloned()
                .unwrap_or_else(|| format!("v{id}"));
            current.push(Literal::new(Var::new(name), n > 0));
            closed = false;
        }
    }
    if !closed {
        return Err(err(text.lines().count(), "unterminated clause"));
    }
    let (_, nc) = header.ok_or_else(|| err(1, "missing header"))?;
    if clauses.len() != nc {
        return Err(Error::Dimacs {
            line: 1,
            message: format!(
                "header declares {nc} clauses but {} were read",
                clauses.len()
            ),
        });
    }
    Ok(clauses)
}
