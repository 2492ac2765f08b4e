//! Prime implicates and prime implicants.
//!
//! A prime implicate is a weakest entailed clause: entailed, with no proper
//! subclause entailed. A prime implicant is a strongest implying term.
//! Computation is by resolution closure over a CNF of the input, with
//! tautology elimination and forward/backward subsumption keeping the
//! working set a minimal antichain; implicants are obtained from the
//! implicates of the negation by duality.
//!
//! Degenerate ends are fixed by convention so set identities stay total:
//! an inconsistent formula has exactly the empty clause as implicate and no
//! implicant; a valid formula has no implicate and exactly the empty term
//! as implicant.

use std::fmt;

use crate::clauses::{to_cnf_distributed, Clause, ClauseSet, Term, TermSet};
use crate::error::{Error, Result};
use crate::formula::{Formula, LiteralSet, VarSet};

/// Resource bounds for the closure computation. When exceeded, the call
/// fails with [`Error::SizeLimit`] and returns no partial set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeLimits {
    /// Cap on the clause count of the working set during closure.
    pub max_clauses: usize,
    /// Literal-occurrence budget for the initial CNF distribution.
    pub max_cnf_literals: usize,
}

impl Default for PrimeLimits {
    fn default() -> PrimeLimits {
        PrimeLimits {
            max_clauses: 50_000,
            max_cnf_literals: 500_000,
        }
    }
}

/// A computed set of prime implicates or implicants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrimeSet {
    Implicates(ClauseSet),
    Implicants(TermSet),
}

impl PrimeSet {
    pub fn len(&self) -> usize {
        match self {
            PrimeSet::Implicates(c) => c.len(),
            PrimeSet::Implicants(t) => t.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn kind(&self) -> &'static str {
        match self {
            PrimeSet::Implicates(_) => "implicates",
            PrimeSet::Implicants(_) => "implicants",
        }
    }

    /// The clause reading, for implicate sets.
    pub fn clauses(&self) -> Option<&ClauseSet> {
        match self {
            PrimeSet::Implicates(c) => Some(c),
            PrimeSet::Implicants(_) => None,
        }
    }

    /// The term reading, for implicant sets.
    pub fn terms(&self) -> Option<&TermSet> {
        match self {
            PrimeSet::Implicants(t) => Some(t),
            PrimeSet::Implicates(_) => None,
        }
    }

    /// The formula the set denotes: conjunction of implicates or
    /// disjunction of implicants.
    pub fn to_formula(&self) -> Formula {
        match self {
            PrimeSet::Implicates(c) => c.to_formula(),
            PrimeSet::Implicants(t) => t.to_formula(),
        }
    }
}

/// One member per line, in canonical order.
impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimeSet::Implicates(c) => write!(f, "{c}"),
            PrimeSet::Implicants(t) => write!(f, "{t}"),
        }
    }
}

fn resolve(a: &Clause, b: &Clause, on: &crate::formula::Literal) -> Clause {
    let mut out = a.without(&[on.clone()].into_iter().collect());
    for l in b.literals() {
        if l != &on.negated() {
            out.insert(l.clone());
        }
    }
    out
}

/// Saturates a clause set under resolution with subsumption, yielding the
/// prime implicates of its conjunction.
fn closure(initial: ClauseSet, limits: PrimeLimits) -> Result<ClauseSet> {
    let mut set: Vec<Clause> = initial.reduce().into_iter().collect();
    if set.len() > limits.max_clauses {
        return Err(Error::SizeLimit {
            size: set.len(),
            limit: limits.max_clauses,
        });
    }
    loop {
        let mut changed = false;
        let vars: VarSet = set.iter().flat_map(|c| c.vars()).collect();
        for v in &vars {
            let pos_lit = crate::formula::Literal::new(v.clone(), true);
            let neg_lit = pos_lit.negated();
            let pos: Vec<Clause> = set
                .iter()
                .filter(|c| c.contains(&pos_lit))
                .cloned()
                .collect();
            let neg: Vec<Clause> = set
                .iter()
                .filter(|c| c.contains(&neg_lit))
                .cloned()
                .collect();
            for a in &pos {
                for b in &neg {
                    let r = resolve(a, b, &pos_lit);
                    if r.is_tautology() {
                        continue;
                    }
                    if set.iter().any(|k| k.subsumes(&r)) {
                        continue;
                    }
                    set.retain(|k| !r.subsumes(k));
                    set.push(r);
                    changed = true;
                    if set.len() > limits.max_clauses {
                        return Err(Error::SizeLimit {
                            size: set.len(),
                            limit: limits.max_clauses,
                        });
                    }
                }
            }
        }
        if !changed {
            return Ok(set.into_iter().collect());
        }
    }
}

/// The prime implicates of `f` under explicit limits.
pub fn prime_implicates_limited(f: &Formula, limits: PrimeLimits) -> Result<PrimeSet> {
    let cnf = to_cnf_distributed(f, limits.max_cnf_literals)?;
    let closed = closure(cnf, limits)?;
    // An inconsistent input leaves the empty clause, which subsumes
    // everything; a valid input leaves nothing.
    Ok(PrimeSet::Implicates(closed))
}

/// The prime implicates of `f`: the weakest clauses it entails, one
/// representative per equivalence class, none subsuming another.
pub fn prime_implicates(f: &Formula) -> Result<PrimeSet> {
    prime_implicates_limited(f, PrimeLimits::default())
}

/// The prime implicants of `f` under explicit limits.
pub fn prime_implicants_limited(f: &Formula, limits: PrimeLimits) -> Result<PrimeSet> {
    let negated = prime_implicates_limited(&Formula::not(f.clone()), limits)?;
    let clauses = negated.clauses().unwrap();
    let terms: TermSet = clauses
        .iter()
        .map(|c| c.literals().map(|l| l.negated()).collect::<Term>())
        .collect();
    Ok(PrimeSet::Implicants(terms))
}

/// The prime implicants of `f`: the strongest consistent terms implying it,
/// computed by duality from the implicates of `¬f`.
pub fn prime_implicants(f: &Formula) -> Result<PrimeSet> {
    prime_implicants_limited(f, PrimeLimits::default())
}

/// Literal independence read off the primes: no prime implicate may mention
/// a literal of `L`.
pub fn lit_independent_primes(f: &Formula, lits: &LiteralSet) -> Result<bool> {
    let primes = prime_implicates(f)?;
    let clauses = primes.clauses().unwrap();
    let independent = clauses
        .iter()
        .all(|c| c.literals().all(|l| !lits.contains(l)));
    Ok(independent)
}

/// Variable independence read off the primes: no prime implicate may
/// mention a variable of `V`.
pub fn var_independent_primes(f: &Formula, vars: &VarSet) -> Result<bool> {
    let primes = prime_implicates(f)?;
    let clauses = primes.clauses().unwrap();
    let independent = clauses.iter().all(|c| vars.iter().all(|v| !c.mentions(v)));
    Ok(independent)
}
