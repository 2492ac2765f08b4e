//! Reasoning services built on independence and forgetting: minimal-model
//! (circumscriptive) entailment, relevance analysis, conservative "natural"
//! consequence, and forget-and-expand belief update.

use crate::error::{Error, Result};
use crate::forgetting::{forget_lit_limited, forget_var_limited, ForgetStrategy, DEFAULT_MAX_SIZE};
use crate::formula::{literals_over, Formula, LiteralSet, VarSet};
use crate::independence::{dep_lit, dep_var, var_independent};
use crate::primes::prime_implicates;
use crate::sat;

/// A three-way split of the vocabulary for minimal-model entailment:
/// `minimized` variables are driven toward false, `fixed` variables must
/// agree between compared models, and `varying` variables are free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircPartition {
    minimized: VarSet,
    fixed: VarSet,
    varying: VarSet,
}

impl CircPartition {
    /// Builds a partition, rejecting overlapping parts.
    pub fn new(minimized: VarSet, fixed: VarSet, varying: VarSet) -> Result<CircPartition> {
        let pairs = [
            (&minimized, &fixed, "minimized", "fixed"),
            (&minimized, &varying, "minimized", "varying"),
            (&fixed, &varying, "fixed", "varying"),
        ];
        for (a, b, an, bn) in pairs {
            if let Some(v) = a.intersection(b).next() {
                return Err(Error::InvalidPartition(format!(
                    "variable `{v}` appears in both the {an} and {bn} parts"
                )));
            }
        }
        Ok(CircPartition {
            minimized,
            fixed,
            varying,
        })
    }

    pub fn minimized(&self) -> &VarSet {
        &self.minimized
    }

    pub fn fixed(&self) -> &VarSet {
        &self.fixed
    }

    pub fn varying(&self) -> &VarSet {
        &self.varying
    }

    /// All variables the partition covers.
    pub fn universe(&self) -> VarSet {
        self.minimized
            .union(&self.fixed)
            .cloned()
            .chain(self.varying.iter().cloned())
            .collect()
    }

    fn check_covers(&self, vars: &VarSet) -> Result<()> {
        let universe = self.universe();
        for v in vars {
            if !universe.contains(v) {
                return Err(Error::InvalidPartition(format!(
                    "variable `{v}` of the query is not covered by the partition"
                )));
            }
        }
        Ok(())
    }
}

/// The literals whose forgetting realizes minimization: everything about
/// the varying variables, plus the negative side of the minimized ones
/// (what survives is monotone-decreasing information about them).
fn minimization_forget_set(part: &CircPartition) -> LiteralSet {
    let mut lits = literals_over(&part.varying);
    for v in &part.minimized {
        lits.insert(crate::formula::Literal::new(v.clone(), false));
    }
    lits
}

fn forget_for_circ(f: &Formula, lits: &LiteralSet) -> Result<Formula> {
    forget_lit_limited(f, lits, ForgetStrategy::DnfPath, DEFAULT_MAX_SIZE)
}

/// Whether the minimal models of `sigma` under `part` all satisfy `phi`.
///
/// Reduced to classical entailment through literal forgetting. When `phi`
/// avoids the varying variables a single forgetting suffices:
/// `sigma ⊨ forget(sigma ∧ phi, F)` with `F` the minimization forget set.
/// Otherwise the query is first narrowed by a nested forgetting of its
/// complement.
pub fn circ_entails(sigma: &Formula, part: &CircPartition, phi: &Formula) -> Result<bool> {
    part.check_covers(&sigma.vars().union(&phi.vars()).cloned().collect())?;
    let forget = minimization_forget_set(part);
    if phi.vars().is_disjoint(&part.varying) {
        let weakened = forget_for_circ(&Formula::and(vec![sigma.clone(), phi.clone()]), &forget)?;
        Ok(sat::entails(sigma, &weakened))
    } else {
        let blocked = forget_for_circ(
            &Formula::and(vec![sigma.clone(), Formula::not(phi.clone())]),
            &forget,
        )?;
        let narrowed = Formula::and(vec![sigma.clone(), Formula::not(blocked)]);
        let weakened = forget_for_circ(&narrowed, &forget)?;
        Ok(sat::entails(sigma, &weakened))
    }
}

/// Whether fixing the variables of `vars` can ever tip `sigma` between
/// true and false — equivalently, whether `sigma` depends on some variable
/// of the set.
pub fn influenceable(sigma: &Formula, vars: &VarSet) -> bool {
    !var_independent(sigma, vars)
}

/// Whether `sigma` is relevant to the topic `vars`. Coincides with
/// [`influenceable`]; both are variable dependence under different names.
pub fn relevant_to(sigma: &Formula, vars: &VarSet) -> bool {
    !var_independent(sigma, vars)
}

/// Strict relevance in the sense that every irredundant clausal consequence
/// touches the topic: the prime implicates are nonempty and each mentions a
/// variable of `vars`. Valid and inconsistent formulas are strictly
/// relevant to nothing.
pub fn strictly_relevant_1995(sigma: &Formula, vars: &VarSet) -> Result<bool> {
    let primes = prime_implicates(sigma)?;
    let clauses = primes.clauses().unwrap();
    Ok(!clauses.is_empty() && clauses.iter().all(|c| c.vars().iter().any(|v| vars.contains(v))))
}

/// Strict relevance in the sense that the formula is about the topic and
/// nothing else: dependent on `vars`, independent of its remaining
/// variables.
pub fn strictly_relevant_1997(sigma: &Formula, vars: &VarSet) -> bool {
    let rest: VarSet = sigma.vars().difference(vars).cloned().collect();
    !var_independent(sigma, vars) && var_independent(sigma, &rest)
}

/// Consequence that introduces no new dependencies: `phi` follows from
/// `sigma` and depends on no literal `sigma` is independent of. Blocks the
/// usual paradoxes of material weakening (`p` does not naturally yield
/// `p ∨ q`).
pub fn natural_consequence(sigma: &Formula, phi: &Formula) -> bool {
    sat::entails(sigma, phi) && dep_lit(phi).is_subset(&dep_lit(sigma))
}

/// Forget-and-expand update: release everything `sigma` says about the
/// variables `phi` depends on, then adjoin `phi`. The result always entails
/// `phi`; if `phi` is inconsistent the result is inconsistent.
pub fn update(sigma: &Formula, phi: &Formula) -> Formula {
    let released = forget_var_limited(
        sigma,
        &dep_var(phi),
        ForgetStrategy::Definitional,
        usize::MAX,
    )
    .expect("unbounded definitional forgetting cannot fail");
    Formula::and(vec![released, phi.clone()]).simplify_constants()
}

/// Update that spares `persistent` literals: only the non-persistent
/// literals over `phi`'s dependent variables are forgotten, so persistent
/// facts survive unless `phi` itself overrides them (in which case the
/// result is inconsistent rather than an error).
pub fn update_lit(sigma: &Formula, phi: &Formula, persistent: &LiteralSet) -> Formula {
    let release: LiteralSet = literals_over(&dep_var(phi))
        .difference(persistent)
        .cloned()
        .collect();
    let released = forget_lit_limited(sigma, &release, ForgetStrategy::Definitional, usize::MAX)
        .expect("unbounded definitional forgetting cannot fail");
    Formula::and(vec![released, phi.clone()]).simplify_constants()
}
