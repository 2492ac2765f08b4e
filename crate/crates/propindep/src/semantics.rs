//! Worlds, evaluation, and the brute-force oracle.
//!
//! The [`Oracle`] decides every question in this crate by explicit model
//! enumeration. It is deliberately naive — its value is that each operation
//! is a direct transcription of a model-theoretic definition, so the rest of
//! the crate can be tested against it. Enumeration is lexicographic over the
//! sorted variable list and refuses to run past a configurable variable cap.

use std::collections::BTreeMap;
use std::fmt;

use crate::applications::CircPartition;
use crate::error::{Error, Result};
use crate::formula::{Formula, Literal, LiteralSet, Var, VarSet};

/// A total truth assignment over a finite variable domain.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct World(BTreeMap<Var, bool>);

impl World {
    pub fn new(assignment: BTreeMap<Var, bool>) -> World {
        World(assignment)
    }

    /// Builds a world over `vars` by asking `value` for each variable.
    pub fn from_fn(vars: &VarSet, mut value: impl FnMut(&Var) -> bool) -> World {
        World(vars.iter().map(|v| (v.clone(), value(v))).collect())
    }

    pub fn domain(&self) -> VarSet {
        self.0.keys().cloned().collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn value(&self, v: &Var) -> Option<bool> {
        self.0.get(v).copied()
    }

    /// The truth value of `v`, erroring outside the domain.
    pub fn truth(&self, v: &Var) -> Result<bool> {
        self.value(v)
            .ok_or_else(|| Error::UndeclaredVariable(v.name().to_string()))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Var, bool)> {
        self.0.iter().map(|(v, &b)| (v, b))
    }

    /// Whether the literal holds here.
    pub fn satisfies(&self, l: &Literal) -> Result<bool> {
        Ok(self.truth(l.var())? == l.is_positive())
    }

    /// The world with every literal in `lits` made true and everything else
    /// untouched. Errors if `lits` contains a complementary pair or mentions
    /// a variable outside the domain.
    pub fn force(&self, lits: &LiteralSet) -> Result<World> {
        let mut out = self.0.clone();
        for l in lits {
            if lits.contains(&l.negated()) {
                return Err(Error::InconsistentLiterals(l.var().name().to_string()));
            }
            if !out.contains_key(l.var()) {
                return Err(Error::UndeclaredVariable(l.var().name().to_string()));
            }
            out.insert(l.var().clone(), l.is_positive());
        }
        Ok(World(out))
    }

    /// `force` for a single literal.
    pub fn force_lit(&self, l: &Literal) -> Result<World> {
        self.force(&[l.clone()].into_iter().collect())
    }

    /// The world with `v`'s value flipped.
    pub fn switch(&self, v: &Var) -> Result<World> {
        let cur = self.truth(v)?;
        let mut out = self.0.clone();
        out.insert(v.clone(), !cur);
        Ok(World(out))
    }
}

impl fmt::Display for World {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("(empty)");
        }
        for (i, (v, b)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}={}", if *b { 1 } else { 0 })?;
        }
        Ok(())
    }
}

/// Worlds in lexicographic order (variables sorted; false before true).
pub type WorldSet = std::collections::BTreeSet<World>;

/// Evaluates a formula in a world. Every variable of the formula must be in
/// the world's domain; evaluation does not short-circuit, so out-of-domain
/// variables are always detected.
pub fn eval(f: &Formula, w: &World) -> Result<bool> {
    match f {
        Formula::True => Ok(true),
        Formula::False => Ok(false),
        Formula::Atom(v) => w.truth(v),
        Formula::Not(g) => Ok(!eval(g, w)?),
        Formula::And(cs) => {
            let mut all = true;
            for c in cs {
                all &= eval(c, w)?;
            }
            Ok(all)
        }
        Formula::Or(cs) => {
            let mut any = false;
            for c in cs {
                any |= eval(c, w)?;
            }
            Ok(any)
        }
        Formula::Implies(a, b) => {
            let (va, vb) = (eval(a, w)?, eval(b, w)?);
            Ok(!va || vb)
        }
        Formula::Iff(a, b) => Ok(eval(a, w)? == eval(b, w)?),
        Formula::Xor(a, b) => Ok(eval(a, w)? != eval(b, w)?),
    }
}

/// The full disjunctive normal form of a model set: one complete term per
/// world. Every world must range over exactly `over`.
pub fn formula_from_models(models: &WorldSet, over: &VarSet) -> Formula {
    let terms = models
        .iter()
        .map(|w| {
            assert_eq!(&w.domain(), over, "world domain must match `over`");
            Formula::and(
                w.iter()
                    .map(|(v, b)| Formula::lit(&Literal::new(v.clone(), b)))
                    .collect(),
            )
        })
        .collect();
    Formula::or(terms)
}

/// Brute-force decision procedures by world enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracle {
    cap: usize,
}

impl Default for Oracle {
    fn default() -> Oracle {
        Oracle { cap: 20 }
    }
}

/// Compiled form of one enumeration domain: sorted variables and their bit
/// positions. The first variable takes the most significant bit, so mask
/// order equals lexicographic world order.
struct Domain {
    vars: Vec<Var>,
}

impl Domain {
    fn new(over: &VarSet) -> Domain {
        Domain {
            vars: over.iter().cloned().collect(),
        }
    }

    fn bit(&self, i: usize) -> u64 {
        1 << (self.vars.len() - 1 - i)
    }

    fn index_of(&self, v: &Var) -> Result<usize> {
        self.vars
            .binary_search(v)
            .map_err(|_| Error::UndeclaredVariable(v.name().to_string()))
    }

    fn world(&self, mask: u64) -> World {
        World(
            self.vars
                .iter()
                .enumerate()
                .map(|(i, v)| (v.clone(), mask & self.bit(i) != 0))
                .collect(),
        )
    }

    fn eval(&self, f: &Formula, mask: u64) -> Result<bool> {
        Ok(match f {
            Formula::True => true,
            Formula::False => false,
            Formula::Atom(v) => mask & self.bit(self.index_of(v)?) != 0,
            Formula::Not(g) => !self.eval(g, mask)?,
            Formula::And(cs) => {
                let mut all = true;
                for c in cs {
                    all &= self.eval(c, mask)?;
                }
                all
            }
            Formula::Or(cs) => {
                let mut any = false;
                for c in cs {
                    any |= self.eval(c, mask)?;
                }
                any
            }
            Formula::Implies(a, b) => !self.eval(a, mask)? || self.eval(b, mask)?,
            Formula::Iff(a, b) => self.eval(a, mask)? == self.eval(b, mask)?,
            Formula::Xor(a, b) => self.eval(a, mask)? != self.eval(b, mask)?,
        })
    }
}

impl Oracle {
    /// An oracle that enumerates up to `2^cap` worlds. Caps above 32 are not
    /// supported (enumeration would be hopeless long before that).
    pub fn new(cap: usize) -> Oracle {
        assert!(cap <= 32, "enumeration cap must be at most 32");
        Oracle { cap }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    fn admit(&self, over: &VarSet) -> Result<Domain> {
        if over.len() > self.cap {
            return Err(Error::CapExceeded {
                vars: over.len(),
                cap: self.cap,
            });
        }
        Ok(Domain::new(over))
    }

    /// All worlds over `over`, in lexicographic order.
    pub fn worlds(&self, over: &VarSet) -> Result<Vec<World>> {
        let dom = self.admit(over)?;
        let n = dom.vars.len();
        Ok((0..1u64 << n).map(|m| dom.world(m)).collect())
    }

    /// The models of `f` over `over`, which must contain `f`'s variables.
    pub fn models(&self, f: &Formula, over: &VarSet) -> Result<WorldSet> {
        let dom = self.admit(over)?;
        let n = dom.vars.len();
        let mut out = WorldSet::new();
        for m in 0..1u64 << n {
            if dom.eval(f, m)? {
                out.insert(dom.world(m));
            }
        }
        Ok(out)
    }

    pub fn is_satisfiable(&self, f: &Formula) -> Result<bool> {
        let dom = self.admit(&f.vars())?;
        let n = dom.vars.len();
        for m in 0..1u64 << n {
            if dom.eval(f, m)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    pub fn is_valid(&self, f: &Formula) -> Result<bool> {
        Ok(!self.is_satisfiable(&Formula::not(f.clone()))?)
    }

    /// Entailment over the union of both variable sets.
    pub fn entails(&self, a: &Formula, b: &Formula) -> Result<bool> {
        let mut over = a.vars();
        over.extend(b.vars());
        let dom = self.admit(&over)?;
        let n = dom.vars.len();
        for m in 0..1u64 << n {
            if dom.eval(a, m)? && !dom.eval(b, m)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equivalence over the union of both variable sets.
    pub fn equivalent(&self, a: &Formula, b: &Formula) -> Result<bool> {
        let mut over = a.vars();
        over.extend(b.vars());
        let dom = self.admit(&over)?;
        let n = dom.vars.len();
        for m in 0..1u64 << n {
            if dom.eval(a, m)? != dom.eval(b, m)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The model-level reading of literal independence: making `l` false in
    /// any model of `f` lands on another model.
    pub fn lit_independent(&self, f: &Formula, l: &Literal) -> Result<bool> {
        let mut over = f.vars();
        over.insert(l.var().clone());
        let dom = self.admit(&over)?;
        let n = dom.vars.len();
        let lbit = dom.bit(dom.index_of(l.var())?);
        for m in 0..1u64 << n {
            if dom.eval(f, m)? {
                // Force ~l: the variable takes the value that falsifies l.
                let forced = if l.is_positive() { m & !lbit } else { m | lbit };
                if !dom.eval(f, forced)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The model-level reading of variable independence: flipping `v` maps
    /// models to models.
    pub fn var_independent(&self, f: &Formula, v: &Var) -> Result<bool> {
        let mut over = f.vars();
        over.insert(v.clone());
        let dom = self.admit(&over)?;
        let n = dom.vars.len();
        let vbit = dom.bit(dom.index_of(v)?);
        for m in 0..1u64 << n {
            if dom.eval(f, m)? && !dom.eval(f, m ^ vbit)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The models of forgetting, computed straight from the model-theoretic
    /// characterization: a world belongs iff some model of `f` differs from
    /// it only on variables whose value *in the model* reads as a literal of
    /// `lits`. `over` must contain the variables of `f` and of `lits`.
    pub fn forget_lit_models(
        &self,
        f: &Formula,
        lits: &LiteralSet,
        over: &VarSet,
    ) -> Result<WorldSet> {
        let dom = self.admit(over)?;
        for l in lits {
            dom.index_of(l.var())?;
        }
        let n = dom.vars.len();
        let mut allowed_pos = 0u64;
        let mut allowed_neg = 0u64;
        for l in lits {
            let bit = dom.bit(dom.index_of(l.var())?);
            if l.is_positive() {
                allowed_pos |= bit;
            } else {
                allowed_neg |= bit;
            }
        }
        let mut model_masks = Vec::new();
        for m in 0..1u64 << n {
            if dom.eval(f, m)? {
                model_masks.push(m);
            }
        }
        let mut out = WorldSet::new();
        for w in 0..1u64 << n {
            let reachable = model_masks.iter().any(|&m| {
                let diff = w ^ m;
                // Where the worlds differ, the model's polarity must be a
                // forgotten literal.
                (diff & m & !allowed_pos) == 0 && (diff & !m & !allowed_neg) == 0
            });
            if reachable {
                out.insert(dom.world(w));
            }
        }
        Ok(out)
    }

    /// The minimal models of `f` under a circumscription partition: among
    /// models agreeing on the fixed variables, keep those whose minimized
    /// part is subset-minimal; varying variables are unconstrained.
    pub fn circ_models(&self, f: &Formula, part: &CircPartition) -> Result<WorldSet> {
        let universe = part.universe();
        for v in f.vars() {
            if !universe.contains(&v) {
                return Err(Error::InvalidPartition(format!(
                    "variable `{v}` of the formula is not covered by the partition"
                )));
            }
        }
        let dom = self.admit(&universe)?;
        let n = dom.vars.len();
        let mut pmask = 0u64;
        let mut qmask = 0u64;
        for (i, v) in dom.vars.iter().enumerate() {
            if part.minimized().contains(v) {
                pmask |= dom.bit(i);
            } else if part.fixed().contains(v) {
                qmask |= dom.bit(i);
            }
        }
        let mut model_masks = Vec::new();
        for m in 0..1u64 << n {
            if dom.eval(f, m)? {
                model_masks.push(m);
            }
        }
        let mut out = WorldSet::new();
        for &m in &model_masks {
            let minimal = !model_masks.iter().any(|&m2| {
                (m2 & qmask) == (m & qmask)
                    && (m2 & pmask) != (m & pmask)
                    && (m2 & pmask & !(m & pmask)) == 0
            });
            if minimal {
                out.insert(dom.world(m));
            }
        }
        Ok(out)
    }
}
