//! Propositional formulas over named variables.
//!
//! The connective set is negation, n-ary conjunction and disjunction,
//! implication, equivalence and exclusive or, plus the constants `true` and
//! `false`. Formulas are ordinary immutable trees; every transformation
//! returns a new formula.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;

/// A propositional variable, identified by name.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(String);

impl Var {
    /// Creates a variable. Names must be non-empty; the parser additionally
    /// restricts them to `[A-Za-z_][A-Za-z0-9_]*`.
    pub fn new(name: impl Into<String>) -> Var {
        let name = name.into();
        assert!(!name.is_empty(), "variable names must be non-empty");
        Var(name)
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Var {
    fn from(name: &str) -> Var {
        Var::new(name)
    }
}

/// A variable with a sign: `x` or `~x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Literal {
    var: Var,
    positive: bool,
}

impl Literal {
    pub fn new(var: Var, positive: bool) -> Literal {
        Literal { var, positive }
    }

    pub fn positive(var: impl Into<Var>) -> Literal {
        Literal::new(var.into(), true)
    }

    pub fn negative(var: impl Into<Var>) -> Literal {
        Literal::new(var.into(), false)
    }

    pub fn var(&self) -> &Var {
        &self.var
    }

    pub fn is_positive(&self) -> bool {
        self.positive
    }

    /// The literal on the same variable with the opposite sign.
    pub fn negated(&self) -> Literal {
        Literal {
            var: self.var.clone(),
            positive: !self.positive,
        }
    }
}

/// Literals order by variable first, and a positive literal sorts before the
/// negative literal on the same variable. Iterating a sorted literal
/// collection therefore visits `a, ~a, b, ~b, ...`.
impl Ord for Literal {
    fn cmp(&self, other: &Literal) -> Ordering {
        self.var
            .cmp(&other.var)
            .then_with(|| other.positive.cmp(&self.positive))
    }
}

impl PartialOrd for Literal {
    fn partial_cmp(&self, other: &Literal) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::ops::Not for Literal {
    type Output = Literal;
    fn not(self) -> Literal {
        self.negated()
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.positive {
            f.write_str("~")?;
        }
        write!(f, "{}", self.var)
    }
}

impl FromStr for Literal {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Literal, ParseError> {
        let t = s.trim();
        let (positive, name) = match t.strip_prefix('~') {
            Some(rest) => (false, rest.trim()),
            None => (true, t),
        };
        if !is_identifier(name) {
            return Err(ParseError::new(0, format!("`{t}` is not a literal")));
        }
        Ok(Literal::new(Var::new(name), positive))
    }
}

/// Returns true when `s` matches `[A-Za-z_][A-Za-z0-9_]*`.
pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub type VarSet = BTreeSet<Var>;
pub type LiteralSet = BTreeSet<Literal>;

/// All literals over `vars`: both signs of every variable.
pub fn literals_over(vars: &VarSet) -> LiteralSet {
    vars.iter()
        .flat_map(|v| {
            [
                Literal::new(v.clone(), true),
                Literal::new(v.clone(), false),
            ]
        })
        .collect()
}

/// The positive literals over `vars`.
pub fn positive_literals_over(vars: &VarSet) -> LiteralSet {
    vars.iter().map(|v| Literal::new(v.clone(), true)).collect()
}

/// The negative literals over `vars`.
pub fn negative_literals_over(vars: &VarSet) -> LiteralSet {
    vars.iter()
        .map(|v| Literal::new(v.clone(), false))
        .collect()
}

/// A propositional formula.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    True,
    False,
    Atom(Var),
    Not(Box<Formula>),
    And(Vec<Formula>),
    Or(Vec<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
    Xor(Box<Formula>, Box<Formula>),
}

use Formula::*;

impl Formula {
    pub fn atom(name: impl Into<Var>) -> Formula {
        Atom(name.into())
    }

    /// The formula `x` or `~x` corresponding to a literal.
    pub fn lit(l: &Literal) -> Formula {
        let a = Atom(l.var().clone());
        if l.is_positive() {
            a
        } else {
            Not(Box::new(a))
        }
    }

    pub fn not(f: Formula) -> Formula {
        Not(Box::new(f))
    }

    /// N-ary conjunction. Zero children give `true`, one child is returned
    /// as-is, so the `And` node always has at least two children.
    pub fn and(children: Vec<Formula>) -> Formula {
        let mut children = children;
        match children.len() {
            0 => True,
            1 => children.pop().unwrap(),
            _ => And(children),
        }
    }

    /// N-ary disjunction; zero children give `false`.
    pub fn or(children: Vec<Formula>) -> Formula {
        let mut children = children;
        match children.len() {
            0 => False,
            1 => children.pop().unwrap(),
            _ => Or(children),
        }
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Implies(Box::new(a), Box::new(b))
    }

    pub fn iff(a: Formula, b: Formula) -> Formula {
        Iff(Box::new(a), Box::new(b))
    }

    pub fn xor(a: Formula, b: Formula) -> Formula {
        Xor(Box::new(a), Box::new(b))
    }

    /// The set of variables occurring in the formula.
    pub fn vars(&self) -> VarSet {
        let mut out = VarSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut VarSet) {
        match self {
            True | False => {}
            Atom(v) => {
                out.insert(v.clone());
            }
            Not(g) => g.collect_vars(out),
            And(cs) | Or(cs) => {
                for c in cs {
                    c.collect_vars(out);
                }
            }
            Implies(a, b) | Iff(a, b) | Xor(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    /// The literals occurring in the formula, read off its negation normal
    /// form after equivalence and exclusive-or have been rewritten away.
    /// `x` appears under an even number of negations as the positive literal
    /// and under an odd number as the negative one.
    pub fn lits(&self) -> LiteralSet {
        let mut out = LiteralSet::new();
        self.nnf().collect_nnf_lits(&mut out);
        out
    }

    fn collect_nnf_lits(&self, out: &mut LiteralSet) {
        match self {
            True | False => {}
            Atom(v) => {
                out.insert(Literal::new(v.clone(), true));
            }
            Not(g) => match g.as_ref() {
                Atom(v) => {
                    out.insert(Literal::new(v.clone(), false));
                }
                _ => unreachable!("negation normal form negates atoms only"),
            },
            And(cs) | Or(cs) => {
                for c in cs {
                    c.collect_nnf_lits(out);
                }
            }
            Implies(..) | Iff(..) | Xor(..) => {
                unreachable!("negation normal form has no arrows")
            }
        }
    }

    /// Formula size: the number of atom occurrences (constants count zero).
    pub fn size(&self) -> usize {
        match self {
            True | False => 0,
            Atom(_) => 1,
            Not(g) => g.size(),
            And(cs) | Or(cs) => cs.iter().map(Formula::size).sum(),
            Implies(a, b) | Iff(a, b) | Xor(a, b) => a.size() + b.size(),
        }
    }

    /// Rewrites `a <-> b` as `(a -> b) & (b -> a)` and `a ^ b` as the
    /// negation of that conjunction, everywhere in the tree.
    pub fn expand_equivalences(&self) -> Formula {
        match self {
            True | False | Atom(_) => self.clone(),
            Not(g) => Formula::not(g.expand_equivalences()),
            And(cs) => And(cs.iter().map(Formula::expand_equivalences).collect()),
            Or(cs) => Or(cs.iter().map(Formula::expand_equivalences).collect()),
            Implies(a, b) => {
                Formula::implies(a.expand_equivalences(), b.expand_equivalences())
            }
            Iff(a, b) => {
                let ea = a.expand_equivalences();
                let eb = b.expand_equivalences();
                Formula::and(vec![
                    Formula::implies(ea.clone(), eb.clone()),
                    Formula::implies(eb, ea),
                ])
            }
            Xor(a, b) => {
                let ea = a.expand_equivalences();
                let eb = b.expand_equivalences();
                Formula::or(vec![
                    Formula::and(vec![ea.clone(), Formula::not(eb.clone())]),
                    Formula::and(vec![Formula::not(ea), eb]),
                ])
            }
        }
    }

    /// Negation normal form: equivalences are expanded, implications
    /// rewritten, and negation pushed down to the atoms. The result uses
    /// only conjunction, disjunction, literals and constants, and is
    /// computed in one linear pass.
    pub fn nnf(&self) -> Formula {
        self.nnf_signed(true)
    }

    fn nnf_signed(&self, positive: bool) -> Formula {
        match self {
            True => {
                if positive {
                    True
                } else {
                    False
                }
            }
            False => {
                if positive {
                    False
                } else {
                    True
                }
            }
            Atom(v) => {
                if positive {
                    Atom(v.clone())
                } else {
                    Not(Box::new(Atom(v.clone())))
                }
            }
            Not(g) => g.nnf_signed(!positive),
            And(cs) => {
                let kids = cs.iter().map(|c| c.nnf_signed(positive)).collect();
                if positive {
                    And(kids)
                } else {
                    Or(kids)
                }
            }
            Or(cs) => {
                let kids = cs.iter().map(|c| c.nnf_signed(positive)).collect();
                if positive {
                    Or(kids)
                } else {
                    And(kids)
                }
            }
            Implies(a, b) => {
                if positive {
                    Or(vec![a.nnf_signed(false), b.nnf_signed(true)])
                } else {
                    And(vec![a.nnf_signed(true), b.nnf_signed(false)])
                }
            }
            Iff(a, b) => {
                // (a -> b) & (b -> a), negated on demand.
                let pos = And(vec![
                    Or(vec![a.nnf_signed(false), b.nnf_signed(true)]),
                    Or(vec![b.nnf_signed(false), a.nnf_signed(true)]),
                ]);
                if positive {
                    pos
                } else {
                    Or(vec![
                        And(vec![a.nnf_signed(true), b.nnf_signed(false)]),
                        And(vec![b.nnf_signed(true), a.nnf_signed(false)]),
                    ])
                }
            }
            Xor(a, b) => Formula::iff(*a.clone(), *b.clone()).nnf_signed(!positive),
        }
    }

    /// True when the formula is in negation normal form.
    pub fn is_nnf(&self) -> bool {
        match self {
            True | False | Atom(_) => true,
            Not(g) => matches!(g.as_ref(), Atom(_)),
            And(cs) | Or(cs) => cs.iter().all(Formula::is_nnf),
            Implies(..) | Iff(..) | Xor(..) => false,
        }
    }

    /// Substitutes a constant for a variable, then folds constants away.
    /// `f.condition_var(x, true)` is the formula with `x` set to true.
    pub fn condition_var(&self, v: &Var, value: bool) -> Formula {
        self.substitute_var(v, value).simplify_constants()
    }

    /// Conditions on a literal: setting `l` to `value` sets `l`'s variable
    /// so that the literal itself takes that value. Conditioning `~x` to
    /// true is the same as conditioning `x` to false.
    pub fn condition(&self, l: &Literal, value: bool) -> Formula {
        let var_value = if l.is_positive() { value } else { !value };
        self.condition_var(l.var(), var_value)
    }

    fn substitute_var(&self, v: &Var, value: bool) -> Formula {
        match self {
            True | False => self.clone(),
            Atom(w) => {
                if w == v {
                    if value {
                        True
                    } else {
                        False
                    }
                } else {
                    self.clone()
                }
            }
            Not(g) => Not(Box::new(g.substitute_var(v, value))),
            And(cs) => And(cs.iter().map(|c| c.substitute_var(v, value)).collect()),
            Or(cs) => Or(cs.iter().map(|c| c.substitute_var(v, value)).collect()),
            Implies(a, b) => Implies(
                Box::new(a.substitute_var(v, value)),
                Box::new(b.substitute_var(v, value)),
            ),
            Iff(a, b) => Iff(
                Box::new(a.substitute_var(v, value)),
                Box::new(b.substitute_var(v, value)),
            ),
            Xor(a, b) => Xor(
                Box::new(a.substitute_var(v, value)),
                Box::new(b.substitute_var(v, value)),
            ),
        }
    }

    /// Folds constants, flattens nested conjunctions/disjunctions, and drops
    /// duplicate children (keeping first occurrences). This is purely
    /// structural: it never collapses `x | ~x`, so the shape of the formula
    /// stays predictable.
    pub fn simplify_constants(&self) -> Formula {
        match self {
            True | False | Atom(_) => self.clone(),
            Not(g) => match g.simplify_constants() {
                True => False,
                False => True,
                h => Not(Box::new(h)),
            },
            And(cs) => {
                let mut out: Vec<Formula> = Vec::new();
                let mut seen: HashSet<Formula> = HashSet::new();
                for c in cs {
                    match c.simplify_constants() {
                        True => {}
                        False => return False,
                        And(inner) => {
                            for i in inner {
                                if seen.insert(i.clone()) {
                                    out.push(i);
                                }
                            }
                        }
                        other => {
                            if seen.insert(other.clone()) {
                                out.push(other);
                            }
                        }
                    }
                }
                Formula::and(out)
            }
            Or(cs) => {
                let mut out: Vec<Formula> = Vec::new();
                let mut seen: HashSet<Formula> = HashSet::new();
                for c in cs {
                    match c.simplify_constants() {
                        False => {}
                        True => return True,
                        Or(inner) => {
                            for i in inner {
                                if seen.insert(i.clone()) {
                                    out.push(i);
                                }
                            }
                        }
                        other => {
                            if seen.insert(other.clone()) {
                                out.push(other);
                            }
                        }
                    }
                }
                Formula::or(out)
            }
            Implies(a, b) => match (a.simplify_constants(), b.simplify_constants()) {
                (False, _) => True,
                (_, True) => True,
                (True, sb) => sb,
                (sa, False) => Formula::not(sa),
                (sa, sb) => Formula::implies(sa, sb),
            },
            Iff(a, b) => match (a.simplify_constants(), b.simplify_constants()) {
                (True, sb) => sb,
                (sa, True) => sa,
                (False, sb) => negate_simplified(sb),
                (sa, False) => negate_simplified(sa),
                (sa, sb) => Formula::iff(sa, sb),
            },
            Xor(a, b) => match (a.simplify_constants(), b.simplify_constants()) {
                (False, sb) => sb,
                (sa, False) => sa,
                (True, sb) => negate_simplified(sb),
                (sa, True) => negate_simplified(sa),
                (sa, sb) => Formula::xor(sa, sb),
            },
        }
    }
}

fn negate_simplified(f: Formula) -> Formula {
    match f {
        True => False,
        False => True,
        other => Formula::not(other),
    }
}

// Rendering. Binding strength, tightest first: ~, &, |, ^, ->, <->.
// `->` is right-associative; `^` and `<->` associate to the left. A child at
// the same precedence level on the non-associative side is parenthesized, so
// printing and reparsing reproduces the tree exactly.

const PREC_IFF: u8 = 1;
const PREC_IMPLIES: u8 = 2;
const PREC_XOR: u8 = 3;
const PREC_OR: u8 = 4;
const PREC_AND: u8 = 5;
const PREC_NOT: u8 = 6;
const PREC_ATOM: u8 = 7;

fn precedence(f: &Formula) -> u8 {
    match f {
        True | False | Atom(_) => PREC_ATOM,
        Not(_) => PREC_NOT,
        And(_) => PREC_AND,
        Or(_) => PREC_OR,
        Xor(..) => PREC_XOR,
        Implies(..) => PREC_IMPLIES,
        Iff(..) => PREC_IFF,
    }
}

fn fmt_prec(f: &Formula, min: u8, out: &mut fmt::Formatter<'_>) -> fmt::Result {
    let p = precedence(f);
    if p < min {
        out.write_str("(")?;
        fmt_prec(f, 0, out)?;
        return out.write_str(")");
    }
    match f {
        True => out.write_str("true"),
        False => out.write_str("false"),
        Atom(v) => write!(out, "{v}"),
        Not(g) => {
            out.write_str("~")?;
            fmt_prec(g, PREC_NOT, out)
        }
        And(cs) => fmt_nary(cs, " & ", PREC_AND + 1, out),
        Or(cs) => fmt_nary(cs, " | ", PREC_OR + 1, out),
        Xor(a, b) => {
            fmt_prec(a, PREC_XOR, out)?;
            out.write_str(" ^ ")?;
            fmt_prec(b, PREC_XOR + 1, out)
        }
        Implies(a, b) => {
            fmt_prec(a, PREC_IMPLIES + 1, out)?;
            out.write_str(" -> ")?;
            fmt_prec(b, PREC_IMPLIES, out)
        }
        Iff(a, b) => {
            fmt_prec(a, PREC_IFF, out)?;
            out.write_str(" <-> ")?;
            fmt_prec(b, PREC_IFF + 1, out)
        }
    }
}

fn fmt_nary(
    cs: &[Formula],
    sep: &str,
    child_min: u8,
    out: &mut fmt::Formatter<'_>,
) -> fmt::Result {
    for (i, c) in cs.iter().enumerate() {
        if i > 0 {
            out.write_str(sep)?;
        }
        fmt_prec(c, child_min, out)?;
    }
    Ok(())
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_prec(self, 0, f)
    }
}

impl FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Formula, ParseError> {
        crate::parse::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> Formula {
        s.parse().unwrap()
    }

    fn lit(s: &str) -> Literal {
        s.parse().unwrap()
    }

    #[test]
    fn literal_ordering_puts_positive_first() {
        let set: LiteralSet = [lit("~a"), lit("b"), lit("a"), lit("~b")]
            .into_iter()
            .collect();
        let rendered: Vec<String> = set.iter().map(|l| l.to_string()).collect();
        assert_eq!(rendered, ["a", "~a", "b", "~b"]);
    }

    #[test]
    fn nnf_pushes_negation_to_atoms() {
        assert_eq!(f("~((~a & b) | c)").nnf(), f("(a | ~b) & ~c"));
        assert_eq!(f("~(a & b)").nnf(), f("~a | ~b"));
        assert_eq!(f("a -> b").nnf(), f("~a | b"));
        assert_eq!(f("~(a -> b)").nnf(), f("a & ~b"));
    }

    #[test]
    fn nnf_expands_equivalence_and_xor() {
        assert_eq!(f("a <-> b").nnf(), f("(~a | b) & (~b | a)"));
        assert_eq!(f("a ^ b").nnf(), f("(a & ~b) | (b & ~a)"));
        assert_eq!(f("~(a ^ b)").nnf(), f("(~a | b) & (~b | a)"));
    }

    #[test]
    fn lits_reads_polarities_off_the_nnf() {
        let lits = f("~((~a & b) | c)").lits();
        assert_eq!(lits, [lit("a"), lit("~b"), lit("~c")].into_iter().collect());

        // Both polarities of both variables appear once equivalence is
        // expanded.
        let lits = f("a <-> b").lits();
        assert_eq!(lits.len(), 4);

        assert_eq!(f("a & (b | ~a)").lits().len(), 3);
    }

    #[test]
    fn size_counts_atom_occurrences() {
        assert_eq!(f("a & (b | ~a)").size(), 3);
        assert_eq!(f("true & false").size(), 0);
        assert_eq!(f("a <-> (a ^ a)").size(), 3);
    }

    #[test]
    fn conditioning_is_sign_aware() {
        let s = f("a & (b | ~a)");
        assert_eq!(s.condition(&lit("a"), true), f("b"));
        assert_eq!(s.condition(&lit("~a"), true), False);
        assert_eq!(s.condition(&lit("~a"), false), f("b"));
        assert_eq!(s.condition_var(&Var::new("b"), false), f("a & ~a"));
    }

    #[test]
    fn conditioning_touches_only_the_variable() {
        let s = f("(a | b) & (c | ~a)");
        assert_eq!(s.condition_var(&Var::new("a"), true), f("c"));
        assert!(!s
            .condition_var(&Var::new("a"), false)
            .vars()
            .contains(&Var::new("a")));
    }

    #[test]
    fn simplify_constants_folds_and_flattens() {
        assert_eq!(f("a & true").simplify_constants(), f("a"));
        assert_eq!(f("a & false").simplify_constants(), False);
        assert_eq!(f("a | true").simplify_constants(), True);
        assert_eq!(f("(a & b) & (c & a)").simplify_constants(), f("a & b & c"));
        assert_eq!(f("a | a").simplify_constants(), f("a"));
        assert_eq!(f("~true").simplify_constants(), False);
        assert_eq!(f("true -> a").simplify_constants(), f("a"));
        assert_eq!(f("a -> false").simplify_constants(), f("~a"));
        assert_eq!(f("a <-> true").simplify_constants(), f("a"));
        assert_eq!(f("a ^ true").simplify_constants(), f("~a"));
        assert_eq!(f("a ^ false").simplify_constants(), f("a"));
        // Complementary literals are deliberately left alone.
        assert_eq!(f("b | ~b").simplify_constants(), f("b | ~b"));
    }

    #[test]
    fn rendering_reparses_to_the_same_tree() {
        for s in [
            "a & (b | c)",
            "a & b | c",
            "~(a & b)",
            "~~a",
            "a -> b -> c",
            "(a -> b) -> c",
            "a <-> b <-> c",
            "a ^ b ^ c",
            "a & (b & c)",
            "true | false",
        ] {
            let parsed = f(s);
            let rendered = parsed.to_string();
            assert_eq!(f(&rendered), parsed, "round-trip through `{rendered}`");
        }
    }

    #[test]
    fn rendering_uses_minimal_parentheses() {
        assert_eq!(f("a & (b | c)").to_string(), "a & (b | c)");
        assert_eq!(f("(a & b) | c").to_string(), "a & b | c");
        assert_eq!(f("a -> (b -> c)").to_string(), "a -> b -> c");
        assert_eq!(f("~(a | b)").to_string(), "~(a | b)");
        assert_eq!(f("~a & b").to_string(), "~a & b");
    }

    #[test]
    fn constructors_normalize_degenerate_arity() {
        assert_eq!(Formula::and(vec![]), True);
        assert_eq!(Formula::or(vec![]), False);
        assert_eq!(Formula::and(vec![f("a")]), f("a"));
        assert_eq!(Formula::or(vec![f("a")]), f("a"));
    }

    #[test]
    fn literal_helpers_cover_both_signs() {
        let vars: VarSet = [Var::new("a"), Var::new("b")].into_iter().collect();
        assert_eq!(literals_over(&vars).len(), 4);
        assert!(positive_literals_over(&vars).iter().all(Literal::is_positive));
        assert!(negative_literals_over(&vars)
            .iter()
            .all(|l| !l.is_positive()));
    }
}
