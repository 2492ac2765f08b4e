//! Shared generators for the property and acceptance suites: random
//! formulas, literals and clause sets over a small fixed variable pool.

#![allow(dead_code)]

use propindep::clauses::{Clause, ClauseSet};
use propindep::{Formula, Literal, LiteralSet, Var, VarSet};
use proptest::prelude::*;
use rand::Rng;

const NAMES: [&str; 12] = [
    "a", "b", "c", "d", "e", "f", "g", "h", "p", "q", "r", "s",
];

pub fn pool(n: usize) -> Vec<Var> {
    assert!(n <= NAMES.len());
    NAMES[..n].iter().map(|name| Var::new(*name)).collect()
}

pub fn formulas(nvars: usize, depth: u32) -> BoxedStrategy<Formula> {
    formulas_over(pool(nvars), depth)
}

/// Like [`formulas`], but over an explicit variable slice (e.g. a disjoint
/// part of the pool).
pub fn formulas_over(vars: Vec<Var>, depth: u32) -> BoxedStrategy<Formula> {
    let nvars = vars.len();
    let leaf = prop_oneof![
        8 => (0..nvars).prop_map(move |i| Formula::atom(vars[i].clone())),
        1 => Just(Formula::True),
        1 => Just(Formula::False),
    ];
    leaf.prop_recursive(depth, 48, 3, |inner| {
        prop_oneof![
            2 => inner.clone().prop_map(Formula::not),
            3 => prop::collection::vec(inner.clone(), 2..4).prop_map(Formula::and),
            3 => prop::collection::vec(inner.clone(), 2..4).prop_map(Formula::or),
            1 => (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::implies(a, b)),
            1 => (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::iff(a, b)),
            1 => (inner.clone(), inner).prop_map(|(a, b)| Formula::xor(a, b)),
        ]
    })
    .boxed()
}

pub fn literals(nvars: usize) -> BoxedStrategy<Literal> {
    let vars = pool(nvars);
    (0..nvars, proptest::bool::ANY)
        .prop_map(move |(i, positive)| Literal::new(vars[i].clone(), positive))
        .boxed()
}

pub fn literal_sets(nvars: usize, max: usize) -> BoxedStrategy<LiteralSet> {
    prop::collection::btree_set(literals(nvars), 0..=max).boxed()
}

pub fn variables(nvars: usize) -> BoxedStrategy<Var> {
    let vars = pool(nvars);
    (0..nvars).prop_map(move |i| vars[i].clone()).boxed()
}

pub fn var_sets(nvars: usize, max: usize) -> BoxedStrategy<VarSet> {
    prop::collection::btree_set(variables(nvars), 0..=max).boxed()
}

/// Plain-RNG formula generator for the seeded acceptance runs.
pub fn random_formula<R: Rng>(rng: &mut R, vars: &[Var], depth: usize) -> Formula {
    if depth == 0 || rng.gen_range(0..5) == 0 {
        return match rng.gen_range(0..10) {
            0 => Formula::True,
            1 => Formula::False,
            _ => Formula::atom(vars[rng.gen_range(0..vars.len())].clone()),
        };
    }
    match rng.gen_range(0..10) {
        0 | 1 => Formula::not(random_formula(rng, vars, depth - 1)),
        2 | 3 | 4 => {
            let n = rng.gen_range(2..4);
            Formula::and((0..n).map(|_| random_formula(rng, vars, depth - 1)).collect())
        }
        5 | 6 | 7 => {
            let n = rng.gen_range(2..4);
            Formula::or((0..n).map(|_| random_formula(rng, vars, depth - 1)).collect())
        }
        8 => Formula::implies(
            random_formula(rng, vars, depth - 1),
            random_formula(rng, vars, depth - 1),
        ),
        _ => {
            if rng.gen_bool(0.5) {
                Formula::iff(
                    random_formula(rng, vars, depth - 1),
                    random_formula(rng, vars, depth - 1),
                )
            } else {
                Formula::xor(
                    random_formula(rng, vars, depth - 1),
                    random_formula(rng, vars, depth - 1),
                )
            }
        }
    }
}

pub fn random_literal<R: Rng>(rng: &mut R, vars: &[Var]) -> Literal {
    Literal::new(vars[rng.gen_range(0..vars.len())].clone(), rng.gen_bool(0.5))
}

pub fn random_literal_set<R: Rng>(rng: &mut R, vars: &[Var], max: usize) -> LiteralSet {
    let n = rng.gen_range(0..=max);
    (0..n).map(|_| random_literal(rng, vars)).collect()
}

pub fn random_var_set<R: Rng>(rng: &mut R, vars: &[Var], max: usize) -> VarSet {
    let n = rng.gen_range(0..=max);
    (0..n)
        .map(|_| vars[rng.gen_range(0..vars.len())].clone())
        .collect()
}

/// A random clause over `vars` with `len` distinct-ish literals and at most
/// `max_positive` positive ones.
pub fn random_clause<R: Rng>(
    rng: &mut R,
    vars: &[Var],
    len: usize,
    max_positive: usize,
) -> Clause {
    let mut lits = LiteralSet::new();
    let mut positive = 0;
    for _ in 0..len {
        let v = vars[rng.gen_range(0..vars.len())].clone();
        let pos = positive < max_positive && rng.gen_bool(0.4);
        if pos {
            positive += 1;
        }
        lits.insert(Literal::new(v, pos));
    }
    Clause::new(lits)
}

pub fn random_horn_clauses<R: Rng>(
    rng: &mut R,
    vars: &[Var],
    nclauses: usize,
    clause_len: usize,
) -> ClauseSet {
    (0..nclauses)
        .map(|_| {
            let len = rng.gen_range(1..=clause_len);
            random_clause(rng, vars, len, 1)
        })
        .collect()
}

pub fn random_krom_clauses<R: Rng>(rng: &mut R, vars: &[Var], nclauses: usize) -> ClauseSet {
    (0..nclauses)
        .map(|_| {
            let len = rng.gen_range(1..=2);
            random_clause(rng, vars, len, 2)
        })
        .collect()
}
