//! Acceptance suite: ten seeded, deterministic criteria covering the whole
//! library — the bundled worked examples, large randomized agreement runs
//! against the enumeration oracle, the documented negative result about
//! distributing literal forgetting over conjunction, and resource-limit
//! behavior. Each test prints a single verdict line (visible with
//! `--nocapture`); the test outcome itself is the gate.

mod common;

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use common::{pool, random_clause, random_formula, random_horn_clauses, random_krom_clauses};
use propindep::applications::{
    circ_entails, influenceable, relevant_to, strictly_relevant_1995, strictly_relevant_1997,
    CircPartition,
};
use propindep::clauses::{Clause, ClauseSet, Term};
use propindep::error::Error;
use propindep::forgetting::{
    forget_lit, forget_lit_limited, forget_lit_ordered, forget_var, lit_equivalent,
    ForgetStrategy, DEFAULT_MAX_SIZE,
};
use propindep::formula::{literals_over, Formula, Literal, LiteralSet, Var, VarSet};
use propindep::independence::{
    dep_lit, dep_var, fully_lit_dependent, fully_var_dependent, is_lit_simplified,
    is_var_simplified, lit_independent, lit_independent_clauses, lit_simplify,
    var_independent_one, var_simplify,
};
use propindep::parse::{parse, parse_file};
use propindep::primes::{
    lit_independent_primes, prime_implicants, prime_implicates, prime_implicates_limited,
    var_independent_primes, PrimeLimits,
};
use propindep::sat::{self, fragment_entails, FragmentTag};
use propindep::semantics::{self, Oracle};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn fixture(name: &str) -> Formula {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "fixtures", name]
        .iter()
        .collect();
    let text = fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("cannot read fixture {}: {e}", path.display()));
    parse_file(&text).unwrap().conjunction()
}

fn f(s: &str) -> Formula {
    parse(s).unwrap()
}

fn lit(s: &str) -> Literal {
    let (name, positive) = match s.strip_prefix('~') {
        Some(rest) => (rest, false),
        None => (s, true),
    };
    Literal::new(Var::new(name), positive)
}

fn lits(s: &str) -> LiteralSet {
    s.split_whitespace().map(lit).collect()
}

fn vars(s: &str) -> VarSet {
    s.split_whitespace().map(Var::new).collect()
}

fn clause(s: &str) -> Clause {
    Clause::new(s.split_whitespace().map(lit))
}

fn pass(criterion: &str, detail: String) {
    println!("acceptance {criterion}: PASS ({detail})");
}

/// Criterion 1: the sixteen bundled examples reproduce, equivalence-checked
/// by the solver wherever the expected value is a formula.
#[test]
fn criterion_01_worked_examples_reproduce() {
    // ex01: the five prime implicates of the three-line knowledge base.
    let kb = fixture("ex01.frm");
    let expected: ClauseSet = [
        clause("a b"),
        clause("a ~c e"),
        clause("~d e"),
        clause("d ~e"),
        clause("a ~c d"),
    ]
    .into_iter()
    .collect();
    assert_eq!(prime_implicates(&kb).unwrap().clauses().unwrap(), &expected);

    // ex02: the negated conjunction mentions only the negative literals.
    let neg = fixture("ex02.frm");
    assert!(sat::equivalent(&neg.nnf(), &f("~a | ~b")));
    assert_eq!(neg.lits(), lits("~a ~b"));

    // ex03: variable inventory, with c declared but unused.
    let simple = fixture("ex03.frm");
    assert_eq!(simple.vars(), vars("a b"));
    assert!(var_independent_one(&simple, &Var::new("c")));

    // ex04: dependent literals are {a, ~b}; the positive b is removable.
    let ex4 = fixture("ex04.frm");
    assert_eq!(dep_lit(&ex4), lits("a ~b"));
    assert!(lit_independent(&ex4, &lit("b")));
    assert!(sat::equivalent(&ex4, &f("a & ~b")));

    // ex05: dependent variables are {a, b}; c is erasable.
    let ex5 = fixture("ex05.frm");
    assert_eq!(dep_var(&ex5), vars("a b"));
    assert!(var_independent_one(&ex5, &Var::new("c")));

    // ex06: full dependence holds for {a,~b} and {a,b} but not for {a,b}
    // read as literals.
    let ex6 = fixture("ex06.frm");
    assert!(fully_lit_dependent(&ex6, &lits("a ~b")));
    assert!(fully_var_dependent(&ex6, &vars("a b")));
    assert!(!fully_lit_dependent(&ex6, &lits("a b")));

    // ex07: the simplification ladder.
    let rung0 = fixture("ex07.frm");
    let rung1 = f("a & ~b & (b | ~b)");
    let rung2 = f("a & ~b");
    assert!(!is_lit_simplified(&rung0) && !is_var_simplified(&rung0));
    assert!(is_var_simplified(&rung1) && !is_lit_simplified(&rung1));
    assert!(is_lit_simplified(&rung2) && is_var_simplified(&rung2));
    assert!(sat::equivalent(&rung0, &rung1) && sat::equivalent(&rung1, &rung2));
    let vs = var_simplify(&rung0);
    assert!(is_var_simplified(&vs) && sat::equivalent(&vs, &rung0));
    let ls = lit_simplify(&rung0);
    assert!(is_lit_simplified(&ls) && sat::equivalent(&ls, &rung0));

    // ex08: conditioning outcomes drive the two verdicts apart.
    let ex8 = fixture("ex08.frm");
    assert!(sat::equivalent(&ex8.condition(&lit("b"), true), &Formula::False));
    assert!(sat::equivalent(&ex8.condition(&lit("b"), false), &f("a")));
    assert!(lit_independent(&ex8, &lit("b")));
    assert!(!lit_independent(&ex8, &lit("~b")));

    // ex09: both b-conditionings collapse to a.
    let ex9 = fixture("ex09.frm");
    assert!(var_independent_one(&ex9, &Var::new("b")));
    assert!(sat::equivalent(&ex9.condition_var(&Var::new("b"), false), &f("a")));
    assert!(sat::equivalent(&ex9.condition_var(&Var::new("b"), true), &f("a")));

    // ex10: prime forms expose the same structure.
    let ex10 = fixture("ex10.frm");
    let implicants = prime_implicants(&ex10).unwrap();
    let expected_term: Term = Term::new(lits("a ~b"));
    assert_eq!(implicants.terms().unwrap().iter().collect::<Vec<_>>(), vec![&expected_term]);
    let implicates = prime_implicates(&ex10).unwrap();
    let expected_ips: ClauseSet = [clause("a"), clause("~b")].into_iter().collect();
    assert_eq!(implicates.clauses().unwrap(), &expected_ips);
    assert!(lit_independent_primes(&ex10, &lits("b")).unwrap());
    assert!(!lit_independent_primes(&ex10, &lits("~b")).unwrap());
    assert!(var_independent_primes(&ex10, &vars("c")).unwrap());

    // ex11: forgetting the literal ~a.
    let ex11 = fixture("ex11.frm");
    let forgotten = forget_lit(&ex11, &lits("~a"), ForgetStrategy::Auto).unwrap();
    assert!(sat::equivalent(&forgotten, &f("(a | c) & (b | c)")));

    // ex12: forgetting a literal in an inconsistent conjunction stays
    // inconsistent, while the conjunction of the separate forgettings does
    // not.
    let sigma = f("a");
    let phi = f("~a");
    let l = lits("a");
    let fs = forget_lit(&sigma, &l, ForgetStrategy::Auto).unwrap();
    let fp = forget_lit(&phi, &l, ForgetStrategy::Auto).unwrap();
    assert!(sat::equivalent(&fs, &Formula::True));
    assert!(sat::equivalent(&fp, &phi));
    assert!(sat::equivalent(&Formula::and(vec![fs, fp]), &f("~a")));
    let together = forget_lit(&fixture("ex12.frm"), &l, ForgetStrategy::Auto).unwrap();
    assert!(!sat::is_satisfiable(&together));

    // ex13: forgetting the variable a.
    let ex13 = fixture("ex13.frm");
    let forgotten = forget_var(&ex13, &vars("a"), ForgetStrategy::Auto).unwrap();
    assert!(sat::equivalent(&forgotten, &f("b | c")));

    // ex14: the two chains agree on the window {~a, c}.
    let ex14 = fixture("ex14.frm");
    let ex14b = fixture("ex14b.frm");
    assert!(lit_equivalent(&ex14, &ex14b, &lits("~a c")).unwrap());

    // ex15: relevance to a subject matter.
    assert!(relevant_to(&fixture("ex15.frm"), &vars("a b")));

    // ex16: the two strictness readings come apart.
    let ex16 = fixture("ex16.frm");
    assert!(strictly_relevant_1995(&ex16, &vars("a")).unwrap());
    assert!(!strictly_relevant_1997(&ex16, &vars("a")));

    pass("01 worked examples", "16 fixtures reproduced".into());
}

/// Criterion 2: every stated test for literal and variable independence
/// agrees on 1000 random formulas, including the model-closure oracle.
#[test]
fn criterion_02_independence_tests_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x02);
    let oracle = Oracle::new(12);
    let vars = pool(8);
    let mut checked = 0usize;
    for _ in 0..1000 {
        let sigma = random_formula(&mut rng, &vars, 6);
        let l = common::random_literal(&mut rng, &vars);
        let v = vars[rng.gen_range(0..vars.len())].clone();

        let l1 = sigma.condition(&l, true);
        let l0 = sigma.condition(&l, false);
        let t2 = sat::entails(&l1, &l0);
        let t3 = sat::entails(&sigma, &l0);
        let t4 = sat::entails(&l1, &sigma);
        let lib = lit_independent(&sigma, &l);
        let by_models = oracle.lit_independent(&sigma, &l).unwrap();
        assert!(
            t2 == t3 && t3 == t4 && t4 == lib && lib == by_models,
            "literal tests disagree on {sigma} / {l}: {t2} {t3} {t4} {lib} {by_models}"
        );

        let x0 = sigma.condition_var(&v, false);
        let x1 = sigma.condition_var(&v, true);
        let v2 = sat::equivalent(&x0, &x1);
        let v3 = sat::equivalent(&sigma, &x0);
        let v4 = sat::equivalent(&sigma, &x1);
        let both_signs = lit_independent(&sigma, &Literal::new(v.clone(), true))
            && lit_independent(&sigma, &Literal::new(v.clone(), false));
        let lib_v = var_independent_one(&sigma, &v);
        let by_switch = oracle.var_independent(&sigma, &v).unwrap();
        assert!(
            v2 == v3 && v3 == v4 && v4 == both_signs && both_signs == lib_v
                && lib_v == by_switch,
            "variable tests disagree on {sigma} / {v}: {v2} {v3} {v4} {both_signs} {lib_v} {by_switch}"
        );
        checked += 1;
    }
    pass(
        "02 independence agreement",
        format!("{checked} formulas, 0 discrepancies"),
    );
}

/// Criterion 3: the models of the forgotten formula are exactly the
/// oracle's reachable set, on 500 random instances over up to 10 variables.
#[test]
fn criterion_03_forgetting_model_sets_exact() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x03);
    let oracle = Oracle::new(12);
    let vars = pool(10);
    for i in 0..500 {
        let sigma = random_formula(&mut rng, &vars, 5);
        let l = common::random_literal_set(&mut rng, &vars, 4);
        let over: VarSet = sigma
            .vars()
            .into_iter()
            .chain(l.iter().map(|x| x.var().clone()))
            .collect();
        let forgotten = forget_lit(&sigma, &l, ForgetStrategy::Auto).unwrap();
        let got = oracle.models(&forgotten, &over).unwrap();
        let expected = oracle.forget_lit_models(&sigma, &l, &over).unwrap();
        assert_eq!(got, expected, "instance {i}: {sigma} / {l:?}");
    }
    pass("03 forgetting model sets", "500 instances model-exact".into());
}

/// Criterion 4: forgetting preserves exactly the consequences that avoid
/// the forgotten literals — checked exhaustively over every such clause.
#[test]
fn criterion_04_strongest_consequence_exhaustive() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x04);
    let oracle = Oracle::new(12);
    let vars = pool(6);
    let universe: VarSet = vars.iter().cloned().collect();
    let worlds = oracle.worlds(&universe).unwrap();

    // Bitmask of the worlds satisfying each literal, by pool position.
    let mut pos_mask = vec![0u64; vars.len()];
    for (w_idx, w) in worlds.iter().enumerate() {
        for (v_idx, v) in vars.iter().enumerate() {
            if w.value(v).unwrap() {
                pos_mask[v_idx] |= 1 << w_idx;
            }
        }
    }
    let full: u64 = if worlds.len() == 64 {
        u64::MAX
    } else {
        (1 << worlds.len()) - 1
    };

    let model_mask = |g: &Formula| -> u64 {
        let mut m = 0u64;
        for (w_idx, w) in worlds.iter().enumerate() {
            if semantics::eval(g, w).unwrap() {
                m |= 1 << w_idx;
            }
        }
        m
    };

    let mut clauses_checked = 0usize;
    for i in 0..200 {
        let sigma = random_formula(&mut rng, &vars, 4);
        let l = common::random_literal_set(&mut rng, &vars, 3);
        let forgotten = forget_lit(&sigma, &l, ForgetStrategy::Auto).unwrap();
        let sigma_models = model_mask(&sigma);
        let forgotten_models = model_mask(&forgotten);

        // Enumerate every clause that avoids l: per variable, the literal is
        // absent, positive (if allowed), or negative (if allowed).
        let mut stack: Vec<(usize, u64, Clause)> = vec![(0, 0, Clause::empty())];
        while let Some((v_idx, mask, partial)) = stack.pop() {
            if v_idx == vars.len() {
                let entailed_before = (sigma_models & !mask) == 0;
                let entailed_after = (forgotten_models & !mask) == 0;
                assert_eq!(
                    entailed_before, entailed_after,
                    "instance {i}: clause {partial} separates {sigma} from its forgetting"
                );
                clauses_checked += 1;
                continue;
            }
            stack.push((v_idx + 1, mask, partial.clone()));
            let pos = Literal::new(vars[v_idx].clone(), true);
            if !l.contains(&pos) {
                let mut c = partial.clone();
                c.insert(pos);
                stack.push((v_idx + 1, mask | pos_mask[v_idx], c));
            }
            let neg = Literal::new(vars[v_idx].clone(), false);
            if !l.contains(&neg) {
                let mut c = partial.clone();
                c.insert(neg);
                stack.push((v_idx + 1, mask | (full & !pos_mask[v_idx]), c));
            }
        }

        // Spot-check a few clauses through the search-based engine too.
        for _ in 0..3 {
            let len = rng.gen_range(1..=3);
            let delta = random_clause(&mut rng, &vars, len, 3);
            if delta.literals().any(|x| l.contains(x)) {
                continue;
            }
            assert_eq!(
                sat::entails(&sigma, &delta.to_formula()),
                sat::entails(&forgotten, &delta.to_formula()),
                "instance {i}: spot clause {delta}"
            );
        }
    }
    pass(
        "04 strongest consequence",
        format!("200 instances, {clauses_checked} window clauses exhausted"),
    );
}

/// Criterion 5: ordering laws of forgetting — pairwise order invariance,
/// the prime-implicate filter, both-signs reduction, and the split law for
/// variable forgetting — plus the documented failure of the split law's
/// literal analogue on the inconsistent-pair instance.
#[test]
fn criterion_05_ordering_laws_and_negative_case() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x05);
    let vars = pool(8);
    for i in 0..500 {
        let sigma = random_formula(&mut rng, &vars, 4);

        // Sequential elimination is order-independent.
        let l1 = common::random_literal(&mut rng, &vars);
        let l2 = common::random_literal(&mut rng, &vars);
        let ab = forget_lit_ordered(&sigma, &[l1.clone(), l2.clone()], DEFAULT_MAX_SIZE).unwrap();
        let ba = forget_lit_ordered(&sigma, &[l2.clone(), l1.clone()], DEFAULT_MAX_SIZE).unwrap();
        assert!(sat::equivalent(&ab, &ba), "instance {i}: order matters for {l1},{l2}");

        // The prime implicates of the forgetting are the surviving ones.
        // Clause-shaped inputs keep the distribution inside the prime
        // engine small without weakening the law, which is closed under
        // equivalence anyway.
        let nclauses = rng.gen_range(1..=4);
        let cnf: ClauseSet = (0..nclauses)
            .map(|_| {
                let len = rng.gen_range(1..=3);
                random_clause(&mut rng, &vars, len, 3)
            })
            .collect();
        let sigma_cnf = cnf.to_formula();
        let l = common::random_literal_set(&mut rng, &vars, 2);
        let forgotten = forget_lit(&sigma_cnf, &l, ForgetStrategy::Auto).unwrap();
        let filtered: ClauseSet = prime_implicates(&sigma_cnf)
            .unwrap()
            .clauses()
            .unwrap()
            .iter()
            .filter(|c| c.literals().all(|x| !l.contains(x)))
            .cloned()
            .collect();
        assert_eq!(
            prime_implicates(&forgotten).unwrap().clauses().unwrap(),
            &filtered,
            "instance {i}: prime filter on {sigma_cnf} minus {l:?}"
        );

        // Forgetting a variable set is forgetting both signs of each.
        let v = common::random_var_set(&mut rng, &vars, 3);
        let by_vars = forget_var(&sigma, &v, ForgetStrategy::Auto).unwrap();
        let by_lits = forget_lit(&sigma, &literals_over(&v), ForgetStrategy::Auto).unwrap();
        assert!(sat::equivalent(&by_vars, &by_lits), "instance {i}: both signs");

        // Split law: an untouched conjunct passes through variable
        // forgetting.
        let v2 = common::random_var_set(&mut rng, &vars, 3);
        let outside: Vec<Var> = vars.iter().filter(|x| !v2.contains(x)).cloned().collect();
        let passenger = if outside.is_empty() {
            Formula::True
        } else {
            random_formula(&mut rng, &outside, 3)
        };
        let cargo = random_formula(&mut rng, &vars, 3);
        let together = forget_var(
            &Formula::and(vec![passenger.clone(), cargo.clone()]),
            &v2,
            ForgetStrategy::Auto,
        )
        .unwrap();
        let split = Formula::and(vec![
            passenger.clone(),
            forget_var(&cargo, &v2, ForgetStrategy::Auto).unwrap(),
        ]);
        assert!(sat::equivalent(&together, &split), "instance {i}: split law");
    }

    // Negative case: the split law is false for literal forgetting, even
    // with the passenger independent of the forgotten literal. Here ~a is
    // independent of {a}, yet forgetting a in (~a & a) gives false while
    // ~a & forget(a, {a}) gives ~a.
    let l = lits("a");
    assert!(lit_independent(&f("~a"), &lit("a")));
    let together = forget_lit(&f("~a & a"), &l, ForgetStrategy::Auto).unwrap();
    let split = Formula::and(vec![
        f("~a"),
        forget_lit(&f("a"), &l, ForgetStrategy::Auto).unwrap(),
    ]);
    assert!(
        !sat::equivalent(&together, &split),
        "the literal split law unexpectedly held on the inconsistent pair"
    );

    pass(
        "05 ordering laws",
        "500 instances × 4 laws, literal split law refuted".into(),
    );
}

/// Criterion 6: minimal-model entailment agrees with the enumeration
/// oracle on 500 random instances, exercising both computation branches.
#[test]
fn criterion_06_minimal_model_entailment() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x06);
    let oracle = Oracle::new(12);
    let vars = pool(8);
    let mut direct = 0usize;
    let mut nested = 0usize;
    for i in 0..500 {
        let sigma = random_formula(&mut rng, &vars, 4);
        let mut parts = [VarSet::new(), VarSet::new(), VarSet::new()];
        for v in &vars {
            parts[rng.gen_range(0..3)].insert(v.clone());
        }
        let [p, q, z] = parts;
        let part = CircPartition::new(p, q, z).unwrap();

        // Alternate queries confined to the non-varying variables (direct
        // branch) with unrestricted ones (nested branch).
        let phi = if i % 2 == 0 {
            let allowed: Vec<Var> = vars
                .iter()
                .filter(|v| !part.varying().contains(*v))
                .cloned()
                .collect();
            if allowed.is_empty() {
                Formula::True
            } else {
                random_formula(&mut rng, &allowed, 3)
            }
        } else {
            random_formula(&mut rng, &vars, 3)
        };
        if phi.vars().is_disjoint(part.varying()) {
            direct += 1;
        } else {
            nested += 1;
        }

        let minimal = oracle.circ_models(&sigma, &part).unwrap();
        let expected = minimal.iter().all(|w| semantics::eval(&phi, w).unwrap());
        let got = circ_entails(&sigma, &part, &phi).unwrap();
        assert_eq!(
            got, expected,
            "instance {i}: {sigma} under min={:?} fixed={:?} varying={:?} query {phi}",
            part.minimized(),
            part.fixed(),
            part.varying()
        );
    }
    assert!(direct >= 100 && nested >= 100, "both branches must be exercised");
    pass(
        "06 minimal-model entailment",
        format!("500 instances, {direct} direct / {nested} nested"),
    );
}

/// Criterion 7: relevance by definition-level enumeration, by prime
/// implicates, and by conditioning give the same verdict on 500 random
/// instances; the strict notion matches its prime reading.
#[test]
fn criterion_07_relevance_three_ways() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x07);
    let oracle = Oracle::new(12);
    let vars = pool(8);
    for i in 0..500 {
        let sigma = random_formula(&mut rng, &vars, 4);
        let v = common::random_var_set(&mut rng, &vars, 3);

        // Definition-level enumeration: some scenario over the other
        // variables where the v-variables can tip the verdict.
        let universe: VarSet = sigma.vars().union(&v).cloned().collect();
        let mut groups: BTreeMap<Vec<(Var, bool)>, (bool, bool)> = BTreeMap::new();
        for w in oracle.worlds(&universe).unwrap() {
            let key: Vec<(Var, bool)> = w
                .iter()
                .filter(|(var, _)| !v.contains(var))
                .map(|(var, value)| (var.clone(), value))
                .collect();
            let entry = groups.entry(key).or_insert((false, false));
            if semantics::eval(&sigma, &w).unwrap() {
                entry.0 = true;
            } else {
                entry.1 = true;
            }
        }
        let by_enumeration = groups.values().any(|&(t, f)| t && f);

        let by_primes = !var_independent_primes(&sigma, &v).unwrap();
        let by_conditioning = relevant_to(&sigma, &v);
        assert!(
            by_enumeration == by_primes && by_primes == by_conditioning,
            "instance {i}: {sigma} / {v:?}: {by_enumeration} {by_primes} {by_conditioning}"
        );
        assert_eq!(influenceable(&sigma, &v), by_conditioning);

        // Strict relevance, prime reading: some implicate mentions v, and
        // none strays outside it.
        let ips = prime_implicates(&sigma).unwrap();
        let clauses = ips.clauses().unwrap();
        let strict_by_primes = !clauses.is_empty()
            && clauses.iter().any(|c| c.vars().iter().any(|x| v.contains(x)))
            && clauses.iter().all(|c| c.vars().is_subset(&v));
        assert_eq!(
            strictly_relevant_1997(&sigma, &v),
            strict_by_primes,
            "instance {i}: strict reading"
        );
    }
    pass("07 relevance agreement", "500 instances, three ways".into());
}

/// Criterion 8: the fragment fast paths match the general engine on 1000
/// random instances, and a 200-variable, 1000-clause dependence query on a
/// Horn set answers in under a second.
#[test]
fn criterion_08_fragment_fast_paths() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x08);
    let vars = pool(8);
    for i in 0..1000 {
        let (clauses, tag) = match i % 3 {
            0 => {
                let n = rng.gen_range(1..10);
                (random_horn_clauses(&mut rng, &vars, n, 3), FragmentTag::Horn)
            }
            1 => {
                let n = rng.gen_range(1..10);
                (random_krom_clauses(&mut rng, &vars, n), FragmentTag::Krom)
            }
            _ => {
                let n = rng.gen_range(1..10);
                let horn = random_horn_clauses(&mut rng, &vars, n, 3);
                let flip: VarSet = vars.iter().filter(|_| rng.gen_bool(0.5)).cloned().collect();
                (horn.rename(&flip), FragmentTag::RenamableHorn)
            }
        };
        let general = clauses.to_formula();

        let qlen = rng.gen_range(1..=2);
        let query = random_clause(&mut rng, &vars, qlen, 2);
        assert_eq!(
            fragment_entails(&clauses, tag, &query).unwrap(),
            sat::entails(&general, &query.to_formula()),
            "instance {i}: entailment via {tag}"
        );

        let l = common::random_literal(&mut rng, &vars);
        assert_eq!(
            lit_independent_clauses(&clauses, tag, &l).unwrap(),
            lit_independent(&general, &l),
            "instance {i}: dependence via {tag}"
        );
    }

    // Polynomial-path sanity: a large Horn dependence query finishes fast.
    let big_vars: Vec<Var> = (0..200).map(|k| Var::new(format!("v{k:03}"))).collect();
    let big = random_horn_clauses(&mut rng, &big_vars, 1000, 3);
    assert!(big.is_horn());
    let probe = Literal::new(big_vars[17].clone(), false);
    let started = Instant::now();
    let _ = lit_independent_clauses(&big, FragmentTag::Horn, &probe).unwrap();
    let elapsed = started.elapsed();
    assert!(
        elapsed.as_millis() < 1000,
        "large Horn dependence query took {elapsed:?}"
    );

    pass(
        "08 fragment fast paths",
        format!("1000 instances; 200-var/1000-clause query in {elapsed:?}"),
    );
}

/// Criterion 9: on 500 random formulas both simplifiers return equivalent
/// (oracle-checked), simplified, never-larger, idempotent results. The
/// variable pipeline never grows past the input itself; the literal
/// pipeline works on the negation normal form internally (where the
/// two-sided connectives duplicate their operands), so its bound is the
/// size of that form, and its output mentions exactly the literals the
/// input depends on.
#[test]
fn criterion_09_simplifiers_contract() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x09);
    let oracle = Oracle::new(12);
    let vars = pool(8);
    for i in 0..500 {
        let sigma = random_formula(&mut rng, &vars, 5);

        let lout = lit_simplify(&sigma);
        assert!(oracle.equivalent(&sigma, &lout).unwrap(), "instance {i}: lit equiv");
        assert!(is_lit_simplified(&lout), "instance {i}: lit simplified");
        assert_eq!(lout.lits(), dep_lit(&sigma), "instance {i}: literal inventory");
        let bound = sigma.nnf().size().max(sigma.size());
        assert!(
            lout.size() <= bound,
            "instance {i}: literal simplification grew {} -> {} on {sigma}",
            bound,
            lout.size()
        );
        assert_eq!(lit_simplify(&lout), lout, "instance {i}: lit idempotent");

        let vout = var_simplify(&sigma);
        assert!(oracle.equivalent(&sigma, &vout).unwrap(), "instance {i}: var equiv");
        assert!(is_var_simplified(&vout), "instance {i}: var simplified");
        assert!(
            vout.size() <= sigma.size(),
            "instance {i}: variable simplification grew on {sigma}"
        );
        assert_eq!(var_simplify(&vout), vout, "instance {i}: var idempotent");
    }
    pass(
        "09 simplifiers",
        "500 formulas: equivalent, simplified, bounded, idempotent".into(),
    );
}

/// Criterion 10: resource limits are explicit errors, never silent
/// truncation — and the documented negative result of criterion 5 stands in
/// for the hardness claims that cannot be tested empirically.
#[test]
fn criterion_10_resource_limits_are_loud() {
    // Forgetting with a tiny output budget refuses rather than truncates.
    let sigma = f("(a | b) & (c | d) & (e | g)");
    let err = forget_lit_limited(&sigma, &lits("a"), ForgetStrategy::Definitional, 4)
        .expect_err("a four-atom budget cannot hold this result");
    assert!(matches!(err, Error::SizeLimit { limit: 4, .. }), "got {err:?}");

    // The prime-implicate engine enforces its working-set cap the same way.
    let limits = PrimeLimits {
        max_clauses: 2,
        max_cnf_literals: 1 << 20,
    };
    let err = prime_implicates_limited(&fixture("ex01.frm"), limits)
        .expect_err("a two-clause cap cannot hold five implicates");
    assert!(matches!(err, Error::SizeLimit { limit: 2, .. }), "got {err:?}");

    // The enumeration oracle never exceeds its declared cap silently.
    let tiny = Oracle::new(3);
    let wide = f("(a | b) & (c | d) & (e | g)");
    let err = tiny.is_satisfiable(&wide).expect_err("six variables exceed a cap of three");
    assert!(matches!(err, Error::CapExceeded { vars: 6, cap: 3 }), "got {err:?}");

    // Within budget, the same calls succeed.
    assert!(forget_lit_limited(&sigma, &lits("a"), ForgetStrategy::Definitional, 64).is_ok());
    assert!(prime_implicates(&fixture("ex01.frm")).is_ok());

    pass(
        "10 resource limits",
        "size, clause-cap and enumeration-cap errors all explicit".into(),
    );
}
