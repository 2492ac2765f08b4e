//! Properties of the formula core: normal forms, conditioning, printing,
//! and the world-level operations backing them.

mod common;

use common::{formulas, literals, pool};
use propindep::semantics::{eval, formula_from_models};
use propindep::{Formula, Oracle, VarSet};
use proptest::prelude::*;

fn oracle() -> Oracle {
    Oracle::default()
}

fn contains_equivalence(f: &Formula) -> bool {
    match f {
        Formula::True | Formula::False | Formula::Atom(_) => false,
        Formula::Not(g) => contains_equivalence(g),
        Formula::And(cs) | Formula::Or(cs) => cs.iter().any(contains_equivalence),
        Formula::Implies(a, b) => contains_equivalence(a) || contains_equivalence(b),
        Formula::Iff(_, _) | Formula::Xor(_, _) => true,
    }
}

fn contains_constant(f: &Formula) -> bool {
    match f {
        Formula::True | Formula::False => true,
        Formula::Atom(_) => false,
        Formula::Not(g) => contains_constant(g),
        Formula::And(cs) | Formula::Or(cs) => cs.iter().any(contains_constant),
        Formula::Implies(a, b) | Formula::Iff(a, b) | Formula::Xor(a, b) => {
            contains_constant(a) || contains_constant(b)
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn nnf_is_equivalent_and_negation_normal(f in formulas(6, 5)) {
        let n = f.nnf();
        prop_assert!(n.is_nnf());
        prop_assert!(oracle().equivalent(&f, &n).unwrap());
    }

    #[test]
    fn equivalence_expansion_is_equivalent_and_complete(f in formulas(6, 5)) {
        let e = f.expand_equivalences();
        prop_assert!(!contains_equivalence(&e));
        prop_assert!(oracle().equivalent(&f, &e).unwrap());
    }

    #[test]
    fn shannon_expansion_reconstructs_the_formula(
        f in formulas(6, 5),
        l in literals(6),
    ) {
        let expansion = Formula::or(vec![
            Formula::and(vec![Formula::lit(&l), f.condition(&l, true)]),
            Formula::and(vec![Formula::lit(&l.negated()), f.condition(&l, false)]),
        ]);
        prop_assert!(oracle().equivalent(&f, &expansion).unwrap());
    }

    #[test]
    fn printing_then_parsing_is_structural_identity(f in formulas(6, 5)) {
        let text = f.to_string();
        let back: Formula = text.parse().unwrap();
        prop_assert_eq!(back, f, "printed as {}", text);
    }

    #[test]
    fn conditioning_removes_the_variable(
        f in formulas(6, 5),
        l in literals(6),
        value in proptest::bool::ANY,
    ) {
        let conditioned = f.condition(&l, value);
        prop_assert!(!conditioned.vars().contains(l.var()));
        prop_assert!(conditioned.vars().is_subset(&f.vars()));
    }

    #[test]
    fn constant_simplification_is_equivalent_and_thorough(f in formulas(6, 5)) {
        let s = f.simplify_constants();
        prop_assert!(oracle().equivalent(&f, &s).unwrap());
        if s != Formula::True && s != Formula::False {
            prop_assert!(!contains_constant(&s), "{} still has constants", s);
        }
        prop_assert!(s.vars().is_subset(&f.vars()));
    }

    #[test]
    fn literal_inventory_covers_the_variables(f in formulas(6, 5)) {
        let lit_vars: VarSet = f.lits().iter().map(|l| l.var().clone()).collect();
        // NNF may drop variables (constant collapse) but never invents them.
        prop_assert!(lit_vars.is_subset(&f.vars()));
    }

    #[test]
    fn models_round_trip_through_a_full_dnf(f in formulas(5, 4)) {
        let over = f.vars();
        let models = oracle().models(&f, &over).unwrap();
        let rebuilt = formula_from_models(&models, &over);
        prop_assert_eq!(oracle().models(&rebuilt, &over).unwrap(), models);
    }

    #[test]
    fn forcing_satisfies_and_switching_involutes(
        f in formulas(5, 4),
        l in literals(5),
        v_idx in 0usize..5,
    ) {
        let mut over = f.vars();
        over.insert(l.var().clone());
        let v = pool(5)[v_idx].clone();
        over.insert(v.clone());
        for w in oracle().worlds(&over).unwrap() {
            let forced = w.force_lit(&l).unwrap();
            prop_assert!(forced.satisfies(&l).unwrap());
            prop_assert_eq!(forced.force_lit(&l).unwrap(), forced.clone());
            if w.satisfies(&l).unwrap() {
                prop_assert_eq!(forced, w.clone());
            }
            prop_assert_eq!(w.switch(&v).unwrap().switch(&v).unwrap(), w.clone());
            let _ = eval(&f, &w).unwrap();
        }
    }
}
