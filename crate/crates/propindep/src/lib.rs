//! Syntax-independent analysis of what a propositional formula is about.
//!
//! A formula can mention a variable without saying anything about it:
//! `a & (b | ~b)` contains `b` but carries no information on it, and
//! `a & ~b & (a | b)` constrains `b` only downward — nothing in it ever
//! pushes `b` toward true. This crate makes those distinctions precise and
//! computable, at the level of *literals* (signed influence) and
//! *variables* (any influence), and builds the standard reasoning services
//! on top of them:
//!
//! - [`independence`]: dependence tests, dependent literal/variable sets,
//!   and simplifiers that strip vacuous vocabulary.
//! - [`forgetting`]: the strongest consequence of a formula that is
//!   independent of chosen literals or variables, under several
//!   interchangeable strategies, plus equivalence relative to a window of
//!   observable literals.
//! - [`primes`]: prime implicates and implicants, which read dependence
//!   and forgetting off directly.
//! - [`applications`]: minimal-model (circumscriptive) entailment,
//!   relevance notions, dependency-conservative consequence, and
//!   forget-and-expand belief update.
//! - [`sat`]: a small complete solver with Horn/Krom/renamable-Horn fast
//!   paths, and [`clauses`] for CNF/DNF conversion and DIMACS exchange.
//! - [`semantics`]: a brute-force model-enumeration oracle every symbolic
//!   operation can be checked against on small inputs.
//!
//! Formulas are built with [`Formula`] constructors or parsed from text:
//!
//! ```
//! use propindep::{parse, independence};
//!
//! let sigma = parse("a & ~b & (a | b)").unwrap();
//! let deps = independence::dep_lit(&sigma);
//! assert_eq!(
//!     deps.iter().map(|l| l.to_string()).collect::<Vec<_>>(),
//!     ["a", "~b"]
//! );
//! // The formula mentions b positively, but depends only on ~b.
//! ```

pub mod applications;
pub mod clauses;
pub mod error;
pub mod forgetting;
pub mod formula;
pub mod independence;
pub mod parse;
pub mod primes;
pub mod sat;
pub mod semantics;

pub use crate::applications::CircPartition;
pub use crate::clauses::{Clause, ClauseSet, Term, TermSet};
pub use crate::error::{Error, ParseError, Result};
pub use crate::formula::{Formula, Literal, LiteralSet, Var, VarSet};
pub use crate::forgetting::ForgetStrategy;
pub use crate::parse::{parse, parse_file, parse_with_alphabet, FormulaFile};
pub use crate::primes::{PrimeLimits, PrimeSet};
pub use crate::sat::FragmentTag;
pub use crate::semantics::{Oracle, World, WorldSet};
