//! Equivalence of propositional disjunctive logic programs under the
//! answer-set semantics, parameterized by the atoms a context program may
//! use in rule heads (`H`) and rule bodies (`B`).
//!
//! Two programs `P` and `Q` are `<H,B>`-equivalent when `P ∪ R` and `Q ∪ R`
//! have the same answer sets for every context program `R` whose rule heads
//! draw only on `H` and whose rule bodies draw only on `B`. Strong
//! equivalence (`H = B = U`), uniform equivalence (`H = U`, `B = ∅`),
//! ordinary equivalence (`H = ∅`) and the relativized variants are all
//! corners of this lattice.
//!
//! The crate provides:
//!
//! * [`syntax`]: interned atoms, rules, programs, parsing and printing;
//! * [`semantics`]: classical satisfaction, reducts, model and answer-set
//!   enumeration (the trusted brute-force baseline);
//! * [`characterization`]: `<H,B>`-models and the SE/UE/relativized model
//!   families they generalize;
//! * [`decision`]: witnesses, counterexample synthesis, equivalence and
//!   containment verdicts, and an exhaustive unary-context oracle;
//! * [`reduction`]: compilation of an `<H,B>`-equivalence problem into an
//!   ordinary-equivalence problem.
//!
//! Everything operates on a fixed finite universe of interned atoms
//! represented as bitsets, so the crate is `no_std` (with `alloc`). All
//! enumeration is exhaustive; the intended scale is small
//! programs used as ground truth for other tooling.
//!
//! # Example
//!
//! ```
//! use hbeq_core::{decide_equivalence, parse_program, AlphabetPair, Symbols};
//!
//! # fn main() -> Result<(), Box<dyn core::error::Error>> {
//! let mut symbols = Symbols::new();
//! let p = parse_program("a | b.\na :- b.", &mut symbols)?;
//! let q = parse_program("a :- not b.\nb :- not a.\na :- b.", &mut symbols)?;
//! let universe = symbols.universe();
//! let p = p.with_universe(universe)?;
//! let q = q.with_universe(universe)?;
//!
//! // Uniformly equivalent, but not strongly equivalent.
//! let uniform = decide_equivalence(&p, &q, AlphabetPair::uniform(universe), universe)?;
//! assert!(uniform.equivalent);
//! let strong = decide_equivalence(&p, &q, AlphabetPair::strong(universe), universe)?;
//! assert!(!strong.equivalent);
//!
//! // Failure comes with a unary context program telling the two apart.
//! let context = strong.counterexample.unwrap().context;
//! assert!(context.is_unary());
//! # Ok(())
//! # }
//! ```

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod characterization;
pub mod decision;
pub mod parser;
pub mod reduction;
pub mod semantics;
pub mod sets;
pub mod symbols;
pub mod syntax;

pub use characterization::{
    answer_sets_via_characterization, hb_models, is_h_total, is_preceq_maximal, prec_strict,
    preceq, rel_se_models, rel_ue_models, se_models, ue_models, Characterization, ModelPair,
};
pub use decision::{
    decide_containment, decide_equivalence, decide_equivalence_positive,
    equivalence_lattice_report, find_witness, is_witness, oracle_equivalence,
    witness_to_counterexample, ContainmentDirection, Counterexample, CounterexampleSide,
    DecisionError, LatticeReport, Method, Verdict, Witness, DEFAULT_ORACLE_BUDGET,
};
pub use parser::{parse_program, ParseError};
pub use reduction::{
    build_guess_program, normalize_guess, reduce_to_ordinary, GuessProgram, ReductionMode,
    ReductionOutput,
};
pub use semantics::{
    answer_sets, is_answer_set, models, ordinary_equivalent, reduct, satisfies, satisfies_program,
    satisfies_reduct, simplify_context, AnswerSetFamily,
};
pub use sets::AtomSet;
pub use symbols::{Atom, SymbolError, Symbols};
pub use syntax::{
    render_program, render_rule, AlphabetPair, Program, ProgramError, Rule, RuleClass, RuleError,
    SymbolSets,
};
