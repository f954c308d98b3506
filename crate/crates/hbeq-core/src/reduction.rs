//! Compilation of `<H,B>`-equivalence into ordinary equivalence.
//!
//! A guess program over fresh atoms nondeterministically selects a unary
//! context: for every `a ∈ H` and `b ∈ B ∪ {f}` (with `f` a fresh always-
//! true atom standing for "no body", i.e. a fact), a selector pair
//! `c__a__b | nc__a__b.` toggles the rule `a :- b, c__a__b.` Adding the
//! same guess program to both inputs turns the `<H,B>`-equivalence question
//! into `AS(P ∪ R) = AS(Q ∪ R)` for ordinary equivalence checkers.

use alloc::string::String;
use alloc::vec::Vec;

use crate::sets::AtomSet;
use crate::symbols::{SymbolError, Symbols};
use crate::syntax::{AlphabetPair, Program, Rule};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ReductionMode {
    /// Selector pairs as disjunctive facts `c | nc.`; preserves positivity.
    Disjunctive,
    /// Selector pairs as `c :- not nc.` and `nc :- not c.`; preserves
    /// normality.
    Normal,
}

impl ReductionMode {
    pub fn as_str(self) -> &'static str {
        match self {
            ReductionMode::Disjunctive => "disjunctive",
            ReductionMode::Normal => "normal",
        }
    }
}

/// The guess program plus the fresh atoms it introduced.
#[derive(Clone, Debug)]
pub struct GuessProgram {
    pub program: Program,
    pub fresh: AtomSet,
}

/// Both compiled programs of a reduction; they share the guess part.
#[derive(Clone, Debug)]
pub struct ReductionOutput {
    pub left: Program,
    pub right: Program,
    pub fresh: AtomSet,
    pub mode: ReductionMode,
}

fn selector_base(symbols: &Symbols, prefix: &str, a: crate::symbols::Atom, b_name: &str) -> String {
    let mut name = String::from(prefix);
    name.push_str("__");
    name.push_str(symbols.name(a));
    name.push_str("__");
    name.push_str(b_name);
    name
}

/// Build the guess program for `(H, B)`: the fact `f`, and for every
/// `a ∈ H`, `b ∈ B ∪ {f}` a selector disjunction `c | nc.` plus the guarded
/// rule `a :- b, c.` Fresh atom names start from `f__ctx`, `c__<a>__<b>`
/// and `nc__<a>__<b>`, with underscores appended on collision with existing
/// atoms.
pub fn build_guess_program(
    ab: AlphabetPair,
    symbols: &mut Symbols,
) -> Result<GuessProgram, SymbolError> {
    let mut fresh = AtomSet::EMPTY;
    let f = symbols.intern_fresh("f__ctx")?;
    fresh.insert(f);
    let mut rules = Vec::new();
    rules.push(Rule::fact(f));
    for a in ab.heads.iter() {
        // Real body atoms first, then the pseudo-body f standing for facts.
        let bodies: Vec<crate::symbols::Atom> =
            ab.bodies.iter().chain(core::iter::once(f)).collect();
        for b in bodies {
            let b_name = String::from(symbols.name(b));
            let on = symbols.intern_fresh(&selector_base(symbols, "c", a, &b_name))?;
            let off = symbols.intern_fresh(&selector_base(symbols, "nc", a, &b_name))?;
            fresh.insert(on);
            fresh.insert(off);
            rules.push(
                Rule::new(
                    AtomSet::from_atoms([on, off]),
                    AtomSet::EMPTY,
                    AtomSet::EMPTY,
                )
                .expect("selector head is nonempty"),
            );
            rules.push(
                Rule::new(
                    AtomSet::singleton(a),
                    AtomSet::from_atoms([b, on]),
                    AtomSet::EMPTY,
                )
                .expect("guarded rule is nonempty"),
            );
        }
    }
    let universe = ab.union() | fresh;
    let program = Program::new(rules, universe).expect("guess rules stay inside their universe");
    Ok(GuessProgram { program, fresh })
}

/// Replace every disjunctive selector fact `c | nc.` by the two normal
/// rules `c :- not nc.` and `nc :- not c.` All other rules pass through.
pub fn normalize_guess(guess: &Program) -> Program {
    let mut rules = Vec::new();
    for r in guess.rules() {
        if r.head().len() == 2 && r.pos_body().is_empty() && r.neg_body().is_empty() {
            let mut atoms = r.head().iter();
            let first = atoms.next().expect("two head atoms");
            let second = atoms.next().expect("two head atoms");
            for (on, off) in [(first, second), (second, first)] {
                rules.push(
                    Rule::new(
                        AtomSet::singleton(on),
                        AtomSet::EMPTY,
                        AtomSet::singleton(off),
                    )
                    .expect("normalized selector is nonempty"),
                );
            }
        } else {
            rules.push(*r);
        }
    }
    Program::new(rules, guess.universe()).expect("normalization keeps the universe")
}

/// Compile the `<H,B>`-equivalence problem between `p` and `q` into an
/// ordinary-equivalence problem: the outputs are `p` and `q` each extended
/// by the same guess program, over the merged universe. The alphabets are
/// intersected with the universe of `p` and `q` first, mirroring what the
/// decision procedures do.
pub fn reduce_to_ordinary(
    p: &Program,
    q: &Program,
    ab: AlphabetPair,
    symbols: &mut Symbols,
    mode: ReductionMode,
) -> Result<ReductionOutput, SymbolError> {
    let base = p.universe() | q.universe();
    let guess = build_guess_program(ab.restrict(base), symbols)?;
    let guess_part = match mode {
        ReductionMode::Disjunctive => guess.program,
        ReductionMode::Normal => normalize_guess(&guess.program),
    };
    let universe = base | guess_part.universe();
    let left = p
        .with_universe(universe)
        .expect("merged universe covers p")
        .union(&guess_part);
    let right = q
        .with_universe(universe)
        .expect("merged universe covers q")
        .union(&guess_part);
    Ok(ReductionOutput {
        left,
        right,
        fresh: guess.fresh,
        mode,
    })
}
