//! Rules, programs, alphabet pairs and syntactic classification.
//!
//! A rule `a1 | ... | al :- b1, ..., bm, not c1, ..., not ck` is a triple of
//! atom sets (head, positive body, negative body) with at least one atom in
//! total. A program is a finite set of rules together with the universe it
//! is evaluated over; the universe may be larger than the atoms actually
//! occurring in the rules.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::sets::AtomSet;
use crate::symbols::{Atom, Symbols};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RuleError {
    /// Head and both bodies are all empty.
    Empty,
}

impl fmt::Display for RuleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleError::Empty => write!(f, "rule has no head and no body"),
        }
    }
}

impl core::error::Error for RuleError {}

/// A disjunctive rule. Duplicate-free by virtue of the set representation.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Rule {
    head: AtomSet,
    pos_body: AtomSet,
    neg_body: AtomSet,
}

impl Rule {
    pub fn new(head: AtomSet, pos_body: AtomSet, neg_body: AtomSet) -> Result<Rule, RuleError> {
        if head.is_empty() && pos_body.is_empty() && neg_body.is_empty() {
            return Err(RuleError::Empty);
        }
        Ok(Rule {
            head,
            pos_body,
            neg_body,
        })
    }

    /// The fact `a.`
    pub fn fact(atom: Atom) -> Rule {
        Rule {
            head: AtomSet::singleton(atom),
            pos_body: AtomSet::EMPTY,
            neg_body: AtomSet::EMPTY,
        }
    }

    /// The unsatisfiable empty constraint.
    ///
    /// Not expressible in the textual grammar and rejected by [`Rule::new`];
    /// it arises only as the reduct of a constraint whose entire body is
    /// negative, e.g. `(:- not a)^∅`.
    pub fn falsum() -> Rule {
        Rule {
            head: AtomSet::EMPTY,
            pos_body: AtomSet::EMPTY,
            neg_body: AtomSet::EMPTY,
        }
    }

    pub fn is_falsum(&self) -> bool {
        self.head.is_empty() && self.pos_body.is_empty() && self.neg_body.is_empty()
    }

    /// The unary rule `head :- body.`
    pub fn unary(head: Atom, body: Atom) -> Rule {
        Rule {
            head: AtomSet::singleton(head),
            pos_body: AtomSet::singleton(body),
            neg_body: AtomSet::EMPTY,
        }
    }

    pub fn head(&self) -> AtomSet {
        self.head
    }

    pub fn pos_body(&self) -> AtomSet {
        self.pos_body
    }

    pub fn neg_body(&self) -> AtomSet {
        self.neg_body
    }

    /// All body atoms, positive and negative.
    pub fn body(&self) -> AtomSet {
        self.pos_body | self.neg_body
    }

    pub fn atoms(&self) -> AtomSet {
        self.head | self.pos_body | self.neg_body
    }

    pub fn classify(&self) -> RuleClass {
        let is_fact = self.head.len() == 1 && self.pos_body.is_empty() && self.neg_body.is_empty();
        RuleClass {
            is_fact,
            is_constraint: self.head.is_empty(),
            is_positive: self.neg_body.is_empty(),
            is_normal: self.head.len() <= 1,
            is_unary: is_fact
                || (self.head.len() == 1 && self.pos_body.len() == 1 && self.neg_body.is_empty()),
        }
    }
}

/// Syntactic flags of a single rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RuleClass {
    pub is_fact: bool,
    pub is_constraint: bool,
    pub is_positive: bool,
    pub is_normal: bool,
    pub is_unary: bool,
}

/// The head and body symbol sets of a program, plus their union.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymbolSets {
    pub heads: AtomSet,
    pub bodies: AtomSet,
    pub atoms: AtomSet,
}

/// The `(H, B)` pair parameterizing a context class: context rules may use
/// head atoms only from `heads` and body atoms only from `bodies`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct AlphabetPair {
    pub heads: AtomSet,
    pub bodies: AtomSet,
}

impl AlphabetPair {
    pub fn new(heads: AtomSet, bodies: AtomSet) -> AlphabetPair {
        AlphabetPair { heads, bodies }
    }

    /// `H = B = U`: contexts are unrestricted (strong equivalence).
    pub fn strong(universe: AtomSet) -> AlphabetPair {
        AlphabetPair {
            heads: universe,
            bodies: universe,
        }
    }

    /// `H = U`, `B = ∅`: contexts are sets of disjunctive facts (uniform
    /// equivalence).
    pub fn uniform(universe: AtomSet) -> AlphabetPair {
        AlphabetPair {
            heads: universe,
            bodies: AtomSet::EMPTY,
        }
    }

    /// `H = ∅`, `B = U`: contexts are constraints only (ordinary
    /// equivalence).
    pub fn ordinary(universe: AtomSet) -> AlphabetPair {
        AlphabetPair {
            heads: AtomSet::EMPTY,
            bodies: universe,
        }
    }

    /// `H = B = A`: strong equivalence relative to `A`.
    pub fn rel_strong(alphabet: AtomSet) -> AlphabetPair {
        AlphabetPair {
            heads: alphabet,
            bodies: alphabet,
        }
    }

    /// `H = A`, `B = ∅`: uniform equivalence relative to `A`.
    pub fn rel_uniform(alphabet: AtomSet) -> AlphabetPair {
        AlphabetPair {
            heads: alphabet,
            bodies: AtomSet::EMPTY,
        }
    }

    /// `H ∪ B`.
    pub fn union(self) -> AtomSet {
        self.heads | self.bodies
    }

    /// Intersect both alphabets with `universe`.
    pub fn restrict(self, universe: AtomSet) -> AlphabetPair {
        AlphabetPair {
            heads: self.heads & universe,
            bodies: self.bodies & universe,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProgramError {
    /// A rule mentions an atom outside the stated universe.
    AtomOutsideUniverse,
}

impl fmt::Display for ProgramError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProgramError::AtomOutsideUniverse => {
                write!(f, "rule mentions an atom outside the program universe")
            }
        }
    }
}

impl core::error::Error for ProgramError {}

/// A finite set of rules over a fixed universe. Rules are kept sorted and
/// deduplicated, so equal programs compare equal structurally.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Program {
    rules: Vec<Rule>,
    universe: AtomSet,
}

impl Program {
    pub fn new(
        rules: impl IntoIterator<Item = Rule>,
        universe: AtomSet,
    ) -> Result<Program, ProgramError> {
        let mut rules: Vec<Rule> = rules.into_iter().collect();
        rules.sort_unstable();
        rules.dedup();
        if rules.iter().any(|r| !r.atoms().is_subset(universe)) {
            return Err(ProgramError::AtomOutsideUniverse);
        }
        Ok(Program { rules, universe })
    }

    pub fn empty(universe: AtomSet) -> Program {
        Program {
            rules: Vec::new(),
            universe,
        }
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn universe(&self) -> AtomSet {
        self.universe
    }

    /// Same rules over an enlarged universe.
    pub fn with_universe(&self, universe: AtomSet) -> Result<Program, ProgramError> {
        Program::new(self.rules.iter().copied(), universe)
    }

    /// Set union of the rules; the universes are merged.
    pub fn union(&self, other: &Program) -> Program {
        let mut rules = self.rules.clone();
        rules.extend_from_slice(&other.rules);
        rules.sort_unstable();
        rules.dedup();
        Program {
            rules,
            universe: self.universe | other.universe,
        }
    }

    /// `H(P)`, `B(P)` and their union.
    pub fn symbol_sets(&self) -> SymbolSets {
        let mut heads = AtomSet::EMPTY;
        let mut bodies = AtomSet::EMPTY;
        for r in &self.rules {
            heads = heads | r.head();
            bodies = bodies | r.body();
        }
        SymbolSets {
            heads,
            bodies,
            atoms: heads | bodies,
        }
    }

    /// Atoms actually occurring in the rules (may be smaller than the
    /// universe).
    pub fn atoms(&self) -> AtomSet {
        self.symbol_sets().atoms
    }

    /// Membership in the context class: every head atom in `ab.heads`,
    /// every body atom (positive or negative) in `ab.bodies`.
    pub fn in_class(&self, ab: AlphabetPair) -> bool {
        self.rules
            .iter()
            .all(|r| r.head().is_subset(ab.heads) && r.body().is_subset(ab.bodies))
    }

    pub fn is_positive(&self) -> bool {
        self.rules.iter().all(|r| r.neg_body().is_empty())
    }

    pub fn is_normal(&self) -> bool {
        self.rules.iter().all(|r| r.head().len() <= 1)
    }

    pub fn is_unary(&self) -> bool {
        self.rules.iter().all(|r| r.classify().is_unary)
    }
}

/// Print a rule in the textual grammar, atoms in interning order. The
/// falsum rule renders as `:-.`, which is outside the grammar, matching its
/// status as a reduct-only artifact.
pub fn render_rule(rule: &Rule, symbols: &Symbols) -> String {
    if rule.is_falsum() {
        return String::from(":-.");
    }
    let mut out = String::new();
    let mut first = true;
    for atom in rule.head().iter() {
        if !first {
            out.push_str(" | ");
        }
        out.push_str(symbols.name(atom));
        first = false;
    }
    if !rule.pos_body().is_empty() || !rule.neg_body().is_empty() {
        if !rule.head().is_empty() {
            out.push(' ');
        }
        out.push_str(":- ");
        let mut first = true;
        for atom in rule.pos_body().iter() {
            if !first {
                out.push_str(", ");
            }
            out.push_str(symbols.name(atom));
            first = false;
        }
        for atom in rule.neg_body().iter() {
            if !first {
                out.push_str(", ");
            }
            out.push_str("not ");
            out.push_str(symbols.name(atom));
            first = false;
        }
    }
    out.push('.');
    out
}

/// Print a program, one rule per line, rules in canonical order.
/// Parsing the result yields an identical rule set.
pub fn render_program(program: &Program, symbols: &Symbols) -> String {
    let mut out = String::new();
    for rule in program.rules() {
        out.push_str(&render_rule(rule, symbols));
        out.push('\n');
    }
    out
}
