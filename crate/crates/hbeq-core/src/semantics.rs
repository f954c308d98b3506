//! Classical satisfaction, reducts, models and answer sets.
//!
//! Enumeration is exhaustive over the `2^|U|` bitset interpretations of the
//! stated universe. This module is the trusted slow baseline for everything
//! else in the crate, so it stays free of solver cleverness; the only
//! shortcut is a unit-propagation prefix in the minimality check, which
//! prunes the subset scan without ever skipping a genuine model.

use alloc::vec::Vec;
use core::fmt;

use crate::sets::AtomSet;
use crate::symbols::Symbols;
use crate::syntax::{Program, Rule};

/// `i ⊨ r`: the head intersects `i` whenever the body fires under `i`.
pub fn satisfies(i: AtomSet, r: &Rule) -> bool {
    !r.pos_body().is_subset(i) || r.neg_body().intersects(i) || r.head().intersects(i)
}

/// `i ⊨ p`.
pub fn satisfies_program(i: AtomSet, p: &Program) -> bool {
    p.rules().iter().all(|r| satisfies(i, r))
}

/// The reduct `p^y`: drop rules whose negative body intersects `y`, strip
/// the negative bodies from the rest. Always positive. A constraint whose
/// entire body is negative reduces to the unsatisfiable falsum rule.
pub fn reduct(p: &Program, y: AtomSet) -> Program {
    let rules = p.rules().iter().filter_map(|r| {
        if r.neg_body().intersects(y) {
            None
        } else if r.head().is_empty() && r.pos_body().is_empty() {
            Some(Rule::falsum())
        } else {
            Some(Rule::new(r.head(), r.pos_body(), AtomSet::EMPTY).expect("reduct keeps atoms"))
        }
    });
    Program::new(rules, p.universe()).expect("reduct stays inside the universe")
}

/// `z ⊨ p^y` without materializing the reduct.
pub fn satisfies_reduct(z: AtomSet, y: AtomSet, p: &Program) -> bool {
    p.rules()
        .iter()
        .all(|r| r.neg_body().intersects(y) || !r.pos_body().is_subset(z) || r.head().intersects(z))
}

/// All models of `p` among the subsets of `universe`, ascending.
pub fn models(p: &Program, universe: AtomSet) -> Vec<AtomSet> {
    universe
        .subsets()
        .filter(|&i| satisfies_program(i, p))
        .collect()
}

/// Atoms every model `z ⊆ y` of `p^y` must contain: the least fixpoint of
/// the reduct rules whose head has exactly one atom inside `y`. Used to
/// shrink the minimality scan; `y` itself must already be a model.
fn forced_below(p: &Program, y: AtomSet) -> AtomSet {
    let mut forced = AtomSet::EMPTY;
    loop {
        let mut grew = false;
        for r in p.rules() {
            if r.neg_body().intersects(y) || !r.pos_body().is_subset(forced) {
                continue;
            }
            let head_in_y = r.head() & y;
            if head_in_y.len() == 1 && !head_in_y.is_subset(forced) {
                forced = forced | head_in_y;
                grew = true;
            }
        }
        if !grew {
            return forced;
        }
    }
}

/// `y` is an answer set of `p` iff `y ⊨ p^y` and no proper subset of `y`
/// satisfies `p^y`.
pub fn is_answer_set(p: &Program, y: AtomSet) -> bool {
    if !satisfies_program(y, p) {
        return false;
    }
    // Every model z ⊆ y of p^y contains the forced atoms, so scanning the
    // remaining free atoms is still exhaustive.
    let forced = forced_below(p, y);
    debug_assert!(forced.is_subset(y));
    let free = y - forced;
    for extra in free.subsets() {
        let z = forced | extra;
        if z != y && satisfies_reduct(z, y, p) {
            return false;
        }
    }
    true
}

/// The answer sets of a program, stored in ascending bitmask order.
/// Pairwise incomparable under inclusion.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AnswerSetFamily {
    sets: Vec<AtomSet>,
}

impl AnswerSetFamily {
    /// Build from arbitrary sets; sorts and deduplicates.
    pub fn from_sets(mut sets: Vec<AtomSet>) -> AnswerSetFamily {
        sets.sort_unstable();
        sets.dedup();
        AnswerSetFamily { sets }
    }

    pub fn sets(&self) -> &[AtomSet] {
        &self.sets
    }

    pub fn contains(&self, y: AtomSet) -> bool {
        self.sets.binary_search(&y).is_ok()
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = AtomSet> + '_ {
        self.sets.iter().copied()
    }

    pub fn is_antichain(&self) -> bool {
        for (i, &a) in self.sets.iter().enumerate() {
            for &b in &self.sets[i + 1..] {
                if a.is_subset(b) || b.is_subset(a) {
                    return false;
                }
            }
        }
        true
    }

    pub fn display<'a>(&'a self, symbols: &'a Symbols) -> FamilyDisplay<'a> {
        FamilyDisplay {
            family: self,
            symbols,
        }
    }
}

pub struct FamilyDisplay<'a> {
    family: &'a AnswerSetFamily,
    symbols: &'a Symbols,
}

impl fmt::Display for FamilyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, s) in self.family.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", s.display(self.symbols))?;
        }
        write!(f, "}}")
    }
}

/// All answer sets of `p` among the subsets of `universe`.
pub fn answer_sets(p: &Program, universe: AtomSet) -> AnswerSetFamily {
    let sets = universe
        .subsets()
        .filter(|&y| is_answer_set(p, y))
        .collect();
    let family = AnswerSetFamily { sets };
    debug_assert!(family.is_antichain());
    family
}

/// `AS(p) = AS(q)` over the given universe.
pub fn ordinary_equivalent(p: &Program, q: &Program, universe: AtomSet) -> bool {
    answer_sets(p, universe) == answer_sets(q, universe)
}

/// Replace a context program by its reduct with respect to `y`: the result
/// is positive, uses no new head or body atoms, and preserves membership of
/// `y` in the answer sets of `p ∪ context` for any `p`.
pub fn simplify_context(context: &Program, y: AtomSet) -> Program {
    reduct(context, y)
}
