//! Equivalence and containment verdicts, witnesses, and counterexample
//! synthesis.
//!
//! The primary decision route compares the `<H,B>`-model characterizations
//! of the two programs. When they differ, a witness pair is extracted and
//! compiled into a concrete unary context program that separates the
//! programs; the construction is validated by direct answer-set computation
//! before it is returned. An independent oracle enumerates every unary
//! context over the alphabets and compares answer sets outright; it is
//! exponentially more expensive but shares no code path with the
//! characterization route, which makes it the measuring stick in the
//! differential test suites.

use alloc::vec::Vec;
use core::fmt;

use crate::characterization::{hb_models, is_h_total, preceq};
use crate::semantics::{answer_sets, is_answer_set, satisfies_program, satisfies_reduct};
use crate::sets::AtomSet;
use crate::syntax::{AlphabetPair, Program, Rule};

/// Default cap on the number of unary context programs the oracle (and the
/// lattice sweep) may enumerate.
pub const DEFAULT_ORACLE_BUDGET: u64 = 1 << 20;

/// Which containment a witness refutes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ContainmentDirection {
    /// Refutes `left ⊆ right`: some answer set of `left ∪ R` is missing
    /// from `right ∪ R`.
    LeftInRight,
    /// Refutes `right ⊆ left`.
    RightInLeft,
}

/// A pair `(x, y)` certifying that a containment problem fails.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Witness {
    pub x: AtomSet,
    pub y: AtomSet,
    pub direction: ContainmentDirection,
}

/// Which side of the comparison keeps `distinguishing` as an answer set
/// once the context is added.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CounterexampleSide {
    Left,
    Right,
}

/// A unary context program together with the interpretation it separates:
/// `distinguishing` is an answer set of exactly one of `left ∪ context`
/// and `right ∪ context`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Counterexample {
    pub context: Program,
    pub distinguishing: AtomSet,
    pub side: CounterexampleSide,
}

/// How a verdict was obtained.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Method {
    SigmaComparison,
    WitnessSearch,
    Oracle,
    PositiveFastPath,
    Reduction,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::SigmaComparison => "sigma-comparison",
            Method::WitnessSearch => "witness-search",
            Method::Oracle => "oracle",
            Method::PositiveFastPath => "positive-fast-path",
            Method::Reduction => "reduction",
        }
    }
}

/// Outcome of a decision. A negative verdict always carries a validated
/// counterexample.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Verdict {
    pub equivalent: bool,
    pub witness: Option<Witness>,
    pub counterexample: Option<Counterexample>,
    pub method: Method,
}

impl Verdict {
    fn holds(method: Method) -> Verdict {
        Verdict {
            equivalent: true,
            witness: None,
            counterexample: None,
            method,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DecisionError {
    /// The synthesized context failed its answer-set validation; this
    /// signals a bug in the construction, not bad input.
    InvalidWitness { witness: Witness },
    /// The enumeration would exceed the configured budget.
    BudgetExceeded { required: u64, budget: u64 },
    /// The positive-program fast path was applied to a program with
    /// default negation.
    NotPositive,
    /// The characterizations differ but neither containment direction
    /// produced a witness; impossible unless the implementation is wrong.
    InternalInconsistency,
}

impl fmt::Display for DecisionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecisionError::InvalidWitness { witness } => write!(
                f,
                "internal error: witness {:?} failed counterexample validation",
                witness
            ),
            DecisionError::BudgetExceeded { required, budget } => write!(
                f,
                "enumeration of {required} candidates exceeds the budget of {budget}"
            ),
            DecisionError::NotPositive => {
                write!(f, "positive-program fast path requires positive programs")
            }
            DecisionError::InternalInconsistency => write!(
                f,
                "internal error: characterizations differ but no witness was found"
            ),
        }
    }
}

impl core::error::Error for DecisionError {}

/// Is `(x, y)` a witness against `p ⊆<H,B> q`?
///
/// Requires `y` to be `H`-total for `p`, and, when `y ⊨ q`, that `x` is a
/// proper subset of `y` satisfying `q^y` such that nothing `≼`-above `x`
/// below `y` satisfies `p^y`.
pub fn is_witness(p: &Program, q: &Program, x: AtomSet, y: AtomSet, ab: AlphabetPair) -> bool {
    if !x.is_subset(y) || !is_h_total(p, y, ab.heads) {
        return false;
    }
    if !satisfies_program(y, q) {
        return true;
    }
    x.is_proper_subset(y)
        && satisfies_reduct(x, y, q)
        && y.proper_subsets()
            .all(|x2| !preceq(x, x2, ab) || !satisfies_reduct(x2, y, p))
}

/// First witness against `p ⊆<H,B> q` in (y, then x) ascending bitmask
/// order, or `None` when the containment holds.
///
/// When the distinguishing `y` is not even a model of `q`, every `x ⊆ y`
/// forms a witness; the total pair `(y, y)` is returned for those, because
/// it is the one whose induced context (the facts `y|_H`) provably pins `y`
/// as an answer set on the `p` side.
pub fn find_witness(
    p: &Program,
    q: &Program,
    ab: AlphabetPair,
    universe: AtomSet,
) -> Option<Witness> {
    let ab = ab.restrict(universe);
    for y in universe.subsets() {
        if !is_h_total(p, y, ab.heads) {
            continue;
        }
        if !satisfies_program(y, q) {
            return Some(Witness {
                x: y,
                y,
                direction: ContainmentDirection::LeftInRight,
            });
        }
        for x in y.proper_subsets() {
            if is_witness(p, q, x, y, ab) {
                return Some(Witness {
                    x,
                    y,
                    direction: ContainmentDirection::LeftInRight,
                });
            }
        }
    }
    None
}

/// The unary context a witness induces: the facts `x|_H` plus every rule
/// `a :- b` with `a` from `(y \ x)|_H` and `b` from `(y \ x)|_B`.
pub fn counterexample_program(w: &Witness, ab: AlphabetPair, universe: AtomSet) -> Program {
    let x_h = w.x.restrict(ab.heads);
    let gap = w.y - w.x;
    let gap_h = gap.restrict(ab.heads);
    let gap_b = gap.restrict(ab.bodies);
    let mut rules: Vec<Rule> = x_h.iter().map(Rule::fact).collect();
    for a in gap_h.iter() {
        for b in gap_b.iter() {
            rules.push(Rule::unary(a, b));
        }
    }
    Program::new(rules, universe).expect("witness atoms lie inside the universe")
}

/// Turn a witness into a validated counterexample: builds the unary context
/// and confirms by answer-set computation that it separates the programs.
/// `p` and `q` are the left and right programs of the original comparison,
/// independent of the witness direction.
pub fn witness_to_counterexample(
    w: &Witness,
    p: &Program,
    q: &Program,
    ab: AlphabetPair,
    universe: AtomSet,
) -> Result<Counterexample, DecisionError> {
    let ab = ab.restrict(universe);
    let context = counterexample_program(w, ab, universe);
    debug_assert!(context.is_unary() && context.in_class(ab));
    let (first, second, side) = match w.direction {
        ContainmentDirection::LeftInRight => (p, q, CounterexampleSide::Left),
        ContainmentDirection::RightInLeft => (q, p, CounterexampleSide::Right),
    };
    let kept = is_answer_set(&first.union(&context), w.y);
    let lost = is_answer_set(&second.union(&context), w.y);
    if !kept || lost {
        return Err(DecisionError::InvalidWitness { witness: *w });
    }
    Ok(Counterexample {
        context,
        distinguishing: w.y,
        side,
    })
}

/// Decide `p ⊆<H,B> q` by witness search. A negative verdict carries the
/// witness and a validated unary counterexample.
pub fn decide_containment(
    p: &Program,
    q: &Program,
    ab: AlphabetPair,
    universe: AtomSet,
) -> Result<Verdict, DecisionError> {
    match find_witness(p, q, ab, universe) {
        None => Ok(Verdict::holds(Method::WitnessSearch)),
        Some(w) => {
            let cex = witness_to_counterexample(&w, p, q, ab, universe)?;
            Ok(Verdict {
                equivalent: false,
                witness: Some(w),
                counterexample: Some(cex),
                method: Method::WitnessSearch,
            })
        }
    }
}

/// Decide `p ≡<H,B> q` by comparing characterizations. On inequality, a
/// witness is recovered from one of the two containment directions and
/// compiled into a counterexample.
pub fn decide_equivalence(
    p: &Program,
    q: &Program,
    ab: AlphabetPair,
    universe: AtomSet,
) -> Result<Verdict, DecisionError> {
    let ab = ab.restrict(universe);
    if hb_models(p, ab, universe).same_pairs(&hb_models(q, ab, universe)) {
        return Ok(Verdict::holds(Method::SigmaComparison));
    }
    let witness = find_witness(p, q, ab, universe).or_else(|| {
        find_witness(q, p, ab, universe).map(|w| Witness {
            direction: ContainmentDirection::RightInLeft,
            ..w
        })
    });
    let Some(w) = witness else {
        return Err(DecisionError::InternalInconsistency);
    };
    let cex = witness_to_counterexample(&w, p, q, ab, universe)?;
    Ok(Verdict {
        equivalent: false,
        witness: Some(w),
        counterexample: Some(cex),
        method: Method::SigmaComparison,
    })
}

/// The unary rules a context over `(H, B)` may contain, in canonical order:
/// facts over `H` first (ascending), then `a :- b` pairs, `a`-major.
/// Self-loops `a :- a` are legal unary rules and are included.
fn unary_context_items(ab: AlphabetPair) -> Vec<Rule> {
    let mut items: Vec<Rule> = ab.heads.iter().map(Rule::fact).collect();
    for a in ab.heads.iter() {
        for b in ab.bodies.iter() {
            items.push(Rule::unary(a, b));
        }
    }
    items
}

/// Decide `p ≡<H,B> q` by exhaustively enumerating every unary context
/// program over the alphabets and comparing answer sets. Returns the first
/// separating context (in canonical enumeration order) as counterexample.
///
/// Completeness rests on the fact that a non-equivalence is always exposed
/// by some unary context; the budget guards the `2^(|H| + |H|·|B|)`-sized
/// enumeration.
pub fn oracle_equivalence(
    p: &Program,
    q: &Program,
    ab: AlphabetPair,
    universe: AtomSet,
    budget: u64,
) -> Result<Verdict, DecisionError> {
    let ab = ab.restrict(universe);
    let items = unary_context_items(ab);
    if items.len() >= 63 {
        return Err(DecisionError::BudgetExceeded {
            required: u64::MAX,
            budget,
        });
    }
    let required = 1u64 << items.len();
    if required > budget {
        return Err(DecisionError::BudgetExceeded { required, budget });
    }
    for selection in 0..required {
        let rules = items
            .iter()
            .enumerate()
            .filter(|(i, _)| selection & (1 << i) != 0)
            .map(|(_, r)| *r);
        let context = Program::new(rules, universe).expect("alphabet atoms are in the universe");
        let left = answer_sets(&p.union(&context), universe);
        let right = answer_sets(&q.union(&context), universe);
        if left != right {
            let (distinguishing, side) = first_difference(&left, &right);
            return Ok(Verdict {
                equivalent: false,
                witness: None,
                counterexample: Some(Counterexample {
                    context,
                    distinguishing,
                    side,
                }),
                method: Method::Oracle,
            });
        }
    }
    Ok(Verdict::holds(Method::Oracle))
}

/// Smallest interpretation in the symmetric difference of two answer-set
/// families, tagged with the side that contains it.
fn first_difference(
    left: &crate::semantics::AnswerSetFamily,
    right: &crate::semantics::AnswerSetFamily,
) -> (AtomSet, CounterexampleSide) {
    for y in left.iter() {
        if !right.contains(y) {
            return (y, CounterexampleSide::Left);
        }
    }
    for y in right.iter() {
        if !left.contains(y) {
            return (y, CounterexampleSide::Right);
        }
    }
    unreachable!("families differ")
}

/// Fast path for positive programs: `p ≡<H,B> q` holds iff `p` and `q`
/// have the same `H`-total models, for every `B`. A negative verdict is
/// certified with a facts-only counterexample (valid in any `C<H,B>`).
pub fn decide_equivalence_positive(
    p: &Program,
    q: &Program,
    heads: AtomSet,
    universe: AtomSet,
) -> Result<Verdict, DecisionError> {
    if !p.is_positive() || !q.is_positive() {
        return Err(DecisionError::NotPositive);
    }
    let heads = heads & universe;
    let same = universe
        .subsets()
        .all(|y| is_h_total(p, y, heads) == is_h_total(q, y, heads));
    if same {
        return Ok(Verdict::holds(Method::PositiveFastPath));
    }
    let facts_only = AlphabetPair::new(heads, AtomSet::EMPTY);
    let witness = find_witness(p, q, facts_only, universe).or_else(|| {
        find_witness(q, p, facts_only, universe).map(|w| Witness {
            direction: ContainmentDirection::RightInLeft,
            ..w
        })
    });
    let Some(w) = witness else {
        return Err(DecisionError::InternalInconsistency);
    };
    let cex = witness_to_counterexample(&w, p, q, facts_only, universe)?;
    Ok(Verdict {
        equivalent: false,
        witness: Some(w),
        counterexample: Some(cex),
        method: Method::PositiveFastPath,
    })
}

/// Equivalence verdicts for every alphabet pair over the universe.
#[derive(Clone, Debug)]
pub struct LatticeReport {
    entries: Vec<(AlphabetPair, bool)>,
    pub universe: AtomSet,
}

impl LatticeReport {
    pub fn entries(&self) -> &[(AlphabetPair, bool)] {
        &self.entries
    }

    pub fn verdict(&self, ab: AlphabetPair) -> Option<bool> {
        self.entries
            .iter()
            .find(|(entry, _)| *entry == ab)
            .map(|&(_, v)| v)
    }

    /// The `<∅,U>` corner.
    pub fn ordinary(&self) -> bool {
        self.verdict(AlphabetPair::ordinary(self.universe))
            .expect("corner is swept")
    }

    /// The `<U,∅>` corner.
    pub fn uniform(&self) -> bool {
        self.verdict(AlphabetPair::uniform(self.universe))
            .expect("corner is swept")
    }

    /// The `<U,U>` corner.
    pub fn strong(&self) -> bool {
        self.verdict(AlphabetPair::strong(self.universe))
            .expect("corner is swept")
    }
}

/// Sweep all `4^|U|` alphabet pairs and decide each by characterization
/// comparison. `budget` bounds the number of pairs.
pub fn equivalence_lattice_report(
    p: &Program,
    q: &Program,
    universe: AtomSet,
    budget: u64,
) -> Result<LatticeReport, DecisionError> {
    let n = universe.len();
    if n >= 32 {
        return Err(DecisionError::BudgetExceeded {
            required: u64::MAX,
            budget,
        });
    }
    let required = 1u64 << (2 * n);
    if required > budget {
        return Err(DecisionError::BudgetExceeded { required, budget });
    }
    let mut entries = Vec::with_capacity(required as usize);
    for heads in universe.subsets() {
        for bodies in universe.subsets() {
            let ab = AlphabetPair::new(heads, bodies);
            let verdict = decide_equivalence(p, q, ab, universe)?;
            entries.push((ab, verdict.equivalent));
        }
    }
    Ok(LatticeReport { entries, universe })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_program;
    use crate::symbols::Symbols;

    const P_TEXT: &str = "a | b.\na :- b.";
    const Q_TEXT: &str = "a :- not b.\nb :- not a.\na :- b.";

    fn example_programs() -> (Program, Program, Symbols, AtomSet) {
        let mut syms = Symbols::new();
        let p = parse_program(P_TEXT, &mut syms).unwrap();
        let q = parse_program(Q_TEXT, &mut syms).unwrap();
        let u = syms.universe();
        (
            p.with_universe(u).unwrap(),
            q.with_universe(u).unwrap(),
            syms,
            u,
        )
    }

    fn set(syms: &Symbols, names: &[&str]) -> AtomSet {
        names.iter().map(|n| syms.lookup(n).unwrap()).collect()
    }

    #[test]
    fn witness_for_example_two() {
        let (p, q, syms, u) = example_programs();
        let b = set(&syms, &["b"]);
        let a = set(&syms, &["a"]);

        // P ⊆<{b},{a,b}> Q is refuted by (∅, {a,b}), and by nothing else.
        let ab = AlphabetPair::new(b, u);
        let w = find_witness(&p, &q, ab, u).unwrap();
        assert_eq!((w.x, w.y), (AtomSet::EMPTY, u));
        let all: Vec<(AtomSet, AtomSet)> = u
            .subsets()
            .flat_map(|y| y.subsets().map(move |x| (x, y)))
            .filter(|&(x, y)| is_witness(&p, &q, x, y, ab))
            .collect();
        assert_eq!(all, alloc::vec![(AtomSet::EMPTY, u)]);

        // Same pair refutes P ⊆<{a,b},{a}> Q.
        let ab2 = AlphabetPair::new(u, a);
        let w2 = find_witness(&p, &q, ab2, u).unwrap();
        assert_eq!((w2.x, w2.y), (AtomSet::EMPTY, u));

        // Reflexive containment has no witness.
        for alphabet in [ab, ab2, AlphabetPair::strong(u)] {
            assert!(find_witness(&p, &p, alphabet, u).is_none());
        }
    }

    #[test]
    fn counterexample_construction_matches_the_formula() {
        let (p, q, syms, u) = example_programs();
        let a = set(&syms, &["a"]);
        let b = set(&syms, &["b"]);
        let w = Witness {
            x: AtomSet::EMPTY,
            y: u,
            direction: ContainmentDirection::LeftInRight,
        };

        // H = {b}, B = {a,b}: R = {b :- a., b :- b.}
        let ab = AlphabetPair::new(b, u);
        let r = counterexample_program(&w, ab, u);
        let expected = {
            let mut syms2 = syms.clone();
            parse_program("b :- a.\nb :- b.", &mut syms2).unwrap()
        };
        assert_eq!(r.rules(), expected.rules());
        let cex = witness_to_counterexample(&w, &p, &q, ab, u).unwrap();
        assert_eq!(cex.side, CounterexampleSide::Left);
        assert_eq!(answer_sets(&p.union(&cex.context), u).sets(), &[u]);
        assert!(answer_sets(&q.union(&cex.context), u).is_empty());

        // H = {a,b}, B = {a}: R = {a :- a., b :- a.}
        let ab2 = AlphabetPair::new(u, a);
        let r2 = counterexample_program(&w, ab2, u);
        let expected2 = {
            let mut syms2 = syms.clone();
            parse_program("a :- a.\nb :- a.", &mut syms2).unwrap()
        };
        assert_eq!(r2.rules(), expected2.rules());
        let cex2 = witness_to_counterexample(&w, &p, &q, ab2, u).unwrap();
        assert!(answer_sets(&p.union(&cex2.context), u).contains(u));
        assert!(!answer_sets(&q.union(&cex2.context), u).contains(u));

        // Empty body alphabet leaves only the fact part.
        let w3 = Witness {
            x: a,
            y: u,
            direction: ContainmentDirection::LeftInRight,
        };
        let facts_only = AlphabetPair::new(u, AtomSet::EMPTY);
        let r3 = counterexample_program(&w3, facts_only, u);
        assert_eq!(r3.rules(), &[Rule::fact(syms.lookup("a").unwrap())]);
    }

    #[test]
    fn containment_verdicts_for_the_examples() {
        let (p, q, syms, u) = example_programs();
        let b = set(&syms, &["b"]);

        let v = decide_containment(&p, &q, AlphabetPair::new(b, u), u).unwrap();
        assert!(!v.equivalent);
        let cex = v.counterexample.unwrap();
        assert!(cex.context.is_unary());
        assert!(cex.context.in_class(AlphabetPair::new(b, u)));

        let v = decide_containment(&q, &p, AlphabetPair::new(u, b), u).unwrap();
        assert!(v.equivalent);

        let v = decide_containment(&p, &p, AlphabetPair::strong(u), u).unwrap();
        assert!(v.equivalent);
    }

    #[test]
    fn equivalence_verdicts_for_example_one() {
        let (p, q, syms, u) = example_programs();
        let a = set(&syms, &["a"]);
        let b = set(&syms, &["b"]);

        let cases = [
            (AlphabetPair::new(u, b), true),
            (AlphabetPair::new(a, u), true),
            (AlphabetPair::new(b, u), false),
            (AlphabetPair::new(u, a), false),
            (AlphabetPair::strong(u), false),
            (AlphabetPair::uniform(u), true),
            (AlphabetPair::ordinary(u), true),
        ];
        for (ab, expected) in cases {
            let v = decide_equivalence(&p, &q, ab, u).unwrap();
            assert_eq!(v.equivalent, expected, "alphabet {ab:?}");
            if !expected {
                let cex = v.counterexample.expect("negative verdicts carry one");
                assert!(cex.context.is_unary());
                assert!(cex.context.in_class(ab));
                // The distinguishing interpretation is kept on exactly one side.
                let kept_left = answer_sets(&p.union(&cex.context), u).contains(cex.distinguishing);
                let kept_right =
                    answer_sets(&q.union(&cex.context), u).contains(cex.distinguishing);
                assert!(kept_left != kept_right);
            }
        }
    }

    #[test]
    fn oracle_agrees_on_example_one() {
        let (p, q, _, u) = example_programs();
        let budget = DEFAULT_ORACLE_BUDGET;

        let v = oracle_equivalence(&p, &q, AlphabetPair::uniform(u), u, budget).unwrap();
        assert!(v.equivalent);

        let v = oracle_equivalence(&p, &q, AlphabetPair::strong(u), u, budget).unwrap();
        assert!(!v.equivalent);
        let cex = v.counterexample.unwrap();
        assert!(cex.context.is_unary());
        assert!(cex.context.in_class(AlphabetPair::strong(u)));
        let kept_left = answer_sets(&p.union(&cex.context), u).contains(cex.distinguishing);
        let kept_right = answer_sets(&q.union(&cex.context), u).contains(cex.distinguishing);
        assert!(kept_left != kept_right);

        let v = oracle_equivalence(&p, &p, AlphabetPair::strong(u), u, budget).unwrap();
        assert!(v.equivalent);
    }

    #[test]
    fn oracle_budget_guard() {
        let (p, q, _, u) = example_programs();
        // |H| + |H|·|B| = 6 items for the strong alphabet on two atoms.
        let err = oracle_equivalence(&p, &q, AlphabetPair::strong(u), u, 63).unwrap_err();
        assert_eq!(
            err,
            DecisionError::BudgetExceeded {
                required: 64,
                budget: 63
            }
        );
    }

    #[test]
    fn positive_fast_path() {
        let (p, _, syms, u) = example_programs();
        let mut syms2 = syms.clone();
        let p2 = parse_program("a.\na :- b.", &mut syms2)
            .unwrap()
            .with_universe(u)
            .unwrap();

        let v = decide_equivalence_positive(&p, &p2, u, u).unwrap();
        assert!(v.equivalent);
        let v = decide_equivalence_positive(&p, &p, u, u).unwrap();
        assert!(v.equivalent);

        // Not applicable to programs with negation.
        let (_, q, _, _) = example_programs();
        assert_eq!(
            decide_equivalence_positive(&p, &q, u, u).unwrap_err(),
            DecisionError::NotPositive
        );

        // A genuine difference yields a facts-only counterexample.
        let mut syms3 = syms.clone();
        let disj = parse_program("a | b.", &mut syms3)
            .unwrap()
            .with_universe(u)
            .unwrap();
        let mut syms4 = syms.clone();
        let facts = parse_program("a.", &mut syms4)
            .unwrap()
            .with_universe(u)
            .unwrap();
        let v = decide_equivalence_positive(&disj, &facts, u, u).unwrap();
        assert!(!v.equivalent);
        let cex = v.counterexample.unwrap();
        assert!(cex.context.rules().iter().all(|r| r.classify().is_fact));
    }

    #[test]
    fn positive_fast_path_agrees_with_sigma_comparison() {
        // All single-rule positive programs over two atoms, every H and B.
        let mut syms = Symbols::new();
        for n in ["a", "b"] {
            syms.intern(n).unwrap();
        }
        let u = syms.universe();
        let mut programs = alloc::vec![Program::empty(u)];
        for head in u.subsets() {
            for pos in u.subsets() {
                if let Ok(r) = Rule::new(head, pos, AtomSet::EMPTY) {
                    programs.push(Program::new([r], u).unwrap());
                }
            }
        }
        for p in &programs {
            for q in &programs {
                for h in u.subsets() {
                    let fast = decide_equivalence_positive(p, q, h, u).unwrap();
                    for b in u.subsets() {
                        let general = decide_equivalence(p, q, AlphabetPair::new(h, b), u).unwrap();
                        assert_eq!(fast.equivalent, general.equivalent);
                    }
                }
            }
        }
    }

    #[test]
    fn lattice_report_for_example_one() {
        let (p, q, syms, u) = example_programs();
        let a = set(&syms, &["a"]);
        let report = equivalence_lattice_report(&p, &q, u, 1 << 10).unwrap();
        assert_eq!(report.entries().len(), 16);
        assert_eq!(report.verdict(AlphabetPair::new(a, u)), Some(true));
        assert_eq!(report.verdict(AlphabetPair::new(u, a)), Some(false));
        assert!(report.uniform());
        assert!(!report.strong());
        assert!(report.ordinary());

        // Antitone: shrinking both alphabets preserves a positive verdict.
        for &(ab, verdict) in report.entries() {
            if !verdict {
                continue;
            }
            for h2 in ab.heads.subsets() {
                for b2 in ab.bodies.subsets() {
                    assert_eq!(report.verdict(AlphabetPair::new(h2, b2)), Some(true));
                }
            }
        }

        // All-true on reflexive input; budget guard kicks in when too small.
        let self_report = equivalence_lattice_report(&p, &p, u, 1 << 10).unwrap();
        assert!(self_report.entries().iter().all(|&(_, v)| v));
        assert!(matches!(
            equivalence_lattice_report(&p, &q, u, 15),
            Err(DecisionError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn answer_sets_of_context_unions_require_h_totality() {
        // If y ∈ AS(p ∪ R) for a unary R over (H, B), then y is H-total
        // for p.
        let (p, q, _syms, u) = example_programs();
        for prog in [&p, &q] {
            for h in u.subsets() {
                for b in u.subsets() {
                    let ab = AlphabetPair::new(h, b);
                    let items = unary_context_items(ab);
                    for selection in 0u64..(1 << items.len()) {
                        let rules = items
                            .iter()
                            .enumerate()
                            .filter(|(i, _)| selection & (1 << i) != 0)
                            .map(|(_, r)| *r);
                        let context = Program::new(rules, u).unwrap();
                        let combined = prog.union(&context);
                        for y in u.subsets() {
                            if is_answer_set(&combined, y) {
                                assert!(is_h_total(prog, y, h));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn equivalence_is_conjunction_of_containments() {
        let (p, q, _, u) = example_programs();
        for h in u.subsets() {
            for b in u.subsets() {
                let ab = AlphabetPair::new(h, b);
                let eq = decide_equivalence(&p, &q, ab, u).unwrap().equivalent;
                let fwd = decide_containment(&p, &q, ab, u).unwrap().equivalent;
                let bwd = decide_containment(&q, &p, ab, u).unwrap().equivalent;
                assert_eq!(eq, fwd && bwd);
                // Symmetry.
                let eq_rev = decide_equivalence(&q, &p, ab, u).unwrap().equivalent;
                assert_eq!(eq, eq_rev);
            }
        }
    }

    #[test]
    fn witness_oracle_and_verdict_agree_on_small_pairs() {
        // Three-way agreement on every single-rule pair over two atoms and
        // every alphabet: a witness exists iff the oracle finds a unary
        // counterexample iff the containment verdict is negative.
        let mut syms = Symbols::new();
        for n in ["a", "b"] {
            syms.intern(n).unwrap();
        }
        let u = syms.universe();
        let mut programs = alloc::vec![Program::empty(u)];
        for head in u.subsets() {
            for pos in u.subsets() {
                for neg in u.subsets() {
                    if let Ok(r) = Rule::new(head, pos, neg) {
                        programs.push(Program::new([r], u).unwrap());
                    }
                }
            }
        }
        for p in programs.iter().step_by(3) {
            for q in programs.iter().step_by(5) {
                for h in u.subsets() {
                    for b in u.subsets() {
                        let ab = AlphabetPair::new(h, b);
                        let sigma = decide_equivalence(p, q, ab, u).unwrap();
                        let oracle =
                            oracle_equivalence(p, q, ab, u, DEFAULT_ORACLE_BUDGET).unwrap();
                        assert_eq!(
                            sigma.equivalent, oracle.equivalent,
                            "p={p:?} q={q:?} ab={ab:?}"
                        );
                        let fwd = find_witness(p, q, ab, u);
                        let bwd = find_witness(q, p, ab, u);
                        assert_eq!(sigma.equivalent, fwd.is_none() && bwd.is_none());
                    }
                }
            }
        }
    }
}
