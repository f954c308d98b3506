//! Semantic characterizations of head/body-parameterized equivalence.
//!
//! The central object is the set of `<H,B>`-models of a program: pairs
//! `(X, Y)` of interpretations such that two programs are `<H,B>`-equivalent
//! exactly when their `<H,B>`-model sets coincide. SE-models, UE-models and
//! their relativized variants fall out as corner cases; those families are
//! implemented here from their own classical definitions rather than by
//! delegating to the general construction, so that their coincidence with
//! it is a checkable claim instead of a tautology.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::semantics::{satisfies_program, satisfies_reduct, AnswerSetFamily};
use crate::sets::AtomSet;
use crate::syntax::{AlphabetPair, Program};

/// `v ≼ z` for the alphabet pair `(H, B)`: `v` does not exceed `z` on the
/// head alphabet and `z` does not exceed `v` on the body alphabet.
pub fn preceq(v: AtomSet, z: AtomSet, ab: AlphabetPair) -> bool {
    v.restrict(ab.heads).is_subset(z.restrict(ab.heads))
        && z.restrict(ab.bodies).is_subset(v.restrict(ab.bodies))
}

/// Strict variant: `v ≼ z` and the two differ on `H ∪ B`.
pub fn prec_strict(v: AtomSet, z: AtomSet, ab: AlphabetPair) -> bool {
    let hb = ab.union();
    preceq(v, z, ab) && v.restrict(hb) != z.restrict(hb)
}

/// `y` is an `H`-total model of `p`: it is a model, and every proper subset
/// of `y` satisfying `p^y` loses at least one `H`-atom relative to `y`.
///
/// Only such `y` can be turned into an answer set by adding a context
/// program with heads from `H`.
pub fn is_h_total(p: &Program, y: AtomSet, heads: AtomSet) -> bool {
    if !satisfies_program(y, p) {
        return false;
    }
    let y_h = y.restrict(heads);
    y.proper_subsets()
        .all(|z| !satisfies_reduct(z, y, p) || z.restrict(heads).is_proper_subset(y_h))
}

/// `(x, y)` is `≼`-maximal for `p`: `x ⊨ p^y`, and no `x'` strictly above
/// `x` (and below `y`) satisfies `p^y`. Maximality pushes up in `H` while
/// pushing down in `B`.
pub fn is_preceq_maximal(p: &Program, x: AtomSet, y: AtomSet, ab: AlphabetPair) -> bool {
    satisfies_reduct(x, y, p)
        && y.proper_subsets()
            .all(|x2| !prec_strict(x, x2, ab) || !satisfies_reduct(x2, y, p))
}

/// A pair of interpretations `x ⊆ y`; the building block of all
/// characterizations. Total pairs have `x = y`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ModelPair {
    pub x: AtomSet,
    pub y: AtomSet,
}

impl ModelPair {
    pub fn new(x: AtomSet, y: AtomSet) -> ModelPair {
        debug_assert!(x.is_subset(y));
        ModelPair { x, y }
    }

    pub fn is_total(&self) -> bool {
        self.x == self.y
    }
}

/// A characterization: the model pairs of one program under one alphabet
/// pair, canonically sorted. Two programs are equivalent for the alphabet
/// exactly when their characterizations are equal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Characterization {
    pairs: Vec<ModelPair>,
    pub alphabet: AlphabetPair,
    pub universe: AtomSet,
}

impl Characterization {
    fn from_set(pairs: BTreeSet<ModelPair>, alphabet: AlphabetPair, universe: AtomSet) -> Self {
        Characterization {
            pairs: pairs.into_iter().collect(),
            alphabet,
            universe,
        }
    }

    pub fn pairs(&self) -> &[ModelPair] {
        &self.pairs
    }

    pub fn contains(&self, pair: ModelPair) -> bool {
        self.pairs.binary_search(&pair).is_ok()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = ModelPair> + '_ {
        self.pairs.iter().copied()
    }

    pub fn total_pairs(&self) -> impl Iterator<Item = AtomSet> + '_ {
        self.pairs.iter().filter(|p| p.is_total()).map(|p| p.y)
    }

    /// Pair-set equality, ignoring the alphabet/universe tags.
    pub fn same_pairs(&self, other: &Characterization) -> bool {
        self.pairs == other.pairs
    }
}

/// The `<H,B>`-models of `p` over `universe`.
///
/// A pair `(x, y)` qualifies iff `y` is `H`-total for `p` and, when
/// `x ⊂ y`, some `x' ⊂ y` with `x'|_{H∪B} = x` is `≼`-maximal for `p`.
/// Distinct maximal `x'` collapsing to the same projection yield one pair:
/// no context program can tell them apart.
pub fn hb_models(p: &Program, ab: AlphabetPair, universe: AtomSet) -> Characterization {
    let ab = ab.restrict(universe);
    let hb = ab.union();
    let mut pairs = BTreeSet::new();
    for y in universe.subsets() {
        if !is_h_total(p, y, ab.heads) {
            continue;
        }
        pairs.insert(ModelPair::new(y, y));
        for x_prime in y.proper_subsets() {
            if is_preceq_maximal(p, x_prime, y, ab) {
                pairs.insert(ModelPair::new(x_prime.restrict(hb), y));
            }
        }
    }
    Characterization::from_set(pairs, ab, universe)
}

/// SE-models: `x ⊆ y`, `y ⊨ p`, `x ⊨ p^y`.
pub fn se_models(p: &Program, universe: AtomSet) -> Characterization {
    let mut pairs = BTreeSet::new();
    for y in universe.subsets() {
        if !satisfies_program(y, p) {
            continue;
        }
        for x in y.subsets() {
            if satisfies_reduct(x, y, p) {
                pairs.insert(ModelPair::new(x, y));
            }
        }
    }
    Characterization::from_set(pairs, AlphabetPair::strong(universe), universe)
}

/// UE-models: SE-models whose `x` admits no model of `p^y` strictly between
/// `x` and `y`.
pub fn ue_models(p: &Program, universe: AtomSet) -> Characterization {
    let mut pairs = BTreeSet::new();
    for y in universe.subsets() {
        if !satisfies_program(y, p) {
            continue;
        }
        for x in y.subsets() {
            if !satisfies_reduct(x, y, p) {
                continue;
            }
            let maximal = y
                .proper_subsets()
                .all(|x2| !(x.is_proper_subset(x2) && satisfies_reduct(x2, y, p)));
            if maximal {
                pairs.insert(ModelPair::new(x, y));
            }
        }
    }
    Characterization::from_set(pairs, AlphabetPair::uniform(universe), universe)
}

/// Relativized SE-models for an alphabet `a`:
/// (1) `x = y` or `x ⊂ y|_a`;
/// (2) `y ⊨ p` and every `y' ⊂ y` with `y' ⊨ p^y` has `y'|_a ⊂ y|_a`;
/// (3) if `x ⊂ y`, some `x' ⊆ y` with `x'|_a = x` satisfies `p^y`.
pub fn rel_se_models(p: &Program, a: AtomSet, universe: AtomSet) -> Characterization {
    let a = a & universe;
    let mut pairs = BTreeSet::new();
    for y in universe.subsets() {
        if !satisfies_program(y, p) {
            continue;
        }
        let y_a = y.restrict(a);
        let total = y
            .proper_subsets()
            .all(|z| !satisfies_reduct(z, y, p) || z.restrict(a).is_proper_subset(y_a));
        if !total {
            continue;
        }
        pairs.insert(ModelPair::new(y, y));
        for x in y_a.subsets() {
            if x == y_a {
                continue;
            }
            let witnessed = y
                .subsets()
                .any(|x_prime| x_prime.restrict(a) == x && satisfies_reduct(x_prime, y, p));
            if witnessed {
                pairs.insert(ModelPair::new(x, y));
            }
        }
    }
    Characterization::from_set(pairs, AlphabetPair::rel_strong(a), universe)
}

/// Relativized UE-models for an alphabet `a`: conditions (1) and (2) of the
/// relativized SE-models, and for `x ⊂ y` some `x' ⊆ y` with `x'|_a = x`
/// satisfies `p^y` while every `x'' ⊂ y` whose `a`-projection strictly
/// exceeds `x` does not.
pub fn rel_ue_models(p: &Program, a: AtomSet, universe: AtomSet) -> Characterization {
    let a = a & universe;
    let mut pairs = BTreeSet::new();
    for y in universe.subsets() {
        if !satisfies_program(y, p) {
            continue;
        }
        let y_a = y.restrict(a);
        let total = y
            .proper_subsets()
            .all(|z| !satisfies_reduct(z, y, p) || z.restrict(a).is_proper_subset(y_a));
        if !total {
            continue;
        }
        pairs.insert(ModelPair::new(y, y));
        for x in y_a.subsets() {
            if x == y_a {
                continue;
            }
            let witnessed = y
                .subsets()
                .any(|x_prime| x_prime.restrict(a) == x && satisfies_reduct(x_prime, y, p));
            if !witnessed {
                continue;
            }
            let maximal = y
                .proper_subsets()
                .all(|x2| !(x.is_proper_subset(x2.restrict(a)) && satisfies_reduct(x2, y, p)));
            if maximal {
                pairs.insert(ModelPair::new(x, y));
            }
        }
    }
    Characterization::from_set(pairs, AlphabetPair::rel_uniform(a), universe)
}

/// Answer sets read off the `<∅,U>`-models: exactly the `y` of the total
/// pairs. Agrees with direct answer-set computation.
pub fn answer_sets_via_characterization(p: &Program, universe: AtomSet) -> AnswerSetFamily {
    let sigma = hb_models(p, AlphabetPair::ordinary(universe), universe);
    AnswerSetFamily::from_sets(sigma.total_pairs().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_program;
    use crate::semantics::answer_sets;
    use crate::symbols::Symbols;
    use crate::syntax::Rule;

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

    fn pairs(char: &Characterization) -> Vec<(AtomSet, AtomSet)> {
        char.iter().map(|p| (p.x, p.y)).collect()
    }

    #[test]
    fn preceq_on_example_alphabets() {
        let (_, _, syms, u) = example_programs();
        let a = set(&syms, &["a"]);
        let b = set(&syms, &["b"]);
        let ab = AlphabetPair::new(u, b);
        // ∅ ≺ {a} for H = {a,b}, B = {b}.
        assert!(preceq(AtomSet::EMPTY, a, ab));
        assert!(prec_strict(AtomSet::EMPTY, a, ab));
        // Reflexive.
        for v in u.subsets() {
            assert!(preceq(v, v, ab));
            assert!(!prec_strict(v, v, ab));
        }
        // H = B = U collapses ≼ to equality.
        let strong = AlphabetPair::strong(u);
        for v in u.subsets() {
            for z in u.subsets() {
                assert_eq!(preceq(v, z, strong), v == z);
            }
        }
    }

    #[test]
    fn strict_encodings_agree_exhaustively() {
        // v ≺ z via the projection-difference test equals v ≼ z ∧ ¬(z ≼ v),
        // over all pairs and alphabets on three atoms.
        let mut syms = Symbols::new();
        for n in ["a", "b", "c"] {
            syms.intern(n).unwrap();
        }
        let u = syms.universe();
        for h in u.subsets() {
            for b in u.subsets() {
                let ab = AlphabetPair::new(h, b);
                for v in u.subsets() {
                    for z in u.subsets() {
                        let diff = prec_strict(v, z, ab);
                        let asym = preceq(v, z, ab) && !preceq(z, v, ab);
                        assert_eq!(diff, asym);
                    }
                }
            }
        }
    }

    #[test]
    fn preceq_is_reflexive_and_transitive() {
        let mut syms = Symbols::new();
        for n in ["a", "b", "c", "d"] {
            syms.intern(n).unwrap();
        }
        let u = syms.universe();
        let alphabets = [
            AlphabetPair::strong(u),
            AlphabetPair::uniform(u),
            AlphabetPair::ordinary(u),
            AlphabetPair::new(set(&syms, &["a", "c"]), set(&syms, &["b", "c"])),
        ];
        for ab in alphabets {
            for v in u.subsets() {
                assert!(preceq(v, v, ab));
                for z in u.subsets() {
                    if !preceq(v, z, ab) {
                        continue;
                    }
                    for w in u.subsets() {
                        if preceq(z, w, ab) {
                            assert!(preceq(v, w, ab));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn strict_relation_is_acyclic() {
        let mut syms = Symbols::new();
        for n in ["a", "b", "c"] {
            syms.intern(n).unwrap();
        }
        let u = syms.universe();
        for h in u.subsets() {
            for b in u.subsets() {
                let ab = AlphabetPair::new(h, b);
                // DFS over the 8-node graph of ≺ edges.
                let nodes: Vec<AtomSet> = u.subsets().collect();
                for &start in &nodes {
                    let mut stack = alloc::vec![start];
                    let mut seen = BTreeSet::new();
                    while let Some(v) = stack.pop() {
                        for &z in &nodes {
                            if prec_strict(v, z, ab) {
                                assert_ne!(z, start, "cycle through {start:?}");
                                if seen.insert(z) {
                                    stack.push(z);
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn preceq_simplifications_for_full_alphabets() {
        // With H = U: v ≼ z iff v ⊆ z and v|_B = z|_B; dually with B = U.
        let mut syms = Symbols::new();
        for n in ["a", "b", "c"] {
            syms.intern(n).unwrap();
        }
        let u = syms.universe();
        for a in u.subsets() {
            for v in u.subsets() {
                for z in u.subsets() {
                    let body_rel = AlphabetPair::new(u, a);
                    assert_eq!(
                        preceq(v, z, body_rel),
                        v.is_subset(z) && v.restrict(a) == z.restrict(a)
                    );
                    let head_rel = AlphabetPair::new(a, u);
                    assert_eq!(
                        preceq(v, z, head_rel),
                        z.is_subset(v) && v.restrict(a) == z.restrict(a)
                    );
                }
            }
        }
    }

    #[test]
    fn preceq_simplifications_for_nested_alphabets() {
        // B ⊆ H: v ≼ z iff v|_H ⊆ z|_H and v|_B = z|_B; H = B = A collapses
        // to equality of the A-projections.
        let mut syms = Symbols::new();
        for n in ["a", "b", "c"] {
            syms.intern(n).unwrap();
        }
        let u = syms.universe();
        for h in u.subsets() {
            for b in u.subsets().filter(|b| b.is_subset(h)) {
                let ab = AlphabetPair::new(h, b);
                for v in u.subsets() {
                    for z in u.subsets() {
                        assert_eq!(
                            preceq(v, z, ab),
                            v.restrict(h).is_subset(z.restrict(h))
                                && v.restrict(b) == z.restrict(b)
                        );
                    }
                }
            }
        }
        for a in u.subsets() {
            let ab = AlphabetPair::rel_strong(a);
            for v in u.subsets() {
                for z in u.subsets() {
                    assert_eq!(preceq(v, z, ab), v.restrict(a) == z.restrict(a));
                }
            }
        }
    }

    #[test]
    fn positive_programs_are_preceq_monotone() {
        // For positive p with H(p) ⊆ H and B(p) ⊆ B: v ⊨ p and v ≼ z imply
        // z ⊨ p.
        let mut syms = Symbols::new();
        for n in ["a", "b", "c"] {
            syms.intern(n).unwrap();
        }
        let u = syms.universe();
        let mut rules = Vec::new();
        for head in u.subsets() {
            for pos in u.subsets() {
                if let Ok(r) = Rule::new(head, pos, AtomSet::EMPTY) {
                    rules.push(r);
                }
            }
        }
        for (i, r1) in rules.iter().enumerate().step_by(3) {
            for r2 in rules.iter().skip(i).step_by(13) {
                let p = Program::new([*r1, *r2], u).unwrap();
                let s = p.symbol_sets();
                let ab = AlphabetPair::new(s.heads, s.bodies);
                for v in u.subsets() {
                    if !satisfies_program(v, &p) {
                        continue;
                    }
                    for z in u.subsets() {
                        if preceq(v, z, ab) {
                            assert!(satisfies_program(z, &p));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn h_total_models_of_the_examples() {
        let (p, q, syms, u) = example_programs();
        let y1 = set(&syms, &["a", "b"]);
        let b = set(&syms, &["b"]);
        let a = set(&syms, &["a"]);
        // Y1 = {a,b} is {b}-total for P (and for Q).
        assert!(is_h_total(&p, y1, b));
        assert!(is_h_total(&q, y1, b));
        // But not {a}-total for either.
        assert!(!is_h_total(&p, y1, a));
        assert!(!is_h_total(&q, y1, a));
        // ∅-total models are exactly the answer sets.
        for prog in [&p, &q] {
            let family = answer_sets(prog, u);
            for y in u.subsets() {
                assert_eq!(is_h_total(prog, y, AtomSet::EMPTY), family.contains(y));
            }
        }
    }

    #[test]
    fn maximality_on_example_three() {
        let (p, q, syms, u) = example_programs();
        let y1 = set(&syms, &["a", "b"]);
        let ab = AlphabetPair::new(set(&syms, &["b"]), u);
        // (∅, Y1) is ≼-maximal for Q but ∅ does not even satisfy P^Y1.
        assert!(is_preceq_maximal(&q, AtomSet::EMPTY, y1, ab));
        assert!(!is_preceq_maximal(&p, AtomSet::EMPTY, y1, ab));
        // With H = B = U maximality degenerates to satisfaction of the
        // reduct.
        let strong = AlphabetPair::strong(u);
        for prog in [&p, &q] {
            for y in u.subsets() {
                for x in y.subsets() {
                    assert_eq!(
                        is_preceq_maximal(prog, x, y, strong),
                        satisfies_reduct(x, y, prog)
                    );
                }
            }
        }
    }

    #[test]
    fn hb_models_of_example_three() {
        let (p, q, syms, u) = example_programs();
        let a = set(&syms, &["a"]);
        let b = set(&syms, &["b"]);
        let ab_set = u;

        // H = {a,b}, B = {b}: both characterizations equal
        // {({a},{a}), ({a},{a,b}), ({a,b},{a,b})}.
        let alphabet = AlphabetPair::new(u, b);
        let sp = hb_models(&p, alphabet, u);
        let sq = hb_models(&q, alphabet, u);
        let expected = alloc::vec![(a, a), (a, ab_set), (ab_set, ab_set)];
        assert_eq!(pairs(&sp), expected);
        assert_eq!(pairs(&sq), expected);

        // H = {b}, B = {a,b}: (∅,{a,b}) is a model of Q but not of P.
        let alphabet = AlphabetPair::new(b, u);
        let sp = hb_models(&p, alphabet, u);
        let sq = hb_models(&q, alphabet, u);
        let witness_pair = ModelPair::new(AtomSet::EMPTY, ab_set);
        assert!(sq.contains(witness_pair));
        assert!(!sp.contains(witness_pair));
        assert_eq!(
            pairs(&sp),
            alloc::vec![(a, a), (a, ab_set), (ab_set, ab_set)]
        );
        assert_eq!(
            pairs(&sq),
            alloc::vec![(AtomSet::EMPTY, ab_set), (a, a), (ab_set, ab_set)]
        );

        // H = {a}, B = {a,b}: ({a},{a}) is the only model of either.
        let alphabet = AlphabetPair::new(a, u);
        for prog in [&p, &q] {
            assert_eq!(pairs(&hb_models(prog, alphabet, u)), alloc::vec![(a, a)]);
        }

        // H = {a,b}, B = {a}: (∅,{a,b}) again separates Q from P.
        let alphabet = AlphabetPair::new(u, a);
        let sp = hb_models(&p, alphabet, u);
        let sq = hb_models(&q, alphabet, u);
        assert!(sq.contains(witness_pair));
        assert!(!sp.contains(witness_pair));
    }

    #[test]
    fn se_models_of_the_examples() {
        let (p, q, syms, u) = example_programs();
        let a = set(&syms, &["a"]);
        let sp = se_models(&p, u);
        assert_eq!(pairs(&sp), alloc::vec![(a, a), (a, u), (u, u)]);
        let sq = se_models(&q, u);
        assert_eq!(
            pairs(&sq),
            alloc::vec![(AtomSet::EMPTY, u), (a, a), (a, u), (u, u)]
        );

        // Empty program over a singleton universe: all three pairs.
        let mut syms2 = Symbols::new();
        let a2 = syms2.intern("a").unwrap();
        let u2 = AtomSet::singleton(a2);
        let empty = Program::empty(u2);
        assert_eq!(
            pairs(&se_models(&empty, u2)),
            alloc::vec![
                (AtomSet::EMPTY, AtomSet::EMPTY),
                (AtomSet::EMPTY, u2),
                (u2, u2)
            ]
        );
    }

    #[test]
    fn ue_models_of_the_examples() {
        let (p, q, syms, u) = example_programs();
        let a = set(&syms, &["a"]);
        let expected = alloc::vec![(a, a), (a, u), (u, u)];
        assert_eq!(pairs(&ue_models(&p, u)), expected);
        assert_eq!(pairs(&ue_models(&q, u)), expected);

        // Single fact: single total pair.
        let mut syms2 = Symbols::new();
        let fact = parse_program("a.", &mut syms2).unwrap();
        let u2 = syms2.universe();
        assert_eq!(pairs(&ue_models(&fact, u2)), alloc::vec![(u2, u2)]);

        // UE-models are SE-models.
        for prog in [&p, &q] {
            let se = se_models(prog, u);
            for pair in ue_models(prog, u).iter() {
                assert!(se.contains(pair));
            }
        }
    }

    #[test]
    fn relativized_families_on_the_examples() {
        let (p, _, syms, u) = example_programs();
        let b = set(&syms, &["b"]);
        // ({a,b},{a,b}) is a {b}-SE-model of P: {a,b} is {b}-total.
        let rel = rel_se_models(&p, b, u);
        assert!(rel.contains(ModelPair::new(u, u)));
    }

    #[test]
    fn characterization_shape_invariants() {
        let (p, q, _, u) = example_programs();
        for prog in [&p, &q] {
            for h in u.subsets() {
                for b in u.subsets() {
                    let ab = AlphabetPair::new(h, b);
                    let sigma = hb_models(prog, ab, u);
                    for pair in sigma.iter() {
                        assert!(pair.x.is_subset(pair.y));
                        // Totality closure.
                        assert!(sigma.contains(ModelPair::new(pair.y, pair.y)));
                        if !pair.is_total() {
                            // Non-total shape.
                            assert!(pair.x.is_subset(pair.y.restrict(ab.union())));
                            assert!(pair.x.restrict(h).is_proper_subset(pair.y.restrict(h)));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn answer_sets_match_characterization_route() {
        let (p, q, syms, u) = example_programs();
        let a = set(&syms, &["a"]);
        assert_eq!(answer_sets_via_characterization(&p, u).sets(), &[a]);

        let mut syms2 = Symbols::new();
        let loop_prog = parse_program("a :- a.", &mut syms2).unwrap();
        let u2 = syms2.universe();
        assert_eq!(
            answer_sets_via_characterization(&loop_prog, u2).sets(),
            &[AtomSet::EMPTY]
        );

        for prog in [&p, &q] {
            assert_eq!(
                answer_sets_via_characterization(prog, u),
                answer_sets(prog, u)
            );
        }
    }
}
