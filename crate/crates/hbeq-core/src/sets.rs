//! Dense bitsets over interned atoms.
//!
//! Subsets of the universe play two roles: interpretations (the unit of all
//! model-theoretic computation) and alphabets (syntax restrictions such as
//! the head/body pair of a context class). One set type serves both.

use core::fmt;
use core::ops::{BitAnd, BitOr, Sub};

use crate::symbols::{Atom, Symbols, MAX_ATOMS};

/// A set of atoms, stored as a bitmask indexed by atom id.
///
/// Supports at most [`MAX_ATOMS`] atoms, which is far beyond the scale the
/// exhaustive enumeration in this crate can handle anyway. The derived `Ord`
/// is plain numeric order on the mask; that order is used everywhere a
/// canonical enumeration or sort is required.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct AtomSet(u64);

impl AtomSet {
    pub const EMPTY: AtomSet = AtomSet(0);

    /// Set containing exactly `atom`.
    pub fn singleton(atom: Atom) -> AtomSet {
        AtomSet(1u64 << atom.index())
    }

    pub fn from_atoms<I: IntoIterator<Item = Atom>>(atoms: I) -> AtomSet {
        atoms
            .into_iter()
            .fold(AtomSet::EMPTY, |s, a| s | AtomSet::singleton(a))
    }

    /// Raw bitmask; stable across runs because interning order is stable.
    pub fn bits(self) -> u64 {
        self.0
    }

    /// Rebuild from a raw bitmask (inverse of [`AtomSet::bits`]).
    pub fn from_bits(bits: u64) -> AtomSet {
        AtomSet(bits)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn contains(self, atom: Atom) -> bool {
        self.0 & (1u64 << atom.index()) != 0
    }

    pub fn with(self, atom: Atom) -> AtomSet {
        AtomSet(self.0 | (1u64 << atom.index()))
    }

    pub fn insert(&mut self, atom: Atom) {
        self.0 |= 1u64 << atom.index();
    }

    pub fn is_subset(self, other: AtomSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: AtomSet) -> bool {
        self != other && self.is_subset(other)
    }

    pub fn intersects(self, other: AtomSet) -> bool {
        self.0 & other.0 != 0
    }

    /// The restriction `self|_alphabet`, i.e. the intersection.
    pub fn restrict(self, alphabet: AtomSet) -> AtomSet {
        self & alphabet
    }

    /// Atoms in ascending id order.
    pub fn iter(self) -> AtomIter {
        AtomIter(self.0)
    }

    /// All subsets of `self`, in ascending numeric (bitmask) order,
    /// starting with the empty set and ending with `self`.
    pub fn subsets(self) -> SubsetIter {
        SubsetIter::new(self)
    }

    /// All proper subsets of `self`, in ascending numeric order.
    pub fn proper_subsets(self) -> SubsetIter {
        let mut it = SubsetIter::new(self);
        it.remaining -= 1;
        it
    }

    /// Render against a symbol table, e.g. `{a, b}`.
    pub fn display(self, symbols: &Symbols) -> SetDisplay<'_> {
        SetDisplay { set: self, symbols }
    }
}

impl BitOr for AtomSet {
    type Output = AtomSet;
    fn bitor(self, rhs: AtomSet) -> AtomSet {
        AtomSet(self.0 | rhs.0)
    }
}

impl BitAnd for AtomSet {
    type Output = AtomSet;
    fn bitand(self, rhs: AtomSet) -> AtomSet {
        AtomSet(self.0 & rhs.0)
    }
}

impl Sub for AtomSet {
    type Output = AtomSet;
    fn sub(self, rhs: AtomSet) -> AtomSet {
        AtomSet(self.0 & !rhs.0)
    }
}

impl FromIterator<Atom> for AtomSet {
    fn from_iter<I: IntoIterator<Item = Atom>>(iter: I) -> AtomSet {
        AtomSet::from_atoms(iter)
    }
}

impl fmt::Debug for AtomSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for atom in self.iter() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "#{}", atom.index())?;
            first = false;
        }
        write!(f, "}}")
    }
}

pub struct AtomIter(u64);

impl Iterator for AtomIter {
    type Item = Atom;

    fn next(&mut self) -> Option<Atom> {
        if self.0 == 0 {
            return None;
        }
        let idx = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(Atom::from_index(idx as usize))
    }
}

/// Iterates every subset of a fixed set in ascending bitmask order.
///
/// The k-th subset distributes the bits of `k` over the member positions of
/// the base set (positions sorted ascending), which preserves numeric order.
pub struct SubsetIter {
    positions: [u8; MAX_ATOMS],
    next: u64,
    remaining: u64,
}

impl SubsetIter {
    fn new(base: AtomSet) -> SubsetIter {
        let mut positions = [0u8; MAX_ATOMS];
        let mut width = 0u32;
        for atom in base.iter() {
            positions[width as usize] = atom.index() as u8;
            width += 1;
        }
        SubsetIter {
            positions,
            next: 0,
            remaining: 1u64 << width,
        }
    }
}

impl Iterator for SubsetIter {
    type Item = AtomSet;

    fn next(&mut self) -> Option<AtomSet> {
        if self.remaining == 0 {
            return None;
        }
        let mut mask = 0u64;
        let mut k = self.next;
        while k != 0 {
            let bit = k.trailing_zeros();
            mask |= 1u64 << self.positions[bit as usize];
            k &= k - 1;
        }
        self.next += 1;
        self.remaining -= 1;
        Some(AtomSet(mask))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        (self.remaining as usize, Some(self.remaining as usize))
    }
}

pub struct SetDisplay<'a> {
    set: AtomSet,
    symbols: &'a Symbols,
}

impl fmt::Display for SetDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for atom in self.set.iter() {
            if !first {
                write!(f, ", ")?;
            }
            write!(f, "{}", self.symbols.name(atom))?;
            first = false;
        }
        write!(f, "}}")
    }
}
