//! Atom interning.
//!
//! Atoms are lowercase-initial identifiers interned to dense integer ids so
//! that interpretations and alphabets can be bitsets. Interning is bijective
//! within one `Symbols` table: equal names get equal ids and vice versa.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::sets::AtomSet;

/// Hard cap on distinct atoms per table, set by the bitset width.
pub const MAX_ATOMS: usize = 64;

/// An interned propositional atom (an index into a [`Symbols`] table).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Atom(u32);

impl Atom {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub(crate) fn from_index(index: usize) -> Atom {
        debug_assert!(index < MAX_ATOMS);
        Atom(index as u32)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SymbolError {
    /// Name does not match `[a-z][A-Za-z0-9_]*`.
    InvalidName(String),
    /// `not` is a keyword of the rule grammar and cannot name an atom.
    ReservedName(String),
    /// The table already holds [`MAX_ATOMS`] atoms.
    TooManyAtoms,
}

impl fmt::Display for SymbolError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymbolError::InvalidName(name) => {
                write!(
                    f,
                    "invalid atom name `{name}` (expected [a-z][A-Za-z0-9_]*)"
                )
            }
            SymbolError::ReservedName(name) => write!(f, "`{name}` is a reserved word"),
            SymbolError::TooManyAtoms => write!(f, "too many atoms (limit {MAX_ATOMS})"),
        }
    }
}

impl core::error::Error for SymbolError {}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_lowercase() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// The atom table of one workspace: every program, interpretation and
/// alphabet that are compared against each other must share one table.
#[derive(Clone, Debug, Default)]
pub struct Symbols {
    names: Vec<String>,
    index: BTreeMap<String, Atom>,
}

impl Symbols {
    pub fn new() -> Symbols {
        Symbols::default()
    }

    /// Intern `name`, returning the existing atom if already present.
    pub fn intern(&mut self, name: &str) -> Result<Atom, SymbolError> {
        if let Some(&atom) = self.index.get(name) {
            return Ok(atom);
        }
        if name == "not" {
            return Err(SymbolError::ReservedName(String::from(name)));
        }
        if !valid_name(name) {
            return Err(SymbolError::InvalidName(String::from(name)));
        }
        if self.names.len() >= MAX_ATOMS {
            return Err(SymbolError::TooManyAtoms);
        }
        let atom = Atom(self.names.len() as u32);
        self.names.push(String::from(name));
        self.index.insert(String::from(name), atom);
        Ok(atom)
    }

    /// Intern a name guaranteed not to clash with any existing atom,
    /// appending underscores to `base` until it is free.
    pub fn intern_fresh(&mut self, base: &str) -> Result<Atom, SymbolError> {
        let mut name = String::from(base);
        while self.index.contains_key(&name) {
            name.push('_');
        }
        self.intern(&name)
    }

    pub fn lookup(&self, name: &str) -> Option<Atom> {
        self.index.get(name).copied()
    }

    pub fn name(&self, atom: Atom) -> &str {
        &self.names[atom.index()]
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// All interned atoms as a set.
    pub fn universe(&self) -> AtomSet {
        if self.names.len() >= MAX_ATOMS {
            AtomSet::from_bits(u64::MAX)
        } else {
            AtomSet::from_bits((1u64 << self.names.len()) - 1)
        }
    }

    pub fn atoms(&self) -> impl Iterator<Item = Atom> + '_ {
        (0..self.names.len()).map(Atom::from_index)
    }
}
