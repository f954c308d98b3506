//! Program loading and alphabet resolution shared by all subcommands.

use std::fs;
use std::path::Path;

use clap::Args;
use hbeq_core::{parse_program, AlphabetPair, AtomSet, Program, Symbols};

use crate::commands::CommandError;

/// Parsed input programs over a merged universe, plus the symbol table they
/// were interned into.
pub struct Workspace {
    pub symbols: Symbols,
    pub programs: Vec<Program>,
    pub universe: AtomSet,
    pub warnings: Vec<String>,
}

impl Workspace {
    /// Load and parse the given program files into one symbol table. The
    /// universe is the union of all mentioned atoms, optionally extended by
    /// `--universe` names.
    pub fn load(paths: &[&Path], universe_extra: Option<&str>) -> Result<Workspace, CommandError> {
        let mut symbols = Symbols::new();
        let mut parsed = Vec::new();
        for path in paths {
            let text = fs::read_to_string(path)
                .map_err(|e| CommandError::Usage(format!("cannot read {}: {e}", path.display())))?;
            let program = parse_program(&text, &mut symbols)
                .map_err(|e| CommandError::Usage(format!("{}: {e}", path.display())))?;
            parsed.push(program);
        }
        let mut universe = parsed.iter().fold(AtomSet::EMPTY, |u, p| u | p.universe());
        if let Some(list) = universe_extra {
            for name in split_names(list) {
                let atom = symbols
                    .intern(name)
                    .map_err(|e| CommandError::Usage(format!("--universe: {e}")))?;
                universe.insert(atom);
            }
        }
        let programs = parsed
            .into_iter()
            .map(|p| p.with_universe(universe).expect("universe only grows"))
            .collect();
        Ok(Workspace {
            symbols,
            programs,
            universe,
            warnings: Vec::new(),
        })
    }

    pub fn names(&self, set: AtomSet) -> Vec<String> {
        set.iter()
            .map(|a| self.symbols.name(a).to_string())
            .collect()
    }

    /// Resolve a comma list / `all` / `none` against the universe. Unknown
    /// atoms are dropped with a warning; they only count as known if
    /// `--universe` put them there.
    fn resolve_atom_list(&mut self, flag: &str, value: &str) -> AtomSet {
        match value.trim() {
            "all" => self.universe,
            "" | "none" => AtomSet::EMPTY,
            list => {
                let mut set = AtomSet::EMPTY;
                for name in split_names(list) {
                    match self.symbols.lookup(name) {
                        Some(atom) if self.universe.contains(atom) => set.insert(atom),
                        _ => self.warnings.push(format!(
                            "{flag}: atom `{name}` is not in the universe and was ignored \
                             (use --universe to add it)"
                        )),
                    }
                }
                set
            }
        }
    }
}

fn split_names(list: &str) -> impl Iterator<Item = &str> {
    list.split(',').map(str::trim).filter(|s| !s.is_empty())
}

/// Alphabet selection flags: either explicit `--heads`/`--bodies` lists or
/// one of the named presets. Defaults to `--strong`, the most conservative
/// replacement guarantee.
#[derive(Args, Clone, Debug, Default)]
pub struct AlphabetFlags {
    /// Head alphabet H: comma list of atoms, `all`, or `none`.
    #[arg(long, conflicts_with_all = ["strong", "uniform", "ordinary", "rel_strong", "rel_uniform"])]
    pub heads: Option<String>,

    /// Body alphabet B: comma list of atoms, `all`, or `none`.
    #[arg(long, conflicts_with_all = ["strong", "uniform", "ordinary", "rel_strong", "rel_uniform"])]
    pub bodies: Option<String>,

    /// Strong equivalence: H = B = U.
    #[arg(long, conflicts_with_all = ["uniform", "ordinary", "rel_strong", "rel_uniform"])]
    pub strong: bool,

    /// Uniform equivalence: H = U, B = none.
    #[arg(long, conflicts_with_all = ["ordinary", "rel_strong", "rel_uniform"])]
    pub uniform: bool,

    /// Ordinary equivalence: H = none, B = U.
    #[arg(long, conflicts_with_all = ["rel_strong", "rel_uniform"])]
    pub ordinary: bool,

    /// Strong equivalence relative to this atom list: H = B = A.
    #[arg(long, value_name = "ATOMS", conflicts_with = "rel_uniform")]
    pub rel_strong: Option<String>,

    /// Uniform equivalence relative to this atom list: H = A, B = none.
    #[arg(long, value_name = "ATOMS")]
    pub rel_uniform: Option<String>,
}

impl AlphabetFlags {
    /// The effective `(H, B)` pair over the workspace universe.
    pub fn resolve(&self, ws: &mut Workspace) -> AlphabetPair {
        if self.uniform {
            return AlphabetPair::uniform(ws.universe);
        }
        if self.ordinary {
            return AlphabetPair::ordinary(ws.universe);
        }
        if let Some(list) = &self.rel_strong {
            let a = ws.resolve_atom_list("--rel-strong", list);
            return AlphabetPair::rel_strong(a);
        }
        if let Some(list) = &self.rel_uniform {
            let a = ws.resolve_atom_list("--rel-uniform", list);
            return AlphabetPair::rel_uniform(a);
        }
        if self.heads.is_none() && self.bodies.is_none() {
            return AlphabetPair::strong(ws.universe);
        }
        let heads = match &self.heads {
            Some(list) => ws.resolve_atom_list("--heads", list),
            None => ws.universe,
        };
        let bodies = match &self.bodies {
            Some(list) => ws.resolve_atom_list("--bodies", list),
            None => ws.universe,
        };
        AlphabetPair::new(heads, bodies)
    }
}
