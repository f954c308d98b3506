//! Command layer of the `hbeq` tool: program loading, alphabet flag
//! resolution, report construction and the four subcommands. The binary in
//! `main.rs` is a thin wrapper so that integration tests can drive the
//! commands in-process.

pub mod commands;
pub mod report;
pub mod workspace;

pub use commands::{
    run_check, run_lattice, run_models, run_reduce, CheckArgs, CommandError, LatticeArgs,
    ModelFamily, ModelsArgs, ReduceArgs,
};
pub use report::Report;
pub use workspace::{AlphabetFlags, Workspace};

/// Exit status contract: 0 = equivalent / success, 1 = counterexample
/// found, 2 = no verdict (usage, parse or internal error).
pub const EXIT_EQUIVALENT: i32 = 0;
pub const EXIT_NOT_EQUIVALENT: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

/// Enumeration budget: `HBEQ_BUDGET` overrides the library default.
pub fn budget_from_env() -> Result<u64, CommandError> {
    match std::env::var("HBEQ_BUDGET") {
        Ok(s) => s
            .trim()
            .parse::<u64>()
            .map_err(|_| CommandError::Usage(format!("HBEQ_BUDGET is not a number: `{s}`"))),
        Err(_) => Ok(hbeq_core::DEFAULT_ORACLE_BUDGET),
    }
}
