//! The four subcommands. Each returns a [`Report`] plus the process exit
//! code, leaving printing to the binary.

use std::fmt;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::Args;

use hbeq_core::{
    answer_sets, decide_equivalence, equivalence_lattice_report, hb_models, oracle_equivalence,
    reduce_to_ordinary, rel_se_models, rel_ue_models, render_program, se_models, ue_models,
    AtomSet, DecisionError, ReductionMode,
};

use crate::report::{
    lattice_entries, AlphabetJson, ModelsJson, ReductionJson, Report, VerdictJson,
};
use crate::workspace::{AlphabetFlags, Workspace};
use crate::{budget_from_env, EXIT_EQUIVALENT, EXIT_NOT_EQUIVALENT};

#[derive(Debug)]
pub enum CommandError {
    Usage(String),
    Decision(DecisionError),
}

impl fmt::Display for CommandError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CommandError::Usage(msg) => write!(f, "{msg}"),
            CommandError::Decision(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CommandError {}

impl From<DecisionError> for CommandError {
    fn from(e: DecisionError) -> CommandError {
        CommandError::Decision(e)
    }
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    /// The two program files to compare.
    pub left: PathBuf,
    pub right: PathBuf,

    #[command(flatten)]
    pub alphabet: AlphabetFlags,

    /// Extra atoms to add to the universe (comma list).
    #[arg(long, value_name = "ATOMS")]
    pub universe: Option<String>,

    /// Decide by exhaustive unary-context enumeration instead of the
    /// characterization comparison.
    #[arg(long)]
    pub oracle: bool,

    /// Run both decision routes and fail on disagreement.
    #[arg(long, conflicts_with = "oracle")]
    pub verify: bool,
}

pub fn run_check(args: &CheckArgs) -> Result<(Report, i32), CommandError> {
    let start = Instant::now();
    let mut ws = Workspace::load(&[&args.left, &args.right], args.universe.as_deref())?;
    let ab = args.alphabet.resolve(&mut ws);
    let (p, q) = (ws.programs[0].clone(), ws.programs[1].clone());

    let verdict = if args.oracle {
        oracle_equivalence(&p, &q, ab, ws.universe, budget_from_env()?)?
    } else {
        let sigma = decide_equivalence(&p, &q, ab, ws.universe)?;
        if args.verify {
            let oracle = oracle_equivalence(&p, &q, ab, ws.universe, budget_from_env()?)?;
            if oracle.equivalent != sigma.equivalent {
                return Err(CommandError::Usage(format!(
                    "verification failed: characterization says {}, oracle says {}",
                    sigma.equivalent, oracle.equivalent
                )));
            }
        }
        sigma
    };

    let mut report = Report::new(
        "check",
        &[
            &args.left.display().to_string(),
            &args.right.display().to_string(),
        ],
        &ws,
    );
    report.alphabet = Some(AlphabetJson::new(&ws, ab));
    report.verdict = Some(VerdictJson::new(&ws, &verdict));
    report.warnings = ws.warnings.clone();
    report.timing_ms = start.elapsed().as_millis();
    let code = if verdict.equivalent {
        EXIT_EQUIVALENT
    } else {
        EXIT_NOT_EQUIVALENT
    };
    Ok((report, code))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum ModelFamily {
    /// General `<H,B>`-models for the selected alphabets.
    Hb,
    /// SE-models (strong equivalence).
    Se,
    /// UE-models (uniform equivalence).
    Ue,
    /// Relativized SE-models; alphabet from --alphabet.
    RelSe,
    /// Relativized UE-models; alphabet from --alphabet.
    RelUe,
    /// Answer sets.
    AnswerSets,
}

impl ModelFamily {
    fn as_str(self) -> &'static str {
        match self {
            ModelFamily::Hb => "hb",
            ModelFamily::Se => "se",
            ModelFamily::Ue => "ue",
            ModelFamily::RelSe => "rel-se",
            ModelFamily::RelUe => "rel-ue",
            ModelFamily::AnswerSets => "answer-sets",
        }
    }
}

#[derive(Args, Debug)]
pub struct ModelsArgs {
    /// The program file.
    pub program: PathBuf,

    /// Which characterization to emit.
    #[arg(long, value_enum, default_value = "hb")]
    pub family: ModelFamily,

    /// Relativization alphabet for rel-se / rel-ue (comma list).
    #[arg(long, value_name = "ATOMS")]
    pub alphabet: Option<String>,

    #[command(flatten)]
    pub hb_alphabet: AlphabetFlags,

    #[arg(long, value_name = "ATOMS")]
    pub universe: Option<String>,
}

pub fn run_models(args: &ModelsArgs) -> Result<(Report, i32), CommandError> {
    let start = Instant::now();
    let mut ws = Workspace::load(&[&args.program], args.universe.as_deref())?;
    let u = ws.universe;
    let program = ws.programs[0].clone();

    let rel_alphabet = |ws: &mut Workspace, args: &ModelsArgs| -> Result<AtomSet, CommandError> {
        let Some(list) = &args.alphabet else {
            return Err(CommandError::Usage(
                "this family needs --alphabet".to_string(),
            ));
        };
        let flags = AlphabetFlags {
            rel_strong: Some(list.clone()),
            ..Default::default()
        };
        Ok(flags.resolve(ws).heads)
    };

    let mut report = Report::new("models", &[&args.program.display().to_string()], &ws);
    let family_name = args.family.as_str();
    let models = match args.family {
        ModelFamily::Hb => {
            let ab = args.hb_alphabet.resolve(&mut ws);
            report.alphabet = Some(AlphabetJson::new(&ws, ab));
            ModelsJson::pairs(&ws, family_name, &hb_models(&program, ab, u))
        }
        ModelFamily::Se => ModelsJson::pairs(&ws, family_name, &se_models(&program, u)),
        ModelFamily::Ue => ModelsJson::pairs(&ws, family_name, &ue_models(&program, u)),
        ModelFamily::RelSe => {
            let a = rel_alphabet(&mut ws, args)?;
            ModelsJson::pairs(&ws, family_name, &rel_se_models(&program, a, u))
        }
        ModelFamily::RelUe => {
            let a = rel_alphabet(&mut ws, args)?;
            ModelsJson::pairs(&ws, family_name, &rel_ue_models(&program, a, u))
        }
        ModelFamily::AnswerSets => {
            let family = answer_sets(&program, u);
            let sets: Vec<AtomSet> = family.iter().collect();
            ModelsJson::sets(&ws, family_name, &sets)
        }
    };
    report.models = Some(models);
    report.warnings = ws.warnings.clone();
    report.timing_ms = start.elapsed().as_millis();
    Ok((report, EXIT_EQUIVALENT))
}

#[derive(Args, Debug)]
pub struct ReduceArgs {
    pub left: PathBuf,
    pub right: PathBuf,

    #[command(flatten)]
    pub alphabet: AlphabetFlags,

    #[arg(long, value_name = "ATOMS")]
    pub universe: Option<String>,

    /// Guess encoding: disjunctive selector facts or normal rules.
    #[arg(long, value_enum, default_value = "disjunctive")]
    pub mode: ReduceMode,

    /// Output path prefix; writes <prefix>.left.lp and <prefix>.right.lp.
    #[arg(long, short)]
    pub out: PathBuf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum ReduceMode {
    Disjunctive,
    Normal,
}

pub fn run_reduce(args: &ReduceArgs) -> Result<(Report, i32), CommandError> {
    let start = Instant::now();
    let mut ws = Workspace::load(&[&args.left, &args.right], args.universe.as_deref())?;
    let ab = args.alphabet.resolve(&mut ws);
    let mode = match args.mode {
        ReduceMode::Disjunctive => ReductionMode::Disjunctive,
        ReduceMode::Normal => ReductionMode::Normal,
    };
    let (p, q) = (ws.programs[0].clone(), ws.programs[1].clone());
    let out = reduce_to_ordinary(&p, &q, ab, &mut ws.symbols, mode)
        .map_err(|e| CommandError::Usage(format!("reduction failed: {e}")))?;

    let left_file = path_with_suffix(&args.out, "left.lp");
    let right_file = path_with_suffix(&args.out, "right.lp");
    std::fs::write(&left_file, render_program(&out.left, &ws.symbols))
        .map_err(|e| CommandError::Usage(format!("cannot write {}: {e}", left_file.display())))?;
    std::fs::write(&right_file, render_program(&out.right, &ws.symbols))
        .map_err(|e| CommandError::Usage(format!("cannot write {}: {e}", right_file.display())))?;

    let mut report = Report::new(
        "reduce",
        &[
            &args.left.display().to_string(),
            &args.right.display().to_string(),
        ],
        &ws,
    );
    report.alphabet = Some(AlphabetJson::new(&ws, ab));
    report.reduction = Some(ReductionJson {
        mode: out.mode.as_str().to_string(),
        fresh: ws.names(out.fresh),
        left_file: left_file.display().to_string(),
        right_file: right_file.display().to_string(),
    });
    report.warnings = ws.warnings.clone();
    report.timing_ms = start.elapsed().as_millis();
    Ok((report, EXIT_EQUIVALENT))
}

fn path_with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut name = prefix
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_default();
    if !name.is_empty() {
        name.push('.');
    }
    name.push_str(suffix);
    prefix.with_file_name(name)
}

#[derive(Args, Debug)]
pub struct LatticeArgs {
    pub left: PathBuf,
    pub right: PathBuf,

    #[arg(long, value_name = "ATOMS")]
    pub universe: Option<String>,
}

pub fn run_lattice(args: &LatticeArgs) -> Result<(Report, i32), CommandError> {
    let start = Instant::now();
    let ws = Workspace::load(&[&args.left, &args.right], args.universe.as_deref())?;
    let lattice = equivalence_lattice_report(
        &ws.programs[0],
        &ws.programs[1],
        ws.universe,
        budget_from_env()?,
    )
    .map_err(|e| match e {
        DecisionError::BudgetExceeded { required, budget } => CommandError::Usage(format!(
            "lattice sweep needs {required} decisions, over the budget of {budget}; \
                     shrink the universe or raise HBEQ_BUDGET"
        )),
        other => CommandError::Decision(other),
    })?;
    let mut report = Report::new(
        "lattice",
        &[
            &args.left.display().to_string(),
            &args.right.display().to_string(),
        ],
        &ws,
    );
    report.lattice = Some(lattice_entries(&ws, &lattice));
    report.warnings = ws.warnings.clone();
    report.timing_ms = start.elapsed().as_millis();
    Ok((report, EXIT_EQUIVALENT))
}
