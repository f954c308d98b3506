//! Machine-readable reports. The JSON layout is versioned via `schema_id`
//! and printed with sorted keys so diffs stay stable.

use serde::Serialize;

use hbeq_core::{
    render_program, AtomSet, Characterization, ContainmentDirection, Counterexample,
    CounterexampleSide, LatticeReport, Verdict, Witness,
};

use crate::workspace::Workspace;

pub const SCHEMA_ID: &str = "hbeq-report/1";

#[derive(Serialize, Clone, Debug)]
pub struct Report {
    pub schema_id: &'static str,
    pub command: String,
    pub inputs: Vec<String>,
    pub universe: Vec<String>,
    pub alphabet: Option<AlphabetJson>,
    pub verdict: Option<VerdictJson>,
    pub models: Option<ModelsJson>,
    pub reduction: Option<ReductionJson>,
    pub lattice: Option<Vec<LatticeEntryJson>>,
    pub warnings: Vec<String>,
    pub timing_ms: u128,
}

impl Report {
    pub fn new(command: &str, inputs: &[&str], ws: &Workspace) -> Report {
        Report {
            schema_id: SCHEMA_ID,
            command: command.to_string(),
            inputs: inputs.iter().map(|s| s.to_string()).collect(),
            universe: ws.names(ws.universe),
            alphabet: None,
            verdict: None,
            models: None,
            reduction: None,
            lattice: None,
            warnings: Vec::new(),
            timing_ms: 0,
        }
    }

    /// Pretty JSON with keys sorted (serde_json maps are ordered).
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        serde_json::to_string_pretty(&value).expect("value prints")
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct AlphabetJson {
    pub heads: Vec<String>,
    pub bodies: Vec<String>,
}

impl AlphabetJson {
    pub fn new(ws: &Workspace, ab: hbeq_core::AlphabetPair) -> AlphabetJson {
        AlphabetJson {
            heads: ws.names(ab.heads),
            bodies: ws.names(ab.bodies),
        }
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct VerdictJson {
    pub equivalent: bool,
    pub method: String,
    pub witness: Option<WitnessJson>,
    pub counterexample: Option<CounterexampleJson>,
}

impl VerdictJson {
    pub fn new(ws: &Workspace, verdict: &Verdict) -> VerdictJson {
        VerdictJson {
            equivalent: verdict.equivalent,
            method: verdict.method.as_str().to_string(),
            witness: verdict.witness.as_ref().map(|w| WitnessJson::new(ws, w)),
            counterexample: verdict
                .counterexample
                .as_ref()
                .map(|c| CounterexampleJson::new(ws, c)),
        }
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct WitnessJson {
    pub x: Vec<String>,
    pub y: Vec<String>,
    pub refutes: String,
}

impl WitnessJson {
    pub fn new(ws: &Workspace, w: &Witness) -> WitnessJson {
        WitnessJson {
            x: ws.names(w.x),
            y: ws.names(w.y),
            refutes: match w.direction {
                ContainmentDirection::LeftInRight => "left-in-right".to_string(),
                ContainmentDirection::RightInLeft => "right-in-left".to_string(),
            },
        }
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct CounterexampleJson {
    /// The separating unary context, in the program grammar.
    pub program: String,
    pub distinguishing: Vec<String>,
    /// Side whose answer sets keep `distinguishing`: "left" or "right".
    pub side: String,
}

impl CounterexampleJson {
    pub fn new(ws: &Workspace, cex: &Counterexample) -> CounterexampleJson {
        CounterexampleJson {
            program: render_program(&cex.context, &ws.symbols),
            distinguishing: ws.names(cex.distinguishing),
            side: match cex.side {
                CounterexampleSide::Left => "left".to_string(),
                CounterexampleSide::Right => "right".to_string(),
            },
        }
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct ModelsJson {
    pub family: String,
    pub pairs: Option<Vec<PairJson>>,
    pub sets: Option<Vec<Vec<String>>>,
}

impl ModelsJson {
    pub fn pairs(ws: &Workspace, family: &str, c: &Characterization) -> ModelsJson {
        ModelsJson {
            family: family.to_string(),
            pairs: Some(
                c.iter()
                    .map(|p| PairJson {
                        x: ws.names(p.x),
                        y: ws.names(p.y),
                        total: p.is_total(),
                    })
                    .collect(),
            ),
            sets: None,
        }
    }

    pub fn sets(ws: &Workspace, family: &str, sets: &[AtomSet]) -> ModelsJson {
        ModelsJson {
            family: family.to_string(),
            pairs: None,
            sets: Some(sets.iter().map(|&s| ws.names(s)).collect()),
        }
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct PairJson {
    pub x: Vec<String>,
    pub y: Vec<String>,
    pub total: bool,
}

#[derive(Serialize, Clone, Debug)]
pub struct ReductionJson {
    pub mode: String,
    pub fresh: Vec<String>,
    pub left_file: String,
    pub right_file: String,
}

#[derive(Serialize, Clone, Debug)]
pub struct LatticeEntryJson {
    pub heads: Vec<String>,
    pub bodies: Vec<String>,
    pub equivalent: bool,
    pub corner: Option<String>,
}

pub fn lattice_entries(ws: &Workspace, report: &LatticeReport) -> Vec<LatticeEntryJson> {
    let u = report.universe;
    report
        .entries()
        .iter()
        .map(|&(ab, equivalent)| {
            let corner = if ab.heads == u && ab.bodies == u {
                Some("strong".to_string())
            } else if ab.heads == u && ab.bodies.is_empty() {
                Some("uniform".to_string())
            } else if ab.heads.is_empty() && ab.bodies == u {
                Some("ordinary".to_string())
            } else if ab.heads.is_empty() && ab.bodies.is_empty() {
                Some("empty-context".to_string())
            } else {
                None
            };
            LatticeEntryJson {
                heads: ws.names(ab.heads),
                bodies: ws.names(ab.bodies),
                equivalent,
                corner,
            }
        })
        .collect()
}
