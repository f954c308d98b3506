use clap::{Parser, Subcommand};

use hbeq::{
    run_check, run_lattice, run_models, run_reduce, CheckArgs, LatticeArgs, ModelsArgs, ReduceArgs,
    Report, EXIT_ERROR,
};

/// Decide head/body-parameterized equivalence of answer-set programs.
#[derive(Parser)]
#[command(name = "hbeq", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit the JSON report instead of human-readable output.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether two programs are equivalent for the chosen alphabets.
    /// Exits 0 when equivalent, 1 with a counterexample when not.
    Check(CheckArgs),
    /// Print a semantic characterization of one program.
    Models(ModelsArgs),
    /// Compile the equivalence problem into an ordinary-equivalence problem.
    Reduce(ReduceArgs),
    /// Sweep every alphabet pair over the universe and tabulate verdicts.
    Lattice(LatticeArgs),
}

fn main() {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Check(args) => run_check(args),
        Command::Models(args) => run_models(args),
        Command::Reduce(args) => run_reduce(args),
        Command::Lattice(args) => run_lattice(args),
    };
    match result {
        Ok((report, code)) => {
            for warning in &report.warnings {
                eprintln!("warning: {warning}");
            }
            if cli.json {
                println!("{}", report.to_json());
            } else {
                print_human(&report);
            }
            std::process::exit(code);
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(EXIT_ERROR);
        }
    }
}

fn set_text(names: &[String]) -> String {
    format!("{{{}}}", names.join(", "))
}

fn print_human(report: &Report) {
    println!("command: {} ({})", report.command, report.inputs.join(", "));
    println!("universe: {}", set_text(&report.universe));
    if let Some(ab) = &report.alphabet {
        println!(
            "alphabet: H = {}, B = {}",
            set_text(&ab.heads),
            set_text(&ab.bodies)
        );
    }
    if let Some(v) = &report.verdict {
        let tag = if v.equivalent {
            "equivalent"
        } else {
            "NOT equivalent"
        };
        println!("verdict: {tag} ({}, {} ms)", v.method, report.timing_ms);
        if let Some(w) = &v.witness {
            println!(
                "witness: ({}, {}) refuting {}",
                set_text(&w.x),
                set_text(&w.y),
                w.refutes
            );
        }
        if let Some(c) = &v.counterexample {
            println!(
                "counterexample context (side {} keeps {}):",
                c.side,
                set_text(&c.distinguishing)
            );
            print!("{}", c.program);
        }
    }
    if let Some(m) = &report.models {
        println!("family: {}", m.family);
        if let Some(pairs) = &m.pairs {
            println!("pairs: {}", pairs.len());
            for p in pairs {
                println!("  ({}, {})", set_text(&p.x), set_text(&p.y));
            }
        }
        if let Some(sets) = &m.sets {
            println!("sets: {}", sets.len());
            for s in sets {
                println!("  {}", set_text(s));
            }
        }
    }
    if let Some(r) = &report.reduction {
        println!("mode: {}", r.mode);
        println!("fresh atoms: {}", set_text(&r.fresh));
        println!("wrote: {}", r.left_file);
        println!("wrote: {}", r.right_file);
    }
    if let Some(entries) = &report.lattice {
        println!("lattice ({} alphabet pairs):", entries.len());
        for e in entries {
            let corner = e
                .corner
                .as_ref()
                .map(|c| format!("  [{c}]"))
                .unwrap_or_default();
            println!(
                "  H = {:<16} B = {:<16} {}{}",
                set_text(&e.heads),
                set_text(&e.bodies),
                if e.equivalent { "yes" } else { "no " },
                corner
            );
        }
    }
}
