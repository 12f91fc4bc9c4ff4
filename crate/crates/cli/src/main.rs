use std::io::{self, BufRead, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use pfister::oracles::SearchBudget;
use pfq::{parse, run, Options, Session};

#[derive(Parser)]
#[command(name = "pfq", version, about = "Linked Pfister forms: oracles, linkage and the linkage invariant")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct Common {
    /// Write the JSON report here instead of standard output.
    #[arg(long)]
    json: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest total degree tried by characteristic-2 searches.
    #[arg(long)]
    search_degree: Option<u32>,
    /// Largest coefficient height tried by enumerations.
    #[arg(long)]
    search_height: Option<u32>,
    /// Candidate vectors tried before giving up.
    #[arg(long)]
    search_max: Option<u64>,
}

impl Common {
    fn options(&self) -> Result<Options, String> {
        let d = SearchBudget::default();
        let budget = SearchBudget {
            max_total_degree: self.search_degree.unwrap_or(d.max_total_degree),
            max_coeff_height: self.search_height.unwrap_or(d.max_coeff_height),
            max_candidates: self.search_max.unwrap_or(d.max_candidates),
        };
        budget.validate().map_err(|e| e.to_string())?;
        Ok(Options { budget, seed: self.seed })
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a scenario script.
    Run {
        file: String,
        #[command(flatten)]
        common: Common,
    },
    /// Read statements interactively.
    Repl {
        #[command(flatten)]
        common: Common,
    },
    /// Run a randomized verification suite.
    Verify {
        /// inseparable-trivial, inseparable-converse, sqrt-minus-one-trivial,
        /// invariance, separable-witness or inseparable-dims
        suite: String,
        #[arg(long)]
        field: String,
        /// Extra `key=value` parameters, e.g. `count=25 k=1,2`.
        params: Vec<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Linkage invariant of presentations sharing their last k slots.
    Invariant {
        #[arg(long)]
        field: String,
        k: usize,
        #[arg(required = true, num_args = 2..)]
        presentations: Vec<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Whether two presentations sharing k slots share k+1.
    LinkedSep {
        #[arg(long)]
        field: String,
        k: usize,
        p1: String,
        p2: String,
        #[command(flatten)]
        common: Common,
    },
    /// Characteristic 2: whether two presentations share a bilinear k-fold factor.
    LinkedInsep {
        #[arg(long)]
        field: String,
        k: usize,
        p1: String,
        p2: String,
        #[command(flatten)]
        common: Common,
    },
    /// Vector orthogonal to two subspaces, with gamma = -psi(v).
    ChainStep {
        #[arg(long)]
        field: String,
        psi: String,
        /// e.g. `span(e1, e2)`
        v1: String,
        v2: String,
        /// Factor to enlarge by gamma and compare with psi.
        #[arg(long)]
        factor: Option<String>,
        #[command(flatten)]
        common: Common,
    },
}

fn emit(report: &pfq::Report, common: &Common) -> io::Result<()> {
    let text = serde_json::to_string_pretty(&report.to_json()).expect("report serializes");
    match &common.json {
        Some(path) => std::fs::write(path, text + "\n"),
        None => writeln!(io::stdout(), "{text}"),
    }
}

fn run_text(text: &str, common: &Common) -> ExitCode {
    let opts = match common.options() {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let script = match parse(text) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let report = run(&script, &opts);
    if let Err(e) = emit(&report, common) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(report.exit_code() as u8)
}

fn repl(common: &Common) -> ExitCode {
    let opts = match common.options() {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let mut session = Session::new(opts);
    let stdin = io::stdin();
    let mut failed = false;
    for (i, line) in stdin.lock().lines().enumerate() {
        let Ok(line) = line else { break };
        match session.line(i + 1, &line) {
            Ok(Some(r)) => {
                failed |= !r.ok;
                println!("{}", r.to_json());
            }
            Ok(None) => {}
            Err(e) => eprintln!("error: {e}"),
        }
        let _ = io::stdout().flush();
    }
    ExitCode::from(u8::from(failed))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Run { file, common } => match std::fs::read_to_string(&file) {
            Ok(text) => run_text(&text, &common),
            Err(e) => {
                eprintln!("error: {file}: {e}");
                ExitCode::from(2)
            }
        },
        Cmd::Repl { common } => repl(&common),
        Cmd::Verify { suite, field, params, common } => {
            run_text(&format!("field F = {field}\nverify {suite} {} over F\n", params.join(" ")), &common)
        }
        Cmd::Invariant { field, k, presentations, common } => {
            run_text(&format!("field F = {field}\ninvariant {k} {} over F\n", presentations.join(", ")), &common)
        }
        Cmd::LinkedSep { field, k, p1, p2, common } => {
            run_text(&format!("field F = {field}\nlinked-sep {k} {p1}, {p2} over F\n"), &common)
        }
        Cmd::LinkedInsep { field, k, p1, p2, common } => {
            run_text(&format!("field F = {field}\nlinked-insep {k} {p1}, {p2} over F\n"), &common)
        }
        Cmd::ChainStep { field, psi, v1, v2, factor, common } => {
            let factor = factor.map(|f| format!(" factor {f}")).unwrap_or_default();
            run_text(&format!("field F = {field}\nchain-step {psi} {v1} {v2}{factor} over F\n"), &common)
        }
    }
}
