use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use thetacalc::lie::set_dim_cap;
use thetacalc::report::{self, Report};
use thetacalc::Error;

#[derive(Parser)]
#[command(name = "thetacalc", version, about = "Representation-theoretic bookkeeping for genus-4 theta divisors")]
struct Cli {
    /// Print the canonical JSON document instead of the text rendering.
    #[arg(long, global = true)]
    json: bool,

    /// Compare the JSON output against `<DIR>/<command>.json`.
    #[arg(long, global = true, value_name = "DIR")]
    golden_dir: Option<PathBuf>,

    /// Refuse intermediate representations larger than this.
    #[arg(long, global = true, value_name = "N")]
    dim_cap: Option<u64>,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Hypercohomology of δ_± on a generic ppav of dimension 4.
    Table1,
    /// Hypercohomology of δ_{5,1}, δ_{4,2}, δ_{3,3} on a Jacobian.
    Table2,
    /// Monodromy filtration diagrams of Ψ₁(δ) and Ψ₁(δ_±).
    Diagrams,
    /// Hodge numbers of Y = Θ ∩ Θ_x and Y⁺.
    Hodge,
    /// χ(δ_Θ) for a theta divisor with r ordinary double points.
    Euler {
        #[arg(short, long, default_value_t = 4)]
        g: usize,
        #[arg(short, long, default_value_t = 0)]
        r: u64,
    },
    /// Weyl dimension of an irreducible representation.
    Dim { group: String, weight: String },
    /// Tensor product of two representations, e.g. `1000+2*0000`.
    Tensor { group: String, a: String, b: String },
    /// Symmetric square of a representation.
    Sym2 { group: String, a: String },
    /// Alternating square of a representation.
    Alt2 { group: String, a: String },
    /// Monodromy filtration of a nilpotent matrix read from a JSON file.
    Nilfilt {
        file: PathBuf,
        #[arg(short, long, default_value_t = 0, allow_negative_numbers = true)]
        weight: i32,
    },
    /// Group and singularity data of a stratum (all strata without an id).
    Stratum { id: Option<String> },
}

impl Cmd {
    fn name(&self) -> &'static str {
        match self {
            Cmd::Table1 => "table1",
            Cmd::Table2 => "table2",
            Cmd::Diagrams => "diagrams",
            Cmd::Hodge => "hodge",
            Cmd::Euler { .. } => "euler",
            Cmd::Dim { .. } => "dim",
            Cmd::Tensor { .. } => "tensor",
            Cmd::Sym2 { .. } => "sym2",
            Cmd::Alt2 { .. } => "alt2",
            Cmd::Nilfilt { .. } => "nilfilt",
            Cmd::Stratum { .. } => "stratum",
        }
    }
}

enum Failure {
    Module(Error),
    Io(String),
    Golden(String),
}

fn run(cmd: &Cmd) -> Result<Report, Failure> {
    let r = match cmd {
        Cmd::Table1 => report::cmd_table1(),
        Cmd::Table2 => report::cmd_table2(),
        Cmd::Diagrams => report::cmd_diagrams(),
        Cmd::Hodge => report::cmd_hodge(),
        Cmd::Euler { g, r } => report::cmd_euler(*g, *r),
        Cmd::Dim { group, weight } => report::cmd_dim(group, weight),
        Cmd::Tensor { group, a, b } => report::cmd_tensor(group, a, b),
        Cmd::Sym2 { group, a } => report::cmd_sym2(group, a),
        Cmd::Alt2 { group, a } => report::cmd_alt2(group, a),
        Cmd::Nilfilt { file, weight } => {
            let text = std::fs::read_to_string(file).map_err(|e| Failure::Io(format!("{}: {e}", file.display())))?;
            report::cmd_nilfilt(&text, *weight)
        }
        Cmd::Stratum { id } => report::cmd_stratum(id.as_deref()),
    };
    r.map_err(Failure::Module)
}

fn line_diff(expected: &str, actual: &str) -> String {
    let (e, a): (Vec<&str>, Vec<&str>) = (expected.lines().collect(), actual.lines().collect());
    let mut out = String::new();
    for i in 0..e.len().max(a.len()) {
        let (x, y) = (e.get(i).copied(), a.get(i).copied());
        if x != y {
            out += &format!("line {}:\n  golden: {}\n  actual: {}\n", i + 1, x.unwrap_or("<none>"), y.unwrap_or("<none>"));
        }
    }
    out
}

fn check_golden(dir: &Path, name: &str, json: &str) -> Result<(), Failure> {
    let path = dir.join(format!("{name}.json"));
    let expected = std::fs::read_to_string(&path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    if expected != json {
        return Err(Failure::Golden(format!("output differs from {}\n{}", path.display(), line_diff(&expected, json))));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(cap) = cli.dim_cap {
        set_dim_cap(cap);
    }
    let outcome = run(&cli.cmd).and_then(|r| {
        let json = r.doc.to_canonical_json();
        if let Some(dir) = &cli.golden_dir {
            check_golden(dir, cli.cmd.name(), &json)?;
        }
        Ok(if cli.json { json } else { r.text })
    });
    match outcome {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Module(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_input_error() { 3 } else { 2 })
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Golden(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
