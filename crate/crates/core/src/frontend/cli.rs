//! The `lirr` command-line driver.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use super::render::{formula_infix, star_infix};
use super::smt::{parse_smt, Command};
use super::tsys::parse_tsys;
use crate::consequence::consequence;
use crate::error::{Error, Result};
use crate::invgen::{exp, star};
use crate::logic::Formula;
use crate::poly::{MonomialOrder, VarContext};
use crate::solver::{solve_ground, Model, Theory, Verdict};

#[derive(Parser, Debug)]
#[command(name = "lirr", version, about = "Satisfiability, consequences and loop summaries modulo LRR/LIRR")]
pub struct Cli {
    /// Log saturation, cutting-plane and blocking steps to stderr.
    #[arg(long, global = true)]
    pub trace: bool,
    /// Monomial order for printed results.
    #[arg(long, global = true, value_enum, default_value_t = OrderArg::Grevlex)]
    pub order: OrderArg,
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum OrderArg {
    Grevlex,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum TheoryArg {
    Lrr,
    Lirr,
}

impl From<TheoryArg> for Theory {
    fn from(t: TheoryArg) -> Theory {
        match t {
            TheoryArg::Lrr => Theory::Lrr,
            TheoryArg::Lirr => Theory::Lirr,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Run the commands of an SMT script (check-sat by default).
    Solve {
        file: PathBuf,
        /// Defaults to lirr when the script uses Int, lrr otherwise.
        #[arg(long, value_enum)]
        theory: Option<TheoryArg>,
    },
    /// Strongest conjunctive consequence of an SMT script's assertions.
    Conseq {
        file: PathBuf,
        /// Comma-separated variables to keep; all declared ones by default.
        #[arg(long, value_delimiter = ',')]
        vars: Vec<String>,
        #[arg(long, value_enum)]
        theory: Option<TheoryArg>,
    },
    /// Transitive-closure summary of a loop body.
    Star { file: PathBuf },
    /// Closed form of `t` iterations of a loop body.
    Exp {
        file: PathBuf,
        /// Name of the iteration counter.
        #[arg(long = "t", default_value = "t")]
        t: String,
    },
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn is_input_error(e: &Error) -> bool {
    matches!(
        e,
        Error::Parse { .. } | Error::Input(_) | Error::Quantifier | Error::IntAtomInLrr | Error::NotLinear(_)
    )
}

fn dump_model(m: &Model, ctx: &VarContext) -> String {
    let mut s = m.cone.dump(ctx);
    if let Some(b) = &m.lattice {
        let gens: Vec<String> = b.generators().iter().map(|g| g.render(ctx, &MonomialOrder::Grevlex)).collect();
        s.push_str(&format!("\nB = {{{}}}", gens.join(", ")));
    }
    s
}

fn pick_theory(flag: Option<TheoryArg>, auto: Theory) -> Theory {
    flag.map_or(auto, Theory::from)
}

fn solve_cmd(file: &Path, theory: Option<TheoryArg>, out: &mut dyn Write) -> Result<()> {
    let script = parse_smt(&read(file)?)?;
    let theory = pick_theory(theory, script.theory());
    let query = script.query();
    let mut commands = script.commands.clone();
    if commands.is_empty() {
        commands.push(Command::CheckSat);
    }
    let mut last = None;
    for c in &commands {
        match c {
            Command::CheckSat => {
                let v = solve_ground(&query, theory)?;
                let _ = writeln!(out, "{}", if v.is_sat() { "sat" } else { "unsat" });
                last = Some(v);
            }
            Command::GetModel => match &last {
                Some(Verdict::Sat(m)) => {
                    let _ = writeln!(out, "{}", dump_model(m, &script.ctx));
                }
                _ => return Err(Error::Input("get-model requires a preceding sat check-sat".into())),
            },
            Command::FindConsequences(vars) => {
                let c = consequence(&query, vars, theory)?;
                let _ = writeln!(out, "{}", c.dump(&script.ctx));
            }
        }
    }
    Ok(())
}

fn conseq_cmd(file: &Path, vars: &[String], theory: Option<TheoryArg>, out: &mut dyn Write) -> Result<()> {
    let script = parse_smt(&read(file)?)?;
    let theory = pick_theory(theory, script.theory());
    let keep = if vars.is_empty() {
        script.declared()
    } else {
        vars.iter()
            .map(|n| script.ctx.lookup(n).ok_or_else(|| Error::Input(format!("unknown variable `{n}`"))))
            .collect::<Result<Vec<_>>>()?
    };
    let c = consequence(&script.query(), &keep, theory)?;
    let _ = writeln!(out, "{}", c.dump(&script.ctx));
    Ok(())
}

fn star_cmd(file: &Path, out: &mut dyn Write) -> Result<()> {
    let mut script = parse_tsys(&read(file)?)?;
    let s = star(&script.tf, &mut script.ctx)?;
    let _ = writeln!(out, "{}", star_infix(&s, &script.ctx));
    for (i, a) in script.asserts.iter().enumerate() {
        let query = Formula::and([s.guarded(), Formula::not(a.clone())]);
        let holds = !solve_ground(&query, Theory::Lirr)?.is_sat();
        let _ = writeln!(out, "assert {}: {}", i + 1, if holds { "holds" } else { "unknown" });
    }
    Ok(())
}

fn exp_cmd(file: &Path, t: &str, out: &mut dyn Write) -> Result<()> {
    let mut script = parse_tsys(&read(file)?)?;
    if script.ctx.lookup(t).is_some() {
        return Err(Error::Input(format!("counter name `{t}` clashes with a program variable")));
    }
    let tv = script.ctx.var(t);
    let f = exp(&script.tf, tv, &mut script.ctx)?;
    let _ = writeln!(out, "{}", formula_infix(&f, &script.ctx));
    Ok(())
}

fn init_logging(trace: bool) {
    let level = if trace { "debug" } else { "off" };
    let _ = env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level))
        .target(env_logger::Target::Stderr)
        .try_init();
}

/// Parses `args` (including the program name) and runs the subcommand,
/// writing results to `out` and diagnostics to stderr. Returns the exit
/// status: 0 on success, 2 on usage or input errors, 1 otherwise.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    init_logging(cli.trace);
    let res = match &cli.cmd {
        Cmd::Solve { file, theory } => solve_cmd(file, *theory, out),
        Cmd::Conseq { file, vars, theory } => conseq_cmd(file, vars, *theory, out),
        Cmd::Star { file } => star_cmd(file, out),
        Cmd::Exp { file, t } => exp_cmd(file, t, out),
    };
    match res {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            if is_input_error(&e) {
                2
            } else {
                1
            }
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    run(std::env::args_os(), &mut std::io::stdout().lock())
}
