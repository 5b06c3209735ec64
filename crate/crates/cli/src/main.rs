use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use orbicover_core::exact::{BigRational, ProjectivePoint};
use orbicover_core::geometry::{MarkedPoints, DEFAULT_SEED};
use orbicover_core::groups::{GroupSpec, MixedConvention};
use orbicover_core::report::{
    any_mismatch, cmd_classify, cmd_conjecture, cmd_curve, cmd_discriminant, cmd_euler, cmd_order,
    sort_reports, table1_rows, ConventionChoice, Report,
};
use orbicover_core::weight::{parse_weights, Weight};

// an alias keeps clap from treating the list as repeated arguments
type Weights = Vec<Weight>;

#[derive(Parser, Debug)]
#[command(name = "orbicover", version, about = "Recompute and check orders, degrees and censuses exactly")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Print a JSON array instead of text lines.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for every sampled point.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Coset limit per enumeration.
    #[arg(long, global = true, default_value_t = 2_000_000)]
    max_cosets: usize,
    /// Whether tau_0 takes part in the mixed relations.
    #[arg(long = "mixed-tau0", global = true, default_value = "off", value_parser = ConventionChoice::from_str)]
    mixed_tau0: ConventionChoice,
    /// Line coefficients `a,b,c` for the curve census.
    #[arg(long, global = true, value_parser = parse_coeffs)]
    coeffs: Option<(BigRational, BigRational, BigRational)>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Orders of the braid-group table and its parametrized families.
    Table1,
    /// Degree and sampled incidence of the lifted discriminant.
    Discriminant {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        b: u32,
        /// Marked points `x:y,x:y,...`, n + 1 of them.
        #[arg(long, value_parser = parse_points)]
        qs: Option<MarkedPoints>,
    },
    /// Euler number, covering degree and universal cover.
    Euler {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        b: u64,
    },
    /// Singularity census of the curve L^(r/s).
    Curve {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        s: u64,
    },
    /// Uniformization type of P^1 with the given branch weights.
    Classify {
        /// Comma-separated weights, `inf` allowed.
        #[arg(value_parser = parse_weight_list)]
        weights: Weights,
    },
    /// Finiteness prediction for B_n(a, b_0, ..., b_m) against enumeration.
    Conjecture {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        a: Weight,
        #[arg(long, value_parser = parse_weight_list)]
        bs: Weights,
    },
    /// Order of a group such as `T(2,3,5)` or `B(n=3; a=4; b=[inf])`.
    Order {
        spec: GroupSpec,
    },
}

fn parse_weight_list(s: &str) -> Result<Vec<Weight>, String> {
    parse_weights(s).map_err(|e| e.to_string())
}

fn parse_coeffs(s: &str) -> Result<(BigRational, BigRational, BigRational), String> {
    let parts: Vec<BigRational> = s
        .split(',')
        .map(|t| t.trim().parse::<BigRational>().map_err(|e| format!("{t:?}: {e}")))
        .collect::<Result<_, _>>()?;
    match <[BigRational; 3]>::try_from(parts) {
        Ok([a, b, c]) => Ok((a, b, c)),
        Err(v) => Err(format!("expected three coefficients, got {}", v.len())),
    }
}

fn parse_points(s: &str) -> Result<MarkedPoints, String> {
    let points = s
        .split(',')
        .map(|p| {
            let (x, y) = p.split_once(':').ok_or_else(|| format!("{p:?} is not x:y"))?;
            let coords = [x, y]
                .iter()
                .map(|t| t.trim().parse::<BigRational>().map_err(|e| format!("{t:?}: {e}")))
                .collect::<Result<Vec<_>, _>>()?;
            ProjectivePoint::new(coords).map_err(|e| e.to_string())
        })
        .collect::<Result<Vec<_>, _>>()?;
    MarkedPoints::new(points).map_err(|e| e.to_string())
}

fn table1(choice: ConventionChoice, max_cosets: usize) -> Vec<Report> {
    let rows = table1_rows(choice);
    let mut reports: Vec<Report> = rows.par_iter().map(|r| r.evaluate(max_cosets)).collect();
    sort_reports(&mut reports);
    reports
}

fn run(cli: Cli) -> Result<Vec<Report>, String> {
    let g = &cli.global;
    let err = |e: orbicover_core::report::CommandError| e.to_string();
    // commands without a table default to the printed convention
    let convention = match g.mixed_tau0 {
        ConventionChoice::On => MixedConvention::FromZero,
        _ => MixedConvention::FromOne,
    };
    let reports = match cli.command {
        Command::Table1 => table1(g.mixed_tau0, g.max_cosets),
        Command::Discriminant { n, b, qs } => cmd_discriminant(n, b, qs, g.seed).map_err(err)?,
        Command::Euler { n, b } => cmd_euler(n, b).map_err(err)?,
        Command::Curve { r, s } => cmd_curve(r, s, g.coeffs.clone()).map_err(err)?,
        Command::Classify { weights } => vec![cmd_classify(&weights).map_err(err)?],
        Command::Conjecture { n, a, bs } => vec![cmd_conjecture(n, a, &bs, convention, g.max_cosets).map_err(err)?],
        Command::Order { spec } => {
            let conventions = if spec.depends_on_convention() {
                g.mixed_tau0.conventions()
            } else {
                vec![MixedConvention::FromOne]
            };
            conventions
                .into_par_iter()
                .map(|c| cmd_order(&spec, c, g.max_cosets))
                .collect::<Result<Vec<_>, _>>()
                .map_err(err)?
        }
    };
    let mut reports: Vec<Report> = reports.into_iter().map(|r| r.with_seed(g.seed)).collect();
    sort_reports(&mut reports);
    Ok(reports)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.global.json;
    let reports = match run(cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if json {
        println!("{}", serde_json::to_string_pretty(&reports).expect("reports serialize"));
    } else {
        for r in &reports {
            println!("{}", r.line());
        }
    }
    if any_mismatch(&reports) {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
