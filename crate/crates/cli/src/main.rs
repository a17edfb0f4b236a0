use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use ybh::{DimensionGuard, Error, FieldSpec, Result};

mod commands;

/// Braided algebras and their Yang-Baxter Hochschild cohomology, computed exactly.
#[derive(Parser, Debug)]
#[command(name = "ybh", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the axioms of an algebra document.
    Check {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Ranks and cohomology dimensions of the complex.
    Cohomology {
        file: PathBuf,
        /// 2 for H², 3 for H² and H³.
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(2..=3))]
        degree: u8,
        /// Also report the map into the complex of the braided multiplication.
        #[arg(long)]
        iota: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Verify stored deformation terms, or try to extend every basis 2-cocycle to second order.
    Deform {
        file: PathBuf,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Random 1-cochains used for the trivialization checks.
        #[arg(long, default_value_t = 10)]
        trials: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Build an algebra document from a catalog name or a construction file.
    Construct {
        /// Catalog name, e.g. z2_adjoint.
        #[arg(long, conflicts_with_all = ["recipe", "list"])]
        fixture: Option<String>,
        /// JSON construction such as {"kind": "heap", "group": {"table": [[0,1],[1,0]]}}.
        #[arg(long = "from", value_name = "FILE", conflicts_with = "list")]
        recipe: Option<PathBuf>,
        /// Print the catalog.
        #[arg(long)]
        list: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Seeded randomized suites over the catalog.
    Selftest {
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Coefficient field: q (rationals) or prime; defaults to the document's field.
    #[arg(long)]
    field: Option<String>,
    /// Prime modulus; implies --field prime.
    #[arg(long)]
    prime: Option<u64>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Largest dimension accepted by cohomology computations (overrides YBH_MAX_DIM).
    #[arg(long)]
    max_dim: Option<usize>,
    /// Lift every dimension guard.
    #[arg(long)]
    slow: bool,
}

impl Common {
    /// Explicit field choice, if any.
    fn field(&self) -> Result<Option<FieldSpec>> {
        match (self.field.as_deref(), self.prime) {
            (None, None) => Ok(None),
            (Some("q") | Some("Q") | Some("rational"), None) => Ok(Some(FieldSpec::Rational)),
            (Some("q") | Some("Q") | Some("rational"), Some(_)) => Err(Error::Input("--prime conflicts with --field q".into())),
            (None | Some("prime") | Some("p"), Some(p)) => Ok(Some(FieldSpec::prime(p)?)),
            (Some("prime") | Some("p"), None) => Err(Error::Input("--field prime needs --prime".into())),
            (Some(other), _) => match other.strip_prefix('F').or_else(|| other.strip_prefix("f")).map(str::parse::<u64>) {
                Some(Ok(p)) if self.prime.map_or(true, |q| q == p) => Ok(Some(FieldSpec::prime(p)?)),
                _ => Err(Error::Input(format!("unknown field {other:?}; use q, prime, or Fp"))),
            },
        }
    }

    fn guard(&self) -> Result<DimensionGuard> {
        if self.slow {
            return Ok(DimensionGuard::unlimited());
        }
        if let Some(n) = self.max_dim {
            return Ok(DimensionGuard::uniform(n));
        }
        match std::env::var("YBH_MAX_DIM") {
            Ok(v) => v
                .trim()
                .parse()
                .map(DimensionGuard::uniform)
                .map_err(|_| Error::Input(format!("YBH_MAX_DIM={v:?} is not a dimension"))),
            Err(_) => Ok(DimensionGuard::default()),
        }
    }
}

fn run(cli: Cli) -> Result<(String, bool, Option<PathBuf>)> {
    let (report, out) = match cli.command {
        Command::Check { file, common } => (commands::check(&file, common.field()?)?, common.out),
        Command::Cohomology { file, degree, iota, common } => {
            (commands::cohomology(&file, common.field()?, &common.guard()?, degree as usize, iota)?, common.out)
        }
        Command::Deform { file, seed, trials, common } => {
            (commands::deform(&file, common.field()?, &common.guard()?, seed, trials)?, common.out)
        }
        Command::Construct { fixture, recipe, list, common } => {
            let text = commands::construct(fixture.as_deref(), recipe.as_deref(), list, common.field()?)?;
            return Ok((text, true, common.out));
        }
        Command::Selftest { seed, trials, common } => {
            let field = common.field()?.unwrap_or(FieldSpec::Prime(101));
            (commands::selftest(field, &common.guard()?, seed, trials)?, common.out)
        }
    };
    Ok((report.to_canonical_json(), report.all_passed(), out))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let start = Instant::now();
    let result = run(cli).and_then(|(text, passed, out)| {
        match out {
            Some(path) => std::fs::write(path, &text)?,
            None => print!("{text}"),
        }
        Ok(passed)
    });
    eprintln!("elapsed: {:.3}s", start.elapsed().as_secs_f64());
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_check_failure() { 1 } else { 2 })
        }
    }
}
