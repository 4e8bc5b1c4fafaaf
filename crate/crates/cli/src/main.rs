use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use p4bound::bounds::GenusFloor;
use p4bound::certifier::{Activation, CertifierOptions, S4Cap, WMode};
use p4bound::gin::MonomialIdeal;

mod commands;
mod report;

use report::{render, Format};

/// Exact certificates for the degree bound of smooth surfaces in P^4 that are
/// not of general type.
#[derive(Debug, Parser)]
#[command(name = "p4bound", version)]
struct Cli {
    /// Output format
    #[arg(long, value_enum, global = true, default_value = "human")]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Per-s bounds and the overall theorem bound
    Table,
    /// Scan degrees downward until a configuration is feasible
    Scan {
        #[arg(long)]
        s: i64,
        /// Highest degree scanned (default depends on s)
        #[arg(long)]
        dmax: Option<i64>,
        /// Lowest degree scanned (default: first constrained degree)
        #[arg(long)]
        dmin: Option<i64>,
        #[command(flatten)]
        opts: OptionArgs,
    },
    /// List connected invariants of degree d with s parts
    Configs {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        s: i64,
    },
    /// Certify one configuration
    Check {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        s: i64,
        /// Comma-separated parts, largest first
        #[arg(
            long,
            value_delimiter = ',',
            required = true,
            allow_hyphen_values = true
        )]
        lambda: Vec<i64>,
        #[command(flatten)]
        opts: OptionArgs,
    },
    /// The cubic bound from the first estimate, or its value at one degree
    Eq7 {
        #[arg(long)]
        s: i64,
        #[arg(long)]
        d: Option<i64>,
    },
    /// Caps on the genus defect
    Gamma {
        #[arg(long)]
        s: i64,
        #[arg(long)]
        d: i64,
    },
    /// Largest degree allowing a plane curve of degree above d/2
    Lemma6 {
        #[arg(long)]
        s: i64,
    },
    /// Degree threshold for surfaces on no hypersurface of degree < sigma
    Ep {
        #[arg(long)]
        sigma: i64,
    },
    /// Monomial-ideal oracle
    Gin {
        #[command(subcommand)]
        command: GinCommand,
    },
}

#[derive(Debug, Subcommand)]
enum GinCommand {
    /// Sporadic zeros, saturation and genus of one ideal
    Sporadic {
        /// Generators such as "x0^2, x0*x1, x1^3, x0*x2^3"
        #[arg(long, value_parser = parse_ideal)]
        ideal: MonomialIdeal,
    },
    /// Random lifted staircase ideals checked against the genus formula
    Oracle {
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum WArg {
    Greedy,
    CaseFormula,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FloorArg {
    Strict,
    Rounded,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ActivationArg {
    PerS,
    Uniform50,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum S4CapArg {
    Derived,
    Printed,
}

/// Interpretation switches; the defaults are the certified settings.
#[derive(Debug, Args)]
struct OptionArgs {
    #[arg(long, value_enum, default_value = "greedy")]
    w_mode: WArg,
    #[arg(long, value_enum, default_value = "strict")]
    genus_floor: FloorArg,
    #[arg(long, value_enum, default_value = "per-s")]
    activation: ActivationArg,
    #[arg(long, value_enum, default_value = "derived")]
    s4_cap: S4CapArg,
}

impl OptionArgs {
    fn options(&self) -> CertifierOptions {
        CertifierOptions::certified()
            .with_w_mode(match self.w_mode {
                WArg::Greedy => WMode::Greedy,
                WArg::CaseFormula => WMode::CaseFormula,
            })
            .with_genus_floor(match self.genus_floor {
                FloorArg::Strict => GenusFloor::Strict,
                FloorArg::Rounded => GenusFloor::Rounded,
            })
            .with_activation(match self.activation {
                ActivationArg::PerS => Activation::PerS,
                ActivationArg::Uniform50 => Activation::Uniform50,
            })
            .with_s4_cap(match self.s4_cap {
                S4CapArg::Derived => S4Cap::Derived,
                S4CapArg::Printed => S4Cap::PrintedConstant,
            })
    }
}

fn parse_ideal(text: &str) -> Result<MonomialIdeal, String> {
    text.parse().map_err(|e: p4bound::Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Table => commands::table(),
        Command::Scan {
            s,
            dmax,
            dmin,
            opts,
        } => commands::scan(s, dmax, dmin, &opts.options()),
        Command::Configs { d, s } => commands::configs(d, s),
        Command::Check { d, s, lambda, opts } => commands::check(d, s, &lambda, &opts.options()),
        Command::Eq7 { s, d } => commands::eq7(s, d),
        Command::Gamma { s, d } => commands::gamma(s, d),
        Command::Lemma6 { s } => commands::lemma6(s),
        Command::Ep { sigma } => commands::ep(sigma),
        Command::Gin { command } => match command {
            GinCommand::Sporadic { ideal } => commands::gin_sporadic(&ideal),
            GinCommand::Oracle { trials, seed } => commands::gin_oracle(trials, seed),
        },
    };
    match result {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(render(&outcome.report, cli.format).as_bytes())
                .is_err()
            {
                return ExitCode::from(1);
            }
            ExitCode::from(outcome.exit)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}
