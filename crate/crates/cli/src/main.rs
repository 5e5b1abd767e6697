use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use latdeg::claims::{registry, Params};
use latdeg_cli::{
    atoms_up_to, cmd_degrees, cmd_verify, parse_claims, parse_specs, CliError, CmdOutput, Format,
};

#[derive(Parser, Debug)]
#[command(name = "latdeg", version)]
#[command(about = "Subgroup commutativity degrees of small finite groups")]
struct Cli {
    /// Largest group order accepted
    #[arg(long, global = true, env = "LATDEG_ORDER_CAP", default_value_t = latdeg::group::DEFAULT_ORDER_CAP)]
    order_cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write the report here instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print d, sd, ssd and ssd^(n) for each group
    Degrees {
        /// Group spec such as "D(3) x C(5)", or a range "D(1)..D(20)"
        #[arg(short, long = "group", alias = "specs", required = true)]
        group: Vec<String>,

        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
        n_max: u32,

        #[command(flatten)]
        output: Output,
    },
    /// Check the registered claims on each group
    Verify {
        #[arg(short, long = "group", alias = "specs")]
        group: Vec<String>,

        /// Every family atom of order at most this
        #[arg(long)]
        all_up_to: Option<u64>,

        /// Comma-separated claim ids, e.g. C2,C13
        #[arg(long)]
        claims: Option<String>,

        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
        n_max: u32,

        #[command(flatten)]
        output: Output,
    },
    /// List the claim registry
    Claims,
}

fn run(cli: Cli) -> Result<(CmdOutput, Option<PathBuf>), CliError> {
    latdeg::group::set_order_cap(cli.order_cap);
    match cli.command {
        Command::Degrees { group, n_max, output } => {
            let specs = parse_specs(&group)?;
            Ok((cmd_degrees(&specs, n_max as usize, output.format)?, output.out))
        }
        Command::Verify { group, all_up_to, claims, n_max, output } => {
            let mut specs = parse_specs(&group)?;
            if let Some(max) = all_up_to {
                if max > cli.order_cap as u64 {
                    return Err(latdeg::Error::OrderCapExceeded {
                        order: max as u128,
                        cap: cli.order_cap,
                    }
                    .into());
                }
                specs.extend(atoms_up_to(max));
            }
            let claims = claims.as_deref().map(parse_claims).transpose()?;
            let params = Params { n_max: n_max as usize, ..Params::default() };
            Ok((cmd_verify(&specs, claims.as_deref(), &params, output.format)?, output.out))
        }
        Command::Claims => {
            let mut text = String::new();
            for c in registry() {
                text.push_str(&format!(
                    "{}\t{}\t{}\n\t{}\n\tapplies to: {}\n",
                    c.id,
                    c.kind.as_str(),
                    c.description,
                    c.statement,
                    c.applicability
                ));
            }
            Ok((CmdOutput { code: 0, text }, None))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(cli).and_then(|(out, path)| {
        match path {
            Some(p) => std::fs::write(p, &out.text)?,
            None => print!("{}", out.text),
        }
        Ok(out.code)
    });
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
