//! `tilecensus` command-line front end.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tilecensus::{FaceDegree, Schlafli};

use crate::output::Format;

/// Exact vertex census of regular tessellations {p,q}.
#[derive(Debug, Parser)]
#[command(name = "tilecensus", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the reduced generating function V(z) = P(z)/Q(z).
    Genfunc {
        #[command(flatten)]
        symbol: SymbolArgs,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
    },
    /// Print v(0..=N), optionally with the type counts a, b, c.
    Census {
        #[command(flatten)]
        symbol: SymbolArgs,
        /// Last generation to print.
        #[arg(default_value_t = 20)]
        n: usize,
        #[arg(long)]
        types: bool,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
    },
    /// Build an explicit map and compare its census with the series.
    Verify {
        #[command(flatten)]
        symbol: SymbolArgs,
        /// Generations that must be fully saturated.
        #[arg(long, default_value_t = 6)]
        depth: usize,
        /// Maximum number of map vertices.
        #[arg(long, env = "TILECENSUS_BUDGET", default_value_t = tilecensus::oracle::DEFAULT_VERTEX_BUDGET)]
        budget: usize,
        /// Write the map in the line-oriented adjacency format.
        #[arg(long, value_name = "FILE")]
        dump_map: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
    },
    /// Growth rate and amplitude of v(n).
    Asym {
        #[command(flatten)]
        symbol: SymbolArgs,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
    },
}

#[derive(Debug, Args)]
struct SymbolArgs {
    /// Face degree: an integer >= 3, or "inf" for the tree.
    #[arg(value_parser = parse_face_degree)]
    p: FaceDegree,
    /// Vertex degree, at least 3.
    q: u32,
}

impl SymbolArgs {
    fn symbol(&self) -> Result<Schlafli, tilecensus::SymbolError> {
        Schlafli::new(self.p, self.q)
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Plain,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
            FormatArg::Plain => Format::Plain,
        }
    }
}

fn parse_face_degree(s: &str) -> Result<FaceDegree, String> {
    s.parse::<FaceDegree>().map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(commands::EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let code = match cli.command {
        Command::Genfunc { symbol, format } => commands::genfunc(symbol.symbol(), format.into()),
        Command::Census {
            symbol,
            n,
            types,
            format,
        } => commands::census(symbol.symbol(), n, types, format.into()),
        Command::Verify {
            symbol,
            depth,
            budget,
            dump_map,
            format,
        } => commands::verify(
            symbol.symbol(),
            depth,
            budget,
            dump_map.as_deref(),
            format.into(),
        ),
        Command::Asym { symbol, format } => commands::asym(symbol.symbol(), format.into()),
    };
    ExitCode::from(code)
}
