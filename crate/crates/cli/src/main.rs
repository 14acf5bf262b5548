//! `anyonkit` command-line front end.

mod compute;
mod document;
mod render;

use std::io::Write;
use std::process::ExitCode;

use anyonkit::group::DEFAULT_ORDER_CAP;
use anyonkit::Error;
use clap::{Args, Parser, Subcommand, ValueEnum};

use compute::{GroupSpec, Pipeline};
use document::{Analysis, OutputDocument};

#[derive(Parser)]
#[command(name = "anyonkit", version, about = "Anyon content of quantum doubles of finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List particles with flux, charge, spin and quantum dimension.
    Particles(Common),
    /// Character table of the group itself.
    Chartable(Common),
    /// Modular S matrix and spins.
    Smatrix(Common),
    /// Full fusion table.
    Fusion(Common),
    /// Fusion probabilities P(a b -> c).
    Prob {
        #[command(flatten)]
        common: Common,
        /// Restrict to this left particle.
        #[arg(long)]
        a: Option<String>,
        /// Restrict to this right particle.
        #[arg(long)]
        b: Option<String>,
        /// Print probabilities as decimals instead of fractions.
        #[arg(long)]
        decimal: bool,
    },
    /// Closed subsets of particles under fusion.
    Subsystems(Common),
    /// Relabelings that preserve the fusion table.
    Symmetries {
        #[command(flatten)]
        common: Common,
        /// Allow relabelings that change spins.
        #[arg(long)]
        dimension_only: bool,
    },
    /// The abelian Z/N theory: spins, self-dual particles, cross sections.
    Abelian {
        /// N.
        #[arg(long, short = 'n')]
        modulus: u32,
        /// Scattering pair `a,n:a',n'` (repeatable). Defaults to `1,0:0,1`.
        #[arg(long = "pair")]
        pairs: Vec<String>,
        /// Incoming momentum.
        #[arg(long, default_value_t = 1.0)]
        momentum: f64,
        /// Number of angles on the grid over (0, 2pi).
        #[arg(long, default_value_t = 12)]
        angles: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run every consistency check on the double.
    Verify(Common),
}

#[derive(Args, Clone)]
struct Common {
    /// Named group such as S3, A5, D4, Z6.
    #[arg(long, conflicts_with = "gens", required_unless_present = "gens")]
    group: Option<String>,
    /// Generators in cycle notation separated by `;`.
    #[arg(long, requires = "degree")]
    gens: Option<String>,
    /// Number of points the generators act on.
    #[arg(long, requires = "gens")]
    degree: Option<usize>,
    /// Refuse groups larger than this.
    #[arg(long, default_value_t = DEFAULT_ORDER_CAP)]
    max_order: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for the random draws in character-table construction.
    #[arg(long)]
    seed: Option<u64>,
    /// Run the consistency checks first and fail if any does not pass.
    #[arg(long)]
    verify: bool,
}

impl Common {
    fn spec(&self) -> GroupSpec {
        match (&self.group, &self.gens, self.degree) {
            (Some(name), _, _) => GroupSpec::Named(name.clone()),
            (None, Some(text), Some(degree)) => GroupSpec::Generators {
                text: text.clone(),
                degree,
            },
            _ => unreachable!("clap enforces a group spec"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

enum Failure {
    Usage(String),
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. }
            | Error::DegreeMismatch { .. }
            | Error::NoGenerators
            | Error::UnsupportedFamily(_)
            | Error::InvalidParameter(_)
            | Error::NotInGroup(_)
            | Error::IndexOutOfRange { .. }
            | Error::ModulusMismatch(..)
            | Error::Domain(_) => Self::Usage(e.to_string()),
            _ => Self::Compute(e.to_string()),
        }
    }
}

fn run(command: Command) -> Result<(OutputDocument, Format), Failure> {
    let (common, doc) = match &command {
        Command::Abelian {
            modulus,
            pairs,
            momentum,
            angles,
            format,
        } => {
            let parsed = if pairs.is_empty() {
                vec![compute::parse_zn_pair("1,0:0,1", *modulus)?]
            } else {
                pairs
                    .iter()
                    .map(|p| compute::parse_zn_pair(p, *modulus))
                    .collect::<Result<_, _>>()?
            };
            let mut doc = OutputDocument::new(format!("Z/{modulus} abelian theory"));
            doc.sections.analysis = Some(Analysis {
                abelian: Some(compute::abelian(*modulus, &parsed, *momentum, *angles)?),
                ..Analysis::default()
            });
            return Ok((doc, *format));
        }
        Command::Particles(c)
        | Command::Chartable(c)
        | Command::Smatrix(c)
        | Command::Fusion(c)
        | Command::Subsystems(c)
        | Command::Verify(c)
        | Command::Prob { common: c, .. }
        | Command::Symmetries { common: c, .. } => (c, OutputDocument::new(c.spec().echo())),
    };
    let mut doc = doc;
    let group = common.spec().build(common.max_order)?;
    let seed = compute::seed_or_default(common.seed);

    if common.verify || matches!(command, Command::Verify(_)) {
        let report = compute::consistency(&group, seed);
        let passed = report.passed;
        doc.sections.analysis.get_or_insert_with(Analysis::default).consistency = Some(report);
        if !passed {
            emit(&doc, common.format)?;
            return Err(Failure::Compute("consistency checks failed".into()));
        }
        if let Command::Verify(_) = command {
            return Ok((doc, common.format));
        }
    }

    if let Command::Chartable(_) = command {
        doc.sections.character_table = Some(compute::character_table(&group, seed)?);
        return Ok((doc, common.format));
    }

    let pipeline = Pipeline::new(group, seed)?;
    match &command {
        Command::Particles(_) => doc.sections.particles = Some(compute::particles(&pipeline.double)),
        Command::Smatrix(_) => doc.sections.smatrix = Some(compute::smatrix(&pipeline)),
        Command::Fusion(_) => doc.sections.fusion = Some(compute::fusion(&pipeline.fusion)),
        Command::Prob { a, b, decimal, .. } => {
            doc.sections.probabilities =
                Some(compute::probabilities(&pipeline.fusion, a.as_deref(), b.as_deref(), *decimal)?)
        }
        Command::Subsystems(_) => {
            doc.sections.analysis.get_or_insert_with(Analysis::default).subsystems =
                Some(compute::subsystems(&pipeline.fusion))
        }
        Command::Symmetries { dimension_only, .. } => {
            doc.sections.analysis.get_or_insert_with(Analysis::default).symmetries =
                Some(compute::symmetries(&pipeline.fusion, *dimension_only)?)
        }
        Command::Abelian { .. } | Command::Chartable(_) | Command::Verify(_) => unreachable!(),
    }
    Ok((doc, common.format))
}

fn emit(doc: &OutputDocument, format: Format) -> Result<(), Failure> {
    let text = match format {
        Format::Text => render::render_text(doc),
        Format::Csv => render::render_csv(doc).map_err(|e| Failure::Compute(e.to_string()))?,
        Format::Json => render::render_json(doc).map_err(|e| Failure::Compute(e.to_string()))?,
    };
    let mut stdout = std::io::stdout().lock();
    stdout
        .write_all(text.as_bytes())
        .and_then(|_| stdout.flush())
        .map_err(|e| Failure::Compute(e.to_string()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command).and_then(|(doc, format)| emit(&doc, format)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
