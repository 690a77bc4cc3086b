use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use trihex::analysis::{identify_signature, Identification};
use trihex::census::{census, conjecture_stats, write_csv, ConjectureStats};
use trihex::hexlattice::RotocenterLattice;
use trihex::{build_by_quotient, build_by_spines, CombinatorialMap, Signature};
use trihex_cli::{dot, graph6, svg, CliError, GraphDocument};

#[derive(Parser)]
#[command(
    name = "trihex",
    version,
    about = "Signatures, counts and drawings of trihexes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format; which ones apply depends on the command.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Constructor used when a map is built from a signature.
    #[arg(long, global = true, value_enum, default_value_t = Method::Quotient)]
    method: Method,

    #[arg(long, short, global = true)]
    verbose: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Signatures naming the same trihex.
    Equiv { signature: Signature },
    /// Signature of the mirror image.
    Mirror { signature: Signature },
    /// Whether the trihex has no belts.
    Tight { signature: Signature },
    /// All equivalence classes with a given number of vertices.
    Classes { vertices: u64 },
    /// Class counts for every vertex count up to a bound, as CSV.
    Census { v_max: u64 },
    /// How far the class counts exceed their lower bounds over a range.
    Stats { from: u64, to: u64 },
    /// Build the trihex of a signature.
    Build { signature: Signature },
    /// Recover the signature class of a graph document or built signature.
    Identify { input: String },
    /// Run the structural checks on a graph document or built signature.
    Verify { input: String },
    /// Draw a window of the hexagonal tiling with its half-turn centers.
    Tiling {
        signature: Signature,
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        columns: u32,
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        rows: u32,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Dot,
    Graph6,
    Svg,
}

impl Format {
    fn name(self) -> &'static str {
        match self {
            Format::Text => "text",
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Dot => "dot",
            Format::Graph6 => "graph6",
            Format::Svg => "svg",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Quotient,
    Spines,
}

impl Method {
    fn build(self, sig: Signature) -> Result<CombinatorialMap, CliError> {
        Ok(match self {
            Method::Quotient => build_by_quotient(sig)?,
            Method::Spines => build_by_spines(sig)?,
        })
    }
}

impl Cli {
    fn format(&self, command: &str, allowed: &[Format]) -> Result<Format, CliError> {
        match self.format {
            None => Ok(allowed[0]),
            Some(f) if allowed.contains(&f) => Ok(f),
            Some(f) => {
                let names: Vec<&str> = allowed.iter().map(|f| f.name()).collect();
                Err(CliError::Usage(format!(
                    "{command} does not support --format {}; use one of: {}",
                    f.name(),
                    names.join(", ")
                )))
            }
        }
    }

    fn emit(&self, data: &str) -> Result<(), CliError> {
        match &self.out {
            Some(path) => write_file(path, data.as_bytes()),
            None => {
                let mut stdout = std::io::stdout().lock();
                stdout
                    .write_all(data.as_bytes())
                    .and_then(|_| stdout.flush())
                    .map_err(|source| CliError::Io {
                        path: PathBuf::from("<stdout>"),
                        source,
                    })
            }
        }
    }

    /// A map from either a signature or a graph document on disk.
    fn load(&self, input: &str) -> Result<(CombinatorialMap, Option<Signature>), CliError> {
        if let Ok(sig) = input.parse::<Signature>() {
            return Ok((self.method.build(sig)?, Some(sig)));
        }
        if input.contains(',') && !Path::new(input).exists() {
            // Looks like a signature; report why it was rejected.
            input.parse::<Signature>()?;
        }
        let text = fs::read_to_string(input).map_err(|source| CliError::Io {
            path: input.into(),
            source,
        })?;
        let doc = GraphDocument::from_json(&text)?;
        Ok((doc.to_map()?, doc.signature()?))
    }
}

fn write_file(path: &Path, data: &[u8]) -> Result<(), CliError> {
    fs::write(path, data).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

#[derive(Serialize)]
struct StatsJson {
    v_min: u64,
    v_max: u64,
    rows: u64,
    alpha_gap_max: i64,
    alpha_gap_exceed: String,
    alpha_gap_exceed_fraction: f64,
    beta_gap_max: i64,
    beta_gap_exceed: String,
    beta_gap_exceed_fraction: f64,
    alpha_ratio_min: String,
    alpha_ratio_max: String,
    beta_ratio_min: String,
    beta_ratio_max: String,
}

impl From<&ConjectureStats> for StatsJson {
    fn from(st: &ConjectureStats) -> Self {
        StatsJson {
            v_min: st.v_min,
            v_max: st.v_max,
            rows: st.rows,
            alpha_gap_max: st.alpha_gap_max,
            alpha_gap_exceed: st.alpha_gap_exceed.to_string(),
            alpha_gap_exceed_fraction: *st.alpha_gap_exceed.numer() as f64
                / *st.alpha_gap_exceed.denom() as f64,
            beta_gap_max: st.beta_gap_max,
            beta_gap_exceed: st.beta_gap_exceed.to_string(),
            beta_gap_exceed_fraction: *st.beta_gap_exceed.numer() as f64
                / *st.beta_gap_exceed.denom() as f64,
            alpha_ratio_min: st.alpha_ratio_min.to_string(),
            alpha_ratio_max: st.alpha_ratio_max.to_string(),
            beta_ratio_min: st.beta_ratio_min.to_string(),
            beta_ratio_max: st.beta_ratio_max.to_string(),
        }
    }
}

fn identification_text(id: &Identification) -> String {
    format!("{} {}", id.class, id.chirality)
}

fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Equiv { signature } => {
            cli.format("equiv", &[Format::Text])?;
            let (_, d) = signature.equivalent_signatures()?;
            let mut listed = vec![*signature];
            for x in [d.sig2, d.sig3] {
                if !listed.contains(&x) {
                    listed.push(x);
                }
            }
            let texts: Vec<String> = listed.iter().map(|x| format!("{x:#}")).collect();
            let mut out = texts.join(" ") + "\n";
            if cli.verbose {
                out += &format!("h = {}\n", d.h);
                out += &format!(
                    "j2 = {}, p2 = {}, second signature {:#}\n",
                    d.j2, d.p2, d.sig2
                );
                out += &format!(
                    "j3 = {}, p3 = {}, third signature {:#}\n",
                    d.j3, d.p3, d.sig3
                );
            }
            cli.emit(&out)
        }
        Command::Mirror { signature } => {
            cli.format("mirror", &[Format::Text])?;
            cli.emit(&format!("{:#}\n", signature.mirror()))
        }
        Command::Tight { signature } => {
            cli.format("tight", &[Format::Text])?;
            let verdict = if signature.is_tight() {
                "tight"
            } else {
                "not tight"
            };
            let mut out = format!("{signature:#} {verdict}\n");
            if cli.verbose {
                out += &format!("class {}\n", signature.class()?);
            }
            cli.emit(&out)
        }
        Command::Classes { vertices } => {
            cli.format("classes", &[Format::Text])?;
            let mut out = String::new();
            for class in trihex::analysis::classes_for_vertices(*vertices)? {
                let chiral = if class.is_chiral() {
                    format!(
                        "  chiral, mirror {:#}",
                        class.canonical().mirror().class()?.canonical()
                    )
                } else {
                    String::new()
                };
                out += &format!("{class}{chiral}\n");
            }
            cli.emit(&out)
        }
        Command::Census { v_max } => {
            cli.format("census", &[Format::Csv])?;
            if *v_max < 4 {
                return Err(CliError::Usage(format!(
                    "census: v_max {v_max} is below the minimum 4"
                )));
            }
            let rows = census(4, *v_max)?;
            let mut csv = Vec::new();
            write_csv(&rows, &mut csv).expect("writing to memory");
            cli.emit(std::str::from_utf8(&csv).expect("ascii"))?;
            let summary = format!("{} rows for v = 4..={}", rows.len(), v_max);
            match &cli.out {
                Some(path) => println!("wrote {summary} to {}", path.display()),
                None => eprintln!("{summary}"),
            }
            Ok(())
        }
        Command::Stats { from, to } => {
            let format = cli.format("stats", &[Format::Text, Format::Json])?;
            if *from < 4 || from > to {
                return Err(CliError::Usage(format!(
                    "stats: need 4 <= from <= to, got {from} and {to}"
                )));
            }
            let st = conjecture_stats(*from, *to)?;
            let out = match format {
                Format::Json => {
                    serde_json::to_string_pretty(&StatsJson::from(&st)).expect("serializes") + "\n"
                }
                _ => format!("{st}\n"),
            };
            cli.emit(&out)
        }
        Command::Build { signature } => {
            let format = cli.format(
                "build",
                &[Format::Json, Format::Dot, Format::Graph6, Format::Svg],
            )?;
            let map = cli.method.build(*signature)?;
            let report = map.validate();
            if !report.passed() {
                return Err(trihex::Error::Internal(format!(
                    "built map for {signature} fails validation:\n{report}"
                ))
                .into());
            }
            if cli.verbose {
                eprintln!("{report}");
            }
            let out = match format {
                Format::Dot => dot::render(&GraphDocument::from_map(&map, Some(*signature))?),
                Format::Graph6 => graph6::encode(map.num_vertices(), &map.edges()) + "\n",
                Format::Svg => svg::render_map(&map, &format!("trihex {signature:#}")),
                _ => GraphDocument::from_map(&map, Some(*signature))?.to_json(),
            };
            cli.emit(&out)
        }
        Command::Identify { input } => {
            cli.format("identify", &[Format::Text])?;
            let (map, _) = cli.load(input)?;
            let report = map.validate();
            if !report.passed() {
                return Err(CliError::CheckFailed(format!("not a trihex:\n{report}")));
            }
            let id = identify_signature(&map)?;
            cli.emit(&(identification_text(&id) + "\n"))
        }
        Command::Verify { input } => {
            cli.format("verify", &[Format::Text])?;
            let (map, sig) = cli.load(input)?;
            let report = map.validate();
            let mut out = format!("{report}\n");
            if let Some(sig) = sig {
                if report.passed()
                    && (report.vertices as u64, report.hexagons as u64)
                        != (sig.vertices(), sig.hexagons())
                {
                    out += &format!("counts disagree with signature {sig:#}\n");
                    cli.emit(&out)?;
                    return Err(CliError::CheckFailed(format!("{input}: wrong counts")));
                }
            }
            cli.emit(&out)?;
            if report.passed() {
                Ok(())
            } else {
                Err(CliError::CheckFailed(format!(
                    "{input} failed verification"
                )))
            }
        }
        Command::Tiling {
            signature,
            columns,
            rows,
        } => {
            cli.format("tiling", &[Format::Svg])?;
            let lattice = RotocenterLattice::new(*signature);
            if cli.verbose {
                eprintln!("{lattice}");
            }
            cli.emit(&svg::render_tiling(&lattice, *columns, *rows))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("trihex: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
