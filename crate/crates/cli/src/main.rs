use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use paley::family::{generalized_paley, paley_graph, paley_tournament, peisert_graph};
use paley::graph::{srg_params, Graph};
use paley::hadamard::{
    hadamard_defect, paley_coverage, paley_i, paley_ii, paley_iii, pg_design, qr_design, sylvester, IncidenceDesign,
    SignMatrix,
};
use paley::perm::{design_automorphisms, graph_automorphisms, tournament_automorphisms, PermutationGroup};
use paley::residue::{canonical_two_squares, two_squares_gauss, two_squares_jacobsthal};
use paley::verify::{self, Claim, VerifyOptions};
use paley::FiniteField;

#[derive(Parser)]
#[command(name = "paley", version, about = "Paley graphs, Hadamard matrices and their automorphism groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Finite field data
    Field {
        #[command(subcommand)]
        command: FieldCommand,
    },
    /// Write a prime p = 1 mod 4 as a sum of two squares
    TwoSquares {
        p: u64,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Build a Paley-type graph
    Build {
        #[arg(value_enum)]
        kind: GraphKind,
        #[command(flatten)]
        field: FieldArgs,
        /// Order of the connection subgroup (genpaley)
        #[arg(long)]
        m: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Edges)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Strongly regular parameters of the Paley graph
    Srg {
        #[command(flatten)]
        field: FieldArgs,
    },
    /// Hadamard matrices
    Hadamard {
        #[command(subcommand)]
        command: HadamardCommand,
    },
    /// Hadamard designs
    Design {
        #[command(subcommand)]
        command: DesignCommand,
    },
    /// Automorphism group of a structure read from a file
    Aut {
        #[arg(value_enum)]
        kind: AutKind,
        input: PathBuf,
    },
    /// Check claims, printing one PASS/FAIL line each
    Verify {
        #[command(subcommand)]
        command: VerifyCommand,
    },
}

#[derive(Subcommand)]
enum FieldCommand {
    /// Characteristic, degree, modulus and primitive root
    Info {
        #[command(flatten)]
        field: FieldArgs,
    },
}

#[derive(Args)]
struct FieldArgs {
    #[arg(long)]
    p: u64,
    #[arg(long, default_value_t = 1)]
    e: u32,
}

impl FieldArgs {
    fn field(&self) -> Result<FiniteField> {
        Ok(FiniteField::new(self.p, self.e)?)
    }
}

#[derive(Copy, Clone, ValueEnum)]
enum Method {
    Gauss,
    Jacobsthal,
    Both,
}

#[derive(Copy, Clone, ValueEnum)]
enum GraphKind {
    Paley,
    Tournament,
    Genpaley,
    Peisert,
}

#[derive(Copy, Clone, ValueEnum)]
enum Format {
    Dot,
    Edges,
    Matrix,
}

#[derive(Subcommand)]
enum HadamardCommand {
    /// Construct a matrix (paley3 emits every matrix of the partition)
    Build {
        #[command(subcommand)]
        kind: HadamardKind,
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Check a matrix file
    Check { input: PathBuf },
    /// Orders reachable by Paley's constructions and a power of 2
    Coverage {
        #[arg(long, default_value_t = 200)]
        limit: u64,
    },
}

#[derive(Subcommand)]
enum HadamardKind {
    Sylvester {
        #[arg(long)]
        k: u32,
    },
    Paley1 {
        #[arg(long)]
        q: u64,
    },
    Paley2 {
        #[arg(long)]
        q: u64,
    },
    Paley3 {
        #[arg(long)]
        k: u32,
    },
}

#[derive(Subcommand)]
enum DesignCommand {
    Build {
        #[command(subcommand)]
        kind: DesignKind,
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum DesignKind {
    /// Translates of the quadratic residues of F_q
    Qr {
        #[arg(long)]
        q: u64,
    },
    /// Hyperplanes of PG(k-1, 2)
    Pg {
        #[arg(long)]
        k: u32,
    },
}

#[derive(Copy, Clone, ValueEnum)]
enum AutKind {
    Graph,
    Tournament,
    Design,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Character-preserving permutations of F_q fixing 0 and 1
    Carlitz {
        #[command(flatten)]
        field: FieldArgs,
    },
    /// The automorphism group of P(q) against the semilinear group
    #[command(alias = "theorem41")]
    PaleyGroup {
        #[arg(long)]
        q: u64,
    },
    /// Coset-class-preserving permutations and the group G(d)
    Mcconnel {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        d: u64,
    },
    /// Exceptional Hadamard orders up to 200
    #[command(alias = "table1")]
    Coverage,
    /// Every acceptance claim
    All {
        /// Restrict to one module
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(verify::MODULES))]
        only: Option<String>,
    },
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn read(path: &PathBuf) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn group_text(g: &PermutationGroup) -> String {
    let mut s = format!("order={}\n", g.order());
    for p in g.generators() {
        s.push_str(&format!("{p}\n"));
    }
    s
}

fn claims_status(claims: &[Claim]) -> Result<bool> {
    let mut stdout = io::stdout();
    for c in claims {
        writeln!(stdout, "{c}")?;
    }
    Ok(claims.iter().all(|c| c.pass))
}

/// `Ok(true)` on success, `Ok(false)` when a check fails.
fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Field { command: FieldCommand::Info { field } } => {
            emit(None, &field.field()?.description())?;
        }
        Command::TwoSquares { p, method } => {
            let mut lines = String::new();
            let mut pair = None;
            if matches!(method, Method::Jacobsthal | Method::Both) {
                let (a, b) = two_squares_jacobsthal(p)?;
                lines.push_str(&format!("jacobsthal a={a} b={b}\n"));
                pair = Some((a, b));
            }
            if matches!(method, Method::Gauss | Method::Both) {
                let (a, b) = two_squares_gauss(p)?;
                lines.push_str(&format!("gauss a={a} b={b}\n"));
                pair = Some((a, b));
            }
            let (a, b) = canonical_two_squares(pair.expect("a method ran"));
            lines.push_str(&format!("{p} = {a}^2 + {b}^2\n"));
            emit(None, &lines)?;
        }
        Command::Build { kind, field, m, format, out } => {
            let f = field.field()?;
            let g: Graph = match kind {
                GraphKind::Paley => paley_graph(&f)?,
                GraphKind::Tournament => paley_tournament(&f)?,
                GraphKind::Genpaley => {
                    let Some(m) = m else { bail!("genpaley needs --m") };
                    generalized_paley(&f, m)?.0
                }
                GraphKind::Peisert => peisert_graph(&f)?,
            };
            let text = match format {
                Format::Dot => g.to_dot(),
                Format::Edges => g.to_edge_list(),
                Format::Matrix => g.to_matrix(),
            };
            emit(out.as_ref(), &text)?;
        }
        Command::Srg { field } => {
            let g = paley_graph(&field.field()?)?;
            match srg_params(&g) {
                Ok(p) => emit(None, &format!("{p}\n"))?,
                Err(why) => bail!("not strongly regular: {why}"),
            }
        }
        Command::Hadamard { command } => match command {
            HadamardCommand::Build { kind, out } => {
                let mats: Vec<SignMatrix> = match kind {
                    HadamardKind::Sylvester { k } => vec![sylvester(k)],
                    HadamardKind::Paley1 { q } => vec![paley_i(q)?],
                    HadamardKind::Paley2 { q } => vec![paley_ii(q)?],
                    HadamardKind::Paley3 { k } => paley_iii(k)?,
                };
                let text: String = mats.iter().map(SignMatrix::to_text).collect();
                emit(out.as_ref(), &text)?;
            }
            HadamardCommand::Check { input } => {
                let h = SignMatrix::parse(&read(&input)?)?;
                return match hadamard_defect(&h)? {
                    None => {
                        println!("PASS hadamard order={}", h.order());
                        Ok(true)
                    }
                    Some((i, j)) => {
                        println!("FAIL hadamard order={} rows {i} and {j} are not orthogonal", h.order());
                        Ok(false)
                    }
                };
            }
            HadamardCommand::Coverage { limit } => {
                let c = paley_coverage(limit)?;
                let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
                emit(None, &format!("achievable: {}\nexceptions: {}\n", join(&c.achievable), join(&c.exceptions)))?;
            }
        },
        Command::Design { command: DesignCommand::Build { kind, out } } => {
            let d = match kind {
                DesignKind::Qr { q } => qr_design(q)?,
                DesignKind::Pg { k } => pg_design(k)?,
            };
            emit(out.as_ref(), &d.to_text())?;
        }
        Command::Aut { kind, input } => {
            let text = read(&input)?;
            let group = match kind {
                AutKind::Graph => graph_automorphisms(&Graph::parse(&text)?)?,
                AutKind::Tournament => tournament_automorphisms(&Graph::parse(&text)?)?,
                AutKind::Design => design_automorphisms(&IncidenceDesign::parse(&text)?)?,
            };
            emit(None, &group_text(&group))?;
        }
        Command::Verify { command } => {
            let claims = match command {
                VerifyCommand::Carlitz { field } => verify::verify_carlitz(&field.field()?)?,
                VerifyCommand::PaleyGroup { q } => verify::verify_paley_group(q)?,
                VerifyCommand::Mcconnel { field, d } => verify::verify_mcconnel(&field.field()?, d)?,
                VerifyCommand::Coverage => verify::verify_coverage(),
                VerifyCommand::All { only } => {
                    let claims = verify::run_claims(&VerifyOptions { character: None, only });
                    print!("{}", verify::format_table(&claims));
                    return Ok(claims.iter().all(|c| c.pass));
                }
            };
            return claims_status(&claims);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
