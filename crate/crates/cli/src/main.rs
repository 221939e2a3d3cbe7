mod run;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "solitary", version, about = "Finite real algebraic curves: bounds, constructions, certified counts")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Known upper and lower bounds for degrees 2 to 20.
    Table(TableArgs),
    /// Every applicable upper bound for a curve class.
    Bounds(BoundsArgs),
    /// Builds the patchworking construction of degree 2k and certifies it.
    Construct(ConstructArgs),
    /// Certifies the real point count of a polynomial file or construction.
    Certify(CertifyArgs),
    /// The subdivision underlying the degree-2k construction.
    Subdivide(SubdivideArgs),
    /// Dessins of bigonal curves and their counts.
    Dessin(DessinArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Surface {
    P2,
    Hirzebruch,
    Ellipsoid,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    Bigonal,
    Genus,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args, Debug)]
struct BoundsArgs {
    #[arg(long, value_enum)]
    surface: Surface,
    /// Half degree on the plane.
    #[arg(short)]
    k: Option<i64>,
    /// Index of the Hirzebruch surface.
    #[arg(short)]
    n: Option<i64>,
    #[arg(short)]
    a: Option<i64>,
    #[arg(short)]
    b: Option<i64>,
    /// Bidegree (m, m) on the ellipsoid.
    #[arg(short)]
    m: Option<i64>,
    /// Genus of the curve.
    #[arg(short)]
    g: Option<i64>,
    /// Genus of the base of the ruled surface.
    #[arg(long, default_value_t = 0)]
    genus_base: i64,
}

#[derive(Args, Debug, Clone)]
struct Certification {
    /// Number of values t = 4^-1, 4^-2, … to try.
    #[arg(long, default_value_t = 6)]
    t_depth: u32,
    /// Allow certification beyond degree 8 and polynomials above degree 16.
    #[arg(long)]
    force_large: bool,
    /// Directory for the artifacts.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    #[arg(short)]
    k: i64,
    #[command(flatten)]
    cert: Certification,
}

#[derive(Args, Debug)]
struct CertifyArgs {
    /// Polynomial JSON file; alternatively give -k.
    path: Option<PathBuf>,
    #[arg(short, conflicts_with = "path")]
    k: Option<i64>,
    /// plane, projective, open-quadrant or closed-quadrant.
    #[arg(long, default_value = "projective")]
    region: String,
    #[command(flatten)]
    cert: Certification,
}

#[derive(Args, Debug)]
struct SubdivideArgs {
    #[arg(short)]
    k: i64,
    /// Print the SVG drawing instead of JSON.
    #[arg(long)]
    svg: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct DessinArgs {
    #[arg(value_enum)]
    family: Family,
    #[arg(short)]
    n: u32,
    #[arg(long, default_value_t = 0)]
    q: u32,
    /// Genus of the base, for the genus family.
    #[arg(long, default_value_t = 1)]
    genus_base: u32,
    /// Collide the real ∘ vertices of the bigonal family.
    #[arg(long)]
    contracted: bool,
    /// Print the SVG drawing instead of JSON.
    #[arg(long)]
    svg: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Table(a) => run::table(a.format),
        Command::Bounds(a) => run::bounds(&a),
        Command::Construct(a) => run::construct(a.k, &a.cert),
        Command::Certify(a) => run::certify(&a),
        Command::Subdivide(a) => run::subdivide(&a),
        Command::Dessin(a) => run::dessin(&a),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            if let Some(out) = e.output {
                print!("{out}");
            }
            ExitCode::from(e.code)
        }
    }
}
