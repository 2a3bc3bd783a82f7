use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(
    name = "manin",
    version,
    about = "Quadratic algebras, Manin matrices and quantum representations over exact fields",
    after_help = "Exit status: 0 when every check passes, 1 when a check fails (the report is still printed), 2 on usage or input errors."
)]
pub struct Cli {
    /// Scalar field: `Q` or `Q(q)`. Defaults to the document field, then `Q`.
    #[arg(long, global = true)]
    pub field: Option<String>,
    /// JSON document supplying named objects.
    #[arg(long, global = true)]
    pub doc: Option<PathBuf>,
    /// Depth of generated coefficient contexts.
    #[arg(long, global = true)]
    pub max_degree: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    /// Seed for randomized runs.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Write produced objects to this document.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Print the document schema and exit.
    #[arg(long)]
    pub help_format: bool,
    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check E² = E for a standard family, a document object or a literal matrix.
    CheckIdempotent(IdempotentArgs),
    #[command(subcommand)]
    Algebra(AlgebraCmd),
    #[command(subcommand)]
    Manin(ManinCmd),
    #[command(subcommand)]
    Comonoid(ComonoidCmd),
    #[command(subcommand)]
    Corep(CorepCmd),
    /// Run a gallery scenario at one size or at all of its sizes.
    Gallery {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(scenario_names()))]
        name: String,
        #[arg(long)]
        m: Option<usize>,
    },
}

fn scenario_names() -> Vec<&'static str> {
    manin::gallery::scenarios().iter().map(|s| s.name()).collect()
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct IdempotentArgs {
    /// Standard family spec such as `antisym:3`.
    #[arg(long)]
    pub spec: Option<String>,
    /// Name of an `idempotent` or `scalar_matrix` object in `--doc`.
    #[arg(long)]
    pub name: Option<String>,
    /// Literal matrix, rows separated by `;` and entries by `,`.
    #[arg(long)]
    pub matrix: Option<String>,
}

/// Algebras are named by a document object, `x:SPEC`, `xi:SPEC`, or one of
/// `polyalgN`, `extalgN`, `freeN`, `qpolyalgN`.
#[derive(Debug, Subcommand)]
pub enum AlgebraCmd {
    /// Generators and relations.
    Info { algebra: String },
    /// Graded dimensions up to degree k.
    Hilbert {
        algebra: String,
        #[arg(long)]
        k: usize,
    },
    /// Koszul dual algebra.
    Koszul { algebra: String },
    /// Product of two algebras.
    Product {
        left: String,
        right: String,
        #[arg(long, default_value = "white")]
        kind: String,
    },
    /// Internal cohom algebra cohom(B, A).
    Cohom {
        #[arg(long)]
        b: String,
        #[arg(long)]
        a: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Flavor {
    White,
    Black,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Property {
    Lmn,
    Cop,
    Pmn,
    PmnBlack,
}

#[derive(Debug, Subcommand)]
pub enum ManinCmd {
    /// A X⁽¹⁾Y⁽²⁾(1 − B) = 0 for document matrices or a literal scalar matrix.
    Check {
        #[arg(long)]
        a: String,
        /// Defaults to A.
        #[arg(long)]
        b: Option<String>,
        #[arg(long)]
        x: String,
        /// Defaults to X.
        #[arg(long)]
        y: Option<String>,
    },
    /// Entrywise commutation of two matrices.
    Commute {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Direct sum M⊕N against DiS (or CoP) of the idempotents.
    Dsum {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        b2: Option<String>,
        #[arg(long)]
        c: String,
        #[arg(long)]
        c2: Option<String>,
        /// Use CoP instead of DiS.
        #[arg(long)]
        coproduct: bool,
    },
    /// Existence condition for the tensor product M⊗̇N.
    Dtensor {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        b2: Option<String>,
        #[arg(long)]
        c: String,
        #[arg(long)]
        c2: Option<String>,
        #[arg(long, value_enum, default_value_t = Flavor::White)]
        flavor: Flavor,
    },
    /// Randomized equivalence runs of the sum and tensor criteria.
    Props {
        #[arg(long, value_enum)]
        property: Property,
        #[arg(long, default_value_t = 20)]
        count: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum ComonoidCmd {
    /// Coassociativity, counit and extension checks of a document comonoid.
    Validate {
        #[arg(long)]
        name: String,
    },
    /// coend(X_B) with its identity corepresentation.
    Coend {
        #[arg(long)]
        b: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DualKind {
    Dual,
    KoszulDual,
}

#[derive(Debug, Subcommand)]
pub enum CorepCmd {
    /// Corepresentation checks for a document corep or a (comonoid, B, M) triple.
    Check {
        #[arg(long, conflicts_with_all = ["comonoid", "b", "matrix"])]
        name: Option<String>,
        #[arg(long, requires_all = ["b", "matrix"])]
        comonoid: Option<String>,
        #[arg(long)]
        b: Option<String>,
        #[arg(long)]
        matrix: Option<String>,
    },
    /// Is K a morphism from SRC to DST?
    Morphism {
        #[arg(long)]
        k: String,
        #[arg(long)]
        src: String,
        #[arg(long)]
        dst: String,
    },
    /// Direct sum over DiS.
    Dsum { left: String, right: String },
    /// Coproduct over CoP.
    Coproduct { left: String, right: String },
    /// Tensor product.
    Tensor {
        left: String,
        right: String,
        #[arg(long, value_enum, default_value_t = Flavor::White)]
        flavor: Flavor,
    },
    /// Dual corepresentation from an inverse matrix.
    Dual {
        name: String,
        #[arg(long)]
        minv: String,
        #[arg(long, value_enum, default_value_t = DualKind::Dual)]
        flavor: DualKind,
    },
    /// Hom corepresentation over a commutative slice.
    Hom {
        left: String,
        right: String,
        #[arg(long)]
        minv: String,
    },
    /// Classical limit of a corepresentation of a connected presentation.
    Dequantise { name: String },
}
