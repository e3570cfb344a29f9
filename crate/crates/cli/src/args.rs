use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "dkk", version, about = "Exact Dold-Kan computations, 2-categorical nerves and their K0 shadows")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Input file; stdin when absent.
    #[arg(long, short, global = true)]
    pub input: Option<PathBuf>,
    /// Output file; stdout when absent.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Maximum number of simplices any enumeration may build.
    #[arg(long, env = "DKK_BUDGET", default_value_t = 1_000_000, global = true)]
    pub budget: usize,
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    /// Run independent instances or levels on a thread pool.
    #[arg(long, global = true)]
    pub parallel: bool,
    /// Truncation level; each command has its own default.
    #[arg(long, global = true)]
    pub max_dim: Option<usize>,
    /// Add wall-clock durations to run reports.
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Dot,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Smith normal form `U M V = S` of a matrix.
    Snf,
    /// Integer solution of `{"matrix": A, "rhs": [b]}`.
    Solve,
    /// Invariant factors of a presented group.
    NormalForm,
    /// Normalized chains, nerves, unit and counit
    #[command(subcommand)]
    Dk(Dk),
    /// Poset-enriched 2-categories, scaled nerves and cubes
    #[command(subcommand)]
    Twocat(Twocat),
    /// Grothendieck constructions of category-valued functors
    #[command(subcommand)]
    Groth(Groth),
    /// Rank-level checks in K0 of a complex
    #[command(subcommand)]
    K0(K0),
    /// Randomized verification suites.
    Suite(SuiteArgs),
}

#[derive(Subcommand, Debug)]
pub enum Dk {
    /// Normalized chains of a simplicial group.
    Normalize,
    /// The nerve of a chain complex.
    Nerve,
    /// Whether `C(N(B)) -> B` is an isomorphism.
    Counit,
    /// Whether `A -> N(C(A))` is an isomorphism.
    Unit,
    /// `C(Ω A) = Ω C(A)` as presented complexes.
    OmegaCheck,
    /// `{"source": A, "target": A', "map": [hom per level]}`.
    Conservativity,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Over,
    Under,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum CubeKind {
    F,
    B,
    Q,
}

#[derive(Subcommand, Debug)]
pub enum Twocat {
    /// `Σ^I` for a list of integers.
    Sigma {
        #[arg(long, value_delimiter = ',', required = true)]
        elements: Vec<usize>,
    },
    /// Scaled nerve of a category file.
    Nerve,
    /// Lax slice of a category file at an object.
    Slice {
        #[arg(long)]
        object: String,
        #[arg(long, value_enum, default_value_t = Side::Over)]
        side: Side,
    },
    Cube {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum)]
        which: CubeKind,
    },
    /// Proof obligations for an `n`-simplex of the categorified nerve.
    Obligations {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        max_obj: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum Groth {
    Chi,
    Gamma {
        #[arg(long)]
        object: String,
    },
    /// `ev ∘ η = id`, at one object or all of them.
    EtaCheck {
        #[arg(long)]
        object: Option<String>,
    },
    Lax,
    /// The comparison map from the strict to the lax construction.
    Compare,
}

#[derive(Subcommand, Debug)]
pub enum K0 {
    /// `{"complex": B, "simplex": {"n": .., "classes": {..}}}`
    CheckNerve,
    /// `{"complex": B, "triangle": {"n": .., "vertices": [..], "edges": {..}}}`
    CheckS,
    /// Same input as `check-s`; emits the nerve simplex.
    Decat,
    /// `{"k": k, "values": {"01": [..], ..}}`
    Tot,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteName {
    Pi,
    Counit,
    Unit,
    Omega,
    K0,
}

#[derive(Args, Debug)]
pub struct SuiteArgs {
    #[arg(value_enum)]
    pub name: SuiteName,
    #[arg(long, default_value_t = 20)]
    pub count: usize,
}
