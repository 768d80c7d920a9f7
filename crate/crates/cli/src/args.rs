use clap::{Args, Parser, Subcommand};

/// Lower bounds, infima and maximal lower bounds of finite Hermitian matrix
/// sets in the Loewner order.
///
/// Matrix sets are read as JSON documents from a file or `-` for standard
/// input. Matrix-valued options (`--t`, `--x`, `--u`) take inline JSON, or
/// `@path` to read it from a file.
#[derive(Debug, Parser)]
#[command(name = "loewner", version)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalArgs {
    /// Relative cutoff for rank decisions.
    #[arg(long, global = true, value_name = "REL", allow_negative_numbers = true)]
    pub tol_rank: Option<f64>,
    /// Relative slack for Loewner comparisons.
    #[arg(long, global = true, value_name = "REL", allow_negative_numbers = true)]
    pub tol_psd: Option<f64>,
    /// Relative tolerance for equality and Hermitian validation.
    #[arg(long, global = true, value_name = "REL", allow_negative_numbers = true)]
    pub tol_eq: Option<f64>,
    /// Seed for randomized commands.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Emit the machine-readable report instead of the annotated one.
    #[arg(long, global = true)]
    pub json: bool,
    /// Include wall-clock time in the report (makes it non-reproducible).
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Clone, Args)]
pub struct SetInput {
    /// Matrix-set document, or `-` for standard input.
    #[arg(default_value = "-")]
    pub input: String,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Compare the two members S, T of the set in the Loewner order.
    CheckOrder(SetInput),
    /// Decide whether the set has an infimum (a member below all others).
    Infimum(SetInput),
    /// Extend a lower bound to a certified maximal lower bound.
    MaximalExtend {
        #[command(flatten)]
        set: SetInput,
        /// Document holding the starting lower bound; defaults to
        /// `min λ_min · I`.
        #[arg(long)]
        lower: Option<String>,
    },
    /// Greatest lower bound among operators commuting with the set.
    CommutingGlb(SetInput),
    /// Recursive maximal lower bound of a positive semidefinite set.
    PositiveMlb(SetInput),
    /// Greatest positive lower bound of a positive semidefinite set.
    PositiveGlb(SetInput),
    /// Maximal lower bound ½(A + B − Tᴴ|T^{-ᴴ}(A − B)T^{-1}|T) of a pair.
    MlbMt {
        #[command(flatten)]
        set: SetInput,
        /// Invertible congruence T as JSON rows, or a number c for c·I.
        #[arg(long)]
        t: Option<String>,
    },
    /// Stott parametrization of the maximal lower bounds of {J, 0}.
    Stott {
        /// Number of +1 entries of J.
        #[arg(long)]
        p: usize,
        /// Number of −1 entries of J.
        #[arg(long)]
        q: usize,
        /// p × q parameter as JSON rows, or a number filling every entry.
        #[arg(long, required_unless_present = "m", conflicts_with = "m")]
        x: Option<String>,
        /// Document holding a maximal lower bound M of {J, 0} to invert.
        #[arg(long)]
        m: Option<String>,
    },
    /// Lower bounds L with (Lu, u) equal to min over the set of (Au, u).
    Constrained {
        #[command(flatten)]
        set: SetInput,
        /// Unit vector u as a JSON array of numbers or [re, im] pairs.
        #[arg(long)]
        u: String,
    },
    /// Run the maximality certificate on a candidate lower bound.
    Certify {
        #[command(flatten)]
        set: SetInput,
        /// Document holding the candidate.
        #[arg(long)]
        candidate: String,
    },
    /// Parallel sum A₁ : A₂ : … of a positive semidefinite set.
    ParallelSum(SetInput),
    /// Ando limits [A]B, [B]A and the greatest positive lower bound of a pair.
    Ando(SetInput),
    /// Emit a finite truncation of a classical example family.
    Fixture {
        /// One of ex3.2, ex3.5i, ex3.5ii, ex3.5iii, ex4.3, ex4.7, ex4.8i,
        /// ex4.8ii, ex6.2.
        name: String,
        /// Truncation N for families indexed by n ∈ ℕ.
        #[arg(long = "truncate-n", default_value_t = 10)]
        truncate_n: usize,
    },
    /// Run a seeded randomized invariant suite.
    Ensemble {
        /// anti-lattice, stott-roundtrip, albert-vs-spectral, mt-family,
        /// commuting-routes, positive-mlb, parallel-rank or
        /// contraction-projection.
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Inclusive dimension range `lo-hi` (or a single dimension).
        #[arg(long, default_value = "2-5")]
        dims: String,
        /// Run trials on one thread; the report is identical either way.
        #[arg(long)]
        serial: bool,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::CheckOrder(_) => "check-order",
            Command::Infimum(_) => "infimum",
            Command::MaximalExtend { .. } => "maximal-extend",
            Command::CommutingGlb(_) => "commuting-glb",
            Command::PositiveMlb(_) => "positive-mlb",
            Command::PositiveGlb(_) => "positive-glb",
            Command::MlbMt { .. } => "mlb-mt",
            Command::Stott { .. } => "stott",
            Command::Constrained { .. } => "constrained",
            Command::Certify { .. } => "certify",
            Command::ParallelSum(_) => "parallel-sum",
            Command::Ando(_) => "ando",
            Command::Fixture { .. } => "fixture",
            Command::Ensemble { .. } => "ensemble",
        }
    }
}
