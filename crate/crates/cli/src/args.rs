use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "motspc",
    version,
    about = "Exact tables for Milnor-Witt K-theory, Witt rings, Tate motives and finite spectra"
)]
pub struct Cli {
    /// Emit the JSON envelope instead of a text table.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Milnor-Witt K-theory of F_q.
    #[command(subcommand)]
    Kmw(KmwCommand),
    /// Quadratic forms and the Witt ring.
    #[command(subcommand)]
    Witt(WittCommand),
    /// The Grothendieck-Witt ring GW(F_q).
    Gw(FieldArg),
    /// Milnor K-theory in one degree and the sequence 0 -> I^{n+1} -> K^MW_n -> K^M_n -> 0.
    Milnor(MilnorArgs),
    /// Homogeneous primes of K^MW_*(F_q).
    Spech(SpechArgs),
    /// Chow motives of products of projective spaces.
    #[command(subcommand)]
    Motive(MotiveCommand),
    /// Finite spectral spaces.
    #[command(subcommand)]
    Spc(SpcCommand),
    /// Run the invariant suites.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct FieldArg {
    /// Field order, an odd prime power.
    #[arg(long)]
    pub q: u64,
}

#[derive(Debug, Subcommand)]
pub enum KmwCommand {
    /// Group of every degree in a range.
    Table {
        #[arg(long)]
        q: u64,
        /// Degree range `A..B`, both ends included.
        #[arg(long, allow_hyphen_values = true, default_value = "-3..2")]
        range: String,
    },
    /// Canonical coordinates of a symbol word.
    Reduce {
        #[arg(long)]
        q: u64,
        /// Word such as `eta[w]+2` or `[3][-1]`; see the README for the grammar.
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Groups of K^MW over the algebraic closure of F_p.
    Closure {
        #[arg(long)]
        p: u64,
        #[arg(long, allow_hyphen_values = true, default_value = "-3..2")]
        range: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum WittCommand {
    /// Isotropy, Witt decomposition and classes of a diagonal form.
    Classify {
        #[arg(long)]
        q: u64,
        /// Comma-separated integer entries, e.g. `1,-1,3`.
        #[arg(long, allow_hyphen_values = true)]
        form: String,
    },
    /// Additive and multiplicative structure of W(F_q).
    Ring(FieldArg),
}

#[derive(Debug, Args)]
pub struct MilnorArgs {
    #[arg(long)]
    pub q: u64,
    #[arg(long, allow_hyphen_values = true)]
    pub n: i64,
}

#[derive(Debug, Args)]
pub struct SpechArgs {
    #[arg(long)]
    pub q: u64,
    /// Largest integer prime p for the points ([ω],η,p).
    #[arg(long, default_value_t = 13)]
    pub prime_bound: u64,
    /// Degree bound of the primality certificates.
    #[arg(long, default_value_t = 12)]
    pub degree_bound: i64,
}

#[derive(Debug, Args)]
pub struct SpaceArg {
    /// Product of projective spaces such as `P2xP1`, or `pt`.
    #[arg(long)]
    pub space: String,
}

#[derive(Debug, Subcommand)]
pub enum MotiveCommand {
    /// Tate summands of M(X).
    Decompose(SpaceArg),
    /// hom(M(X)(a), M(Y)(b)) and the homs between the Tate summands of M(X).
    Hom {
        #[command(flatten)]
        space: SpaceArg,
        /// Target space; defaults to the source.
        #[arg(long)]
        target: Option<String>,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        twist: i64,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        target_twist: i64,
    },
    /// The dual motive and its Tate summands.
    Dual(SpaceArg),
    /// Intersection pairing in every codimension.
    Pairing(SpaceArg),
}

#[derive(Debug, Args)]
pub struct DotArg {
    /// Print the Hasse diagram in Graphviz format.
    #[arg(long)]
    pub dot: bool,
}

#[derive(Debug, Subcommand)]
pub enum SpcCommand {
    /// Primes of the rational Tate model.
    Tate {
        #[arg(long)]
        twist_radius: Option<i64>,
        #[arg(long)]
        shift_radius: Option<i64>,
        #[command(flatten)]
        dot: DotArg,
    },
    /// Chromatic truncation of the spectrum of finite spectra.
    ShTop {
        #[arg(long, default_value_t = 3)]
        prime_bound: u64,
        #[arg(long, default_value_t = 3)]
        height_bound: u64,
        #[command(flatten)]
        dot: DotArg,
    },
    /// C_n-equivariant truncation.
    Equivariant {
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 2)]
        prime_bound: u64,
        #[arg(long, default_value_t = 1)]
        height_bound: u64,
        /// Extra specialization `A>B`: B lies in the closure of A. Repeatable.
        #[arg(long = "relation")]
        relations: Vec<String>,
        #[command(flatten)]
        dot: DotArg,
    },
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Run a single suite.
    #[arg(long)]
    pub suite: Option<String>,
}
