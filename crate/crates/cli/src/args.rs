use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "idealprox", version, about = "Multiplier ideals, Weil functions and approximation margins")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Output format.
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct IdealInput {
    /// Ideal file: {"dim": n, "generators": [[...], ...]}.
    #[arg(long)]
    pub ideal: PathBuf,
    /// Read the generators as homogeneous monomials in dim = n+1 variables on P^n
    /// instead of homogenizing an affine ideal with x0.
    #[arg(long)]
    pub projective: bool,
}

#[derive(Debug, Args)]
pub struct PointInput {
    /// A point of P^n as comma-separated coprime integers, e.g. 1,3,6 (repeatable).
    #[arg(long = "point", allow_hyphen_values = true)]
    pub point: Vec<String>,
    /// File with one point per line; `#` starts a comment.
    #[arg(long)]
    pub points: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Places {
    /// Places of S: `inf` plus primes, comma-separated.
    #[arg(long, default_value = "inf")]
    pub places: String,
}

#[derive(Debug, Args)]
pub struct CurveInput {
    /// Curve file: {"components": [[coefficients, lowest degree first], ...]}.
    #[arg(long)]
    pub curve: PathBuf,
    /// Radii: `a:b`, `a:b:step` or a comma-separated list.
    #[arg(long, default_value = "2:100")]
    pub grid: String,
    /// Base number of quadrature nodes.
    #[arg(long, default_value_t = 4096)]
    pub nodes: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Multiplier ideal I(a^c).
    Mi {
        #[command(flatten)]
        ideal: IdealInput,
        #[arg(long)]
        c: String,
        #[command(flatten)]
        output: Output,
    },
    /// Left limit I^-(a^c).
    MiMinus {
        #[command(flatten)]
        ideal: IdealInput,
        #[arg(long)]
        c: String,
        #[command(flatten)]
        output: Output,
    },
    /// Log canonical threshold by the facet formula and by bisection.
    Lct {
        #[command(flatten)]
        ideal: IdealInput,
        #[command(flatten)]
        output: Output,
    },
    /// Jumping numbers in (0, cmax] with the ideals after each jump.
    Jump {
        #[command(flatten)]
        ideal: IdealInput,
        #[arg(long)]
        cmax: String,
        #[command(flatten)]
        output: Output,
    },
    /// Exhaustive check of I^-(O(-D)) = O(-(D - D_red)) for monomial divisors.
    #[command(name = "check-example-1-3")]
    CheckExample13 {
        #[arg(long, default_value_t = 6)]
        max_mult: u32,
        #[arg(long, default_value_t = 4)]
        max_dim: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Local Weil values at each place of S.
    Weil {
        #[command(flatten)]
        ideal: IdealInput,
        #[command(flatten)]
        points: PointInput,
        #[command(flatten)]
        places: Places,
        #[command(flatten)]
        output: Output,
    },
    /// Proximity m_S(a, P).
    Prox {
        #[command(flatten)]
        ideal: IdealInput,
        #[command(flatten)]
        points: PointInput,
        #[command(flatten)]
        places: Places,
        #[command(flatten)]
        output: Output,
    },
    /// Counting N_S(a, P).
    Count {
        #[command(flatten)]
        ideal: IdealInput,
        #[command(flatten)]
        points: PointInput,
        #[command(flatten)]
        places: Places,
        #[command(flatten)]
        output: Output,
    },
    /// Truncated counting N^(1)_S(a, P).
    Count1 {
        #[command(flatten)]
        ideal: IdealInput,
        #[command(flatten)]
        points: PointInput,
        #[command(flatten)]
        places: Places,
        #[command(flatten)]
        output: Output,
    },
    /// Heights h_a(P), h(P) and h_{O(deg)}(P).
    Height {
        #[command(flatten)]
        ideal: IdealInput,
        #[command(flatten)]
        points: PointInput,
        /// Degree of the line bundle class; defaults to the canonical class -(n+1).
        #[arg(long, allow_hyphen_values = true)]
        deg: Option<i64>,
        #[command(flatten)]
        output: Output,
    },
    /// T_f, m_f(a), N_f(a), N_f^(1)(a) and T_{a,f} on a radius grid.
    Curve {
        #[command(flatten)]
        ideal: IdealInput,
        #[command(flatten)]
        curve: CurveInput,
        #[command(flatten)]
        output: Output,
    },
    /// Arithmetic proximity inequality margins.
    Margins32 {
        #[command(flatten)]
        ideal: IdealInput,
        #[command(flatten)]
        points: PointInput,
        #[command(flatten)]
        places: Places,
        #[arg(long)]
        eps: String,
        #[arg(long, default_value_t = 0.0)]
        slack: f64,
        #[command(flatten)]
        output: Output,
    },
    /// Arithmetic truncated-counting inequality margins.
    Margins42 {
        #[command(flatten)]
        ideal: IdealInput,
        #[command(flatten)]
        points: PointInput,
        #[command(flatten)]
        places: Places,
        #[arg(long)]
        eps: String,
        #[arg(long, default_value_t = 0.0)]
        slack: f64,
        #[command(flatten)]
        output: Output,
    },
    /// Nevanlinna proximity inequality margins.
    Margins31 {
        #[command(flatten)]
        ideal: IdealInput,
        #[command(flatten)]
        curve: CurveInput,
        #[arg(long)]
        eps: String,
        #[arg(long, default_value_t = 0.0)]
        slack: f64,
        #[command(flatten)]
        output: Output,
    },
    /// Nevanlinna truncated-counting inequality margins.
    Margins41 {
        #[command(flatten)]
        ideal: IdealInput,
        #[command(flatten)]
        curve: CurveInput,
        #[arg(long)]
        eps: String,
        #[arg(long, default_value_t = 0.0)]
        slack: f64,
        #[command(flatten)]
        output: Output,
    },
    /// Reduction of the ideal-sheaf terms to the divisor terms for a reduced coordinate divisor.
    CheckReduction {
        /// Coordinate indices of the divisor components, e.g. 0,1,2 (empty for D = 0).
        #[arg(long, default_value = "")]
        divisor: String,
        /// Ambient dimension n of P^n.
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[command(flatten)]
        points: PointInput,
        /// Random points to add (coordinates bounded by --bound, fixed --seed).
        #[arg(long, default_value_t = 0)]
        samples: usize,
        #[arg(long, default_value_t = 1000)]
        bound: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        places: Places,
        /// Optional curve for the analytic check.
        #[arg(long)]
        curve: Option<PathBuf>,
        #[arg(long, default_value = "2:100")]
        grid: String,
        #[arg(long, default_value_t = 4096)]
        nodes: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Inequality chain on the blow-up of P^2 at [1:0:0] for a = (x,y)^m.
    CheckBlowup {
        #[arg(long)]
        m: u32,
        /// Defaults to half the gap between 1 and the largest jumping number below 1.
        #[arg(long)]
        eta: Option<String>,
        /// Curve files (repeatable); defaults to the three pinned test curves.
        #[arg(long)]
        curve: Vec<PathBuf>,
        #[arg(long, default_value = "2:100")]
        grid: String,
        #[arg(long, default_value_t = 4096)]
        nodes: usize,
        #[command(flatten)]
        points: PointInput,
        /// Random points with x0 != 0 to add.
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 1000)]
        bound: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        places: Places,
        #[command(flatten)]
        output: Output,
    },
}
