//! Command-line frontend for `hierseg`.
//!
//! Every subcommand reads a binary PPM (or, with `--graph`, a text edge list),
//! writes its outputs atomically and returns a one-line summary.

mod commands;
mod error;
pub mod sweep;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use commands::execute;
pub use error::CliError;

/// Area threshold applied after cutting images when `--min-area` is absent.
pub const DEFAULT_MIN_AREA: usize = 500;

#[derive(Debug, Parser)]
#[command(name = "hierseg", version, about = "Hierarchical graph-based image segmentation")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone)]
pub struct InputArgs {
    /// Input PPM image (P6 or P3, maxval 255)
    pub input: PathBuf,
    /// Treat the input as a text graph: vertex count, then `u v w` lines
    #[arg(long)]
    pub graph: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the scale of every spanning-tree edge
    Hierarchy {
        #[command(flatten)]
        input: InputArgs,
        /// Merge tree output
        #[arg(long)]
        tree: PathBuf,
        /// Per-edge scale listing (CSV)
        #[arg(long)]
        scales: PathBuf,
    },
    /// Extract one partition from the hierarchy and render it
    Cut {
        #[command(flatten)]
        input: InputArgs,
        /// Output: mean-color PPM, or a vertex,region CSV with --graph
        output: PathBuf,
        #[arg(long, conflicts_with = "regions", required_unless_present = "regions")]
        scale: Option<u64>,
        /// Smallest cut with at most this many regions
        #[arg(long)]
        regions: Option<usize>,
        /// Absorb regions smaller than this many pixels [default: 500 for images, 0 with --graph]
        #[arg(long)]
        min_area: Option<usize>,
    },
    /// Single-scale baseline segmentation
    Fh {
        #[command(flatten)]
        input: InputArgs,
        output: PathBuf,
        #[arg(long)]
        k: u64,
        /// Absorb regions smaller than this many pixels [default: 500 for images, 0 with --graph]
        #[arg(long)]
        min_area: Option<usize>,
    },
    /// Render the contour saliency map
    Saliency {
        #[command(flatten)]
        input: InputArgs,
        /// Output: PGM, or an edge_u,edge_v,saliency CSV with --graph
        output: PathBuf,
        #[arg(long, value_enum, default_value_t = NormArg::Linear)]
        norm: NormArg,
        /// Draw dark contours on white
        #[arg(long)]
        invert: bool,
    },
    /// Region counts over a list of parameters
    Sweep {
        #[command(flatten)]
        input: InputArgs,
        output: PathBuf,
        #[arg(long, value_enum)]
        method: Method,
        /// Comma-separated parameter values, e.g. 100,200,400
        #[arg(long, value_delimiter = ',', num_args = 1.., required = true)]
        k_list: Vec<u64>,
    },
    /// Add salt noise to an image
    Noise {
        /// Input PPM image
        input: PathBuf,
        output: PathBuf,
        /// Probability of turning each pixel white
        #[arg(long)]
        salt: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Verify causality and nestedness, or replay a stored counterexample
    Check {
        /// Image or graph to check
        #[arg(required_unless_present = "replay", conflicts_with = "replay")]
        input: Option<PathBuf>,
        #[arg(long)]
        graph: bool,
        /// Counterexample document to re-run
        #[arg(long)]
        replay: Option<PathBuf>,
        /// Where to write a counterexample if a property fails
        #[arg(long)]
        counterexample: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NormArg {
    Linear,
    Log,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Fh,
    Hier,
}
