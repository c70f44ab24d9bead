use std::path::PathBuf;

use clap::{ArgGroup, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "bseq", version, about = "Equivariant cohomology of Bott-Samelson varieties")]
#[command(group(ArgGroup::new("cartan_source").args(["type_label", "cartan"])))]
pub struct Cli {
    /// Built-in Cartan type: A1..A4, B2, B3, C3, D4, G2.
    #[arg(long = "type", global = true, value_name = "LABEL")]
    pub type_label: Option<String>,

    /// JSON file with a Cartan matrix: {"label": ..., "matrix": [[...]]}.
    #[arg(long, global = true, value_name = "FILE")]
    pub cartan: Option<PathBuf>,

    /// Comma- or space-separated simple-reflection indices; defaults to
    /// the longest word.
    #[arg(long, global = true, value_name = "I1,I2,...", allow_hyphen_values = true)]
    pub word: Option<String>,

    #[arg(long, global = true)]
    pub json: bool,

    /// Largest word length accepted for gallery enumeration.
    #[arg(long, global = true, default_value_t = bseq_core::bott_samelson::DEFAULT_GALLERY_CAP)]
    pub cap: usize,

    /// Seed for the randomized parts of `selftest`.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cartan matrix, positive roots and a reduced word for w0.
    Roots,
    /// The full fixed-point restriction matrix of the basis classes.
    Table,
    /// Fixed-point restrictions of a class.
    Restrict {
        /// Gallery bit string, inline JSON class, or path to a JSON class.
        #[arg(long)]
        class: String,
        /// Only this fixed point.
        #[arg(long)]
        at: Option<String>,
    },
    /// Product of two basis classes.
    Product {
        left: String,
        right: String,
        /// Cross-check against the single-generator formula and the
        /// pointwise product of restrictions.
        #[arg(long)]
        check: bool,
    },
    /// Localization integral of a class over the subvariety of a gallery.
    Integrate {
        gallery: String,
        /// Gallery bit string, inline JSON class, or path to a JSON class.
        #[arg(long)]
        class: String,
    },
    /// Billey's formula for the Schubert class of w at v.
    Billey {
        #[arg(long, allow_hyphen_values = true)]
        w: String,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        /// Check the Bott-Samelson identity over every reduced gallery of
        /// the configured word.
        #[arg(long)]
        verify: bool,
    },
    /// Relations of the ordinary cohomology ring.
    Ordinary {
        #[arg(long, num_args = 2, value_names = ["M1", "M2"])]
        product: Option<Vec<String>>,
    },
    /// Run the acceptance criteria.
    Selftest,
}
