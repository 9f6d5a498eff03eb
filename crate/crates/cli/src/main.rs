mod commands;

use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Debug, Parser)]
#[command(name = "topsnut", about = "Labelled-graph passwords: build, verify and encrypt")]
struct Cli {
    /// Seed for every randomised step.
    #[arg(long, global = true, env = "TOPSNUT_SEED", default_value_t = 0)]
    seed: u64,
    /// Write the primary artifact here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Labelled {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    labels: PathBuf,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Construct a labelling of a tree.
    Label {
        #[arg(long)]
        graph: PathBuf,
        /// set-ordered-graceful, odd-graceful, 6c, image or odd-image.
        #[arg(long)]
        scheme: String,
    },
    /// Check a labelling against a scheme; exit 1 on any violated clause.
    Verify {
        #[command(flatten)]
        input: Labelled,
        /// Overrides the scheme line of the labelling file.
        #[arg(long)]
        scheme: Option<String>,
    },
    /// Build the three-row matrix of a labelled graph, or read one back.
    Matrix {
        #[arg(long, requires = "labels")]
        graph: Option<PathBuf>,
        #[arg(long)]
        labels: Option<PathBuf>,
        /// A matrix file written earlier.
        #[arg(long, conflicts_with = "graph")]
        matrix: Option<PathBuf>,
        /// Extract a TB-paw along this route instead of printing the matrix.
        #[arg(long)]
        route: Option<String>,
    },
    /// Read a TB-paw off a labelled graph.
    Tbpaw {
        #[command(subcommand)]
        method: TbpawMethod,
    },
    /// Every-zero graphic groups and group colourings.
    Group {
        #[command(subcommand)]
        action: GroupAction,
    },
    /// Encrypt a network snapshot with a graphic group.
    Encrypt {
        /// Snapshot graph to encrypt.
        #[arg(long)]
        graph: PathBuf,
        /// Base graph of the group.
        #[arg(long)]
        base: PathBuf,
        /// Labelling of the base graph.
        #[arg(long)]
        labels: PathBuf,
        /// Group order.
        #[arg(long)]
        n: usize,
        /// Spanning tree algorithm: a (max leaf), b (dominating set), c (hub first).
        #[arg(long, default_value = "a")]
        tree: String,
        #[arg(long, default_value = "met1")]
        route: String,
        /// Join endpoints: smallest or seeded:N.
        #[arg(long, default_value = "smallest")]
        policy: String,
        /// Write the network dump here.
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// Spanning trees of a graph.
    Spantree {
        #[arg(long)]
        graph: PathBuf,
        /// max-leaf, predefined, degree or random.
        #[arg(long, default_value = "max-leaf")]
        algo: String,
        /// Required vertices for `predefined`, comma separated.
        #[arg(long, value_delimiter = ',')]
        require: Vec<String>,
        /// Hub degree threshold for `degree`.
        #[arg(long, default_value_t = 3)]
        threshold: usize,
    },
    /// Closed-form counts.
    Count {
        #[command(subcommand)]
        what: CountWhat,
    },
    /// Add or remove letter noise on a TB-paw.
    Noise {
        /// Tokens of the TB-paw, comma separated.
        #[arg(long, value_delimiter = ',', required_unless_present = "decode")]
        tokens: Vec<i64>,
        /// Substitution table like x=11,y=22; without it letters are inserted.
        #[arg(long)]
        table: Option<String>,
        /// Number of inserted letters when no table is given.
        #[arg(long, default_value_t = 4)]
        letters: usize,
        /// Strip noise from this string instead.
        #[arg(long)]
        decode: Option<String>,
    },
    /// Classify a tree and check its leaf count identity.
    Classify {
        #[arg(long)]
        graph: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
enum TbpawMethod {
    /// Labels along a walk. Vertices are ids, or u1, u2, … counted from one.
    Path {
        #[command(flatten)]
        input: Labelled,
        #[arg(long, value_delimiter = ',')]
        path: Vec<String>,
        #[arg(long, default_value = "vv")]
        kind: String,
    },
    /// Spine walk of a caterpillar or lobster with neighbour bodies.
    Lobster {
        #[command(flatten)]
        input: Labelled,
        /// mini or maxi.
        #[arg(long, default_value = "mini")]
        policy: String,
        #[arg(long, default_value = "vev")]
        kind: String,
    },
    /// Edge-disjoint cycle blocks of an eulerian graph.
    Euler {
        #[command(flatten)]
        input: Labelled,
    },
    /// Route through the three-row matrix.
    Matrix {
        #[command(flatten)]
        input: Labelled,
        #[arg(long, default_value = "met1")]
        route: String,
    },
}

#[derive(Debug, Subcommand)]
enum GroupAction {
    /// Index sum i+j under zero k.
    Add {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        zero: usize,
        i: usize,
        j: usize,
    },
    /// Vertex labels of every element of the group on a base graph.
    Elements {
        #[command(flatten)]
        input: Labelled,
        #[arg(long)]
        n: usize,
    },
    /// Colour a tree so each edge is its ends summed under the zero.
    Colour {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        zero: usize,
        /// Edge indices in BFS order; drawn from the seed when absent.
        #[arg(long, value_delimiter = ',')]
        sequence: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        start: usize,
    },
}

#[derive(Debug, Subcommand)]
enum CountWhat {
    /// Distinct TB-paws of a q-edge matrix.
    Tbpaws {
        #[arg(long)]
        q: u64,
    },
    /// Edge orders times orientations, q!·2^q.
    Matrices {
        #[arg(long)]
        q: u64,
    },
    /// (matrix, cell order) pairs, kept factored.
    RawPairs {
        #[arg(long)]
        q: u64,
        /// Expand the product; refused above q = 200.
        #[arg(long)]
        expand: bool,
    },
    /// Partitions of m into parts of size at most k.
    Partitions {
        #[arg(long)]
        m: i64,
        #[arg(long)]
        k: i64,
    },
    /// Neighbour-order variants of a cycle with these block sizes.
    Cycle {
        #[arg(long, value_delimiter = ',')]
        blocks: Vec<u64>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    commands::run(cli)
}
