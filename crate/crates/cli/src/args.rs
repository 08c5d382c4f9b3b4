use std::path::PathBuf;

use clap::{Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "fibcat", version, about = "Fibrations, comma monads and quotients of finite categories")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Print the full JSON report.
    #[arg(long, global = true)]
    pub json: bool,

    /// Write a DOT diagram of the main construction to PATH.
    #[arg(long, global = true, value_name = "PATH")]
    pub dot: Option<PathBuf>,

    /// Word-length bound for quotients (default: twice the arrows of the target).
    #[arg(long, global = true, env = "FIBCAT_MAX_LEN")]
    pub max_len: Option<usize>,

    /// Arrow cap for each iterated comma stage.
    #[arg(long, global = true, env = "FIBCAT_SIZE_CAP", default_value_t = 200)]
    pub size_cap: usize,

    /// Object cap on the base when enumerating sections.
    #[arg(long, global = true, env = "FIBCAT_BASE_CAP", default_value_t = 6)]
    pub base_cap: usize,

    /// Arrow cap on each slice when enumerating sections.
    #[arg(long, global = true, env = "FIBCAT_SLICE_CAP", default_value_t = 20)]
    pub slice_cap: usize,

    /// Worker threads for parallel checks.
    #[arg(long, global = true)]
    pub workers: Option<usize>,

    /// Include wall-clock timing in the report.
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a category or functor.
    Validate { entry: String },
    /// Comma category of two functors into a common base.
    Comma {
        left: String,
        right: String,
        /// Check the universal property against the test shapes.
        #[arg(long)]
        universal: bool,
    },
    /// Strict pullback of two functors into a common base.
    Pullback {
        left: String,
        right: String,
        #[arg(long)]
        universal: bool,
    },
    #[command(subcommand)]
    Fib(FibCommand),
    #[command(subcommand)]
    Comonad(ComonadCommand),
    #[command(subcommand)]
    Colim(ColimCommand),
    /// Emit a DOT diagram of a category.
    Dot {
        entry: String,
        /// Cluster objects by the fibers of this functor.
        #[arg(long)]
        cluster_by: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum FibCommand {
    /// Is the functor a Grothendieck fibration?
    Check { functor: String },
    /// The canonical cleavage.
    Cleavage { functor: String },
    /// Is the canonical cleavage split?
    SplitCheck { functor: String },
    /// The comma category B/F with M(F) and its unit.
    Monad { functor: String },
    /// Colax-idempotency checks of the comma monad at F.
    ColaxCheck { functor: String },
    /// The pseudo-algebra structure of a cloven fibration.
    Alpha { functor: String },
}

#[derive(Debug, Subcommand)]
pub enum ComonadCommand {
    /// Build G_F and N(F).
    Build { functor: String },
    /// The counit evaluating at identities.
    Counit { functor: String },
    /// Counit laws of the comultiplication.
    Laws { functor: String },
    /// Coalgebra structure of the canonical cleavage.
    Coalgebra { functor: String },
    /// The equivalent split fibration.
    Split { functor: String },
}

#[derive(Debug, Subcommand)]
pub enum ColimCommand {
    /// Coequalizer of a parallel pair.
    Coeq {
        g: String,
        h: String,
        /// Compare the quotient with this category up to isomorphism.
        #[arg(long)]
        compare: Option<String>,
        #[arg(long)]
        universal: bool,
    },
    /// Regular-epimorphism criterion.
    Regepi { functor: String },
    /// Conduché condition.
    Conduche { functor: String },
    /// Change of base along D against the coequalizer of G, H over P.
    Preserve { d: String, g: String, h: String, p: String },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Validate { .. } => "validate",
            Command::Comma { .. } => "comma",
            Command::Pullback { .. } => "pullback",
            Command::Dot { .. } => "dot",
            Command::Fib(c) => match c {
                FibCommand::Check { .. } => "fib check",
                FibCommand::Cleavage { .. } => "fib cleavage",
                FibCommand::SplitCheck { .. } => "fib split-check",
                FibCommand::Monad { .. } => "fib monad",
                FibCommand::ColaxCheck { .. } => "fib colax-check",
                FibCommand::Alpha { .. } => "fib alpha",
            },
            Command::Comonad(c) => match c {
                ComonadCommand::Build { .. } => "comonad build",
                ComonadCommand::Counit { .. } => "comonad counit",
                ComonadCommand::Laws { .. } => "comonad laws",
                ComonadCommand::Coalgebra { .. } => "comonad coalgebra",
                ComonadCommand::Split { .. } => "comonad split",
            },
            Command::Colim(c) => match c {
                ColimCommand::Coeq { .. } => "colim coeq",
                ColimCommand::Regepi { .. } => "colim regepi",
                ColimCommand::Conduche { .. } => "colim conduche",
                ColimCommand::Preserve { .. } => "colim preserve",
            },
        }
    }
}
