//! Preferred answer sets of prioritized extended logic programs.
//!
//! A program is parsed, its answer sets are enumerated, and argumentation
//! structures are built from its rules by unfolding (R1), union (R2) and
//! assumption extension (R3). Rule preferences turn contradictions between
//! basic structures into attacks, which spread along derivations by Q1–Q6.
//! An answer set is preferred when some derivation of its complete
//! structure is not blocked by an attack from a complete structure.
//!
//! ```
//! let program = praset::parse_program(
//!     "r1: b :- a, not -b.\nr2: -b :- not b.\nr3: a :- not -a.\nprefer r1 > r2.",
//! )?;
//! let analysis = praset::analyze(&program, &praset::Options::default())?;
//! let preferred: Vec<String> = analysis.preferred().map(|s| s.to_string()).collect();
//! assert_eq!(preferred, ["{a, b}"]);
//! # Ok::<(), praset::Error>(())
//! ```

mod context;
mod error;
mod lang;
mod parser;

pub mod attacks;
pub mod principles;
pub mod random;
pub mod report;
pub mod semantics;
pub mod structures;

pub use attacks::{analyze, preferred_answer_sets, Analysis, DerivationMode, Options};
pub use context::{CompiledRule, Context, ObjSet, MAX_ATOMS};
pub use error::{Error, Result};
pub use lang::{
    complement, is_consistent, validate_preferences, Atom, Literal, ObjectiveLiteral, PreferenceOrder,
    PrioritizedProgram, Rule,
};
pub use parser::parse_program;
pub use semantics::{answer_sets, AnswerSet, GeneratingSet, Interpretation};
pub use structures::{ArgStructure, StructureId, StructureUniverse};
