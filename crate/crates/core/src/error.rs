use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at {line}:{col}: expected {expected}")]
    Syntax { line: usize, col: usize, expected: String },

    #[error("duplicate rule name `{name}` (line {line})")]
    DuplicateRuleName { name: String, line: usize },

    #[error("unknown rule `{name}` in preference (line {line}, col {col})")]
    UnknownRuleInPrefer { name: String, line: usize, col: usize },

    #[error("preference cycle: {} < {}", .0.join(" < "), .0[0])]
    PreferenceCycle(Vec<String>),

    #[error("invalid atom name `{0}`")]
    InvalidAtom(String),

    #[error("program has {0} atoms; at most 32 are supported")]
    TooManyAtoms(usize),

    #[error("resource limit exceeded: more than {limit} {what}")]
    ResourceLimit { what: &'static str, limit: usize },

    #[error("interpretation is not total over the program signature")]
    NotTotal,

    #[error("precondition violated: {0}")]
    PreconditionViolation(String),

    #[error("unknown answer set: {0}")]
    UnknownAnswerSet(String),
}

impl Error {
    /// Parse-level errors (syntax, names, preference order) as opposed to
    /// resource or usage errors.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. }
                | Error::DuplicateRuleName { .. }
                | Error::UnknownRuleInPrefer { .. }
                | Error::PreferenceCycle(_)
                | Error::InvalidAtom(_)
        )
    }
}
