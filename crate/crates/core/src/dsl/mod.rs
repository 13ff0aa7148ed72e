//! A small language for Sweedler-notation identities, checked by contraction
//! against a [`PairedSystem`](crate::duality::PairedSystem).
//!
//! ```text
//! # weak KMS property of the left integral
//! kms.phi: forall a in A, b in A . phi(a b) = phi(b sigma(a))
//! ```
//!
//! Variables are declared over `A` or `Ahat` and range over basis elements.
//! `a(1) a(2)` are Sweedler legs. In finite dimension every coproduct already
//! lands in `A⊗A`, so legs need no covering by auxiliary elements: the
//! expansion is a finite sum over structure constants. Unary maps and
//! functionals apply on whichever side their argument lives (`sigma(y)` for
//! `y` in `Ahat` is σ̂). Constants: `one`, `onehat`, `delta`, `deltainv`,
//! `dhat`, `dhatinv`, `tau`.

pub mod ast;
pub mod corpus;
pub mod eval;
pub mod lexer;
pub mod parser;
pub mod sort;

use thiserror::Error;

pub use ast::{Action, Const, Decl, Expr, Func, IdentityProgram, Sort};
pub use corpus::{
    load_corpus_dir, negative_corpus, parse_corpus, parse_files, run_corpus, standard_corpus, CorpusFile,
};
pub use eval::{Counterexample, EvalContext, IdentityOutcome, Value};
pub use sort::{check, CheckedIdentity};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DslError {
    #[error("syntax error at line {line}, column {column}: {msg}")]
    Syntax { line: usize, column: usize, msg: String },
    #[error("identity `{identity}`: sort error in `{subterm}`: {msg}")]
    Sort { identity: String, subterm: String, msg: String },
    #[error("identity `{identity}`: {msg}")]
    Legs { identity: String, msg: String },
    #[error("duplicate identity name `{0}`")]
    Duplicate(String),
    #[error("{path}: {msg}")]
    Io { path: String, msg: String },
    #[error("{path}: {source}")]
    InFile {
        path: String,
        #[source]
        source: Box<DslError>,
    },
}

/// Parses and checks a single identity.
pub fn parse(src: &str) -> Result<CheckedIdentity, DslError> {
    check(&parser::parse_identity(src, 1)?)
}
