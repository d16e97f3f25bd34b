//! Representation counts of integers as sums `x = a + b` drawn from two
//! increasing sequences, evaluated by recursions over the sequences' counting
//! functions and checked against brute-force enumeration.

pub mod applications;
pub mod cli;
pub mod error;
pub mod oracle;
pub mod output;
pub mod recursion;
pub mod sequences;

pub use applications::{Problem, ProblemSpec};
pub use error::{Error, Result};
pub use oracle::{brute_count, PairMode, RepresentationList};
pub use recursion::{CountSeries, Formula, RecursionEvaluator, TheoremKind};
pub use sequences::{intersect, make_sequence, Parity, ParitySequence, SequenceKind, SieveTables};
