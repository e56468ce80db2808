use thiserror::Error;

use crate::insertion::{CaseLabel, Position};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty word")]
    EmptyWord,
    #[error("value {value} appears more than once")]
    DuplicateValue { value: usize },
    #[error("value {value} is outside 1..={n}")]
    ValueOutOfRange { value: usize, n: usize },
    #[error("n = {n} exceeds the enumeration cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("source {source_word} is not in the required {class} class")]
    NotInSourceClass {
        source_word: String,
        class: &'static str,
    },
    #[error("position {position} is not an insertion site for {source_word}")]
    InvalidPosition {
        source_word: String,
        position: Position,
    },
    #[error("no table row matches {source_word} at {position}")]
    NoMatchingRow {
        source_word: String,
        position: Position,
    },
    #[error("rows {labels:?} all match {source_word} at {position}")]
    MultipleRows {
        source_word: String,
        position: Position,
        labels: Vec<CaseLabel>,
    },
    #[error("{word} matches {labels:?} in the case list")]
    Unclassifiable {
        word: String,
        labels: Vec<CaseLabel>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
