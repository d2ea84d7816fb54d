use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} is out of range 1..={m}")]
    VertexOutOfRange { vertex: usize, m: usize },

    #[error("{m} vertices requested but at most {max} are supported here")]
    TooManyVertices { m: usize, max: usize },

    #[error("{0} is not a face of the complex")]
    NotAFace(String),

    #[error("the first complex is not a subcomplex of the second")]
    NotSubcomplex,

    #[error("complexes live on different vertex sets ({0} vs {1} vertices)")]
    VertexCountMismatch(usize, usize),

    #[error("boundary matrix {index} has shape {rows}x{cols}, expected {expected_rows}x{expected_cols}")]
    BoundaryShape {
        index: usize,
        rows: usize,
        cols: usize,
        expected_rows: usize,
        expected_cols: usize,
    },

    #[error("boundary composition d{k} . d{next} is not zero", k = .0, next = .0 + 1)]
    BoundaryNotNilpotent(usize),

    #[error("boundary cell {0} is not part of the cubical complex")]
    MissingBoundaryCell(String),

    #[error("letter {letter} does not belong to the {expected} group")]
    LetterKind { letter: String, expected: String },

    #[error("cannot parse word letter {0:?}")]
    WordSyntax(String),
}

pub type Result<T> = std::result::Result<T, Error>;
