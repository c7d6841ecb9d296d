//! Finite magmas presented by Cayley tables, and law reports.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MagmaError {
    #[error("table is not square: {rows} rows for {order} elements")]
    NotSquare { rows: usize, order: usize },
    #[error("table entry {value} at ({row}, {col}) is out of range")]
    OutOfRange {
        row: usize,
        col: usize,
        value: usize,
    },
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
}

/// Outcome of checking idempotence, commutativity and associativity of a
/// binary operation. A present counterexample is a triple (a, b, c) with
/// (a·b)·c ≠ a·(b·c).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawReport<E> {
    pub idempotent: bool,
    pub commutative: bool,
    pub associativity_counterexample: Option<(E, E, E)>,
}

impl<E> LawReport<E> {
    pub fn is_associative(&self) -> bool {
        self.associativity_counterexample.is_none()
    }

    /// True for a quasi-semilattice: idempotent and commutative, with
    /// associativity left to the counterexample field.
    pub fn is_quasi_semilattice(&self) -> bool {
        self.idempotent && self.commutative
    }
}

/// A finite magma given by labels and a multiplication table,
/// `table[i][j] = index of the product of element i and element j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyTable {
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
}

impl CayleyTable {
    pub fn new(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self, MagmaError> {
        let order = labels.len();
        for (i, a) in labels.iter().enumerate() {
            if labels[i + 1..].contains(a) {
                return Err(MagmaError::DuplicateLabel(a.clone()));
            }
        }
        if table.len() != order {
            return Err(MagmaError::NotSquare {
                rows: table.len(),
                order,
            });
        }
        for (row, r) in table.iter().enumerate() {
            if r.len() != order {
                return Err(MagmaError::NotSquare { rows: r.len(), order });
            }
            for (col, &value) in r.iter().enumerate() {
                if value >= order {
                    return Err(MagmaError::OutOfRange { row, col, value });
                }
            }
        }
        Ok(CayleyTable { labels, table })
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn op(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    /// Exhaustive law check over all elements, pairs and triples.
    pub fn check_laws(&self) -> LawReport<usize> {
        let n = self.order();
        let idempotent = (0..n).all(|i| self.op(i, i) == i);
        let commutative = (0..n).all(|i| (0..n).all(|j| self.op(i, j) == self.op(j, i)));
        let mut counterexample = None;
        'search: for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.op(self.op(a, b), c) != self.op(a, self.op(b, c)) {
                        counterexample = Some((a, b, c));
                        break 'search;
                    }
                }
            }
        }
        LawReport {
            idempotent,
            commutative,
            associativity_counterexample: counterexample,
        }
    }
}
