//! Exact square matrices over a field element domain.

use crate::field::{Field, FieldElement};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix I + X is singular")]
    SingularDenominator,
    #[error("dimension mismatch")]
    DimensionMismatch,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareMatrix {
    dim: usize,
    entries: Vec<FieldElement>,
}

impl SquareMatrix {
    pub fn from_rows(rows: Vec<Vec<FieldElement>>) -> Result<Self, MatrixError> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) || dim == 0 {
            return Err(MatrixError::DimensionMismatch);
        }
        Ok(SquareMatrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn identity(field: Field, dim: usize) -> Self {
        let mut entries = vec![field.zero(); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = field.one();
        }
        SquareMatrix { dim, entries }
    }

    pub fn zero(field: Field, dim: usize) -> Self {
        SquareMatrix {
            dim,
            entries: vec![field.zero(); dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldElement {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElement) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn field(&self) -> Field {
        self.entries[0].field()
    }

    pub fn transpose(&self) -> SquareMatrix {
        let mut out = self.clone();
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.entries[j * self.dim + i] = self.entries[i * self.dim + j].clone();
            }
        }
        out
    }

    pub fn neg(&self) -> SquareMatrix {
        SquareMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(FieldElement::neg).collect(),
        }
    }

    pub fn add(&self, other: &SquareMatrix) -> Result<SquareMatrix, MatrixError> {
        if self.dim != other.dim {
            return Err(MatrixError::DimensionMismatch);
        }
        Ok(SquareMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    pub fn sub(&self, other: &SquareMatrix) -> Result<SquareMatrix, MatrixError> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &SquareMatrix) -> Result<SquareMatrix, MatrixError> {
        if self.dim != other.dim {
            return Err(MatrixError::DimensionMismatch);
        }
        let n = self.dim;
        let field = self.field();
        let mut out = SquareMatrix::zero(field, n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = field.zero();
                for k in 0..n {
                    acc = acc.add(&self.get(i, k).mul(other.get(k, j)));
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn is_identity(&self) -> bool {
        for i in 0..self.dim {
            for j in 0..self.dim {
                let e = self.get(i, j);
                if i == j {
                    if !e.is_one() {
                        return false;
                    }
                } else if !e.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Exact inverse by elimination on the augmented system; fails on a
    /// singular input.
    pub fn inverse(&self) -> Result<SquareMatrix, MatrixError> {
        let n = self.dim;
        let field = self.field();
        let mut a = self.clone();
        let mut inv = SquareMatrix::identity(field, n);
        for col in 0..n {
            let pivot = (col..n).find(|&i| !a.get(i, col).is_zero());
            let Some(pivot) = pivot else {
                return Err(MatrixError::SingularDenominator);
            };
            if pivot != col {
                for j in 0..n {
                    let tmp = a.get(pivot, j).clone();
                    a.set(pivot, j, a.get(col, j).clone());
                    a.set(col, j, tmp);
                    let tmp = inv.get(pivot, j).clone();
                    inv.set(pivot, j, inv.get(col, j).clone());
                    inv.set(col, j, tmp);
                }
            }
            let scale = a
                .get(col, col)
                .inverse()
                .map_err(|_| MatrixError::SingularDenominator)?;
            for j in 0..n {
                a.set(col, j, a.get(col, j).mul(&scale));
                inv.set(col, j, inv.get(col, j).mul(&scale));
            }
            for i in 0..n {
                if i == col || a.get(i, col).is_zero() {
                    continue;
                }
                let factor = a.get(i, col).clone();
                for j in 0..n {
                    let za = a.get(col, j).mul(&factor);
                    a.set(i, j, a.get(i, j).sub(&za));
                    let zi = inv.get(col, j).mul(&factor);
                    inv.set(i, j, inv.get(i, j).sub(&zi));
                }
            }
        }
        Ok(inv)
    }

    pub fn is_skew_symmetric(&self) -> bool {
        for i in 0..self.dim {
            if !self.get(i, i).is_zero() {
                return false;
            }
            for j in (i + 1)..self.dim {
                if *self.get(i, j) != self.get(j, i).neg() {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rationals
    }

    fn mat(rows: &[&[i64]]) -> SquareMatrix {
        SquareMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| q().element_from_i64(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn inverse_of_invertible() {
        let m = mat(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).unwrap().is_identity());
        assert!(inv.mul(&m).unwrap().is_identity());
    }

    #[test]
    fn singular_detected() {
        let m = mat(&[&[1, 2], &[2, 4]]);
        assert_eq!(m.inverse(), Err(MatrixError::SingularDenominator));
    }

    #[test]
    fn skew_predicate() {
        assert!(mat(&[&[0, 3], &[-3, 0]]).is_skew_symmetric());
        assert!(!mat(&[&[1, 3], &[-3, 0]]).is_skew_symmetric());
        assert!(!mat(&[&[0, 3], &[3, 0]]).is_skew_symmetric());
    }
}
