//! Reduced row echelon matrices over the exact rationals.
//!
//! The row space representation is canonical: two matrices are equal iff the
//! row spaces agree, which makes span comparisons and membership tests exact
//! and order-independent.

use num_traits::{One, Zero};

use crate::vector::{Rat, RationalVector};

/// A matrix in reduced row echelon form with no zero rows.
///
/// Invariants: rows are ordered by strictly increasing pivot column, every
/// pivot entry is one, and a pivot column is zero in all other rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RrefMatrix {
    cols: usize,
    rows: Vec<RationalVector>,
}

impl RrefMatrix {
    pub fn new(cols: usize) -> Self {
        RrefMatrix {
            cols,
            rows: Vec::new(),
        }
    }

    /// An identity matrix, i.e. the full space of dimension `cols`.
    pub fn identity(cols: usize) -> Self {
        let rows = (0..cols)
            .map(|i| RationalVector::unit(cols, i).expect("i < cols"))
            .collect();
        RrefMatrix { cols, rows }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[RationalVector] {
        &self.rows
    }

    fn pivot(row: &RationalVector) -> usize {
        row.first_nonzero()
            .map(|(k, _)| k)
            .expect("rows are nonzero by invariant")
    }

    /// Reduces `v` against the rows, eliminating every pivot column.
    pub fn reduce(&self, v: &RationalVector) -> RationalVector {
        let mut out = v.clone();
        for row in &self.rows {
            let p = Self::pivot(row);
            let c = out.entry(p).clone();
            if !c.is_zero() {
                out = RationalVector::linear_combination(&Rat::one(), &out, &(-c), row)
                    .expect("row lengths agree by invariant");
            }
        }
        out
    }

    /// True iff `v` lies in the row space.
    pub fn contains(&self, v: &RationalVector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Inserts `v` into the row space. Returns `false` (and changes nothing)
    /// when `v` is already in the span, `true` when the rank grew.
    pub fn insert(&mut self, v: &RationalVector) -> bool {
        assert_eq!(v.dim(), self.cols, "row length must match column count");
        let reduced = self.reduce(v);
        let Some((pivot, lead)) = reduced.first_nonzero() else {
            return false;
        };
        let lead = lead.clone();
        let normalized = reduced.scaled(&lead.recip());
        for row in &mut self.rows {
            let c = row.entry(pivot).clone();
            if !c.is_zero() {
                *row = RationalVector::linear_combination(&Rat::one(), row, &(-c), &normalized)
                    .expect("row lengths agree by invariant");
            }
        }
        let at = self
            .rows
            .iter()
            .position(|row| Self::pivot(row) > pivot)
            .unwrap_or(self.rows.len());
        self.rows.insert(at, normalized);
        true
    }

    /// Coordinates of `v` in the row basis, or `None` when `v` is outside the
    /// row space. Since pivot columns are unit columns, the coordinate of row
    /// `k` is just `v[pivot_k]`.
    pub fn coordinates(&self, v: &RationalVector) -> Option<Vec<Rat>> {
        let mut coords = Vec::with_capacity(self.rows.len());
        let mut residual = v.clone();
        for row in &self.rows {
            let c = residual.entry(Self::pivot(row)).clone();
            if !c.is_zero() {
                residual =
                    RationalVector::linear_combination(&Rat::one(), &residual, &(-c.clone()), row)
                        .expect("row lengths agree by invariant");
            }
            coords.push(c);
        }
        if residual.is_zero() {
            Some(coords)
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rv(entries: &[i64]) -> RationalVector {
        RationalVector::from_i64(entries)
    }

    #[test]
    fn insert_builds_rref() {
        let mut m = RrefMatrix::new(3);
        assert!(m.insert(&rv(&[0, 2, 4])));
        assert!(m.insert(&rv(&[1, 1, 1])));
        assert!(!m.insert(&rv(&[1, 3, 5])));
        assert_eq!(m.rank(), 2);
        assert_eq!(m.rows()[0], rv(&[1, 0, -1]));
        assert_eq!(m.rows()[1], rv(&[0, 1, 2]));
    }

    #[test]
    fn rref_is_canonical_under_insertion_order() {
        let vectors = [rv(&[1, 2, 3]), rv(&[2, 0, 1]), rv(&[3, 2, 4])];
        let mut a = RrefMatrix::new(3);
        let mut b = RrefMatrix::new(3);
        for v in &vectors {
            a.insert(v);
        }
        for v in vectors.iter().rev() {
            b.insert(v);
        }
        assert_eq!(a, b);
    }

    #[test]
    fn coordinates_solve_membership() {
        let mut m = RrefMatrix::new(3);
        m.insert(&rv(&[1, 0, 1]));
        m.insert(&rv(&[0, 1, 1]));
        let v = rv(&[2, 3, 5]);
        let coords = m.coordinates(&v).unwrap();
        assert_eq!(
            coords,
            vec![Rat::from_integer(2.into()), Rat::from_integer(3.into())]
        );
        assert_eq!(m.coordinates(&rv(&[0, 0, 1])), None);
    }
}
