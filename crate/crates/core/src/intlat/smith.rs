use super::{adjugate, determinant, Matrix};
use crate::error::{Error, Result};
use crate::scalar::ExactInt;

/// `left · M · right = diagonal`, with `left`, `right` unimodular and the
/// diagonal entries nonnegative, each dividing the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition<T> {
    pub left: Matrix<T>,
    pub diagonal: Matrix<T>,
    pub right: Matrix<T>,
}

impl<T: ExactInt> SmithDecomposition<T> {
    /// Diagonal entries `d_1 | d_2 | …`, `min(rows, cols)` of them.
    pub fn invariant_factors(&self) -> Vec<T> {
        self.diagonal.diagonal()
    }

    /// Checks every structural invariant against the original matrix.
    pub fn verify(&self, m: &Matrix<T>) -> bool {
        let d = &self.diagonal;
        let recomputed = &(&self.left * m) * &self.right;
        let diagonal_only = (0..d.rows()).all(|i| (0..d.cols()).all(|j| i == j || d[(i, j)].is_zero()));
        let factors = self.invariant_factors();
        let chain = factors.iter().all(|f| !f.is_negative())
            && factors.windows(2).all(|w| {
                if w[0].is_zero() {
                    w[1].is_zero()
                } else {
                    (w[1].clone() % w[0].clone()).is_zero()
                }
            });
        let unimodular = |u: &Matrix<T>| determinant(u).map(|x| x.abs().is_one()).unwrap_or(false);
        recomputed == *d && diagonal_only && chain && unimodular(&self.left) && unimodular(&self.right)
    }
}

fn smallest_nonzero<T: ExactInt>(a: &Matrix<T>, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), T)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let v = a[(i, j)].abs();
            if v.is_zero() {
                continue;
            }
            if best.as_ref().map_or(true, |(_, b)| v < *b) {
                best = Some(((i, j), v));
            }
        }
    }
    best.map(|(pos, _)| pos)
}

/// Smith normal form by pivot reduction, always pivoting on the entry of
/// smallest absolute value (first in row-major order on ties).
pub fn smith_normal_form<T: ExactInt>(m: &Matrix<T>) -> SmithDecomposition<T> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut left = Matrix::identity(rows);
    let mut right = Matrix::identity(cols);

    'outer: for t in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = smallest_nonzero(&a, t) else {
                break 'outer;
            };
            a.swap_rows(t, pi);
            left.swap_rows(t, pi);
            a.swap_cols(t, pj);
            right.swap_cols(t, pj);

            let pivot = a[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..rows {
                let q = a[(i, t)].div_floor(&pivot);
                if !q.is_zero() {
                    a.add_row_multiple(i, t, &-q.clone());
                    left.add_row_multiple(i, t, &-q);
                }
                clean &= a[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                let q = a[(t, j)].div_floor(&pivot);
                if !q.is_zero() {
                    a.add_col_multiple(j, t, &-q.clone());
                    right.add_col_multiple(j, t, &-q);
                }
                clean &= a[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            // The pivot must divide the remaining block; otherwise fold an
            // offending row into row t and reduce again.
            let offending = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !(a[(i, j)].clone() % pivot.clone()).is_zero()));
            match offending {
                Some(i) => {
                    a.add_row_multiple(t, i, &T::one());
                    left.add_row_multiple(t, i, &T::one());
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            left.negate_row(t);
        }
    }
    SmithDecomposition { left, diagonal: a, right }
}

/// Isomorphism type of a finite abelian group `⊕ Z/d_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianGroupStructure<T> {
    /// The invariant factors greater than one, in divisibility order.
    pub invariant_factors: Vec<T>,
    pub order: T,
    pub cyclic: bool,
}

/// Cokernel `Z^n / M·Z^n` of a nonsingular square matrix together with
/// coordinates on it.
///
/// An element is written as a vector `h` with `0 ≤ h_i < d_i`, one entry per
/// nontrivial invariant factor. The trivial group has the empty label.
#[derive(Clone, Debug)]
pub struct Cokernel<T> {
    structure: AbelianGroupStructure<T>,
    /// Rows of the left Smith factor at the nontrivial positions.
    projection: Vec<Vec<T>>,
    /// Matching columns of the inverse of the left Smith factor.
    sections: Vec<Vec<T>>,
    dim: usize,
}

pub fn cokernel<T: ExactInt>(m: &Matrix<T>) -> Result<Cokernel<T>> {
    let n = m.ensure_square()?;
    if determinant(m)?.is_zero() {
        return Err(Error::Singular);
    }
    let snf = smith_normal_form(m);
    let factors = snf.invariant_factors();
    let positions: Vec<usize> = (0..n).filter(|&i| !factors[i].is_one()).collect();
    let left_det = determinant(&snf.left)?;
    let left_inv = adjugate(&snf.left)?.scale(&left_det);
    let invariant_factors: Vec<T> = positions.iter().map(|&i| factors[i].clone()).collect();
    let order = invariant_factors.iter().fold(T::one(), |acc, d| acc * d.clone());
    let cyclic = invariant_factors.len() <= 1;
    Ok(Cokernel {
        structure: AbelianGroupStructure { invariant_factors, order, cyclic },
        projection: positions.iter().map(|&i| snf.left.row(i).to_vec()).collect(),
        sections: positions
            .iter()
            .map(|&i| (0..n).map(|k| left_inv[(k, i)].clone()).collect())
            .collect(),
        dim: n,
    })
}

impl<T: ExactInt> Cokernel<T> {
    pub fn structure(&self) -> &AbelianGroupStructure<T> {
        &self.structure
    }

    pub fn order(&self) -> &T {
        &self.structure.order
    }

    pub fn moduli(&self) -> &[T] {
        &self.structure.invariant_factors
    }

    pub fn is_cyclic(&self) -> bool {
        self.structure.cyclic
    }

    /// Class of an integer vector in the invariant-factor coordinates.
    pub fn class_of(&self, x: &[T]) -> Vec<T> {
        self.projection
            .iter()
            .zip(self.moduli())
            .map(|(row, d)| {
                row.iter()
                    .zip(x)
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
                    .mod_floor(d)
            })
            .collect()
    }

    /// An integer vector whose class is `label`.
    pub fn representative(&self, label: &[T]) -> Vec<T> {
        let mut out = vec![T::zero(); self.dim];
        for (col, h) in self.sections.iter().zip(label) {
            for (o, c) in out.iter_mut().zip(col) {
                *o = o.clone() + c.clone() * h.clone();
            }
        }
        out
    }

    /// All labels in lexicographic order, starting with zero.
    pub fn elements(&self) -> Vec<Vec<T>> {
        let mut out = vec![Vec::new()];
        for d in self.moduli() {
            let mut next = Vec::new();
            for prefix in &out {
                let mut k = T::zero();
                while k < *d {
                    let mut v = prefix.clone();
                    v.push(k.clone());
                    next.push(v);
                    k = k + T::one();
                }
            }
            out = next;
        }
        out
    }

    pub fn negate(&self, label: &[T]) -> Vec<T> {
        label.iter().zip(self.moduli()).map(|(h, d)| (-h.clone()).mod_floor(d)).collect()
    }

    pub fn add(&self, a: &[T], b: &[T]) -> Vec<T> {
        a.iter()
            .zip(b)
            .zip(self.moduli())
            .map(|((x, y), d)| (x.clone() + y.clone()).mod_floor(d))
            .collect()
    }

    pub fn scale(&self, label: &[T], k: &T) -> Vec<T> {
        label.iter().zip(self.moduli()).map(|(h, d)| (h.clone() * k.clone()).mod_floor(d)).collect()
    }
}
