use super::Matrix;
use crate::error::{Error, Result};
use crate::scalar::ExactInt;

/// Solves `M·x ≡ b (mod 2)` for a square `M` invertible over GF(2).
/// The solution is returned as a 0/1 vector.
pub fn solve_mod2<T: ExactInt>(m: &Matrix<T>, b: &[T]) -> Result<Vec<T>> {
    let n = m.ensure_square()?;
    if b.len() != n {
        return Err(Error::Dimension(format!("right-hand side has length {}, expected {n}", b.len())));
    }
    let two = T::from_i64_exact(2);
    let odd = |v: &T| !v.mod_floor(&two).is_zero();
    // augmented rows over GF(2)
    let mut rows: Vec<Vec<bool>> = (0..n)
        .map(|i| m.row(i).iter().map(odd).chain(std::iter::once(odd(&b[i]))).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| rows[r][col]).ok_or(Error::SingularMod2)?;
        rows.swap(col, pivot);
        for r in 0..n {
            if r != col && rows[r][col] {
                let (src, dst) = if r < col {
                    let (lo, hi) = rows.split_at_mut(col);
                    (&hi[0], &mut lo[r])
                } else {
                    let (lo, hi) = rows.split_at_mut(r);
                    (&lo[col], &mut hi[0])
                };
                for (d, s) in dst.iter_mut().zip(src) {
                    *d ^= *s;
                }
            }
        }
    }
    Ok(rows.iter().map(|row| if row[n] { T::one() } else { T::zero() }).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Int, IntMatrix};

    fn ints(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| Int::from(x)).collect()
    }

    #[test]
    fn examples() {
        let m = IntMatrix::from_i64_rows(&[&[-2, 1], &[1, -3]]).unwrap();
        assert_eq!(solve_mod2(&m, &ints(&[-2, -3])).unwrap(), ints(&[1, 0]));

        let id = IntMatrix::identity(3);
        assert_eq!(solve_mod2(&id, &ints(&[5, -4, -7])).unwrap(), ints(&[1, 0, 1]));

        let singular = IntMatrix::from_i64_rows(&[&[2, 0], &[0, 1]]).unwrap();
        assert_eq!(solve_mod2(&singular, &ints(&[1, 0])), Err(Error::SingularMod2));
    }

    #[test]
    fn solution_satisfies_system() {
        let m = IntMatrix::from_i64_rows(&[&[-3, 1, 1, 0], &[1, -2, 0, 1], &[1, 0, -3, 1], &[0, 1, 1, -4]])
            .unwrap();
        let b = ints(&[1, 0, 1, 1]);
        let x = solve_mod2(&m, &b).unwrap();
        let two = Int::from(2);
        for (lhs, rhs) in m.mul_vec(&x).iter().zip(&b) {
            assert_eq!(num_integer::Integer::mod_floor(&(lhs - rhs), &two), Int::from(0));
        }
    }
}
