use super::Matrix;
use crate::error::{Error, Result};
use crate::scalar::ExactInt;

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
///
/// Every intermediate entry is itself a minor of the input, so the divisions
/// are exact and entries never grow beyond the Hadamard bound.
pub fn determinant<T: ExactInt>(m: &Matrix<T>) -> Result<T> {
    let n = m.ensure_square()?;
    if n == 0 {
        return Ok(T::one());
    }
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                Some(i) => {
                    a.swap_rows(k, i);
                    negate = !negate;
                }
                None => return Ok(T::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[(i, j)].clone() * a[(k, k)].clone() - a[(i, k)].clone() * a[(k, j)].clone();
                a[(i, j)] = num / prev.clone();
            }
            a[(i, k)] = T::zero();
        }
        prev = a[(k, k)].clone();
    }
    let d = a[(n - 1, n - 1)].clone();
    Ok(if negate { -d } else { d })
}

/// Classical adjugate, so that `M · adj(M) = det(M) · I`. Defined for singular
/// input too.
pub fn adjugate<T: ExactInt>(m: &Matrix<T>) -> Result<Matrix<T>> {
    let n = m.ensure_square()?;
    match n {
        0 => Ok(Matrix::zeros(0, 0)),
        1 => Ok(Matrix::identity(1)),
        _ => {
            let mut adj = Matrix::zeros(n, n);
            for i in 0..n {
                for j in 0..n {
                    let c = determinant(&m.minor(i, j))?;
                    adj[(j, i)] = if (i + j) % 2 == 0 { c } else { -c };
                }
            }
            Ok(adj)
        }
    }
}

/// Leading principal minors `Δ_1, …, Δ_n`.
pub fn leading_principal_minors<T: ExactInt>(m: &Matrix<T>) -> Result<Vec<T>> {
    let n = m.ensure_square()?;
    (1..=n).map(|k| determinant(&m.leading(k))).collect()
}

/// Sylvester's criterion for negative definiteness: `Δ_k` has sign `(-1)^k`
/// for every `k`. The empty form is vacuously negative definite.
pub fn is_negative_definite<T: ExactInt>(m: &Matrix<T>) -> Result<bool> {
    m.ensure_square()?;
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    for k in 1..=m.rows() {
        let minor = determinant(&m.leading(k))?;
        let ok = if k % 2 == 0 { minor.is_positive() } else { minor.is_negative() };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::IntMatrix;
    use num_bigint::BigInt;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows).unwrap()
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(determinant(&IntMatrix::zeros(0, 0)).unwrap(), BigInt::from(1));
        assert_eq!(determinant(&m(&[&[-2, 1], &[1, -2]])).unwrap(), BigInt::from(3));
        assert_eq!(determinant(&m(&[&[-2, 1], &[1, -3]])).unwrap(), BigInt::from(5));
        assert_eq!(determinant(&m(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]])).unwrap(), BigInt::from(-1));
        assert_eq!(determinant(&m(&[&[1, 2], &[2, 4]])).unwrap(), BigInt::from(0));
    }

    #[test]
    fn non_square_rejected() {
        let r = m(&[&[1, 2, 3]]);
        assert_eq!(determinant(&r), Err(Error::NotSquare { rows: 1, cols: 3 }));
        assert!(adjugate(&r).is_err());
    }

    #[test]
    fn adjugate_examples() {
        assert_eq!(adjugate(&m(&[&[-2]])).unwrap(), m(&[&[1]]));
        assert_eq!(adjugate(&m(&[&[-2, 1], &[1, -2]])).unwrap(), m(&[&[-2, -1], &[-1, -2]]));
        assert_eq!(adjugate(&IntMatrix::identity(3)).unwrap(), IntMatrix::identity(3));
    }

    #[test]
    fn definiteness_examples() {
        assert!(is_negative_definite(&m(&[&[-2, 1], &[1, -2]])).unwrap());
        assert!(!is_negative_definite(&m(&[&[-2, 1], &[1, 3]])).unwrap());
        assert!(is_negative_definite(&IntMatrix::zeros(0, 0)).unwrap());
        assert!(!is_negative_definite(&m(&[&[-1, 1], &[1, -1]])).unwrap());
        assert_eq!(is_negative_definite(&m(&[&[-2, 1], &[0, -2]])), Err(Error::NotSymmetric));
    }

    #[test]
    fn bigint_and_machine_scalars_agree() {
        let rows: &[&[i64]] = &[&[4, -2, 7, 1], &[3, 0, -5, 2], &[-1, 6, 2, 2], &[8, 1, 1, -3]];
        let big = determinant(&m(rows)).unwrap();
        let small = determinant(&Matrix::<i64>::from_i64_rows(rows).unwrap()).unwrap();
        assert_eq!(big, BigInt::from(small));
    }
}
