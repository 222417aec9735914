//! Brute-force reference implementations.
//!
//! Deliberately naive and independent of the closed-form paths: subset
//! enumeration, Laplace expansion and textbook Gaussian elimination with
//! first-nonzero pivoting. Used by the test suites and by `--verify`.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::DenseMatrix;
use crate::symfuncs::NodeSet;

/// Solves `m x = q` by Gaussian elimination with first-nonzero pivoting.
pub fn gaussian_solve<F: Field>(m: &DenseMatrix<F>, q: &[F]) -> Result<Vec<F>> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    if q.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: q.len(),
        });
    }
    let mut a = m.to_rows();
    let mut b = q.to_vec();
    for k in 0..n {
        let pivot = (k..n).find(|&r| !a[r][k].is_zero()).ok_or(Error::Singular)?;
        a.swap(k, pivot);
        b.swap(k, pivot);
        for r in k + 1..n {
            if a[r][k].is_zero() {
                continue;
            }
            let factor = a[r][k].try_div(&a[k][k])?;
            let (upper, lower) = a.split_at_mut(r);
            let (pivot_row, row) = (&upper[k], &mut lower[0]);
            row[k] = F::zero();
            for c in k + 1..n {
                row[c] = row[c].clone() - factor.clone() * pivot_row[c].clone();
            }
            b[r] = b[r].clone() - factor * b[k].clone();
        }
    }
    let mut x = vec![F::zero(); n];
    for k in (0..n).rev() {
        let mut acc = b[k].clone();
        for c in k + 1..n {
            acc = acc - a[k][c].clone() * x[c].clone();
        }
        x[k] = acc.try_div(&a[k][k])?;
    }
    Ok(x)
}

/// Inverse by solving against each unit vector.
pub fn gaussian_inverse<F: Field>(m: &DenseMatrix<F>) -> Result<DenseMatrix<F>> {
    let n = m.rows();
    let mut inv = DenseMatrix::zeros(n, m.cols());
    for j in 0..n {
        let mut e = vec![F::zero(); n];
        e[j] = F::one();
        let col = gaussian_solve(m, &e)?;
        for (i, v) in col.into_iter().enumerate() {
            inv[(i, j)] = v;
        }
    }
    Ok(inv)
}

/// Row-echelon rank.
pub fn gaussian_rank<F: Field>(m: &DenseMatrix<F>) -> usize {
    let mut a = m.to_rows();
    let (rows, cols) = (m.rows(), m.cols());
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        for r in rank + 1..rows {
            if a[r][c].is_zero() {
                continue;
            }
            let factor = a[r][c].try_div(&a[rank][c]).expect("pivot is nonzero");
            let (top, bottom) = a.split_at_mut(r);
            for (x, y) in bottom[0][c..cols].iter_mut().zip(&top[rank][c..cols]) {
                *x = x.clone() - factor.clone() * y.clone();
            }
        }
        rank += 1;
    }
    rank
}

/// `σ(t)` by summing the products of every size-`t` subset of the nodes.
pub fn sigma_bruteforce<F: Field>(nodes: &NodeSet<F>, t: usize) -> F {
    let values = nodes.as_slice();
    let p = values.len();
    assert!(p < 64, "subset enumeration limited to fewer than 64 nodes");
    let mut total = F::zero();
    for mask in 0u64..(1u64 << p) {
        if mask.count_ones() as usize != t {
            continue;
        }
        let product = (0..p)
            .filter(|k| mask & (1 << k) != 0)
            .fold(F::one(), |acc, k| acc * values[k].clone());
        total = total + product;
    }
    total
}

/// Laplace expansion along the first row.
pub fn cofactor_determinant<F: Field>(m: &DenseMatrix<F>) -> Result<F> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    Ok(laplace(&m.to_rows()))
}

fn laplace<F: Field>(rows: &[Vec<F>]) -> F {
    let n = rows.len();
    if n == 0 {
        return F::one();
    }
    let mut det = F::zero();
    for j in 0..n {
        let minor: Vec<Vec<F>> = rows[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, v)| v.clone()).collect())
            .collect();
        let term = rows[0][j].clone() * laplace(&minor);
        det = if j % 2 == 0 { det + term } else { det - term };
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    fn q(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    fn mat(rows: &[&[i64]]) -> DenseMatrix<Rational> {
        DenseMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect()).unwrap()
    }

    fn vec_q(values: &[i64]) -> Vec<Rational> {
        values.iter().map(|&v| q(v)).collect()
    }

    #[test]
    fn solve_examples() {
        let id = DenseMatrix::<Rational>::identity(3);
        assert_eq!(gaussian_solve(&id, &vec_q(&[4, -1, 7])).unwrap(), vec_q(&[4, -1, 7]));
        let m = mat(&[&[1, 0], &[1, 1]]);
        assert_eq!(gaussian_solve(&m, &vec_q(&[1, 2])).unwrap(), vec_q(&[1, 1]));
    }

    #[test]
    fn solve_needs_row_swap() {
        let m = mat(&[&[0, 1], &[1, 0]]);
        assert_eq!(gaussian_solve(&m, &vec_q(&[3, 5])).unwrap(), vec_q(&[5, 3]));
    }

    #[test]
    fn random_five_by_five_residual_is_zero() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let mut solved = 0;
        while solved < 20 {
            let m = DenseMatrix::from_fn(5, 5, |_, _| Rational::new(rng.gen_range(-9..=9).into(), rng.gen_range(1..=5).into()));
            let b: Vec<Rational> = (0..5).map(|_| q(rng.gen_range(-20..=20))).collect();
            match gaussian_solve(&m, &b) {
                Ok(x) => {
                    assert_eq!(m.mul_vec(&x).unwrap(), b);
                    solved += 1;
                }
                Err(Error::Singular) => assert_eq!(cofactor_determinant(&m).unwrap(), q(0)),
                Err(e) => panic!("{e}"),
            }
        }
    }

    #[test]
    fn singular_and_shape_errors() {
        let m = mat(&[&[1, 2], &[2, 4]]);
        assert_eq!(gaussian_solve(&m, &vec_q(&[1, 1])), Err(Error::Singular));
        let r = mat(&[&[1, 2, 3]]);
        assert!(matches!(gaussian_solve(&r, &vec_q(&[1])), Err(Error::NotSquare { .. })));
        assert!(matches!(gaussian_solve(&m, &vec_q(&[1])), Err(Error::DimensionMismatch { .. })));
        assert!(matches!(cofactor_determinant(&r), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn inverse_oracle() {
        let m = mat(&[&[2, 1], &[1, 1]]);
        let inv = gaussian_inverse(&m).unwrap();
        assert_eq!(inv, mat(&[&[1, -1], &[-1, 2]]));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(gaussian_rank(&DenseMatrix::<Rational>::zeros(3, 4)), 0);
        assert_eq!(gaussian_rank(&DenseMatrix::<Rational>::identity(4)), 4);
        let v = mat(&[&[1, 1, 1, 1, 1], &[1, 2, 4, 8, 16], &[1, 3, 9, 27, 81]]);
        assert_eq!(gaussian_rank(&v), 3);
        assert_eq!(gaussian_rank(&mat(&[&[1, 2], &[2, 4], &[0, 0]])), 1);
        assert_eq!(gaussian_rank(&mat(&[&[0, 1], &[0, 2]])), 1);
    }

    #[test]
    fn sigma_examples() {
        let ns = NodeSet::new(vec_q(&[1, 2, 3])).unwrap();
        assert_eq!(sigma_bruteforce(&ns, 2), q(11));
        assert_eq!(sigma_bruteforce(&ns, 0), q(1));
        let ns = NodeSet::new(vec_q(&[1, 2])).unwrap();
        assert_eq!(sigma_bruteforce(&ns, 5), q(0));
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(cofactor_determinant(&mat(&[&[7]])).unwrap(), q(7));
        assert_eq!(cofactor_determinant(&DenseMatrix::<Rational>::identity(4)).unwrap(), q(1));
        assert_eq!(cofactor_determinant(&mat(&[&[1, 0, 0], &[1, 1, 1], &[1, 2, 4]])).unwrap(), q(2));
        assert_eq!(cofactor_determinant(&mat(&[&[1, 2], &[3, 4]])).unwrap(), q(-2));
    }
}
