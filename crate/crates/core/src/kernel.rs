//! Generalized `p × n` Vandermonde systems.
//!
//! For `p <= n` distinct nodes the kernel of `V_{p,n}` has dimension `n - p`
//! and is spanned by
//!
//! ```text
//! v_1 = ((-1)^p σ(p), ..., σ(2), -σ(1), 1, 0, ..., 0)
//! ```
//!
//! and its shifts `v_k` (the block moved down by `k - 1` positions). Each row
//! of `V v_k` is `a^{k-1} ∏ (a - a_i)` evaluated at a node, hence zero.
//!
//! The full solution set is `ω₀ + ker V_{p,n}` where `ω₀` solves the square
//! system on the first `p` unknowns and is zero elsewhere. Note that this
//! requires `ω = V_{p,p}^{-1} q`, not `V_{p,p} q`.

use crate::error::{Error, Result};
use crate::field::{signed, Field};
use crate::symfuncs::{compute_sigma, NodeSet, SigmaTable};
use crate::vandermonde::{build_matrix, solve_square};

/// Ordered cyclic-shift basis of `ker V_{p,n}`.
#[derive(Debug, Clone, PartialEq)]
pub struct KernelBasis<F> {
    n: usize,
    p: usize,
    vectors: Vec<Vec<F>>,
}

impl<F: Field> KernelBasis<F> {
    /// Ambient dimension.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of nodes.
    pub fn p(&self) -> usize {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vec<F>] {
        &self.vectors
    }
}

/// `ω₀ + span(basis)`: every solution of the generalized system.
#[derive(Debug, Clone, PartialEq)]
pub struct AffineSolutionSpace<F> {
    particular: Vec<F>,
    basis: KernelBasis<F>,
}

impl<F: Field> AffineSolutionSpace<F> {
    /// `(ω_1, ..., ω_p, 0, ..., 0)`.
    pub fn particular(&self) -> &[F] {
        &self.particular
    }

    pub fn basis(&self) -> &KernelBasis<F> {
        &self.basis
    }

    /// `ω₀ + Σ t_k v_k`.
    pub fn sample(&self, t: &[F]) -> Result<Vec<F>> {
        sample_solution(self, t)
    }
}

/// Outcome of an overdetermined (`p > n`) system.
#[derive(Debug, Clone, PartialEq)]
pub enum Overdetermined<F> {
    Unique(Vec<F>),
    /// `equation` is the 0-based row of the first violated equation;
    /// `residual` is `(V ω)_equation - q_equation`.
    Inconsistent { equation: usize, residual: F },
}

fn check_dims(p: usize, n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroDimension);
    }
    if p > n {
        return Err(Error::Overdetermined { p, n });
    }
    Ok(())
}

fn basis_from_sigma<F: Field>(table: &SigmaTable<F>, n: usize) -> KernelBasis<F> {
    let p = table.p();
    let block: Vec<F> = (0..=p).map(|t| signed(table.sigma(p - t), p - t)).collect();
    let vectors = (0..n - p)
        .map(|shift| {
            let mut v = vec![F::zero(); n];
            v[shift..shift + p + 1].clone_from_slice(&block);
            v
        })
        .collect();
    KernelBasis { n, p, vectors }
}

/// The `n - p` shift vectors spanning `ker V_{p,n}`; empty when `p = n`.
pub fn kernel_basis<F: Field>(nodes: &NodeSet<F>, n: usize) -> Result<KernelBasis<F>> {
    check_dims(nodes.len(), n)?;
    Ok(basis_from_sigma(&compute_sigma(nodes), n))
}

/// Solution space of `V_{p,n} ω = q` for `p <= n`.
pub fn solve_general<F: Field>(
    nodes: &NodeSet<F>,
    q: &[F],
    n: usize,
) -> Result<AffineSolutionSpace<F>> {
    let p = nodes.len();
    check_dims(p, n)?;
    if q.len() != p {
        return Err(Error::DimensionMismatch {
            expected: p,
            found: q.len(),
        });
    }
    let mut particular = solve_square(nodes, q)?;
    particular.resize(n, F::zero());
    Ok(AffineSolutionSpace {
        particular,
        basis: kernel_basis(nodes, n)?,
    })
}

/// One member `ω₀ + Σ t_k v_k` of the solution space.
pub fn sample_solution<F: Field>(space: &AffineSolutionSpace<F>, t: &[F]) -> Result<Vec<F>> {
    let basis = space.basis();
    if t.len() != basis.dim() {
        return Err(Error::DimensionMismatch {
            expected: basis.dim(),
            found: t.len(),
        });
    }
    let mut out = space.particular.clone();
    for (coeff, v) in t.iter().zip(basis.vectors()) {
        if coeff.is_zero() {
            continue;
        }
        for (o, vi) in out.iter_mut().zip(v) {
            *o = o.clone() + coeff.clone() * vi.clone();
        }
    }
    Ok(out)
}

/// `p > n`: solves on the first `n` equations, then checks the rest.
pub fn solve_overdetermined<F: Field>(
    nodes: &NodeSet<F>,
    q: &[F],
    n: usize,
) -> Result<Overdetermined<F>> {
    let p = nodes.len();
    if n == 0 {
        return Err(Error::ZeroDimension);
    }
    if p <= n {
        return Err(Error::NotOverdetermined { p, n });
    }
    if q.len() != p {
        return Err(Error::DimensionMismatch {
            expected: p,
            found: q.len(),
        });
    }
    let omega = solve_square(&nodes.prefix(n)?, &q[..n])?;
    let rest = NodeSet::new(nodes.as_slice()[n..].to_vec())?;
    let lhs = build_matrix(&rest, n)?.mul_vec(&omega)?;
    for (k, (value, target)) in lhs.into_iter().zip(&q[n..]).enumerate() {
        if !value.approx_eq(target, 1e-9) {
            return Ok(Overdetermined::Inconsistent {
                equation: n + k,
                residual: value - target.clone(),
            });
        }
    }
    Ok(Overdetermined::Unique(omega))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use crate::matrix::DenseMatrix;
    use crate::oracle::{gaussian_rank, gaussian_solve, sigma_bruteforce};
    use proptest::prelude::*;

    fn q(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    fn qs(values: &[i64]) -> Vec<Rational> {
        values.iter().map(|&v| q(v)).collect()
    }

    fn nodes(values: &[i64]) -> NodeSet<Rational> {
        NodeSet::new(qs(values)).unwrap()
    }

    fn assert_solves(ns: &NodeSet<Rational>, n: usize, x: &[Rational], b: &[Rational]) {
        assert_eq!(build_matrix(ns, n).unwrap().mul_vec(x).unwrap(), b);
    }

    #[test]
    fn kernel_examples() {
        let basis = kernel_basis(&nodes(&[2]), 3).unwrap();
        assert_eq!(basis.vectors(), &[qs(&[-2, 1, 0]), qs(&[0, -2, 1])]);
        assert!(kernel_basis(&nodes(&[1, 2, 3]), 3).unwrap().is_empty());
        assert_eq!(
            kernel_basis(&nodes(&[1, 2, 3]), 2),
            Err(Error::Overdetermined { p: 3, n: 2 })
        );
    }

    #[test]
    fn single_vector_kernel_for_one_fewer_node() {
        // nodes a_2..a_n = 2, 3, 4 with n = 4
        let ns = nodes(&[2, 3, 4]);
        let basis = kernel_basis(&ns, 4).unwrap();
        assert_eq!(basis.dim(), 1);
        let expected = vec![
            -(sigma_bruteforce(&ns, 3)),
            sigma_bruteforce(&ns, 2),
            -(sigma_bruteforce(&ns, 1)),
            q(1),
        ];
        assert_eq!(basis.vectors()[0], expected);
        assert_eq!(basis.vectors()[0], qs(&[-24, 26, -9, 1]));
        assert_eq!(expected[0], -(q(2) * q(3) * q(4)));
        assert_eq!(expected[2], -(q(2) + q(3) + q(4)));
    }

    #[test]
    fn general_solve_examples() {
        let ns = nodes(&[1]);
        let space = solve_general(&ns, &qs(&[5]), 2).unwrap();
        assert_eq!(space.particular(), qs(&[5, 0]).as_slice());
        assert_eq!(space.basis().vectors(), &[qs(&[-1, 1])]);
        for t in -3..=3 {
            assert_eq!(sample_solution(&space, &qs(&[t])).unwrap(), qs(&[5 - t, t]));
        }

        let ns = nodes(&[0, 1]);
        let space = solve_general(&ns, &qs(&[1, 2]), 2).unwrap();
        assert_eq!(space.particular(), qs(&[1, 1]).as_slice());
        assert!(space.basis().is_empty());

        let space = solve_general(&ns, &qs(&[1, 2]), 4).unwrap();
        assert_eq!(space.particular(), qs(&[1, 1, 0, 0]).as_slice());
        assert_eq!(space.basis().vectors(), &[qs(&[0, -1, 1, 0]), qs(&[0, 0, -1, 1])]);
        assert_solves(&ns, 4, space.particular(), &qs(&[1, 2]));
        for v in space.basis().vectors() {
            assert_solves(&ns, 4, v, &qs(&[0, 0]));
        }
    }

    #[test]
    fn general_solve_errors() {
        let ns = nodes(&[0, 1, 2]);
        assert_eq!(
            solve_general(&ns, &qs(&[1, 2, 3]), 2),
            Err(Error::Overdetermined { p: 3, n: 2 })
        );
        assert_eq!(
            solve_general(&ns, &qs(&[1, 2]), 4),
            Err(Error::DimensionMismatch { expected: 3, found: 2 })
        );
        assert_eq!(solve_general(&ns, &qs(&[1, 2, 3]), 0), Err(Error::ZeroDimension));
    }

    #[test]
    fn sample_examples() {
        let ns = nodes(&[1]);
        let space = solve_general(&ns, &qs(&[5]), 2).unwrap();
        assert_eq!(space.sample(&qs(&[0])).unwrap(), space.particular());
        let plus_v: Vec<_> = space
            .particular()
            .iter()
            .zip(&space.basis().vectors()[0])
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        assert_eq!(space.sample(&qs(&[1])).unwrap(), plus_v);
        let x = space.sample(&qs(&[3])).unwrap();
        assert_eq!(x, qs(&[2, 3]));
        assert_eq!(x[0].clone() + x[1].clone(), q(5));
        assert_eq!(
            space.sample(&qs(&[1, 2])),
            Err(Error::DimensionMismatch { expected: 1, found: 2 })
        );
    }

    #[test]
    fn overdetermined_examples() {
        let ns = nodes(&[0, 1, 2]);
        assert_eq!(
            solve_overdetermined(&ns, &qs(&[1, 2, 3]), 2).unwrap(),
            Overdetermined::Unique(qs(&[1, 1]))
        );
        assert_eq!(
            solve_overdetermined(&ns, &qs(&[1, 2, 4]), 2).unwrap(),
            Overdetermined::Inconsistent {
                equation: 2,
                residual: q(-1)
            }
        );
        let ns = nodes(&[1, 2, 3, 4]);
        let squares: Vec<_> = ns.as_slice().iter().map(|a| a.clone() * a.clone()).collect();
        assert_eq!(
            solve_overdetermined(&ns, &squares, 3).unwrap(),
            Overdetermined::Unique(qs(&[0, 0, 1]))
        );
        assert_eq!(
            solve_overdetermined(&nodes(&[1, 2]), &qs(&[1, 2]), 2),
            Err(Error::NotOverdetermined { p: 2, n: 2 })
        );
    }

    /// Every grid candidate solving `ω_1 + 3 ω_2 = 7` lies in the affine space:
    /// subtracting the particular solution leaves a multiple of the single
    /// kernel vector, found by solving its echelon system.
    #[test]
    fn completeness_on_a_grid() {
        let ns = nodes(&[3]);
        let space = solve_general(&ns, &qs(&[7]), 2).unwrap();
        let v = &space.basis().vectors()[0];
        assert_eq!(v, &qs(&[-3, 1]));
        let grid: Vec<Rational> = (-12..=12).map(|k| Rational::new(k.into(), 2.into())).collect();
        let mut members = 0;
        for w1 in &grid {
            for w2 in &grid {
                if w1.clone() + q(3) * w2.clone() != q(7) {
                    continue;
                }
                let d0 = w1.clone() - space.particular()[0].clone();
                let d1 = w2.clone() - space.particular()[1].clone();
                // trailing 1 of v: the coefficient is read off the last entry
                let t = d1.clone();
                assert_eq!(d0, t.clone() * v[0].clone());
                assert_eq!(space.sample(&[t]).unwrap(), vec![w1.clone(), w2.clone()]);
                members += 1;
            }
        }
        assert!(members > 0);
    }

    fn problem() -> impl Strategy<Value = (Vec<Rational>, usize)> {
        (1usize..12, 1usize..=11).prop_flat_map(|(p, extra)| {
            prop::collection::vec((-20i64..20, 1i64..5), p)
                .prop_map(|pairs| {
                    let mut xs: Vec<Rational> = Vec::new();
                    for (n, d) in pairs {
                        let x = Rational::new(n.into(), d.into());
                        if !xs.contains(&x) {
                            xs.push(x);
                        }
                    }
                    xs
                })
                .prop_map(move |xs| {
                    let n = (xs.len() + extra).min(12).max(xs.len() + 1);
                    (xs, n)
                })
        })
    }

    proptest! {
        #[test]
        fn kernel_properties((xs, n) in problem()) {
            let ns = NodeSet::new(xs).unwrap();
            let p = ns.len();
            let basis = kernel_basis(&ns, n).unwrap();
            let v = build_matrix(&ns, n).unwrap();
            prop_assert_eq!(basis.dim(), n - p);
            prop_assert_eq!(gaussian_rank(&v), p);
            for vec in basis.vectors() {
                prop_assert!(v.mul_vec(vec).unwrap().iter().all(|x| x == &q(0)));
            }
            let stacked = DenseMatrix::from_rows(basis.vectors().to_vec()).unwrap();
            prop_assert_eq!(gaussian_rank(&stacked), n - p);
            for pair in basis.vectors().windows(2) {
                prop_assert_eq!(&pair[1][0], &q(0));
                prop_assert_eq!(&pair[1][1..], &pair[0][..n - 1]);
            }
        }

        #[test]
        fn particular_solution((xs, n) in problem(), seed in -40i64..40) {
            let ns = NodeSet::new(xs).unwrap();
            let p = ns.len();
            let b: Vec<Rational> = (0..p as i64).map(|k| q(seed * k - k * k + 3)).collect();
            let space = solve_general(&ns, &b, n).unwrap();
            let v = build_matrix(&ns, n).unwrap();
            prop_assert_eq!(&v.mul_vec(space.particular()).unwrap(), &b);
            prop_assert!(space.particular()[p..].iter().all(|x| x == &q(0)));
            let square = build_matrix(&ns, p).unwrap();
            let oracle = gaussian_solve(&square, &b).unwrap();
            prop_assert_eq!(&space.particular()[..p], oracle.as_slice());
            let t: Vec<Rational> = (0..n - p).map(|k| q(seed + k as i64)).collect();
            prop_assert_eq!(&v.mul_vec(&space.sample(&t).unwrap()).unwrap(), &b);
        }
    }
}
