//! Square Vandermonde systems in closed form.
//!
//! Indexing is 0-based throughout. For nodes `a_0..a_{n-1}` the matrix is
//! `V[i][j] = a_i^j`, and its inverse `C` has entries
//!
//! ```text
//! C[i][j] = (-1)^{n-1-i} σ̄^{a_j}(n-1-i) / D_j,    D_j = ∏_{k≠j} (a_j - a_k)
//! ```
//!
//! so column `j` holds the ascending coefficients of the Lagrange basis
//! polynomial `P_j(x) = ∏_{k≠j} (x - a_k) / (a_j - a_k)`, with `P_j(a_i) = δ_ij`.
//! The numerator `∏_{k≠j}(x - a_k)` is expanded from the deflated
//! coefficients, so a full solve costs one `σ` pass, one deflation grid and
//! `O(n²)` further operations.

use crate::error::{Error, Result};
use crate::field::{signed, Field};
use crate::matrix::DenseMatrix;
use crate::polynomial::Polynomial;
use crate::symfuncs::{compute_sigma, deflate_all, NodeSet, SigmaTable};

pub use crate::polynomial::evaluate;

/// The `p × n` matrix `V[i][j] = a_i^j`.
pub fn build_matrix<F: Field>(nodes: &NodeSet<F>, n: usize) -> Result<DenseMatrix<F>> {
    if n == 0 {
        return Err(Error::ZeroDimension);
    }
    let p = nodes.len();
    let mut m = DenseMatrix::zeros(p, n);
    for (i, a) in nodes.as_slice().iter().enumerate() {
        let mut power = F::one();
        for j in 0..n {
            if j > 0 {
                power = power * a.clone();
            }
            m[(i, j)] = power.clone();
        }
    }
    Ok(m)
}

/// `∏_{j<i} (a_i - a_j)`; nonzero because nodes are distinct.
pub fn determinant<F: Field>(nodes: &NodeSet<F>) -> F {
    let a = nodes.as_slice();
    let mut det = F::one();
    for i in 1..a.len() {
        for j in 0..i {
            det = det * (a[i].clone() - a[j].clone());
        }
    }
    det
}

/// `D_j = ∏_{k≠j} (a_j - a_k)` for every node.
pub fn denominators<F: Field>(nodes: &NodeSet<F>) -> Vec<F> {
    let a = nodes.as_slice();
    (0..a.len())
        .map(|j| {
            a.iter()
                .enumerate()
                .filter(|&(k, _)| k != j)
                .map(|(_, ak)| a[j].clone() - ak.clone())
                .reduce(|acc, d| acc * d)
                .unwrap_or_else(F::one)
        })
        .collect()
}

/// `D_j` evaluated as the numerator polynomial at `a_j`:
/// `Σ_{i=0}^{n-1} (-1)^{n-1-i} σ̄^{a_j}(n-1-i) a_j^i`.
pub fn denominator_from_sigma<F: Field>(table: &SigmaTable<F>, j: usize) -> Result<F> {
    numerator(table, j).map(|p| p.evaluate(&table.nodes().as_slice()[j]))
}

/// `N_j(x) = ∏_{k≠j} (x - a_k)` from the deflated row of node `j`.
pub fn numerator<F: Field>(table: &SigmaTable<F>, j: usize) -> Result<Polynomial<F>> {
    let n = table.p();
    let coeffs = (0..n)
        .map(|i| table.deflated_coeff(j, n - 1 - i).map(|s| signed(s, n - 1 - i)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Polynomial::new(coeffs))
}

fn with_grid<F: Field>(nodes: &NodeSet<F>) -> SigmaTable<F> {
    deflate_all(compute_sigma(nodes))
}

/// The inverse of the square Vandermonde matrix on `nodes`.
pub fn inverse<F: Field>(nodes: &NodeSet<F>) -> Result<DenseMatrix<F>> {
    let n = nodes.len();
    let table = with_grid(nodes);
    let grid = table.deflated().expect("grid filled");
    let mut c = DenseMatrix::zeros(n, n);
    for (j, d) in denominators(nodes).iter().enumerate() {
        let inv_d = d.try_inv()?;
        for i in 0..n {
            let codegree = n - 1 - i;
            c[(i, j)] = signed(grid[j][codegree].clone() * inv_d.clone(), codegree);
        }
    }
    Ok(c)
}

/// Lagrange basis polynomial `P_j`, i.e. column `j` of [`inverse`].
pub fn lagrange_basis<F: Field>(nodes: &NodeSet<F>, j: usize) -> Result<Polynomial<F>> {
    if j >= nodes.len() {
        return Err(Error::IndexOutOfRange {
            index: j,
            len: nodes.len(),
        });
    }
    let table = compute_sigma(nodes);
    let inv_d = denominators(nodes).swap_remove(j).try_inv()?;
    let num = numerator(&table, j)?;
    Ok(Polynomial::new(num.coeffs().iter().map(|c| c.clone() * inv_d.clone()).collect()))
}

/// Unique `ω` with `V ω = q`.
///
/// One deflation grid is built; each `D_j` is computed once and folded into
/// `q_j`, after which `ω_i = (-1)^{n-1-i} Σ_j σ̄^{a_j}(n-1-i) q_j / D_j`.
/// Total cost is `O(n²)` field operations.
pub fn solve_square<F: Field>(nodes: &NodeSet<F>, q: &[F]) -> Result<Vec<F>> {
    let n = nodes.len();
    if q.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: q.len(),
        });
    }
    let table = with_grid(nodes);
    let grid = table.deflated().expect("grid filled");
    let weights = denominators(nodes)
        .iter()
        .zip(q)
        .map(|(d, qj)| qj.try_div(d))
        .collect::<Result<Vec<_>>>()?;
    let omega = (0..n)
        .map(|i| {
            let codegree = n - 1 - i;
            let sum = grid
                .iter()
                .zip(&weights)
                .fold(F::zero(), |acc, (row, w)| acc + row[codegree].clone() * w.clone());
            signed(sum, codegree)
        })
        .collect();
    Ok(omega)
}

/// The interpolating polynomial of degree `< n` through `(a_i, q_i)`.
pub fn interpolate<F: Field>(nodes: &NodeSet<F>, q: &[F]) -> Result<Polynomial<F>> {
    solve_square(nodes, q).map(Polynomial::new)
}
