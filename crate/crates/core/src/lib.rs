//! Closed-form solvers for Vandermonde systems.
//!
//! Square systems `V ω = q` are solved in `O(n²)` field operations from the
//! monomial coefficients (elementary symmetric polynomials) of the nodes and
//! their per-node deflations. Underdetermined `p × n` systems return the full
//! affine solution space: a particular solution plus an explicit kernel basis
//! built from the same coefficients.
//!
//! Everything is generic over [`Field`]. Use [`Rational`] for exact results
//! and `f64` for speed; the [`instrument`] module counts field operations.
//!
//! ```
//! use vandersolve::{interpolate, ExactNodeSet, Field, Rational};
//!
//! let nodes = ExactNodeSet::parse(&["1", "2", "3"]).unwrap();
//! let values: Vec<Rational> = ["6", "11", "18"].iter().map(|s| Rational::parse_scalar(s).unwrap()).collect();
//! let p = interpolate(&nodes, &values).unwrap();
//! assert_eq!(p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(), ["3", "2", "1"]);
//! ```

pub mod bench;
pub mod cli;
pub mod error;
pub mod field;
pub mod instrument;
pub mod kernel;
pub mod matrix;
pub mod oracle;
pub mod polynomial;
pub mod symfuncs;
pub mod vandermonde;

pub use error::{Error, Result};
pub use field::{Field, Rational};
pub use kernel::{
    kernel_basis, sample_solution, solve_general, solve_overdetermined, AffineSolutionSpace,
    KernelBasis, Overdetermined,
};
pub use matrix::DenseMatrix;
pub use polynomial::Polynomial;
pub use symfuncs::{
    check_root_identity, compute_sigma, deflate, deflate_all, poly_from_roots, NodeSet, SigmaTable,
};
pub use vandermonde::{build_matrix, determinant, evaluate, interpolate, inverse, solve_square};

pub type ExactNodeSet = NodeSet<Rational>;
pub type ExactPolynomial = Polynomial<Rational>;
pub type ExactMatrix = DenseMatrix<Rational>;
pub type ExactKernelBasis = KernelBasis<Rational>;
pub type ExactSolutionSpace = AffineSolutionSpace<Rational>;

pub type FloatNodeSet = NodeSet<f64>;
pub type FloatPolynomial = Polynomial<f64>;
pub type FloatMatrix = DenseMatrix<f64>;
pub type FloatKernelBasis = KernelBasis<f64>;
pub type FloatSolutionSpace = AffineSolutionSpace<f64>;
