//! Command implementations, generic over the field.

use serde::Serialize;

use super::input::ProblemInput;
use super::CliError;
use crate::field::Field;
use crate::kernel::{kernel_basis, solve_general, solve_overdetermined, Overdetermined};
use crate::oracle::gaussian_solve;
use crate::symfuncs::{compute_sigma, deflate_all, NodeSet};
use crate::vandermonde::{build_matrix, interpolate};

/// Tolerance for float-mode verification.
const FLOAT_TOL: f64 = 1e-8;

fn render<F: Field>(values: &[F]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}

#[derive(Debug, Serialize)]
pub struct Verification {
    pub nodes: bool,
    pub oracle: bool,
}

#[derive(Debug, Serialize)]
pub struct InterpolateOutput {
    pub coefficients: Vec<String>,
    /// `None` for the zero polynomial.
    pub degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verified: Option<Verification>,
}

#[derive(Debug, Serialize)]
pub struct SolveOutput {
    pub particular: Vec<String>,
    pub kernel_basis: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verified: Option<Verification>,
}

#[derive(Debug, Serialize)]
pub struct KernelOutput {
    pub n: usize,
    pub p: usize,
    pub kernel_basis: Vec<Vec<String>>,
}

#[derive(Debug, Serialize)]
pub struct SigmaOutput {
    pub sigma: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub deflated: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Serialize)]
pub struct InconsistentOutput {
    pub status: &'static str,
    /// 0-based index of the first violated equation.
    pub equation_index: usize,
    pub residual: String,
}

fn parse_nodes<F: Field>(input: &ProblemInput) -> Result<NodeSet<F>, CliError> {
    Ok(NodeSet::parse(&input.nodes)?)
}

fn parse_values<F: Field>(input: &ProblemInput, p: usize) -> Result<Vec<F>, CliError> {
    let raw = input
        .values
        .as_ref()
        .ok_or_else(|| CliError::Invalid("values are required (use --values)".into()))?;
    let values = raw.iter().map(|s| F::parse_scalar(s)).collect::<crate::Result<Vec<F>>>()?;
    if values.len() != p {
        return Err(CliError::Invalid(format!(
            "{} values given for {p} nodes",
            values.len()
        )));
    }
    Ok(values)
}

fn all_close<F: Field>(a: &[F], b: &[F]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.approx_eq(y, FLOAT_TOL))
}

fn check(verification: Verification) -> Result<Verification, CliError> {
    if verification.nodes && verification.oracle {
        Ok(verification)
    } else {
        Err(CliError::Verification(format!("{verification:?}")))
    }
}

pub fn interpolate_cmd<F: Field>(input: &ProblemInput, verify: bool) -> Result<InterpolateOutput, CliError> {
    let nodes = parse_nodes::<F>(input)?;
    let values = parse_values::<F>(input, nodes.len())?;
    let poly = interpolate(&nodes, &values)?;
    let verified = if verify {
        let at_nodes: Vec<F> = nodes.as_slice().iter().map(|a| poly.evaluate(a)).collect();
        let mut omega = poly.coeffs().to_vec();
        omega.resize(nodes.len(), F::zero());
        let oracle = gaussian_solve(&build_matrix(&nodes, nodes.len())?, &values)?;
        Some(check(Verification {
            nodes: all_close(&at_nodes, &values),
            oracle: all_close(&omega, &oracle),
        })?)
    } else {
        None
    };
    Ok(InterpolateOutput {
        coefficients: render(poly.coeffs()),
        degree: poly.degree(),
        verified,
    })
}

pub enum SolveResult {
    Solved(SolveOutput),
    Inconsistent(InconsistentOutput),
}

pub fn solve_cmd<F: Field>(input: &ProblemInput, verify: bool) -> Result<SolveResult, CliError> {
    let nodes = parse_nodes::<F>(input)?;
    let p = nodes.len();
    let values = parse_values::<F>(input, p)?;
    let n = input.n.unwrap_or(p);
    if n >= p {
        let space = solve_general(&nodes, &values, n)?;
        let verified = if verify {
            let v = build_matrix(&nodes, n)?;
            let residual_ok = all_close(&v.mul_vec(space.particular())?, &values);
            let kernel_ok = space
                .basis()
                .vectors()
                .iter()
                .map(|k| v.mul_vec(k))
                .collect::<crate::Result<Vec<_>>>()?
                .iter()
                .all(|r| all_close(r, &vec![F::zero(); p]));
            let oracle = gaussian_solve(&build_matrix(&nodes, p)?, &values)?;
            Some(check(Verification {
                nodes: residual_ok && kernel_ok,
                oracle: all_close(&space.particular()[..p], &oracle),
            })?)
        } else {
            None
        };
        return Ok(SolveResult::Solved(SolveOutput {
            particular: render(space.particular()),
            kernel_basis: space.basis().vectors().iter().map(|v| render(v)).collect(),
            verified,
        }));
    }
    match solve_overdetermined(&nodes, &values, n)? {
        Overdetermined::Unique(omega) => {
            let verified = if verify {
                let lhs = build_matrix(&nodes, n)?.mul_vec(&omega)?;
                let oracle = gaussian_solve(&build_matrix(&nodes.prefix(n)?, n)?, &values[..n])?;
                Some(check(Verification {
                    nodes: all_close(&lhs, &values),
                    oracle: all_close(&omega, &oracle),
                })?)
            } else {
                None
            };
            Ok(SolveResult::Solved(SolveOutput {
                particular: render(&omega),
                kernel_basis: Vec::new(),
                verified,
            }))
        }
        Overdetermined::Inconsistent { equation, residual } => {
            Ok(SolveResult::Inconsistent(InconsistentOutput {
                status: "inconsistent",
                equation_index: equation,
                residual: residual.to_string(),
            }))
        }
    }
}

pub fn kernel_cmd<F: Field>(input: &ProblemInput) -> Result<KernelOutput, CliError> {
    let nodes = parse_nodes::<F>(input)?;
    let n = input
        .n
        .ok_or_else(|| CliError::Invalid("the ambient dimension is required (use --n)".into()))?;
    let basis = kernel_basis(&nodes, n)?;
    Ok(KernelOutput {
        n,
        p: nodes.len(),
        kernel_basis: basis.vectors().iter().map(|v| render(v)).collect(),
    })
}

pub fn sigma_cmd<F: Field>(input: &ProblemInput, deflated: bool) -> Result<SigmaOutput, CliError> {
    let nodes = parse_nodes::<F>(input)?;
    let table = compute_sigma(&nodes);
    let sigma = render(table.sigma_row());
    let deflated = deflated.then(|| {
        deflate_all(table)
            .into_deflated()
            .expect("grid filled")
            .iter()
            .map(|row| render(row))
            .collect()
    });
    Ok(SigmaOutput { sigma, deflated })
}
