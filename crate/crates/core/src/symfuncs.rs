//! Monomial coefficients of a node set.
//!
//! For nodes `a_1..a_p`, `σ(t)` is the sum of all products of `t` distinct
//! nodes (the elementary symmetric polynomial of degree `t`), with `σ(0) = 1`
//! and `σ(t) = 0` for `t > p`. The deflated coefficient `σ̄^{a_i}(t)` is the
//! same quantity over the node set with `a_i` removed. They are linked by
//!
//! ```text
//! σ(t) = σ̄^{a_i}(t) + a_i σ̄^{a_i}(t-1)
//! ```
//!
//! which drives both the triangular `O(p²)` construction of `σ` and the
//! `O(p)` per-node deflation `σ̄^{a}(t) = σ(t) - a σ̄^{a}(t-1)`.
//!
//! The deflation recurrence is unstable in floating point: errors are
//! amplified by `|a|` at every step. Exact fields are authoritative.

use crate::error::{Error, Result};
use crate::field::{signed, Field};
use crate::polynomial::Polynomial;

/// Ordered, pairwise-distinct interpolation nodes. The order fixes the row
/// order of every Vandermonde matrix built from the set.
#[derive(Debug, Clone, PartialEq)]
pub struct NodeSet<F> {
    nodes: Vec<F>,
}

impl<F: Field> NodeSet<F> {
    pub fn new(nodes: Vec<F>) -> Result<Self> {
        if nodes.is_empty() {
            return Err(Error::EmptyNodes);
        }
        for (second, b) in nodes.iter().enumerate() {
            if let Some(first) = nodes[..second].iter().position(|a| a == b) {
                return Err(Error::DuplicateNode {
                    value: b.to_string(),
                    first,
                    second,
                });
            }
        }
        Ok(Self { nodes })
    }

    /// Parses each scalar with [`Field::parse_scalar`] and checks distinctness.
    pub fn parse<S: AsRef<str>>(items: &[S]) -> Result<Self> {
        let nodes = items
            .iter()
            .map(|s| F::parse_scalar(s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(nodes)
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    /// Always `false`; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn as_slice(&self) -> &[F] {
        &self.nodes
    }

    pub fn get(&self, i: usize) -> Option<&F> {
        self.nodes.get(i)
    }

    /// The first `k` nodes, `1 <= k <= len`.
    pub fn prefix(&self, k: usize) -> Result<Self> {
        if k == 0 || k > self.len() {
            return Err(Error::IndexOutOfRange {
                index: k,
                len: self.len(),
            });
        }
        Ok(Self {
            nodes: self.nodes[..k].to_vec(),
        })
    }

    /// The node set with node `i` removed, or `None` when that would leave it
    /// empty.
    pub fn without(&self, i: usize) -> Result<Option<Self>> {
        self.check_index(i)?;
        if self.len() == 1 {
            return Ok(None);
        }
        let mut nodes = self.nodes.clone();
        nodes.remove(i);
        Ok(Some(Self { nodes }))
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.len(),
            });
        }
        Ok(())
    }
}

/// `σ(0..=p)` for a node set, optionally with every deflated row.
#[derive(Debug, Clone, PartialEq)]
pub struct SigmaTable<F> {
    nodes: NodeSet<F>,
    sigma: Vec<F>,
    deflated: Option<Vec<Vec<F>>>,
}

impl<F: Field> SigmaTable<F> {
    /// Number of nodes.
    pub fn p(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &NodeSet<F> {
        &self.nodes
    }

    /// `σ(0)..σ(p)`.
    pub fn sigma_row(&self) -> &[F] {
        &self.sigma
    }

    /// Total accessor: `σ(t)` for `t <= p`, zero beyond.
    pub fn sigma(&self, t: usize) -> F {
        self.sigma.get(t).cloned().unwrap_or_else(F::zero)
    }

    /// Row `i` holds `σ̄^{a_i}(0)..σ̄^{a_i}(p-1)`; present after
    /// [`deflate_all`].
    pub fn deflated(&self) -> Option<&[Vec<F>]> {
        self.deflated.as_deref()
    }

    pub fn deflated_row(&self, i: usize) -> Option<&[F]> {
        self.deflated.as_ref().and_then(|rows| rows.get(i)).map(Vec::as_slice)
    }

    /// Total accessor for `σ̄^{a_i}(t)`: zero for `t >= p`. Computes the row on
    /// demand when the grid is absent.
    pub fn deflated_coeff(&self, i: usize, t: usize) -> Result<F> {
        match self.deflated_row(i) {
            Some(row) => Ok(row.get(t).cloned().unwrap_or_else(F::zero)),
            None => Ok(deflate(self, i)?.get(t).cloned().unwrap_or_else(F::zero)),
        }
    }

    pub fn into_deflated(self) -> Option<Vec<Vec<F>>> {
        self.deflated
    }
}

/// Monomial coefficients `σ(0..=p)` by the triangular recurrence, in place in
/// a single row. Each node `a_i` is folded in with
/// `S[j] += a_i S[j-1]` for `j = i` down to `1`, exactly `p(p+1)/2`
/// multiply-add steps in total.
pub fn compute_sigma<F: Field>(nodes: &NodeSet<F>) -> SigmaTable<F> {
    let p = nodes.len();
    let mut s = vec![F::zero(); p + 1];
    s[0] = F::one();
    for (i, a) in nodes.as_slice().iter().enumerate() {
        for j in (1..=i + 1).rev() {
            s[j] = s[j].clone() + a.clone() * s[j - 1].clone();
        }
    }
    SigmaTable {
        nodes: nodes.clone(),
        sigma: s,
        deflated: None,
    }
}

/// `σ̄^{a_i}(0..p)` from `σ` in `p - 1` multiply-subtract steps. `i` is
/// 0-based.
pub fn deflate<F: Field>(table: &SigmaTable<F>, i: usize) -> Result<Vec<F>> {
    let nodes = table.nodes();
    nodes.check_index(i)?;
    let a = &nodes.as_slice()[i];
    let p = table.p();
    let mut row = Vec::with_capacity(p);
    row.push(F::one());
    for t in 1..p {
        let next = table.sigma[t].clone() - a.clone() * row[t - 1].clone();
        row.push(next);
    }
    Ok(row)
}

/// Fills the full `p × p` deflated grid, `Θ(p²)` work.
pub fn deflate_all<F: Field>(table: SigmaTable<F>) -> SigmaTable<F> {
    if table.deflated.is_some() {
        return table;
    }
    let rows = (0..table.p())
        .map(|i| deflate(&table, i).expect("index within node set"))
        .collect();
    SigmaTable {
        deflated: Some(rows),
        ..table
    }
}

/// `∏ (x - a_i)`: the coefficient of `x^i` is `(-1)^{p-i} σ(p-i)`.
pub fn poly_from_roots<F: Field>(nodes: &NodeSet<F>) -> Polynomial<F> {
    let table = compute_sigma(nodes);
    let p = table.p();
    Polynomial::new((0..=p).map(|i| signed(table.sigma(p - i), p - i)).collect())
}

/// `Σ_{i=0}^{p} (-1)^i a^i σ(p-i)`, which equals `(-1)^p ∏ (a - a_k)` and so
/// vanishes exactly when `a` is a node.
pub fn check_root_identity<F: Field>(table: &SigmaTable<F>, a: &F) -> F {
    let p = table.p();
    let mut power = F::one();
    let mut sum = F::zero();
    for i in 0..=p {
        sum = sum + signed(power.clone() * table.sigma(p - i), i);
        power = power * a.clone();
    }
    sum
}
