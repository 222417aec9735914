//! Field-operation counting.
//!
//! [`Counted<F>`] wraps any field and tallies every addition, subtraction,
//! multiplication and division on a per-thread counter. Algorithms run over
//! `Counted<F>` unchanged, so the counts measure the real code path. Results
//! computed with plain `F` are untouched; the wrapper is opt-in by type.

use std::cell::Cell;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::Result;
use crate::field::Field;

/// Tally of field operations.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OpCounts {
    /// Additions and subtractions.
    pub additive: u64,
    pub multiplications: u64,
    /// Divisions and inversions.
    pub divisions: u64,
}

impl OpCounts {
    /// Multiplications plus divisions.
    pub fn multiplicative(&self) -> u64 {
        self.multiplications + self.divisions
    }

    pub fn total(&self) -> u64 {
        self.additive + self.multiplications + self.divisions
    }
}

thread_local! {
    static ADDITIVE: Cell<u64> = const { Cell::new(0) };
    static MULTIPLICATIONS: Cell<u64> = const { Cell::new(0) };
    static DIVISIONS: Cell<u64> = const { Cell::new(0) };
}

#[inline(always)]
fn bump(counter: &'static std::thread::LocalKey<Cell<u64>>) {
    counter.with(|c| c.set(c.get() + 1));
}

fn snapshot() -> OpCounts {
    OpCounts {
        additive: ADDITIVE.with(Cell::get),
        multiplications: MULTIPLICATIONS.with(Cell::get),
        divisions: DIVISIONS.with(Cell::get),
    }
}

/// Runs `f` and returns its result with the operations it performed on
/// [`Counted`] values in this thread.
pub fn count_ops<R>(f: impl FnOnce() -> R) -> (R, OpCounts) {
    let before = snapshot();
    let out = f();
    let after = snapshot();
    let delta = OpCounts {
        additive: after.additive - before.additive,
        multiplications: after.multiplications - before.multiplications,
        divisions: after.divisions - before.divisions,
    };
    (out, delta)
}

/// A field element that counts the operations applied to it.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct Counted<F>(pub F);

impl<F> Counted<F> {
    pub fn into_inner(self) -> F {
        self.0
    }
}

impl<F: fmt::Display> fmt::Display for Counted<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl<F: Field> Add for Counted<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        bump(&ADDITIVE);
        Counted(self.0 + rhs.0)
    }
}

impl<F: Field> Sub for Counted<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        bump(&ADDITIVE);
        Counted(self.0 - rhs.0)
    }
}

impl<F: Field> Mul for Counted<F> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        bump(&MULTIPLICATIONS);
        Counted(self.0 * rhs.0)
    }
}

impl<F: Field> Neg for Counted<F> {
    type Output = Self;
    fn neg(self) -> Self {
        Counted(-self.0)
    }
}

impl<F: Field> Zero for Counted<F> {
    fn zero() -> Self {
        Counted(F::zero())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl<F: Field> One for Counted<F> {
    fn one() -> Self {
        Counted(F::one())
    }
}

impl<F: Field> Field for Counted<F> {
    const EXACT: bool = F::EXACT;

    fn try_inv(&self) -> Result<Self> {
        bump(&DIVISIONS);
        self.0.try_inv().map(Counted)
    }

    fn try_div(&self, rhs: &Self) -> Result<Self> {
        bump(&DIVISIONS);
        self.0.try_div(&rhs.0).map(Counted)
    }

    fn from_i64(value: i64) -> Self {
        Counted(F::from_i64(value))
    }

    fn parse_scalar(text: &str) -> Result<Self> {
        F::parse_scalar(text).map(Counted)
    }

    fn magnitude(&self) -> f64 {
        self.0.magnitude()
    }
}
