#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vandersolve::{ExactNodeSet, Field, Rational};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(v: i64) -> Rational {
    Rational::from_i64(v)
}

pub fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.gen_range(-30i64..=30).into(), rng.gen_range(1i64..=8).into())
}

/// `p` pairwise-distinct random rationals.
pub fn random_nodes(rng: &mut ChaCha8Rng, p: usize) -> ExactNodeSet {
    let mut values: Vec<Rational> = Vec::with_capacity(p);
    while values.len() < p {
        let x = random_rational(rng);
        if !values.contains(&x) {
            values.push(x);
        }
    }
    ExactNodeSet::new(values).unwrap()
}

pub fn random_vector(rng: &mut ChaCha8Rng, len: usize) -> Vec<Rational> {
    (0..len).map(|_| random_rational(rng)).collect()
}

pub fn strings(values: &[Rational]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}
