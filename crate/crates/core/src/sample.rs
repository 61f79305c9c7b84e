//! Seeded random generation of ordinals and closed sets for property suites.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ordinal::{Ordinal, Rho};
use crate::rho::ClosedSet;

/// Deterministic sampler; equal seeds give equal streams.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Sampler {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn nat(&mut self, lo: u64, hi: u64) -> u64 {
        self.rng.gen_range(lo..=hi)
    }

    /// An ordinal below `ω^degree` with at most `terms` terms and coefficients in `1..=coeff`.
    pub fn below_omega_pow(&mut self, degree: u64, terms: usize, coeff: u64) -> Ordinal {
        let mut exps: Vec<u64> = (0..degree).collect();
        exps.shuffle(&mut self.rng);
        let count = self.rng.gen_range(0..=terms.min(degree as usize));
        let mut chosen: Vec<u64> = exps.into_iter().take(count).collect();
        chosen.sort_unstable_by(|a, b| b.cmp(a));
        let pairs = chosen
            .into_iter()
            .map(|e| (Ordinal::nat(e), self.rng.gen_range(1..=coeff).into()))
            .collect();
        Ordinal::from_terms(pairs).expect("decreasing exponents")
    }

    /// A nonzero ordinal below `ω^ω` of moderate size.
    pub fn below_omega_omega(&mut self) -> Ordinal {
        loop {
            let o = self.below_omega_pow(5, 3, 4);
            if !o.is_zero() {
                return o;
            }
        }
    }

    /// A nonzero ordinal below `ε₀` whose exponents lie below `ω^ω`.
    pub fn below_epsilon0(&mut self) -> Ordinal {
        loop {
            let count = self.rng.gen_range(1..=3usize);
            let mut exps: Vec<Ordinal> =
                (0..count).map(|_| self.below_omega_pow(3, 2, 3)).collect();
            exps.sort_by(|a, b| b.cmp(a));
            exps.dedup();
            let pairs = exps
                .into_iter()
                .map(|e| (e, self.rng.gen_range(1..=3u64).into()))
                .collect();
            let o = Ordinal::from_terms(pairs).expect("decreasing exponents");
            if !o.is_zero() {
                return o;
            }
        }
    }

    /// A closed set of at most `size` generators below `ω^ω`.
    pub fn closed_set(&mut self, rho: &Rho, size: usize) -> ClosedSet {
        let n = self.rng.gen_range(1..=size.max(1));
        let gens: Vec<Ordinal> = (0..n).map(|_| self.below_omega_pow(4, 3, 3)).collect();
        ClosedSet::closure(gens, rho)
    }

    /// A closed set below `ω^ω` whose members tend to share components:
    /// each generator is fresh or a small offset from an earlier one.
    pub fn clustered_set(&mut self, rho: &Rho, size: usize) -> ClosedSet {
        let n = self.rng.gen_range(1..=size.max(1));
        let mut gens: Vec<Ordinal> = Vec::with_capacity(n);
        for _ in 0..n {
            let g = match gens.len() {
                0 => self.below_omega_pow(5, 3, 3),
                k if self.rng.gen_bool(0.6) => {
                    let base = gens[self.rng.gen_range(0..k)].clone();
                    let offset = if self.rng.gen_bool(0.5) {
                        Ordinal::nat(self.rng.gen_range(1..=4))
                    } else {
                        self.below_omega_pow(3, 2, 3)
                    };
                    base.add(&offset)
                }
                _ => self.below_omega_pow(5, 3, 3),
            };
            gens.push(g);
        }
        ClosedSet::closure(gens, rho)
    }

    /// Picks a uniformly random element.
    pub fn pick<'a, T>(&mut self, xs: &'a [T]) -> Option<&'a T> {
        xs.choose(&mut self.rng)
    }
}
