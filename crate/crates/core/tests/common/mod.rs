//! Independent evaluation of `κ_α` and `max₁(κ_α)` at rho = 1 below `ε₀`.
//!
//! Successors use `κ_{α+n} = max₁(κ_α) + n`, limits use continuity of `κ`
//! along fundamental sequences with a symbolic supremum, and maxima at limit
//! indices `γ + ω^β` use `max₁(κ_α) = κ_α + max₁(κ_β)`. No closed formula for
//! component blocks is involved.
#![allow(dead_code)]

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::One;
use resemblance::ordinal::Ordinal;

pub fn p(s: &str) -> Ordinal {
    Ordinal::parse(s).unwrap_or_else(|e| panic!("{s}: {e}"))
}

#[derive(Default)]
pub struct KappaOracle {
    kappa: HashMap<Ordinal, Ordinal>,
    max1: HashMap<Ordinal, Ordinal>,
}

/// `(γ, ω^β)` with `λ = γ + ω^β`, splitting off one copy of the last term.
fn split_last(l: &Ordinal) -> (Ordinal, Ordinal) {
    let mut pairs: Vec<(Ordinal, BigUint)> = l
        .terms()
        .iter()
        .map(|t| (t.exponent(), t.coeff().clone()))
        .collect();
    let (e, c) = pairs.pop().expect("nonzero");
    if c > BigUint::one() {
        pairs.push((e.clone(), c - BigUint::one()));
    }
    (Ordinal::from_terms(pairs).expect("valid"), e)
}

/// The `n`-th element of the standard fundamental sequence of a limit below `ε₀`.
pub fn fundamental(l: &Ordinal, n: u64) -> Ordinal {
    let (gamma, beta) = split_last(l);
    match beta.pred() {
        Some(b) => gamma.add(&Ordinal::omega_pow(&b).mul_nat(n)),
        None => gamma.add(&Ordinal::omega_pow(&fundamental(&beta, n))),
    }
}

/// The supremum of a regular increasing sequence, read off three samples.
pub fn symbolic_sup(s: &[Ordinal; 3]) -> Ordinal {
    if s[0].height() < s[1].height() && s[1].height() < s[2].height() {
        return Ordinal::epsilon(0);
    }
    let common = (0..)
        .take_while(|&i| {
            let t0 = s[0].terms().get(i);
            t0.is_some() && s.iter().all(|x| x.terms().get(i) == t0)
        })
        .count();
    let prefix = Ordinal::from_terms(
        s[0].terms()[..common]
            .iter()
            .map(|t| (t.exponent(), t.coeff().clone()))
            .collect(),
    )
    .expect("valid");
    let exp = |x: &Ordinal| {
        x.terms()
            .get(common)
            .map(|t| t.exponent())
            .unwrap_or_else(Ordinal::zero)
    };
    let (e1, e2, e3) = (exp(&s[0]), exp(&s[1]), exp(&s[2]));
    let top = if e2 == e3 {
        e3.succ()
    } else {
        symbolic_sup(&[e1, e2, e3])
    };
    prefix.add(&Ordinal::omega_pow(&top))
}

impl KappaOracle {
    pub fn new() -> KappaOracle {
        KappaOracle::default()
    }

    pub fn kappa(&mut self, a: &Ordinal) -> Ordinal {
        if let Some(k) = self.kappa.get(a) {
            return k.clone();
        }
        let k = if a.is_zero() {
            Ordinal::zero()
        } else if let Some(prev) = a.pred() {
            self.max1_kappa(&prev).succ()
        } else if a.is_epsilon() {
            let tower: Vec<Ordinal> = (3..6).map(|n| self.kappa(&tower(n))).collect();
            symbolic_sup(&[tower[0].clone(), tower[1].clone(), tower[2].clone()])
        } else {
            let s: Vec<Ordinal> = (2..5).map(|n| self.kappa(&fundamental(a, n))).collect();
            symbolic_sup(&[s[0].clone(), s[1].clone(), s[2].clone()])
        };
        self.kappa.insert(a.clone(), k.clone());
        k
    }

    pub fn max1_kappa(&mut self, a: &Ordinal) -> Ordinal {
        if let Some(m) = self.max1.get(a) {
            return m.clone();
        }
        let m = if a.is_zero() || a.is_successor() {
            self.kappa(a)
        } else {
            assert!(!a.is_epsilon(), "no oracle value at epsilon indices");
            let (_, beta) = split_last(a);
            self.kappa(a).add(&self.max1_kappa(&beta))
        };
        self.max1.insert(a.clone(), m.clone());
        m
    }
}

/// `ω↑n`: `ω^ω^…^ω` with `n` omegas.
pub fn tower(n: u32) -> Ordinal {
    (0..n).fold(Ordinal::one(), |acc, _| Ordinal::omega_pow(&acc))
}
