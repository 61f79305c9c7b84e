//! Search budgets and the finite universe of notations they span.

use serde::{Deserialize, Serialize};

use crate::ordinal::Ordinal;

/// Limits for exhaustive searches over notations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Budget {
    /// Maximum number of CNF terms per notation.
    pub terms: usize,
    /// Maximum coefficient per term.
    pub coeff: u64,
    /// Nesting depth of exponents; depth 0 exponents are naturals and epsilon atoms.
    pub depth: u32,
    /// Exclusive upper bound of the universe; derived from the input when absent.
    pub ceiling: Option<Ordinal>,
    /// Maximum number of search nodes before giving up.
    pub node_limit: u64,
    /// Maximum number of notations materialised.
    pub universe_limit: usize,
}

impl Default for Budget {
    fn default() -> Budget {
        Budget {
            terms: 6,
            coeff: 8,
            depth: 1,
            ceiling: None,
            node_limit: 200_000,
            universe_limit: 250_000,
        }
    }
}

impl Budget {
    /// `ω^(e+1)` where `e` is the leading exponent of `top`, unless a ceiling is set.
    pub fn ceiling_for(&self, top: Option<&Ordinal>) -> Ordinal {
        if let Some(c) = &self.ceiling {
            return c.clone();
        }
        let e = top
            .and_then(Ordinal::lead_exponent)
            .unwrap_or_else(Ordinal::zero);
        Ordinal::omega_pow(&e.succ())
    }
}

/// All notations below a ceiling that fit a budget, in increasing order.
#[derive(Clone, Debug)]
pub struct Universe {
    members: Vec<Ordinal>,
    truncated: bool,
    ceiling: Ordinal,
}

impl Universe {
    /// Builds the universe below `ceiling`; `epsilons` bounds the epsilon atoms used.
    pub fn new(budget: &Budget, ceiling: &Ordinal, epsilons: u32) -> Universe {
        let mut truncated = false;
        let mut members = generate(budget, budget.depth, ceiling, epsilons, &mut truncated);
        members.sort();
        members.dedup();
        Universe {
            members,
            truncated,
            ceiling: ceiling.clone(),
        }
    }

    pub fn members(&self) -> &[Ordinal] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Whether the size limit cut the enumeration short.
    pub fn truncated(&self) -> bool {
        self.truncated
    }

    pub fn ceiling(&self) -> &Ordinal {
        &self.ceiling
    }

    pub fn contains(&self, x: &Ordinal) -> bool {
        self.members.binary_search(x).is_ok()
    }

    /// Position of the first member strictly above `lo`.
    pub fn first_above(&self, lo: Option<&Ordinal>) -> usize {
        match lo {
            None => 0,
            Some(lo) => self.members.partition_point(|m| m <= lo),
        }
    }
}

fn generate(
    budget: &Budget,
    depth: u32,
    ceiling: &Ordinal,
    epsilons: u32,
    truncated: &mut bool,
) -> Vec<Ordinal> {
    let mut exps: Vec<Ordinal> = if depth == 0 {
        let mut v: Vec<Ordinal> = (0..=budget.coeff).map(Ordinal::nat).collect();
        v.extend((0..epsilons).map(Ordinal::epsilon));
        v
    } else {
        let inner = ceiling
            .lead_exponent()
            .map(|e| e.succ())
            .unwrap_or_else(Ordinal::zero);
        generate(budget, depth - 1, &inner, epsilons, truncated)
    };
    exps.retain(|e| Ordinal::omega_pow(e) < *ceiling);
    exps.sort_by(|a, b| b.cmp(a));
    exps.dedup();
    let mut out = vec![Ordinal::zero()];
    let mut terms = Vec::new();
    extend(budget, &exps, 0, &mut terms, ceiling, &mut out, truncated);
    out
}

fn extend(
    budget: &Budget,
    exps: &[Ordinal],
    from: usize,
    terms: &mut Vec<(Ordinal, u64)>,
    ceiling: &Ordinal,
    out: &mut Vec<Ordinal>,
    truncated: &mut bool,
) {
    if terms.len() >= budget.terms {
        return;
    }
    for (i, e) in exps.iter().enumerate().skip(from) {
        for c in 1..=budget.coeff {
            if out.len() >= budget.universe_limit {
                *truncated = true;
                return;
            }
            terms.push((e.clone(), c));
            let value = Ordinal::from_terms(
                terms
                    .iter()
                    .map(|(e, c)| (e.clone(), (*c).into()))
                    .collect(),
            )
            .expect("decreasing exponents");
            if value >= *ceiling {
                terms.pop();
                break;
            }
            out.push(value);
            extend(budget, exps, i + 1, terms, ceiling, out, truncated);
            terms.pop();
        }
    }
}
