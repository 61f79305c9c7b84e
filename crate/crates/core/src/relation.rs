//! The `≤₁` layer: the enumeration `κ`, components `I_α = [κ_α, max₁(κ_α)]`,
//! `index`, `max₁` and the `le1` decision procedure, plus the translation
//! maps between isomorphic intervals.
//!
//! All values are computed from a closed form. Write an index as a sum of
//! blocks `ω^e`. Then `max₁(κ)` is additive over blocks and `κ` is the sum of
//! the block maxima followed by `κ` of the final block. For a block
//! `ω^e = ρ·ω^b` with `b ≥ 1` that is not an epsilon number, `κ = ω^{g(b)}`
//! and `max₁(κ) = ω^{g(b)} + max₁(κ_b)`, where `g` is defined in [`Calculus::g`].
//! Quantities that depend on `max₁` at an epsilon number are tracked as
//! lower bounds and surface as `Undetermined` when the bound does not decide.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use parking_lot::Mutex;
use serde::{Deserialize, Serialize};

use crate::error::{undetermined, Error, Result};
use crate::ordinal::{ExtOrdinal, Ordinal, Rho};

/// Three-valued answer to a relation query.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    True,
    False,
    Undetermined,
}

impl Verdict {
    pub fn is_true(self) -> bool {
        self == Verdict::True
    }

    pub fn is_false(self) -> bool {
        self == Verdict::False
    }

    pub fn is_determined(self) -> bool {
        self != Verdict::Undetermined
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::True => "True",
            Verdict::False => "False",
            Verdict::Undetermined => "Undetermined",
        };
        f.write_str(s)
    }
}

/// A named inference used while deciding a query.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Step {
    /// Every ordinal is related to itself.
    Reflexive,
    /// The relations refine the ordinal order.
    Order,
    /// Only limit multiples of rho have proper successors.
    LimitMultiple,
    /// The component maximum is additive over the blocks of the index.
    Additivity,
    /// Component of a block `ρ·ω^b`, built from the component of `b`.
    SecondRecurrence,
    /// Component of a block below or equal to rho is a single point.
    Singleton,
    /// Interior of a component is a translated copy of an initial segment.
    InteriorTranslation,
    /// Gaps of width `κ` inside the component of an epsilon number.
    SmallIntervals,
    /// Points `ν_ξ` share the component maximum.
    NuPoint,
    /// `κ ≤₁ κ·ω` at an epsilon number.
    LowerBound,
    /// Value taken from the assumed continuation result.
    Sequel,
    /// The successors of a point form an interval.
    Interval,
    /// `≤₂` implies `≤₁`.
    RespectsLe1,
    /// A point `κ_α` has no proper `≤₂` successor.
    KappaNotLe2,
    /// `≤₂` successors of `ν_ξ` are divisible by `κ_α`.
    Divisibility,
    /// `max₂(ν_ξ) = ν_ξ` at zero and successor `ξ`.
    NuBoundary,
    /// `max₂(ν_ξ)` at limit `ξ` is not settled.
    NuLimit,
    /// A needed component bound is not settled.
    Unsettled,
}

impl Step {
    pub fn as_str(self) -> &'static str {
        match self {
            Step::Reflexive => "reflexive",
            Step::Order => "order",
            Step::LimitMultiple => "limit-multiple",
            Step::Additivity => "additivity",
            Step::SecondRecurrence => "second-recurrence",
            Step::Singleton => "singleton",
            Step::InteriorTranslation => "interior-translation",
            Step::SmallIntervals => "small-intervals",
            Step::NuPoint => "nu-point",
            Step::LowerBound => "lower-bound",
            Step::Sequel => "sequel",
            Step::Interval => "interval",
            Step::RespectsLe1 => "respects-le1",
            Step::KappaNotLe2 => "kappa-not-le2",
            Step::Divisibility => "divisibility",
            Step::NuBoundary => "nu-boundary",
            Step::NuLimit => "nu-limit",
            Step::Unsettled => "unsettled",
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A verdict together with the inferences that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decision {
    pub verdict: Verdict,
    pub trace: Vec<Step>,
}

impl Decision {
    fn new(verdict: Verdict, trace: Vec<Step>) -> Decision {
        Decision { verdict, trace }
    }

    fn with(verdict: Verdict, step: Step) -> Decision {
        Decision {
            verdict,
            trace: vec![step],
        }
    }
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let steps: Vec<&str> = self.trace.iter().map(|s| s.as_str()).collect();
        write!(f, "{} (trace: {})", self.verdict, steps.join("; "))
    }
}

/// Source of `≤₁`/`≤₂` verdicts for certification code that must not depend
/// on how they are computed.
pub trait RelationOracle {
    fn le1(&self, a: &Ordinal, b: &Ordinal) -> Verdict;
    fn le2(&self, a: &Ordinal, b: &Ordinal) -> Verdict;
}

/// A value that is either exact or only a certified lower bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bound {
    pub value: Ordinal,
    pub exact: bool,
}

impl Bound {
    pub fn exact(value: Ordinal) -> Bound {
        Bound { value, exact: true }
    }

    pub fn lower(value: Ordinal) -> Bound {
        Bound {
            value,
            exact: false,
        }
    }

    fn add(&self, other: &Bound) -> Bound {
        Bound {
            value: self.value.add(&other.value),
            exact: self.exact && other.exact,
        }
    }

    fn times(&self, n: &BigUint) -> Bound {
        Bound {
            value: self.value.mul(&Ordinal::from_big(n.clone())),
            exact: self.exact,
        }
    }

    pub fn to_ext(&self) -> ExtOrdinal {
        if self.exact {
            ExtOrdinal::Ord(self.value.clone())
        } else {
            ExtOrdinal::Undetermined
        }
    }
}

/// Shape of the component of a single block `ω^e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ComponentKind {
    /// `ω^e ≤ ρ`: the component is `{ω^e}`.
    Singleton,
    /// `ω^e = ρ·ω^b` with `b ≥ 1`, not an epsilon number.
    Regular,
    /// `ω^e` is an epsilon number above rho.
    Epsilon,
}

#[derive(Clone, Debug)]
struct Block {
    kind: ComponentKind,
    kappa: Bound,
    max1: Bound,
}

/// `κ_α` and `max₁(κ_α)` for one index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentInfo {
    pub alpha: Ordinal,
    pub kappa: Ordinal,
    pub max1: ExtOrdinal,
    /// Certified lower bound for `max₁(κ_α)`; equal to it when exact.
    pub max1_lower: Ordinal,
    pub kind: ComponentKind,
}

/// Position of an ordinal inside its component: `β = prefix + offset` with
/// `offset ∈ I_{ω^e}` and `prefix = max₁(κ_{α'})` where `index(β) = α' + ω^e`.
#[derive(Clone, Debug)]
pub struct Locus {
    pub index: Ordinal,
    pub prefix: Ordinal,
    pub exponent: Ordinal,
    pub offset: Ordinal,
    pub kind: ComponentKind,
    pub block_kappa: Ordinal,
    pub block_max1: Bound,
}

/// The component calculus for a fixed rho.
pub struct Calculus {
    rho: Rho,
    depth: u32,
    sequel: bool,
    least_epsilon: u32,
    blocks: Mutex<HashMap<Ordinal, Block>>,
}

impl fmt::Debug for Calculus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Calculus")
            .field("rho", &self.rho)
            .field("depth", &self.depth)
            .field("sequel", &self.sequel)
            .finish()
    }
}

impl Calculus {
    /// Calculus with epsilon depth 1 and without the continuation results.
    pub fn new(rho: Rho) -> Calculus {
        Calculus::with_options(rho, 1, false)
    }

    /// `depth` bounds the epsilon atoms accepted by [`Calculus::parse`].
    /// `sequel` enables `max₁(κ_ε) = ε·(ω+1)` for the least epsilon above rho.
    pub fn with_options(rho: Rho, depth: u32, sequel: bool) -> Calculus {
        let least_epsilon = rho.value().max_epsilon_index().map_or(0, |m| m + 1);
        Calculus {
            rho,
            depth,
            sequel,
            least_epsilon,
            blocks: Mutex::new(HashMap::new()),
        }
    }

    pub fn rho(&self) -> &Rho {
        &self.rho
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn sequel(&self) -> bool {
        self.sequel
    }

    /// Parses an ordinal, rejecting epsilon atoms beyond the configured depth.
    pub fn parse(&self, text: &str) -> Result<Ordinal> {
        Ok(Ordinal::parse_bounded(text, self.depth)?)
    }

    /// Whether `a` is an epsilon number strictly above rho.
    pub fn is_epsilon_above_rho(&self, a: &Ordinal) -> bool {
        a.is_epsilon() && a > self.rho.value()
    }

    fn epsilon_max1(&self, k: u32) -> Bound {
        let eps = Ordinal::epsilon(k);
        if self.sequel {
            let v = eps.mul(&Ordinal::omega().succ());
            Bound {
                value: v,
                exact: k == self.least_epsilon,
            }
        } else {
            Bound::lower(eps.mul(&Ordinal::omega()))
        }
    }

    fn block(&self, e: &Ordinal) -> Block {
        if let Some(b) = self.blocks.lock().get(e) {
            return b.clone();
        }
        let b = self.compute_block(e);
        self.blocks.lock().insert(e.clone(), b.clone());
        b
    }

    fn compute_block(&self, e: &Ordinal) -> Block {
        let r = self.rho.exponent();
        let w = Ordinal::omega_pow(e);
        if e <= r {
            return Block {
                kind: ComponentKind::Singleton,
                kappa: Bound::exact(w.clone()),
                max1: Bound::exact(w),
            };
        }
        if let Some(k) = w.epsilon_index() {
            return Block {
                kind: ComponentKind::Epsilon,
                kappa: Bound::exact(w),
                max1: self.epsilon_max1(k),
            };
        }
        let b = r.left_sub(e).expect("e > r");
        let g = self.g(&b);
        let kappa = Bound {
            value: Ordinal::omega_pow(&g.value),
            exact: g.exact,
        };
        let max1 = kappa.add(&self.max1_kappa_bound(&b));
        Block {
            kind: ComponentKind::Regular,
            kappa,
            max1,
        }
    }

    /// Exponent `g(b)` with `κ_{ρ·ω^b} = ω^{g(b)}`.
    ///
    /// `g(0) = r`, `g(λ) = r + λ` for limit `λ`, and
    /// `g(λ + n) = max(g(λ), lead(max₁(κ_λ))) + n` for `n ≥ 1`.
    pub fn g(&self, b: &Ordinal) -> Bound {
        let r = self.rho.exponent();
        if b.is_zero() {
            return Bound::exact(r.clone());
        }
        let (lam, n) = b.split_finite();
        if n.is_zero() {
            return Bound {
                value: r.add(&lam),
                exact: self.epsilons_settled_below(&lam),
            };
        }
        let base = self.g_base(&lam);
        Bound {
            value: base.value.add(&Ordinal::from_big(n)),
            exact: base.exact,
        }
    }

    fn g_base(&self, lam: &Ordinal) -> Bound {
        let gl = self.g(lam);
        if lam.is_zero() {
            return gl;
        }
        let ml = self.max1_kappa_bound(lam);
        let lead = ml.value.lead_exponent().expect("nonzero");
        Bound {
            value: gl.value.clone().max(lead),
            exact: gl.exact && ml.exact,
        }
    }

    /// Every epsilon number strictly between rho and `lam` has an exact `max₁`.
    fn epsilons_settled_below(&self, lam: &Ordinal) -> bool {
        let Some(top) = lam.max_epsilon_index() else {
            return true;
        };
        (0..=top).all(|k| {
            let eps = Ordinal::epsilon(k);
            eps <= *self.rho.value() || eps >= *lam || self.epsilon_max1(k).exact
        })
    }

    /// `max₁(κ_a)` as an exact value or a lower bound.
    pub fn max1_kappa_bound(&self, a: &Ordinal) -> Bound {
        let mut acc = Bound::exact(Ordinal::zero());
        for t in a.terms() {
            let blk = self.block(&t.exponent());
            acc = acc.add(&blk.max1.times(t.coeff()));
        }
        acc
    }

    /// `κ_a` as an exact value or a lower bound.
    pub fn kappa_bound(&self, a: &Ordinal) -> Bound {
        if a.is_zero() {
            return Bound::exact(Ordinal::zero());
        }
        let (prefix, e) = a.cnf_last_term().expect("nonzero");
        self.max1_kappa_bound(&prefix).add(&self.block(&e).kappa)
    }

    /// `κ_a`.
    pub fn kappa(&self, a: &Ordinal) -> Result<Ordinal> {
        let k = self.kappa_bound(a);
        if k.exact {
            Ok(k.value)
        } else {
            Err(undetermined(format!(
                "kappa({a}) depends on an unsettled component maximum"
            )))
        }
    }

    /// `max₁(κ_a)`.
    pub fn max1_kappa(&self, a: &Ordinal) -> ExtOrdinal {
        self.max1_kappa_bound(a).to_ext()
    }

    /// The certified lower bound `κ_a·ω ≤ max₁(κ_a)` for an epsilon number `a > ρ`.
    pub fn max1_lower_bound(&self, a: &Ordinal) -> Result<Ordinal> {
        if !self.is_epsilon_above_rho(a) {
            return Err(Error::NotEpsilon(a.clone()));
        }
        Ok(self.kappa(a)?.mul(&Ordinal::omega()))
    }

    pub fn component(&self, a: &Ordinal) -> Result<ComponentInfo> {
        let kappa = self.kappa(a)?;
        let m = self.max1_kappa_bound(a);
        let kind = match a.last_exponent() {
            Some(e) => self.block(&e).kind,
            None => ComponentKind::Singleton,
        };
        Ok(ComponentInfo {
            alpha: a.clone(),
            kappa,
            max1: m.to_ext(),
            max1_lower: m.value,
            kind,
        })
    }

    /// The exponent `e` of the first block of `index(β)`.
    fn lead_block_exponent(&self, beta: &Ordinal) -> Result<Ordinal> {
        let l = beta.lead_exponent().expect("nonzero");
        let r = self.rho.exponent();
        if l <= *r {
            return Ok(l);
        }
        let bstar = r.left_sub(&l).expect("l > r");
        let (lam, n) = bstar.split_finite();
        let gl = self.g(&lam);
        if !gl.exact {
            return Err(undetermined(format!(
                "component position of {beta} is not settled"
            )));
        }
        let b = if n.is_zero() {
            lam
        } else {
            let g0 = self.g_base(&lam);
            let d = r.add(&lam).left_sub(&g0.value).expect("g0 >= r + lam");
            match d.finite_value() {
                None => lam,
                Some(dv) if n <= dv => lam,
                Some(dv) if g0.exact => lam.add(&Ordinal::from_big(n - dv)),
                Some(_) => {
                    return Err(undetermined(format!(
                        "component position of {beta} is not settled"
                    )))
                }
            }
        };
        Ok(r.add(&b))
    }

    /// `index(β)`: the unique `α` with `β ∈ I_α`.
    pub fn index(&self, beta: &Ordinal) -> Result<Ordinal> {
        if beta.is_zero() {
            return Ok(Ordinal::zero());
        }
        let e = self.lead_block_exponent(beta)?;
        let blk = self.block(&e);
        if !blk.kappa.exact {
            return Err(undetermined(format!(
                "kappa of the block w^({e}) is not settled"
            )));
        }
        let w = Ordinal::omega_pow(&e);
        if *beta <= blk.max1.value {
            return Ok(w);
        }
        if !blk.max1.exact {
            return Err(undetermined(format!(
                "{beta} lies beyond a certified lower bound"
            )));
        }
        let rest = blk.max1.value.left_sub(beta).expect("beta > max1");
        Ok(w.add(&self.index(&rest)?))
    }

    /// Locates a nonzero `β` inside the component of the last block of its index.
    pub fn locate(&self, beta: &Ordinal) -> Result<Locus> {
        let index = self.index(beta)?;
        let (pre, e) = index.cnf_last_term().map_err(Error::from)?;
        let p = self.max1_kappa_bound(&pre);
        if !p.exact {
            return Err(undetermined(format!(
                "prefix of the component of {beta} is not settled"
            )));
        }
        let blk = self.block(&e);
        let offset = p.value.left_sub(beta).expect("beta above prefix");
        Ok(Locus {
            index,
            prefix: p.value,
            exponent: e,
            offset,
            kind: blk.kind,
            block_kappa: blk.kappa.value,
            block_max1: blk.max1,
        })
    }

    /// `max₁(β)` as a bound, with the inferences used.
    pub fn max1_bound(&self, beta: &Ordinal) -> Result<(Bound, Vec<Step>)> {
        if beta.is_zero() {
            return Ok((Bound::exact(Ordinal::zero()), vec![Step::Reflexive]));
        }
        if !self.rho.is_limit_multiple(beta) {
            return Ok((Bound::exact(beta.clone()), vec![Step::LimitMultiple]));
        }
        let loc = self.locate(beta)?;
        let mut steps = Vec::new();
        if !loc.prefix.is_zero() {
            steps.push(Step::Additivity);
        }
        let base = Bound::exact(loc.prefix.clone());
        let y = &loc.offset;
        match loc.kind {
            ComponentKind::Singleton => {
                steps.push(Step::Singleton);
                Ok((Bound::exact(beta.clone()), steps))
            }
            ComponentKind::Regular => {
                steps.push(Step::SecondRecurrence);
                if *y == loc.block_kappa {
                    return Ok((base.add(&loc.block_max1), steps));
                }
                let delta = loc.block_kappa.left_sub(y).expect("offset above kappa");
                let (sub, inner) = self.max1_bound(&delta)?;
                steps.push(Step::InteriorTranslation);
                steps.extend(inner);
                Ok((
                    Bound::exact(loc.prefix.add(&loc.block_kappa)).add(&sub),
                    steps,
                ))
            }
            ComponentKind::Epsilon => {
                let eps = Rho::new(loc.block_kappa.clone()).expect("epsilon is indecomposable");
                let (q, eta) = eps.split(y);
                if !eta.is_zero() {
                    let (sub, inner) = self.max1_bound(&eta)?;
                    steps.push(Step::SmallIntervals);
                    steps.extend(inner);
                    return Ok((Bound::exact(loc.prefix.add(&q)).add(&sub), steps));
                }
                if q <= loc.block_kappa.mul(&Ordinal::omega()) {
                    steps.push(Step::NuPoint);
                    steps.push(if loc.block_max1.exact {
                        Step::Sequel
                    } else {
                        Step::LowerBound
                    });
                    return Ok((base.add(&loc.block_max1), steps));
                }
                steps.push(Step::Sequel);
                Ok((Bound::exact(beta.clone()), steps))
            }
        }
    }

    /// `max₁(β)`, the largest ordinal `γ` with `β ≤₁ γ`.
    pub fn max1(&self, beta: &Ordinal) -> ExtOrdinal {
        match self.max1_bound(beta) {
            Ok((b, _)) => b.to_ext(),
            Err(_) => ExtOrdinal::Undetermined,
        }
    }

    /// Decides `b1 ≤₁ b2`.
    pub fn le1(&self, b1: &Ordinal, b2: &Ordinal) -> Decision {
        match b1.cmp(b2) {
            Ordering::Greater => return Decision::with(Verdict::False, Step::Order),
            Ordering::Equal => return Decision::with(Verdict::True, Step::Reflexive),
            Ordering::Less => {}
        }
        if !self.rho.is_limit_multiple(b1) {
            return Decision::with(Verdict::False, Step::LimitMultiple);
        }
        let Ok((bound, mut steps)) = self.max1_bound(b1) else {
            return Decision::with(Verdict::Undetermined, Step::Unsettled);
        };
        steps.push(Step::Interval);
        if *b2 <= bound.value {
            Decision::new(Verdict::True, steps)
        } else if bound.exact {
            Decision::new(Verdict::False, steps)
        } else {
            steps.push(Step::Unsettled);
            Decision::new(Verdict::Undetermined, steps)
        }
    }

    /// The witness map of `I_b ≅ I_{a+b}`: `x ↦ max₁(κ_a) + x`.
    pub fn frt_iso(&self, a: &Ordinal, b: &Ordinal, x: &Ordinal) -> Result<Ordinal> {
        if b.is_zero() {
            return Err(Error::XOutOfRange(b.clone()));
        }
        if self.index(x)? != *b {
            return Err(Error::XNotInComponent {
                x: x.clone(),
                alpha: b.clone(),
            });
        }
        let m = self.max1_kappa_bound(a);
        if !m.exact {
            return Err(undetermined(format!("max1(kappa({a})) is not settled")));
        }
        Ok(m.value.add(x))
    }

    /// Checks that no `x < start` is `≤₂` some `y ≥ start`.
    ///
    /// Walks the chain of components containing `start`; the only `≤₂` facts
    /// that are not refuted are those from a point `ν_ω`.
    pub fn le2_free_below(&self, start: &Ordinal) -> Result<()> {
        let mut cur = start.clone();
        loop {
            if cur.is_zero() {
                return Ok(());
            }
            let loc = self.locate(&cur)?;
            let y = loc.offset;
            match loc.kind {
                ComponentKind::Singleton => return Ok(()),
                ComponentKind::Regular => {
                    if y == loc.block_kappa {
                        return Ok(());
                    }
                    cur = loc.block_kappa.left_sub(&y).expect("offset above kappa");
                }
                ComponentKind::Epsilon => {
                    let nu_omega = loc.block_kappa.mul(&Ordinal::omega());
                    if y > nu_omega {
                        return Err(undetermined(format!(
                            "{} may be <=2-linked above {start}",
                            loc.prefix.add(&nu_omega)
                        )));
                    }
                    let eps = Rho::new(loc.block_kappa.clone()).expect("indecomposable");
                    let (_, eta) = eps.split(&y);
                    if eta.is_zero() {
                        return Ok(());
                    }
                    cur = eta;
                }
            }
        }
    }

    /// Translation `1+η ↦ base+η` for a base not divisible by rho.
    pub fn msl_translate(&self, base: &Ordinal, x: &Ordinal) -> Result<Ordinal> {
        if self.rho.divides(base) {
            return Err(Error::NotApplicable(format!(
                "base {base} is divisible by rho = {}",
                self.rho
            )));
        }
        if x.is_zero() {
            return Err(Error::XOutOfRange(x.clone()));
        }
        self.le2_free_below(base)?;
        let eta = Ordinal::one().left_sub(x).expect("x >= 1");
        Ok(base.add(&eta))
    }

    /// Translation `ρ·α₁+η ↦ ρ·α₂+η` on `[ρ·α₁, ρ·α₁+γ]` for divisible bases.
    pub fn lmsl_translate(
        &self,
        base1: &Ordinal,
        base2: &Ordinal,
        gamma: &Ordinal,
        x: &Ordinal,
    ) -> Result<Ordinal> {
        for base in [base1, base2] {
            if !self.rho.divides(base) {
                return Err(Error::NotApplicable(format!(
                    "base {base} is not divisible by rho = {}",
                    self.rho
                )));
            }
        }
        let top = base1.add(gamma);
        if x < base1 || *x > top {
            return Err(Error::XOutOfRange(x.clone()));
        }
        for base in [base1, base2] {
            self.le2_free_below(&base.succ())?;
        }
        let d1 = self.max1_bound(base1)?.0;
        let d2 = self.max1_bound(base2)?.0;
        let slack = |base: &Ordinal, d: &Bound| Bound {
            value: base.left_sub(&d.value).expect("max1 >= base"),
            exact: d.exact,
        };
        let (s1, s2) = (slack(base1, &d1), slack(base2, &d2));
        let within = *gamma <= s1.value && *gamma <= s2.value;
        let equal = s1.exact && s2.exact && s1.value == s2.value;
        if !within && !equal {
            if s1.exact && s2.exact {
                return Err(Error::NotApplicable(format!(
                    "gamma = {gamma} exceeds the component slack ({}, {}) and the slacks differ",
                    s1.value, s2.value
                )));
            }
            return Err(undetermined("component slack of a base is not settled"));
        }
        let eta = base1.left_sub(x).expect("x >= base1");
        Ok(base2.add(&eta))
    }
}

impl RelationOracle for Calculus {
    fn le1(&self, a: &Ordinal, b: &Ordinal) -> Verdict {
        Calculus::le1(self, a, b).verdict
    }

    fn le2(&self, a: &Ordinal, b: &Ordinal) -> Verdict {
        Calculus::le2(self, a, b).verdict
    }
}
