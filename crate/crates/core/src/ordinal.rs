//! Ordinals below `ε_K` in Cantor normal form.
//!
//! An [`Ordinal`] is a strictly decreasing list of terms `ω^e·c`. The
//! constants `ε_k` are primitive atoms with `ω^(ε_k) = ε_k`, so a term whose
//! exponent would be exactly `ε_k` is stored as the atom itself. Every value
//! is canonical, which makes structural equality coincide with ordinal
//! equality.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// The base of a CNF term.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Base {
    /// `ω^e` where `e` is not an epsilon atom.
    Pow(Arc<Ordinal>),
    /// The atom `ε_k`.
    Eps(u32),
}

/// One term `base·coeff` of a normal form, `coeff ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    base: Base,
    coeff: BigUint,
}

impl Term {
    pub fn base(&self) -> &Base {
        &self.base
    }

    pub fn coeff(&self) -> &BigUint {
        &self.coeff
    }

    /// The exponent `e` with `base = ω^e`.
    pub fn exponent(&self) -> Ordinal {
        self.base.exponent()
    }

    fn is_finite(&self) -> bool {
        matches!(&self.base, Base::Pow(e) if e.is_zero())
    }
}

impl Base {
    pub fn exponent(&self) -> Ordinal {
        match self {
            Base::Pow(e) => (**e).clone(),
            Base::Eps(k) => Ordinal::epsilon(*k),
        }
    }

    fn one() -> Base {
        Base::Pow(Arc::new(Ordinal::zero()))
    }
}

/// An ordinal in canonical Cantor normal form. The empty term list is 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Ordinal {
    terms: Vec<Term>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrdinalError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("epsilon atom e{index} exceeds the representation bound (depth {depth})")]
    BoundExceeded { index: u32, depth: u32 },
    #[error("operation requires a nonzero argument")]
    ZeroArgument,
    #[error("{0} is not additively indecomposable")]
    NotIndecomposable(Ordinal),
}

/// Shape of an ordinal: zero, successor or limit, plus indecomposability flags.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub kind: Kind,
    pub indecomposable: bool,
    pub epsilon: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Zero,
    Successor,
    Limit,
}

fn cmp_base(a: &Base, b: &Base) -> Ordering {
    match (a, b) {
        (Base::Eps(i), Base::Eps(j)) => i.cmp(j),
        (Base::Pow(e), Base::Pow(f)) => e.cmp(f),
        (Base::Eps(i), Base::Pow(f)) => cmp_eps(*i, f),
        (Base::Pow(e), Base::Eps(j)) => cmp_eps(*j, e).reverse(),
    }
}

/// Compares `ε_i` with an arbitrary ordinal.
fn cmp_eps(i: u32, e: &Ordinal) -> Ordering {
    let Some(first) = e.terms.first() else {
        return Ordering::Greater;
    };
    match cmp_base(&Base::Eps(i), &first.base) {
        Ordering::Equal => {
            if e.terms.len() == 1 && first.coeff.is_one() {
                Ordering::Equal
            } else {
                Ordering::Less
            }
        }
        o => o,
    }
}

fn cmp_term(a: &Term, b: &Term) -> Ordering {
    cmp_base(&a.base, &b.base).then_with(|| a.coeff.cmp(&b.coeff))
}

impl Ord for Ordinal {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.terms.iter().zip(&other.terms) {
            match cmp_term(a, b) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ordinal {
    pub fn zero() -> Ordinal {
        Ordinal { terms: Vec::new() }
    }

    pub fn one() -> Ordinal {
        Ordinal::nat(1)
    }

    pub fn nat(n: u64) -> Ordinal {
        Ordinal::from_big(BigUint::from(n))
    }

    pub fn from_big(n: BigUint) -> Ordinal {
        if n.is_zero() {
            Ordinal::zero()
        } else {
            Ordinal {
                terms: vec![Term {
                    base: Base::one(),
                    coeff: n,
                }],
            }
        }
    }

    /// `ω`.
    pub fn omega() -> Ordinal {
        Ordinal::omega_pow(&Ordinal::one())
    }

    /// The atom `ε_k`.
    pub fn epsilon(k: u32) -> Ordinal {
        Ordinal {
            terms: vec![Term {
                base: Base::Eps(k),
                coeff: BigUint::one(),
            }],
        }
    }

    /// `ω^e` in canonical form (an exponent equal to `ε_k` collapses to the atom).
    pub fn omega_pow(e: &Ordinal) -> Ordinal {
        Ordinal {
            terms: vec![Term {
                base: base_of(e),
                coeff: BigUint::one(),
            }],
        }
    }

    /// Single term `ω^e·c`. Returns 0 when `c = 0`.
    pub fn monomial(e: &Ordinal, c: BigUint) -> Ordinal {
        if c.is_zero() {
            return Ordinal::zero();
        }
        Ordinal {
            terms: vec![Term {
                base: base_of(e),
                coeff: c,
            }],
        }
    }

    /// Builds an ordinal from `(exponent, coefficient)` pairs, which must be
    /// strictly decreasing with positive coefficients.
    pub fn from_terms(pairs: Vec<(Ordinal, BigUint)>) -> Option<Ordinal> {
        let mut terms: Vec<Term> = Vec::with_capacity(pairs.len());
        for (e, c) in pairs {
            if c.is_zero() {
                return None;
            }
            let t = Term {
                base: base_of(&e),
                coeff: c,
            };
            if let Some(prev) = terms.last() {
                if cmp_base(&prev.base, &t.base) != Ordering::Greater {
                    return None;
                }
            }
            terms.push(t);
        }
        Some(Ordinal { terms })
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.terms.iter().all(Term::is_finite)
    }

    /// The value as a machine integer when finite and small enough.
    pub fn as_u64(&self) -> Option<u64> {
        match self.terms.as_slice() {
            [] => Some(0),
            [t] if t.is_finite() => t.coeff.to_u64(),
            _ => None,
        }
    }

    /// The value as a natural number when finite.
    pub fn finite_value(&self) -> Option<BigUint> {
        match self.terms.as_slice() {
            [] => Some(BigUint::zero()),
            [t] if t.is_finite() => Some(t.coeff.clone()),
            _ => None,
        }
    }

    /// Exponent of the leading term. `None` for 0.
    pub fn lead_exponent(&self) -> Option<Ordinal> {
        self.terms.first().map(Term::exponent)
    }

    /// Exponent of the final term. `None` for 0.
    pub fn last_exponent(&self) -> Option<Ordinal> {
        self.terms.last().map(Term::exponent)
    }

    pub fn is_successor(&self) -> bool {
        self.terms.last().is_some_and(Term::is_finite)
    }

    pub fn is_limit(&self) -> bool {
        self.terms.last().is_some_and(|t| !t.is_finite())
    }

    /// Nonzero and closed under addition, i.e. of the form `ω^e`.
    pub fn is_indecomposable(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].coeff.is_one()
    }

    /// The epsilon atom index when `self = ε_k`.
    pub fn epsilon_index(&self) -> Option<u32> {
        match self.terms.as_slice() {
            [Term {
                base: Base::Eps(k),
                coeff,
            }] if coeff.is_one() => Some(*k),
            _ => None,
        }
    }

    pub fn is_epsilon(&self) -> bool {
        self.epsilon_index().is_some()
    }

    /// Largest epsilon atom index occurring anywhere in the notation.
    pub fn max_epsilon_index(&self) -> Option<u32> {
        self.terms
            .iter()
            .filter_map(|t| match &t.base {
                Base::Eps(k) => Some(*k),
                Base::Pow(e) => e.max_epsilon_index(),
            })
            .max()
    }

    /// Rejects atoms `ε_k` with `k ≥ depth`.
    pub fn check_bound(&self, depth: u32) -> Result<(), OrdinalError> {
        match self.max_epsilon_index() {
            Some(k) if k >= depth => Err(OrdinalError::BoundExceeded { index: k, depth }),
            _ => Ok(()),
        }
    }

    pub fn classify(&self) -> Classification {
        let kind = if self.is_zero() {
            Kind::Zero
        } else if self.is_successor() {
            Kind::Successor
        } else {
            Kind::Limit
        };
        Classification {
            kind,
            indecomposable: self.is_indecomposable(),
            epsilon: self.is_epsilon(),
        }
    }

    /// Ordinal sum `self + other`.
    pub fn add(&self, other: &Ordinal) -> Ordinal {
        let Some(head) = other.terms.first() else {
            return self.clone();
        };
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut rest = other.terms.iter();
        for t in &self.terms {
            match cmp_base(&t.base, &head.base) {
                Ordering::Greater => terms.push(t.clone()),
                Ordering::Equal => {
                    terms.push(Term {
                        base: t.base.clone(),
                        coeff: &t.coeff + &head.coeff,
                    });
                    rest.next();
                    break;
                }
                Ordering::Less => break,
            }
        }
        terms.extend(rest.cloned());
        Ordinal { terms }
    }

    /// Ordinal product `self · other`.
    pub fn mul(&self, other: &Ordinal) -> Ordinal {
        if self.is_zero() || other.is_zero() {
            return Ordinal::zero();
        }
        let lead = self.lead_exponent().expect("nonzero");
        let mut out = Ordinal::zero();
        for t in &other.terms {
            let piece = if t.is_finite() {
                let mut terms = self.terms.clone();
                terms[0].coeff = &terms[0].coeff * &t.coeff;
                Ordinal { terms }
            } else {
                Ordinal::monomial(&lead.add(&t.exponent()), t.coeff.clone())
            };
            out = out.add(&piece);
        }
        out
    }

    /// `self · n` for a natural `n`.
    pub fn mul_nat(&self, n: u64) -> Ordinal {
        self.mul(&Ordinal::nat(n))
    }

    /// The unique `x` with `self + x = other`, when `self ≤ other`.
    pub fn left_sub(&self, other: &Ordinal) -> Option<Ordinal> {
        for (idx, tb) in other.terms.iter().enumerate() {
            let Some(ta) = self.terms.get(idx) else {
                return Some(Ordinal {
                    terms: other.terms[idx..].to_vec(),
                });
            };
            match cmp_base(&ta.base, &tb.base) {
                Ordering::Equal => match ta.coeff.cmp(&tb.coeff) {
                    Ordering::Equal => continue,
                    Ordering::Less => {
                        let mut terms = vec![Term {
                            base: tb.base.clone(),
                            coeff: &tb.coeff - &ta.coeff,
                        }];
                        terms.extend_from_slice(&other.terms[idx + 1..]);
                        return Some(Ordinal { terms });
                    }
                    Ordering::Greater => return None,
                },
                Ordering::Less => {
                    return Some(Ordinal {
                        terms: other.terms[idx..].to_vec(),
                    })
                }
                Ordering::Greater => return None,
            }
        }
        if self.terms.len() > other.terms.len() {
            None
        } else {
            Some(Ordinal::zero())
        }
    }

    /// `self + 1`.
    pub fn succ(&self) -> Ordinal {
        self.add(&Ordinal::one())
    }

    /// The predecessor of a successor ordinal.
    pub fn pred(&self) -> Option<Ordinal> {
        if !self.is_successor() {
            return None;
        }
        let mut terms = self.terms.clone();
        let last = terms.last_mut().expect("successor");
        if last.coeff.is_one() {
            terms.pop();
        } else {
            last.coeff -= 1u32;
        }
        Some(Ordinal { terms })
    }

    /// Splits `self = prefix + ω^e` where `ω^e` is one copy of the final term.
    pub fn cnf_last_term(&self) -> Result<(Ordinal, Ordinal), OrdinalError> {
        let last = self.terms.last().ok_or(OrdinalError::ZeroArgument)?;
        let mut terms = self.terms.clone();
        let e = last.exponent();
        let tail = terms.last_mut().expect("nonempty");
        if tail.coeff.is_one() {
            terms.pop();
        } else {
            tail.coeff -= 1u32;
        }
        Ok((Ordinal { terms }, e))
    }

    /// Splits off the finite part: `self = λ + n` with `λ` zero or a limit.
    pub fn split_finite(&self) -> (Ordinal, BigUint) {
        match self.terms.last() {
            Some(t) if t.is_finite() => {
                let n = t.coeff.clone();
                (
                    Ordinal {
                        terms: self.terms[..self.terms.len() - 1].to_vec(),
                    },
                    n,
                )
            }
            _ => (self.clone(), BigUint::zero()),
        }
    }

    /// The list of single-copy indecomposable summands `ω^e` in order.
    pub fn summands(&self) -> impl Iterator<Item = (Ordinal, &BigUint)> + '_ {
        self.terms.iter().map(|t| (t.exponent(), &t.coeff))
    }

    /// Number of terms in the normal form.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Largest coefficient in the normal form, recursively through exponents.
    pub fn max_coeff(&self) -> BigUint {
        let mut m = BigUint::zero();
        for t in &self.terms {
            if t.coeff > m {
                m = t.coeff.clone();
            }
            if let Base::Pow(e) = &t.base {
                let inner = e.max_coeff();
                if inner > m {
                    m = inner;
                }
            }
        }
        m
    }

    /// Nesting depth of exponents: 0 for naturals, 1 below `ω^ω`, and so on.
    pub fn height(&self) -> usize {
        self.terms
            .iter()
            .map(|t| match &t.base {
                Base::Pow(e) if e.is_zero() => 0,
                Base::Pow(e) => 1 + e.height(),
                Base::Eps(_) => 1,
            })
            .max()
            .unwrap_or(0)
    }

    /// Parses the ASCII notation, rejecting atoms `e_k` with `k ≥ depth`.
    pub fn parse_bounded(text: &str, depth: u32) -> Result<Ordinal, OrdinalError> {
        let o = Parser::new(text).parse()?;
        o.check_bound(depth)?;
        Ok(o)
    }

    /// Parses the ASCII notation without a bound on epsilon atoms.
    pub fn parse(text: &str) -> Result<Ordinal, OrdinalError> {
        Parser::new(text).parse()
    }
}

fn base_of(e: &Ordinal) -> Base {
    match e.epsilon_index() {
        Some(k) => Base::Eps(k),
        None => Base::Pow(Arc::new(e.clone())),
    }
}

impl From<u64> for Ordinal {
    fn from(n: u64) -> Self {
        Ordinal::nat(n)
    }
}

impl std::str::FromStr for Ordinal {
    type Err = OrdinalError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ordinal::parse(s)
    }
}

// Formatting ----------------------------------------------------------------

fn fmt_base(base: &Base, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match base {
        Base::Eps(k) => write!(f, "e{k}"),
        Base::Pow(e) => {
            if e.is_one() {
                return write!(f, "w");
            }
            write!(f, "w^")?;
            if e.is_finite() || e.is_indecomposable() {
                write!(f, "{e}")
            } else {
                write!(f, "({e})")
            }
        }
    }
}

impl Ordinal {
    fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].is_finite() && self.terms[0].coeff.is_one()
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            if t.is_finite() {
                write!(f, "{}", t.coeff)?;
                continue;
            }
            fmt_base(&t.base, f)?;
            if !t.coeff.is_one() {
                write!(f, "*{}", t.coeff)?;
            }
        }
        Ok(())
    }
}

impl Serialize for Ordinal {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Ordinal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Ordinal::parse(&s).map_err(serde::de::Error::custom)
    }
}

// Parsing -------------------------------------------------------------------

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            src: text.as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, OrdinalError> {
        Err(OrdinalError::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn parse(mut self) -> Result<Ordinal, OrdinalError> {
        let o = self.ordinal()?;
        if self.peek().is_some() {
            return self.err("unexpected trailing input");
        }
        Ok(o)
    }

    fn ordinal(&mut self) -> Result<Ordinal, OrdinalError> {
        let mut acc = self.term()?;
        while self.eat(b'+') {
            let t = self.term()?;
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    fn nat(&mut self) -> Result<BigUint, OrdinalError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a natural number");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse::<BigUint>().expect("digits parse"))
    }

    fn term(&mut self) -> Result<Ordinal, OrdinalError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => Ok(Ordinal::from_big(self.nat()?)),
            Some(b'w') | Some(b'e') => {
                let a = self.atom()?;
                if self.eat(b'*') {
                    let n = self.nat()?;
                    Ok(a.mul(&Ordinal::from_big(n)))
                } else {
                    Ok(a)
                }
            }
            Some(_) => self.err("expected a term"),
            None => self.err("unexpected end of input"),
        }
    }

    fn atom(&mut self) -> Result<Ordinal, OrdinalError> {
        match self.peek() {
            Some(b'w') => {
                self.pos += 1;
                if self.eat(b'^') {
                    let e = self.factor()?;
                    Ok(Ordinal::omega_pow(&e))
                } else {
                    Ok(Ordinal::omega())
                }
            }
            Some(b'e') => {
                self.pos += 1;
                let n = self.nat()?;
                match n.to_u32() {
                    Some(k) => Ok(Ordinal::epsilon(k)),
                    None => self.err("epsilon index too large"),
                }
            }
            _ => self.err("expected 'w' or 'e'"),
        }
    }

    fn factor(&mut self) -> Result<Ordinal, OrdinalError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let o = self.ordinal()?;
                if !self.eat(b')') {
                    return self.err("expected ')'");
                }
                Ok(o)
            }
            Some(c) if c.is_ascii_digit() => Ok(Ordinal::from_big(self.nat()?)),
            Some(b'w') | Some(b'e') => self.atom(),
            Some(_) => self.err("expected an exponent"),
            None => self.err("unexpected end of input"),
        }
    }
}

// Rho -----------------------------------------------------------------------

/// The parameter `ρ = ω^r`, an additively indecomposable ordinal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rho {
    value: Ordinal,
    exp: Ordinal,
}

impl Rho {
    pub fn new(value: Ordinal) -> Result<Rho, OrdinalError> {
        if !value.is_indecomposable() {
            return Err(OrdinalError::NotIndecomposable(value));
        }
        let exp = value.lead_exponent().expect("nonzero");
        Ok(Rho { value, exp })
    }

    /// `ρ = 1`.
    pub fn one() -> Rho {
        Rho::new(Ordinal::one()).expect("1 is indecomposable")
    }

    pub fn value(&self) -> &Ordinal {
        &self.value
    }

    /// The exponent `r` with `ρ = ω^r`.
    pub fn exponent(&self) -> &Ordinal {
        &self.exp
    }

    pub fn is_one(&self) -> bool {
        self.exp.is_zero()
    }

    /// Returns `(ρ·δ, ε)` with `ε < ρ` and `a = ρ·δ + ε`.
    pub fn split(&self, a: &Ordinal) -> (Ordinal, Ordinal) {
        let cut = a
            .terms
            .iter()
            .position(|t| t.exponent() < self.exp)
            .unwrap_or(a.terms.len());
        (
            Ordinal {
                terms: a.terms[..cut].to_vec(),
            },
            Ordinal {
                terms: a.terms[cut..].to_vec(),
            },
        )
    }

    /// The quotient `δ` with `a = ρ·δ + rem(a)`.
    pub fn quotient(&self, a: &Ordinal) -> Ordinal {
        let (q, _) = self.split(a);
        let pairs = q
            .terms
            .iter()
            .map(|t| {
                (
                    self.exp
                        .left_sub(&t.exponent())
                        .expect("exponent at least r"),
                    t.coeff.clone(),
                )
            })
            .collect();
        Ordinal::from_terms(pairs).expect("left subtraction preserves order")
    }

    /// `rem^ρ(a)`.
    pub fn rem(&self, a: &Ordinal) -> Ordinal {
        self.split(a).1
    }

    pub fn divides(&self, a: &Ordinal) -> bool {
        self.rem(a).is_zero()
    }

    /// `a = ρ·λ` with `λ` a limit.
    pub fn is_limit_multiple(&self, a: &Ordinal) -> bool {
        self.divides(a) && a.last_exponent().is_some_and(|e| e > self.exp)
    }

    /// `ρ·x`.
    pub fn times(&self, x: &Ordinal) -> Ordinal {
        self.value.mul(x)
    }
}

impl fmt::Display for Rho {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value.fmt(f)
    }
}

impl Serialize for Rho {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.value.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Rho {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let o = Ordinal::deserialize(d)?;
        Rho::new(o).map_err(serde::de::Error::custom)
    }
}

// Extended ordinals ---------------------------------------------------------

/// An ordinal, the marker `∞`, or a value this calculus cannot settle.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtOrdinal {
    Ord(Ordinal),
    Unbounded,
    Undetermined,
}

impl ExtOrdinal {
    pub fn ordinal(&self) -> Option<&Ordinal> {
        match self {
            ExtOrdinal::Ord(o) => Some(o),
            _ => None,
        }
    }

    pub fn is_undetermined(&self) -> bool {
        matches!(self, ExtOrdinal::Undetermined)
    }
}

impl From<Ordinal> for ExtOrdinal {
    fn from(o: Ordinal) -> Self {
        ExtOrdinal::Ord(o)
    }
}

impl fmt::Display for ExtOrdinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtOrdinal::Ord(o) => o.fmt(f),
            ExtOrdinal::Unbounded => write!(f, "inf"),
            ExtOrdinal::Undetermined => write!(f, "Undetermined"),
        }
    }
}

impl Serialize for ExtOrdinal {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
