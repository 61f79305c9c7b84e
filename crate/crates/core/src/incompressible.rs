//! Incompressible sets: the constructive covering, sets with a prescribed
//! index set, extension of arbitrary sets, and bounded verification.

use std::collections::HashSet;

use serde::Serialize;

use crate::budget::{Budget, Universe};
use crate::error::{undetermined, Error, Result};
use crate::ordinal::{Ordinal, Rho};
use crate::relation::{Calculus, ComponentKind, Verdict};
use crate::rho::{certify_covering, check_embedding, Certification, ClosedSet, CoveringMap, Level};

/// A closed set together with the index of every member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexedSet {
    pub base: ClosedSet,
    pub indices: Vec<Ordinal>,
}

impl IndexedSet {
    pub fn new(calc: &Calculus, base: ClosedSet) -> Result<IndexedSet> {
        let indices = base
            .members()
            .iter()
            .map(|x| calc.index(x))
            .collect::<Result<Vec<_>>>()?;
        Ok(IndexedSet { base, indices })
    }

    /// `index[X]` as a sorted set.
    pub fn index_set(&self) -> Vec<Ordinal> {
        let mut v = self.indices.clone();
        v.dedup();
        v
    }

    pub fn max_index(&self) -> Option<&Ordinal> {
        self.indices.last()
    }
}

// Covering --------------------------------------------------------------------

/// An incompressible covering of `x`, certified before it is returned.
pub fn incompressible_cover(calc: &Calculus, x: &ClosedSet) -> Result<CoveringMap> {
    let image = cover_image(calc, x.members())?;
    let map = match check_embedding(x.members(), &image, calc.rho())? {
        Ok(map) => map,
        Err(v) => {
            return Err(Error::Violation(format!(
                "constructed image is not an embedding: {}",
                v[0]
            )))
        }
    };
    match certify_covering(&map, calc) {
        Certification::Covering(map) => Ok(map),
        Certification::Undetermined { x, y, k } => Err(undetermined(format!(
            "cannot certify <={k} between the images of {x} and {y}"
        ))),
        Certification::NotCovering { x, y, k } => Err(Error::Violation(format!(
            "constructed image breaks {x} <={k} {y}"
        ))),
    }
}

fn shift_down(xs: &[Ordinal], by: &Ordinal) -> Vec<Ordinal> {
    xs.iter()
        .map(|x| by.left_sub(x).expect("member above shift"))
        .collect()
}

fn cover_image(calc: &Calculus, xs: &[Ordinal]) -> Result<Vec<Ordinal>> {
    if xs.is_empty() {
        return Ok(Vec::new());
    }
    let rho = calc.rho();
    let m = &xs[0];
    let mut n1 = 1;
    while n1 < xs.len() {
        match calc.le1(m, &xs[n1]).verdict {
            Verdict::True => n1 += 1,
            Verdict::False => break,
            Verdict::Undetermined => {
                return Err(undetermined(format!("le1({m}, {}) is not settled", xs[n1])))
            }
        }
    }
    let cut = xs[n1 - 1].add(rho.value());
    let n2 = n1 + xs[n1..].iter().take_while(|y| **y < cut).count();
    if n2 < xs.len() {
        let mut head = cover_image(calc, &xs[..n2])?;
        let base = head.last().expect("nonempty").add(rho.value());
        let tail = cover_image(calc, &xs[n2..])?;
        head.extend(tail.iter().map(|y| base.add(y)));
        return Ok(head);
    }
    if n2 > n1 {
        let mut head = cover_image(calc, &xs[..n1])?;
        for y in &xs[n1..] {
            let (sigma, xi) = rho.split(y);
            let pos = xs[..n1]
                .binary_search(&sigma)
                .map_err(|_| Error::DomainNotClosed(sigma.clone()))?;
            let img = head[pos].add(&xi);
            head.push(img);
        }
        return Ok(head);
    }
    place(calc, xs)
}

/// Covers a set lying in `[m, max₁(m)]` for its minimum `m`.
fn place(calc: &Calculus, xs: &[Ordinal]) -> Result<Vec<Ordinal>> {
    if xs.len() == 1 {
        return Ok(vec![Ordinal::zero()]);
    }
    let m = &xs[0];
    let loc = calc.locate(m)?;
    match loc.kind {
        ComponentKind::Regular if loc.offset != loc.block_kappa => {
            return place(calc, &shift_down(xs, &loc.prefix.add(&loc.block_kappa)));
        }
        ComponentKind::Epsilon => {
            let eps = Rho::new(loc.block_kappa.clone()).expect("indecomposable");
            let (q, eta) = eps.split(&loc.offset);
            if !eta.is_zero() {
                return place(calc, &shift_down(xs, &loc.prefix.add(&q)));
            }
        }
        _ => {}
    }
    let inner = cover_image(calc, &shift_down(xs, m))?;
    let b = calc.index(inner.last().expect("nonempty"))?;
    let block = Ordinal::omega_pow(&calc.rho().exponent().add(&b));
    let info = calc.component(&block)?;
    if info.kind != ComponentKind::Regular {
        return Err(undetermined(format!(
            "placement inside the component of {block} is not supported"
        )));
    }
    Ok(inner.iter().map(|y| info.kappa.add(y)).collect())
}

// Index sets ------------------------------------------------------------------

const MAX_SUMMANDS: u64 = 10_000;

/// The indecomposable summands `δ₀ ≥ δ₁ ≥ …` of `delta`.
fn summands(delta: &Ordinal) -> Result<Vec<Ordinal>> {
    let mut out = Vec::new();
    for (e, c) in delta.summands() {
        let n = u64::try_from(c)
            .ok()
            .filter(|n| *n <= MAX_SUMMANDS)
            .ok_or_else(|| {
                Error::NotApplicable(format!("{delta} has too many indecomposable summands"))
            })?;
        let w = Ordinal::omega_pow(&e);
        out.extend(std::iter::repeat_n(w, n as usize));
        if out.len() as u64 > MAX_SUMMANDS {
            return Err(Error::NotApplicable(format!(
                "{delta} has too many indecomposable summands"
            )));
        }
    }
    Ok(out)
}

/// Members that clauses (2)–(4) require alongside `alpha`, with the clause number.
fn required(alpha: &Ordinal, rho: &Rho) -> Result<Vec<(u8, Ordinal)>> {
    let (sigma, xi) = rho.split(alpha);
    let mut req = Vec::new();
    if !xi.is_zero() {
        req.push((2, sigma.clone()));
    }
    let delta = rho.quotient(&sigma);
    if let Some(n) = delta.as_u64() {
        req.extend((0..n).map(|j| (3, rho.times(&Ordinal::nat(j)))));
    } else if !delta.is_zero() && delta.finite_value().is_none() {
        let parts = summands(&delta)?;
        let mut acc = Ordinal::zero();
        for d in &parts[..parts.len() - 1] {
            acc = acc.add(d);
            req.push((4, rho.times(&acc)));
        }
    }
    Ok(req)
}

/// Checks the closure clauses (2)–(4) on an index set.
pub fn check_index_set(k: &[Ordinal], rho: &Rho) -> Result<()> {
    let set: HashSet<&Ordinal> = k.iter().collect();
    for alpha in k {
        for (clause, need) in required(alpha, rho)? {
            if !set.contains(&need) {
                return Err(Error::ClauseViolation {
                    clause,
                    detail: format!("{alpha} is present but {need} is not"),
                });
            }
        }
    }
    Ok(())
}

/// The least superset of `k` satisfying the clauses; it has the same maximum.
pub fn complete_index_set(k: &[Ordinal], rho: &Rho) -> Result<Vec<Ordinal>> {
    let mut out: Vec<Ordinal> = k.to_vec();
    let mut seen: HashSet<Ordinal> = out.iter().cloned().collect();
    let mut i = 0;
    while i < out.len() {
        for (_, need) in required(&out[i].clone(), rho)? {
            if seen.insert(need.clone()) {
                out.push(need);
            }
        }
        i += 1;
    }
    out.sort();
    Ok(out)
}

/// An incompressible set whose index set is exactly `k`.
pub fn build_from_index_set(calc: &Calculus, k: &[Ordinal]) -> Result<IndexedSet> {
    let rho = calc.rho();
    let mut k = k.to_vec();
    k.sort();
    k.dedup();
    check_index_set(&k, rho)?;
    let mut members = Vec::new();
    for alpha in &k {
        members.extend(piece(calc, alpha)?);
    }
    let set = ClosedSet::new(members, rho)?;
    let indexed = IndexedSet::new(calc, set)?;
    if indexed.index_set() != k {
        return Err(Error::Violation(format!(
            "constructed set has index set [{}]",
            indexed
                .index_set()
                .iter()
                .map(|o| o.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        )));
    }
    Ok(indexed)
}

/// An incompressible set with maximal index `alpha`, its members in the
/// components named by the clauses for `alpha`.
fn piece(calc: &Calculus, alpha: &Ordinal) -> Result<Vec<Ordinal>> {
    let rho = calc.rho();
    let (sigma, xi) = rho.split(alpha);
    let delta = rho.quotient(&sigma);
    let mut out = Vec::new();
    if let Some(n) = delta.as_u64() {
        out.extend((0..=n).map(|j| rho.times(&Ordinal::nat(j))));
    } else {
        let mut top: Option<Ordinal> = None;
        for d in summands(&delta)? {
            let star = if d == Ordinal::one() {
                vec![Ordinal::zero()]
            } else {
                component_set(calc, &d)?
            };
            let shift = match &top {
                None => Ordinal::zero(),
                Some(t) => t.add(rho.value()),
            };
            let block: Vec<Ordinal> = star.iter().map(|y| shift.add(y)).collect();
            top = block.last().cloned();
            out.extend(block);
        }
    }
    if !xi.is_zero() {
        let last = out.last().expect("nonempty").add(&xi);
        out.push(last);
    }
    Ok(out)
}

/// An incompressible subset of `I_{ρ·δ}` for indecomposable `δ > 1`
/// containing both `κ_{ρ·δ}` and `max₁(κ_{ρ·δ})`.
fn component_set(calc: &Calculus, delta: &Ordinal) -> Result<Vec<Ordinal>> {
    let alpha = calc.rho().times(delta);
    let info = calc.component(&alpha)?;
    if info.kind != ComponentKind::Regular {
        return Err(undetermined(format!(
            "no construction for incompressible subsets of I_{alpha}"
        )));
    }
    let b = delta.lead_exponent().expect("nonzero");
    let inner = build_from_index_set(calc, &complete_index_set(&[b], calc.rho())?)?;
    let mut out = vec![info.kappa.clone()];
    out.extend(
        inner
            .base
            .members()
            .iter()
            .filter(|y| !y.is_zero())
            .map(|y| info.kappa.add(y)),
    );
    Ok(out)
}

/// Extends a finite set to an incompressible superset with the same maximal index.
pub fn extend_incompressible(calc: &Calculus, x: &[Ordinal]) -> Result<IndexedSet> {
    let rho = calc.rho();
    let closed = ClosedSet::closure(x.iter().cloned(), rho);
    if closed.is_empty() {
        return Ok(IndexedSet {
            base: closed,
            indices: Vec::new(),
        });
    }
    let own = IndexedSet::new(calc, closed.clone())?;
    let k = complete_index_set(&own.index_set(), rho)?;
    let built = build_from_index_set(calc, &k)?;
    let mut members: Vec<Ordinal> = closed.members().to_vec();
    members.extend(built.base.members().iter().cloned());
    for alpha in &k {
        members.push(calc.kappa(alpha)?);
    }
    IndexedSet::new(calc, ClosedSet::closure(members, rho))
}

/// The index-set clauses read as necessary conditions on `index[X]` for an
/// incompressible `X`. Experimental: the converse is not established.
pub fn converse_check(calc: &Calculus, x: &ClosedSet) -> Result<()> {
    let indexed = IndexedSet::new(calc, x.clone())?;
    check_index_set(&indexed.index_set(), calc.rho())
}

// Verification ----------------------------------------------------------------

/// Outcome of a bounded incompressibility check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", content = "detail", rename_all = "kebab-case")]
pub enum Verification {
    Confirmed,
    Counterexample(CoveringMap),
    Inconclusive(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub set: ClosedSet,
    pub verdict: Verification,
    pub budget: Budget,
    pub nodes: u64,
}

/// Searches the budgeted universe for a covering that lowers the index of
/// some member.
///
/// Members are assigned in increasing order. A member without later
/// relatives only takes its least admissible image, and members heading a
/// `≤₁` interval only take the least image of each interval shape. Once the
/// assigned part is unrelated to the rest, the rest is completed above all
/// assigned images by a translation.
pub fn verify_incompressible(calc: &Calculus, x: &ClosedSet, budget: &Budget) -> VerifyReport {
    let report = |verdict, nodes| VerifyReport {
        set: x.clone(),
        verdict,
        budget: budget.clone(),
        nodes,
    };
    if x.is_empty() {
        return report(Verification::Confirmed, 0);
    }
    let ceiling = budget.ceiling_for(x.max());
    let universe = Universe::new(budget, &ceiling, calc.depth());
    let mut search = match Search::new(calc, x.members(), &universe, budget) {
        Ok(s) => s,
        Err(e) => return report(Verification::Inconclusive(e.to_string()), 0),
    };
    let mut gaps: Vec<String> = Vec::new();
    if universe.truncated() {
        gaps.push(format!(
            "universe truncated at {} notations",
            universe.len()
        ));
    }
    for t in 0..x.len() {
        let alpha = match calc.index(&x.members()[t]) {
            Ok(a) => a,
            Err(e) => {
                gaps.push(e.to_string());
                continue;
            }
        };
        if alpha.is_zero() {
            continue;
        }
        let bound = match calc.kappa(&alpha) {
            Ok(k) => k,
            Err(e) => {
                gaps.push(e.to_string());
                continue;
            }
        };
        search.target = t;
        search.bound = bound;
        search.images.clear();
        if search.dfs(0) {
            match search.complete() {
                Ok(map) => return report(Verification::Counterexample(map), search.nodes),
                Err(e) => gaps.push(e.to_string()),
            }
        }
    }
    if search.exhausted {
        gaps.push(format!("node limit {} reached", budget.node_limit));
    }
    if search.unsettled {
        gaps.push("a relation verdict was undetermined".into());
    }
    let verdict = if gaps.is_empty() {
        Verification::Confirmed
    } else {
        Verification::Inconclusive(gaps.join("; "))
    };
    report(verdict, search.nodes)
}

struct Search<'a> {
    calc: &'a Calculus,
    xs: &'a [Ordinal],
    universe: &'a Universe,
    rel1: Vec<Vec<Verdict>>,
    rel2: Vec<Vec<Verdict>>,
    /// `(base position, ξ)` for members not divisible by rho.
    forced: Vec<Option<(usize, Ordinal)>>,
    /// Whether a later member depends on this one.
    dependents: Vec<bool>,
    /// Whether a later member may be `≤₁`-above this one.
    heads: Vec<bool>,
    /// Whether some member before position `i` is linked to one at or after it.
    linked: Vec<bool>,
    translation_safe: bool,
    target: usize,
    bound: Ordinal,
    images: Vec<Ordinal>,
    nodes: u64,
    node_limit: u64,
    exhausted: bool,
    unsettled: bool,
}

impl<'a> Search<'a> {
    fn new(
        calc: &'a Calculus,
        xs: &'a [Ordinal],
        universe: &'a Universe,
        budget: &Budget,
    ) -> Result<Search<'a>> {
        let n = xs.len();
        let rho = calc.rho();
        let mut rel1 = vec![vec![Verdict::False; n]; n];
        let mut rel2 = vec![vec![Verdict::False; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                rel1[i][j] = calc.le1(&xs[i], &xs[j]).verdict;
                rel2[i][j] = calc.le2(&xs[i], &xs[j]).verdict;
            }
        }
        let mut forced = vec![None; n];
        for (j, x) in xs.iter().enumerate() {
            let (sigma, xi) = rho.split(x);
            if !xi.is_zero() {
                let pos = xs
                    .binary_search(&sigma)
                    .map_err(|_| Error::DomainNotClosed(sigma.clone()))?;
                forced[j] = Some((pos, xi));
            }
        }
        let related =
            |p: usize, k: usize| rel1[p][k] != Verdict::False || rel2[p][k] != Verdict::False;
        let based = |p: usize, k: usize| forced[k].as_ref().is_some_and(|(b, _)| *b == p);
        let translation_safe = (0..n).all(|i| (i + 1..n).all(|j| rel2[i][j] == Verdict::False));
        // Without ≤₂ facts a member whose only dependents are its own
        // translates `x+ξ` is best mapped as low as possible.
        let dependents = (0..n)
            .map(|i| (i + 1..n).any(|k| related(i, k) || (!translation_safe && based(i, k))))
            .collect();
        let heads = (0..n)
            .map(|i| (i + 1..n).any(|k| rel1[i][k] != Verdict::False))
            .collect();
        let linked = (0..=n)
            .map(|i| (0..i).any(|p| (i..n).any(|k| related(p, k) || based(p, k))))
            .collect();
        Ok(Search {
            calc,
            xs,
            universe,
            rel1,
            rel2,
            forced,
            dependents,
            heads,
            linked,
            translation_safe,
            target: 0,
            bound: Ordinal::zero(),
            images: Vec::new(),
            nodes: 0,
            node_limit: budget.node_limit,
            exhausted: false,
            unsettled: false,
        })
    }

    /// Whether `c` is an admissible image for position `i` given the images so far.
    fn admissible(&mut self, i: usize, c: &Ordinal) -> bool {
        if self.images.last().is_some_and(|prev| prev >= c) {
            return false;
        }
        if i <= self.target && *c >= self.bound {
            return false;
        }
        for p in 0..i {
            for (k, rel) in [(1, self.rel1[p][i]), (2, self.rel2[p][i])] {
                if rel == Verdict::False {
                    continue;
                }
                let got = if k == 1 {
                    self.calc.le1(&self.images[p], c).verdict
                } else {
                    self.calc.le2(&self.images[p], c).verdict
                };
                if rel == Verdict::Undetermined || got == Verdict::Undetermined {
                    self.unsettled = true;
                }
                if got != Verdict::True {
                    return false;
                }
            }
        }
        true
    }

    /// Upper limit for images of position `i` imposed by `≤₁`-predecessors.
    fn limit(&mut self, i: usize) -> Option<Ordinal> {
        let mut hi: Option<Ordinal> = None;
        for p in 0..i {
            if self.rel1[p][i] == Verdict::False {
                continue;
            }
            match self.calc.max1_bound(&self.images[p]) {
                Ok((b, _)) => {
                    if !b.exact {
                        self.unsettled = true;
                    }
                    if hi.as_ref().is_none_or(|h| b.value < *h) {
                        hi = Some(b.value);
                    }
                }
                Err(_) => {
                    self.unsettled = true;
                    return Some(self.images[p].clone());
                }
            }
        }
        hi
    }

    /// The innermost relative point whose `≤₁` interval is a translate of that of `c`.
    fn shape(&self, c: &Ordinal) -> Option<Ordinal> {
        let mut cur = c.clone();
        loop {
            let loc = self.calc.locate(&cur).ok()?;
            match loc.kind {
                ComponentKind::Singleton => return Some(cur),
                ComponentKind::Regular => {
                    if loc.offset == loc.block_kappa {
                        return Some(loc.offset);
                    }
                    cur = loc
                        .block_kappa
                        .left_sub(&loc.offset)
                        .expect("offset above kappa");
                }
                ComponentKind::Epsilon => {
                    let eps = Rho::new(loc.block_kappa.clone()).ok()?;
                    let (_, eta) = eps.split(&loc.offset);
                    if eta.is_zero() {
                        return Some(loc.offset);
                    }
                    cur = eta;
                }
            }
        }
    }

    fn dfs(&mut self, i: usize) -> bool {
        let n = self.xs.len();
        if i == n || (i > self.target && !self.linked[i]) {
            return true;
        }
        self.nodes += 1;
        if self.nodes > self.node_limit {
            self.exhausted = true;
            return false;
        }
        if let Some((b, xi)) = self.forced[i].clone() {
            let c = self.images[b].add(&xi);
            if !self.admissible(i, &c) {
                return false;
            }
            self.images.push(c);
            if self.dfs(i + 1) {
                return true;
            }
            self.images.pop();
            return false;
        }
        let rho = self.calc.rho().clone();
        let hi = self.limit(i);
        let start = self.universe.first_above(self.images.last());
        let mut seen: HashSet<Ordinal> = HashSet::new();
        for pos in start..self.universe.len() {
            if self.exhausted {
                return false;
            }
            let c = &self.universe.members()[pos];
            if hi.as_ref().is_some_and(|h| c > h) || (i <= self.target && *c >= self.bound) {
                break;
            }
            if !rho.divides(c) {
                continue;
            }
            let c = c.clone();
            if self.heads[i] {
                let Ok((m, _)) = self.calc.max1_bound(&c) else {
                    self.unsettled = true;
                    continue;
                };
                if m.value <= c {
                    continue;
                }
                if self.translation_safe {
                    match self.shape(&c) {
                        Some(s) => {
                            if !seen.insert(s) {
                                continue;
                            }
                        }
                        None => self.unsettled = true,
                    }
                }
            }
            if !self.admissible(i, &c) {
                continue;
            }
            self.images.push(c);
            if self.dfs(i + 1) {
                return true;
            }
            self.images.pop();
            if !self.dependents[i] {
                return false;
            }
        }
        false
    }

    /// Completes the assigned images to a covering of the whole set.
    fn complete(&self) -> Result<CoveringMap> {
        let calc = self.calc;
        let rho = calc.rho();
        let k = self.images.len();
        let mut image = self.images.clone();
        if k < self.xs.len() {
            let top = calc.index(image.last().expect("nonempty"))?;
            let z = calc.kappa(&top.add(rho.value()))?;
            image.extend(self.xs[k..].iter().map(|y| z.add(y)));
        }
        let map = match check_embedding(self.xs, &image, rho)? {
            Ok(map) => map,
            Err(v) => {
                return Err(Error::Violation(format!(
                    "witness is not an embedding: {}",
                    v[0]
                )))
            }
        };
        match certify_covering(&map, calc) {
            Certification::Covering(map) => Ok(CoveringMap {
                level: Level::Covering,
                ..map
            }),
            Certification::Undetermined { x, y, k } => Err(undetermined(format!(
                "witness relation {x} <={k} {y} is not settled"
            ))),
            Certification::NotCovering { x, y, k } => {
                Err(Error::Violation(format!("witness breaks {x} <={k} {y}")))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Ordinal {
        Ordinal::parse(s).unwrap()
    }

    fn set(calc: &Calculus, xs: &[&str]) -> ClosedSet {
        ClosedSet::new(xs.iter().map(|s| p(s)).collect(), calc.rho()).unwrap()
    }

    fn calc() -> Calculus {
        Calculus::new(Rho::one())
    }

    #[test]
    fn cover_of_initial_segment_is_identity() {
        let c = calc();
        let x = set(&c, &["0", "1", "2", "3"]);
        let h = incompressible_cover(&c, &x).unwrap();
        assert_eq!(h.image, x.members());
        assert_eq!(h.level, Level::Covering);
    }

    #[test]
    fn cover_examples() {
        let c = calc();
        assert!(incompressible_cover(&c, &ClosedSet::empty())
            .unwrap()
            .image
            .is_empty());
        assert_eq!(
            incompressible_cover(&c, &set(&c, &["w*5"])).unwrap().image,
            vec![p("0")]
        );
        let h = incompressible_cover(&c, &set(&c, &["w^2*2", "w^2*2+1", "w^3+5"])).unwrap();
        assert_eq!(h.image, vec![p("w"), p("w+1"), p("w+2")]);
        let h = incompressible_cover(&c, &set(&c, &["w^w", "w^w+w", "w^w+w+1"])).unwrap();
        assert_eq!(h.image, vec![p("w^w"), p("w^w+w"), p("w^w+w+1")]);
    }

    #[test]
    fn cover_with_rho_omega() {
        let c = Calculus::new(Rho::new(p("w")).unwrap());
        let x = set(&c, &["w^2*3", "w^2*3+2"]);
        let h = incompressible_cover(&c, &x).unwrap();
        assert_eq!(h.image, vec![p("0"), p("2")]);
    }

    #[test]
    fn clauses() {
        let c = calc();
        let err = build_from_index_set(&c, &[p("0"), p("2")]).unwrap_err();
        assert!(matches!(err, Error::ClauseViolation { clause: 3, .. }));
        let err = build_from_index_set(&c, &[p("w*2")]).unwrap_err();
        assert!(matches!(err, Error::ClauseViolation { clause: 4, .. }));
        let rw = Calculus::new(Rho::new(p("w")).unwrap());
        let err = build_from_index_set(&rw, &[p("w+1")]).unwrap_err();
        assert!(matches!(err, Error::ClauseViolation { clause: 2, .. }));
        assert_eq!(
            complete_index_set(&[p("w*2+1")], c.rho()).unwrap(),
            vec![p("w"), p("w*2"), p("w*2+1")]
        );
    }

    #[test]
    fn build_examples() {
        let c = calc();
        let ks: Vec<Ordinal> = (0..4).map(Ordinal::nat).collect();
        let x = build_from_index_set(&c, &ks).unwrap();
        assert_eq!(x.base.members(), ks.as_slice());
        let x = build_from_index_set(&c, &[p("w")]).unwrap();
        assert_eq!(x.base.members(), &[p("w"), p("w+1")]);
        let k = complete_index_set(&[p("w^2+w+3")], c.rho()).unwrap();
        let x = build_from_index_set(&c, &k).unwrap();
        assert_eq!(x.index_set(), k);
    }

    #[test]
    fn extend_examples() {
        let c = calc();
        let x = extend_incompressible(&c, &[p("w+1")]).unwrap();
        assert_eq!(x.base.members(), &[p("w"), p("w+1")]);
        assert!(extend_incompressible(&c, &[]).unwrap().base.is_empty());
        let x = extend_incompressible(&c, &[p("w^2+5"), p("3")]).unwrap();
        assert_eq!(x.max_index(), Some(&p("w^2+3")));
        assert!(x.base.contains(&p("w^2+5")) && x.base.contains(&p("3")));
    }

    #[test]
    fn verify_examples() {
        let c = calc();
        let b = Budget::default();
        assert_eq!(
            verify_incompressible(&c, &ClosedSet::empty(), &b).verdict,
            Verification::Confirmed
        );
        assert_eq!(
            verify_incompressible(&c, &set(&c, &["0", "1", "2"]), &b).verdict,
            Verification::Confirmed
        );
        match verify_incompressible(&c, &set(&c, &["w*5"]), &b).verdict {
            Verification::Counterexample(h) => assert_eq!(h.image, vec![p("0")]),
            other => panic!("{other:?}"),
        }
        let r = verify_incompressible(&c, &set(&c, &["w", "w+1"]), &b);
        assert_eq!(r.verdict, Verification::Confirmed);
        match verify_incompressible(&c, &set(&c, &["w^2", "w^2+1"]), &b).verdict {
            Verification::Counterexample(h) => assert_eq!(h.image, vec![p("w"), p("w+1")]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn verify_completes_unrelated_tail() {
        let c = calc();
        let x = set(&c, &["w", "w+1", "w^3", "w^3+1", "w^3+2"]);
        match verify_incompressible(&c, &x, &Budget::default()).verdict {
            Verification::Counterexample(h) => {
                assert_eq!(&h.image[..2], &[p("w"), p("w+1")]);
                assert!(h.image[2] < p("w^3"));
            }
            other => panic!("{other:?}"),
        }
    }
}
