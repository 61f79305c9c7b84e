//! Finite patterns induced by closed sets, their axioms, isomorphism, and
//! exhaustive covering search over a budgeted universe.

use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::budget::{Budget, Universe};
use crate::error::{Error, Result};
use crate::ordinal::Ordinal;
use crate::relation::{Calculus, Verdict};
use crate::rho::{certify_covering, check_embedding, Certification, ClosedSet, CoveringMap};

/// A finite structure with remainders and three-valued `≤₁`, `≤₂` matrices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FinitePattern {
    pub members: Vec<Ordinal>,
    pub rem_labels: Vec<Ordinal>,
    pub divisible: Vec<bool>,
    pub le1: Vec<Vec<Verdict>>,
    pub le2: Vec<Vec<Verdict>>,
}

impl FinitePattern {
    /// A pattern on `n` nodes related only reflexively, with remainder 0.
    pub fn discrete(n: usize) -> FinitePattern {
        let mut m = vec![vec![Verdict::False; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = Verdict::True;
        }
        FinitePattern {
            members: (0..n as u64).map(Ordinal::nat).collect(),
            rem_labels: vec![Ordinal::zero(); n],
            divisible: vec![true; n],
            le1: m.clone(),
            le2: m,
        }
    }

    pub fn n(&self) -> usize {
        self.members.len()
    }

    /// The pattern with member labels dropped; equal keys mean isomorphic patterns.
    pub fn shape(&self) -> (Vec<Ordinal>, Vec<Vec<Verdict>>, Vec<Vec<Verdict>>) {
        (self.rem_labels.clone(), self.le1.clone(), self.le2.clone())
    }
}

/// Evaluates `≤₁` and `≤₂` on all pairs of `s`.
pub fn extract_pattern(calc: &Calculus, s: &[Ordinal]) -> FinitePattern {
    let rho = calc.rho();
    let n = s.len();
    let mut le1 = vec![vec![Verdict::False; n]; n];
    let mut le2 = vec![vec![Verdict::False; n]; n];
    for i in 0..n {
        for j in 0..n {
            le1[i][j] = calc.le1(&s[i], &s[j]).verdict;
            le2[i][j] = calc.le2(&s[i], &s[j]).verdict;
        }
    }
    FinitePattern {
        members: s.to_vec(),
        rem_labels: s.iter().map(|x| rho.rem(x)).collect(),
        divisible: s.iter().map(|x| rho.divides(x)).collect(),
        le1,
        le2,
    }
}

/// The law a violation breaks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Law {
    Reflexive,
    Antisymmetric,
    Transitive,
    RespectsOrder,
    RespectsLe1,
    Forest,
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Law::Reflexive => "reflexive",
            Law::Antisymmetric => "antisymmetric",
            Law::Transitive => "transitive",
            Law::RespectsOrder => "respects(≤₁,≤)",
            Law::RespectsLe1 => "respects(≤₂,≤₁)",
            Law::Forest => "forest",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomViolation {
    pub law: Law,
    pub detail: String,
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.law, self.detail)
    }
}

/// Checks the partial order, respecting and forest laws on determined entries.
///
/// Nodes are assumed listed in increasing order.
pub fn check_axioms(p: &FinitePattern) -> Vec<AxiomViolation> {
    use Verdict::{False as F, True as T};
    let n = p.n();
    let mut out = Vec::new();
    let mut push = |law, detail: String| out.push(AxiomViolation { law, detail });
    let name = |i: usize| p.members[i].to_string();
    for (k, m) in [(1, &p.le1), (2, &p.le2)] {
        for i in 0..n {
            if m[i][i] == F {
                push(Law::Reflexive, format!("not {} <={k} {}", name(i), name(i)));
            }
            for j in 0..n {
                if i != j && m[i][j] == T && m[j][i] == T {
                    push(
                        Law::Antisymmetric,
                        format!("{} and {} are <={k} each other", name(i), name(j)),
                    );
                }
                for l in 0..n {
                    if m[i][j] == T && m[j][l] == T && m[i][l] == F {
                        push(
                            Law::Transitive,
                            format!(
                                "{} <={k} {} <={k} {} but not {} <={k} {}",
                                name(i),
                                name(j),
                                name(l),
                                name(i),
                                name(l)
                            ),
                        );
                    }
                }
            }
        }
        for l in 0..n {
            let preds: Vec<usize> = (0..n).filter(|&i| i != l && m[i][l] == T).collect();
            for (a, &i) in preds.iter().enumerate() {
                for &j in &preds[a + 1..] {
                    if m[i][j] == F && m[j][i] == F {
                        push(
                            Law::Forest,
                            format!(
                                "<={k} predecessors {} and {} of {} are incomparable",
                                name(i),
                                name(j),
                                name(l)
                            ),
                        );
                    }
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i > j && p.le1[i][j] == T {
                push(
                    Law::RespectsOrder,
                    format!("{} <=1 {} against the order", name(i), name(j)),
                );
            }
            if p.le2[i][j] == T && p.le1[i][j] == F {
                push(
                    Law::RespectsLe1,
                    format!("{} <=2 {} without <=1", name(i), name(j)),
                );
            }
            for l in 0..n {
                if i < j && j < l && p.le1[i][l] == T && p.le1[i][j] == F {
                    push(
                        Law::RespectsOrder,
                        format!(
                            "{} <=1 {} but not {} <=1 {}",
                            name(i),
                            name(l),
                            name(i),
                            name(j)
                        ),
                    );
                }
                if p.le1[i][j] == T && p.le1[j][l] == T && p.le2[i][l] == T && p.le2[i][j] == F {
                    push(
                        Law::RespectsLe1,
                        format!(
                            "{} <=2 {} but not {} <=2 {}",
                            name(i),
                            name(l),
                            name(i),
                            name(j)
                        ),
                    );
                }
            }
        }
    }
    out
}

// Isomorphism -----------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", content = "detail", rename_all = "kebab-case")]
pub enum Iso {
    Isomorphic,
    Distinct(String),
    Inconclusive(String),
}

/// Compares two sets of equal size along their order bijection.
pub fn iso_check(calc: &Calculus, a: &[Ordinal], b: &[Ordinal]) -> Result<Iso> {
    compare(calc, a, b, true)
}

/// Like [`iso_check`] but compares only `≤₁` and `≤₂`, not remainders.
pub fn structure_iso(calc: &Calculus, a: &[Ordinal], b: &[Ordinal]) -> Result<Iso> {
    compare(calc, a, b, false)
}

fn compare(calc: &Calculus, a: &[Ordinal], b: &[Ordinal], with_rem: bool) -> Result<Iso> {
    if a.len() != b.len() {
        return Err(Error::SizeMismatch(a.len(), b.len()));
    }
    let sorted = |s: &[Ordinal]| {
        let mut v = s.to_vec();
        v.sort();
        v.dedup();
        v
    };
    let (a, b) = (sorted(a), sorted(b));
    if a.len() != b.len() {
        return Err(Error::SizeMismatch(a.len(), b.len()));
    }
    let rho = calc.rho();
    for (x, y) in a.iter().zip(&b) {
        if with_rem && rho.rem(x) != rho.rem(y) {
            return Ok(Iso::Distinct(format!(
                "rem({x}) = {} but rem({y}) = {}",
                rho.rem(x),
                rho.rem(y)
            )));
        }
    }
    let mut pending = None;
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            for k in [1u8, 2] {
                let (u, v) = if k == 1 {
                    (
                        calc.le1(&a[i], &a[j]).verdict,
                        calc.le1(&b[i], &b[j]).verdict,
                    )
                } else {
                    (
                        calc.le2(&a[i], &a[j]).verdict,
                        calc.le2(&b[i], &b[j]).verdict,
                    )
                };
                if u.is_determined() && v.is_determined() {
                    if u != v {
                        return Ok(Iso::Distinct(format!(
                            "{} <={k} {} is {u} but {} <={k} {} is {v}",
                            a[i], a[j], b[i], b[j]
                        )));
                    }
                } else {
                    pending.get_or_insert_with(|| {
                        format!("<={k} undetermined at {} / {}", a[j], b[j])
                    });
                }
            }
        }
    }
    Ok(match pending {
        Some(reason) => Iso::Inconclusive(reason),
        None => Iso::Isomorphic,
    })
}

// Covering search -------------------------------------------------------------

#[derive(Clone, Debug, Serialize)]
pub struct SearchOutcome {
    pub maps: Vec<CoveringMap>,
    /// False when a limit cut the search short or some candidate could not be decided.
    pub complete: bool,
    /// Candidates rejected only because a verdict was undetermined.
    pub undetermined: usize,
    pub universe: usize,
}

/// All coverings of `y` with images in the budgeted universe, in increasing
/// lexicographic order of images, up to `limit` maps.
pub fn covering_search(
    calc: &Calculus,
    y: &ClosedSet,
    budget: &Budget,
    limit: usize,
) -> SearchOutcome {
    let ceiling = budget.ceiling_for(y.max());
    let universe = Universe::new(budget, &ceiling, calc.depth());
    let xs = y.members();
    let n = xs.len();
    let rel = |k: u8, i: usize, j: usize| {
        if k == 1 {
            calc.le1(&xs[i], &xs[j]).verdict
        } else {
            calc.le2(&xs[i], &xs[j]).verdict
        }
    };
    let mut s = Enumerator {
        calc,
        xs,
        universe: &universe,
        rel1: (0..n)
            .map(|i| (0..n).map(|j| rel(1, i, j)).collect())
            .collect(),
        rel2: (0..n)
            .map(|i| (0..n).map(|j| rel(2, i, j)).collect())
            .collect(),
        images: Vec::new(),
        maps: Vec::new(),
        limit,
        nodes: 0,
        node_limit: budget.node_limit,
        cut: universe.truncated(),
        undetermined: 0,
    };
    s.dfs(0);
    SearchOutcome {
        complete: !s.cut && s.undetermined == 0,
        undetermined: s.undetermined,
        maps: s.maps,
        universe: universe.len(),
    }
}

struct Enumerator<'a> {
    calc: &'a Calculus,
    xs: &'a [Ordinal],
    universe: &'a Universe,
    rel1: Vec<Vec<Verdict>>,
    rel2: Vec<Vec<Verdict>>,
    images: Vec<Ordinal>,
    maps: Vec<CoveringMap>,
    limit: usize,
    nodes: u64,
    node_limit: u64,
    cut: bool,
    undetermined: usize,
}

impl Enumerator<'_> {
    fn dfs(&mut self, i: usize) {
        if self.maps.len() >= self.limit || self.nodes >= self.node_limit {
            self.cut = true;
            return;
        }
        self.nodes += 1;
        if i == self.xs.len() {
            if let Ok(Ok(map)) = check_embedding(self.xs, &self.images, self.calc.rho()) {
                match certify_covering(&map, self.calc) {
                    Certification::Covering(map) => self.maps.push(map),
                    Certification::Undetermined { .. } => self.undetermined += 1,
                    Certification::NotCovering { .. } => {}
                }
            }
            return;
        }
        let rho = self.calc.rho().clone();
        let (sigma, xi) = rho.split(&self.xs[i]);
        if !xi.is_zero() {
            let b = self.xs.binary_search(&sigma).expect("closed domain");
            let c = self.images[b].add(&xi);
            if self.images.last().is_some_and(|p| *p >= c) || !self.universe.contains(&c) {
                return;
            }
            self.try_candidate(i, c);
            return;
        }
        let mut hi: Option<Ordinal> = None;
        for p in 0..i {
            if self.rel1[p][i] == Verdict::True {
                if let Ok((b, _)) = self.calc.max1_bound(&self.images[p]) {
                    if b.exact && hi.as_ref().is_none_or(|h| b.value < *h) {
                        hi = Some(b.value);
                    }
                }
            }
        }
        let start = self.universe.first_above(self.images.last());
        for pos in start..self.universe.len() {
            if self.cut {
                return;
            }
            let c = self.universe.members()[pos].clone();
            if hi.as_ref().is_some_and(|h| c > *h) {
                break;
            }
            if rho.divides(&c) {
                self.try_candidate(i, c);
            }
        }
    }

    fn try_candidate(&mut self, i: usize, c: Ordinal) {
        for p in 0..i {
            for k in [1u8, 2] {
                let src = if k == 1 {
                    self.rel1[p][i]
                } else {
                    self.rel2[p][i]
                };
                if src == Verdict::False {
                    continue;
                }
                let dst = if k == 1 {
                    self.calc.le1(&self.images[p], &c).verdict
                } else {
                    self.calc.le2(&self.images[p], &c).verdict
                };
                match (src, dst) {
                    (_, Verdict::True) => {}
                    (Verdict::True, Verdict::False) => return,
                    _ => {
                        self.undetermined += 1;
                        return;
                    }
                }
            }
        }
        self.images.push(c);
        self.dfs(i + 1);
        self.images.pop();
    }
}

// DOT -------------------------------------------------------------------------

/// Graphviz rendering: solid `≤₁` edges, double `≤₂` edges, dotted when undetermined.
pub fn to_dot(p: &FinitePattern) -> String {
    let mut s = String::from("digraph pattern {\n  node [shape=box];\n");
    for (i, (m, r)) in p.members.iter().zip(&p.rem_labels).enumerate() {
        let _ = writeln!(s, "  n{i} [label=\"{m}\\nrem={r}\"];");
    }
    for i in 0..p.n() {
        for j in 0..p.n() {
            if i == j {
                continue;
            }
            match p.le1[i][j] {
                Verdict::True => {
                    let _ = writeln!(s, "  n{i} -> n{j} [label=\"1\"];");
                }
                Verdict::Undetermined => {
                    let _ = writeln!(s, "  n{i} -> n{j} [label=\"1\", style=dotted];");
                }
                Verdict::False => {}
            }
            match p.le2[i][j] {
                Verdict::True => {
                    let _ = writeln!(s, "  n{i} -> n{j} [label=\"2\", color=\"black:black\"];");
                }
                Verdict::Undetermined => {
                    let _ = writeln!(
                        s,
                        "  n{i} -> n{j} [label=\"2\", color=\"black:black\", style=dotted];"
                    );
                }
                Verdict::False => {}
            }
        }
    }
    s.push_str("}\n");
    s
}
