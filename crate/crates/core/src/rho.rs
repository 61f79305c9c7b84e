//! Closed sets of `ℛ^ρ`, the maps `f_ξ`, and embeddings between closed sets.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ordinal::{Ordinal, Rho};
use crate::relation::{RelationOracle, Verdict};

/// `f_ξ(a)`: `ρ·ζ + ξ` when `a = ρ·ζ` and `ρ·ζ` when `rem(a) ≠ 0`.
pub fn f_xi(xi: &Ordinal, a: &Ordinal, rho: &Rho) -> Result<Ordinal> {
    if xi >= rho.value() {
        return Err(Error::XiOutOfRange(xi.clone()));
    }
    let (q, rem) = rho.split(a);
    Ok(if rem.is_zero() { q.add(xi) } else { q })
}

/// A finite, strictly increasing set closed under `f_0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct ClosedSet {
    members: Vec<Ordinal>,
}

impl ClosedSet {
    pub fn empty() -> ClosedSet {
        ClosedSet::default()
    }

    /// Validates `members` as a closed set. Input order is irrelevant.
    pub fn new(members: Vec<Ordinal>, rho: &Rho) -> Result<ClosedSet> {
        let mut members = members;
        members.sort();
        members.dedup();
        if let Some(missing) = first_missing(&members, rho) {
            return Err(Error::DomainNotClosed(missing));
        }
        Ok(ClosedSet { members })
    }

    /// The smallest closed set containing `s`.
    pub fn closure<I: IntoIterator<Item = Ordinal>>(s: I, rho: &Rho) -> ClosedSet {
        let mut members: Vec<Ordinal> = Vec::new();
        for x in s {
            let (base, rem) = rho.split(&x);
            if !rem.is_zero() {
                members.push(base);
            }
            members.push(x);
        }
        members.sort();
        members.dedup();
        ClosedSet { members }
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

    pub fn max(&self) -> Option<&Ordinal> {
        self.members.last()
    }

    pub fn min(&self) -> Option<&Ordinal> {
        self.members.first()
    }

    pub fn contains(&self, x: &Ordinal) -> bool {
        self.members.binary_search(x).is_ok()
    }

    /// Members below `cut`, which again form a closed set.
    pub fn prefix_below(&self, cut: &Ordinal) -> ClosedSet {
        ClosedSet {
            members: self.members.iter().filter(|x| *x < cut).cloned().collect(),
        }
    }

    pub fn union(&self, other: &ClosedSet) -> ClosedSet {
        let mut members = self.members.clone();
        members.extend(other.members.iter().cloned());
        members.sort();
        members.dedup();
        ClosedSet { members }
    }

    /// `{t + x : x ∈ self}`; closed whenever `t` is divisible by rho.
    pub fn shift(&self, t: &Ordinal) -> ClosedSet {
        ClosedSet {
            members: self.members.iter().map(|x| t.add(x)).collect(),
        }
    }

    pub(crate) fn from_sorted_unchecked(members: Vec<Ordinal>) -> ClosedSet {
        ClosedSet { members }
    }
}

impl<'de> Deserialize<'de> for ClosedSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let mut members = Vec::<Ordinal>::deserialize(d)?;
        members.sort();
        members.dedup();
        Ok(ClosedSet { members })
    }
}

impl fmt::Display for ClosedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.members.iter().map(|m| m.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Whether a sorted list is closed under `f_0`.
pub fn is_closed(members: &[Ordinal], rho: &Rho) -> bool {
    first_missing(members, rho).is_none()
}

fn first_missing(members: &[Ordinal], rho: &Rho) -> Option<Ordinal> {
    members.iter().find_map(|x| {
        let (base, rem) = rho.split(x);
        (!rem.is_zero() && members.binary_search(&base).is_err()).then_some(base)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Embedding,
    Covering,
}

/// A map on a closed set, stored as the list of images in domain order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoveringMap {
    pub domain: ClosedSet,
    pub image: Vec<Ordinal>,
    pub level: Level,
}

impl CoveringMap {
    pub fn identity(domain: &ClosedSet) -> CoveringMap {
        CoveringMap {
            domain: domain.clone(),
            image: domain.members.clone(),
            level: Level::Embedding,
        }
    }

    pub fn apply(&self, x: &Ordinal) -> Option<&Ordinal> {
        self.domain
            .members
            .binary_search(x)
            .ok()
            .map(|i| &self.image[i])
    }

    pub fn image_set(&self) -> ClosedSet {
        ClosedSet::from_sorted_unchecked(self.image.clone())
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&Ordinal, &Ordinal)> {
        self.domain.members.iter().zip(&self.image)
    }

    /// `other ∘ self`, defined when `other`'s domain is this map's image.
    pub fn then(&self, other: &CoveringMap) -> Option<CoveringMap> {
        if other.domain.members != self.image {
            return None;
        }
        let level = if self.level == Level::Covering && other.level == Level::Covering {
            Level::Covering
        } else {
            Level::Embedding
        };
        Some(CoveringMap {
            domain: self.domain.clone(),
            image: other.image.clone(),
            level,
        })
    }
}

impl fmt::Display for CoveringMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pairs().map(|(x, y)| format!("{x} -> {y}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// A reason an embedding candidate is rejected.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Violation {
    LengthMismatch {
        domain: usize,
        image: usize,
    },
    NotIncreasing {
        position: usize,
    },
    RemainderChanged {
        x: Ordinal,
        from: Ordinal,
        to: Ordinal,
    },
    ImageNotClosed {
        missing: Ordinal,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::LengthMismatch { domain, image } => {
                write!(f, "domain has {domain} members, image has {image}")
            }
            Violation::NotIncreasing { position } => {
                write!(f, "image not increasing at position {position}")
            }
            Violation::RemainderChanged { x, from, to } => {
                write!(f, "remainder of {x} changes from {from} to {to}")
            }
            Violation::ImageNotClosed { missing } => {
                write!(f, "image is not closed: missing {missing}")
            }
        }
    }
}

/// Checks that `image` defines an embedding of the closed set `domain`.
///
/// Returns every violated condition on rejection.
pub fn check_embedding(
    domain: &[Ordinal],
    image: &[Ordinal],
    rho: &Rho,
) -> Result<std::result::Result<CoveringMap, Vec<Violation>>> {
    let dom = ClosedSet::new(domain.to_vec(), rho)?;
    if dom.members.len() != domain.len() || dom.members.as_slice() != domain {
        return Err(Error::Violation(
            "domain must be strictly increasing".into(),
        ));
    }
    let mut violations = Vec::new();
    if domain.len() != image.len() {
        violations.push(Violation::LengthMismatch {
            domain: domain.len(),
            image: image.len(),
        });
        return Ok(Err(violations));
    }
    for (i, w) in image.windows(2).enumerate() {
        if w[0] >= w[1] {
            violations.push(Violation::NotIncreasing { position: i + 1 });
        }
    }
    for (x, y) in domain.iter().zip(image) {
        let (from, to) = (rho.rem(x), rho.rem(y));
        if from != to {
            violations.push(Violation::RemainderChanged {
                x: x.clone(),
                from,
                to,
            });
        }
    }
    let mut sorted = image.to_vec();
    sorted.sort();
    sorted.dedup();
    if let Some(missing) = first_missing(&sorted, rho) {
        violations.push(Violation::ImageNotClosed { missing });
    }
    if violations.is_empty() {
        Ok(Ok(CoveringMap {
            domain: dom,
            image: image.to_vec(),
            level: Level::Embedding,
        }))
    } else {
        Ok(Err(violations))
    }
}

/// Whether the map is increasing and `h(σ+ξ) = h(σ)+ξ` with `ρ | h(σ)` for
/// every member `σ+ξ`, `ρ | σ`, `ξ < ρ`.
pub fn satisfies_pointwise_formula(map: &CoveringMap, rho: &Rho) -> bool {
    map.image.windows(2).all(|w| w[0] < w[1])
        && map.pairs().all(|(x, y)| {
            let (sigma, xi) = rho.split(x);
            map.apply(&sigma)
                .is_some_and(|hs| rho.divides(hs) && *y == hs.add(&xi))
        })
}

/// Extends a map defined on the divisible members of `x` to all of `x`.
pub fn extend_embedding(h: &[(Ordinal, Ordinal)], x: &ClosedSet, rho: &Rho) -> Result<CoveringMap> {
    let mut sorted = h.to_vec();
    sorted.sort();
    for w in sorted.windows(2) {
        if w[0].1 >= w[1].1 {
            return Err(Error::Violation(format!(
                "h is not increasing at {}",
                w[1].0
            )));
        }
    }
    for (_, y) in &sorted {
        if !rho.divides(y) {
            return Err(Error::ImageNotDivisible(y.clone()));
        }
    }
    let lookup = |s: &Ordinal| sorted.iter().find(|(a, _)| a == s).map(|(_, b)| b.clone());
    let mut image = Vec::with_capacity(x.len());
    for m in x.members() {
        let (sigma, xi) = rho.split(m);
        let hs = lookup(&sigma)
            .ok_or_else(|| Error::NotApplicable(format!("h is not defined at {sigma}")))?;
        image.push(hs.add(&xi));
    }
    match check_embedding(x.members(), &image, rho)? {
        Ok(map) => Ok(map),
        Err(v) => Err(Error::Violation(
            v.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join("; "),
        )),
    }
}

/// The least moved member of an embedding, which must be divisible by rho.
pub fn least_moved_check(map: &CoveringMap, rho: &Rho) -> Result<Option<Ordinal>> {
    let Some((x, _)) = map.pairs().find(|(x, y)| x != y) else {
        return Ok(None);
    };
    if rho.divides(x) {
        Ok(Some(x.clone()))
    } else {
        Err(Error::Violation(format!(
            "least moved member {x} is not divisible by rho"
        )))
    }
}

/// Outcome of certifying that an embedding preserves `≤₁` and `≤₂`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "kebab-case")]
pub enum Certification {
    Covering(CoveringMap),
    NotCovering { x: Ordinal, y: Ordinal, k: u8 },
    Undetermined { x: Ordinal, y: Ordinal, k: u8 },
}

/// Upgrades an embedding to a covering when every relation `x ≤_k y` of the
/// domain holds between the images.
pub fn certify_covering(map: &CoveringMap, oracle: &dyn RelationOracle) -> Certification {
    let dom = map.domain.members();
    let mut pending: Option<(usize, usize, u8)> = None;
    for i in 0..dom.len() {
        for j in i + 1..dom.len() {
            for k in [1u8, 2] {
                let rel = |a: &Ordinal, b: &Ordinal| {
                    if k == 1 {
                        oracle.le1(a, b)
                    } else {
                        oracle.le2(a, b)
                    }
                };
                let src = rel(&dom[i], &dom[j]);
                if src == Verdict::False {
                    continue;
                }
                let dst = rel(&map.image[i], &map.image[j]);
                match (src, dst) {
                    (_, Verdict::True) => {}
                    (Verdict::True, Verdict::False) => {
                        return Certification::NotCovering {
                            x: dom[i].clone(),
                            y: dom[j].clone(),
                            k,
                        };
                    }
                    _ => {
                        pending.get_or_insert((i, j, k));
                    }
                }
            }
        }
    }
    match pending {
        Some((i, j, k)) => Certification::Undetermined {
            x: dom[i].clone(),
            y: dom[j].clone(),
            k,
        },
        None => Certification::Covering(CoveringMap {
            level: Level::Covering,
            ..map.clone()
        }),
    }
}
