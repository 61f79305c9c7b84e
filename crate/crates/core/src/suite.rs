//! Seeded invariant suites, run by `resemblance verify`.

use serde::Serialize;

use crate::budget::{Budget, Universe};
use crate::error::{Error, Result};
use crate::incompressible::{
    build_from_index_set, complete_index_set, extend_incompressible, incompressible_cover,
    verify_incompressible, IndexedSet, Verification,
};
use crate::oracle::{
    check_axioms, covering_search, extract_pattern, iso_check, structure_iso, Iso,
};
use crate::ordinal::{ExtOrdinal, Ordinal, Rho};
use crate::relation::{Calculus, Verdict};
use crate::rho::{certify_covering, check_embedding, Certification, ClosedSet};
use crate::sample::Sampler;

pub const SUITES: &[&str] = &[
    "additivity",
    "recurrence",
    "axioms",
    "components",
    "translations",
    "nu",
    "incompressible",
    "oracle",
];

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub rho: Rho,
    pub depth: u32,
    pub sequel: bool,
    pub seed: u64,
    pub budget: Budget,
}

impl SuiteConfig {
    pub fn calculus(&self) -> Calculus {
        Calculus::with_options(self.rho.clone(), self.depth, self.sequel)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub passed: u64,
    pub failed: u64,
    /// Cases the calculus could not decide.
    pub skipped: u64,
    pub failures: Vec<String>,
}

const KEPT_FAILURES: usize = 5;

impl SuiteReport {
    fn new(name: &str) -> SuiteReport {
        SuiteReport {
            name: name.into(),
            ..SuiteReport::default()
        }
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.failures.len() < KEPT_FAILURES {
                self.failures.push(detail());
            }
        }
    }

    /// Records a case whose inputs turned out to be undetermined.
    fn outcome<T>(&mut self, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(Error::Undetermined(_)) => {
                self.skipped += 1;
                None
            }
            Err(e) => {
                self.check(false, || e.to_string());
                None
            }
        }
    }
}

/// Runs one suite by name, or every suite for `"all"`.
pub fn run(name: &str, cfg: &SuiteConfig) -> Result<Vec<SuiteReport>> {
    if name == "all" {
        return SUITES.iter().map(|s| run_one(s, cfg)).collect();
    }
    Ok(vec![run_one(name, cfg)?])
}

fn run_one(name: &str, cfg: &SuiteConfig) -> Result<SuiteReport> {
    let calc = cfg.calculus();
    let mut s = Sampler::new(cfg.seed);
    let mut r = SuiteReport::new(name);
    match name {
        "additivity" => additivity(&calc, &mut s, &mut r),
        "recurrence" => recurrence(&calc, &mut s, &mut r),
        "axioms" => axioms(&calc, &mut s, &mut r),
        "components" => components(&calc, &mut s, &mut r),
        "translations" => translations(&calc, &mut s, &mut r),
        "nu" => nu(&calc, &mut r),
        "incompressible" => incompressible(&calc, &mut s, &cfg.budget, &mut r),
        "oracle" => oracle(&calc, &mut s, &mut r),
        other => return Err(Error::NotApplicable(format!("unknown suite {other}"))),
    }
    Ok(r)
}

fn settled(e: ExtOrdinal) -> Result<Ordinal> {
    match e {
        ExtOrdinal::Ord(o) => Ok(o),
        _ => Err(Error::Undetermined("value not settled".into())),
    }
}

fn additivity(calc: &Calculus, s: &mut Sampler, r: &mut SuiteReport) {
    for _ in 0..200 {
        let a = s.below_omega_pow(5, 3, 4);
        let b = s.below_omega_omega();
        let sum = a.add(&b);
        let vals = (|| {
            Ok((
                calc.kappa(&sum)?,
                settled(calc.max1_kappa(&sum))?,
                settled(calc.max1_kappa(&a))?,
                calc.kappa(&b)?,
                settled(calc.max1_kappa(&b))?,
            ))
        })();
        if let Some((k, m, ma, kb, mb)) = r.outcome(vals) {
            r.check(k == ma.add(&kb), || format!("kappa({sum}) = {k}"));
            r.check(m == ma.add(&mb), || format!("max1(kappa({sum})) = {m}"));
        }
    }
}

fn recurrence(calc: &Calculus, s: &mut Sampler, r: &mut SuiteReport) {
    let rho = calc.rho().clone();
    for _ in 0..50 {
        let b = s.below_omega_omega();
        let alpha = rho.times(&Ordinal::omega_pow(&b));
        let vals = (|| {
            Ok((
                calc.kappa(&alpha)?,
                settled(calc.max1_kappa(&alpha))?,
                settled(calc.max1_kappa(&b))?,
            ))
        })();
        if let Some((k, m, mb)) = r.outcome(vals) {
            r.check(m == k.add(&mb), || {
                format!(
                    "max1(kappa({alpha})) = {m}, kappa + max1(kappa({b})) = {}",
                    k.add(&mb)
                )
            });
        }
    }
}

fn axioms(calc: &Calculus, s: &mut Sampler, r: &mut SuiteReport) {
    let rho = calc.rho().clone();
    for i in 0..200 {
        let set = if i % 2 == 0 {
            s.closed_set(&rho, 5)
        } else {
            s.clustered_set(&rho, 6)
        };
        let v = check_axioms(&extract_pattern(calc, set.members()));
        r.check(v.is_empty(), || format!("{set}: {}", v[0]));
    }
}

/// Up to `count` members of `I_b`.
fn component_points(
    calc: &Calculus,
    s: &mut Sampler,
    b: &Ordinal,
    count: usize,
) -> Result<Vec<Ordinal>> {
    let k = calc.kappa(b)?;
    let m = settled(calc.max1_kappa(b))?;
    let span = k.left_sub(&m).expect("max1 above kappa");
    let u = Universe::new(
        &Budget {
            terms: 3,
            coeff: 3,
            ..Budget::default()
        },
        &span.succ(),
        1,
    );
    let mut picked: Vec<Ordinal> = (0..count * 3)
        .filter_map(|_| s.pick(u.members()).map(|y| k.add(y)))
        .collect();
    picked.sort();
    picked.dedup();
    picked.truncate(count);
    Ok(picked)
}

/// Records an isomorphism check; `with_rem` also compares remainders.
fn record_iso(
    r: &mut SuiteReport,
    calc: &Calculus,
    xs: &[Ordinal],
    ys: &[Ordinal],
    with_rem: bool,
    what: &str,
) {
    let res = if with_rem {
        iso_check(calc, xs, ys)
    } else {
        structure_iso(calc, xs, ys)
    };
    match res {
        Ok(Iso::Isomorphic) => r.check(true, String::new),
        Ok(Iso::Inconclusive(_)) => r.skipped += 1,
        Ok(other) => r.check(false, || format!("{what}: {other:?}")),
        Err(e) => r.check(false, || format!("{what}: {e}")),
    }
}

fn components(calc: &Calculus, s: &mut Sampler, r: &mut SuiteReport) {
    for _ in 0..30 {
        let a = s.below_omega_omega();
        let e = s.below_omega_pow(2, 2, 3).succ();
        let b = s.below_omega_pow(4, 2, 3).add(&Ordinal::omega_pow(&e));
        let pair = (|| {
            let xs = component_points(calc, s, &b, 8)?;
            let ys = xs
                .iter()
                .map(|x| calc.frt_iso(&a, &b, x))
                .collect::<Result<Vec<_>>>()?;
            Ok((xs, ys))
        })();
        if let Some((xs, ys)) = r.outcome(pair) {
            record_iso(
                r,
                calc,
                &xs,
                &ys,
                false,
                &format!("I_{b} vs I_{}", a.add(&b)),
            );
        }
    }
}

fn translations(calc: &Calculus, s: &mut Sampler, r: &mut SuiteReport) {
    let rho = calc.rho().clone();
    let small = Universe::new(
        &Budget {
            terms: 3,
            coeff: 4,
            ..Budget::default()
        },
        &Ordinal::omega_pow(&Ordinal::nat(3)),
        1,
    );
    let pool: Vec<Ordinal> = small
        .members()
        .iter()
        .filter(|x| !x.is_zero())
        .cloned()
        .collect();
    for _ in 0..20 {
        let base1 = rho.times(&s.below_omega_omega());
        let base2 = rho.times(&s.below_omega_omega());
        let gamma = match (calc.max1(&base1), calc.max1(&base2)) {
            (ExtOrdinal::Ord(m1), ExtOrdinal::Ord(m2)) => base1
                .left_sub(&m1)
                .expect("above")
                .min(base2.left_sub(&m2).expect("above")),
            _ => {
                r.skipped += 1;
                continue;
            }
        };
        let mut xs: Vec<Ordinal> = pool
            .iter()
            .filter(|y| **y <= gamma)
            .take(6)
            .map(|y| base1.add(y))
            .chain([base1.clone()])
            .collect();
        xs.sort();
        xs.dedup();
        let ys = xs
            .iter()
            .map(|x| calc.lmsl_translate(&base1, &base2, &gamma, x))
            .collect::<Result<Vec<_>>>();
        if let Some(ys) = r.outcome(ys) {
            record_iso(
                r,
                calc,
                &xs,
                &ys,
                true,
                &format!("translation {base1} -> {base2}"),
            );
        }
    }
    if !rho.is_one() {
        for _ in 0..20 {
            let base = s
                .below_omega_omega()
                .add(&s.below_omega_pow(1, 1, 3).succ());
            if rho.divides(&base) {
                continue;
            }
            let mut xs: Vec<Ordinal> = (0..5).filter_map(|_| s.pick(&pool).cloned()).collect();
            xs.sort();
            xs.dedup();
            let ys = xs
                .iter()
                .map(|x| calc.msl_translate(&base, x))
                .collect::<Result<Vec<_>>>();
            if let Some(ys) = r.outcome(ys) {
                record_iso(
                    r,
                    calc,
                    &xs,
                    &ys,
                    false,
                    &format!("translation 1 -> {base}"),
                );
            }
        }
    }
    let e0 = Ordinal::epsilon(0);
    if calc.is_epsilon_above_rho(&e0) {
        for k in [2u64, 3, 5] {
            let delta = e0.mul_nat(k);
            let mut xs: Vec<Ordinal> = (0..6).filter_map(|_| s.pick(&pool).cloned()).collect();
            xs.sort();
            xs.dedup();
            let ys = xs
                .iter()
                .map(|x| calc.rtsi_translate(&e0, &delta, x))
                .collect::<Result<Vec<_>>>();
            if let Some(ys) = r.outcome(ys) {
                record_iso(
                    r,
                    calc,
                    &xs,
                    &ys,
                    true,
                    &format!("[1, e0] -> [{delta}+1, {delta}+e0]"),
                );
                for z in &ys {
                    let d = calc.le2(&e0.mul_nat(k - 1), z);
                    r.check(d.verdict == Verdict::False, || {
                        format!("le2(e0*{}, {z}) = {d}", k - 1)
                    });
                }
            }
        }
    }
}

fn nu(calc: &Calculus, r: &mut SuiteReport) {
    let e0 = Ordinal::epsilon(0);
    if !calc.is_epsilon_above_rho(&e0) {
        return;
    }
    for n in 0..=30u64 {
        if let Some(v) = r.outcome(calc.nu(&e0, &Ordinal::nat(n))) {
            r.check(v == ExtOrdinal::Ord(e0.mul_nat(n + 1)), || {
                format!("nu(e0, {n}) = {v}")
            });
            let nu = e0.mul_nat(n + 1);
            r.check(calc.max2(&nu) == ExtOrdinal::Ord(nu.clone()), || {
                format!("max2({nu}) = {}", calc.max2(&nu))
            });
        }
    }
    let lim = e0.mul(&Ordinal::omega());
    r.check(calc.max2(&lim) == ExtOrdinal::Undetermined, || {
        format!("max2({lim}) = {}", calc.max2(&lim))
    });
    for n in 2..=10u64 {
        let d = calc.le1(&e0, &e0.mul_nat(n));
        r.check(d.verdict == Verdict::True, || {
            format!("le1(e0, e0*{n}) = {d}")
        });
    }
}

fn incompressible(calc: &Calculus, s: &mut Sampler, budget: &Budget, r: &mut SuiteReport) {
    let rho = calc.rho().clone();
    for n in 0..=6u64 {
        let x = ClosedSet::closure((0..=n).map(|j| rho.times(&Ordinal::nat(j))), &rho);
        match verify_incompressible(calc, &x, budget).verdict {
            Verification::Inconclusive(_) => r.skipped += 1,
            v => r.check(v == Verification::Confirmed, || format!("{x}: {v:?}")),
        }
    }
    for _ in 0..30 {
        let x = s.clustered_set(&rho, 6);
        let Some(h) = r.outcome(incompressible_cover(calc, &x)) else {
            continue;
        };
        match verify_incompressible(calc, &h.image_set(), budget).verdict {
            Verification::Counterexample(m) => {
                r.check(false, || format!("cover {h} compressed by {m}"))
            }
            Verification::Confirmed => r.check(true, String::new),
            Verification::Inconclusive(_) => r.skipped += 1,
        }
        let indexed = (|| {
            let own = IndexedSet::new(calc, x.clone())?;
            let k = complete_index_set(&own.index_set(), &rho)?;
            Ok((
                k.clone(),
                build_from_index_set(calc, &k)?,
                extend_incompressible(calc, x.members())?,
                own,
            ))
        })();
        if let Some((k, built, ext, own)) = r.outcome(indexed) {
            r.check(built.index_set() == k, || {
                format!("index set of the set built from {k:?}")
            });
            r.check(x.members().iter().all(|m| ext.base.contains(m)), || {
                format!("extension of {x} drops members")
            });
            r.check(ext.max_index() == own.max_index(), || {
                format!("extension of {x} changes the maximal index")
            });
        }
    }
}

fn oracle(calc: &Calculus, s: &mut Sampler, r: &mut SuiteReport) {
    let rho = calc.rho().clone();
    let budget = Budget {
        terms: 3,
        coeff: 3,
        ..Budget::default()
    };
    for _ in 0..15 {
        let y = s.clustered_set(&rho, 3);
        let out = covering_search(calc, &y, &budget, 200);
        let fresh = Calculus::with_options(rho.clone(), calc.depth(), calc.sequel());
        for m in &out.maps {
            let ok = match check_embedding(y.members(), &m.image, &rho) {
                Ok(Ok(e)) => matches!(certify_covering(&e, &fresh), Certification::Covering(_)),
                _ => false,
            };
            r.check(ok, || format!("search result {m} fails certification"));
        }
    }
}
