//! Acceptance criteria 1–10. Prints one line per criterion.

mod common;

use std::io::Write;

use common::{p, tower, KappaOracle};
use resemblance::budget::{Budget, Universe};
use resemblance::incompressible::{incompressible_cover, verify_incompressible, Verification};
use resemblance::oracle::{check_axioms, covering_search, extract_pattern, iso_check, Iso};
use resemblance::ordinal::{ExtOrdinal, Ordinal, Rho};
use resemblance::relation::{Calculus, Step, Verdict};
use resemblance::rho::{certify_covering, check_embedding, Certification, ClosedSet};
use resemblance::sample::Sampler;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn rho1() -> Calculus {
    Calculus::new(Rho::one())
}

fn ext(o: Ordinal) -> ExtOrdinal {
    ExtOrdinal::Ord(o)
}

fn exact_values() -> Outcome {
    let c = rho1();
    let mut oracle = KappaOracle::new();
    for n in 0..=100u64 {
        let a = Ordinal::nat(n);
        ensure(c.kappa(&a) == Ok(a.clone()), || {
            format!("kappa({n}) = {:?}", c.kappa(&a))
        })?;
        ensure(oracle.kappa(&a) == a, || format!("oracle kappa({n})"))?;
    }
    let kappa_checks = [("w", "w"), ("w+1", "w+2")];
    for (a, want) in kappa_checks {
        ensure(c.kappa(&p(a)) == Ok(p(want)), || {
            format!("kappa({a}) = {:?}", c.kappa(&p(a)))
        })?;
        ensure(oracle.kappa(&p(a)) == p(want), || {
            format!("oracle kappa({a})")
        })?;
    }
    ensure(c.max1(&p("w")) == ext(p("w+1")), || {
        format!("max1(w) = {}", c.max1(&p("w")))
    })?;
    let max_checks = [("w*2", "w*2+1"), ("w^2", "w^2+2"), ("w^w", "w^w+w+1")];
    for (a, want) in max_checks {
        ensure(c.max1_kappa(&p(a)) == ext(p(want)), || {
            format!("max1(kappa({a})) = {}", c.max1_kappa(&p(a)))
        })?;
        ensure(oracle.max1_kappa(&p(a)) == p(want), || {
            format!("oracle max1(kappa({a}))")
        })?;
    }
    Ok("9 literal identities and kappa(n) for n <= 100".into())
}

fn additivity() -> Outcome {
    let c = rho1();
    let mut s = Sampler::new(2);
    let mut oracle = KappaOracle::new();
    let mut oracle_checked = 0;
    for _ in 0..200 {
        let a = s.below_omega_pow(5, 3, 4);
        let b = s.below_omega_omega();
        let sum = a.add(&b);
        let (ma, kb, mb) = (c.max1_kappa(&a), c.kappa(&b).unwrap(), c.max1_kappa(&b));
        let (ma, mb) = (ma.ordinal().unwrap().clone(), mb.ordinal().unwrap().clone());
        let direct = c.kappa(&sum).map_err(|e| e.to_string())?;
        ensure(direct == ma.add(&kb), || {
            format!(
                "kappa({sum}) = {direct} but max1(kappa({a})) + kappa({b}) = {}",
                ma.add(&kb)
            )
        })?;
        let direct_max = c.max1_kappa(&sum);
        ensure(direct_max == ext(ma.add(&mb)), || {
            format!("max1(kappa({sum})) = {direct_max}")
        })?;
        if sum.lead_exponent().is_some_and(|e| e <= Ordinal::nat(3))
            && sum.max_coeff() <= 3u32.into()
        {
            ensure(oracle.kappa(&sum) == direct, || {
                format!("oracle kappa({sum})")
            })?;
            oracle_checked += 1;
        }
    }
    Ok(format!(
        "200 pairs, {oracle_checked} also matched by the oracle"
    ))
}

fn second_recurrence() -> Outcome {
    let c = rho1();
    let mut s = Sampler::new(3);
    let mut oracle = KappaOracle::new();
    let mut oracle_checked = 0;
    for i in 0..50 {
        let b = if i < 10 {
            Ordinal::nat(i).add(&s.below_omega_pow(2, 1, 2))
        } else {
            s.below_omega_omega()
        };
        let w = Ordinal::omega_pow(&b);
        let lhs = c.max1_kappa(&w);
        let rhs = c
            .kappa(&w)
            .unwrap()
            .add(c.max1_kappa(&b).ordinal().unwrap());
        ensure(lhs == ext(rhs.clone()), || {
            format!("b = {b}: {lhs} vs {rhs}")
        })?;
        // The oracle's cost grows exponentially with the exponent.
        if b <= Ordinal::nat(6) || b == Ordinal::omega() {
            ensure(oracle.max1_kappa(&w) == rhs, || {
                format!("oracle at w^({b})")
            })?;
            oracle_checked += 1;
        }
    }
    Ok(format!(
        "50 exponents, {oracle_checked} also matched by the oracle"
    ))
}

fn axioms() -> Outcome {
    let mut s = Sampler::new(4);
    let mut total = 0;
    for (rho, count) in [(Rho::one(), 500), (Rho::new(p("w")).unwrap(), 100)] {
        let c = Calculus::new(rho.clone());
        for i in 0..count {
            let set = if i % 2 == 0 {
                s.closed_set(&rho, 5)
            } else {
                s.clustered_set(&rho, 6)
            };
            let v = check_axioms(&extract_pattern(&c, set.members()));
            ensure(v.is_empty(), || format!("{set} at rho {rho}: {}", v[0]))?;
            total += 1;
        }
    }
    Ok(format!("{total} patterns lawful"))
}

fn component_sample(c: &Calculus, s: &mut Sampler, b: &Ordinal, count: usize) -> Vec<Ordinal> {
    let k = c.kappa(b).unwrap();
    let m = c.max1_kappa(b).ordinal().unwrap().clone();
    let span = k.left_sub(&m).unwrap();
    let budget = Budget {
        terms: 3,
        coeff: 3,
        ..Budget::default()
    };
    let u = Universe::new(&budget, &span.succ(), 1);
    let mut picked: Vec<Ordinal> = (0..count * 3)
        .filter_map(|_| s.pick(u.members()).map(|y| k.add(y)))
        .collect();
    picked.sort();
    picked.dedup();
    picked.truncate(count);
    picked
}

fn first_recurrence() -> Outcome {
    let c = rho1();
    let mut s = Sampler::new(5);
    for _ in 0..30 {
        let a = s.below_omega_omega();
        let e = loop {
            let e = s.below_omega_pow(2, 2, 3);
            if !e.is_zero() {
                break e;
            }
        };
        let b = s.below_omega_pow(4, 2, 3).add(&Ordinal::omega_pow(&e));
        let xs = component_sample(&c, &mut s, &b, 8);
        ensure(xs.len() >= 2, || format!("component of {b} too small"))?;
        let ys: Vec<Ordinal> = xs
            .iter()
            .map(|x| c.frt_iso(&a, &b, x))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        let target = a.add(&b);
        for y in &ys {
            ensure(c.index(y) == Ok(target.clone()), || {
                format!("{y} not in I_{target}")
            })?;
        }
        let r = iso_check(&c, &xs, &ys).map_err(|e| e.to_string())?;
        ensure(r == Iso::Isomorphic, || {
            format!("I_{b} -> I_{target}: {r:?}")
        })?;
    }
    Ok("30 component pairs isomorphic".into())
}

fn small_intervals() -> Outcome {
    let c = rho1();
    let e0 = Ordinal::epsilon(0);
    let mut s = Sampler::new(6);
    let u = Universe::new(
        &Budget {
            terms: 3,
            coeff: 4,
            ..Budget::default()
        },
        &p("w^2+1"),
        1,
    );
    let pool: Vec<Ordinal> = u
        .members()
        .iter()
        .filter(|x| !x.is_zero())
        .cloned()
        .collect();
    let mut gaps = 0;
    for k in [2u64, 3, 5] {
        let delta = e0.mul_nat(k);
        for _ in 0..20 {
            let n = s.nat(2, 8) as usize;
            let mut xs: Vec<Ordinal> = (0..n).map(|_| s.pick(&pool).unwrap().clone()).collect();
            xs.sort();
            xs.dedup();
            let ys: Vec<Ordinal> = xs
                .iter()
                .map(|x| c.rtsi_translate(&e0, &delta, x))
                .collect::<Result<_, _>>()
                .map_err(|e| e.to_string())?;
            let r = iso_check(&c, &xs, &ys).map_err(|e| e.to_string())?;
            ensure(r == Iso::Isomorphic, || {
                format!("delta {delta}, {xs:?}: {r:?}")
            })?;
            let below = [
                delta.clone(),
                s.below_epsilon0(),
                e0.mul_nat(s.nat(1, k - 1)).add(&s.below_omega_omega()),
                e0.mul_nat(s.nat(1, k - 1)),
            ];
            for y in below.iter().filter(|y| **y <= delta) {
                for z in &ys {
                    let d = c.le2(y, z);
                    ensure(d.verdict == Verdict::False, || {
                        format!("le2({y}, {z}) = {d}")
                    })?;
                    gaps += 1;
                }
            }
        }
    }
    Ok(format!("60 translated sets isomorphic, {gaps} gap checks"))
}

fn nu_chain() -> Outcome {
    let c = rho1();
    let e0 = Ordinal::epsilon(0);
    for n in 0..=30u64 {
        let got = c.nu(&e0, &Ordinal::nat(n)).map_err(|e| e.to_string())?;
        ensure(got == ext(e0.mul_nat(n + 1)), || {
            format!("nu(e0, {n}) = {got}")
        })?;
    }
    let w = c.nu(&e0, &Ordinal::omega()).map_err(|e| e.to_string())?;
    ensure(w == ext(e0.mul(&Ordinal::omega())), || {
        format!("nu(e0, w) = {w}")
    })?;
    let m = c.max2(&e0.mul(&Ordinal::omega()));
    ensure(m == ExtOrdinal::Undetermined, || {
        format!("max2(e0*w) = {m}")
    })?;
    Ok("nu(e0, n) for n <= 30, nu(e0, w), max2 frontier".into())
}

fn kappa_growth() -> Outcome {
    let c = rho1();
    let e0 = Ordinal::epsilon(0);
    let mut s = Sampler::new(8);
    for _ in 0..50 {
        let a = s.below_epsilon0();
        ensure(!a.is_epsilon(), || format!("{a} is an epsilon"))?;
        let k = c.kappa(&a).map_err(|e| e.to_string())?;
        let d = c.le1(&k, &k.add(&k));
        ensure(d.verdict == Verdict::False, || {
            format!("le1(kappa({a}), twice) = {d}")
        })?;
    }
    for n in 1..=10u64 {
        let d = c.le1(&e0, &e0.mul_nat(n));
        ensure(d.verdict == Verdict::True, || {
            format!("le1(e0, e0*{n}) = {d}")
        })?;
        ensure(n == 1 || d.trace.contains(&Step::LowerBound), || {
            format!("trace of le1(e0, e0*{n}) = {d}")
        })?;
    }
    let k: Vec<Ordinal> = (1..=5).map(|n| c.kappa(&tower(n)).unwrap()).collect();
    ensure((1..=5).all(|n| k[n as usize - 1] == tower(n)), || {
        "kappa fixes the tower".into()
    })?;
    ensure(c.kappa(&e0) == Ok(e0.clone()), || "kappa(e0)".into())?;
    let sequel = Calculus::with_options(Rho::one(), 1, true);
    let m = sequel.max1_kappa(&e0);
    let want = e0.mul(&Ordinal::omega().succ());
    ensure(m == ext(want.clone()), || {
        format!("sequel max1(kappa(e0)) = {m}, want {want}")
    })?;
    ensure(c.max1_kappa(&e0) == ExtOrdinal::Undetermined, || {
        "max1(kappa(e0)) settled without the sequel".into()
    })?;
    Ok("50 indices, le1(e0, e0*n) for n <= 10, sequel value".into())
}

fn incompressibility() -> Outcome {
    let c = rho1();
    let budget = Budget::default();
    for n in 0..=6u64 {
        let x = ClosedSet::new((0..=n).map(Ordinal::nat).collect(), c.rho()).unwrap();
        let r = verify_incompressible(&c, &x, &budget);
        ensure(r.verdict == Verification::Confirmed, || {
            format!("{x}: {:?}", r.verdict)
        })?;
    }
    let mut s = Sampler::new(9);
    let (mut confirmed, mut inconclusive, mut runs) = (0, 0, 0);
    for (rho, count) in [(Rho::one(), 100), (Rho::new(p("w")).unwrap(), 50)] {
        let c = Calculus::new(rho.clone());
        for _ in 0..count {
            let x = s.clustered_set(&rho, 6);
            let h = incompressible_cover(&c, &x).map_err(|e| format!("cover of {x}: {e}"))?;
            match verify_incompressible(&c, &h.image_set(), &budget).verdict {
                Verification::Confirmed => confirmed += 1,
                Verification::Inconclusive(_) => inconclusive += 1,
                Verification::Counterexample(m) => {
                    return Err(format!("cover {h} of {x} compressed by {m}"))
                }
            }
            let fresh = Calculus::new(rho.clone());
            let h2 = incompressible_cover(&fresh, &x).map_err(|e| e.to_string())?;
            let again = incompressible_cover(&fresh, &h.image_set()).map_err(|e| e.to_string())?;
            let composed = h.then(&again).ok_or("composition undefined")?;
            for ((y1, y2), y3) in h.image.iter().zip(&h2.image).zip(&composed.image) {
                let (i1, i2, i3) = (c.index(y1), fresh.index(y2), fresh.index(y3));
                ensure(i1 == i2 && i2 == i3, || {
                    format!("indices differ on {x}: {i1:?} {i2:?} {i3:?}")
                })?;
            }
            runs += 1;
        }
    }
    Ok(format!("{{0..n}} confirmed for n <= 6; {runs} covers: {confirmed} confirmed, {inconclusive} inconclusive"))
}

fn oracle_agreement() -> Outcome {
    let mut s = Sampler::new(10);
    let mut checked = 0;
    let example = {
        let c = rho1();
        let y = ClosedSet::new(vec![p("w"), p("w+1")], c.rho()).unwrap();
        let b = Budget {
            coeff: 9,
            ceiling: Some(p("w*10")),
            ..Budget::default()
        };
        covering_search(&c, &y, &b, 1000).maps.len()
    };
    ensure(example == 9, || {
        format!("{{w, w+1}} below w*10 has {example} coverings")
    })?;
    for (rho, count) in [(Rho::one(), 30), (Rho::new(p("w")).unwrap(), 20)] {
        let c = Calculus::new(rho.clone());
        let budget = Budget {
            terms: 3,
            coeff: 3,
            ..Budget::default()
        };
        for _ in 0..count {
            let y = s.clustered_set(&rho, 3);
            let out = covering_search(&c, &y, &budget, 300);
            let u = Universe::new(&budget, &budget.ceiling_for(y.max()), 1);
            if y.members().iter().all(|m| u.contains(m)) {
                ensure(!out.maps.is_empty(), || format!("no covering of {y}"))?;
            }
            let fresh = Calculus::new(rho.clone());
            for m in &out.maps {
                let emb =
                    check_embedding(y.members(), &m.image, &rho).map_err(|e| e.to_string())?;
                let emb = emb.map_err(|v| format!("{m}: {}", v[0]))?;
                match certify_covering(&emb, &fresh) {
                    Certification::Covering(_) => checked += 1,
                    other => return Err(format!("{m} rejected: {other:?}")),
                }
            }
        }
    }
    Ok(format!("{checked} coverings re-certified"))
}

type Criterion = (&'static str, fn() -> Outcome);

#[test]
fn acceptance() {
    let criteria: [Criterion; 10] = [
        ("exact values", exact_values),
        ("additivity", additivity),
        ("second recurrence", second_recurrence),
        ("axioms", axioms),
        ("first recurrence", first_recurrence),
        ("small intervals at e0", small_intervals),
        ("nu chain", nu_chain),
        ("kappa growth", kappa_growth),
        ("incompressibility", incompressibility),
        ("oracle agreement", oracle_agreement),
    ];
    let handle = std::thread::Builder::new()
        .stack_size(256 << 20)
        .spawn(move || {
            let mut failed = Vec::new();
            for (i, (name, run)) in criteria.iter().enumerate() {
                let start = std::time::Instant::now();
                let outcome = run();
                let secs = start.elapsed().as_secs_f64();
                let (verdict, detail) = match &outcome {
                    Ok(detail) => ("PASS", detail),
                    Err(why) => {
                        failed.push(i + 1);
                        ("FAIL", why)
                    }
                };
                // Written to the handle directly so the lines survive output capture.
                let _ = writeln!(
                    std::io::stdout().lock(),
                    "criterion {:>2} {name}: {verdict} ({detail}; {secs:.2}s)",
                    i + 1
                );
            }
            failed
        })
        .unwrap();
    let failed = handle.join().unwrap();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
