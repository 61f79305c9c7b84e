//! The `≤₂` layer inside components `I_α` with `α` an epsilon number above
//! rho: the points `ν_{α,ξ}`, `max₂`, the intervals `J_{α,ξ}` and `le2`.
//!
//! Inside such a component `κ_α = α`, `ν_{α,ξ} = κ_α·(1+ξ)` for `ξ ≤ ω`, and
//! `max₂(ν_ξ)` is only settled at `ξ = 0` and successor `ξ`. Every other
//! point reduces to one of these by the interior and small-interval
//! translations.

use serde::Serialize;

use crate::error::{undetermined, Error, Result};
use crate::ordinal::{ExtOrdinal, Ordinal, Rho};
use crate::relation::{Calculus, ComponentKind, Decision, Step, Verdict};

/// `ν_{α,ξ}` and the data of the interval it starts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NuInfo {
    pub alpha: Ordinal,
    pub xi: Ordinal,
    pub nu: Ordinal,
    pub max2: ExtOrdinal,
    pub j_upper: ExtOrdinal,
}

/// `J_{α,ξ} = [ν_ξ, ν_{ξ+1})` and the upper end of its closure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JInterval {
    pub lower: Ordinal,
    pub upper: ExtOrdinal,
    pub closed_upper: ExtOrdinal,
}

/// What is known about the order type `θ₂(α)` of the `ν` enumeration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Theta2Report {
    pub alpha: Ordinal,
    pub shape: String,
    pub nu1: Ordinal,
    pub justification: String,
}

impl Calculus {
    fn require_epsilon(&self, alpha: &Ordinal) -> Result<Ordinal> {
        if !self.is_epsilon_above_rho(alpha) {
            return Err(Error::NotEpsilon(alpha.clone()));
        }
        self.kappa(alpha)
    }

    /// `ν_{α,ξ}`.
    pub fn nu(&self, alpha: &Ordinal, xi: &Ordinal) -> Result<ExtOrdinal> {
        let kappa = self.require_epsilon(alpha)?;
        if *xi > Ordinal::omega() {
            return Ok(ExtOrdinal::Undetermined);
        }
        Ok(ExtOrdinal::Ord(kappa.mul(&Ordinal::one().add(xi))))
    }

    pub fn nu_info(&self, alpha: &Ordinal, xi: &Ordinal) -> Result<NuInfo> {
        let nu = match self.nu(alpha, xi)? {
            ExtOrdinal::Ord(o) => o,
            _ => return Err(undetermined(format!("nu({alpha}, {xi}) is not settled"))),
        };
        let j = self.j_interval(alpha, xi)?;
        Ok(NuInfo {
            alpha: alpha.clone(),
            xi: xi.clone(),
            max2: self.max2(&nu),
            nu,
            j_upper: j.upper,
        })
    }

    /// `J_{α,ξ}` with the upper end of its topological closure.
    pub fn j_interval(&self, alpha: &Ordinal, xi: &Ordinal) -> Result<JInterval> {
        let lower = match self.nu(alpha, xi)? {
            ExtOrdinal::Ord(o) => o,
            _ => return Err(undetermined(format!("nu({alpha}, {xi}) is not settled"))),
        };
        let upper = if xi.is_finite() {
            self.nu(alpha, &xi.succ())?
        } else {
            ExtOrdinal::Undetermined
        };
        Ok(JInterval {
            lower,
            closed_upper: upper.clone(),
            upper,
        })
    }

    pub fn theta2_shape(&self, alpha: &Ordinal) -> Result<Theta2Report> {
        let kappa = self.require_epsilon(alpha)?;
        Ok(Theta2Report {
            alpha: alpha.clone(),
            shape: "infinite or the successor of an infinite additively indecomposable ordinal".into(),
            nu1: kappa.mul_nat(2),
            justification: format!(
                "max2(nu_0) = nu_0 = {kappa}, so nu_1 = kappa + kappa = {}; the enumeration continues past every finite stage",
                kappa.mul_nat(2)
            ),
        })
    }

    /// Witness map `x ↦ δ + x` of `[1, κ_α] ≅ [δ+1, δ+κ_α]` for `κ_α | δ`.
    pub fn rtsi_translate(&self, alpha: &Ordinal, delta: &Ordinal, x: &Ordinal) -> Result<Ordinal> {
        let kappa = self.require_epsilon(alpha)?;
        let k = Rho::new(kappa.clone()).expect("epsilon is indecomposable");
        if !k.divides(delta) {
            return Err(Error::DeltaNotDivisible {
                delta: delta.clone(),
                kappa,
            });
        }
        if x.is_zero() || *x > kappa {
            return Err(Error::XOutOfRange(x.clone()));
        }
        Ok(delta.add(x))
    }

    fn max2_inner(&self, beta: &Ordinal) -> Result<Ordinal> {
        if beta.is_zero() || !self.rho().is_limit_multiple(beta) {
            return Ok(beta.clone());
        }
        let loc = self.locate(beta)?;
        let y = &loc.offset;
        match loc.kind {
            ComponentKind::Singleton => Ok(beta.clone()),
            ComponentKind::Regular => {
                if *y == loc.block_kappa {
                    return Ok(beta.clone());
                }
                let delta = loc.block_kappa.left_sub(y).expect("offset above kappa");
                Ok(loc
                    .prefix
                    .add(&loc.block_kappa)
                    .add(&self.max2_inner(&delta)?))
            }
            ComponentKind::Epsilon => {
                let eps = Rho::new(loc.block_kappa.clone()).expect("indecomposable");
                let (q, eta) = eps.split(y);
                if !eta.is_zero() {
                    return Ok(loc.prefix.add(&q).add(&self.max2_inner(&eta)?));
                }
                if eps.quotient(y).is_finite() {
                    Ok(beta.clone())
                } else {
                    Err(undetermined(format!(
                        "max2 at the limit point {beta} is not settled"
                    )))
                }
            }
        }
    }

    /// `max₂(β)`, the largest `γ` with `β ≤₂ γ`.
    pub fn max2(&self, beta: &Ordinal) -> ExtOrdinal {
        match self.max2_inner(beta) {
            Ok(o) => ExtOrdinal::Ord(o),
            Err(_) => ExtOrdinal::Undetermined,
        }
    }

    /// Decides `b1 ≤₂ b2`.
    pub fn le2(&self, b1: &Ordinal, b2: &Ordinal) -> Decision {
        if b1 == b2 {
            return Decision {
                verdict: Verdict::True,
                trace: vec![Step::Reflexive],
            };
        }
        if b1 > b2 {
            return Decision {
                verdict: Verdict::False,
                trace: vec![Step::Order],
            };
        }
        if !self.rho().is_limit_multiple(b1) {
            return Decision {
                verdict: Verdict::False,
                trace: vec![Step::LimitMultiple],
            };
        }
        let d1 = self.le1(b1, b2);
        if d1.verdict == Verdict::False {
            let mut trace = d1.trace;
            trace.push(Step::RespectsLe1);
            return Decision {
                verdict: Verdict::False,
                trace,
            };
        }
        let Ok(loc) = self.locate(b1) else {
            return Decision {
                verdict: Verdict::Undetermined,
                trace: vec![Step::Unsettled],
            };
        };
        let y1 = &loc.offset;
        let y2 = loc.prefix.left_sub(b2).expect("b2 above prefix");
        let nested = |step: Step, d: Decision| {
            let mut trace = vec![step];
            trace.extend(d.trace);
            Decision {
                verdict: d.verdict,
                trace,
            }
        };
        match loc.kind {
            ComponentKind::Singleton => Decision {
                verdict: Verdict::False,
                trace: vec![Step::Singleton],
            },
            ComponentKind::Regular => {
                if *y1 == loc.block_kappa {
                    return Decision {
                        verdict: Verdict::False,
                        trace: vec![Step::KappaNotLe2],
                    };
                }
                let d1 = loc.block_kappa.left_sub(y1).expect("offset above kappa");
                let d2 = loc.block_kappa.left_sub(&y2).expect("offset above kappa");
                nested(Step::InteriorTranslation, self.le2(&d1, &d2))
            }
            ComponentKind::Epsilon => {
                let eps = Rho::new(loc.block_kappa.clone()).expect("indecomposable");
                let (q1, eta1) = eps.split(y1);
                if !eta1.is_zero() {
                    if y2 >= q1.add(&loc.block_kappa) {
                        return Decision {
                            verdict: Verdict::False,
                            trace: vec![Step::SmallIntervals],
                        };
                    }
                    let rel = q1.left_sub(&y2).expect("y2 above q1");
                    return nested(Step::SmallIntervals, self.le2(&eta1, &rel));
                }
                if !eps.divides(&y2) {
                    return Decision {
                        verdict: Verdict::False,
                        trace: vec![Step::Divisibility],
                    };
                }
                if eps.quotient(y1).is_finite() {
                    Decision {
                        verdict: Verdict::False,
                        trace: vec![Step::NuBoundary],
                    }
                } else {
                    Decision {
                        verdict: Verdict::Undetermined,
                        trace: vec![Step::NuLimit],
                    }
                }
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

    fn calc() -> Calculus {
        Calculus::new(Rho::one())
    }

    #[test]
    fn nu_examples() {
        let c = calc();
        assert_eq!(c.nu(&p("e0"), &p("0")).unwrap(), p("e0").into());
        for n in 0..10u64 {
            assert_eq!(
                c.nu(&p("e0"), &Ordinal::nat(n)).unwrap(),
                p("e0").mul_nat(n + 1).into()
            );
        }
        assert_eq!(c.nu(&p("e0"), &p("w")).unwrap(), p("w^(e0+1)").into());
        assert_eq!(c.nu(&p("e0"), &p("w+1")).unwrap(), ExtOrdinal::Undetermined);
        assert!(matches!(c.nu(&p("w"), &p("0")), Err(Error::NotEpsilon(_))));
    }

    #[test]
    fn max2_examples() {
        let c = calc();
        assert_eq!(c.max2(&p("w")), p("w").into());
        assert_eq!(c.max2(&p("e0*2")), p("e0*2").into());
        assert_eq!(c.max2(&p("w^(e0+1)")), ExtOrdinal::Undetermined);
        assert_eq!(c.max2(&p("e0*2+w")), p("e0*2+w").into());
    }

    #[test]
    fn le2_examples() {
        let c = calc();
        let d = c.le2(&p("e0"), &p("e0+w"));
        assert_eq!(d.verdict, Verdict::False);
        assert_eq!(c.le2(&p("e0"), &p("e0*2")).verdict, Verdict::False);
        assert_eq!(c.le2(&p("w^2"), &p("w^2")).verdict, Verdict::True);
        assert_eq!(c.le2(&p("e0*2+w"), &p("e0*3")).verdict, Verdict::False);
        assert_eq!(
            c.le2(&p("w^(e0+1)"), &p("w^(e0+1)+e0")).verdict,
            Verdict::Undetermined
        );
    }

    #[test]
    fn interval_examples() {
        let c = calc();
        let j = c.j_interval(&p("e0"), &p("0")).unwrap();
        assert_eq!(
            (j.lower, j.upper.clone(), j.closed_upper),
            (p("e0"), p("e0*2").into(), p("e0*2").into())
        );
        let j = c.j_interval(&p("e0"), &p("3")).unwrap();
        assert_eq!((j.lower, j.upper), (p("e0*4"), p("e0*5").into()));
        let j = c.j_interval(&p("e0"), &p("w")).unwrap();
        assert_eq!(
            (j.lower, j.upper),
            (p("w^(e0+1)"), ExtOrdinal::Undetermined)
        );
    }

    #[test]
    fn rtsi_and_theta() {
        let c = calc();
        assert_eq!(
            c.rtsi_translate(&p("e0"), &p("e0*3"), &p("w+1")).unwrap(),
            p("e0*3+w+1")
        );
        assert_eq!(
            c.rtsi_translate(&p("e0"), &p("0"), &p("w")).unwrap(),
            p("w")
        );
        assert!(matches!(
            c.rtsi_translate(&p("e0"), &p("w"), &p("1")),
            Err(Error::DeltaNotDivisible { .. })
        ));
        assert!(c.le1(&p("e0*3+w"), &p("e0*3+w+1")).verdict.is_true());
        assert_eq!(c.theta2_shape(&p("e0")).unwrap().nu1, p("e0*2"));
        assert!(matches!(c.theta2_shape(&p("w")), Err(Error::NotEpsilon(_))));
    }
}
