//! Torsion pairs `(Fac M, Sub(τM ⊕ νP))` attached to support τ-tilting pairs.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::homology::{gi_verdict, gp_verdict, nakayama, tau, GpStatus, GpVerdict};
use crate::rep::Representation;
use crate::tautilt::{dagger, SupportTauTiltingPair};

/// A torsion pair kept intensionally through its generator and cogenerator.
#[derive(Clone, Debug)]
pub struct TorsionPairDescriptor<F: Field> {
    pub pair: SupportTauTiltingPair<F>,
    /// `M`, the Ext-projective generator of the torsion class
    pub generator: Representation<F>,
    /// `τM ⊕ νP`, the Ext-injective cogenerator of the torsion-free class
    pub cogenerator: Representation<F>,
}

pub fn torsion_pair_of<F: Field>(pair: &SupportTauTiltingPair<F>) -> Result<TorsionPairDescriptor<F>> {
    let alg = pair.algebra();
    let generator = pair.module();
    let mut parts: Vec<Representation<F>> =
        pair.taus().iter().filter(|t| !t.is_zero()).cloned().collect();
    for &v in pair.p() {
        parts.push(nakayama(&Representation::projective(alg, v)));
    }
    let cogenerator = Representation::direct_sum(alg, &parts);
    for m in pair.summands() {
        for c in &parts {
            if m.hom_dim(c) != 0 {
                return Err(Error::Verification(format!(
                    "Hom({}, {}) is nonzero in the torsion pair of {}",
                    m.label(),
                    c.label(),
                    pair.bracket_label()
                )));
            }
        }
    }
    Ok(TorsionPairDescriptor { pair: pair.clone(), generator, cogenerator })
}

impl<F: Field> TorsionPairDescriptor<F> {
    /// `X ∈ Fac M`.
    pub fn in_torsion(&self, x: &Representation<F>) -> bool {
        x.is_zero() || (!self.generator.is_zero() && x.in_fac(&self.generator))
    }

    /// `X ∈ Sub(τM ⊕ νP)`.
    pub fn in_torsion_free(&self, x: &Representation<F>) -> bool {
        x.is_zero() || (!self.cogenerator.is_zero() && x.in_sub(&self.cogenerator))
    }
}

/// For `X` in the torsion class: `Ext¹(X, Fac M) = 0 ⇔ Hom(M, τX) = 0`.
pub fn is_ext_projective_in<F: Field>(
    x: &Representation<F>,
    desc: &TorsionPairDescriptor<F>,
) -> Result<bool> {
    if !desc.in_torsion(x) {
        return Err(Error::Invalid(format!(
            "{} is not in the torsion class of {}",
            x.label(),
            desc.pair.bracket_label()
        )));
    }
    Ok(x.is_zero() || desc.generator.hom_dim(&tau(x)) == 0)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionClassification {
    /// `None` when the GP verdict of the generator is undecided
    pub gorenstein: Option<bool>,
    pub trivial: bool,
    pub generator_verdict: GpVerdict,
}

fn three_valued(v: &GpVerdict) -> Option<bool> {
    match v.status {
        GpStatus::CertifiedGP => Some(true),
        GpStatus::CertifiedNotGP => Some(false),
        GpStatus::VanishesUpToBound => None,
    }
}

pub fn classify_torsion_pair<F: Field>(
    desc: &TorsionPairDescriptor<F>,
    bound: usize,
) -> TorsionClassification {
    let v = match desc.pair.gp() {
        Some(v) if v.bound_used == bound => v.clone(),
        _ => gp_verdict(&desc.generator, bound),
    };
    TorsionClassification {
        gorenstein: three_valued(&v),
        trivial: desc.pair.projective_vertices().iter().all(Option::is_some),
        generator_verdict: v,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualSideReport {
    pub cogenerator_gi: GpVerdict,
    /// the GI answer for the cogenerator does not contradict `gorenstein`
    pub agrees: bool,
    /// the dual pair over `Λ^op` does not contradict `gorenstein`
    pub op_side_agrees: bool,
    /// some verdict involved was undecided
    pub undecided: bool,
}

fn compatible(a: Option<bool>, b: Option<bool>) -> bool {
    match (a, b) {
        (Some(x), Some(y)) => x == y,
        _ => true,
    }
}

/// The torsion pair is Gorenstein iff its cogenerator is Gorenstein
/// injective iff the dual pair over `Λ^op` is Gorenstein.
pub fn dual_side_check<F: Field>(desc: &TorsionPairDescriptor<F>, bound: usize) -> Result<DualSideReport> {
    let cls = classify_torsion_pair(desc, bound);
    let gi = gi_verdict(&desc.cogenerator, bound);
    let op_pair = dagger(&desc.pair)?.into_support_tau_tilting()?;
    let op_desc = torsion_pair_of(&op_pair)?;
    let op_cls = classify_torsion_pair(&op_desc, bound);
    let gi3 = three_valued(&gi);
    Ok(DualSideReport {
        agrees: compatible(cls.gorenstein, gi3),
        op_side_agrees: compatible(cls.gorenstein, op_cls.gorenstein),
        undecided: cls.gorenstein.is_none() || gi3.is_none() || op_cls.gorenstein.is_none(),
        cogenerator_gi: gi,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::tests::{alg, EX_3D, EX_3E};
    use crate::tautilt::{check_support_tau_tilting, enumerate_exchange_graph};

    #[test]
    fn extreme_pairs() {
        let a = alg(EX_3E);
        let top = check_support_tau_tilting(&Representation::regular(&a), &[], 4).unwrap();
        let d = torsion_pair_of(&top).unwrap();
        assert!(d.cogenerator.is_zero());
        for v in 0..3 {
            assert!(d.in_torsion(&Representation::simple(&a, v)));
            assert!(!d.in_torsion_free(&Representation::simple(&a, v)));
        }
        let c = classify_torsion_pair(&d, 4);
        assert_eq!((c.gorenstein, c.trivial), (Some(true), true));
        assert!(dual_side_check(&d, 4).unwrap().agrees);

        let bottom = check_support_tau_tilting(&Representation::zero(&a), &[0, 1, 2], 4).unwrap();
        let d = torsion_pair_of(&bottom).unwrap();
        for v in 0..3 {
            assert!(!d.in_torsion(&Representation::simple(&a, v)));
            assert!(d.in_torsion_free(&Representation::projective(&a, v)));
        }
        assert!(is_ext_projective_in(&Representation::zero(&a), &d).unwrap());
        assert!(is_ext_projective_in(&Representation::simple(&a, 0), &d).is_err());
    }

    #[test]
    fn pair_t_of_3e() {
        let a = alg(EX_3E);
        let t = Representation::simple(&a, 1).direct_sum_with(&Representation::projective(&a, 1));
        let pair = check_support_tau_tilting(&t, &[0], 4).unwrap();
        let d = torsion_pair_of(&pair).unwrap();
        for s in pair.summands() {
            assert!(is_ext_projective_in(s, &d).unwrap());
        }
        assert!(d.in_torsion_free(&d.cogenerator));
        let c = classify_torsion_pair(&d, 4);
        assert_eq!((c.gorenstein, c.trivial), (Some(true), false));
    }

    #[test]
    fn dual_side_on_3d() {
        let a = alg(EX_3D);
        let g = enumerate_exchange_graph(&a, 1000).unwrap();
        let mut non_gorenstein = 0;
        for node in &g.nodes {
            let d = torsion_pair_of(node).unwrap();
            let r = dual_side_check(&d, 4).unwrap();
            assert!(r.agrees && r.op_side_agrees, "{}", node.bracket_label());
            if classify_torsion_pair(&d, 4).gorenstein == Some(false) {
                non_gorenstein += 1;
            }
        }
        assert!(non_gorenstein > 0);
    }
}
