use std::fmt;
use std::sync::Arc;

use super::graph::enumerate_exchange_graph;
use crate::algebra::Algebra;
use crate::field::Field;
use crate::homology::{global_dimension_probe, is_self_injective};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CmStatus {
    Finite,
    Infinite,
    Undecided,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CmRoute {
    TauTiltingFiniteEnumeration,
    FiniteGlobalDimension,
    RadicalSquareZeroDichotomy,
}

/// CM-τ-tilting finiteness verdict. No route currently proves `Infinite`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CmTauVerdict {
    pub status: CmStatus,
    pub route: Option<CmRoute>,
    pub witness: String,
}

impl fmt::Display for CmStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CmStatus::Finite => "Finite",
            CmStatus::Infinite => "Infinite",
            CmStatus::Undecided => "Undecided",
        })
    }
}

impl fmt::Display for CmRoute {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CmRoute::TauTiltingFiniteEnumeration => "tau-tilting-finite-enumeration",
            CmRoute::FiniteGlobalDimension => "finite-global-dimension",
            CmRoute::RadicalSquareZeroDichotomy => "radical-square-zero-dichotomy",
        })
    }
}

/// Cheap routes first: finite global dimension, then the radical square
/// zero dichotomy, then a budgeted enumeration.
pub fn cm_tau_finiteness<F: Field>(
    algebra: &Arc<Algebra<F>>,
    budget: usize,
    bound: usize,
) -> CmTauVerdict {
    let finite = |route, witness: String| CmTauVerdict {
        status: CmStatus::Finite,
        route: Some(route),
        witness,
    };
    if let Some(d) = global_dimension_probe(algebra, bound) {
        return finite(
            CmRoute::FiniteGlobalDimension,
            format!("global dimension {d}: GP modules are projective"),
        );
    }
    let enumerate = || enumerate_exchange_graph(algebra, budget.max(1)).ok().filter(|g| g.complete);
    if algebra.is_radical_square_zero() {
        if !is_self_injective(algebra) {
            return finite(
                CmRoute::RadicalSquareZeroDichotomy,
                "radical square zero and not self-injective: CM-free".into(),
            );
        }
        if let Some(g) = enumerate() {
            return finite(
                CmRoute::RadicalSquareZeroDichotomy,
                format!("radical square zero and self-injective: {} support τ-tilting pairs", g.node_count()),
            );
        }
        return CmTauVerdict {
            status: CmStatus::Undecided,
            route: None,
            witness: format!("self-injective radical square zero, enumeration exceeded {budget} nodes"),
        };
    }
    if let Some(g) = enumerate() {
        return finite(
            CmRoute::TauTiltingFiniteEnumeration,
            format!("{} support τ-tilting pairs", g.node_count()),
        );
    }
    CmTauVerdict {
        status: CmStatus::Undecided,
        route: None,
        witness: format!("infinite global dimension up to {bound}, enumeration exceeded {budget} nodes"),
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::EX_36;
    use super::*;
    use crate::rep::tests::{alg, EX_3E};

    #[test]
    fn routes() {
        let k = alg("vertices: 1 2\narrow a: 1 -> 2\narrow b: 1 -> 2\n");
        let v = cm_tau_finiteness(&k, 50, 8);
        assert_eq!((v.status, v.route), (CmStatus::Finite, Some(CmRoute::FiniteGlobalDimension)));
        let v = cm_tau_finiteness(&alg(EX_3E), 1000, 8);
        assert_eq!((v.status, v.route), (CmStatus::Finite, Some(CmRoute::RadicalSquareZeroDichotomy)));
        let v = cm_tau_finiteness(&alg(EX_36), 1000, 8);
        assert_eq!(v.route, Some(CmRoute::TauTiltingFiniteEnumeration));
        assert!(v.witness.starts_with("24 "));
        let v = cm_tau_finiteness(&alg(EX_36), 10, 8);
        assert_eq!(v.status, CmStatus::Undecided);
        let rad2 = alg("vertices: 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 1\narrow c: 2 -> 3\nrelation: a*b\nrelation: b*a\nrelation: a*c\n");
        let v = cm_tau_finiteness(&rad2, 1, 8);
        assert_eq!(v.route, Some(CmRoute::RadicalSquareZeroDichotomy));
    }
}
