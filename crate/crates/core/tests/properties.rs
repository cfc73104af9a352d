use std::sync::Arc;

use gptau_core::homology::{ext_dims, nakayama, tau, tau_inverse, transpose};
use gptau_core::registry::load;
use gptau_core::rep::Representation;
use gptau_core::serialize::{rep_from_json, rep_to_json};
use gptau_core::tautilt::{enumerate_exchange_graph, is_tau_rigid, mutate};
use gptau_core::{Algebra, Fp, QAlgebra, QRep};
use proptest::prelude::*;

const NAMES: [&str; 8] = ["3d", "3e", "36", "61", "kronecker", "a2", "rad2", "local"];

fn algebra(i: usize) -> Arc<QAlgebra> {
    load(NAMES[i % NAMES.len()]).unwrap()
}

/// `P(v) / x Λ` for `x ∈ e_w Λ e_v` given by `coeffs`, plus an optional simple.
fn cyclic(a: &Arc<QAlgebra>, v: usize, w: usize, coeffs: &[i64], extra: Option<usize>) -> QRep {
    let n = a.vertex_count();
    let (v, w) = (v % n, w % n);
    let p = Representation::projective(a, v);
    let x: Vec<_> = (0..p.dim_at(w)).map(|k| gptau_core::Rational::from_integer(coeffs[k % coeffs.len()].into())).collect();
    let (m, _) = p.map_from_projective(w, &x).cokernel(&p);
    match extra {
        Some(s) => m.direct_sum_with(&Representation::simple(a, s % n)),
        None => m,
    }
}

fn module_strategy() -> impl Strategy<Value = (usize, usize, usize, Vec<i64>, Option<usize>)> {
    (0..NAMES.len(), 0..4usize, 0..4usize, prop::collection::vec(-2i64..=2, 1..4), prop::option::of(0..4usize))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn yoneda((i, v, w, c, e) in module_strategy(), u in 0..4usize) {
        let a = algebra(i);
        let m = cyclic(&a, v, w, &c, e);
        let u = u % a.vertex_count();
        prop_assert_eq!(Representation::projective(&a, u).hom_dim(&m), m.dim_at(u));
        prop_assert_eq!(m.hom_dim(&Representation::injective(&a, u)), m.dim_at(u));
    }

    #[test]
    fn duality_is_involutive((i, v, w, c, e) in module_strategy()) {
        let a = algebra(i);
        let m = cyclic(&a, v, w, &c, e);
        let dd = m.dual().dual();
        prop_assert!(Arc::ptr_eq(dd.algebra(), &a));
        prop_assert!(dd.is_isomorphic(&m));
        prop_assert_eq!(m.dual().hom_dim(&m.dual()), m.hom_dim(&m));
    }

    #[test]
    fn decomposition_accounts_for_every_dimension((i, v, w, c, e) in module_strategy()) {
        let a = algebra(i);
        let m = cyclic(&a, v, w, &c, e);
        let d = m.decompose().unwrap();
        prop_assert!(d.verify(&m));
        let mut total = vec![0; a.vertex_count()];
        for s in &d.summands {
            for (t, x) in total.iter_mut().zip(s.module.dims()) {
                *t += x * s.multiplicity;
            }
        }
        prop_assert_eq!(total, m.dims().to_vec());
    }

    #[test]
    fn json_round_trip((i, v, w, c, e) in module_strategy()) {
        let a = algebra(i);
        let m = cyclic(&a, v, w, &c, e);
        let back = rep_from_json(&a, &rep_to_json(&m)).unwrap();
        prop_assert_eq!(back.fingerprint(), m.fingerprint());
    }

    #[test]
    fn projectives_have_no_higher_ext((i, v, w, c, e) in module_strategy(), u in 0..4usize) {
        let a = algebra(i);
        let m = cyclic(&a, v, w, &c, e);
        let p = Representation::projective(&a, u % a.vertex_count());
        let ext = ext_dims(&p, &m, 3);
        prop_assert!(ext.iter().all(|&x| x == 0), "{:?}", ext);
        let inj = nakayama(&p);
        prop_assert!(inj.is_injective());
        let ext = ext_dims(&m, &inj, 3);
        prop_assert!(ext.iter().all(|&x| x == 0), "{:?}", ext);
    }
}

/// On every indecomposable τ-rigid module of the complete examples: the
/// module is rigid, and off the projectives `τ⁻¹τ M ≅ M` and `Tr Tr M ≅ M`.
#[test]
fn translate_and_transpose_on_tau_rigid_indecomposables() {
    for name in ["3d", "3e", "36", "61", "a2", "rad2", "local"] {
        let a: Arc<QAlgebra> = load(name).unwrap();
        let g = enumerate_exchange_graph(&a, 1000).unwrap();
        assert!(g.complete, "{name}");
        for m in g.indecomposable_tau_rigid() {
            assert!(is_tau_rigid(&m));
            assert_eq!(ext_dims(&m, &m, 1)[0], 0, "{name}: Ext¹({0}, {0})", m.label());
            if m.is_projective() {
                assert!(tau(&m).is_zero());
                continue;
            }
            assert!(tau_inverse(&tau(&m)).is_isomorphic(&m), "{name}: τ⁻¹τ {}", m.label());
            assert!(transpose(&transpose(&m)).is_isomorphic(&m), "{name}: Tr Tr {}", m.label());
        }
    }
}

/// Mutating along an edge and back at the new position returns to the node.
#[test]
fn mutation_is_an_involution_on_edges() {
    for name in ["3d", "3e", "61"] {
        let a: Arc<QAlgebra> = load(name).unwrap();
        let g = enumerate_exchange_graph(&a, 1000).unwrap();
        for e in &g.edges {
            let down = mutate(&g.nodes[e.from], e.from_position).unwrap();
            assert!(down.pair.is_isomorphic(&g.nodes[e.to]), "{name}: edge {e:?}");
            let up = mutate(&g.nodes[e.to], e.to_position).unwrap();
            assert!(up.pair.is_isomorphic(&g.nodes[e.from]), "{name}: edge {e:?} reversed");
        }
    }
}

#[test]
fn counts_do_not_depend_on_the_field() {
    for name in ["3d", "3e", "36", "61"] {
        let q = enumerate_exchange_graph(&load::<gptau_core::Rational>(name).unwrap(), 1000).unwrap();
        let f: Arc<Algebra<Fp<5>>> = load(name).unwrap();
        let f = enumerate_exchange_graph(&f, 1000).unwrap();
        assert_eq!((q.node_count(), q.edge_count()), (f.node_count(), f.edge_count()), "{name}");
    }
}
