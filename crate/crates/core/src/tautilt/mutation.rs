use super::{dagger_with_positions, RigidPair, SupportTauTiltingPair};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::rep::{ModuleMap, Representation};

/// Whether the exchanged pair has the smaller (`Down`) or larger (`Up`)
/// torsion class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Down,
    Up,
}

#[derive(Clone, Debug)]
pub struct Mutation<F: Field> {
    pub pair: SupportTauTiltingPair<F>,
    pub direction: Direction,
    /// position of the new summand or vertex in `pair`
    pub position: usize,
}

/// Exchanges the summand at `position`.
pub fn mutate<F: Field>(pair: &SupportTauTiltingPair<F>, position: usize) -> Result<Mutation<F>> {
    if position >= pair.size() {
        return Err(Error::InvalidPair(format!(
            "position {position} out of range for {}",
            pair.bracket_label()
        )));
    }
    if let Some((next, pos)) = left_mutation(pair, position)? {
        return Ok(Mutation { pair: next, direction: Direction::Down, position: pos });
    }
    // upward mutation is downward mutation on the other side of the dagger
    let (d, map) = dagger_with_positions(pair)?;
    let d = d.into_support_tau_tilting()?;
    let (dm, dpos) = left_mutation(&d, map[position])?.ok_or_else(|| {
        Error::Verification(format!(
            "{} admits no mutation at position {position}",
            pair.bracket_label()
        ))
    })?;
    let (back, back_map) = dagger_with_positions(&dm)?;
    let back = back.into_support_tau_tilting()?;
    if !super::graph::fac_contains(&back, pair) || super::graph::fac_contains(pair, &back) {
        return Err(Error::Verification("upward mutation is not strictly larger".into()));
    }
    Ok(Mutation { pair: back, direction: Direction::Up, position: back_map[dpos] })
}

/// Left mutation at a summand `X` with `X ∉ Fac U`; `None` when the
/// position is a vertex of `P` or `X ∈ Fac U`.
pub(crate) fn left_mutation<F: Field>(
    pair: &SupportTauTiltingPair<F>,
    position: usize,
) -> Result<Option<(SupportTauTiltingPair<F>, usize)>> {
    let m = pair.summands().len();
    if position >= m {
        return Ok(None);
    }
    let alg = pair.algebra();
    let x = &pair.summands()[position];
    let others: Vec<usize> = (0..m).filter(|&i| i != position).collect();
    let u = Representation::direct_sum(
        alg,
        &others.iter().map(|&i| pair.summands()[i].clone()).collect::<Vec<_>>(),
    );
    if x.in_fac(&u) {
        return Ok(None);
    }
    // universal left add U-approximation X -> ⊕ U_i^{dim Hom(X, U_i)}
    let mut targets = Vec::new();
    let mut maps: Vec<ModuleMap<F>> = Vec::new();
    for &i in &others {
        let ui = &pair.summands()[i];
        for f in x.hom(ui).basis {
            targets.push(ui.clone());
            maps.push(f);
        }
    }
    let target = Representation::direct_sum(alg, &targets);
    let approx = if maps.is_empty() {
        ModuleMap::zero(x.dims(), target.dims())
    } else {
        ModuleMap::vstack(x.dims(), &maps)
    };
    let (coker, _) = approx.cokernel(&target);
    // the cokernel is Y^k ⊕ (something in add U); keep the part outside add U
    let mut fresh: Vec<Representation<F>> = Vec::new();
    if !coker.is_zero() {
        for s in coker.decompose()?.summands {
            if others
                .iter()
                .all(|&i| pair.summands()[i].dims() != s.module.dims()
                    || pair.summands()[i].indecomposable_iso(&s.module).is_none())
            {
                fresh.push(s.module);
            }
        }
    }
    let mut parts: Vec<(Representation<F>, Option<Representation<F>>)> = others
        .iter()
        .map(|&i| (pair.summands()[i].clone(), Some(pair.taus()[i].clone())))
        .collect();
    let mut p = pair.p().to_vec();
    let new_vertex = match fresh.len() {
        0 => {
            let supp = u.support();
            let candidates: Vec<usize> = (0..alg.vertex_count())
                .filter(|v| !supp.contains(v) && !p.contains(v))
                .collect();
            if candidates.len() != 1 {
                return Err(Error::Verification(format!(
                    "mutation of {} at {position}: {} candidate vertices for P",
                    pair.bracket_label(),
                    candidates.len()
                )));
            }
            p.push(candidates[0]);
            Some(candidates[0])
        }
        1 => {
            parts.push((fresh.pop().unwrap(), None));
            None
        }
        k => {
            return Err(Error::Verification(format!(
                "mutation of {} at {position}: cokernel has {k} new summands",
                pair.bracket_label()
            )))
        }
    };
    let (next, perm) = RigidPair::assemble(alg, parts, p)?;
    let next = next.into_support_tau_tilting().map_err(|e| {
        Error::Verification(format!("mutation of {} at {position}: {e}", pair.bracket_label()))
    })?;
    // Fac(next) ⊊ Fac(pair)
    if x.in_fac(&next.module()) || !fac_contains_module(pair, &next.module()) {
        return Err(Error::Verification("left mutation is not strictly smaller".into()));
    }
    let pos = match new_vertex {
        Some(v) => next.summands().len() + next.p().binary_search(&v).expect("new vertex"),
        None => perm[others.len()],
    };
    Ok(Some((next, pos)))
}

fn fac_contains_module<F: Field>(pair: &RigidPair<F>, m: &Representation<F>) -> bool {
    m.is_zero() || m.in_fac(&pair.module())
}

#[cfg(test)]
mod tests {
    use super::super::tests::{EX_36, LOCAL};
    use super::*;
    use crate::rep::tests::alg;

    fn top(text: &str) -> SupportTauTiltingPair<crate::Rational> {
        let a = alg(text);
        RigidPair::from_module(&Representation::regular(&a), &[])
            .unwrap()
            .into_support_tau_tilting()
            .unwrap()
    }

    #[test]
    fn mutate_top_of_36() {
        let t = top(EX_36);
        let a = t.algebra().clone();
        let p3 = Representation::projective(&a, 2);
        let pos = t.summand_position(&p3).unwrap();
        let mu = mutate(&t, pos).unwrap();
        assert_eq!(mu.direction, Direction::Down);
        assert!(mu.pair.summand_position(&p3).is_none());
        assert_eq!(mu.pair.summands().len(), 3);
        let back = mutate(&mu.pair, mu.position).unwrap();
        assert_eq!(back.direction, Direction::Up);
        assert!(back.pair.is_isomorphic(&t));
        assert_eq!(back.position, pos);
    }

    #[test]
    fn mutate_bottom() {
        let a = alg(EX_36);
        let bottom = RigidPair::from_module(&Representation::zero(&a), &[0, 1, 2])
            .unwrap()
            .into_support_tau_tilting()
            .unwrap();
        for pos in 0..3 {
            let mu = mutate(&bottom, pos).unwrap();
            assert_eq!(mu.direction, Direction::Up);
            assert_eq!(mu.pair.summands().len(), 1);
            assert!(mu.pair.summands()[0].is_isomorphic(&Representation::simple(&a, pos)));
        }
    }

    #[test]
    fn local_algebra_has_two_pairs() {
        let t = top(LOCAL);
        let mu = mutate(&t, 0).unwrap();
        assert!(mu.pair.summands().is_empty());
        assert_eq!(mu.pair.p(), &[0]);
        assert!(mutate(&mu.pair, 0).unwrap().pair.is_isomorphic(&t));
    }
}
