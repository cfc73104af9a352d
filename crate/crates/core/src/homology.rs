//! Presentations, syzygies, the functors `(-)*`, `Tr`, `D`, `τ`, `τ⁻¹`, `ν`,
//! Ext groups, homological dimension probes and Gorenstein verdicts.

use std::fmt;
use std::sync::Arc;

use crate::algebra::Algebra;
use crate::field::Field;
use crate::linalg::Matrix;
use crate::rep::{ModuleMap, Representation};

pub const DEFAULT_EXT_BOUND: usize = 12;

/// `⊕ P(v)` over the given vertex list, in that order.
pub fn projective_sum<F: Field>(alg: &Arc<Algebra<F>>, verts: &[usize]) -> Representation<F> {
    let ps: Vec<_> = verts
        .iter()
        .map(|&v| Representation::projective(alg, v))
        .collect();
    Representation::direct_sum(alg, &ps)
}

/// A map `⊕_j P(source_j) -> ⊕_i P(target_i)`. Entry `(i, j)` is the element
/// `x ∈ e_{t_i} Λ e_{s_j}` acting by left multiplication.
#[derive(Clone, Debug)]
pub struct ProjMap<F: Field> {
    pub algebra: Arc<Algebra<F>>,
    pub source: Vec<usize>,
    pub target: Vec<usize>,
    pub entries: Vec<Vec<Vec<F>>>,
}

impl<F: Field> ProjMap<F> {
    pub fn to_module_map(&self) -> ModuleMap<F> {
        let alg = &self.algebra;
        let blocks = (0..alg.vertex_count())
            .map(|u| {
                let rows: usize = self.target.iter().map(|&t| alg.pair_basis(t, u).len()).sum();
                let cols: usize = self.source.iter().map(|&s| alg.pair_basis(s, u).len()).sum();
                let mut m: Matrix<F> = Matrix::zeros(rows, cols);
                let mut r0 = 0;
                for (i, &t) in self.target.iter().enumerate() {
                    let trow = alg.pair_basis(t, u);
                    let mut c0 = 0;
                    for (j, &s) in self.source.iter().enumerate() {
                        let scol = alg.pair_basis(s, u);
                        let x = &self.entries[i][j];
                        for (c, &b) in scol.iter().enumerate() {
                            for (m_idx, coef) in x.iter().enumerate() {
                                if coef.is_zero() {
                                    continue;
                                }
                                for (k, d) in alg.mul_basis(m_idx, b) {
                                    let r = trow.iter().position(|x| x == k).unwrap();
                                    m[(r0 + r, c0 + c)] =
                                        m[(r0 + r, c0 + c)].add_ref(&coef.mul_ref(d));
                                }
                            }
                        }
                        c0 += scol.len();
                    }
                    r0 += trow.len();
                }
                m
            })
            .collect();
        ModuleMap { blocks }
    }

    /// `Hom(-, Λ)` applied to the map: `(e_v Λ)* = Λ e_v ≅ e_v Λ^op`, and
    /// left multiplication by `x` becomes left multiplication by the reverse
    /// of `x` in the opposite direction.
    pub fn star(&self) -> ProjMap<F> {
        let op = self.algebra.opposite();
        let entries = (0..self.source.len())
            .map(|j| {
                (0..self.target.len())
                    .map(|i| self.algebra.to_opposite(&self.entries[i][j]))
                    .collect()
            })
            .collect();
        ProjMap {
            algebra: op,
            source: self.target.clone(),
            target: self.source.clone(),
            entries,
        }
    }
}

/// A projective cover `⊕ P(v) -> M`.
#[derive(Clone, Debug)]
pub struct ProjectiveCover<F: Field> {
    pub vertices: Vec<usize>,
    pub module: Representation<F>,
    pub map: ModuleMap<F>,
}

/// Offsets of each summand `P(v_i)` inside `⊕ P(v_i)` at vertex `u`.
fn offsets<F: Field>(alg: &Algebra<F>, verts: &[usize], u: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(verts.len());
    let mut acc = 0;
    for &v in verts {
        out.push(acc);
        acc += alg.pair_basis(v, u).len();
    }
    out
}

pub fn projective_cover<F: Field>(m: &Representation<F>) -> ProjectiveCover<F> {
    let alg = m.algebra().clone();
    let rad = m.radical_basis();
    let mut vertices = Vec::new();
    let mut parts = Vec::new();
    for v in 0..alg.vertex_count() {
        let q = rad[v].cokernel_projection();
        if q.rows() == 0 {
            continue;
        }
        let section = q
            .solve(&Matrix::identity(q.rows()))
            .expect("cokernel projection is surjective");
        for c in 0..section.cols() {
            vertices.push(v);
            parts.push(m.map_from_projective(v, &section.column(c)));
        }
    }
    let module = projective_sum(&alg, &vertices);
    let map = ModuleMap::hstack(m.dims(), &parts);
    ProjectiveCover {
        vertices,
        module,
        map,
    }
}

/// `P1 -> P0 -> M -> 0` with `P0 -> M` a projective cover and `P1` a cover
/// of its kernel.
#[derive(Clone, Debug)]
pub struct Presentation<F: Field> {
    pub p1: Vec<usize>,
    pub p0: Vec<usize>,
    pub map: ProjMap<F>,
    pub cover: ModuleMap<F>,
}

/// Reads a module map between sums of indecomposable projectives as a
/// matrix of algebra elements.
pub fn proj_map_from_module_map<F: Field>(
    alg: &Arc<Algebra<F>>,
    source: &[usize],
    target: &[usize],
    f: &ModuleMap<F>,
) -> ProjMap<F> {
    let entries = (0..target.len())
        .map(|i| {
            (0..source.len())
                .map(|j| {
                    let s = source[j];
                    let t = target[i];
                    let col = offsets(alg, source, s)[j]
                        + alg
                            .pair_basis(s, s)
                            .iter()
                            .position(|&k| k == alg.vertex_basis_index(s))
                            .unwrap();
                    let r0 = offsets(alg, target, s)[i];
                    let len = alg.pair_basis(t, s).len();
                    let coords: Vec<F> = (0..len).map(|r| f.blocks[s][(r0 + r, col)].clone()).collect();
                    alg.from_pair_coordinates(t, s, &coords)
                })
                .collect()
        })
        .collect();
    ProjMap {
        algebra: alg.clone(),
        source: source.to_vec(),
        target: target.to_vec(),
        entries,
    }
}

pub fn minimal_presentation<F: Field>(m: &Representation<F>) -> Presentation<F> {
    let alg = m.algebra().clone();
    let c0 = projective_cover(m);
    let (k, incl) = c0.map.kernel(&c0.module);
    let c1 = projective_cover(&k);
    let f = incl.compose(&c1.map);
    let map = proj_map_from_module_map(&alg, &c1.vertices, &c0.vertices, &f);
    Presentation {
        p1: c1.vertices,
        p0: c0.vertices,
        map,
        cover: c0.map,
    }
}

/// `Ω M`: the kernel of the projective cover.
pub fn syzygy<F: Field>(m: &Representation<F>) -> Representation<F> {
    let c = projective_cover(m);
    c.map.kernel(&c.module).0
}

/// Terms of a minimal projective resolution: `syzygies[k] = Ω^k M` and
/// `covers[k]` covers `Ω^k M`, with `Ω^{k+1} M ⊆ covers[k]`.
struct Resolution<F: Field> {
    syzygies: Vec<Representation<F>>,
    covers: Vec<ProjectiveCover<F>>,
    inclusions: Vec<ModuleMap<F>>,
}

fn resolve<F: Field>(m: &Representation<F>, steps: usize) -> Resolution<F> {
    let mut res = Resolution {
        syzygies: vec![m.clone()],
        covers: Vec::new(),
        inclusions: Vec::new(),
    };
    for _ in 0..steps {
        let cur = res.syzygies.last().unwrap();
        if cur.is_zero() {
            break;
        }
        let c = projective_cover(cur);
        let (k, incl) = c.map.kernel(&c.module);
        res.covers.push(c);
        res.inclusions.push(incl);
        res.syzygies.push(k);
    }
    res
}

/// `dim Ext^i(M, N)` for `i = 1..=max`.
pub fn ext_dims<F: Field>(m: &Representation<F>, n: &Representation<F>, max: usize) -> Vec<usize> {
    let res = resolve(m, max);
    (1..=max)
        .map(|i| {
            let Some(omega) = res.syzygies.get(i) else {
                return 0;
            };
            if omega.is_zero() {
                return 0;
            }
            let hom = omega.hom_dim(n);
            if hom == 0 {
                return 0;
            }
            let p = &res.covers[i - 1].module;
            let restricted: Vec<Vec<F>> = p
                .hom(n)
                .basis
                .iter()
                .map(|f| f.compose(&res.inclusions[i - 1]).flatten())
                .collect();
            let len = omega
                .dims()
                .iter()
                .zip(n.dims())
                .map(|(a, b)| a * b)
                .sum();
            hom - Matrix::from_columns(len, &restricted).rank()
        })
        .collect()
}

pub fn ext_dim<F: Field>(m: &Representation<F>, n: &Representation<F>, i: usize) -> usize {
    assert!(i >= 1, "Ext degree must be positive");
    ext_dims(m, n, i)[i - 1]
}

/// `M* = Hom(M, Λ)` as a module over `Λ^op`. At vertex `i` it is
/// `Hom(M, P(i))`; the reversed arrow of `a: j -> i` acts by composing with
/// left multiplication `P(i) -> P(j)` by `a`.
pub fn star<F: Field>(m: &Representation<F>) -> Representation<F> {
    let alg = m.algebra().clone();
    let op = alg.opposite();
    let n = alg.vertex_count();
    let homs: Vec<_> = (0..n)
        .map(|i| m.hom(&Representation::projective(&alg, i)))
        .collect();
    let dims: Vec<usize> = homs.iter().map(|h| h.dim()).collect();
    let maps = (0..alg.arrow_count())
        .map(|a| {
            let arr = alg.arrow(a);
            let (j, i) = (arr.source, arr.target);
            let left = ProjMap {
                algebra: alg.clone(),
                source: vec![i],
                target: vec![j],
                entries: vec![vec![alg.basis_element(alg.arrow_basis_index(a))]],
            }
            .to_module_map();
            let images: Vec<ModuleMap<F>> =
                homs[i].basis.iter().map(|h| left.compose(h)).collect();
            let mut cols = Vec::with_capacity(images.len());
            for img in &images {
                cols.push(
                    homs[j]
                        .coordinates(img)
                        .expect("composite lands in Hom(M, P(j))"),
                );
            }
            Matrix::from_columns(dims[j], &cols)
        })
        .collect();
    Representation::new(op, dims, maps).expect("M* satisfies the opposite relations")
}

/// `Tr M = coker(P0* -> P1*)` for a minimal presentation of `M`. Projective
/// summands of `M` contribute nothing.
pub fn transpose<F: Field>(m: &Representation<F>) -> Representation<F> {
    let alg = m.algebra();
    let op = alg.opposite();
    if m.is_zero() {
        return Representation::zero(&op);
    }
    let pres = minimal_presentation(m);
    let dual_map = pres.map.star();
    let target = projective_sum(&op, &dual_map.target);
    dual_map.to_module_map().cokernel(&target).0
}

/// `τ = D Tr`.
pub fn tau<F: Field>(m: &Representation<F>) -> Representation<F> {
    transpose(m).dual()
}

/// `τ⁻¹ = Tr D`.
pub fn tau_inverse<F: Field>(m: &Representation<F>) -> Representation<F> {
    transpose(&m.dual())
}

/// `ν = D(-)*`.
pub fn nakayama<F: Field>(m: &Representation<F>) -> Representation<F> {
    star(m).dual()
}

/// Smallest `k ≤ bound` with `Ω^k M` projective.
pub fn projective_dimension<F: Field>(m: &Representation<F>, bound: usize) -> Option<usize> {
    let mut cur = m.clone();
    for k in 0..=bound {
        if cur.is_projective() {
            return Some(k);
        }
        if k < bound {
            cur = syzygy(&cur);
        }
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// `Λ_Λ`
    Right,
    /// `_ΛΛ`, i.e. the regular right module of `Λ^op`
    Left,
}

/// Injective dimension of `Λ` on one side, if at most `bound`.
pub fn injective_dimension_probe<F: Field>(
    alg: &Arc<Algebra<F>>,
    side: Side,
    bound: usize,
) -> Option<usize> {
    let key = format!("id:{side:?}:{bound}");
    alg.memo(&key, || match side {
        // id(Λ_Λ) = pd of D(Λ_Λ) over Λ^op
        Side::Right => projective_dimension(&Representation::regular(alg).dual(), bound),
        Side::Left => projective_dimension(&Representation::dual_regular(alg), bound),
    })
}

/// `max pd S(v)`, if at most `bound`.
pub fn global_dimension_probe<F: Field>(alg: &Arc<Algebra<F>>, bound: usize) -> Option<usize> {
    let key = format!("gldim:{bound}");
    alg.memo(&key, || {
        let mut best = 0;
        for v in 0..alg.vertex_count() {
            best = best.max(projective_dimension(&Representation::simple(alg, v), bound)?);
        }
        Some(best)
    })
}

/// Both-sided injective dimension `d` of `Λ` when both probes succeed.
pub fn gorenstein_dimension<F: Field>(alg: &Arc<Algebra<F>>, bound: usize) -> Option<usize> {
    let r = injective_dimension_probe(alg, Side::Right, bound)?;
    let l = injective_dimension_probe(alg, Side::Left, bound)?;
    Some(r.max(l))
}

/// `P(i) ≅ I(σ(i))` for every vertex, with explicit isomorphisms.
#[derive(Clone, Debug)]
pub struct SelfInjectiveCertificate<F: Field> {
    pub permutation: Vec<usize>,
    pub isos: Vec<ModuleMap<F>>,
}

pub fn self_injective_certificate<F: Field>(
    alg: &Arc<Algebra<F>>,
) -> Option<SelfInjectiveCertificate<F>> {
    let n = alg.vertex_count();
    let injs: Vec<_> = (0..n).map(|j| Representation::injective(alg, j)).collect();
    let mut permutation = Vec::new();
    let mut isos = Vec::new();
    for i in 0..n {
        let p = Representation::projective(alg, i);
        let (j, f) = injs
            .iter()
            .enumerate()
            .filter(|(j, _)| !permutation.contains(j))
            .find_map(|(j, inj)| p.indecomposable_iso(inj).map(|f| (j, f)))?;
        permutation.push(j);
        isos.push(f);
    }
    Some(SelfInjectiveCertificate { permutation, isos })
}

pub fn is_self_injective<F: Field>(alg: &Arc<Algebra<F>>) -> bool {
    self_injective_certificate(alg).is_some()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GpStatus {
    CertifiedGP,
    CertifiedNotGP,
    VanishesUpToBound,
}

/// Which module carries a nonzero Ext: `M` against `Λ`, or `M*` against `Λ^op`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExtSide {
    Module,
    Dual,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GpCertificate {
    Projective,
    GorensteinDimension(usize),
    /// `Ω^j M ≅ Ω^k M` up to projective summands
    Periodicity { k: usize, j: usize },
    ExtWitness { degree: usize, side: ExtSide },
    NotReflexive,
    /// no certificate either way
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GpVerdict {
    pub status: GpStatus,
    pub bound_used: usize,
    pub certificate: GpCertificate,
    /// for decomposable input: labels of the summands that are not GP
    pub failing_summands: Vec<String>,
}

impl GpVerdict {
    pub fn is_gp(&self) -> bool {
        self.status == GpStatus::CertifiedGP
    }

    pub fn is_not_gp(&self) -> bool {
        self.status == GpStatus::CertifiedNotGP
    }

    fn simple(status: GpStatus, bound: usize, certificate: GpCertificate) -> Self {
        GpVerdict {
            status,
            bound_used: bound,
            certificate,
            failing_summands: Vec::new(),
        }
    }
}

impl fmt::Display for GpStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GpStatus::CertifiedGP => "CertifiedGP",
            GpStatus::CertifiedNotGP => "CertifiedNotGP",
            GpStatus::VanishesUpToBound => "VanishesUpToBound",
        };
        f.write_str(s)
    }
}

/// Stable part of a module: the sum of its non-projective summands.
pub fn stable_part<F: Field>(m: &Representation<F>) -> Representation<F> {
    let d = m.decompose().expect("decomposition of a syzygy");
    let parts: Vec<Representation<F>> = d
        .pieces
        .iter()
        .filter(|p| d.summands[p.class].projective_vertex.is_none())
        .map(|p| p.module.clone())
        .collect();
    Representation::direct_sum(m.algebra(), &parts)
}

pub(crate) fn indecomposable_gp_verdict<F: Field>(m: &Representation<F>, bound: usize) -> GpVerdict {
    let alg = m.algebra();
    let gor = gorenstein_dimension(alg, bound);
    let checks = gor.map_or(bound, |d| d.min(bound));
    let mstar = star(m);
    let mss = star(&mstar);
    if !m.is_isomorphic(&mss) {
        return GpVerdict::simple(GpStatus::CertifiedNotGP, bound, GpCertificate::NotReflexive);
    }
    if checks > 0 {
        let lam = Representation::regular(alg);
        for (i, e) in ext_dims(m, &lam, checks).into_iter().enumerate() {
            if e != 0 {
                return GpVerdict::simple(
                    GpStatus::CertifiedNotGP,
                    bound,
                    GpCertificate::ExtWitness { degree: i + 1, side: ExtSide::Module },
                );
            }
        }
        let lam_op = Representation::regular(&alg.opposite());
        for (i, e) in ext_dims(&mstar, &lam_op, checks).into_iter().enumerate() {
            if e != 0 {
                return GpVerdict::simple(
                    GpStatus::CertifiedNotGP,
                    bound,
                    GpCertificate::ExtWitness { degree: i + 1, side: ExtSide::Dual },
                );
            }
        }
    }
    if let Some(d) = gor {
        return GpVerdict::simple(GpStatus::CertifiedGP, bound, GpCertificate::GorensteinDimension(d));
    }
    let mut cur = m.clone();
    for j in 1..=bound {
        cur = stable_part(&syzygy(&cur));
        if cur.is_zero() {
            break;
        }
        if cur.dims() == m.dims() && cur.is_isomorphic(m) {
            return GpVerdict::simple(
                GpStatus::CertifiedGP,
                bound,
                GpCertificate::Periodicity { k: 0, j },
            );
        }
    }
    GpVerdict::simple(GpStatus::VanishesUpToBound, bound, GpCertificate::None)
}

/// Gorenstein-projectivity verdict, decided summand by summand.
pub fn gp_verdict<F: Field>(m: &Representation<F>, bound: usize) -> GpVerdict {
    assert!(bound >= 1, "ext bound must be positive");
    let d = m.decompose().expect("decomposition for GP verdict");
    let mut verdicts = Vec::new();
    for s in d.summands.iter().filter(|s| s.projective_vertex.is_none()) {
        verdicts.push((s.module.label(), indecomposable_gp_verdict(&s.module, bound)));
    }
    combine_verdicts(verdicts, bound)
}

pub(crate) fn combine_verdicts(verdicts: Vec<(String, GpVerdict)>, bound: usize) -> GpVerdict {
    if verdicts.is_empty() {
        return GpVerdict::simple(GpStatus::CertifiedGP, bound, GpCertificate::Projective);
    }
    let failing: Vec<String> = verdicts
        .iter()
        .filter(|(_, v)| v.is_not_gp())
        .map(|(l, _)| l.clone())
        .collect();
    if let Some((_, v)) = verdicts.iter().find(|(_, v)| v.is_not_gp()) {
        return GpVerdict {
            failing_summands: failing,
            ..v.clone()
        };
    }
    if let Some((_, v)) = verdicts
        .iter()
        .find(|(_, v)| v.status == GpStatus::VanishesUpToBound)
    {
        return v.clone();
    }
    // all certified: report the weakest certificate
    let cert = verdicts
        .iter()
        .map(|(_, v)| v.certificate.clone())
        .max_by_key(|c| match c {
            GpCertificate::Projective => (0, 0),
            GpCertificate::GorensteinDimension(d) => (1, *d),
            GpCertificate::Periodicity { j, .. } => (2, *j),
            _ => (3, 0),
        })
        .unwrap();
    GpVerdict::simple(GpStatus::CertifiedGP, bound, cert)
}

/// `N` is Gorenstein injective iff `D N` is Gorenstein projective over `Λ^op`.
pub fn gi_verdict<F: Field>(n: &Representation<F>, bound: usize) -> GpVerdict {
    gp_verdict(&n.dual(), bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_algebra;
    use crate::field::Rational;

    fn alg(text: &str) -> Arc<Algebra<Rational>> {
        parse_algebra(text).unwrap().build::<Rational>().unwrap()
    }

    const EX_3D: &str = "vertices: 1 2 3\narrow a1: 1 -> 2\narrow a2: 2 -> 1\narrow b2: 2 -> 3\nrelation: a1*a2\nrelation: a2*a1\n";
    const EX_3E: &str = "vertices: 1 2 3\narrow a1: 1 -> 2\narrow a2: 2 -> 3\narrow a3: 3 -> 1\nrelation: a1*a2\nrelation: a2*a3\nrelation: a3*a1\n";
    const EX_61: &str = "vertices: 1 2 3 4\narrow al: 1 -> 2\narrow be: 2 -> 4\narrow ga: 1 -> 3\narrow et: 3 -> 4\narrow pi: 4 -> 1\nrelation: al*be - ga*et\nrelation: be*pi\nrelation: pi*al\nrelation: et*pi\nrelation: pi*ga\n";

    #[test]
    fn presentations() {
        let a = alg(EX_3E);
        let p = minimal_presentation(&Representation::projective(&a, 0));
        assert!(p.p1.is_empty());
        assert_eq!(p.p0, vec![0]);
        let s = minimal_presentation(&Representation::simple(&a, 0));
        assert_eq!((s.p0.clone(), s.p1.clone()), (vec![0], vec![1]));
        let b = alg(EX_61);
        let s = minimal_presentation(&Representation::simple(&b, 0));
        assert_eq!((s.p0.clone(), s.p1.clone()), (vec![0], vec![1, 2]));
    }

    #[test]
    fn syzygies_of_3e_cycle() {
        let a = alg(EX_3E);
        let s1 = Representation::simple(&a, 0);
        let o1 = syzygy(&s1);
        assert!(o1.is_isomorphic(&Representation::simple(&a, 1)));
        let o3 = syzygy(&syzygy(&o1));
        assert!(o3.is_isomorphic(&s1));
        assert!(syzygy(&Representation::projective(&a, 2)).is_zero());
    }

    #[test]
    fn star_of_projectives() {
        for text in [EX_3D, EX_61] {
            let a = alg(text);
            let op = a.opposite();
            for i in 0..a.vertex_count() {
                let p = Representation::projective(&a, i);
                let ps = star(&p);
                assert!(ps.is_isomorphic(&Representation::projective(&op, i)));
                assert!(star(&ps).is_isomorphic(&p));
            }
        }
    }

    #[test]
    fn star_of_simple_over_3e() {
        // Hom(S(1), Λ): S(1) is the socle of P(3) = 3/1 only
        let a = alg(EX_3E);
        assert_eq!(star(&Representation::simple(&a, 0)).total_dim(), 1);
    }

    #[test]
    fn transpose_and_tau_over_3e() {
        let a = alg(EX_3E);
        let s1 = Representation::simple(&a, 0);
        let tr = transpose(&s1);
        // coker(Λ^op e1 -> Λ^op e2): the op-simple at vertex 2
        assert_eq!(tr.dims(), &[0, 1, 0]);
        assert!(tau(&s1).is_isomorphic(&Representation::simple(&a, 1)));
        assert!(transpose(&tr).is_isomorphic(&s1));
        assert!(tau_inverse(&tau(&s1)).is_isomorphic(&s1));
    }

    #[test]
    fn tau_of_projective_and_nakayama() {
        let a = alg(EX_3D);
        for i in 0..3 {
            let p = Representation::projective(&a, i);
            assert!(tau(&p).is_zero());
            assert!(nakayama(&p).is_isomorphic(&Representation::injective(&a, i)));
        }
    }

    #[test]
    fn tau_of_simple_over_local_selfinjective() {
        let a = alg("vertices: 1\narrow x: 1 -> 1\nrelation: x*x\n");
        let s = Representation::simple(&a, 0);
        assert!(tau(&s).is_isomorphic(&s));
    }

    #[test]
    fn dimension_probes() {
        let a = alg(EX_3D);
        assert_eq!(injective_dimension_probe(&a, Side::Right, 12), Some(1));
        assert_eq!(injective_dimension_probe(&a, Side::Left, 12), Some(1));
        assert!(!is_self_injective(&a));
        let b = alg(EX_61);
        assert_eq!(gorenstein_dimension(&b, 12), Some(1));
        let e = alg(EX_3E);
        assert!(is_self_injective(&e));
        assert_eq!(gorenstein_dimension(&e, 12), Some(0));
        assert_eq!(global_dimension_probe(&e, 12), None);
        let ss = alg("vertices: 1 2\n");
        assert_eq!(global_dimension_probe(&ss, 12), Some(0));
        assert_eq!(gorenstein_dimension(&ss, 12), Some(0));
        let a2 = alg("vertices: 1 2\narrow x: 1 -> 2\n");
        assert!(!is_self_injective(&a2));
        assert_eq!(global_dimension_probe(&a2, 12), Some(1));
    }

    #[test]
    fn ext_examples() {
        let e = alg(EX_3E);
        let lam = Representation::regular(&e);
        assert_eq!(ext_dim(&Representation::simple(&e, 0), &lam, 1), 0);
        let s1 = Representation::simple(&e, 0);
        // Ext^1(S1, S2) = 1 for the arrow 1 -> 2
        assert_eq!(ext_dim(&s1, &Representation::simple(&e, 1), 1), 1);
        assert_eq!(ext_dim(&Representation::projective(&e, 0), &s1, 1), 0);
    }

    #[test]
    fn gp_verdicts_of_examples() {
        let e = alg(EX_3E);
        let v = gp_verdict(&Representation::simple(&e, 0), 12);
        assert_eq!(v.status, GpStatus::CertifiedGP);
        assert_eq!(v.certificate, GpCertificate::GorensteinDimension(0));

        let d = alg(EX_3D);
        let p2 = Representation::projective(&d, 1);
        let two_three = p2
            .quotient(&[Matrix::identity(1), Matrix::zeros(1, 0), Matrix::zeros(1, 0)])
            .0;
        assert_eq!(two_three.label(), "2/3");
        let v = gp_verdict(&two_three, 12);
        assert_eq!(v.certificate, GpCertificate::GorensteinDimension(1));

        // over the algebra 61, 1/3 = P(1)/S(2) has pd 1 and is not GP
        let b = alg(EX_61);
        let p1 = Representation::projective(&b, 0);
        let quotient_by_2 = {
            let rad = p1.radical_basis();
            let mut bases: Vec<Matrix<Rational>> = p1.dims().iter().map(|&n| Matrix::zeros(n, 0)).collect();
            bases[1] = rad[1].clone();
            bases[3] = rad[3].clone();
            p1.quotient(&bases).0
        };
        assert_eq!(quotient_by_2.label(), "1/3");
        let v = gp_verdict(&quotient_by_2, 12);
        assert_eq!(v.status, GpStatus::CertifiedNotGP);
        assert!(gp_verdict(&Representation::simple(&b, 0), 12).is_gp());
    }

    #[test]
    fn periodicity_certificate_without_gorenstein_probe() {
        // with bound 0 for the probe impossible; emulate by a non-Gorenstein
        // check: over the self-injective cycle, S(1) has period 3
        let e = alg(EX_3E);
        let s1 = Representation::simple(&e, 0);
        let mut cur = s1.clone();
        for _ in 0..3 {
            cur = stable_part(&syzygy(&cur));
        }
        assert!(cur.is_isomorphic(&s1));
    }

    #[test]
    fn dual_swaps_gp_and_gi() {
        let d = alg(EX_3D);
        for i in 0..3 {
            for m in [Representation::simple(&d, i), Representation::injective(&d, i)] {
                assert_eq!(gp_verdict(&m, 12).status, gi_verdict(&m.dual(), 12).status);
            }
        }
    }
}
