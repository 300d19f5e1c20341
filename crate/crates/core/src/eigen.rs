//! Eigen-structure of twisted Weyl elements on the reflection representation.
//!
//! Angles are stored as `t = θ/2π`. All eigenvectors of an element of order
//! `d` live over `Q(ζ_d)`; kernels are computed once per Galois orbit of
//! eigenvalues and transported by field automorphisms.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};
use std::sync::Arc;

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::Zero;

use crate::cyclo::{independent_subset, kernel, CycloContext, CycloElem, Ctx};
use crate::error::{Error, Result};
use crate::rootsys::{ClassParam, CoxeterDatum, GenSet, Mat, TwistedWeylElement, WeylElement};

/// `t = θ/2π`.
pub type Angle = Rational64;

/// A real subspace of `V`, given by a basis of conjugation-fixed vectors in
/// simple-root coordinates.
#[derive(Clone, Debug)]
pub struct Subspace {
    pub ctx: Ctx,
    pub basis: Vec<Vec<CycloElem>>,
}

impl Subspace {
    pub fn zero(ctx: &Ctx) -> Self {
        Subspace { ctx: ctx.clone(), basis: Vec::new() }
    }

    /// Span of `vecs` (an independent subset is kept).
    pub fn span(ctx: &Ctx, vecs: Vec<Vec<CycloElem>>) -> Self {
        let keep = independent_subset(&vecs);
        Subspace { ctx: ctx.clone(), basis: keep.into_iter().map(|i| vecs[i].clone()).collect() }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn sum(&self, o: &Subspace) -> Subspace {
        let mut v = self.basis.clone();
        v.extend(o.basis.iter().cloned());
        Subspace::span(&self.ctx, v)
    }

    /// Image under an integer matrix.
    pub fn transform(&self, m: &Mat) -> Subspace {
        Subspace { ctx: self.ctx.clone(), basis: self.basis.iter().map(|v| apply(m, v)).collect() }
    }

    pub fn contains(&self, v: &[CycloElem]) -> bool {
        let mut all = self.basis.clone();
        all.push(v.to_vec());
        crate::cyclo::rank(&all) == self.basis.len()
    }
}

/// `m·v` for an integer matrix and a cyclotomic vector.
pub fn apply(m: &Mat, v: &[CycloElem]) -> Vec<CycloElem> {
    let n = m.dim();
    let ctx = v[0].ctx().clone();
    (0..n)
        .map(|i| {
            let mut acc = CycloElem::zero(&ctx);
            for (j, x) in v.iter().enumerate() {
                let a = m.get(i, j);
                if a != 0 && !x.is_zero() {
                    acc = &acc + &scale_int(x, a);
                }
            }
            acc
        })
        .collect()
}

fn scale_int(x: &CycloElem, a: i64) -> CycloElem {
    if a == 1 {
        x.clone()
    } else {
        x.scale(&num_rational::BigRational::from_integer(a.into()))
    }
}

/// `(α, v)` for an integer vector `α` and a cyclotomic vector `v`.
pub fn pairing(datum: &CoxeterDatum, alpha: &[i64], v: &[CycloElem]) -> CycloElem {
    let g = datum.form();
    let ctx = v[0].ctx().clone();
    let mut acc = CycloElem::zero(&ctx);
    for (j, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let c: i64 = (0..alpha.len()).map(|i| alpha[i] * g[i][j]).sum();
        if c != 0 {
            acc = &acc + &scale_int(x, c);
        }
    }
    acc
}

fn is_orthogonal(datum: &CoxeterDatum, alpha: &[i64], s: &Subspace) -> bool {
    s.basis.iter().all(|v| pairing(datum, alpha, v).is_zero())
}

/// Eigen-data of one element: its order, the field, and the complex
/// eigenspaces of every `d`-th root of unity.
pub struct EigenSystem {
    pub datum: Arc<CoxeterDatum>,
    pub element: TwistedWeylElement,
    pub matrix: Mat,
    pub d: u64,
    pub ctx: Ctx,
    kernels: Vec<Vec<Vec<CycloElem>>>,
}

impl EigenSystem {
    pub fn new(datum: &Arc<CoxeterDatum>, element: &TwistedWeylElement) -> Result<EigenSystem> {
        let d = datum.order(element);
        let ctx = CycloContext::get(d as u32);
        let matrix = datum.full_action(element);
        let n = datum.rank();
        let mut kernels: Vec<Option<Vec<Vec<CycloElem>>>> = vec![None; d as usize];
        for k in 0..d {
            if kernels[k as usize].is_some() {
                continue;
            }
            // k is the smallest member of its Galois orbit {g·a}, g = gcd(k, d)
            let rows: Vec<Vec<CycloElem>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            let e = CycloElem::from_int(&ctx, matrix.get(i, j));
                            if i == j {
                                &e - &CycloElem::zeta_pow(&ctx, k as i64)
                            } else {
                                e
                            }
                        })
                        .collect()
                })
                .collect();
            let ker = kernel(&ctx, &rows, n);
            for a in 1..=d.max(1) {
                if a.gcd(&d) != 1 {
                    continue;
                }
                let kk = (k * a % d) as usize;
                if kernels[kk].is_none() {
                    let conj: Vec<Vec<CycloElem>> = ker
                        .iter()
                        .map(|v| v.iter().map(|x| x.galois(a as i64).expect("coprime")).collect())
                        .collect();
                    kernels[kk] = Some(conj);
                }
            }
        }
        Ok(EigenSystem {
            datum: datum.clone(),
            element: element.clone(),
            matrix,
            d,
            ctx,
            kernels: kernels.into_iter().map(|k| k.unwrap_or_default()).collect(),
        })
    }

    fn index_of(&self, t: Angle) -> Option<usize> {
        let frac = t - t.floor();
        let k = frac * Rational64::from_integer(self.d as i64);
        if k.is_integer() {
            Some(k.to_integer() as usize)
        } else {
            None
        }
    }

    /// Complex eigenvectors for `e^{2πit}`.
    pub fn complex_eigenspace(&self, t: Angle) -> Vec<Vec<CycloElem>> {
        self.index_of(t).map(|k| self.kernels[k].clone()).unwrap_or_default()
    }

    /// Multiplicity of `e^{2πit}`.
    pub fn multiplicity(&self, t: Angle) -> usize {
        self.index_of(t).map_or(0, |k| self.kernels[k].len())
    }

    /// `Γ ∩ [0, π]` as `t ∈ [0, ½]`, increasing.
    pub fn angles(&self) -> Vec<Angle> {
        let d = self.d as i64;
        (0..=d / 2)
            .filter(|&k| !self.kernels[k as usize].is_empty())
            .map(|k| Rational64::new(k, d))
            .collect()
    }

    /// Increasing complete sequence in `(0, ½] ∪ {n}`.
    pub fn complete_sequence(&self, n: i64) -> Vec<Angle> {
        let mut out: Vec<Angle> = self.angles().into_iter().filter(|t| !t.is_zero()).collect();
        if !self.kernels[0].is_empty() {
            out.push(Rational64::from_integer(n));
        }
        out
    }

    /// Real eigenspace `V^θ` for `θ = 2πt`.
    pub fn real_eigenspace(&self, t: Angle) -> Subspace {
        let Some(k) = self.index_of(t) else {
            return Subspace::zero(&self.ctx);
        };
        let ker = &self.kernels[k];
        if ker.is_empty() {
            return Subspace::zero(&self.ctx);
        }
        if 2 * k as u64 % self.d == 0 {
            // eigenvalue ±1: the kernel of a rational matrix is rational
            return Subspace { ctx: self.ctx.clone(), basis: ker.clone() };
        }
        let z = CycloElem::zeta_pow(&self.ctx, k as i64);
        let rescue = &z - &z.conj();
        let mut vecs = Vec::new();
        for v in ker {
            let mut x: Vec<CycloElem> = v.iter().map(|c| c + &c.conj()).collect();
            if x.iter().all(|c| c.is_zero()) {
                x = v
                    .iter()
                    .map(|c| {
                        let y = c * &rescue;
                        &y + &y.conj()
                    })
                    .collect();
            }
            let mx = apply(&self.matrix, &x);
            vecs.push(x);
            vecs.push(mx);
        }
        Subspace::span(&self.ctx, vecs)
    }

    /// Filtration attached to an angle sequence.
    pub fn filtration(&self, angles: &[Angle]) -> EigenFiltration {
        let pieces: Vec<(Subspace, Angle)> =
            angles.iter().map(|&t| (self.real_eigenspace(t), t)).collect();
        EigenFiltration::from_pieces(&self.datum, &self.element, &self.ctx, pieces)
    }
}

/// `0 = F_0 ⊂ F_1 ⊂ ⋯` with hyperplane sets and supports.
#[derive(Clone, Debug)]
pub struct EigenFiltration {
    pub element: TwistedWeylElement,
    pub angles: Vec<Angle>,
    /// The summands `V_i` with `F_i = V_1 + ⋯ + V_i`.
    pub pieces: Vec<Subspace>,
    /// `F_1, …, F_m`.
    pub spaces: Vec<Subspace>,
    /// `H_{F_0}, …, H_{F_m}` as positive-root ids.
    pub hyperplanes: Vec<Vec<usize>>,
    /// `I(F_0), …, I(F_m)`: simple roots orthogonal to `F_i`.
    pub supports: Vec<GenSet>,
    /// Angle positions (0-based) where the hyperplane set strictly drops.
    pub irredundant: Vec<usize>,
}

impl EigenFiltration {
    pub fn from_pieces(
        datum: &CoxeterDatum,
        element: &TwistedWeylElement,
        ctx: &Ctx,
        pieces: Vec<(Subspace, Angle)>,
    ) -> EigenFiltration {
        let roots = datum.positive_roots();
        let mut hyperplanes = vec![(0..roots.len()).collect::<Vec<_>>()];
        let mut spaces = Vec::new();
        let mut cur = Subspace::zero(ctx);
        let mut irredundant = Vec::new();
        for (i, (p, _)) in pieces.iter().enumerate() {
            cur = cur.sum(p);
            spaces.push(cur.clone());
            let prev = hyperplanes.last().unwrap();
            let h: Vec<usize> = prev.iter().copied().filter(|&a| is_orthogonal(datum, &roots[a], p)).collect();
            if h.len() != prev.len() {
                irredundant.push(i);
            }
            hyperplanes.push(h);
        }
        let supports = hyperplanes
            .iter()
            .map(|h| h.iter().filter(|&&a| a < datum.rank()).fold(0u64, |m, &a| m | 1 << a))
            .collect();
        let (pieces, angles): (Vec<_>, Vec<_>) = pieces.into_iter().unzip();
        EigenFiltration { element: element.clone(), angles, pieces, spaces, hyperplanes, supports, irredundant }
    }

    /// The filtration of `x·w̃·x⁻¹`, obtained by moving every subspace by `x`.
    pub fn conjugated(&self, datum: &CoxeterDatum, x: &WeylElement) -> EigenFiltration {
        let ctx = self.pieces.first().map(|p| p.ctx.clone()).unwrap_or_else(|| CycloContext::get(1));
        let pieces = self
            .pieces
            .iter()
            .zip(&self.angles)
            .map(|(p, &t)| (p.transform(x.matrix()), t))
            .collect();
        EigenFiltration::from_pieces(datum, &datum.conjugate(x, &self.element), &ctx, pieces)
    }

    pub fn irredundant_angles(&self) -> Vec<Angle> {
        self.irredundant.iter().map(|&i| self.angles[i]).collect()
    }

    /// `|H_{F_{i_{j-1}}} \ H_{F_{i_j}}|` for each irredundant step.
    pub fn drops(&self) -> Vec<usize> {
        self.irredundant
            .iter()
            .map(|&i| self.hyperplanes[i].len() - self.hyperplanes[i + 1].len())
            .collect()
    }

    /// `Σ 2t_{i_j}·drop_j`, the length of the associated braid.
    pub fn length_formula(&self) -> Result<u64> {
        let mut s = Rational64::zero();
        for (t, dr) in self.irredundant_angles().into_iter().zip(self.drops()) {
            s += t * Rational64::from_integer(2 * dr as i64);
        }
        if !s.is_integer() || s < Rational64::zero() {
            return Err(Error::Internal(format!("non-integral length formula {}", s)));
        }
        Ok(s.to_integer() as u64)
    }

    /// Whether the final hyperplane set is empty.
    pub fn is_admissible(&self) -> bool {
        self.hyperplanes.last().map_or(false, |h| h.is_empty())
    }
}

/// `∃c: rows·c > 0` (all strict), by Fourier–Motzkin elimination.
pub fn strictly_feasible(mut rows: Vec<Vec<CycloElem>>) -> Result<bool> {
    let nv = rows.first().map_or(0, |r| r.len());
    for v in (0..nv).rev() {
        let mut keep = Vec::new();
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for r in rows {
            match r[v].sign_of_real()? {
                0 => keep.push(r),
                s => {
                    let inv = r[v].inverse()?;
                    let scaled: Vec<CycloElem> = r.iter().map(|x| x * &inv).collect();
                    // now coefficient of v is 1; remember the original sign
                    if s > 0 {
                        pos.push(scaled);
                    } else {
                        neg.push(scaled.iter().map(|x| -x).collect::<Vec<_>>());
                    }
                }
            }
        }
        if !pos.is_empty() && !neg.is_empty() {
            for p in &pos {
                for n in &neg {
                    keep.push(p.iter().zip(n).map(|(a, b)| a + b).collect());
                }
            }
        }
        // normalize and dedupe
        let mut seen: Vec<Vec<CycloElem>> = Vec::new();
        for r in keep {
            let Some(first) = r[..v].iter().find(|x| !x.is_zero()) else {
                return Ok(false);
            };
            let s = first.sign_of_real()?;
            let inv = first.inverse()?;
            let norm: Vec<CycloElem> =
                r.iter().map(|x| if s > 0 { x * &inv } else { -&(x * &inv) }).collect();
            if !seen.contains(&norm) {
                seen.push(norm);
            }
        }
        rows = seen;
    }
    Ok(rows.is_empty())
}

/// Whether the closed fundamental chamber meets the regular part of `F`,
/// given `H_F`.
fn prefix_is_good(datum: &CoxeterDatum, f: &Subspace, h: &[usize]) -> Result<bool> {
    let rank = datum.rank();
    let j: GenSet = h.iter().filter(|&&a| a < rank).fold(0, |m, &a| m | 1 << a);
    let mut hs: Vec<usize> = h.to_vec();
    hs.sort_unstable();
    if hs != datum.parabolic_roots(j) {
        return Ok(false);
    }
    if f.dim() == 0 {
        return Ok(true);
    }
    let simple = |i: usize| -> Vec<i64> {
        let mut v = vec![0; rank];
        v[i] = 1;
        v
    };
    let rows: Vec<Vec<CycloElem>> = (0..rank)
        .filter(|&i| j >> i & 1 == 0)
        .map(|i| f.basis.iter().map(|b| pairing(datum, &simple(i), b)).collect())
        .collect();
    strictly_feasible(rows)
}

/// Good-position test for every step of a filtration.
pub fn good_position_test(datum: &CoxeterDatum, filt: &EigenFiltration) -> Result<bool> {
    for (i, f) in filt.spaces.iter().enumerate() {
        if !prefix_is_good(datum, f, &filt.hyperplanes[i + 1])? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn eigen_angles(datum: &Arc<CoxeterDatum>, w: &TwistedWeylElement) -> Result<Vec<Angle>> {
    Ok(EigenSystem::new(datum, w)?.angles())
}

pub fn real_eigenspace(datum: &Arc<CoxeterDatum>, w: &TwistedWeylElement, t: Angle) -> Result<Subspace> {
    Ok(EigenSystem::new(datum, w)?.real_eigenspace(t))
}

pub fn build_filtration(datum: &Arc<CoxeterDatum>, w: &TwistedWeylElement, angles: &[Angle]) -> Result<EigenFiltration> {
    Ok(EigenSystem::new(datum, w)?.filtration(angles))
}

pub fn complete_sequence(datum: &Arc<CoxeterDatum>, w: &TwistedWeylElement, n: i64) -> Result<Vec<Angle>> {
    Ok(EigenSystem::new(datum, w)?.complete_sequence(n))
}

/// `dim V^w̃`: multiplicity of the eigenvalue 1.
pub fn dim_fixed_space(datum: &CoxeterDatum, w: &TwistedWeylElement) -> usize {
    let ctx = CycloContext::get(1);
    let m = datum.full_action(w);
    let n = datum.rank();
    let rows: Vec<Vec<CycloElem>> = (0..n)
        .map(|i| (0..n).map(|j| CycloElem::from_int(&ctx, m.get(i, j) - (i == j) as i64)).collect())
        .collect();
    n - crate::cyclo::rank(&rows)
}

/// `l_good(C)` from any member of the class.
pub fn l_good_of(datum: &Arc<CoxeterDatum>, w: &TwistedWeylElement) -> Result<u64> {
    let sys = EigenSystem::new(datum, w)?;
    sys.filtration(&sys.complete_sequence(1)).length_formula()
}

pub fn l_good(datum: &Arc<CoxeterDatum>, cp: &ClassParam) -> Result<u64> {
    l_good_of(datum, &datum.class_representative(cp)?)
}

/// Smallest `w̃`-stable real subspace containing `v`, with its angle.
pub fn indecomposable_plane(datum: &Arc<CoxeterDatum>, w: &TwistedWeylElement, v: &[CycloElem]) -> Result<(Subspace, Angle)> {
    if v.iter().all(|x| x.is_zero()) {
        return Err(Error::InvalidSubspace("zero vector".into()));
    }
    let sys = EigenSystem::new(datum, w)?;
    let ctx = v[0].ctx().clone();
    if ctx.conductor() != sys.ctx.conductor() {
        return Err(Error::ContextMismatch(ctx.conductor(), sys.ctx.conductor()));
    }
    for t in sys.angles() {
        let e = sys.real_eigenspace(t);
        if e.dim() > 0 && e.contains(v) {
            let wv = apply(&sys.matrix, v);
            return Ok((Subspace::span(&ctx, vec![v.to_vec(), wv]), t));
        }
    }
    Err(Error::InvalidSubspace("vector is not in a single real eigenspace".into()))
}

/// A member of the class whose complete sequence is in good position.
///
/// Best-first search over the conjugacy orbit, shortest elements first; the
/// eigenspaces of conjugates are moved rather than recomputed.
pub fn find_good_position_element(
    datum: &Arc<CoxeterDatum>,
    cp: &ClassParam,
) -> Result<(TwistedWeylElement, EigenFiltration)> {
    let rep = datum.class_representative(cp)?;
    find_good_conjugate(datum, &rep, 1)
}

/// As [`find_good_position_element`], starting from an explicit element and
/// using the complete sequence with final angle `n`.
pub fn find_good_conjugate(
    datum: &Arc<CoxeterDatum>,
    rep: &TwistedWeylElement,
    n: i64,
) -> Result<(TwistedWeylElement, EigenFiltration)> {
    let sys = EigenSystem::new(datum, rep)?;
    let base = sys.filtration(&sys.complete_sequence(n));
    search_good(datum, rep, &base)
}

/// Best-first search over conjugates `x·rep·x⁻¹` for one whose filtration
/// (the image of `base` under `x`) is in good position.
///
/// Hyperplane sets move with `x`, so candidates whose sets are not standard
/// parabolic are rejected before any field arithmetic.
pub fn search_good(
    datum: &Arc<CoxeterDatum>,
    rep: &TwistedWeylElement,
    base: &EigenFiltration,
) -> Result<(TwistedWeylElement, EigenFiltration)> {
    let npos = datum.num_pos();
    let parabolic_ok = |x: &WeylElement| {
        base.hyperplanes.iter().all(|h| {
            let mut img: Vec<usize> = h
                .iter()
                .map(|&a| {
                    let id = datum.root_id(&x.matrix().apply(&datum.positive_roots()[a])).expect("root");
                    if id >= npos {
                        id - npos
                    } else {
                        id
                    }
                })
                .collect();
            img.sort_unstable();
            let j: GenSet = img.iter().filter(|&&a| a < datum.rank()).fold(0, |m, &a| m | 1 << a);
            img == datum.parabolic_roots(j)
        })
    };
    let mut seen: HashSet<TwistedWeylElement> = HashSet::new();
    let mut heap = BinaryHeap::new();
    let mut store: Vec<(TwistedWeylElement, WeylElement)> = Vec::new();
    seen.insert(rep.clone());
    store.push((rep.clone(), datum.identity()));
    heap.push(Reverse((datum.length(&rep.w), 0usize)));
    while let Some(Reverse((_, idx))) = heap.pop() {
        let (cur, x) = store[idx].clone();
        if parabolic_ok(&x) {
            let filt = base.conjugated(datum, &x);
            if good_position_test(datum, &filt)? {
                return Ok((cur, filt));
            }
        }
        for i in 0..datum.rank() {
            let c = datum.conj_by_gen(&cur, i);
            if seen.insert(c.clone()) {
                let xi = datum.gen(i).mul(&x);
                heap.push(Reverse((datum.length(&c.w), store.len())));
                store.push((c, xi));
            }
        }
    }
    Err(Error::Internal(format!("no good position element in the class of {:?}", datum.reduced_word(&rep.w))))
}

/// As [`search_good`], but for filtrations not determined by the element
/// alone: walks all of `W` (shortest `x` first) instead of the conjugacy class.
pub fn search_good_moving(
    datum: &Arc<CoxeterDatum>,
    rep: &TwistedWeylElement,
    base: &EigenFiltration,
) -> Result<(TwistedWeylElement, EigenFiltration)> {
    if let Ok(found) = search_good(datum, rep, base) {
        return Ok(found);
    }
    let mut seen: HashSet<WeylElement> = HashSet::new();
    let mut queue = std::collections::VecDeque::new();
    seen.insert(datum.identity());
    queue.push_back(datum.identity());
    while let Some(x) = queue.pop_front() {
        let filt = base.conjugated(datum, &x);
        let standard = filt
            .hyperplanes
            .iter()
            .all(|h| datum.parabolic_roots(h.iter().filter(|&&a| a < datum.rank()).fold(0, |m, &a| m | 1 << a)) == *h);
        if standard && good_position_test(datum, &filt)? {
            return Ok((datum.conjugate(&x, rep), filt));
        }
        for i in 0..datum.rank() {
            let y = datum.gen(i).mul(&x);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    Err(Error::Internal(format!("no good position for a filtration of {:?}", datum.reduced_word(&rep.w))))
}

/// `t ↦ 1/n` form check for an angle (or an integer).
pub fn is_reciprocal_or_integer(t: Angle) -> bool {
    t.is_integer() || *t.numer() == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;

    fn d(s: &str) -> Arc<CoxeterDatum> {
        CoxeterDatum::from_label(s).unwrap()
    }

    fn q(a: i64, b: i64) -> Angle {
        Rational64::new(a, b)
    }

    #[test]
    fn angles_examples() {
        let a2 = d("A2");
        assert_eq!(eigen_angles(&a2, &a2.twisted_identity()).unwrap(), vec![q(0, 1)]);
        let cox = a2.element_from_word(&[1, 2], 0).unwrap();
        assert_eq!(eigen_angles(&a2, &cox).unwrap(), vec![q(1, 3)]);
        let c2 = d("C2");
        let p2 = c2.element_from_word(&[1, 2, 1], 0).unwrap();
        assert_eq!(eigen_angles(&c2, &p2).unwrap(), vec![q(0, 1), q(1, 2)]);
        assert_eq!(complete_sequence(&c2, &p2, 1).unwrap(), vec![q(1, 2), q(1, 1)]);
        assert_eq!(complete_sequence(&a2, &a2.twisted_identity(), 1).unwrap(), vec![q(1, 1)]);
    }

    #[test]
    fn eigenspace_examples() {
        let a2 = d("A2");
        let refl = a2.element_from_word(&[1, 2, 1], 0).unwrap();
        let s = real_eigenspace(&a2, &refl, q(1, 2)).unwrap();
        assert_eq!(s.dim(), 1);
        let ctx = s.ctx.clone();
        let v: Vec<CycloElem> = vec![CycloElem::from_int(&ctx, 1), CycloElem::from_int(&ctx, 1)];
        assert!(s.contains(&v));
        let cox = a2.element_from_word(&[1, 2], 0).unwrap();
        assert_eq!(real_eigenspace(&a2, &cox, q(1, 3)).unwrap().dim(), 2);
        assert_eq!(real_eigenspace(&a2, &a2.twisted_identity(), q(0, 1)).unwrap().dim(), 2);
    }

    #[test]
    fn filtration_examples() {
        let a2 = d("A2");
        let refl = a2.element_from_word(&[1, 2, 1], 0).unwrap();
        let f = build_filtration(&a2, &refl, &[q(1, 2), q(1, 1)]).unwrap();
        assert!(f.hyperplanes[1].is_empty());
        assert_eq!(f.irredundant, vec![0]);
        assert_eq!(f.length_formula().unwrap(), 3);
        assert!(good_position_test(&a2, &f).unwrap());
        let s1 = a2.element_from_word(&[1], 0).unwrap();
        let f = build_filtration(&a2, &s1, &[q(1, 2), q(1, 1)]).unwrap();
        assert!(!good_position_test(&a2, &f).unwrap());
        let f = build_filtration(&a2, &s1, &[]).unwrap();
        assert_eq!(f.hyperplanes[0].len(), 3);
        assert!(f.irredundant.is_empty());
    }

    #[test]
    fn c2_positive_two_cycle() {
        let c2 = d("C2");
        let w = c2.element_from_word(&[1, 2, 1], 0).unwrap();
        let f = build_filtration(&c2, &w, &[q(1, 2), q(1, 1)]).unwrap();
        assert_eq!(f.hyperplanes[1].len(), 1);
        assert_eq!(f.irredundant, vec![0, 1]);
        assert_eq!(f.length_formula().unwrap(), 5);
        assert!(good_position_test(&c2, &f).unwrap());
        let s2 = c2.element_from_word(&[2], 0).unwrap();
        let f = build_filtration(&c2, &s2, &[q(1, 2), q(1, 1)]).unwrap();
        assert!(!good_position_test(&c2, &f).unwrap());
    }

    #[test]
    fn l_good_and_fixed() {
        let a2 = d("A2");
        let cls = |v: Vec<usize>| ClassParam::TypeA { lambda: Partition::new(v) };
        assert_eq!(l_good(&a2, &cls(vec![2, 1])).unwrap(), 3);
        assert_eq!(l_good(&a2, &cls(vec![3])).unwrap(), 2);
        assert_eq!(l_good(&a2, &cls(vec![1, 1, 1])).unwrap(), 6);
        assert_eq!(dim_fixed_space(&a2, &a2.twisted_identity()), 2);
        assert_eq!(dim_fixed_space(&a2, &a2.element_from_word(&[1, 2], 0).unwrap()), 0);
        let c2 = d("C2");
        let pos2 = ClassParam::Bcd { lambda: Partition::empty(), mu: Partition::new(vec![2]), marker: None };
        assert_eq!(l_good(&c2, &pos2).unwrap(), 5);
    }

    #[test]
    fn good_elements() {
        let a2 = d("A2");
        let (w, _) = find_good_position_element(&a2, &ClassParam::TypeA { lambda: Partition::new(vec![2, 1]) }).unwrap();
        assert_eq!(w, a2.element_from_word(&[1, 2, 1], 0).unwrap());
        let (w, _) = find_good_position_element(&a2, &ClassParam::TypeA { lambda: Partition::new(vec![1, 1, 1]) }).unwrap();
        assert!(w.w.is_identity());
    }

    #[test]
    fn planes() {
        let a2 = d("A2");
        let cox = a2.element_from_word(&[1, 2], 0).unwrap();
        let ctx = CycloContext::get(3);
        let v = vec![CycloElem::from_int(&ctx, 1), CycloElem::from_int(&ctx, 0)];
        let (p, t) = indecomposable_plane(&a2, &cox, &v).unwrap();
        assert_eq!((p.dim(), t), (2, q(1, 3)));
        let s1 = a2.element_from_word(&[1], 0).unwrap();
        let ctx2 = CycloContext::get(2);
        let v = vec![CycloElem::from_int(&ctx2, -1), CycloElem::from_int(&ctx2, 0)];
        assert_eq!(indecomposable_plane(&a2, &s1, &v).unwrap().0.dim(), 1);
    }

    #[test]
    fn fm_basics() {
        let ctx = CycloContext::get(1);
        let e = |x: i64| CycloElem::from_int(&ctx, x);
        assert!(strictly_feasible(vec![vec![e(1), e(0)], vec![e(0), e(1)]]).unwrap());
        assert!(!strictly_feasible(vec![vec![e(1)], vec![e(-1)]]).unwrap());
        assert!(strictly_feasible(vec![vec![e(1), e(-1)], vec![e(-1), e(2)]]).unwrap());
        assert!(!strictly_feasible(vec![vec![e(1), e(-1)], vec![e(-1), e(1)]]).unwrap());
    }
}
