//! Good-position braid representatives and their power identities.
//!
//! For a filtration in good position the braid is built recursively: the
//! first irredundant step `F` fixes a standard parabolic `W_J`
//! (`J = I(F)`); writing `w̃ = u₁ũ` with `ũ` the minimal element of `W_J·w̃`,
//! the braid is `b(u₁δ_ũ) · (w₁w₀·w₀w₁)^k · tail(ũ)`, where `b(u₁δ_ũ)` is
//! built inside `W_J` from the remaining steps projected onto `span(J)`.

use std::sync::Arc;

use num_integer::Integer;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::braid::Braid;
use crate::cyclo::{CycloElem, Ctx};
use crate::eigen::{
    find_good_position_element, good_position_test, Angle, EigenFiltration, EigenSystem, Subspace,
};
use crate::error::{Error, Result};
use crate::rootsys::{members, ClassParam, CoxeterDatum, GenSet, Mat, Side, TwistedWeylElement, WeylElement};

/// A constructed representative together with its power data.
#[derive(Clone, Debug)]
pub struct GoodRep {
    pub braid: Braid,
    pub element: TwistedWeylElement,
    pub filtration: EigenFiltration,
    pub d: u64,
    /// `(J_j, d_j)` with target `σ^d w̲_{J_0}^{d_0} w̲_{J_1}^{d_1} ⋯`.
    pub power_factors: Vec<(GenSet, u64)>,
}

/// Outcome of the power identity check.
#[derive(Clone, Debug)]
pub struct PowerCheck {
    pub ok: bool,
    pub half_ok: Option<bool>,
    pub lhs: Braid,
    pub rhs: Braid,
}

fn embed(sub: &CoxeterDatum, j: &[usize], parent: &CoxeterDatum, f: &WeylElement) -> WeylElement {
    let mut w = parent.identity();
    for g in sub.reduced_word(f) {
        w = w.mul(parent.gen(j[g]));
    }
    w
}

fn restrict(m: &Mat, j: &[usize]) -> Option<Mat> {
    let n = m.dim();
    for &b in j {
        for i in 0..n {
            if !j.contains(&i) && m.get(i, b) != 0 {
                return None;
            }
        }
    }
    let rows: Vec<Vec<i64>> = j.iter().map(|&a| j.iter().map(|&b| m.get(a, b)).collect()).collect();
    Some(Mat::from_rows(&rows))
}

fn rational_inverse(g: &[Vec<i64>]) -> Vec<Vec<Rational64>> {
    let n = g.len();
    let mut m: Vec<Vec<Rational64>> = (0..n)
        .map(|i| {
            let mut r: Vec<Rational64> = g[i].iter().map(|&x| Rational64::from_integer(x)).collect();
            r.extend((0..n).map(|k| if i == k { Rational64::one() } else { Rational64::zero() }));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !m[r][c].is_zero()).expect("positive definite");
        m.swap(c, p);
        let inv = m[c][c].recip();
        for x in m[c].iter_mut() {
            *x *= inv;
        }
        for r in 0..n {
            if r != c && !m[r][c].is_zero() {
                let f = m[r][c];
                let pr = m[c].clone();
                for (x, y) in m[r].iter_mut().zip(pr) {
                    *x -= f * y;
                }
            }
        }
    }
    m.into_iter().map(|r| r[n..].to_vec()).collect()
}

/// Orthogonal projection of `v` onto `span(α_j : j ∈ J)`, in the basis `α_J`.
fn project(datum: &CoxeterDatum, j: &[usize], ginv: &[Vec<Rational64>], v: &[CycloElem]) -> Vec<CycloElem> {
    let ctx = v[0].ctx().clone();
    let rhs: Vec<CycloElem> = j
        .iter()
        .map(|&a| {
            let mut e = vec![0i64; datum.rank()];
            e[a] = 1;
            crate::eigen::pairing(datum, &e, v)
        })
        .collect();
    (0..j.len())
        .map(|a| {
            let mut acc = CycloElem::zero(&ctx);
            for b in 0..j.len() {
                let c = ginv[a][b];
                if !c.is_zero() && !rhs[b].is_zero() {
                    let r = BigRational::new((*c.numer()).into(), (*c.denom()).into());
                    acc = &acc + &rhs[b].scale(&r);
                }
            }
            acc
        })
        .collect()
}

fn construct_rec(
    datum: &Arc<CoxeterDatum>,
    elem: &TwistedWeylElement,
    ctx: &Ctx,
    pieces: Vec<(Subspace, Angle)>,
) -> Result<Braid> {
    let filt = EigenFiltration::from_pieces(datum, elem, ctx, pieces.clone());
    let Some(&i1) = filt.irredundant.first() else {
        if !elem.w.is_identity() {
            return Err(Error::NotGoodPosition("angle sequence is not admissible".into()));
        }
        return Ok(Braid::twist_only(datum, elem.k as i64));
    };
    let rank = datum.rank();
    let t = filt.angles[i1];
    let jmask = filt.supports[i1 + 1];
    let jl = members(jmask, rank);

    // w̃ = u₁·ũ with ũ minimal in W_J·w̃; ũ must permute the simple roots of J
    let ut = datum.coset_minimum(jmask, elem, Side::Left);
    let full_u = datum.full_action(&ut);
    let mut tau = Vec::with_capacity(jl.len());
    for &j in &jl {
        let col = full_u.col(j);
        let target = jl.iter().position(|&jj| col.iter().enumerate().all(|(i, &c)| c == (i == jj) as i64));
        match target {
            Some(p) => tau.push(p),
            None => {
                return Err(Error::NotGoodPosition(format!(
                    "coset minimum does not normalize the parabolic {:?}",
                    jl.iter().map(|x| x + 1).collect::<Vec<_>>()
                )))
            }
        }
    }
    let u1 = elem.w.mul(&ut.w.inverse());
    let sub = datum.parabolic(&jl, tau)?;
    let m = restrict(u1.matrix(), &jl).ok_or_else(|| Error::Internal("u₁ not in W_J".into()))?;
    let sub_w = WeylElement::from_matrix(m).ok_or_else(|| Error::Internal("singular restriction".into()))?;
    let sub_elem = TwistedWeylElement { w: sub_w, k: sub.reduce_twist(1) };

    let ginv = rational_inverse(sub.form());
    let sub_pieces: Vec<(Subspace, Angle)> = pieces[i1 + 1..]
        .iter()
        .map(|(p, a)| {
            let vecs: Vec<Vec<CycloElem>> = p.basis.iter().map(|v| project(datum, &jl, &ginv, v)).collect();
            let vecs = if jl.is_empty() { vec![] } else { vecs };
            (Subspace::span(ctx, vecs), *a)
        })
        .collect();
    let b_sub = construct_rec(&sub, &sub_elem, ctx, sub_pieces)?;
    let b_sub = Braid::from_factors(
        datum,
        b_sub.factors().iter().map(|f| embed(&sub, &jl, datum, f)).collect(),
        0,
    );

    let k_int = t.floor().to_integer();
    let frac = t - t.floor();
    let (p, q) = (*frac.numer(), *frac.denom());
    let w0 = datum.longest(datum.full_set());
    let w1 = datum.longest(jmask);
    let lift = |w: WeylElement| Braid::lift(datum, &TwistedWeylElement { w, k: 0 });
    let int_part = lift(w1.mul(&w0)).mul(&lift(w0.mul(&w1))).pow(k_int as u64);
    let tail = if p == 0 {
        Braid::lift(datum, &ut)
    } else {
        let tp = (1..=q).find(|&x| (p * x) % q == 1 % q).expect("p, q coprime");
        let s = (p * tp - 1) / q;
        let upow = datum.pow(&ut, tp as u64);
        Braid::lift(datum, &upow)
            .pow(p as u64)
            .mul(&Braid::twist_only(datum, -(s * q) * ut.k as i64))
    };
    let b = b_sub.mul(&int_part).mul(&tail);
    if b.project() != *elem {
        return Err(Error::Internal(format!("braid does not project to the element (angle {})", t)));
    }
    Ok(b)
}

fn finish(datum: &Arc<CoxeterDatum>, element: &TwistedWeylElement, filtration: EigenFiltration, braid: Braid) -> Result<GoodRep> {
    let want = filtration.length_formula()?;
    if braid.length() as u64 != want {
        return Err(Error::Internal(format!("braid length {} but length formula {}", braid.length(), want)));
    }
    let irr = filtration.irredundant_angles();
    let sigma_order = {
        let o = datum.twist_order() as u64;
        o / (element.k as u64).gcd(&o)
    };
    let d = irr.iter().fold(sigma_order, |acc, t| acc.lcm(&(*t.denom() as u64)));
    let mut power_factors = Vec::new();
    let mut prev = Rational64::zero();
    let mut sup = datum.full_set();
    for (j, &i) in filtration.irredundant.iter().enumerate() {
        let t = irr[j];
        let e = (t - prev) * Rational64::from_integer(2 * d as i64);
        debug_assert!(e.is_integer());
        power_factors.push((sup, e.to_integer() as u64));
        prev = t;
        sup = filtration.supports[i + 1];
    }
    Ok(GoodRep { braid, element: element.clone(), filtration, d, power_factors })
}

/// `b(w̃, Θ)` for a good position pair.
pub fn construct(datum: &Arc<CoxeterDatum>, w: &TwistedWeylElement, angles: &[Angle]) -> Result<GoodRep> {
    let sys = EigenSystem::new(datum, w)?;
    let filt = sys.filtration(angles);
    construct_from_filtration(datum, filt)
}

/// `b(w̃, Θ)` from an already computed filtration (eigenspaces or any
/// `w̃`-stable pieces).
pub fn construct_from_filtration(datum: &Arc<CoxeterDatum>, filt: EigenFiltration) -> Result<GoodRep> {
    if !good_position_test(datum, &filt)? {
        return Err(Error::NotGoodPosition(format!("{:?}", datum.reduced_word(&filt.element.w))));
    }
    let ctx = match filt.pieces.first() {
        Some(p) => p.ctx.clone(),
        None => crate::cyclo::CycloContext::get(1),
    };
    let pieces: Vec<(Subspace, Angle)> = filt.pieces.iter().cloned().zip(filt.angles.iter().copied()).collect();
    let braid = construct_rec(datum, &filt.element, &ctx, pieces)?;
    let element = filt.element.clone();
    finish(datum, &element, filt, braid)
}

/// `b(w̃, V, Θ_V)` for indecomposable pieces `V_k` with angles `Θ_V`.
pub fn construct_indecomposable(
    datum: &Arc<CoxeterDatum>,
    w: &TwistedWeylElement,
    spaces: &[Subspace],
    angles: &[Angle],
) -> Result<GoodRep> {
    if spaces.len() != angles.len() {
        return Err(Error::InvalidSubspace("one angle per subspace required".into()));
    }
    let m = datum.full_action(w);
    for (s, t) in spaces.iter().zip(angles) {
        let dim = s.dim();
        let cos_trivial = (*t * Rational64::from_integer(2)).is_integer();
        if dim == 0 || dim > 2 || (dim == 2 && cos_trivial) {
            return Err(Error::InvalidSubspace("not an indecomposable real eigenspace".into()));
        }
        if s.basis.iter().any(|v| !s.contains(&crate::eigen::apply(&m, v))) {
            return Err(Error::InvalidSubspace("subspace is not stable".into()));
        }
    }
    let ctx = spaces.first().map(|s| s.ctx.clone()).unwrap_or_else(|| crate::cyclo::CycloContext::get(1));
    let pieces = spaces.iter().cloned().zip(angles.iter().copied()).collect();
    let filt = EigenFiltration::from_pieces(datum, w, &ctx, pieces);
    construct_from_filtration(datum, filt)
}

/// Good element of the class and its representative for the complete
/// sequence ending in `n`.
pub fn good_rep_for_class(datum: &Arc<CoxeterDatum>, cp: &ClassParam, n: i64) -> Result<GoodRep> {
    let (w, filt) = find_good_position_element(datum, cp)?;
    if n == 1 {
        construct_from_filtration(datum, filt)
    } else {
        let sys = EigenSystem::new(datum, &w)?;
        construct(datum, &w, &sys.complete_sequence(n))
    }
}

/// Target side `σ^m · w̲_{J_0}^{e_0} ⋯` with exponents scaled by `num/den`.
///
/// The twist is written first: for the half power the `J_j` need not be
/// `σ`-stable, and `σ^{d/2}` acts on the factors to its right.
pub fn power_rhs(datum: &Arc<CoxeterDatum>, rep: &GoodRep, num: u64, den: u64) -> Braid {
    let tw = (rep.element.k as u64 * rep.d * num / den) as i64;
    let mut rhs = Braid::twist_only(datum, tw);
    for &(j, e) in &rep.power_factors {
        let lw = Braid::lift(datum, &TwistedWeylElement { w: datum.longest(j), k: 0 });
        rhs = rhs.mul(&lw.pow(e * num / den));
    }
    rhs
}

/// `b^d = σ^d w̲₀^{d₀} w̲₁^{d₁} ⋯`, and the half identity when `d` is even.
pub fn verify_good_power(rep: &GoodRep) -> PowerCheck {
    let datum = rep.braid.datum().clone();
    let lhs = rep.braid.pow(rep.d);
    let rhs = power_rhs(&datum, rep, 1, 1);
    let half_ok = if rep.d % 2 == 0 {
        Some(rep.braid.pow(rep.d / 2) == power_rhs(&datum, rep, 1, 2))
    } else {
        None
    };
    PowerCheck { ok: lhs == rhs, half_ok, lhs, rhs }
}

/// Root data around a good representative built from `(0, π] ∪ {2nπ}`.
#[derive(Clone, Debug, Serialize)]
pub struct SliceCombinatorics {
    /// `R^w̃` as root ids (negative roots offset by `|R⁺|`).
    pub fixed_roots: Vec<usize>,
    /// `Inv(w⁻¹)`.
    pub inv: Vec<usize>,
    /// Reduced word of `w′`.
    pub w_prime: Vec<usize>,
    pub n: u64,
    /// Reduced word of `w`.
    pub w: Vec<usize>,
    /// `R_m, …, R_1` as root ids.
    pub r_sets: Vec<Vec<usize>>,
}

/// `Inv(x⁻¹) = {α > 0 : x⁻¹α < 0}`.
pub fn inv_of_inverse(datum: &CoxeterDatum, x: &WeylElement) -> Vec<usize> {
    datum.inversion_set(&x.inverse())
}

fn image_ids(datum: &CoxeterDatum, x: &WeylElement, ids: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = ids
        .iter()
        .map(|&i| datum.root_id(&x.matrix().apply(&datum.root_by_id(i))).expect("roots map to roots"))
        .collect();
    out.sort_unstable();
    out
}

/// Slice combinatorics of a constructed representative; asserts the shape
/// `(w′)^{2n−1}·(w′w)` of its right normal form.
pub fn slice_combinatorics(datum: &Arc<CoxeterDatum>, rep: &GoodRep, n: u64) -> Result<SliceCombinatorics> {
    let full = datum.full_action(&rep.element);
    let npos = datum.num_pos();
    let fixed: Vec<usize> = (0..2 * npos)
        .filter(|&i| {
            let r = datum.root_by_id(i);
            full.apply(&r) == r
        })
        .collect();
    let jmask: GenSet = (0..datum.rank()).filter(|i| fixed.contains(i)).fold(0, |m, i| m | 1 << i);
    let fixed_pos: Vec<usize> = fixed.iter().copied().filter(|&i| i < npos).collect();
    if fixed_pos != datum.parabolic_roots(jmask) {
        return Err(Error::Internal("fixed roots are not a standard parabolic subsystem".into()));
    }
    let wp = datum.longest(jmask);
    let w = rep.element.w.clone();
    if datum.length(&wp.mul(&w)) != datum.length(&wp) + datum.length(&w) {
        return Err(Error::Internal("l(w′w) ≠ l(w′) + l(w)".into()));
    }
    let mut expected: Vec<WeylElement> = vec![wp.clone(); (2 * n - 1) as usize];
    expected.push(wp.mul(&w));
    expected.retain(|x| !x.is_identity());
    let right = rep.braid.right_dg_form();
    if right != expected {
        return Err(Error::Internal(format!(
            "right normal form {:?} does not have the shape (w′)^{}·w′w",
            right.iter().map(|f| datum.reduced_word(f)).collect::<Vec<_>>(),
            2 * n - 1
        )));
    }
    // R_i = (w_m ⋯ w_{i+1})(Inv(w_i⁻¹)), factors listed as w_m, …, w_1
    let mut r_sets = Vec::new();
    let mut prefix = datum.identity();
    for f in &right {
        r_sets.push(image_ids(datum, &prefix, &inv_of_inverse(datum, f)));
        prefix = prefix.mul(f);
    }
    let word = |x: &WeylElement| datum.reduced_word(x).into_iter().map(|g| g + 1).collect::<Vec<_>>();
    Ok(SliceCombinatorics {
        fixed_roots: fixed,
        inv: inv_of_inverse(datum, &w),
        w_prime: word(&wp),
        n,
        w: word(&w),
        r_sets,
    })
}

/// Closure of a root set under positive combinations `mα + nβ` (m, n ≤ 3).
pub fn is_convex(datum: &CoxeterDatum, set: &[usize]) -> bool {
    let vecs: Vec<Vec<i64>> = set.iter().map(|&i| datum.root_by_id(i)).collect();
    for a in &vecs {
        for b in &vecs {
            for m in 1..=3 {
                for n in 1..=3 {
                    let c: Vec<i64> = a.iter().zip(b).map(|(x, y)| m * x + n * y).collect();
                    if let Some(id) = datum.root_id(&c) {
                        if !set.contains(&id) {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

/// Both `(R^w̃)^± ⊔ Inv(w⁻¹)` are convex for the good element of the class.
pub fn convexity_check(datum: &Arc<CoxeterDatum>, cp: &ClassParam) -> Result<bool> {
    let (w, _) = find_good_position_element(datum, cp)?;
    Ok(convexity_of(datum, &w))
}

pub fn convexity_of(datum: &CoxeterDatum, w: &TwistedWeylElement) -> bool {
    let full = datum.full_action(w);
    let npos = datum.num_pos();
    let fixed: Vec<usize> = (0..2 * npos)
        .filter(|&i| {
            let r = datum.root_by_id(i);
            full.apply(&r) == r
        })
        .collect();
    let inv = inv_of_inverse(datum, &w.w);
    let plus: Vec<usize> = fixed.iter().copied().filter(|&i| i < npos).chain(inv.iter().copied()).collect();
    let minus: Vec<usize> = fixed.iter().copied().filter(|&i| i >= npos).chain(inv.iter().copied()).collect();
    is_convex(datum, &plus) && is_convex(datum, &minus)
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
    fn a2_reflection() {
        let a2 = d("A2");
        let w = a2.element_from_word(&[1, 2, 1], 0).unwrap();
        let rep = construct(&a2, &w, &[q(1, 2), q(1, 1)]).unwrap();
        assert_eq!(rep.braid.word(), vec![1, 2, 1]);
        assert_eq!(rep.d, 2);
        let chk = verify_good_power(&rep);
        assert!(chk.ok && chk.half_ok == Some(true));
    }

    #[test]
    fn c2_positive_two_cycle() {
        let c2 = d("C2");
        let w = c2.element_from_word(&[1, 2, 1], 0).unwrap();
        let rep = construct(&c2, &w, &[q(1, 2), q(1, 1)]).unwrap();
        assert_eq!(rep.braid.word(), vec![2, 1, 2, 1, 2]);
        assert_eq!(rep.braid.project(), w);
        assert!(verify_good_power(&rep).ok);
        let sc = slice_combinatorics(&c2, &rep, 1).unwrap();
        assert_eq!(sc.fixed_roots.len(), 2);
        assert_eq!(sc.r_sets.len(), 2);
        assert_eq!(sc.r_sets[0].len(), 1);
        assert!(convexity_of(&c2, &w));
        let s2 = c2.element_from_word(&[2], 0).unwrap();
        assert!(matches!(construct(&c2, &s2, &[q(1, 2), q(1, 1)]), Err(Error::NotGoodPosition(_))));
    }

    #[test]
    fn identity_and_coxeter() {
        let a2 = d("A2");
        let rep = construct(&a2, &a2.twisted_identity(), &[q(1, 1)]).unwrap();
        assert_eq!(rep.braid.length(), 6);
        assert!(verify_good_power(&rep).ok);
        let cox = a2.element_from_word(&[1, 2], 0).unwrap();
        let rep = construct(&a2, &cox, &[q(1, 3)]).unwrap();
        assert_eq!(rep.braid.length(), 2);
        assert_eq!(rep.d, 3);
        assert!(verify_good_power(&rep).ok);
    }

    #[test]
    fn classes_small() {
        for l in ["A3", "B3", "G2", "2A3", "2A2", "D4"] {
            let x = d(l);
            for cp in x.enumerate_classes().unwrap() {
                let rep = good_rep_for_class(&x, &cp, 1).unwrap();
                assert!(verify_good_power(&rep).ok, "{} {}", l, cp);
                assert_eq!(rep.braid.length() as u64, crate::eigen::l_good(&x, &cp).unwrap());
            }
        }
    }

    #[test]
    fn indecomposable_matches_full() {
        let c2 = d("C2");
        let w = c2.element_from_word(&[1, 2, 1], 0).unwrap();
        let sys = EigenSystem::new(&c2, &w).unwrap();
        let v1 = sys.real_eigenspace(q(1, 2));
        let v2 = sys.real_eigenspace(q(1, 1));
        let a = construct_indecomposable(&c2, &w, &[v1, v2], &[q(1, 2), q(1, 1)]).unwrap();
        let b = construct(&c2, &w, &[q(1, 2), q(1, 1)]).unwrap();
        assert_eq!(a.braid, b.braid);
        let cp = ClassParam::Bcd { lambda: Partition::empty(), mu: Partition::new(vec![2]), marker: None };
        assert!(convexity_check(&c2, &cp).unwrap());
    }
}
