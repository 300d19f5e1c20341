//! Dimension arithmetic for affine Springer fibers.
//!
//! A topologically nilpotent regular semisimple `γ` of torus type `w` is
//! recorded formally by its eigencomponents `γ = Σ_k ϖ^{k/d} γ_k` with
//! `w·γ_k = ζ_d^k γ_k`. Everything below depends only on which roots vanish
//! on which components, so no power series are involved.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::Zero;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::cyclo::{parse_elem, CycloContext, CycloElem, Ctx};
use crate::eigen::{apply, dim_fixed_space, l_good, pairing, search_good_moving, Angle, EigenFiltration, EigenSystem, Subspace};
use crate::error::{Error, Result};
use crate::goodbraid::{construct_from_filtration, GoodRep};
use crate::rootsys::{ClassParam, CoxeterDatum, TwistedWeylElement};

fn require_untwisted(datum: &CoxeterDatum) -> Result<()> {
    if datum.is_twisted() {
        return Err(Error::Unsupported(format!("{}: affine Springer fibers are for untwisted types", datum.label())));
    }
    Ok(())
}

/// `δ_C = (l_good(C) − (r − r_C))/2`, the dimension of the shallow fibers of type `C`.
pub fn delta_c(datum: &Arc<CoxeterDatum>, cp: &ClassParam) -> Result<u64> {
    require_untwisted(datum)?;
    let lg = l_good(datum, cp)? as i64;
    let rc = dim_fixed_space(datum, &datum.class_representative(cp)?) as i64;
    let num = lg - (datum.rank() as i64 - rc);
    if num < 0 || num % 2 != 0 {
        return Err(Error::Internal(format!("δ_C numerator {} for class {}", num, cp)));
    }
    Ok((num / 2) as u64)
}

/// `val α(γ)` over all roots for shallow `γ` of type `C`, sorted.
///
/// A root dropped at the irredundant angle `2π/n` gets valuation `1/n`.
pub fn valuation_profile(datum: &Arc<CoxeterDatum>, cp: &ClassParam) -> Result<Vec<Rational64>> {
    require_untwisted(datum)?;
    let w = datum.class_representative(cp)?;
    let sys = EigenSystem::new(datum, &w)?;
    let filt = sys.filtration(&sys.complete_sequence(1));
    let mut out = Vec::with_capacity(2 * datum.num_pos());
    for (t, drop) in filt.irredundant_angles().into_iter().zip(filt.drops()) {
        if !(t.is_integer() || *t.numer() == 1) {
            return Err(Error::Internal(format!("irredundant angle {} is not of the form 1/n", t)));
        }
        out.extend(std::iter::repeat(t).take(2 * drop));
    }
    let total: Rational64 = out.iter().sum();
    if out.len() != 2 * datum.num_pos() || total != Rational64::from_integer(filt.length_formula()? as i64) {
        return Err(Error::Internal(format!("valuation profile of {} does not sum to l_good", cp)));
    }
    out.sort();
    Ok(out)
}

/// One eigencomponent `ϖ^{k/d} γ_k`; `vector` is in coroot coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct GammaComponent {
    pub k: u64,
    pub vector: Vec<CycloElem>,
}

/// Formal `γ` of torus type `w`.
#[derive(Clone, Debug)]
pub struct GammaDatum {
    pub datum: Arc<CoxeterDatum>,
    pub w: TwistedWeylElement,
    pub d: u64,
    pub ctx: Ctx,
    /// Sorted by `k`, one component per `k`.
    pub components: Vec<GammaComponent>,
}

impl GammaDatum {
    /// Validate the eigen-condition and topological nilpotence; equal `k` are merged.
    pub fn new(datum: &Arc<CoxeterDatum>, w: &TwistedWeylElement, components: Vec<GammaComponent>) -> Result<GammaDatum> {
        require_untwisted(datum)?;
        let d = datum.order(w);
        let ctx = CycloContext::get(d as u32);
        let mut merged: BTreeMap<u64, Vec<CycloElem>> = BTreeMap::new();
        for c in components {
            if c.k == 0 {
                return Err(Error::EigenViolation(0));
            }
            if c.vector.len() != datum.rank() || c.vector.iter().any(|x| x.ctx().conductor() != ctx.conductor()) {
                return Err(Error::InvalidSubspace(format!("component k={} has the wrong shape or field", c.k)));
            }
            match merged.get_mut(&c.k) {
                Some(v) => {
                    for (a, b) in v.iter_mut().zip(&c.vector) {
                        *a = &*a + b;
                    }
                }
                None => {
                    merged.insert(c.k, c.vector);
                }
            }
        }
        let g = GammaDatum {
            datum: datum.clone(),
            w: w.clone(),
            d,
            ctx,
            components: merged.into_iter().map(|(k, vector)| GammaComponent { k, vector }).collect(),
        };
        let m = datum.full_action(w);
        for c in &g.components {
            let x = g.ambient(&c.vector);
            let z = CycloElem::zeta_pow(&g.ctx, c.k as i64);
            let zx: Vec<CycloElem> = x.iter().map(|e| &z * e).collect();
            if apply(&m, &x) != zx {
                return Err(Error::EigenViolation(c.k as i64));
            }
        }
        Ok(g)
    }

    /// Coroot coordinates to simple-root coordinates: `α_j^∨ = 2α_j/(α_j, α_j)`.
    pub fn ambient(&self, v: &[CycloElem]) -> Vec<CycloElem> {
        to_ambient(&self.datum, v)
    }

    /// `n_α` for each positive root (by id); negative roots share it.
    pub fn root_jumps(&self) -> Result<Vec<u64>> {
        let amb: Vec<(u64, Vec<CycloElem>)> = self.components.iter().map(|c| (c.k, self.ambient(&c.vector))).collect();
        self.datum
            .positive_roots()
            .iter()
            .map(|a| {
                amb.iter()
                    .find(|(_, x)| !pairing(&self.datum, a, x).is_zero())
                    .map(|(k, _)| *k)
                    .ok_or_else(|| Error::NotRegularSemisimple(format!("{:?}", a)))
            })
            .collect()
    }

    /// `val Δ(γ) = Σ_{α ∈ R} n_α/d`.
    pub fn val_delta(&self) -> Result<Rational64> {
        let s: u64 = self.root_jumps()?.iter().sum();
        Ok(Rational64::new(2 * s as i64, self.d as i64))
    }
}

fn to_ambient(datum: &CoxeterDatum, v: &[CycloElem]) -> Vec<CycloElem> {
    v.iter()
        .enumerate()
        .map(|(j, x)| x.scale(&BigRational::new(BigInt::from(2), BigInt::from(datum.form()[j][j]))))
        .collect()
}

fn to_coroot(datum: &CoxeterDatum, v: &[CycloElem]) -> Vec<CycloElem> {
    v.iter()
        .enumerate()
        .map(|(j, x)| x.scale(&BigRational::new(BigInt::from(datum.form()[j][j]), BigInt::from(2))))
        .collect()
}

/// `dim Gr_γ = ½(val Δ(γ) − (r − r_C))`.
pub fn dim_from_gamma(g: &GammaDatum) -> Result<Rational64> {
    let rc = dim_fixed_space(&g.datum, &g.w) as i64;
    let v = (g.val_delta()? - Rational64::from_integer(g.datum.rank() as i64 - rc)) / 2;
    if v < Rational64::zero() {
        return Err(Error::Internal(format!("negative fiber dimension {}", v)));
    }
    Ok(v)
}

/// `Σ c_i b_i` with `c = (1, s, s², …)`.
fn combination(ctx: &Ctx, basis: &[Vec<CycloElem>], s: i64) -> Vec<CycloElem> {
    let n = basis[0].len();
    let mut out = vec![CycloElem::zero(ctx); n];
    let mut c = 1i64;
    for b in basis {
        for (o, x) in out.iter_mut().zip(b) {
            *o = &*o + &x.scale(&BigRational::from_integer(c.into()));
        }
        c *= s;
    }
    out
}

/// Shallow `γ` of type `C`: a generic vector of the `ζ^{k}`-eigenspace for
/// each irredundant angle `k/d` of the complete sequence.
pub fn shallow_gamma(datum: &Arc<CoxeterDatum>, cp: &ClassParam) -> Result<GammaDatum> {
    require_untwisted(datum)?;
    let w = datum.class_representative(cp)?;
    let sys = EigenSystem::new(datum, &w)?;
    let filt = sys.filtration(&sys.complete_sequence(1));
    let roots = datum.positive_roots();
    let mut comps = Vec::new();
    for &i in &filt.irredundant {
        let t = filt.angles[i];
        let k = (t * Rational64::from_integer(sys.d as i64)).to_integer() as u64;
        let basis = sys.complex_eigenspace(t);
        let dropped: Vec<usize> =
            filt.hyperplanes[i].iter().copied().filter(|a| !filt.hyperplanes[i + 1].contains(a)).collect();
        let x = (1..=basis.len() as i64 + 2)
            .map(|s| combination(&sys.ctx, &basis, s))
            .find(|x| dropped.iter().all(|&a| !pairing(datum, &roots[a], x).is_zero()))
            .ok_or_else(|| Error::Internal(format!("no generic eigenvector at angle {}", t)))?;
        comps.push(GammaComponent { k, vector: to_coroot(datum, &x) });
    }
    GammaDatum::new(datum, &w, comps)
}

/// Random valid `γ` of type `C`: a few eigencomponents with small random
/// coefficients at a few depths, retried until regular.
pub fn structured_gamma<R: Rng>(datum: &Arc<CoxeterDatum>, cp: &ClassParam, rng: &mut R) -> Result<GammaDatum> {
    require_untwisted(datum)?;
    let w = datum.class_representative(cp)?;
    let sys = EigenSystem::new(datum, &w)?;
    let d = sys.d;
    let eig: Vec<(u64, Vec<Vec<CycloElem>>)> = (0..d)
        .map(|k| (k, sys.complex_eigenspace(Rational64::new(k as i64, d as i64))))
        .filter(|(_, b)| !b.is_empty())
        .collect();
    for _ in 0..64 {
        let mut comps = Vec::new();
        for (k, basis) in &eig {
            for depth in 0..3u64 {
                if rng.gen_bool(0.5) {
                    continue;
                }
                let mut x = vec![CycloElem::zero(&sys.ctx); datum.rank()];
                for b in basis {
                    let c = BigRational::from_integer(rng.gen_range(-3i64..=3).into());
                    for (o, y) in x.iter_mut().zip(b) {
                        *o = &*o + &y.scale(&c);
                    }
                }
                if x.iter().all(|e| e.is_zero()) {
                    continue;
                }
                let kk = if *k == 0 { d * (depth + 1) } else { k + d * depth };
                comps.push(GammaComponent { k: kk, vector: to_coroot(datum, &x) });
            }
        }
        let g = GammaDatum::new(datum, &w, comps)?;
        if g.root_jumps().is_ok() {
            return Ok(g);
        }
    }
    Err(Error::Internal(format!("could not sample a regular γ of type {}", cp)))
}

/// Output of [`gamma_to_indecomposable`].
#[derive(Clone, Debug)]
pub struct GammaBraid {
    /// `V_k = ℝv_k + ℝw(v_k)`, one per jump.
    pub spaces: Vec<Subspace>,
    /// `n_k/d` (angles as fractions of `2π`).
    pub angles: Vec<Angle>,
    pub rep: GoodRep,
    pub val_delta: Rational64,
    pub dim: Rational64,
}

/// Build the indecomposable sequence of `γ`, move it to good position and
/// construct its braid; asserts `l(b) = val Δ(γ)`.
pub fn gamma_to_indecomposable(g: &GammaDatum) -> Result<GammaBraid> {
    let datum = &g.datum;
    let jumps = g.root_jumps()?;
    let roots = datum.positive_roots();
    let m = datum.full_action(&g.w);
    let mut distinct: Vec<u64> = jumps.clone();
    distinct.sort_unstable();
    distinct.dedup();
    let mut spaces = Vec::new();
    let mut angles = Vec::new();
    for &n in &distinct {
        let comp = g.components.iter().find(|c| c.k == n).expect("jump at an existing component");
        let x = g.ambient(&comp.vector);
        let need: Vec<usize> = (0..roots.len()).filter(|&a| jumps[a] == n).collect();
        let mut found = None;
        'search: for shift in 0..=3i64 {
            for j in 0..g.d.max(1) as i64 {
                let mut c = CycloElem::zeta_pow(&g.ctx, j);
                if shift > 0 {
                    c = &c + &CycloElem::from_int(&g.ctx, shift);
                }
                let v: Vec<CycloElem> = x
                    .iter()
                    .map(|e| {
                        let y = &c * e;
                        &y + &y.conj()
                    })
                    .collect();
                if v.iter().all(|e| e.is_zero()) {
                    continue;
                }
                let wv = apply(&m, &v);
                let plane = Subspace::span(&g.ctx, vec![v, wv]);
                if need.iter().all(|&a| plane.basis.iter().any(|b| !pairing(datum, &roots[a], b).is_zero())) {
                    found = Some(plane);
                    break 'search;
                }
            }
        }
        let plane = found.ok_or_else(|| Error::Internal(format!("no real plane for the jump {}", n)))?;
        spaces.push(plane);
        angles.push(Rational64::new(n as i64, g.d as i64));
    }
    let pieces = spaces.iter().cloned().zip(angles.iter().copied()).collect();
    let base = EigenFiltration::from_pieces(datum, &g.w, &g.ctx, pieces);
    let (_, filt) = search_good_moving(datum, &g.w, &base)?;
    let rep = construct_from_filtration(datum, filt)?;
    let val_delta = g.val_delta()?;
    if Rational64::from_integer(rep.braid.length() as i64) != val_delta {
        return Err(Error::Internal(format!("braid length {} but val Δ = {}", rep.braid.length(), val_delta)));
    }
    let dim = dim_from_gamma(g)?;
    Ok(GammaBraid { spaces, angles, rep, val_delta, dim })
}

/// JSON form of a γ-datum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaFile {
    #[serde(rename = "type")]
    pub family: String,
    pub rank: usize,
    /// Class spec as accepted by [`CoxeterDatum::parse_class`].
    pub class: String,
    /// Explicit torus type as a 1-based word; defaults to the class representative.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub word: Option<Vec<usize>>,
    pub components: Vec<ComponentFile>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentFile {
    pub k: u64,
    /// Coroot coordinates, polynomials in `z = ζ_d`.
    pub vector: Vec<String>,
}

impl GammaFile {
    pub fn datum(&self) -> Result<Arc<CoxeterDatum>> {
        CoxeterDatum::from_label(&format!("{}{}", self.family, self.rank))
    }

    pub fn to_gamma(&self) -> Result<GammaDatum> {
        let datum = self.datum()?;
        let w = match &self.word {
            Some(word) => datum.element_from_word(word, 0)?,
            None => datum.class_representative(&datum.parse_class(&self.class)?)?,
        };
        let ctx = CycloContext::get(datum.order(&w) as u32);
        let comps = self
            .components
            .iter()
            .map(|c| {
                let vector = c.vector.iter().map(|s| parse_elem(&ctx, s)).collect::<Result<Vec<_>>>()?;
                Ok(GammaComponent { k: c.k, vector })
            })
            .collect::<Result<Vec<_>>>()?;
        GammaDatum::new(&datum, &w, comps)
    }

    pub fn from_gamma(g: &GammaDatum, class: &str) -> GammaFile {
        let ct = g.datum.cartan_type();
        GammaFile {
            family: ct.map(|c| c.family.letter().to_string()).unwrap_or_default(),
            rank: g.datum.rank(),
            class: class.to_string(),
            word: Some(g.datum.reduced_word(&g.w.w).into_iter().map(|x| x + 1).collect()),
            components: g
                .components
                .iter()
                .map(|c| ComponentFile { k: c.k, vector: c.vector.iter().map(|e| e.to_string()).collect() })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;

    fn d(s: &str) -> Arc<CoxeterDatum> {
        CoxeterDatum::from_label(s).unwrap()
    }

    fn a(v: Vec<usize>) -> ClassParam {
        ClassParam::TypeA { lambda: Partition::new(v) }
    }

    fn q(a: i64, b: i64) -> Rational64 {
        Rational64::new(a, b)
    }

    #[test]
    fn delta_examples() {
        let a1 = d("A1");
        assert_eq!(delta_c(&a1, &a(vec![2])).unwrap(), 0);
        assert_eq!(delta_c(&a1, &a(vec![1, 1])).unwrap(), 1);
        for l in ["A2", "C2", "G2"] {
            let x = d(l);
            assert_eq!(delta_c(&x, &x.parse_class("coxeter").unwrap()).unwrap(), 0, "{}", l);
        }
        assert!(delta_c(&d("2A2"), &ClassParam::TwistedA { lambda: Partition::new(vec![3]) }).is_err());
    }

    #[test]
    fn profiles() {
        let a2 = d("A2");
        assert_eq!(valuation_profile(&a2, &a(vec![3])).unwrap(), vec![q(1, 3); 6]);
        assert_eq!(valuation_profile(&d("A1"), &a(vec![1, 1])).unwrap(), vec![q(1, 1); 2]);
        let c2 = d("C2");
        let p = valuation_profile(&c2, &c2.parse_class("pos2").unwrap()).unwrap();
        assert_eq!(p, [vec![q(1, 2); 6], vec![q(1, 1); 2]].concat());
        assert_eq!(p.iter().sum::<Rational64>(), q(5, 1));
    }

    #[test]
    fn sl2_fibers() {
        let a1 = d("A1");
        let ctx = CycloContext::get(1);
        let split = GammaDatum::new(&a1, &a1.twisted_identity(), vec![GammaComponent { k: 1, vector: vec![CycloElem::one(&ctx)] }])
            .unwrap();
        assert_eq!(split.val_delta().unwrap(), q(2, 1));
        assert_eq!(dim_from_gamma(&split).unwrap(), q(1, 1));
        let gb = gamma_to_indecomposable(&split).unwrap();
        assert_eq!(gb.rep.braid.length(), 2);
        assert_eq!(gb.angles, vec![q(1, 1)]);

        let s1 = a1.element_from_word(&[1], 0).unwrap();
        let ctx2 = CycloContext::get(2);
        let ell = GammaDatum::new(&a1, &s1, vec![GammaComponent { k: 1, vector: vec![CycloElem::one(&ctx2)] }]).unwrap();
        assert_eq!(ell.val_delta().unwrap(), q(1, 1));
        assert_eq!(dim_from_gamma(&ell).unwrap(), q(0, 1));
        // k must match the eigenvalue
        assert!(GammaDatum::new(&a1, &s1, vec![GammaComponent { k: 2, vector: vec![CycloElem::one(&ctx2)] }]).is_err());
    }

    #[test]
    fn two_jumps_in_a2() {
        let a2 = d("A2");
        let ctx = CycloContext::get(1);
        let e = |x: i64| CycloElem::from_int(&ctx, x);
        // v₁ = α₁^∨ + 2α₂^∨ is orthogonal to α₁ only
        let g = GammaDatum::new(
            &a2,
            &a2.twisted_identity(),
            vec![
                GammaComponent { k: 1, vector: vec![e(1), e(2)] },
                GammaComponent { k: 2, vector: vec![e(1), e(0)] },
            ],
        )
        .unwrap();
        assert_eq!(g.val_delta().unwrap(), q(8, 1));
        assert_eq!(dim_from_gamma(&g).unwrap(), q(4, 1));
        let gb = gamma_to_indecomposable(&g).unwrap();
        assert_eq!(gb.rep.braid.length(), 8);
    }

    #[test]
    fn shallow_matches_delta() {
        for l in ["A1", "A2", "A3", "B2", "C3", "G2"] {
            let x = d(l);
            for cp in x.enumerate_classes().unwrap() {
                let g = shallow_gamma(&x, &cp).unwrap();
                let dim = dim_from_gamma(&g).unwrap();
                assert_eq!(dim, Rational64::from_integer(delta_c(&x, &cp).unwrap() as i64), "{} {}", l, cp);
                let gb = gamma_to_indecomposable(&g).unwrap_or_else(|e| panic!("{} {}: {}", l, cp, e));
                assert_eq!(gb.rep.braid.length() as u64, l_good(&x, &cp).unwrap());
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let a2 = d("A2");
        let g = shallow_gamma(&a2, &a(vec![3])).unwrap();
        let f = GammaFile::from_gamma(&g, "3");
        let s = serde_json::to_string(&f).unwrap();
        let back: GammaFile = serde_json::from_str(&s).unwrap();
        let g2 = back.to_gamma().unwrap();
        assert_eq!(g2.components, g.components);
        assert_eq!(dim_from_gamma(&g2).unwrap(), q(0, 1));
    }
}
