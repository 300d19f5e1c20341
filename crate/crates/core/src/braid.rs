//! Twisted positive braid monoid `B⁺(W) ⋊ ⟨δ⟩` with greedy normal forms.
//!
//! A braid is a list of simple elements (non-identity Weyl elements) in left
//! normal form followed by a twist `δ^k`. Normalization slides generators
//! across adjacent factors until every pair `(a, b)` satisfies
//! `L(b) ⊆ R(a)`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{CoxeterDatum, TwistedWeylElement, WeylElement};

#[derive(Clone, Debug)]
pub struct Braid {
    datum: Arc<CoxeterDatum>,
    factors: Vec<WeylElement>,
    twist: u32,
}

impl PartialEq for Braid {
    fn eq(&self, o: &Self) -> bool {
        self.factors == o.factors && self.twist == o.twist && *self.datum == *o.datum
    }
}
impl Eq for Braid {}

/// JSON form: reduced words of the left normal form factors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidJson {
    pub factors: Vec<Vec<usize>>,
    pub twist: u32,
}

fn slide(datum: &CoxeterDatum, a: &mut WeylElement, b: &mut WeylElement) -> bool {
    let mut moved = false;
    loop {
        let s = datum.left_descents(b) & !datum.right_descents(a);
        if s == 0 {
            return moved;
        }
        let i = s.trailing_zeros() as usize;
        let g = datum.gen(i);
        *a = a.mul(g);
        *b = g.mul(b);
        moved = true;
    }
}

fn normalize(datum: &CoxeterDatum, mut f: Vec<WeylElement>) -> Vec<WeylElement> {
    f.retain(|x| !x.is_identity());
    loop {
        let mut changed = false;
        for i in (1..f.len()).rev() {
            let (l, r) = f.split_at_mut(i);
            if slide(datum, &mut l[i - 1], &mut r[0]) {
                changed = true;
            }
        }
        if !changed {
            break;
        }
        f.retain(|x| !x.is_identity());
    }
    f
}

impl Braid {
    pub fn identity(datum: &Arc<CoxeterDatum>) -> Braid {
        Braid { datum: datum.clone(), factors: Vec::new(), twist: 0 }
    }

    /// The twist `δ^k` alone.
    pub fn twist_only(datum: &Arc<CoxeterDatum>, k: i64) -> Braid {
        Braid { datum: datum.clone(), factors: Vec::new(), twist: datum.reduce_twist(k) }
    }

    /// `j(w̃)`.
    pub fn lift(datum: &Arc<CoxeterDatum>, w: &TwistedWeylElement) -> Braid {
        let factors = if w.w.is_identity() { vec![] } else { vec![w.w.clone()] };
        Braid { datum: datum.clone(), factors, twist: w.k }
    }

    /// Product of atoms (1-based word) times `δ^k`.
    pub fn from_word(datum: &Arc<CoxeterDatum>, word: &[usize], k: i64) -> Result<Braid> {
        let mut f = Vec::with_capacity(word.len());
        for &g in word {
            if g == 0 || g > datum.rank() {
                return Err(Error::IndexOutOfRange(g, datum.rank()));
            }
            f.push(datum.gen(g - 1).clone());
        }
        Ok(Braid { datum: datum.clone(), factors: normalize(datum, f), twist: datum.reduce_twist(k) })
    }

    /// Braid from arbitrary simple factors (normalized).
    pub fn from_factors(datum: &Arc<CoxeterDatum>, factors: Vec<WeylElement>, k: i64) -> Braid {
        Braid { datum: datum.clone(), factors: normalize(datum, factors), twist: datum.reduce_twist(k) }
    }

    pub fn datum(&self) -> &Arc<CoxeterDatum> {
        &self.datum
    }

    /// Left normal form factors.
    pub fn factors(&self) -> &[WeylElement] {
        &self.factors
    }

    pub fn twist(&self) -> u32 {
        self.twist
    }

    pub fn length(&self) -> usize {
        self.factors.iter().map(|f| self.datum.length(f)).sum()
    }

    pub fn is_identity(&self) -> bool {
        self.factors.is_empty() && self.twist == 0
    }

    /// `(b₁,k₁)(b₂,k₂) = (b₁·δ^{k₁}(b₂), k₁+k₂)`.
    pub fn try_mul(&self, o: &Braid) -> Result<Braid> {
        if *self.datum != *o.datum {
            return Err(Error::DatumMismatch);
        }
        let mut f = self.factors.clone();
        f.extend(o.factors.iter().map(|x| self.datum.twist_conj(x, self.twist)));
        Ok(Braid {
            datum: self.datum.clone(),
            factors: normalize(&self.datum, f),
            twist: (self.twist + o.twist) % self.datum.twist_order(),
        })
    }

    pub fn mul(&self, o: &Braid) -> Braid {
        self.try_mul(o).expect("braids over the same datum")
    }

    pub fn pow(&self, mut e: u64) -> Braid {
        let mut out = Braid::identity(&self.datum);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                out = out.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        out
    }

    /// `π(b) ∈ W·δ^k`.
    pub fn project(&self) -> TwistedWeylElement {
        let mut w = self.datum.identity();
        for f in &self.factors {
            w = w.mul(f);
        }
        TwistedWeylElement { w, k: self.twist }
    }

    /// Right normal form of the positive part: `rev ∘ left ∘ rev`.
    pub fn right_dg_form(&self) -> Vec<WeylElement> {
        let rev: Vec<WeylElement> = self.factors.iter().rev().map(|x| x.inverse()).collect();
        let left = normalize(&self.datum, rev);
        left.iter().rev().map(|x| x.inverse()).collect()
    }

    /// Concatenated lex-least reduced words (1-based) of the right form.
    pub fn word(&self) -> Vec<usize> {
        self.right_dg_form().iter().flat_map(|f| self.datum.reduced_word(f)).map(|g| g + 1).collect()
    }

    pub fn to_json(&self) -> BraidJson {
        BraidJson {
            factors: self
                .factors
                .iter()
                .map(|f| self.datum.reduced_word(f).into_iter().map(|g| g + 1).collect())
                .collect(),
            twist: self.twist,
        }
    }

    pub fn from_json(datum: &Arc<CoxeterDatum>, j: &BraidJson) -> Result<Braid> {
        let word: Vec<usize> = j.factors.iter().flatten().copied().collect();
        Braid::from_word(datum, &word, j.twist as i64)
    }

    /// Whether every adjacent pair is left-weighted and no factor is trivial.
    pub fn is_normal(&self) -> bool {
        self.factors.iter().all(|f| !f.is_identity())
            && self.factors.windows(2).all(|p| {
                self.datum.left_descents(&p[1]) & !self.datum.right_descents(&p[0]) == 0
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> Arc<CoxeterDatum> {
        CoxeterDatum::from_label(s).unwrap()
    }

    #[test]
    fn words() {
        let a1 = d("A1");
        let b = Braid::from_word(&a1, &[1, 1], 0).unwrap();
        assert_eq!(b.factors().len(), 2);
        let a2 = d("A2");
        let b = Braid::from_word(&a2, &[1, 2, 1], 0).unwrap();
        assert_eq!(b.factors().len(), 1);
        assert_eq!(b, Braid::from_word(&a2, &[2, 1, 2], 0).unwrap());
        assert_ne!(Braid::from_word(&a2, &[1, 2], 0).unwrap(), Braid::from_word(&a2, &[2, 1], 0).unwrap());
        assert!(Braid::from_word(&a2, &[], 0).unwrap().project().w.is_identity());
    }

    #[test]
    fn products() {
        let a2 = d("A2");
        let atom = |i| Braid::from_word(&a2, &[i], 0).unwrap();
        let w0 = a2.longest(a2.full_set());
        let lw0 = Braid::lift(&a2, &TwistedWeylElement { w: w0.clone(), k: 0 });
        assert_eq!(atom(1).mul(&atom(2)).mul(&atom(1)), lw0);
        assert_eq!(lw0.pow(2).factors().len(), 2);
        assert_eq!(lw0.pow(2).length(), 6);
        assert_eq!(atom(1).mul(&atom(2)).pow(3), lw0.pow(2));
        assert!(lw0.pow(0).is_identity());
        assert_eq!(lw0.mul(&Braid::identity(&a2)), lw0);
    }

    #[test]
    fn right_form() {
        let c2 = d("C2");
        let b = Braid::from_word(&c2, &[2, 1, 2, 1, 2], 0).unwrap();
        let r = b.right_dg_form();
        assert_eq!(r.len(), 2);
        assert_eq!(c2.length(&r[1]), 4);
        assert_eq!(b.word(), vec![2, 1, 2, 1, 2]);
        let a2 = d("A2");
        assert_eq!(Braid::from_word(&a2, &[2, 1, 2], 0).unwrap().word(), vec![1, 2, 1]);
    }

    #[test]
    fn twisted_products() {
        let a3 = d("2A3");
        let delta = Braid::twist_only(&a3, 1);
        let s1 = Braid::from_word(&a3, &[1], 0).unwrap();
        // δ s₁ = s₃ δ
        assert_eq!(delta.mul(&s1), Braid::from_word(&a3, &[3], 1).unwrap());
        assert_eq!(delta.pow(2), Braid::identity(&a3));
    }
}
