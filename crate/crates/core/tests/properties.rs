use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use proptest::prelude::*;

use weylbraid::braid::Braid;
use weylbraid::cyclo::{CycloContext, CycloElem};
use weylbraid::eigen::l_good_of;
use weylbraid::partition::Partition;
use weylbraid::rootsys::CoxeterDatum;
use weylbraid::springer::{dim_from_gamma, shallow_gamma, GammaComponent, GammaDatum};

fn elem(n: u32, c: &[i64]) -> CycloElem {
    let ctx = CycloContext::get(n);
    let coeffs = c.iter().take(ctx.degree()).map(|&x| BigRational::from_integer(BigInt::from(x))).collect();
    CycloElem::from_coeffs(&ctx, coeffs)
}

fn coeffs() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-5i64..=5, 12)
}

const TYPES: [&str; 6] = ["A3", "B3", "C3", "G2", "2A3", "D4"];

fn datum(i: usize) -> Arc<CoxeterDatum> {
    CoxeterDatum::from_label(TYPES[i % TYPES.len()]).unwrap()
}

fn word(d: &CoxeterDatum, raw: &[usize]) -> Vec<usize> {
    raw.iter().map(|g| g % d.rank() + 1).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(n in 1u32..=12, a in coeffs(), b in coeffs(), c in coeffs()) {
        let (a, b, c) = (elem(n, &a), elem(n, &b), elem(n, &c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(a.conj().conj(), a.clone());
        if !a.is_zero() {
            prop_assert!((&a * &a.inverse().unwrap()).is_one());
        }
    }

    #[test]
    fn galois_is_a_ring_map(n in 2u32..=12, k in 1i64..12, a in coeffs(), b in coeffs()) {
        prop_assume!(num_integer::gcd(k, n as i64) == 1);
        let (a, b) = (elem(n, &a), elem(n, &b));
        prop_assert_eq!((&a * &b).galois(k).unwrap(), &a.galois(k).unwrap() * &b.galois(k).unwrap());
        prop_assert_eq!((&a + &b).galois(k).unwrap(), &a.galois(k).unwrap() + &b.galois(k).unwrap());
    }

    #[test]
    fn braid_monoid(t in 0usize..6, x in prop::collection::vec(0usize..8, 0..8), y in prop::collection::vec(0usize..8, 0..8), z in prop::collection::vec(0usize..8, 0..8)) {
        let d = datum(t);
        let b = |w: &[usize]| Braid::from_word(&d, &word(&d, w), 0).unwrap();
        let (a, b2, c) = (b(&x), b(&y), b(&z));
        prop_assert_eq!(a.mul(&b2).mul(&c), a.mul(&b2.mul(&c)));
        prop_assert_eq!(a.mul(&b2).length(), x.len() + y.len());
        prop_assert_eq!(a.mul(&b2).project(), d.mul(&a.project(), &b2.project()));
        prop_assert_eq!(Braid::from_word(&d, &a.word(), 0).unwrap(), a.clone());
        prop_assert_eq!(Braid::from_json(&d, &a.to_json()).unwrap(), a);
    }

    #[test]
    fn l_good_is_conjugation_invariant(t in 0usize..6, class in 0usize..64, x in prop::collection::vec(0usize..8, 0..12)) {
        let d = datum(t);
        let classes = d.enumerate_classes().unwrap();
        let rep = d.class_representative(&classes[class % classes.len()]).unwrap();
        let mut g = d.identity();
        for s in word(&d, &x) {
            g = g.mul(d.gen(s - 1));
        }
        prop_assert_eq!(l_good_of(&d, &d.conjugate(&g, &rep)).unwrap(), l_good_of(&d, &rep).unwrap());
    }

    #[test]
    fn deeper_components_raise_the_dimension(t in 0usize..3, class in 0usize..64, which in 0usize..8) {
        let d = CoxeterDatum::from_label(["A3", "B3", "G2"][t]).unwrap();
        let classes = d.enumerate_classes().unwrap();
        let g = shallow_gamma(&d, &classes[class % classes.len()]).unwrap();
        let i = which % g.components.len();
        let mut comps = g.components.clone();
        comps[i] = GammaComponent { k: comps[i].k + g.d, vector: comps[i].vector.clone() };
        let deeper = GammaDatum::new(&d, &g.w, comps).unwrap();
        let (a, b) = (dim_from_gamma(&g).unwrap(), dim_from_gamma(&deeper).unwrap());
        prop_assert!(b >= a);
        prop_assert!(deeper.val_delta().unwrap() - g.val_delta().unwrap() >= Rational64::from_integer(0));
    }

    #[test]
    fn dual_is_an_involution(n in 0usize..12, pick in 0usize..1000) {
        let all = Partition::all(n);
        let p = &all[pick % all.len()];
        prop_assert_eq!(&p.dual().dual(), p);
        prop_assert_eq!(p.dual().size(), n);
    }
}
