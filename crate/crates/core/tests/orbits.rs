use std::collections::BTreeSet;

use weylbraid::orbits::{
    codim, codim_bcd0, enumerate_orbits, lusztig_phi, lusztig_psi, Characteristic, Component, OrbitParam, Setting,
};
use weylbraid::rootsys::Family;

fn settings() -> Vec<Setting> {
    let mut v = Vec::new();
    let mut push = |l: String, c, comp| v.push(Setting::parse(&l, c, comp).unwrap());
    for n in 1..=6 {
        push(format!("A{}", n), Characteristic::NotTwo, Component::G);
        push(format!("2A{}", n), Characteristic::Two, Component::D);
    }
    for n in 2..=5 {
        for f in ["B", "C"] {
            push(format!("{}{}", f, n), Characteristic::Two, Component::G);
            push(format!("{}{}", f, n), Characteristic::NotTwo, Component::G);
        }
    }
    for n in 4..=5 {
        push(format!("D{}", n), Characteristic::Two, Component::G);
        push(format!("D{}", n), Characteristic::NotTwo, Component::G);
        push(format!("2D{}", n), Characteristic::Two, Component::D);
    }
    v
}

#[test]
fn phi_is_onto_and_psi_is_a_section() {
    for s in settings() {
        let d = s.weyl_datum().unwrap();
        let image: BTreeSet<OrbitParam> =
            d.enumerate_classes().unwrap().iter().map(|cp| lusztig_phi(&s, cp).unwrap()).collect();
        let orbits = enumerate_orbits(&s);
        for o in &orbits {
            assert!(image.contains(o), "{:?}: {} not in the image", s, o);
            let cp = lusztig_psi(&s, o).unwrap();
            assert_eq!(&lusztig_phi(&s, &cp).unwrap(), o);
        }
        assert_eq!(image.len(), orbits.len(), "{:?}", s);
    }
}

#[test]
fn char_two_agrees_with_char_zero_without_decorations() {
    let mut seen = 0;
    for (fam, l) in [(Family::C, "C"), (Family::D, "D")] {
        for n in if fam == Family::C { 2..=6 } else { 4..=6 } {
            let s = Setting::parse(&format!("{}{}", l, n), Characteristic::Two, Component::G).unwrap();
            for o in enumerate_orbits(&s) {
                if o.eps().map_or(true, |e| e.is_empty()) && o.marker().is_none() {
                    assert_eq!(codim(&s, &o).unwrap() as i64, codim_bcd0(fam, o.nu()), "{}{} {}", l, n, o);
                    seen += 1;
                }
            }
        }
    }
    assert!(seen > 20);
}

#[test]
fn regular_and_trivial_orbits() {
    for s in settings() {
        let orbits = enumerate_orbits(&s);
        let codims: Vec<u64> = orbits.iter().map(|o| codim(&s, o).unwrap()).collect();
        let min = *codims.iter().min().unwrap();
        let max = *codims.iter().max().unwrap();
        if s.component == Component::G {
            assert_eq!(min as usize, s.rank, "{:?}", s);
            assert_eq!(max as usize, s.dim_group(), "{:?}", s);
        }
    }
}
