//! Fixed roots, inversion sets and the normal-form shape of b for sequences ending at 2nπ.
use weylbraid::goodbraid::{convexity_of, good_rep_for_class, slice_combinatorics};
use weylbraid::rootsys::CoxeterDatum;

fn main() -> weylbraid::Result<()> {
    let c2 = CoxeterDatum::from_label("C2")?;
    let cp = c2.parse_class("pos2")?;
    for n in 1..=3 {
        let rep = good_rep_for_class(&c2, &cp, n)?;
        let sc = slice_combinatorics(&c2, &rep, n as u64)?;
        println!("n = {}: b = {:?}", n, rep.braid.word());
        println!("  fixed roots {:?}, Inv(w⁻¹) {:?}, w' = {:?}", sc.fixed_roots, sc.inv, sc.w_prime);
        println!("  R sets {:?}", sc.r_sets);
    }
    println!("convex: {}", convexity_of(&c2, &c2.element_from_word(&[1, 2, 1], 0)?));
    Ok(())
}
