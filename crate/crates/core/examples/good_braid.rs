//! Good-position braid representatives and the power identity.
use weylbraid::goodbraid::{good_rep_for_class, verify_good_power};
use weylbraid::rootsys::CoxeterDatum;

fn main() -> weylbraid::Result<()> {
    for (label, spec) in [("A2", "2,1"), ("A2", "3"), ("C2", "pos2"), ("G2", "coxeter"), ("2A3", "4"), ("E6", "#5")] {
        let d = CoxeterDatum::from_label(label)?;
        let cp = d.parse_class(spec)?;
        let rep = good_rep_for_class(&d, &cp, 1)?;
        let check = verify_good_power(&rep);
        println!(
            "{:3} {:6} w = {:?}  b = {:?}  l = {}  d = {}  b^d ok: {}  half: {:?}",
            label,
            cp.to_string(),
            d.reduced_word(&rep.element.w).iter().map(|g| g + 1).collect::<Vec<_>>(),
            rep.braid.word(),
            rep.braid.length(),
            rep.d,
            check.ok,
            check.half_ok
        );
    }
    Ok(())
}
