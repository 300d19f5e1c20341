//! Eigenspace angles, complete sequences and good position.
use weylbraid::eigen::{find_good_position_element, good_position_test, EigenSystem};
use weylbraid::rootsys::CoxeterDatum;

fn main() -> weylbraid::Result<()> {
    let f4 = CoxeterDatum::from_label("F4")?;
    for spec in ["coxeter", "#3", "#10", "identity"] {
        let cp = f4.parse_class(spec)?;
        let w = f4.class_representative(&cp)?;
        let sys = EigenSystem::new(&f4, &w)?;
        let angles = sys.complete_sequence(1);
        let filt = sys.filtration(&angles);
        let (good, gfilt) = find_good_position_element(&f4, &cp)?;
        println!("F4 {} (order {})", cp, sys.d);
        println!("  complete sequence {:?}", angles.iter().map(|t| t.to_string()).collect::<Vec<_>>());
        println!("  irredundant {:?}, drops {:?}", filt.irredundant_angles().iter().map(|t| t.to_string()).collect::<Vec<_>>(), filt.drops());
        println!("  representative in good position? {}", good_position_test(&f4, &filt)?);
        println!("  good element {:?}, l_good = {}", f4.reduced_word(&good.w).iter().map(|g| g + 1).collect::<Vec<_>>(), gfilt.length_formula()?);
    }
    Ok(())
}
