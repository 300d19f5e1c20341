//! Root data, Weyl group words and twisted types.
use weylbraid::rootsys::CoxeterDatum;

fn main() -> weylbraid::Result<()> {
    for label in ["A3", "B3", "C3", "D4", "G2", "F4", "E6", "2A3", "2D4", "2E6"] {
        let d = CoxeterDatum::from_label(label)?;
        let w0 = d.longest(d.full_set());
        println!(
            "{:4} rank {}  |R+| = {:2}  l(w0) = {:2}  twist order {}  classes {}",
            label,
            d.rank(),
            d.num_pos(),
            d.length(&w0),
            d.twist_order(),
            d.enumerate_classes()?.len()
        );
    }

    let b3 = CoxeterDatum::from_label("B3")?;
    let w = b3.element_from_word(&[1, 2, 3, 2], 0)?;
    println!("\nB3: s1 s2 s3 s2 has reduced word {:?}", b3.reduced_word(&w.w).iter().map(|g| g + 1).collect::<Vec<_>>());
    println!("simple-root coordinates of the highest root: {:?}", b3.positive_roots().last().unwrap());
    Ok(())
}
