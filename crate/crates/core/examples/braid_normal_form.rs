//! Positive braid monoid: normal forms, products, powers.
use weylbraid::braid::Braid;
use weylbraid::rootsys::CoxeterDatum;

fn main() -> weylbraid::Result<()> {
    let b2 = CoxeterDatum::from_label("B2")?;
    let x = Braid::from_word(&b2, &[1, 2, 1, 2, 2, 1], 0)?;
    let y = Braid::from_word(&b2, &[2, 1, 2, 1, 2, 1], 0)?;
    println!("left factors {:?}", x.to_json().factors);
    println!("right word   {:?}", x.word());
    println!("s1s2s1s2·s2s1 == s2s1s2s1·s2s1 ? {}", x == y);

    let a3 = CoxeterDatum::from_label("A3")?;
    let c = Braid::from_word(&a3, &[1, 2, 3], 0)?;
    let delta = Braid::lift(&a3, &a3.element_from_word(&[1, 2, 1, 3, 2, 1], 0)?);
    println!("(s1 s2 s3)^4 = Δ² ? {}", c.pow(4) == delta.pow(2));

    let twa3 = CoxeterDatum::from_label("2A3")?;
    let t = Braid::from_word(&twa3, &[1], 1)?;
    println!("2A3: (s1 σ)^2 = {:?}, twist {}", t.pow(2).word(), t.pow(2).twist());
    Ok(())
}
