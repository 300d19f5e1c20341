//! δ_C, valuation profiles and dim Gr_γ from eigencomponents.
use weylbraid::rootsys::CoxeterDatum;
use weylbraid::springer::{delta_c, dim_from_gamma, gamma_to_indecomposable, shallow_gamma, valuation_profile};

fn main() -> weylbraid::Result<()> {
    let b3 = CoxeterDatum::from_label("B3")?;
    for cp in b3.enumerate_classes()? {
        let profile: Vec<String> = valuation_profile(&b3, &cp)?.iter().map(|q| q.to_string()).collect();
        let g = shallow_gamma(&b3, &cp)?;
        let gb = gamma_to_indecomposable(&g)?;
        println!(
            "{:<8} δ = {}  dim(shallow γ) = {}  val Δ = {}  braid {:?}",
            cp.to_string(),
            delta_c(&b3, &cp)?,
            dim_from_gamma(&g)?,
            gb.val_delta,
            gb.rep.braid.word()
        );
        println!("         profile {}", profile.join(" "));
    }
    Ok(())
}
