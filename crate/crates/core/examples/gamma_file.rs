//! Reading and writing γ-data as JSON.
use weylbraid::rootsys::CoxeterDatum;
use weylbraid::springer::{gamma_to_indecomposable, shallow_gamma, GammaFile};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g2 = CoxeterDatum::from_label("G2")?;
    let cp = g2.parse_class("coxeter")?;
    let g = shallow_gamma(&g2, &cp)?;
    let text = serde_json::to_string_pretty(&GammaFile::from_gamma(&g, "coxeter"))?;
    println!("{}", text);

    let hand = r#"{"type":"A","rank":2,"class":"identity",
                   "components":[{"k":1,"vector":["1","2"]},{"k":2,"vector":["1","0"]}]}"#;
    let g = serde_json::from_str::<GammaFile>(hand)?.to_gamma()?;
    let gb = gamma_to_indecomposable(&g)?;
    println!("A2 two jumps: val Δ = {}, dim = {}, angles {:?}", gb.val_delta, gb.dim, gb.angles.iter().map(|t| t.to_string()).collect::<Vec<_>>());
    Ok(())
}
