//! Class parameters, representatives and the class-spec syntax.
use weylbraid::eigen::{dim_fixed_space, l_good};
use weylbraid::rootsys::CoxeterDatum;

fn main() -> weylbraid::Result<()> {
    let c3 = CoxeterDatum::from_label("C3")?;
    println!("{:>3}  {:<10} {:>6} {:>5} {:>6}", "#", "class", "len", "dimT", "l_good");
    for (i, cp) in c3.enumerate_classes()?.iter().enumerate() {
        let rep = c3.class_representative(cp)?;
        println!(
            "{:>3}  {:<10} {:>6} {:>5} {:>6}",
            i,
            cp.to_string(),
            c3.length(&rep.w),
            dim_fixed_space(&c3, &rep),
            l_good(&c3, cp)?
        );
    }

    // the same class written four ways
    let d4 = CoxeterDatum::from_label("D4")?;
    for spec in ["-|2,2:II", "#1", "coxeter", "pos2"] {
        match d4.parse_class(spec) {
            Ok(cp) => println!("D4 {:>9} -> {}", spec, cp),
            Err(e) => println!("D4 {:>9} -> error: {}", spec, e),
        }
    }
    Ok(())
}
