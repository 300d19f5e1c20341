//! Exact arithmetic in Q(ζ_n).
use weylbraid::cyclo::{kernel, parse_elem, CycloContext, CycloElem};

fn main() -> weylbraid::Result<()> {
    let k = CycloContext::get(12);
    let z = CycloElem::zeta_pow(&k, 1);
    let i = CycloElem::zeta_pow(&k, 3);
    println!("Q(z12) has degree {}; min poly coefficients {:?}", k.degree(), k.min_poly());
    println!("z^3 = {}   (z^3)^2 = {}", i, &i * &i);
    let sqrt3 = &z + &z.conj();
    println!("z + conj z = {}  squared {}", sqrt3, &sqrt3 * &sqrt3);
    println!("sigma_5(z + conj z) = {}", sqrt3.galois(5)?);
    println!("1/(1 + z) = {}", (&CycloElem::one(&k) + &z).inverse()?);

    let x = parse_elem(&k, "1/2 + z^2 - 3z^5")?;
    println!("parsed {}, real? {}", x, x.is_real());

    // kernel of [[1, z], [z^-1, 1]]
    let m = vec![
        vec![CycloElem::one(&k), z.clone()],
        vec![CycloElem::zeta_pow(&k, -1), CycloElem::one(&k)],
    ];
    for v in kernel(&k, &m, 2) {
        println!("kernel vector [{}, {}]", v[0], v[1]);
    }
    Ok(())
}
