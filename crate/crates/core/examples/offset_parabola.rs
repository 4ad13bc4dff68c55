//! Offsets of the parabolas y^2 = 2 p x at distance d: the double
//! discriminant and the topology types for p, d > 0.
use curvefam::cli::{parse_polynomial, print_polynomial, VarNames};
use curvefam::family2d;
use curvefam::Rational;

const OFFSET: &str = "-8*d^2*y^2*x^2+y^4*p^2+4*x^2*y^4+4*y^6-12*d^2*y^4+12*y^2*d^4+4*d^4*x^2
    -4*d^6-20*p^2*d^2*y^2+4*p*y^2*x*d^2-4*p^4*d^2-8*p^2*d^4-8*p^2*d^2*x^2-16*p*x^3*d^2
    -16*p*x^3*y^2+32*p^2*y^2*x^2-4*p^3*y^2*x-20*p*x*y^4+16*p*x*d^4+16*p^3*d^2*x
    +16*p^2*x^4-16*p^3*x^3+4*p^4*x^2";

fn main() -> curvefam::Result<()> {
    let names = VarNames::new(["x", "y"], &["p", "d"])?;
    let fi = family2d::normalize_family(&parse_polynomial(OFFSET, &names)?.poly)?;
    let dd = family2d::compute_discriminants(&fi)?;
    println!("R = {}", print_polynomial(&dd.r, &names));
    for (p, d, case) in [(1, 2, "p < d"), (1, 1, "p = d"), (2, 1, "d < p < 8d"), (8, 1, "p = 8d"), (16, 1, "p > 8d")] {
        let g = family2d::topology_at(&fi.f, &Rational::from_integer(p.into()), &Rational::from_integer(d.into()))?;
        println!("{case:11} components {} code {}", g.components, g.canonical_code);
    }
    Ok(())
}
