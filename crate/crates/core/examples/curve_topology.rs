//! Topology descriptors of single plane curves and comparison of types.
use curvefam::cli::{parse_polynomial, VarNames};
use curvefam::curvetopo;

fn main() -> curvefam::Result<()> {
    let names = VarNames::standard();
    for text in [
        "x^2 + y^2 - 1",
        "(x^2+y^2)^2 - 2*(x^2-y^2)",
        "y^2 - x^3 - x^2",
        "(x^2+y^2-1)*(x^2+y^2-4)",
        "x^2 + y^2",
    ] {
        let f = parse_polynomial(text, &names)?.poly;
        let g = curvetopo::curve_topology(&f)?;
        println!(
            "{text:28} components {} isolated {} shear {} code {}",
            g.components, g.isolated_points, g.shear.k, g.canonical_code
        );
    }
    let a = curvetopo::curve_topology(&parse_polynomial("x^2 + y^2 - 1", &names)?.poly)?;
    let b = curvetopo::curve_topology(&parse_polynomial("x^4 + 3*y^2 - 5", &names)?.poly)?;
    println!("circle and quartic oval equal: {}", curvetopo::same_topology(&a, &b));
    Ok(())
}
