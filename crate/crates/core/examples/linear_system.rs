//! A family with R = 0: the curve M = 0 carries the lower-dimensional cells.
use curvefam::cli::{parse_polynomial, VarNames};
use curvefam::family2d::{self, DecomposeOptions};

fn main() -> curvefam::Result<()> {
    let f = parse_polynomial("-1 + x^2 + t*(x-y) + s*(x^3-y)", &VarNames::standard())?.poly;
    let d = family2d::analyze(&f, &DecomposeOptions::default())?;
    println!("branch {}, M = {}, K = {}", d.branch, d.data.m, d.data.k);
    for c in &d.cells {
        let g = c.topology.as_ref().expect("rational samples");
        println!(
            "dim {} {:?} sample ({:.2}, {:.2}): {} component(s)",
            c.dim,
            c.kind,
            c.sample.0.to_f64(),
            c.sample.1.to_f64(),
            g.components
        );
    }
    Ok(())
}
