//! Full decomposition of the parameter plane of the Cassini ovals with a
//! topology label per cell.
use curvefam::cli::{parse_polynomial, VarNames};
use curvefam::family2d::{self, DecomposeOptions};

fn main() -> curvefam::Result<()> {
    let f = parse_polynomial("(x^2+y^2+t^2)^2 - 4*t^2*x^2 - s^4", &VarNames::standard())?.poly;
    let d = family2d::analyze(&f, &DecomposeOptions::default())?;
    println!("R = {}", d.data.r);
    println!("cells by dimension: {:?}", d.counts());
    for c in &d.cells {
        let label = match &c.topology {
            Some(g) => format!("{} component(s)", g.components),
            None => format!("{:?}", c.topology_status),
        };
        println!("{:?} at ({:.3}, {:.3}): {label}", c.kind, c.sample.0.to_f64(), c.sample.1.to_f64());
    }
    Ok(())
}
