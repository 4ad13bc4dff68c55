//! Critical set and topology types of a one-parameter family.
use curvefam::cli::{parse_polynomial, VarNames};
use curvefam::curvetopo;
use curvefam::family1d::{self, LineCell};
use curvefam::Var;

fn main() -> curvefam::Result<()> {
    let names = VarNames::new(["x", "y"], &["t"])?;
    let f = parse_polynomial("(x^2+y^2)^2 - 2*(x^2-y^2) - t", &names)?.poly;
    let cs = family1d::critical_set(&f)?;
    println!("critical values: {:?}", cs.points.roots());
    for cell in family1d::partition_line(&cs.points) {
        if let LineCell::Interval { sample, .. } = cell {
            let (h, _) = f.specialize(&[(Var::T, sample.clone())]);
            let g = curvetopo::curve_topology(&h)?;
            println!("t = {sample:>4}: {} component(s)", g.components);
        }
    }
    Ok(())
}
