//! Locate parameter points in the decomposition by exact sign tests.
use curvefam::cli::{parse_polynomial, VarNames};
use curvefam::family2d::{self, DecomposeOptions};
use curvefam::Rational;

fn main() -> curvefam::Result<()> {
    let f = parse_polynomial("(x^2+y^2+t^2)^2 - 4*t^2*x^2 - s^4", &VarNames::standard())?.poly;
    let d = family2d::analyze(&f, &DecomposeOptions { label_topology: false })?;
    let r = |a: i64, b: i64| Rational::new(a.into(), b.into());
    for (t, s) in [(r(1, 1), r(1, 1)), (r(1, 2), r(1, 3)), (r(0, 1), r(5, 1)), (r(0, 1), r(0, 1)), (r(-3, 2), r(7, 4))] {
        let hits = d.classify(&t, &s);
        let kinds: Vec<_> = hits.iter().map(|&i| format!("#{i} {:?}", d.cells[i].kind)).collect();
        println!("({t}, {s}) -> {}", kinds.join(", "));
    }
    Ok(())
}
