//! Draw a decomposition of the parameter plane as SVG (display only).
use curvefam::cli::{parse_polynomial, svg, VarNames};
use curvefam::family2d::{self, DecomposeOptions};
use curvefam::Rational;

fn main() -> curvefam::Result<()> {
    let names = VarNames::standard();
    let f = parse_polynomial("(x^2+y^2+t^2)^2 - 4*t^2*x^2 - s^4", &names)?.poly;
    let d = family2d::analyze(&f, &DecomposeOptions { label_topology: false })?;
    let two = Rational::from_integer(2.into());
    let picture = svg::render_svg(&d, &[-two.clone(), two.clone(), -two.clone(), two], &names);
    let path = std::env::temp_dir().join("cassini.svg");
    std::fs::write(&path, picture).map_err(|e| curvefam::Error::Io(e.to_string()))?;
    println!("wrote {}", path.display());
    Ok(())
}
