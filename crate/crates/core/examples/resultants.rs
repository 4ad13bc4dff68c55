//! Resultants and discriminants by subresultants, checked against the
//! Sylvester determinant.
use curvefam::cli::{parse_polynomial, VarNames};
use curvefam::{elim, Var};

fn main() -> curvefam::Result<()> {
    let names = VarNames::standard();
    let f = parse_polynomial("(x^2+y^2+t^2)^2 - 4*t^2*x^2 - s^4", &names)?.poly;
    let dy = elim::discriminant(&f, Var::Y)?;
    let m = elim::squarefree_part(&dy, &[Var::X, Var::T, Var::S])?;
    println!("M = {m}");
    let r = elim::squarefree_part(&elim::discriminant(&m, Var::X)?, &[Var::T, Var::S])?;
    println!("R = {r}");

    let p = parse_polynomial("x^3*t - y*x + 2", &names)?.poly;
    let q = parse_polynomial("x^2 - t*y^2 + 1", &names)?.poly;
    let a = elim::resultant(&p, &q, Var::X);
    let b = elim::resultant_bareiss(&p, &q, Var::X);
    println!("Res_x = {a}");
    println!("agrees with the Sylvester determinant: {}", a == b);
    Ok(())
}
