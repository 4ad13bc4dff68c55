//! Parse an exact polynomial expression with custom variable names and
//! print it back.
use curvefam::cli::{parse_polynomial, print_polynomial, VarNames};

fn main() -> curvefam::Result<()> {
    let names = VarNames::new(["u", "v"], &["a", "b"])?;
    let parsed = parse_polynomial("(u^2 + v^2)/2 - a*b  # a comment", &names)?;
    println!("integer form: {}", print_polynomial(&parsed.poly, &names));
    println!("unit:         {}", parsed.unit);
    match parse_polynomial("u + ", &names) {
        Err(e) => println!("rejected:     {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
