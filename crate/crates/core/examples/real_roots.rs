//! Exact real root isolation, refinement and sign determination.
use curvefam::poly::{rat, Rational};
use curvefam::realalg::{self, AlgebraicNumber};
use curvefam::upoly::UPoly;

fn main() -> curvefam::Result<()> {
    // s (2 - s^2)(2 + s^2)(1 - s)(1 + s)
    let p = UPoly::from_i64(&[0, -2, 0, 3, 0, -1]).mul(&UPoly::from_i64(&[2, 0, 1]));
    let roots = realalg::isolate_real_roots(&p)?;
    for r in roots.roots() {
        let fine = r.refine(&Rational::new(1.into(), 1_000_000.into()));
        println!("{r}  ~ {:.6}", fine.to_f64());
    }
    println!("samples between roots: {:?}", roots.gaps().iter().map(|g| g.to_string()).collect::<Vec<_>>());

    let sqrt2 = AlgebraicNumber::from_interval(UPoly::from_i64(&[-2, 0, 1]), rat(1, 1), rat(2, 1));
    let probe = UPoly::from_i64(&[-140, 99]);
    println!("sign of 99 s - 140 at sqrt 2: {:?}", realalg::sign_at(&probe, &sqrt2));
    Ok(())
}
