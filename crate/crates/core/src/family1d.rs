//! One-parameter families `F(x, y, t)`: critical sets and the induced
//! partition of the parameter line.

use serde::Serialize;

use crate::elim;
use crate::error::{Error, Result};
use crate::poly::{MPoly, Rational, Var};
use crate::realalg::{self, AlgebraicNumber, SortedRootList};

/// Which polynomial the critical points are roots of.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CriticalSource {
    /// The generic case, `R = D_x(M)` nonzero.
    RootsOfR,
    /// `F` does not involve `y`; the roots of `D_x(F)`.
    RootsOfDxF,
    /// `M` involves only `t`; the roots of `M`.
    RootsOfM,
}

#[derive(Clone, Debug)]
pub struct CriticalSet1D {
    pub points: SortedRootList,
    pub source: CriticalSource,
    /// Square-free part of `D_y(F)`, zero when `F` has no `y`.
    pub m: MPoly,
    /// `D_x(M)` normalized, zero when `M` has no `x`.
    pub r: MPoly,
    /// The univariate polynomial whose real roots are `points`.
    pub designated: MPoly,
}

/// Checks the hypotheses on a one-parameter family in `x, y, t`.
pub fn check_hypotheses(f: &MPoly) -> Result<()> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("critical_set"));
    }
    if !f.only_in(&[Var::X, Var::Y, Var::T]) {
        return Err(Error::Hypothesis(
            "one-parameter family must involve only x, y, t".into(),
        ));
    }
    if !f.depends_on(Var::X) && !f.depends_on(Var::Y) {
        return Err(Error::Hypothesis("family involves neither x nor y".into()));
    }
    let (_, param) = elim::remove_univariate_factors(f, Var::T)?;
    if !param.is_constant() {
        return Err(Error::Hypothesis(format!(
            "factor {param} depends only on the parameter"
        )));
    }
    if f.deg(Var::Y) > 0 && f.leading_coefficient(Var::Y).0.depends_on(Var::X) {
        return Err(Error::Hypothesis(
            "leading coefficient in y depends on x".into(),
        ));
    }
    let sq = elim::squarefree_part(f, &[Var::X, Var::Y, Var::T])?;
    if sq != f.normalized() {
        return Err(Error::Hypothesis("family is not square-free".into()));
    }
    Ok(())
}

/// A finite set of parameter values outside which the topology of the
/// curves `F(x, y, t0) = 0` is locally constant.
pub fn critical_set(f: &MPoly) -> Result<CriticalSet1D> {
    check_hypotheses(f)?;
    let m = if f.deg(Var::Y) == 0 {
        MPoly::zero()
    } else {
        elim::squarefree_part(&elim::discriminant(f, Var::Y)?, &[Var::X, Var::T])?
    };
    let r = if m.deg(Var::X) == 0 {
        MPoly::zero()
    } else {
        elim::discriminant(&m, Var::X)?.normalized()
    };
    let (designated, source) = if !r.is_zero() {
        (r.clone(), CriticalSource::RootsOfR)
    } else if m.is_zero() {
        (elim::discriminant(f, Var::X)?.normalized(), CriticalSource::RootsOfDxF)
    } else {
        (m.clone(), CriticalSource::RootsOfM)
    };
    let points = if designated.is_zero() {
        return Err(Error::Hypothesis("designated polynomial vanishes".into()));
    } else {
        realalg::isolate_mpoly(&designated)?
    };
    Ok(CriticalSet1D {
        points,
        source,
        m,
        r,
        designated,
    })
}

/// A cell of the parameter line.
#[derive(Clone, Debug)]
pub enum LineCell {
    Point(AlgebraicNumber),
    /// Open interval between consecutive critical points (`None` is
    /// infinite), with a rational sample inside.
    Interval {
        lo: Option<AlgebraicNumber>,
        hi: Option<AlgebraicNumber>,
        sample: Rational,
    },
}

impl LineCell {
    pub fn is_point(&self) -> bool {
        matches!(self, LineCell::Point(_))
    }
}

/// Alternating intervals and points covering the line.
pub fn partition_line(points: &SortedRootList) -> Vec<LineCell> {
    let roots = points.roots();
    let gaps = points.gaps();
    let mut out = vec![];
    for (i, sample) in gaps.iter().enumerate() {
        out.push(LineCell::Interval {
            lo: i.checked_sub(1).map(|j| roots[j].clone()),
            hi: roots.get(i).cloned(),
            sample: sample.clone(),
        });
        if let Some(r) = roots.get(i) {
            out.push(LineCell::Point(r.clone()));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{c, rat, t, x, y};

    #[test]
    fn circle_family() {
        let f = &(&x().pow(2) + &y().pow(2)) - &t();
        let cs = critical_set(&f).unwrap();
        assert_eq!(cs.m, &x().pow(2) - &t());
        assert_eq!(cs.r, t());
        assert_eq!(cs.source, CriticalSource::RootsOfR);
        assert_eq!(cs.points.len(), 1);
    }

    #[test]
    fn no_y_uses_dx() {
        let f = &(&(&x().pow(2) - &c(1)) + &(&t() * &x())) - &(&t() * &x().pow(3));
        let cs = critical_set(&f).unwrap();
        assert_eq!(cs.source, CriticalSource::RootsOfDxF);
        let want = &(&(&t().pow(5) - &(&c(2) * &t().pow(3))) + &t()).normalized();
        assert_eq!(cs.designated, want.clone());
        let v: Vec<_> = cs.points.roots().iter().map(|r| r.rational_value().cloned().unwrap()).collect();
        assert_eq!(v, vec![rat(-1, 1), rat(0, 1), rat(1, 1)]);
        assert_eq!(partition_line(&cs.points).len(), 7);
    }

    #[test]
    fn constant_r_has_no_points() {
        let f = &(&y().pow(2) - &x()) - &t();
        let cs = critical_set(&f).unwrap();
        assert_eq!(cs.m.deg(Var::X), 1);
        assert!(cs.r.is_constant() && !cs.r.is_zero());
        assert!(cs.points.is_empty());
        assert_eq!(partition_line(&cs.points).len(), 1);
    }

    #[test]
    fn m_only_in_t() {
        // D_y(y^2 - t) = -4t has no x.
        let f = &(&y().pow(2) - &t()) * &(&y() - &x());
        let cs = critical_set(&(&y().pow(2) - &t())).unwrap_or_else(|e| panic!("{e}"));
        assert_eq!(cs.source, CriticalSource::RootsOfM);
        assert_eq!(cs.points.len(), 1);
        assert!(critical_set(&f).is_ok());
    }

    #[test]
    fn hypotheses_are_checked() {
        assert!(critical_set(&(&t() * &(&x() + &y()))).is_err());
        assert!(critical_set(&(&(&x() * &y().pow(2)) - &t())).is_err());
        assert!(critical_set(&(&y() - &t()).pow(2)).is_err());
    }

    #[test]
    fn partition_of_one_point() {
        let l = realalg::isolate_mpoly(&t()).unwrap();
        let cells = partition_line(&l);
        assert_eq!(cells.len(), 3);
        let samples: Vec<_> = cells
            .iter()
            .filter_map(|c| match c {
                LineCell::Interval { sample, .. } => Some(sample.clone()),
                _ => None,
            })
            .collect();
        assert_eq!(samples, vec![rat(-1, 1), rat(1, 1)]);
    }
}
