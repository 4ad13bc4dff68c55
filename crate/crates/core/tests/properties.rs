//! Invariants checked on random inputs.

mod common;

use std::sync::OnceLock;

use common::*;
use curvefam::cli::{self, parse_polynomial, print_polynomial, AnalysisRequest, Mode, Options, VarNames};
use curvefam::family2d::{self, DecomposeOptions, Decomposition};
use curvefam::realalg::{self, AlgebraicNumber};
use curvefam::upoly::UPoly;
use curvefam::{elim, MPoly, Rational, Var};
use num_bigint::BigInt;
use proptest::prelude::*;

fn exps(vars: usize, max_deg: u32) -> impl Strategy<Value = [u32; 4]> {
    prop::collection::vec(0..=max_deg, vars).prop_map(|v| {
        let mut e = [0; 4];
        e[..v.len()].copy_from_slice(&v);
        e
    })
}

/// Sparse polynomial in the first `vars` variables of `x, y, t, s`.
fn poly(vars: usize, max_deg: u32, max_terms: usize) -> impl Strategy<Value = MPoly> {
    prop::collection::vec((exps(vars, max_deg), -9i64..=9), 1..=max_terms)
        .prop_map(|ts| MPoly::from_terms(ts.into_iter().filter(|(_, c)| *c != 0)))
}

fn upoly(max_deg: usize) -> impl Strategy<Value = UPoly> {
    prop::collection::vec(-20i64..=20, 1..=max_deg + 1)
        .prop_map(|c| UPoly::new(c.into_iter().map(BigInt::from).collect()))
}

fn rational() -> impl Strategy<Value = Rational> {
    (-60i64..=60, 1i64..=12).prop_map(|(a, b)| rat(a, b))
}

fn cassini_decomposition() -> &'static Decomposition {
    static D: OnceLock<Decomposition> = OnceLock::new();
    D.get_or_init(|| family2d::analyze(&cassini(), &DecomposeOptions { label_topology: false }).unwrap())
}

fn linear_decomposition() -> &'static Decomposition {
    static D: OnceLock<Decomposition> = OnceLock::new();
    D.get_or_init(|| family2d::analyze(&linear_system(), &DecomposeOptions { label_topology: false }).unwrap())
}

/// A rational strictly between two consecutive members of `a`, or beyond the
/// ends, chosen by `u` in `[0, 1)`.
fn sample_in_gap(a: &[AlgebraicNumber], gap: usize, u: f64) -> Rational {
    let w = rat(1, 1 << 20);
    let lo = (gap > 0).then(|| a[gap - 1].refine(&w).interval().1.clone());
    let hi = (gap < a.len()).then(|| a[gap].refine(&w).interval().0.clone());
    let frac = rat((u * 1000.0) as i64 + 1, 1002);
    match (lo, hi) {
        (Some(l), Some(h)) => &l + &((&h - &l) * frac),
        (Some(l), None) => l + frac * rat(10, 1),
        (None, Some(h)) => h - frac * rat(10, 1),
        (None, None) => frac,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn printing_and_parsing_round_trip(p in poly(4, 3, 6)) {
        prop_assume!(!p.is_zero());
        let names = VarNames::standard();
        let back = parse_polynomial(&print_polynomial(&p, &names), &names).unwrap().poly;
        let n = p.normalized();
        prop_assert!(back == n || back == n.scale(&BigInt::from(-1)));
    }

    #[test]
    fn isolation_agrees_with_sturm(p in upoly(8)) {
        prop_assume!(!p.is_zero());
        let roots = realalg::isolate_real_roots(&p).unwrap();
        prop_assert_eq!(roots.len(), realalg::sturm_root_count(&p.squarefree()));
        let rs = roots.roots();
        for pair in rs.windows(2) {
            prop_assert!(pair[0].interval().1 <= pair[1].interval().0);
        }
        for r in rs {
            let (lo, hi) = r.interval();
            if lo == hi {
                prop_assert_eq!(p.sign_at(lo), std::cmp::Ordering::Equal);
            } else {
                let sq = p.squarefree();
                prop_assert_ne!(sq.sign_at(lo), sq.sign_at(hi));
            }
        }
    }

    #[test]
    fn subresultant_and_bareiss_resultants_agree(p in poly(3, 3, 5), q in poly(3, 3, 5), k in 0usize..3) {
        let v = Var::ALL[k];
        prop_assume!(p.deg(v) > 0 && q.deg(v) > 0);
        prop_assert_eq!(elim::resultant(&p, &q, v), elim::resultant_bareiss(&p, &q, v));
    }

    #[test]
    fn gcd_contains_planted_factor(a in poly(3, 2, 4), b in poly(3, 2, 4), c in poly(3, 2, 3)) {
        prop_assume!(!a.is_zero() && !b.is_zero() && !c.is_zero());
        let (p, q) = (&a * &c, &b * &c);
        let g = elim::gcd(&p, &q);
        prop_assert!(p.div_exact(&g).is_some() && q.div_exact(&g).is_some());
        prop_assert!(g.div_exact(&c.normalized()).is_some());
    }

    #[test]
    fn squarefree_part_ignores_multiplicity(a in poly(3, 2, 4), b in poly(3, 2, 4)) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let once = elim::squarefree_part(&(&a * &b), &Var::ALL).unwrap();
        let twice = elim::squarefree_part(&(&(&a * &a) * &b), &Var::ALL).unwrap();
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn cells_partition_the_plane(t in rational(), s in rational()) {
        for d in [cassini_decomposition(), linear_decomposition()] {
            prop_assert_eq!(d.classify(&t, &s).len(), 1, "({}, {})", t, s);
        }
    }

    #[test]
    fn branch_count_is_constant_on_gaps(u in prop::collection::vec(0.0f64..1.0, 3)) {
        let d = cassini_decomposition();
        for gap in 0..=d.a_set.len() {
            let a = d.a_set.roots();
            let counts: Vec<usize> = u
                .iter()
                .map(|&x| d.s_roots(&sample_in_gap(a, gap, x)).unwrap().len())
                .collect();
            prop_assert!(counts.windows(2).all(|w| w[0] == w[1]), "gap {}: {:?}", gap, counts);
        }
    }
}

/// Every `t` where `R` has a multiple root in `s` or loses degree is a
/// critical value.
#[test]
fn discriminant_roots_of_r_are_critical() {
    for f in [cassini(), offset()] {
        let d = family2d::analyze(&f, &DecomposeOptions { label_topology: false }).unwrap();
        let r = &d.data.r;
        let disc = elim::discriminant(r, Var::S).unwrap();
        let lc = r.leading_coefficient(Var::S).0;
        for p in [disc, lc] {
            if p.is_constant() {
                continue;
            }
            let p = elim::squarefree_part(&p, &[Var::T]).unwrap();
            for root in realalg::isolate_mpoly(&p).unwrap().roots() {
                assert!(d.a_set.roots().iter().any(|a| a.same_as(root)), "{root} missing");
            }
        }
    }
}

#[test]
fn samples_of_a_cell_share_its_label() {
    let d = family2d::analyze(&cassini(), &DecomposeOptions::default()).unwrap();
    for cell in &d.cells {
        let Some(own) = cell.topology.as_ref() else { continue };
        for (t, s) in d.extra_samples(cell).unwrap() {
            let other = family2d::topology_at(&d.family.f, &t, &s).unwrap();
            assert_eq!(own.canonical_code, other.canonical_code, "cell {:?} at ({t}, {s})", cell.kind);
        }
    }
}

#[test]
fn json_output_is_reproducible() {
    let request = AnalysisRequest {
        mode: Mode::TwoParam,
        curve_vars: ["x".into(), "y".into()],
        param_vars: vec!["t".into(), "s".into()],
        input_text: "-1 + x^2 + t*(x-y) + s*(x^3-y)".into(),
        options: Options { topology: true, ..Options::default() },
    };
    let first = serde_json::to_string(&cli::analyze_request(&request).unwrap().json).unwrap();
    let second = serde_json::to_string(&cli::analyze_request(&request).unwrap().json).unwrap();
    assert_eq!(first, second);
}
