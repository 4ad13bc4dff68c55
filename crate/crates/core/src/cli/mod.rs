//! Request handling for the `curvefam` binary: parse the input, run the
//! decomposition, serialize the result as JSON and optionally draw it.

pub mod parse;
pub mod svg;

use std::path::PathBuf;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::family1d::{self, LineCell};
use crate::family2d::{self, Cell, Coord, DecomposeOptions, Decomposition, Description};
use crate::poly::{MPoly, Rational, Var};
use crate::realalg::AlgebraicNumber;

pub use parse::{parse_polynomial, print_polynomial, Parsed, VarNames};

/// Version of the JSON layout.
pub const SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    TwoParam,
    OneParam,
}

#[derive(Clone, Debug)]
pub struct Options {
    pub topology: bool,
    pub json: Option<PathBuf>,
    pub svg: Option<PathBuf>,
    /// Isolating intervals in the output are refined below this width.
    pub refine_width: Rational,
    /// `tmin, tmax, smin, smax` for the drawing.
    pub window: [Rational; 4],
    pub verbose: bool,
}

impl Default for Options {
    fn default() -> Self {
        let two = Rational::from_integer(2.into());
        Options {
            topology: false,
            json: None,
            svg: None,
            refine_width: Rational::new(1.into(), 1024.into()),
            window: [-two.clone(), two.clone(), -two.clone(), two],
            verbose: false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct AnalysisRequest {
    pub mode: Mode,
    pub curve_vars: [String; 2],
    pub param_vars: Vec<String>,
    pub input_text: String,
    pub options: Options,
}

impl AnalysisRequest {
    pub fn names(&self) -> Result<VarNames> {
        let want = match self.mode {
            Mode::TwoParam => 2,
            Mode::OneParam => 1,
        };
        if self.param_vars.len() != want {
            return Err(Error::Hypothesis(format!(
                "this mode needs {want} parameter name(s), got {}",
                self.param_vars.len()
            )));
        }
        let params: Vec<&str> = self.param_vars.iter().map(String::as_str).collect();
        VarNames::new([&self.curve_vars[0], &self.curve_vars[1]], &params)
    }
}

/// The artifacts of a successful analysis.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub json: Value,
    pub svg: Option<String>,
}

fn number(a: &AlgebraicNumber, width: &Rational) -> Value {
    serde_json::to_value(a.refine(width)).expect("serializable")
}

fn coord(c: &Coord, width: &Rational) -> Value {
    match c {
        Coord::Rational(r) => Value::String(r.to_string()),
        Coord::Algebraic(a) => number(a, width),
    }
}

fn opt_number(a: &Option<AlgebraicNumber>, width: &Rational) -> Value {
    a.as_ref().map_or(Value::Null, |a| number(a, width))
}

fn description(d: &Description, w: &Rational) -> Value {
    match d {
        Description::Point { t, s } => json!({"type": "point", "t": number(t, w), "s": number(s, w)}),
        Description::VerticalSegment { t, s_lo, s_hi } => json!({
            "type": "vertical_segment",
            "t": number(t, w),
            "s_lo": opt_number(s_lo, w),
            "s_hi": opt_number(s_hi, w),
        }),
        Description::BranchArc { interval, branch, t_lo, t_hi } => json!({
            "type": "branch_arc",
            "interval": interval,
            "branch": branch,
            "t_lo": opt_number(t_lo, w),
            "t_hi": opt_number(t_hi, w),
        }),
        Description::BranchBand { interval, band, branches, t_lo, t_hi } => json!({
            "type": "branch_band",
            "interval": interval,
            "band": band,
            "branches": branches,
            "t_lo": opt_number(t_lo, w),
            "t_hi": opt_number(t_hi, w),
        }),
        Description::Region { bands, segments } => json!({
            "type": "region",
            "bands": bands,
            "segments": segments.iter().map(|g| json!({
                "t": number(&g.t, w),
                "s_lo": opt_number(&g.s_lo, w),
                "s_hi": opt_number(&g.s_hi, w),
            })).collect::<Vec<_>>(),
        }),
    }
}

fn cell_json(c: &Cell, w: &Rational) -> Value {
    let mut v = json!({
        "dim": c.dim,
        "kind": c.kind,
        "description": description(&c.description, w),
        "sample": [coord(&c.sample.0, w), coord(&c.sample.1, w)],
        "topology_status": c.topology_status,
    });
    if let Some(g) = &c.topology {
        v["canonical_code"] = json!(g.canonical_code);
        v["components"] = json!(g.components);
        v["isolated_points"] = json!(g.isolated_points);
    }
    v
}

/// JSON document for a two-parameter decomposition.
pub fn decomposition_json(d: &Decomposition, names: &VarNames, width: &Rational) -> Value {
    let pr = |p: &MPoly| print_polynomial(p, names);
    let mut polys = json!({
        "M": pr(&d.data.m),
        "R": pr(&d.data.r),
        "Gtilde": pr(&d.data.gtilde),
        "G": pr(&d.data.g),
    });
    for (key, p) in [("P", &d.data.p), ("J", &d.data.j), ("K", &d.data.k)] {
        if !p.is_zero() {
            polys[key] = json!(pr(p));
        }
    }
    let pn = names.print_names();
    json!({
        "schema": SCHEMA,
        "mode": "two_param",
        "variables": {"curve": [pn[0], pn[1]], "params": [pn[2], pn[3]]},
        "input": pr(&d.family.raw),
        "normalized": pr(&d.family.f),
        "shear": d.family.shear,
        "branch": d.branch,
        "polynomials": polys,
        "curve": pr(&d.curve),
        "A_set": d.a_set.roots().iter().map(|a| number(a, width)).collect::<Vec<_>>(),
        "counts": d.counts(),
        "cells": d.cells.iter().map(|c| cell_json(c, width)).collect::<Vec<_>>(),
        "diagnostics": d.diagnostics,
    })
}

fn one_param(f: &MPoly, names: &VarNames, opts: &Options) -> Result<Value> {
    let cs = family1d::critical_set(f)?;
    let w = &opts.refine_width;
    let pr = |p: &MPoly| print_polynomial(p, names);
    let mut cells = vec![];
    let mut diagnostics = vec![];
    for cell in family1d::partition_line(&cs.points) {
        let (dim, sample, lo, hi) = match &cell {
            LineCell::Point(a) => (0, Coord::of(a), None, None),
            LineCell::Interval { lo, hi, sample } => (1, Coord::Rational(sample.clone()), lo.clone(), hi.clone()),
        };
        let mut v = json!({
            "dim": dim,
            "sample": coord(&sample, w),
            "lo": opt_number(&lo, w),
            "hi": opt_number(&hi, w),
        });
        match (&sample, opts.topology) {
            (_, false) => v["topology_status"] = json!("not_requested"),
            (Coord::Algebraic(_), true) => v["topology_status"] = json!("skipped_algebraic_sample"),
            (Coord::Rational(t0), true) => {
                let (h, _) = f.specialize(&[(Var::T, t0.clone())]);
                match crate::curvetopo::curve_topology(&h) {
                    Ok(g) => {
                        v["topology_status"] = json!("labeled");
                        v["canonical_code"] = json!(g.canonical_code);
                        v["components"] = json!(g.components);
                    }
                    Err(e) => {
                        v["topology_status"] = json!("failed");
                        diagnostics.push(format!("labeling at {t0} failed: {e}"));
                    }
                }
            }
        }
        cells.push(v);
    }
    let pn = names.print_names();
    Ok(json!({
        "schema": SCHEMA,
        "mode": "one_param",
        "variables": {"curve": [pn[0], pn[1]], "params": [pn[2]]},
        "input": pr(f),
        "branch": cs.source,
        "polynomials": {"M": pr(&cs.m), "R": pr(&cs.r), "designated": pr(&cs.designated)},
        "A_set": cs.points.roots().iter().map(|a| number(a, w)).collect::<Vec<_>>(),
        "cells": cells,
        "diagnostics": diagnostics,
    }))
}

/// Runs a request without touching the file system.
pub fn analyze_request(req: &AnalysisRequest) -> Result<Outcome> {
    let names = req.names()?;
    let parsed = parse_polynomial(&req.input_text, &names)?;
    let opts = &req.options;
    match req.mode {
        Mode::OneParam => Ok(Outcome {
            json: one_param(&parsed.poly, &names, opts)?,
            svg: None,
        }),
        Mode::TwoParam => {
            let d = family2d::analyze(
                &parsed.poly,
                &DecomposeOptions {
                    label_topology: opts.topology,
                },
            )?;
            let svg = opts.svg.as_ref().map(|_| svg::render_svg(&d, &opts.window, &names));
            Ok(Outcome {
                json: decomposition_json(&d, &names, &opts.refine_width),
                svg,
            })
        }
    }
}

/// Process exit status for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => 2,
        Error::Io(_) => 4,
        _ => 3,
    }
}

/// Machine-readable description of a failure.
pub fn error_json(e: &Error) -> Value {
    let kind = match e {
        Error::Parse { .. } => "parse error",
        Error::Hypothesis(_) => "hypothesis violation",
        Error::Io(_) => "io error",
        Error::Certification(_) => "certification failure",
        _ => "computation error",
    };
    let mut v = json!({"error": kind, "message": e.to_string()});
    if let Error::Parse { line, column, offset, .. } = e {
        v["line"] = json!(line);
        v["column"] = json!(column);
        v["offset"] = json!(offset);
    }
    v
}

/// Runs a request, writes the artifacts and returns the exit status.
pub fn run(req: &AnalysisRequest) -> i32 {
    let result = analyze_request(req).and_then(|out| {
        let text = serde_json::to_string_pretty(&out.json).expect("serializable") + "\n";
        match &req.options.json {
            Some(p) => std::fs::write(p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?,
            None => print!("{text}"),
        }
        if let (Some(p), Some(svg)) = (&req.options.svg, &out.svg) {
            std::fs::write(p, svg).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
        }
        if req.options.verbose {
            for d in out.json["diagnostics"].as_array().into_iter().flatten() {
                eprintln!("warning: {}", d.as_str().unwrap_or_default());
            }
        }
        Ok(())
    });
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("{}", error_json(&e));
            exit_code(&e)
        }
    }
}
