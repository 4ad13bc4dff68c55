//! Display of a decomposition as an SVG picture. Branches are traced by
//! isolating the roots over a grid of rational abscissae, which is fine
//! for looking at but certifies nothing.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::family2d::{Coord, Decomposition, Description};
use crate::poly::Rational;
use crate::realalg::AlgebraicNumber;

use super::VarNames;

const SIZE: f64 = 640.0;
const MARGIN: f64 = 40.0;
const COLUMNS: i64 = 400;

struct Frame {
    w: [f64; 4],
}

impl Frame {
    fn px(&self, t: f64) -> f64 {
        MARGIN + (t - self.w[0]) / (self.w[1] - self.w[0]) * SIZE
    }

    fn py(&self, s: f64) -> f64 {
        MARGIN + (self.w[3] - s) / (self.w[3] - self.w[2]) * SIZE
    }

    fn clamp_s(&self, s: f64) -> f64 {
        s.clamp(self.w[2], self.w[3])
    }

    fn inside(&self, t: f64, s: f64) -> bool {
        (self.w[0]..=self.w[1]).contains(&t) && (self.w[2]..=self.w[3]).contains(&s)
    }
}

fn to_f64(r: &Rational) -> f64 {
    AlgebraicNumber::rational(r.clone()).to_f64()
}

fn fill(idx: usize) -> String {
    format!("hsl({},55%,85%)", (idx * 47) % 360)
}

/// Column data: abscissa and the branch ordinates over one interval.
type Column = (f64, Vec<f64>);

/// Draws the cells of `d` inside `window = [tmin, tmax, smin, smax]`.
pub fn render_svg(d: &Decomposition, window: &[Rational; 4], names: &VarNames) -> String {
    let frame = Frame {
        w: [to_f64(&window[0]), to_f64(&window[1]), to_f64(&window[2]), to_f64(&window[3])],
    };
    let mut warnings = vec![];
    let total = 2.0 * MARGIN + SIZE;
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{total}" height="{total}" viewBox="0 0 {total} {total}">"#
    )
    .unwrap();
    writeln!(out, r#"<rect class="background" x="0" y="0" width="{total}" height="{total}" fill="white"/>"#).unwrap();

    // Columns grouped by open interval of the critical values.
    let width = &window[1] - &window[0];
    let tol = Rational::new(1.into(), 1_000_000.into());
    let mut by_interval: BTreeMap<usize, Vec<Column>> = BTreeMap::new();
    if width > Rational::from_integer(0.into()) {
        for k in 0..=COLUMNS {
            let t0 = &window[0] + &width * Rational::new(k.into(), COLUMNS.into());
            let (j, on) = d.a_set.locate(&t0);
            if on {
                continue;
            }
            match d.s_roots(&t0) {
                Ok(l) => {
                    let ys = l.roots().iter().map(|a| a.refine(&tol).to_f64()).collect();
                    by_interval.entry(j).or_default().push((to_f64(&t0), ys));
                }
                Err(e) => warnings.push(format!("column {t0}: {e}")),
            }
        }
    }

    let mut band_cell = BTreeMap::new();
    for (i, c) in d.cells.iter().enumerate() {
        match &c.description {
            Description::BranchBand { interval, band, .. } => {
                band_cell.insert((*interval, *band), i);
            }
            Description::Region { bands, .. } => {
                for b in bands {
                    band_cell.insert(*b, i);
                }
            }
            _ => {}
        }
    }

    for (&j, cols) in &by_interval {
        let k = cols[0].1.len();
        for b in 0..=k {
            let lower = |c: &Column| if b == 0 { frame.w[2] } else { frame.clamp_s(c.1[b - 1]) };
            let upper = |c: &Column| if b == k { frame.w[3] } else { frame.clamp_s(c.1[b]) };
            let mut pts: Vec<String> = cols
                .iter()
                .map(|c| format!("{:.2},{:.2}", frame.px(c.0), frame.py(lower(c))))
                .collect();
            pts.extend(
                cols.iter()
                    .rev()
                    .map(|c| format!("{:.2},{:.2}", frame.px(c.0), frame.py(upper(c)))),
            );
            let color = band_cell.get(&(j, b)).map_or("none".to_string(), |&i| fill(i));
            writeln!(out, r#"<polygon class="cell" points="{}" fill="{color}" stroke="none"/>"#, pts.join(" ")).unwrap();
        }
    }

    for (&j, cols) in &by_interval {
        let k = cols[0].1.len();
        for l in 0..k {
            let visible: Vec<&Column> = cols
                .iter()
                .filter(|c| (frame.w[2]..=frame.w[3]).contains(&c.1[l]))
                .collect();
            if visible.len() < 2 {
                continue;
            }
            let pts: Vec<String> = visible
                .iter()
                .map(|c| format!("{:.2},{:.2}", frame.px(c.0), frame.py(c.1[l])))
                .collect();
            writeln!(
                out,
                r#"<polyline class="branch" data-interval="{j}" data-branch="{l}" points="{}" fill="none" stroke="black" stroke-width="1.5"/>"#,
                pts.join(" ")
            )
            .unwrap();
        }
    }

    for c in &d.cells {
        match &c.description {
            Description::VerticalSegment { t, s_lo, s_hi } => {
                let t = t.to_f64();
                if !(frame.w[0]..=frame.w[1]).contains(&t) {
                    continue;
                }
                let lo = s_lo.as_ref().map_or(frame.w[2], |a| frame.clamp_s(a.to_f64()));
                let hi = s_hi.as_ref().map_or(frame.w[3], |a| frame.clamp_s(a.to_f64()));
                if lo < hi {
                    writeln!(
                        out,
                        r#"<line class="vertical" x1="{x:.2}" y1="{:.2}" x2="{x:.2}" y2="{:.2}" stroke="black" stroke-width="1.5"/>"#,
                        frame.py(lo),
                        frame.py(hi),
                        x = frame.px(t)
                    )
                    .unwrap();
                }
            }
            Description::Point { t, s } => {
                let (t, s) = (t.to_f64(), s.to_f64());
                if frame.inside(t, s) {
                    writeln!(
                        out,
                        r#"<circle class="point" cx="{:.2}" cy="{:.2}" r="4" fill="red"/>"#,
                        frame.px(t),
                        frame.py(s)
                    )
                    .unwrap();
                }
            }
            _ => {}
        }
    }

    for (i, c) in d.cells.iter().enumerate() {
        if c.dim != 2 {
            continue;
        }
        let (t, s) = (c.sample.0.to_f64(), c.sample.1.to_f64());
        if !frame.inside(t, s) || matches!(c.sample.0, Coord::Algebraic(_)) {
            continue;
        }
        writeln!(
            out,
            r#"<text class="sample" x="{:.2}" y="{:.2}" font-size="11" font-family="sans-serif">{i}</text>"#,
            frame.px(t) + 3.0,
            frame.py(s) - 3.0
        )
        .unwrap();
    }

    let pn = names.print_names();
    writeln!(
        out,
        r#"<text class="axes" x="{MARGIN}" y="{:.2}" font-size="12" font-family="sans-serif">{} in [{}, {}], {} in [{}, {}]</text>"#,
        total - 12.0,
        pn[2],
        window[0],
        window[1],
        pn[3],
        window[2],
        window[3]
    )
    .unwrap();
    for w in warnings {
        writeln!(out, "<!-- warning: {} -->", w.replace("--", "-")).unwrap();
    }
    out.push_str("</svg>\n");
    out
}
