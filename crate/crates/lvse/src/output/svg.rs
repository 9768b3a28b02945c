use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::Path;

use crate::eigensolve::Spectrum;
use crate::error::Result;

const WIDTH: f64 = 840.0;
const HEIGHT: f64 = 520.0;
const MARGIN_LEFT: f64 = 70.0;
const MARGIN_RIGHT: f64 = 130.0;
const MARGIN_TOP: f64 = 50.0;
const MARGIN_BOTTOM: f64 = 50.0;

const PALETTE: [&str; 6] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
];

/// Which component of the states to plot.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SvgPart {
    Re,
    Im,
    Abs2,
}

impl SvgPart {
    pub fn label(&self) -> &'static str {
        match self {
            SvgPart::Re => "Re psi(x)",
            SvgPart::Im => "Im psi(x)",
            SvgPart::Abs2 => "|psi(x)|^2",
        }
    }

    pub fn file_tag(&self) -> &'static str {
        match self {
            SvgPart::Re => "re",
            SvgPart::Im => "im",
            SvgPart::Abs2 => "abs2",
        }
    }

    fn component(&self, z: num_complex::Complex64) -> f64 {
        match self {
            SvgPart::Re => z.re,
            SvgPart::Im => z.im,
            SvgPart::Abs2 => z.norm_sqr(),
        }
    }
}

/// Title and legend configuration.
#[derive(Debug, Clone)]
pub struct PlotMeta {
    pub title: String,
    /// Quantum number of the first plotted state (box counts from 1, the
    /// oscillator from 0).
    pub first_quantum_number: u32,
}

fn nice_step(span: f64, target_ticks: usize) -> f64 {
    let raw = span / target_ticks as f64;
    let mag = 10f64.powf(raw.log10().floor());
    let norm = raw / mag;
    let step = if norm < 1.5 {
        1.0
    } else if norm < 3.5 {
        2.0
    } else if norm < 7.5 {
        5.0
    } else {
        10.0
    };
    step * mag
}

fn ticks(lo: f64, hi: f64) -> Vec<f64> {
    let step = nice_step(hi - lo, 6);
    let first = (lo / step).ceil() as i64;
    let last = (hi / step).floor() as i64;
    (first..=last).map(|i| i as f64 * step).collect()
}

fn fmt_tick(v: f64) -> String {
    // shortest faithful decimal keeps the output deterministic
    if v == 0.0 {
        "0".to_string()
    } else {
        format!("{v}")
    }
}

/// Render one polyline per state into a standalone SVG 1.1 file with linear
/// axes, tick labels, a legend and a title. No external assets; output is
/// byte-deterministic for a fixed spectrum.
pub fn emit_svg(states: &Spectrum, part: SvgPart, meta: &PlotMeta, path: &Path) -> Result<()> {
    let grid = states.state(0).grid();
    let x_lo = grid.x_min();
    let x_hi = grid.x_max();

    let mut y_lo = f64::INFINITY;
    let mut y_hi = f64::NEG_INFINITY;
    for wf in states.states() {
        for j in 0..wf.len() {
            let y = part.component(wf.amp()[j]);
            y_lo = y_lo.min(y);
            y_hi = y_hi.max(y);
        }
    }
    if !(y_hi - y_lo).is_finite() || (y_hi - y_lo) < 1e-30 {
        // flat data (e.g. identically-zero imaginary parts)
        y_lo -= 1.0;
        y_hi += 1.0;
    } else {
        let pad = 0.05 * (y_hi - y_lo);
        y_lo -= pad;
        y_hi += pad;
    }

    let plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
    let sx = |x: f64| MARGIN_LEFT + (x - x_lo) / (x_hi - x_lo) * plot_w;
    let sy = |y: f64| MARGIN_TOP + (y_hi - y) / (y_hi - y_lo) * plot_h;

    let mut out = String::with_capacity(64 * 1024);
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{WIDTH}\" height=\"{HEIGHT}\" viewBox=\"0 0 {WIDTH} {HEIGHT}\">"
    );
    let _ = writeln!(out, "<rect width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"white\"/>");
    let _ = writeln!(
        out,
        "<text x=\"{:.1}\" y=\"28\" font-family=\"sans-serif\" font-size=\"16\" text-anchor=\"middle\">{}</text>",
        MARGIN_LEFT + plot_w / 2.0,
        xml_escape(&meta.title)
    );

    // frame
    let _ = writeln!(
        out,
        "<rect x=\"{:.1}\" y=\"{:.1}\" width=\"{:.1}\" height=\"{:.1}\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>",
        MARGIN_LEFT, MARGIN_TOP, plot_w, plot_h
    );

    for tx in ticks(x_lo, x_hi) {
        let px = sx(tx);
        let _ = writeln!(
            out,
            "<line x1=\"{px:.2}\" y1=\"{:.1}\" x2=\"{px:.2}\" y2=\"{:.1}\" stroke=\"black\" stroke-width=\"1\"/>",
            MARGIN_TOP + plot_h,
            MARGIN_TOP + plot_h + 5.0
        );
        let _ = writeln!(
            out,
            "<text x=\"{px:.2}\" y=\"{:.1}\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">{}</text>",
            MARGIN_TOP + plot_h + 18.0,
            fmt_tick(tx)
        );
    }
    for ty in ticks(y_lo, y_hi) {
        let py = sy(ty);
        let _ = writeln!(
            out,
            "<line x1=\"{:.1}\" y1=\"{py:.2}\" x2=\"{:.1}\" y2=\"{py:.2}\" stroke=\"black\" stroke-width=\"1\"/>",
            MARGIN_LEFT - 5.0,
            MARGIN_LEFT
        );
        let _ = writeln!(
            out,
            "<text x=\"{:.1}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">{}</text>",
            MARGIN_LEFT - 8.0,
            py + 4.0,
            fmt_tick(ty)
        );
    }

    // zero line when it crosses the plot
    if y_lo < 0.0 && y_hi > 0.0 {
        let py = sy(0.0);
        let _ = writeln!(
            out,
            "<line x1=\"{:.1}\" y1=\"{py:.2}\" x2=\"{:.1}\" y2=\"{py:.2}\" stroke=\"#999999\" stroke-width=\"0.5\" stroke-dasharray=\"4 3\"/>",
            MARGIN_LEFT,
            MARGIN_LEFT + plot_w
        );
    }

    // axis labels
    let _ = writeln!(
        out,
        "<text x=\"{:.1}\" y=\"{:.1}\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">x</text>",
        MARGIN_LEFT + plot_w / 2.0,
        HEIGHT - 10.0
    );
    let _ = writeln!(
        out,
        "<text x=\"18\" y=\"{:.1}\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 18 {:.1})\">{}</text>",
        MARGIN_TOP + plot_h / 2.0,
        MARGIN_TOP + plot_h / 2.0,
        part.label()
    );

    for (i, wf) in states.states().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let mut points = String::with_capacity(wf.len() * 16);
        for j in 0..wf.len() {
            let x = sx(wf.grid().point(j));
            let y = sy(part.component(wf.amp()[j]));
            let _ = write!(points, "{x:.2},{y:.2} ");
        }
        let _ = writeln!(
            out,
            "<polyline points=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\"/>",
            points.trim_end()
        );
        // legend
        let ly = MARGIN_TOP + 16.0 + 20.0 * i as f64;
        let lx = MARGIN_LEFT + plot_w + 12.0;
        let _ = writeln!(
            out,
            "<line x1=\"{lx:.1}\" y1=\"{:.1}\" x2=\"{:.1}\" y2=\"{:.1}\" stroke=\"{color}\" stroke-width=\"2\"/>",
            ly - 4.0,
            lx + 22.0,
            ly - 4.0
        );
        let _ = writeln!(
            out,
            "<text x=\"{:.1}\" y=\"{ly:.1}\" font-family=\"sans-serif\" font-size=\"12\">n={}</text>",
            lx + 28.0,
            meta.first_quantum_number + i as u32
        );
    }

    let _ = writeln!(out, "</svg>");
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent)?;
    }
    let mut file = fs::File::create(path)?;
    file.write_all(out.as_bytes())?;
    Ok(())
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::{box_energy, box_state, ho_energy, ho_state};
    use crate::domain::{make_grid, Energy};
    use crate::eigensolve::{SolverKind, Spectrum, DEFAULT_SEED};
    use crate::operators::Scheme;

    fn spectrum(alpha: f64, n_states: u32) -> Spectrum {
        let g = make_grid(0.0, 10.0, 301).unwrap();
        let pairs = (1..=n_states)
            .map(|n| {
                (
                    Energy(box_energy(n, 1.0, 10.0).unwrap().0),
                    box_state(n, 10.0, alpha, &g).unwrap(),
                )
            })
            .collect();
        Spectrum::from_pairs(pairs, Scheme::GaugeExact, SolverKind::Analytic, vec![], DEFAULT_SEED)
            .unwrap()
    }

    #[test]
    fn four_polylines_over_the_box_range() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("fig.svg");
        let meta = PlotMeta {
            title: "well states".into(),
            first_quantum_number: 1,
        };
        emit_svg(&spectrum(0.1, 4), SvgPart::Re, &meta, &path).unwrap();
        let body = std::fs::read_to_string(&path).unwrap();
        assert_eq!(body.matches("<polyline").count(), 4);
        assert!(body.contains("n=1") && body.contains("n=4"));
        assert!(body.starts_with("<svg"));
        assert!(body.trim_end().ends_with("</svg>"));

        // the density view renders too, with its axis label
        let path = dir.path().join("abs2.svg");
        emit_svg(&spectrum(0.1, 2), SvgPart::Abs2, &meta, &path).unwrap();
        let body = std::fs::read_to_string(&path).unwrap();
        assert_eq!(body.matches("<polyline").count(), 2);
        assert!(body.contains("|psi(x)|^2"));
    }

    #[test]
    fn byte_deterministic() {
        let dir = tempfile::tempdir().unwrap();
        let a = dir.path().join("a.svg");
        let b = dir.path().join("b.svg");
        let meta = PlotMeta {
            title: "t".into(),
            first_quantum_number: 1,
        };
        emit_svg(&spectrum(0.1, 3), SvgPart::Im, &meta, &a).unwrap();
        emit_svg(&spectrum(0.1, 3), SvgPart::Im, &meta, &b).unwrap();
        assert_eq!(std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
    }

    #[test]
    fn flat_imaginary_parts_render_without_degenerate_axes() {
        // alpha = 0 oscillator states are real; the im plot must still be
        // a valid SVG with all polylines on the zero line
        let g = make_grid(-8.0, 8.0, 257).unwrap();
        let pairs = (0..3)
            .map(|n| {
                (
                    Energy(ho_energy(n, 1.0).unwrap().0),
                    ho_state(n, 1.0, 1.0, 0.0, &g).unwrap(),
                )
            })
            .collect();
        let spec =
            Spectrum::from_pairs(pairs, Scheme::GaugeExact, SolverKind::Analytic, vec![], DEFAULT_SEED)
                .unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("im.svg");
        let meta = PlotMeta {
            title: "flat".into(),
            first_quantum_number: 0,
        };
        emit_svg(&spec, SvgPart::Im, &meta, &path).unwrap();
        let body = std::fs::read_to_string(&path).unwrap();
        assert_eq!(body.matches("<polyline").count(), 3);
        // every sampled y coordinate is identical (flat lines)
        let first_line = body.lines().find(|l| l.starts_with("<polyline")).unwrap();
        let start = first_line.find("points=\"").unwrap() + "points=\"".len();
        let end = start + first_line[start..].find('"').unwrap();
        let ys: Vec<&str> = first_line[start..end]
            .split(' ')
            .filter_map(|p| p.split(',').nth(1))
            .collect();
        assert!(ys.len() > 200);
        assert!(ys.windows(2).all(|w| w[0] == w[1]));
    }
}
