use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::eigensolve::Spectrum;
use crate::error::{Error, Result};

/// Decimal notation with 17 significant digits: enough to reproduce the
/// exact double on re-parse, never scientific notation.
pub fn fmt_sig17(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    let exponent = v.abs().log10().floor() as i32;
    let decimals = (16 - exponent).max(0) as usize;
    format!("{v:.decimals$}")
}

/// Write one `psi_<n>.csv` per state (header `x,re_psi,im_psi,abs2`, LF
/// endings, UTF-8), numbering states from `first_quantum_number`. Returns
/// the paths written.
pub fn emit_csv(states: &Spectrum, dir: &Path, first_quantum_number: u32) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir)?;
    let mut written = Vec::with_capacity(states.len());
    for (i, wf) in states.states().enumerate() {
        let path = dir.join(format!("psi_{}.csv", first_quantum_number + i as u32));
        let mut body = String::with_capacity(wf.len() * 64);
        body.push_str("x,re_psi,im_psi,abs2\n");
        for j in 0..wf.len() {
            let z = wf.amp()[j];
            let abs2 = z.re * z.re + z.im * z.im;
            body.push_str(&fmt_sig17(wf.grid().point(j)));
            body.push(',');
            body.push_str(&fmt_sig17(z.re));
            body.push(',');
            body.push_str(&fmt_sig17(z.im));
            body.push(',');
            body.push_str(&fmt_sig17(abs2));
            body.push('\n');
        }
        let mut file = fs::File::create(&path)?;
        file.write_all(body.as_bytes())?;
        written.push(path);
    }
    Ok(written)
}

/// Parse a `psi_<n>.csv` back into rows (x, re, im, abs2).
pub fn read_state_csv(path: &Path) -> Result<Vec<(f64, f64, f64, f64)>> {
    let text = fs::read_to_string(path)?;
    let mut rows = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        if idx == 0 {
            if line != "x,re_psi,im_psi,abs2" {
                return Err(Error::Shape(format!("unexpected CSV header {line:?}")));
            }
            continue;
        }
        let mut cols = line.split(',');
        let mut next = || -> Result<f64> {
            cols.next()
                .ok_or_else(|| Error::Shape(format!("short CSV row {idx}")))?
                .parse::<f64>()
                .map_err(|e| Error::Shape(format!("bad CSV number on row {idx}: {e}")))
        };
        rows.push((next()?, next()?, next()?, next()?));
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::box_state;
    use crate::domain::make_grid;
    use crate::eigensolve::{SolverKind, Spectrum, DEFAULT_SEED};
    use crate::domain::Energy;
    use crate::operators::Scheme;

    fn box_spectrum(alpha: f64) -> Spectrum {
        let g = make_grid(0.0, 10.0, 201).unwrap();
        let pairs = (1..=2)
            .map(|n| {
                (
                    Energy(crate::analytic::box_energy(n, 1.0, 10.0).unwrap().0),
                    box_state(n, 10.0, alpha, &g).unwrap(),
                )
            })
            .collect();
        Spectrum::from_pairs(pairs, Scheme::GaugeExact, SolverKind::Analytic, vec![], DEFAULT_SEED)
            .unwrap()
    }

    #[test]
    fn sig17_round_trips_exactly() {
        let values = [
            0.4472135954999579,
            -0.392466852851058,
            1.0,
            10.0,
            0.005,
            123.456789,
            1e-12,
            -3.0e-5,
            std::f64::consts::PI,
        ];
        for &v in &values {
            let s = fmt_sig17(v);
            assert!(!s.contains('e') && !s.contains('E'), "{s}");
            let back: f64 = s.parse().unwrap();
            assert_eq!(back, v, "{s}");
        }
        assert_eq!(fmt_sig17(0.0), "0");
    }

    #[test]
    fn emit_and_read_back() {
        let dir = tempfile::tempdir().unwrap();
        let spec = box_spectrum(0.1);
        let files = emit_csv(&spec, dir.path(), 1).unwrap();
        assert_eq!(files.len(), 2);
        assert!(files[0].ends_with("psi_1.csv"));

        let rows = read_state_csv(&files[0]).unwrap();
        let wf = spec.state(0);
        assert_eq!(rows.len(), wf.len());
        // boundary row is exactly zero
        assert_eq!(rows[0], (0.0, 0.0, 0.0, 0.0));
        for (j, row) in rows.iter().enumerate() {
            // 17 significant digits reproduce the doubles exactly
            assert_eq!(row.0, wf.grid().point(j));
            assert_eq!(row.1, wf.amp()[j].re);
            assert_eq!(row.2, wf.amp()[j].im);
            let z = wf.amp()[j];
            assert!((row.3 - (z.re * z.re + z.im * z.im)).abs() <= 1e-16);
        }
    }

    #[test]
    fn real_states_have_zero_imaginary_column() {
        let dir = tempfile::tempdir().unwrap();
        let spec = box_spectrum(0.0);
        let files = emit_csv(&spec, dir.path(), 1).unwrap();
        for row in read_state_csv(&files[0]).unwrap() {
            assert_eq!(row.2, 0.0);
        }
    }

    #[test]
    fn byte_stable_across_runs() {
        let d1 = tempfile::tempdir().unwrap();
        let d2 = tempfile::tempdir().unwrap();
        let a = emit_csv(&box_spectrum(0.1), d1.path(), 1).unwrap();
        let b = emit_csv(&box_spectrum(0.1), d2.path(), 1).unwrap();
        for (fa, fb) in a.iter().zip(b.iter()) {
            assert_eq!(std::fs::read(fa).unwrap(), std::fs::read(fb).unwrap());
        }
    }
}
