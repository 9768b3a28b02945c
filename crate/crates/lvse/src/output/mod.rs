//! File emission: per-state CSV tables, self-rendered SVG plots and the
//! JSON run report. All outputs are byte-deterministic for a fixed input.

pub mod csv;
pub mod json;
pub mod svg;

pub use csv::{emit_csv, read_state_csv};
pub use json::{validate_report, CheckResult};
pub use svg::{emit_svg, PlotMeta, SvgPart};
