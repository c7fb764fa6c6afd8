//! Canonical JSON and plain-text rendering of reports.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::intersect::IntersectionReport;
use crate::trace::DetectedSlope;

/// Keys sorted, two-space indentation, trailing newline. Parsing the output
/// and re-rendering it yields the same bytes.
pub fn to_canonical_json<T: Serialize>(value: &T) -> Result<String> {
    let v = serde_json::to_value(value).map_err(|e| Error::Parse(e.to_string()))?;
    Ok(render_value(&v))
}

fn render_value(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values render");
    s.push('\n');
    s
}

/// Re-renders JSON text canonically.
pub fn recanonicalize(text: &str) -> Result<String> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    Ok(render_value(&v))
}

pub fn round_trips(text: &str) -> bool {
    recanonicalize(text).is_ok_and(|again| again == text)
}

pub fn render_report_text(report: &IntersectionReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "J({0},{0}), n = {1}", 2 * report.n, report.n);
    let _ = writeln!(
        out,
        "intersection r-values: {}, affine points in (r, x): {}",
        report.r_root_count, report.affine_points
    );
    for (i, l) in report.loci.iter().enumerate() {
        let _ = writeln!(out, "locus {i}: {} = 0", l.modulus);
        let _ = writeln!(out, "  x^2 = {}", l.x_squared);
        let _ = writeln!(out, "  minimal polynomial of u = x^2: {}", l.x_squared_min_poly);
        for p in &l.x_min_polys {
            let _ = writeln!(out, "  x minimal polynomial: {p}");
        }
        let v = &l.meridian_verdict;
        let _ = writeln!(
            out,
            "  meridian trace integral: {}, denominator {}, bad primes {{{}}}{}",
            v.is_algebraic_integer,
            v.denominator_lcm,
            v.bad_primes.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", "),
            if v.prime_set_complete() { "" } else { " (prime set incomplete)" }
        );
        for (j, p) in l.points.iter().enumerate() {
            let _ = writeln!(out, "  root {j}: r = {}, x^2 = {}, x = ±({})", p.r, p.x_squared, p.x[0]);
        }
        if let Some(lon) = &l.longitude {
            let _ = writeln!(out, "  longitude trace = {}", lon.trace);
            let _ = writeln!(out, "  longitude minimal polynomial: {}", lon.min_poly);
            let _ = writeln!(out, "  longitude trace integral: {}", lon.verdict.is_algebraic_integer);
            for (j, val) in lon.values.iter().enumerate() {
                let _ = writeln!(out, "  root {j}: longitude trace {val}");
            }
        }
    }
    if let Some(s) = &report.slope {
        let slope = match s.detected_slope {
            DetectedSlope::Slope(v) => v.to_string(),
            DetectedSlope::Undetermined => "undetermined".into(),
        };
        let _ = writeln!(out, "detected slope: {slope} ({})", s.surface_description);
    }
    out
}
