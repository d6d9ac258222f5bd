//! Plain-text rendering of reports, one fact per line.

use std::fmt::Write;

use phicycle_core::ProjectivePoint;

use crate::report::*;

fn point(p: &ProjectivePoint) -> String {
    p.display_value()
}

fn yes(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

pub fn render_text(report: &AnalysisReport) -> String {
    let mut out = String::new();
    let w = &mut out;
    match &report.body {
        ReportBody::Phi { inputs, results } => {
            let _ = writeln!(w, "phi {}", inputs.steps);
            let _ = writeln!(w, "matrix: {}", results.matrix);
            let _ = writeln!(w, "identity: {}", yes(results.identity));
            match results.permutation_identity {
                Some(b) => {
                    let _ = writeln!(w, "identity for all orderings: {}", yes(b));
                }
                None => {
                    let _ = writeln!(w, "identity for all orderings: skipped (length above guard)");
                }
            }
            let fixed = match &results.fixed_points {
                FixedPointSet::Identity => "every point".to_string(),
                FixedPointSet::Irrational => "none rational".to_string(),
                FixedPointSet::Points { points } => points.iter().map(point).collect::<Vec<_>>().join(", "),
            };
            let _ = writeln!(w, "fixed points: {fixed}");
            if let (Some(x), Some(y)) = (&inputs.x, &results.image) {
                let _ = writeln!(w, "image of {}: {}", point(x), point(y));
            }
        }
        ReportBody::LemmaScan { inputs, results } => {
            let _ = writeln!(w, "lemma scan r = {}, |e_i| <= {}", inputs.r, inputs.bound);
            let _ = writeln!(w, "tuples checked: {}", results.tuples_checked);
            let _ = writeln!(w, "survivors: {}", results.survivors.len());
            for s in &results.survivors {
                let _ = writeln!(w, "  {s}");
            }
            let _ = writeln!(w, "conformance: {}", yes(results.conformance));
        }
        ReportBody::Remark { results, .. } => {
            let _ = writeln!(w, "{:>4}  {:>6}  {:>6}  {:>6}", "r", "zeros", "ones", "-ones");
            for row in &results.rows {
                let _ = writeln!(
                    w,
                    "{:>4}  {:>6}  {:>6}  {:>6}",
                    row.r,
                    yes(row.zeros),
                    yes(row.ones),
                    yes(row.minus_ones)
                );
            }
            let _ = writeln!(w, "conformance: {}", yes(results.conformance));
        }
        ReportBody::Graph { results, .. } => {
            let _ = writeln!(w, "components: {}", results.components.len());
            for (i, c) in results.components.iter().enumerate() {
                let _ = writeln!(w, "component {}: {}", i + 1, c.vertices.join(" "));
                let _ = writeln!(w, "  intersection matrix: {}", c.intersection_matrix);
                let _ = writeln!(w, "  definiteness: {}", c.definiteness);
                let defects: Vec<String> = c.adjunction_defects.iter().map(i64::to_string).collect();
                let _ = writeln!(w, "  adjunction defects: {}", defects.join(" "));
                let _ = writeln!(w, "  class: {}", c.class);
            }
        }
        ReportBody::Cycle { inputs, results } => match results {
            CycleResults::Single {
                propagation,
                closure,
                closes_for_every_start,
                intersection_matrix,
                definiteness,
                verdict,
            } => {
                if let Some(steps) = &inputs.steps {
                    let _ = writeln!(w, "cycle {steps}");
                }
                if let Some(p) = propagation {
                    let trace: Vec<String> = p.trace.iter().map(point).collect();
                    let _ = writeln!(w, "trace: {}", trace.join(" -> "));
                }
                if let Some(c) = closure {
                    let _ = writeln!(w, "closure: {}", yes(*c));
                }
                let _ = writeln!(w, "closes for every start: {}", yes(*closes_for_every_start));
                let _ = writeln!(w, "intersection matrix: {intersection_matrix}");
                let _ = writeln!(w, "definiteness: {definiteness}");
                let _ = writeln!(w, "permutation_identity: {}", yes(verdict.permutation_identity));
                let _ = writeln!(w, "negative_definite_cycle: {}", yes(verdict.negative_definite_cycle));
                let _ = writeln!(w, "obstructed: {}", yes(verdict.obstructed));
            }
            CycleResults::Scan { summary } => {
                let b = summary.bounds;
                let _ = writeln!(w, "sweep r = {}..={}, e = {}..={}", b.r_min, b.r_max, b.e_min, b.e_max);
                let _ = writeln!(w, "tuples checked: {}", summary.checked);
                let _ = writeln!(w, "negative definite cycles: {}", summary.negative_definite);
                let _ = writeln!(w, "identity for all orderings: {}", summary.permutation_identity);
                let _ = writeln!(w, "counterexamples: {}", summary.counterexamples.len());
                for s in &summary.counterexamples {
                    let _ = writeln!(w, "  {s}");
                }
            }
        },
    }
    if !report.conforms() {
        let _ = writeln!(w, "WARNING: result contradicts the expected theorem");
    }
    out
}
