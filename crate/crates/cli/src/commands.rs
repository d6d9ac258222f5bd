//! One function per subcommand. Each validates its inputs, runs the
//! analysis and returns the report; nothing here touches stdout.

use phicycle_core::{
    all_permutations_identity, cycle_closure_holds, expected_lemma_survivors, is_identity_phi, lemma_scan,
    obstruction_sweep, phi_map, propagate_cycle, remark_table, trivial_log_tangent_obstruction, CurveConfiguration,
    ProjectivePoint, RemarkRow, StepSequence, SweepBounds,
};

use crate::error::CliError;
use crate::report::*;

/// Parses `1,-2,3`, `[1, -2, 3]` or whitespace-separated integers.
pub fn parse_steps(s: &str) -> Result<Vec<i64>, CliError> {
    let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
    inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<i64>().map_err(|_| CliError::Input(format!("malformed step `{t}` in `{s}`"))))
        .collect()
}

pub fn run_phi(steps: &[i64], x: Option<&str>, guard: usize) -> Result<AnalysisReport, CliError> {
    let steps = StepSequence::from_i64s(steps)?;
    let x = x.map(ProjectivePoint::parse_lenient).transpose()?;
    let map = phi_map(&steps);
    let results = PhiResults {
        identity: map.is_identity(),
        permutation_identity: (steps.len() <= guard).then(|| all_permutations_identity(&steps)),
        fixed_points: map.fixed_points().into(),
        image: x.as_ref().map(|p| map.apply(p)),
        image_value: x.as_ref().map(|p| map.apply(p).display_value()),
        matrix: map,
    };
    Ok(AnalysisReport::new(ReportBody::Phi { inputs: PhiInputs { steps, x }, results }))
}

pub fn run_lemma_scan(r: usize, bound: u32, guard: usize) -> Result<AnalysisReport, CliError> {
    let survivors = lemma_scan(r, bound, guard)?;
    let conformance = survivors == expected_lemma_survivors(r);
    let tuples_checked = (2 * u64::from(bound) + 1).pow(r as u32);
    Ok(AnalysisReport::new(ReportBody::LemmaScan {
        inputs: LemmaScanInputs { r, bound, guard },
        results: LemmaScanResults { tuples_checked, survivors, conformance },
    }))
}

pub fn run_remark(r_max: usize) -> Result<AnalysisReport, CliError> {
    if r_max == 0 {
        return Err(CliError::Input("--r-max must be at least 1".into()));
    }
    let rows = remark_table(r_max);
    let conformance = rows.iter().all(RemarkRow::matches_congruences);
    Ok(AnalysisReport::new(ReportBody::Remark {
        inputs: RemarkInputs { r_max },
        results: RemarkResults { rows, conformance },
    }))
}

/// Parses a graph document, reporting the path of the offending field.
pub fn parse_graph_document(text: &str) -> Result<CurveConfiguration, CliError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        if path == "." || path.is_empty() {
            CliError::Schema(inner.to_string())
        } else {
            CliError::Schema(format!("{path}: {inner}"))
        }
    })
}

pub fn run_graph(document: &str) -> Result<AnalysisReport, CliError> {
    let config = parse_graph_document(document)?;
    let components = config
        .connected_components()
        .into_iter()
        .map(|part| {
            let matrix = part.intersection_matrix();
            Ok(ComponentReport {
                vertices: part.vertices().iter().map(|v| v.id.clone()).collect(),
                definiteness: matrix.definiteness(),
                intersection_matrix: matrix,
                adjunction_defects: part.adjunction_residues(),
                class: part.classify()?,
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(AnalysisReport::new(ReportBody::Graph {
        inputs: GraphInputs { document: config },
        results: GraphResults { components },
    }))
}

/// Single mode analyses one cycle; scan mode sweeps `scan` bounds.
pub fn run_cycle(
    steps: Option<&[i64]>,
    x0: Option<&str>,
    scan: Option<SweepBounds>,
    guard: usize,
) -> Result<AnalysisReport, CliError> {
    match (steps, scan) {
        (Some(_), Some(_)) => Err(CliError::Input("give either --steps or --scan, not both".into())),
        (None, None) => Err(CliError::Input("cycle needs --steps or --scan".into())),
        (None, Some(bounds)) => {
            if x0.is_some() {
                return Err(CliError::Input("--x0 applies to single-cycle mode only".into()));
            }
            let summary = obstruction_sweep(bounds, guard)?;
            Ok(AnalysisReport::new(ReportBody::Cycle {
                inputs: CycleInputs { steps: None, x0: None, scan: Some(bounds), guard },
                results: CycleResults::Scan { summary },
            }))
        }
        (Some(steps), None) => {
            let steps = StepSequence::from_i64s(steps)?;
            if steps.len() > guard {
                return Err(phicycle_core::Error::GuardExceeded { len: steps.len(), guard }.into());
            }
            let x0 = x0.map(ProjectivePoint::parse_lenient).transpose()?;
            let verdict = trivial_log_tangent_obstruction(&steps)?;
            let matrix = phicycle_core::cycle_matrix(&steps)?;
            let results = CycleResults::Single {
                propagation: x0.as_ref().map(|x| propagate_cycle(&steps, x)),
                closure: x0.as_ref().map(|x| cycle_closure_holds(&steps, x)),
                closes_for_every_start: is_identity_phi(&steps),
                definiteness: matrix.definiteness(),
                intersection_matrix: matrix,
                verdict,
            };
            Ok(AnalysisReport::new(ReportBody::Cycle {
                inputs: CycleInputs { steps: Some(steps), x0, scan: None, guard },
                results,
            }))
        }
    }
}
