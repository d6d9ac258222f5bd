//! The versioned report document emitted by every subcommand.

use phicycle_core::{
    ConfigClass, CurveConfiguration, CyclePropagation, DefinitenessVerdict, FixedPoints, IntersectionMatrix,
    MoebiusMap, ObstructionVerdict, ProjectivePoint, RemarkRow, StepSequence, SweepBounds, SweepSummary,
};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema_version: String,
    #[serde(flatten)]
    pub body: ReportBody,
}

impl AnalysisReport {
    pub fn new(body: ReportBody) -> Self {
        AnalysisReport { schema_version: SCHEMA_VERSION.to_string(), body }
    }

    pub fn subcommand(&self) -> &'static str {
        match self.body {
            ReportBody::Phi { .. } => "phi",
            ReportBody::LemmaScan { .. } => "lemma-scan",
            ReportBody::Remark { .. } => "remark",
            ReportBody::Graph { .. } => "graph",
            ReportBody::Cycle { .. } => "cycle",
        }
    }

    /// False when a scan contradicts the expected theorem. The process still
    /// exits 0 in that case; this flag is what callers should look at.
    pub fn conforms(&self) -> bool {
        match &self.body {
            ReportBody::LemmaScan { results, .. } => results.conformance,
            ReportBody::Remark { results, .. } => results.conformance,
            ReportBody::Cycle { results: CycleResults::Scan { summary }, .. } => summary.counterexamples.is_empty(),
            ReportBody::Cycle { results: CycleResults::Single { verdict, .. }, .. } => !verdict.obstructed,
            _ => true,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "subcommand", rename_all = "kebab-case")]
pub enum ReportBody {
    Phi { inputs: PhiInputs, results: PhiResults },
    LemmaScan { inputs: LemmaScanInputs, results: LemmaScanResults },
    Remark { inputs: RemarkInputs, results: RemarkResults },
    Graph { inputs: GraphInputs, results: GraphResults },
    Cycle { inputs: CycleInputs, results: CycleResults },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PhiInputs {
    pub steps: StepSequence,
    pub x: Option<ProjectivePoint>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PhiResults {
    /// Canonical `[a, b, c, d]`.
    pub matrix: MoebiusMap,
    pub identity: bool,
    /// `None` when the sequence is longer than the permutation guard.
    pub permutation_identity: Option<bool>,
    pub fixed_points: FixedPointSet,
    pub image: Option<ProjectivePoint>,
    /// `image` as a rational string, or `inf`.
    pub image_value: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FixedPointSet {
    Identity,
    Irrational,
    Points { points: Vec<ProjectivePoint> },
}

impl From<FixedPoints> for FixedPointSet {
    fn from(f: FixedPoints) -> Self {
        match f {
            FixedPoints::Identity => FixedPointSet::Identity,
            FixedPoints::Irrational => FixedPointSet::Irrational,
            FixedPoints::Points(points) => FixedPointSet::Points { points },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LemmaScanInputs {
    pub r: usize,
    pub bound: u32,
    pub guard: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LemmaScanResults {
    pub tuples_checked: u64,
    pub survivors: Vec<StepSequence>,
    /// Survivors match the predicted constant tuples exactly.
    pub conformance: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RemarkInputs {
    pub r_max: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RemarkResults {
    pub rows: Vec<RemarkRow>,
    pub conformance: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GraphInputs {
    pub document: CurveConfiguration,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GraphResults {
    pub components: Vec<ComponentReport>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComponentReport {
    pub vertices: Vec<String>,
    pub intersection_matrix: IntersectionMatrix,
    pub definiteness: DefinitenessVerdict,
    pub adjunction_defects: Vec<i64>,
    pub class: ConfigClass,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CycleInputs {
    pub steps: Option<StepSequence>,
    pub x0: Option<ProjectivePoint>,
    pub scan: Option<SweepBounds>,
    pub guard: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum CycleResults {
    Single {
        /// Present when a start index was given.
        propagation: Option<CyclePropagation>,
        closure: Option<bool>,
        /// Φ fixes every start index.
        closes_for_every_start: bool,
        intersection_matrix: IntersectionMatrix,
        definiteness: DefinitenessVerdict,
        verdict: ObstructionVerdict,
    },
    Scan {
        summary: SweepSummary,
    },
}
