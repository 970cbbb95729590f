//! Output records. JSON carries full precision; CSV uses [`fmt_g`].

use serde::{Deserialize, Serialize};

use aisw_core::Well64;

use crate::format::fmt_g;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WellRecord {
    pub a: f64,
    pub b: f64,
    pub v0: f64,
    pub hbar: f64,
    pub mass: f64,
}

impl From<&Well64> for WellRecord {
    fn from(w: &Well64) -> Self {
        WellRecord {
            a: w.a(),
            b: w.b(),
            v0: w.v0(),
            hbar: w.constants().hbar(),
            mass: w.constants().mass(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumRow {
    pub n: usize,
    pub energy: f64,
    pub regime: String,
    pub k: f64,
    pub secondary: f64,
    pub p_i: f64,
    pub p_ii: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub well: WellRecord,
    pub states: Vec<SpectrumRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TuneRow {
    pub n: usize,
    pub v0: f64,
    pub k: f64,
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TuneReport {
    pub a: f64,
    pub b: f64,
    pub hbar: f64,
    pub mass: f64,
    pub results: Vec<TuneRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StateReport {
    pub well: WellRecord,
    pub n: usize,
    pub energy: f64,
    pub regime: String,
    pub k: f64,
    pub secondary: f64,
    /// Amplitude of `sin(k(x + a))` on the left.
    pub a_coeff: f64,
    /// Amplitude of the step-region solution.
    pub c_coeff: f64,
    pub p_i: f64,
    pub p_ii: f64,
    pub nodes: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DensityRow {
    pub x: f64,
    pub psi: f64,
    pub density: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DensityReport {
    pub well: WellRecord,
    pub n: usize,
    pub energy: f64,
    pub regime: String,
    pub points: Vec<DensityRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MomentumRow {
    pub p: f64,
    pub density: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MomentumReport {
    pub well: WellRecord,
    pub n: usize,
    pub energy: f64,
    pub regime: String,
    pub p_max: f64,
    pub points: Vec<MomentumRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PartitionReport {
    pub well: WellRecord,
    pub n: usize,
    pub energy: f64,
    pub left: f64,
    pub center: f64,
    pub right: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Report {
    Spectrum(SpectrumReport),
    Tune(TuneReport),
    State(StateReport),
    Density(DensityReport),
    Momentum(MomentumReport),
    Partition(PartitionReport),
}

fn table(header: &str, rows: impl Iterator<Item = Vec<String>>) -> String {
    let mut out = String::from(header);
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

impl Report {
    pub fn to_csv(&self) -> String {
        let g = |x: f64| fmt_g(x);
        match self {
            Report::Spectrum(r) => table(
                "n,energy,regime,k,secondary,p_i,p_ii",
                r.states.iter().map(|s| {
                    vec![
                        s.n.to_string(),
                        g(s.energy),
                        s.regime.clone(),
                        g(s.k),
                        g(s.secondary),
                        g(s.p_i),
                        g(s.p_ii),
                    ]
                }),
            ),
            Report::Tune(r) => table(
                "n,v0,k,residual",
                r.results
                    .iter()
                    .map(|t| vec![t.n.to_string(), g(t.v0), g(t.k), g(t.residual)]),
            ),
            Report::State(s) => table(
                "n,energy,regime,k,secondary,a_coeff,c_coeff,p_i,p_ii,nodes",
                std::iter::once(vec![
                    s.n.to_string(),
                    g(s.energy),
                    s.regime.clone(),
                    g(s.k),
                    g(s.secondary),
                    g(s.a_coeff),
                    g(s.c_coeff),
                    g(s.p_i),
                    g(s.p_ii),
                    s.nodes.to_string(),
                ]),
            ),
            Report::Density(r) => table(
                "x,psi,density",
                r.points
                    .iter()
                    .map(|p| vec![g(p.x), g(p.psi), g(p.density)]),
            ),
            Report::Momentum(r) => table(
                "p,density",
                r.points.iter().map(|p| vec![g(p.p), g(p.density)]),
            ),
            Report::Partition(r) => table(
                "n,v0,energy,left,center,right",
                std::iter::once(vec![
                    r.n.to_string(),
                    g(r.well.v0),
                    g(r.energy),
                    g(r.left),
                    g(r.center),
                    g(r.right),
                ]),
            ),
        }
    }

    pub fn to_json(&self) -> String {
        let text = match self {
            Report::Spectrum(r) => serde_json::to_string_pretty(r),
            Report::Tune(r) => serde_json::to_string_pretty(r),
            Report::State(r) => serde_json::to_string_pretty(r),
            Report::Density(r) => serde_json::to_string_pretty(r),
            Report::Momentum(r) => serde_json::to_string_pretty(r),
            Report::Partition(r) => serde_json::to_string_pretty(r),
        };
        let mut text = text.expect("records hold only finite numbers and strings");
        text.push('\n');
        text
    }
}
