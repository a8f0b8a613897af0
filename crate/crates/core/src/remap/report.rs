use std::fmt::Write as _;

use super::Approach;
use crate::mesh::Field;

/// Wall-clock seconds per phase.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Timings {
    pub clip: f64,
    pub triangulate: f64,
    pub reconstruct: f64,
    pub limit: f64,
    pub integrate: f64,
    pub total: f64,
}

/// Result of one remap with its conservation and positivity diagnostics.
#[derive(Clone, Debug)]
pub struct RemapReport {
    pub field: Field,
    pub order: usize,
    pub positivity: bool,
    pub approach: Approach,
    /// `Σ_ĩ | |Ĩ_ĩ|_clipped − |Ĩ_ĩ| |`.
    pub e_area_c: f64,
    /// `| Σ_ĩ ū̃_ĩ |Ĩ_ĩ| − Σ_i ū_i |I_i| |`.
    pub e_cons: f64,
    pub source_mass: f64,
    pub target_mass: f64,
    pub min_average: f64,
    pub max_average: f64,
    pub candidate_pairs: usize,
    pub overlap_pairs: usize,
    pub limited_cells: usize,
    /// Largest per-intersection `|A − B| / max(1, |A|)` in cross-check mode.
    pub max_approach_diff: Option<f64>,
    pub timings: Timings,
    pub warnings: Vec<String>,
}

impl RemapReport {
    /// Flat `key=value` lines, timings included.
    pub fn to_key_value(&self) -> String {
        let mut s = String::new();
        let t = &self.timings;
        let _ = writeln!(s, "order={}", self.order);
        let _ = writeln!(s, "positivity={}", if self.positivity { "on" } else { "off" });
        let _ = writeln!(s, "approach={}", self.approach);
        let _ = writeln!(s, "cells={}", self.field.len());
        let _ = writeln!(s, "e_area_c={:.6e}", self.e_area_c);
        let _ = writeln!(s, "e_cons={:.6e}", self.e_cons);
        let _ = writeln!(s, "source_mass={:.17e}", self.source_mass);
        let _ = writeln!(s, "target_mass={:.17e}", self.target_mass);
        let _ = writeln!(s, "min_average={:.6e}", self.min_average);
        let _ = writeln!(s, "max_average={:.6e}", self.max_average);
        let _ = writeln!(s, "candidate_pairs={}", self.candidate_pairs);
        let _ = writeln!(s, "overlap_pairs={}", self.overlap_pairs);
        let _ = writeln!(s, "limited_cells={}", self.limited_cells);
        if let Some(d) = self.max_approach_diff {
            let _ = writeln!(s, "max_approach_diff={d:.6e}");
        }
        let _ = writeln!(s, "time_clip_s={:.6}", t.clip);
        let _ = writeln!(s, "time_triangulate_s={:.6}", t.triangulate);
        let _ = writeln!(s, "time_reconstruct_s={:.6}", t.reconstruct);
        let _ = writeln!(s, "time_limit_s={:.6}", t.limit);
        let _ = writeln!(s, "time_integrate_s={:.6}", t.integrate);
        let _ = writeln!(s, "time_total_s={:.6}", t.total);
        let _ = writeln!(s, "warnings={}", self.warnings.len());
        s
    }

    /// CSV header matching [`RemapReport::csv_row`]. Timings are left out so
    /// that rows are reproducible.
    pub fn csv_header() -> &'static str {
        "order,positivity,approach,cells,e_area_c,e_cons,source_mass,target_mass,min_average,max_average,candidate_pairs,overlap_pairs,limited_cells,max_approach_diff"
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{:.6e},{:.6e},{:.17e},{:.17e},{:.6e},{:.6e},{},{},{},{}",
            self.order,
            if self.positivity { "on" } else { "off" },
            self.approach,
            self.field.len(),
            self.e_area_c,
            self.e_cons,
            self.source_mass,
            self.target_mass,
            self.min_average,
            self.max_average,
            self.candidate_pairs,
            self.overlap_pairs,
            self.limited_cells,
            self.max_approach_diff.map(|d| format!("{d:.6e}")).unwrap_or_default(),
        )
    }
}
