//! JSON inputs: incidence profiles and explicit line lists.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use surface_lines::catalog::{Arrangement, IncidenceProfile};
use surface_lines::projgeom::{line_through, normalize_point};
use surface_lines::CycloNum;

use crate::CliError;

/// `{n, lines: [[point4, point4], ...]}`, each point four cyclotomic numbers
/// `{m, coeffs: ["p/q", ...]}`.
#[derive(Serialize, Deserialize)]
pub struct LinesFile {
    pub n: u32,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub labels: Vec<String>,
    pub lines: Vec<[[CycloNum; 4]; 2]>,
}

impl LinesFile {
    pub fn from_arrangement(arr: &Arrangement) -> Self {
        LinesFile {
            n: arr.surface_degree(),
            labels: arr.labels().to_vec(),
            lines: arr
                .lines()
                .iter()
                .map(|l| l.base_points().clone().map(|p| p.coords().clone()))
                .collect(),
        }
    }

    pub fn into_arrangement(self) -> Result<Arrangement, CliError> {
        let lines = self
            .lines
            .into_iter()
            .enumerate()
            .map(|(i, [p, q])| {
                let context = |e| CliError::Input(format!("line {i}: {e}"));
                let p = normalize_point(p).map_err(context)?;
                let q = normalize_point(q).map_err(context)?;
                line_through(&p, &q).map_err(context)
            })
            .collect::<Result<Vec<_>, _>>()?;
        let arr = if self.labels.len() == lines.len() {
            Arrangement::with_labels(self.n, lines, self.labels)
        } else {
            Arrangement::new(self.n, lines)
        };
        arr.map_err(|e| CliError::Input(e.to_string()))
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Reads and validates `{n, d, t: {k: count}}`.
pub fn load_custom_profile(path: &Path) -> Result<IncidenceProfile, CliError> {
    serde_json::from_str(&read(path)?)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Reads a lines file and builds a validated arrangement.
pub fn load_custom_lines(path: &Path) -> Result<Arrangement, CliError> {
    let file: LinesFile = serde_json::from_str(&read(path)?)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    file.into_arrangement()
}
