use std::io::Write;
use std::path::Path;

use hypwidth::lorentz::{to_klein, HPoint, Hyperplane};
use hypwidth::metrology::ExtremalWidth;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::error::CliError;

#[derive(Serialize, Deserialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    Point,
    /// A hyperplane: the unit normal, and in Klein coordinates the
    /// coefficients `(a, c)` of `a . y = c` with `|a| = 1`.
    Hyperplane,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct WitnessDoc {
    pub label: String,
    pub kind: WitnessKind,
    pub hyperboloid: Vec<f64>,
    pub klein: Vec<f64>,
}

impl WitnessDoc {
    pub fn point(label: &str, p: &HPoint) -> Self {
        Self {
            label: label.into(),
            kind: WitnessKind::Point,
            hyperboloid: p.coords().to_vec(),
            klein: to_klein(p),
        }
    }

    pub fn hyperplane(label: &str, h: &Hyperplane) -> Self {
        let n = h.normal();
        let s = n.spatial();
        let norm = s.iter().map(|c| c * c).sum::<f64>().sqrt();
        let mut klein: Vec<f64> = s.iter().map(|c| c / norm).collect();
        klein.push(n.time() / norm);
        Self {
            label: label.into(),
            kind: WitnessKind::Hyperplane,
            hyperboloid: n.coords().to_vec(),
            klein,
        }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct GridInfo {
    pub size: usize,
    pub refined: bool,
    pub refine_iters: usize,
}

impl GridInfo {
    pub fn of(e: &ExtremalWidth, refine_iters: usize) -> Self {
        Self {
            size: e.grid_size,
            refined: e.refined,
            refine_iters,
        }
    }
}

/// Output of every measuring, checking and reporting command.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Default)]
pub struct ReportDocument {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub values: Map<String, Value>,
    pub tolerances: Map<String, Value>,
    pub witnesses: Vec<WitnessDoc>,
    pub grid: Option<GridInfo>,
    /// `None` for pure measurements.
    pub passed: Option<bool>,
}

impl ReportDocument {
    pub fn new(command: impl Into<String>) -> Self {
        Self {
            command: command.into(),
            ..Self::default()
        }
    }

    pub fn input(&mut self, key: &str, v: impl Into<Value>) -> &mut Self {
        self.inputs.insert(key.into(), v.into());
        self
    }

    pub fn value(&mut self, key: &str, v: impl Into<Value>) -> &mut Self {
        self.values.insert(key.into(), v.into());
        self
    }

    pub fn tolerance(&mut self, key: &str, v: f64) -> &mut Self {
        self.tolerances.insert(key.into(), v.into());
        self
    }

    pub fn witness(&mut self, w: WitnessDoc) -> &mut Self {
        self.witnesses.push(w);
        self
    }
}

/// Writes `value` as JSON to `out`, or standard output when `out` is `None`.
/// An indent of zero gives compact output.
pub fn emit<T: Serialize>(value: &T, out: Option<&Path>, indent: usize) -> Result<(), CliError> {
    let mut buf = Vec::new();
    if indent == 0 {
        serde_json::to_writer(&mut buf, value)
    } else {
        let pad = vec![b' '; indent];
        let fmt = serde_json::ser::PrettyFormatter::with_indent(&pad);
        let mut ser = serde_json::Serializer::with_formatter(&mut buf, fmt);
        value.serialize(&mut ser)
    }
    .map_err(|e| CliError::input(format!("serializing output: {e}")))?;
    buf.push(b'\n');
    match out {
        Some(path) => std::fs::write(path, &buf)
            .map_err(|e| CliError::input(format!("writing {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(&buf)?;
            stdout.flush()?;
            Ok(())
        }
    }
}
