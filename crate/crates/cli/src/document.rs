use std::io::Read;
use std::path::Path;

use hypwidth::body::{BallIntersection, Polytope};
use hypwidth::lorentz::{from_klein, to_klein, HPoint, LorentzVector};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Serialize, Deserialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Polytope,
    BallIntersection,
}

#[derive(Serialize, Deserialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum Coords {
    Hyperboloid,
    Klein,
}

/// Serialized form of a body.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct BodyDocument {
    pub dim: usize,
    pub kind: Kind,
    pub coords: Coords,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<Vec<f64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub centers: Option<Vec<Vec<f64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radius: Option<f64>,
}

#[derive(Clone, Debug)]
pub enum Body {
    Polytope(Polytope),
    Balls(BallIntersection),
}

fn encode(points: &[HPoint], coords: Coords) -> Vec<Vec<f64>> {
    points
        .iter()
        .map(|p| match coords {
            Coords::Klein => to_klein(p),
            Coords::Hyperboloid => p.coords().to_vec(),
        })
        .collect()
}

impl BodyDocument {
    pub fn from_body(body: &Body, coords: Coords) -> Self {
        match body {
            Body::Polytope(p) => Self {
                dim: p.dim(),
                kind: Kind::Polytope,
                coords,
                vertices: Some(encode(p.vertices(), coords)),
                centers: None,
                radius: None,
            },
            Body::Balls(b) => Self {
                dim: b.dim(),
                kind: Kind::BallIntersection,
                coords,
                vertices: None,
                centers: Some(encode(b.centers(), coords)),
                radius: Some(b.radius()),
            },
        }
    }

    fn points(&self, rows: &[Vec<f64>]) -> Result<Vec<HPoint>, CliError> {
        let want = match self.coords {
            Coords::Klein => self.dim,
            Coords::Hyperboloid => self.dim + 1,
        };
        rows.iter()
            .enumerate()
            .map(|(i, row)| {
                if row.len() != want {
                    return Err(CliError::input(format!(
                        "point {i} has {} coordinates, expected {want}",
                        row.len()
                    )));
                }
                let p = match self.coords {
                    Coords::Klein => from_klein(row),
                    Coords::Hyperboloid => LorentzVector::new(row.clone()).and_then(HPoint::new),
                };
                p.map_err(|e| CliError::input(format!("point {i}: {e}")))
            })
            .collect()
    }

    pub fn into_body(self) -> Result<Body, CliError> {
        if self.dim < 2 {
            return Err(CliError::input(format!("dim must be at least 2, got {}", self.dim)));
        }
        match self.kind {
            Kind::Polytope => {
                if self.centers.is_some() || self.radius.is_some() {
                    return Err(CliError::input("a polytope has vertices only"));
                }
                let rows = self.vertices.as_deref().ok_or_else(|| CliError::input("missing vertices"))?;
                Ok(Body::Polytope(Polytope::new(self.points(rows)?)?))
            }
            Kind::BallIntersection => {
                if self.vertices.is_some() {
                    return Err(CliError::input("a ball intersection has centers and a radius"));
                }
                let rows = self.centers.as_deref().ok_or_else(|| CliError::input("missing centers"))?;
                let radius = self.radius.ok_or_else(|| CliError::input("missing radius"))?;
                Ok(Body::Balls(BallIntersection::new(self.points(rows)?, radius)?))
            }
        }
    }
}

pub fn read_text(path: &Path) -> Result<String, CliError> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::input(format!("reading standard input: {e}")))?;
    } else {
        text = std::fs::read_to_string(path)
            .map_err(|e| CliError::input(format!("reading {}: {e}", path.display())))?;
    }
    Ok(text)
}

pub fn load_body(path: &Path) -> Result<Body, CliError> {
    let doc: BodyDocument = serde_json::from_str(&read_text(path)?)
        .map_err(|e| CliError::input(format!("malformed body document: {e}")))?;
    doc.into_body()
}
