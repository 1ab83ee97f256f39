//! JSON certificates: a graph plus one or more partitions as explicit trails.
//!
//! ```json
//! {"schema": "copnc/1",
//!  "graph": {"n": 2, "edges": [[0, 1], [0, 1], [0, 1]]},
//!  "partitions": [[{"vertices": [0, 1, 0, 1], "edges": [0, 1, 2]}]]}
//! ```

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Color, CubicGraph, EdgeId, GraphError, VertexId};
use crate::partition::{compatibility_set, validate_normal, NormalPartition, Trail};

pub const SCHEMA: &str = "copnc/1";

#[derive(Debug, Error)]
pub enum CertError {
    #[error("malformed certificate at line {line}, column {column}: {msg}")]
    Json { line: usize, column: usize, msg: String },
    #[error("unsupported schema {0:?}")]
    Schema(String),
    #[error("certificate graph: {0}")]
    Graph(#[from] GraphError),
    #[error("certificate graph differs from the given graph")]
    GraphMismatch,
}

impl From<serde_json::Error> for CertError {
    fn from(e: serde_json::Error) -> Self {
        CertError::Json { line: e.line(), column: e.column(), msg: e.to_string() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<(u32, u32)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrailJson {
    pub vertices: Vec<u32>,
    pub edges: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema: String,
    pub graph: GraphJson,
    pub partitions: Vec<Vec<TrailJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coloring: Option<Vec<Color>>,
}

impl Certificate {
    pub fn new<'a>(g: &CubicGraph, partitions: impl IntoIterator<Item = &'a NormalPartition>) -> Self {
        let partitions = partitions
            .into_iter()
            .map(|p| {
                p.trails()
                    .iter()
                    .map(|t| TrailJson {
                        vertices: t.vertices().iter().map(|v| v.0).collect(),
                        edges: t.edges().iter().map(|e| e.0).collect(),
                    })
                    .collect()
            })
            .collect();
        Certificate {
            schema: SCHEMA.to_string(),
            graph: GraphJson { n: g.n(), edges: g.edge_list() },
            partitions,
            coloring: None,
        }
    }

    pub fn with_coloring(mut self, colors: &[Color]) -> Self {
        self.coloring = Some(colors.to_vec());
        self
    }

    pub fn parse(text: &str) -> Result<Self, CertError> {
        let c: Certificate = serde_json::from_str(text)?;
        if c.schema != SCHEMA {
            return Err(CertError::Schema(c.schema));
        }
        Ok(c)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn graph(&self) -> Result<CubicGraph, CertError> {
        Ok(CubicGraph::new(self.graph.n, &self.graph.edges)?)
    }

    /// Validates every partition and, with two or more, their pairwise
    /// compatibility. `expected` must match the embedded graph exactly.
    pub fn check(&self, expected: Option<&CubicGraph>) -> Result<Report, CertError> {
        let g = self.graph()?;
        if let Some(h) = expected {
            if h.n() != g.n() || h.edge_list() != g.edge_list() {
                return Err(CertError::GraphMismatch);
            }
        }
        let mut report = Report::default();
        let mut valid = Vec::new();
        for (i, trails) in self.partitions.iter().enumerate() {
            let mut pr = PartitionReport { index: i, ..Default::default() };
            let mut built = Vec::new();
            for (k, t) in trails.iter().enumerate() {
                let vs = t.vertices.iter().map(|&v| VertexId(v)).collect();
                let es = t.edges.iter().map(|&e| EdgeId(e)).collect();
                match Trail::new(&g, vs, es) {
                    Ok(t) => built.push(t),
                    Err(e) => pr.problems.push(format!("trail {k}: {e}")),
                }
            }
            if pr.problems.is_empty() {
                match validate_normal(&g, built) {
                    Ok(p) => {
                        pr.normal = true;
                        pr.odd = p.is_odd();
                        pr.profile = p.stats().profile();
                        valid.push((i, p));
                    }
                    Err(vs) => pr.problems.extend(vs.iter().map(|v| v.to_string())),
                }
            }
            report.partitions.push(pr);
        }
        for a in 0..valid.len() {
            for b in a + 1..valid.len() {
                let agree = compatibility_set(&valid[a].1, &valid[b].1);
                report.pairs.push(PairReport {
                    first: valid[a].0,
                    second: valid[b].0,
                    agreement: agree.iter().map(|v| v.0).collect(),
                });
            }
        }
        report.valid =
            report.partitions.iter().all(|p| p.normal) && report.pairs.iter().all(|p| p.agreement.is_empty());
        Ok(report)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PartitionReport {
    pub index: usize,
    pub normal: bool,
    pub odd: bool,
    /// trail lengths, longest first
    pub profile: Vec<usize>,
    pub problems: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PairReport {
    pub first: usize,
    pub second: usize,
    /// vertices where both partitions mark the same edge
    pub agreement: Vec<u32>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub valid: bool,
    pub partitions: Vec<PartitionReport>,
    pub pairs: Vec<PairReport>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::bipartite_triple;
    use crate::graph::generators;

    #[test]
    fn round_trip() {
        let g = generators::k33();
        let t = bipartite_triple(&g).unwrap();
        let c = Certificate::new(&g, t.partitions()).with_coloring(t.coloring().colors());
        let back = Certificate::parse(&c.to_json()).unwrap();
        assert_eq!(back, c);
        let r = back.check(Some(&g)).unwrap();
        assert!(r.valid);
        assert_eq!(r.pairs.len(), 3);
    }

    #[test]
    fn duplicated_edge_reported() {
        let g = generators::theta();
        let text = r#"{"schema":"copnc/1","graph":{"n":2,"edges":[[0,1],[0,1],[0,1]]},
            "partitions":[[{"vertices":[0,1,0],"edges":[0,1]},{"vertices":[0,1],"edges":[0]}]]}"#;
        let r = Certificate::parse(text).unwrap().check(Some(&g)).unwrap();
        assert!(!r.valid);
        assert!(r.partitions[0].problems.iter().any(|p| p.contains("covered 2 times")));
    }

    #[test]
    fn identical_partitions_agree_everywhere() {
        let g = generators::k4();
        let p = crate::construct::nop_any(&g).unwrap();
        let r = Certificate::new(&g, [&p, &p]).check(None).unwrap();
        assert!(!r.valid);
        assert_eq!(r.pairs[0].agreement, vec![0, 1, 2, 3]);
    }

    #[test]
    fn bad_json_position() {
        match Certificate::parse("{\n  \"schema\": 3") {
            Err(CertError::Json { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            Certificate::parse(r#"{"schema":"x/2","graph":{"n":0,"edges":[]},"partitions":[]}"#),
            Err(CertError::Schema(_))
        ));
    }
}
