use thiserror::Error;

use crate::graph::{CubicGraph, EdgeId};

use super::{triple_set, NormalPartition};

/// Role of an edge inside its trail.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum EdgeRole {
    /// neither first nor last
    Internal,
    /// first or last edge of a longer trail
    End,
    /// the whole trail
    Single,
}

fn role(p: &NormalPartition, e: EdgeId) -> EdgeRole {
    let (t, pos) = p.place(e);
    let len = p.trails()[t].len();
    if len == 1 {
        EdgeRole::Single
    } else if pos == 0 || pos + 1 == len {
        EdgeRole::End
    } else {
        EdgeRole::Internal
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("edge {edge} has roles {roles:?} across the triple")]
pub struct AuditViolation {
    pub edge: EdgeId,
    pub roles: [EdgeRole; 3],
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AuditReport {
    /// edges with both ends outside the agreement set
    pub checked: usize,
    pub internal_once: usize,
    /// internal in two partitions and a length-1 trail of the third
    pub internal_twice: usize,
}

/// For each edge whose ends both lie outside the agreement set of the
/// triple: the edge is internal in exactly one partition, or internal in
/// exactly two and a trail on its own in the third. Any other pattern is a
/// bug somewhere upstream.
pub fn edge_role_audit(g: &CubicGraph, triple: [&NormalPartition; 3]) -> Result<AuditReport, AuditViolation> {
    let mut in_a = vec![false; g.n()];
    for v in triple_set(triple[0], triple[1], triple[2]) {
        in_a[v.index()] = true;
    }
    let mut report = AuditReport::default();
    for e in g.edges() {
        let [x, y] = g.endpoints(e);
        if in_a[x.index()] || in_a[y.index()] {
            continue;
        }
        report.checked += 1;
        let roles = triple.map(|p| role(p, e));
        let internal = roles.iter().filter(|r| **r == EdgeRole::Internal).count();
        match internal {
            1 => report.internal_once += 1,
            2 if roles.contains(&EdgeRole::Single) => report.internal_twice += 1,
            _ => return Err(AuditViolation { edge: e, roles }),
        }
    }
    Ok(report)
}
