//! Consistency checks on a built map and its classified census.

use thiserror::Error;

use crate::genfunc::FaceDegree;

use super::census::{vertex_profile, vertex_types, CensusReport, StructureViolation, VertexType};
use super::map::{Face, PlanarMap, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AuditError {
    #[error("vertex {0} has a loop")]
    Loop(VertexId),
    #[error("vertices {0} and {1} are joined twice")]
    MultiEdge(VertexId, VertexId),
    #[error("vertex {vertex} has degree {degree} > q")]
    OverDegree { vertex: VertexId, degree: usize },
    #[error("closed face through vertex {vertex} has degree {degree}")]
    FaceDegree { vertex: VertexId, degree: usize },
    #[error("vertex {vertex} was built in generation {layer} but lies at distance {distance}")]
    LayerMismatch {
        vertex: VertexId,
        layer: u32,
        distance: u32,
    },
    #[error("closed face through vertex {vertex} has no unique earliest or latest vertex or edge")]
    FaceExtremes { vertex: VertexId },
    #[error("vertex {vertex} of type {ty:?} is the latest vertex of {faces} faces")]
    LatestVertex {
        vertex: VertexId,
        ty: VertexType,
        faces: u32,
    },
    #[error("filial edges into generation {generation}: {count:?}")]
    Filial {
        generation: usize,
        count: FilialCount,
    },
    #[error("report has no type census")]
    Unclassified,
    #[error(transparent)]
    Structure(#[from] StructureViolation),
}

/// The edges between generations `n - 1` and `n`, counted four ways.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FilialCount {
    pub edges: u64,
    /// Children summed over generation `n - 1`.
    pub child_sum: u64,
    /// Parents summed over generation `n`.
    pub parent_sum: u64,
    /// `a(n) + 2b(n) + c(n)`.
    pub parents_by_type: u64,
    /// Children predicted from the types of generation `n - 1`.
    pub children_by_type: u64,
}

impl FilialCount {
    pub fn is_consistent(&self) -> bool {
        let e = self.edges;
        self.child_sum == e
            && self.parent_sum == e
            && self.parents_by_type == e
            && self.children_by_type == e
    }
}

/// Filial counts for `n = 1..=trusted_depth`; entry `n - 1` is generation `n`.
pub fn filial_counts(
    map: &PlanarMap,
    report: &CensusReport,
) -> Result<Vec<FilialCount>, AuditError> {
    let types = report.types.as_ref().ok_or(AuditError::Unclassified)?;
    let q = u64::from(map.symbol().q);
    // Children per type, in the graph the census is taken in.
    let (ca, cb, cc) = match map.symbol().p {
        FaceDegree::Finite(3) => (q - 3, q - 4, 0),
        _ => (q - 1, q - 2, q - 2),
    };
    let dist = &report.distances;
    let depth = report.trusted_depth;
    let mut out = vec![
        FilialCount {
            edges: 0,
            child_sum: 0,
            parent_sum: 0,
            parents_by_type: 0,
            children_by_type: 0,
        };
        depth
    ];
    for v in map.vertices() {
        let d = dist[v as usize] as usize;
        if d > depth {
            continue;
        }
        let prof = vertex_profile(map, dist, v);
        if d < depth {
            out[d].child_sum += u64::from(prof.children);
        }
        if d >= 1 {
            out[d - 1].parent_sum += u64::from(prof.parents);
            out[d - 1].edges += map
                .neighbors(v)
                .filter(|&w| dist[w as usize] as usize + 1 == d)
                .count() as u64;
        }
    }
    for n in 1..=depth {
        let f = &mut out[n - 1];
        f.parents_by_type = types.a[n] + 2 * types.b[n] + types.c[n];
        f.children_by_type = if n == 1 {
            q
        } else {
            ca * types.a[n - 1] + cb * types.b[n - 1] + cc * types.c[n - 1]
        };
    }
    Ok(out)
}

fn face_vertices(map: &PlanarMap, face: &Face) -> Vec<VertexId> {
    face.half_edges.iter().map(|&h| map.tail(h)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Extreme {
    Vertex(usize),
    Edge,
}

/// Where the distances around a face reach `target`: at a single vertex,
/// at the two ends of a single edge, or neither.
fn extreme(ds: &[u32], target: u32) -> Option<Extreme> {
    let hits: Vec<usize> = (0..ds.len()).filter(|&i| ds[i] == target).collect();
    match hits.as_slice() {
        [i] => Some(Extreme::Vertex(*i)),
        [i, j] if j - i == 1 || (*i == 0 && *j == ds.len() - 1) => Some(Extreme::Edge),
        _ => None,
    }
}

/// Run every structural check: simplicity, degrees, closed-face degree,
/// construction layer against BFS distance, the earliest/latest shape of
/// every closed face, the latest-vertex property of type-B vertices and the
/// filial double count.
pub fn audit_map(map: &PlanarMap, report: &CensusReport) -> Result<(), AuditError> {
    let s = map.symbol();
    let dist = &report.distances;

    for v in map.vertices() {
        let mut seen: Vec<VertexId> = map.neighbors(v).collect();
        if seen.contains(&v) {
            return Err(AuditError::Loop(v));
        }
        seen.sort_unstable();
        if let Some(w) = seen.windows(2).find(|w| w[0] == w[1]) {
            return Err(AuditError::MultiEdge(v, w[0]));
        }
        if map.degree(v) > s.q as usize {
            return Err(AuditError::OverDegree {
                vertex: v,
                degree: map.degree(v),
            });
        }
        if map.layer(v) != dist[v as usize] {
            return Err(AuditError::LayerMismatch {
                vertex: v,
                layer: map.layer(v),
                distance: dist[v as usize],
            });
        }
    }

    let types = vertex_types(map, report)?;
    let mut latest_of = vec![0u32; map.vertex_count()];
    if let FaceDegree::Finite(p) = s.p {
        let span = p / 2;
        for face in map.closed_faces() {
            let vs = face_vertices(map, &face);
            if vs.len() != p as usize {
                return Err(AuditError::FaceDegree {
                    vertex: vs[0],
                    degree: vs.len(),
                });
            }
            let ds: Vec<u32> = vs.iter().map(|&v| dist[v as usize]).collect();
            let lo = *ds.iter().min().unwrap();
            let hi = *ds.iter().max().unwrap();
            let bad = AuditError::FaceExtremes { vertex: vs[0] };
            let (Some(first), Some(last)) = (extreme(&ds, lo), extreme(&ds, hi)) else {
                return Err(bad);
            };
            let shape_ok = match (first, last) {
                (Extreme::Vertex(_), Extreme::Vertex(_)) => p % 2 == 0,
                (Extreme::Edge, Extreme::Edge) => false,
                _ => p % 2 == 1,
            };
            if hi - lo != span || !shape_ok {
                return Err(bad);
            }
            if let Extreme::Vertex(i) = last {
                latest_of[vs[i] as usize] += 1;
            }
        }
    }
    for (v, ty) in types.iter().enumerate() {
        let Some(ty) = *ty else { continue };
        let expected = u32::from(ty == VertexType::B);
        if latest_of[v] != expected {
            return Err(AuditError::LatestVertex {
                vertex: v as VertexId,
                ty,
                faces: latest_of[v],
            });
        }
    }

    for (i, count) in filial_counts(map, report)?.into_iter().enumerate() {
        if !count.is_consistent() {
            return Err(AuditError::Filial {
                generation: i + 1,
                count,
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genfunc::Schlafli;
    use crate::oracle::{bfs_census, build_map, build_tree, classify, DEFAULT_VERTEX_BUDGET};

    #[test]
    fn small_maps_pass() {
        for (p, q) in [
            (4, 4),
            (6, 3),
            (3, 6),
            (4, 5),
            (5, 4),
            (3, 7),
            (7, 3),
            (8, 3),
        ] {
            let s = Schlafli::finite(p, q).unwrap();
            let map = build_map(s, 4, DEFAULT_VERTEX_BUDGET).unwrap();
            let report = classify(&map, &bfs_census(&map)).unwrap();
            audit_map(&map, &report).unwrap_or_else(|e| panic!("{s}: {e}"));
        }
        let tree = build_tree(3, 4).unwrap();
        let report = classify(&tree, &bfs_census(&tree)).unwrap();
        audit_map(&tree, &report).unwrap();
    }

    #[test]
    fn filial_needs_types() {
        let tree = build_tree(3, 2).unwrap();
        assert_eq!(
            filial_counts(&tree, &bfs_census(&tree)),
            Err(AuditError::Unclassified)
        );
    }

    #[test]
    fn extremes_on_cycles() {
        assert_eq!(extreme(&[0, 1, 2, 1], 0), Some(Extreme::Vertex(0)));
        assert_eq!(extreme(&[0, 1, 2, 1], 2), Some(Extreme::Vertex(2)));
        assert_eq!(extreme(&[1, 2, 2, 1, 0], 2), Some(Extreme::Edge));
        assert_eq!(extreme(&[2, 1, 0, 1, 2], 2), Some(Extreme::Edge));
        assert_eq!(extreme(&[2, 1, 2, 1], 2), None);
    }
}
