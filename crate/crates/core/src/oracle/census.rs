use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::genfunc::{CaseTag, FaceDegree, Schlafli};

use super::map::{PlanarMap, VertexId};

/// Neighbourhood of a vertex, split by the generation of each neighbour.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct VertexProfile {
    pub parents: u32,
    pub children: u32,
    /// Same-generation neighbours that share a parent with the vertex.
    pub fraternal: u32,
    /// Same-generation neighbours that do not.
    pub consortial: u32,
}

impl fmt::Display for VertexProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parents={} children={} fraternal={} consortial={}",
            self.parents, self.children, self.fraternal, self.consortial
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexType {
    A,
    B,
    C,
}

impl VertexType {
    pub fn as_str(&self) -> &'static str {
        match self {
            VertexType::A => "A",
            VertexType::B => "B",
            VertexType::C => "C",
        }
    }
}

/// Per-generation type counts, indexed like [`CensusReport::v`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeCensus {
    pub a: Vec<u64>,
    pub b: Vec<u64>,
    pub c: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub symbol: Schlafli,
    /// `v[n]` for `0 <= n <= trusted_depth`; deeper generations are left out.
    pub v: Vec<u64>,
    pub types: Option<TypeCensus>,
    pub trusted_depth: usize,
    /// BFS distance of every vertex of the map.
    pub distances: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{symbol}: vertex {vertex} in generation {generation} fits no {case} type ({profile})")]
pub struct StructureViolation {
    pub symbol: Schlafli,
    pub case: CaseTag,
    pub vertex: VertexId,
    pub generation: u32,
    pub profile: VertexProfile,
}

fn case_of(s: Schlafli) -> CaseTag {
    match s.p {
        FaceDegree::Infinite => CaseTag::Tree,
        FaceDegree::Finite(3) => CaseTag::Triangle,
        FaceDegree::Finite(p) if p % 2 == 0 => CaseTag::Even,
        FaceDegree::Finite(_) => CaseTag::Odd,
    }
}

fn bfs(map: &PlanarMap) -> Vec<u32> {
    let mut dist = vec![u32::MAX; map.vertex_count()];
    let mut queue = VecDeque::new();
    dist[map.origin() as usize] = 0;
    queue.push_back(map.origin());
    while let Some(u) = queue.pop_front() {
        let du = dist[u as usize];
        for w in map.neighbors(u) {
            if dist[w as usize] == u32::MAX {
                dist[w as usize] = du + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Generation sizes by breadth-first search, reported through the largest
/// depth at which every vertex is saturated.
///
/// The origin is always counted, so a map holding only the origin reports
/// `[1]` with trusted depth 0.
pub fn bfs_census(map: &PlanarMap) -> CensusReport {
    let distances = bfs(map);
    let max_dist = distances
        .iter()
        .copied()
        .filter(|&d| d != u32::MAX)
        .max()
        .unwrap_or(0);
    let first_open = map
        .vertices()
        .filter(|&v| !map.is_saturated(v))
        .map(|v| distances[v as usize])
        .min();
    let trusted_depth = match first_open {
        Some(d) => d.saturating_sub(1),
        None => max_dist,
    } as usize;

    let mut v = vec![0u64; trusted_depth + 1];
    for &d in &distances {
        if (d as usize) <= trusted_depth {
            v[d as usize] += 1;
        }
    }
    CensusReport {
        symbol: map.symbol(),
        v,
        types: None,
        trusted_depth,
        distances,
    }
}

/// Profile of `v` under the BFS distances `dist`.
pub fn vertex_profile(map: &PlanarMap, dist: &[u32], v: VertexId) -> VertexProfile {
    let dv = dist[v as usize];
    let parents_of = |x: VertexId| {
        let dx = dist[x as usize];
        map.neighbors(x)
            .filter(move |&y| dx > 0 && dist[y as usize] == dx - 1)
    };
    let mut profile = VertexProfile::default();
    for w in map.neighbors(v) {
        let dw = dist[w as usize];
        if dw + 1 == dv {
            profile.parents += 1;
        } else if dw == dv + 1 {
            profile.children += 1;
        } else if dw == dv {
            let shared = parents_of(v).any(|x| parents_of(w).any(|y| y == x));
            if shared {
                profile.fraternal += 1;
            } else {
                profile.consortial += 1;
            }
        }
    }
    profile
}

fn type_of(case: CaseTag, q: u32, p: VertexProfile) -> Option<VertexType> {
    let full = |parents: u32, children: u32, fraternal: u32, consortial: u32| {
        p == VertexProfile {
            parents,
            children,
            fraternal,
            consortial,
        }
    };
    match case {
        CaseTag::Tree | CaseTag::Even => {
            if full(1, q - 1, 0, 0) {
                Some(VertexType::A)
            } else if full(2, q - 2, 0, 0) {
                Some(VertexType::B)
            } else {
                None
            }
        }
        // With the fraternal edges deleted the vertex keeps only its
        // parents and children.
        CaseTag::Triangle => {
            if p.fraternal != 2 || p.consortial != 0 || p.parents + p.children + 2 != q {
                None
            } else {
                match p.parents {
                    1 => Some(VertexType::A),
                    2 => Some(VertexType::B),
                    _ => None,
                }
            }
        }
        CaseTag::Odd => {
            if full(1, q - 1, 0, 0) {
                Some(VertexType::A)
            } else if full(2, q - 2, 0, 0) {
                Some(VertexType::B)
            } else if full(1, q - 2, 0, 1) {
                Some(VertexType::C)
            } else {
                None
            }
        }
    }
}

/// Type of every vertex within the trusted depth, `None` for the origin
/// and for vertices beyond it.
pub fn vertex_types(
    map: &PlanarMap,
    report: &CensusReport,
) -> Result<Vec<Option<VertexType>>, StructureViolation> {
    let symbol = map.symbol();
    let case = case_of(symbol);
    let dist = &report.distances;
    map.vertices()
        .map(|v| {
            let d = dist[v as usize];
            if d == 0 || d as usize > report.trusted_depth {
                return Ok(None);
            }
            let profile = vertex_profile(map, dist, v);
            type_of(case, symbol.q, profile)
                .map(Some)
                .ok_or(StructureViolation {
                    symbol,
                    case,
                    vertex: v,
                    generation: d,
                    profile,
                })
        })
        .collect()
}

/// Fill in the type census. Every non-origin vertex within the trusted
/// depth must fit one of the types of its case.
pub fn classify(
    map: &PlanarMap,
    report: &CensusReport,
) -> Result<CensusReport, StructureViolation> {
    let types = vertex_types(map, report)?;
    let len = report.trusted_depth + 1;
    let mut tc = TypeCensus {
        a: vec![0; len],
        b: vec![0; len],
        c: vec![0; len],
    };
    for (v, t) in types.iter().enumerate() {
        let Some(t) = t else { continue };
        let d = report.distances[v] as usize;
        match t {
            VertexType::A => tc.a[d] += 1,
            VertexType::B => tc.b[d] += 1,
            VertexType::C => tc.c[d] += 1,
        }
    }
    Ok(CensusReport {
        types: Some(tc),
        ..report.clone()
    })
}
