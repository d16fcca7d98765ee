//! Generation-by-generation construction of a disk of `{p,q}`.
//!
//! The builder knows only two local rules: every vertex ends with degree
//! `q`, and every face ends with `p` edges. The outer boundary is a cyclic
//! list of the newest vertices, and between two consecutive ones sits an
//! open face together with the number of edges it already has. Growing one
//! generation means:
//!
//! 1. an open face missing exactly one edge is closed by joining its two
//!    boundary vertices; a boundary vertex left without free edge slots
//!    drops out and its two open faces become one (repeat until stable);
//! 2. every remaining boundary vertex spends its free slots on new
//!    outward edges. An open face missing exactly two edges is closed by
//!    letting its two sides end in one shared new vertex; every other
//!    open face grows by one edge on each side.
//!
//! Vertices are identified purely through this boundary bookkeeping, never
//! through coordinates.

use crate::genfunc::{FaceDegree, Schlafli, SymbolError};

use super::map::{PlanarMap, Slot, VertexId};
use super::BuildError;

/// Default vertex budget for a single map.
pub const DEFAULT_VERTEX_BUDGET: usize = 200_000;

/// One open face per boundary position: `open_len[i]` edges already bound
/// the face between `verts[i]` and `verts[i + 1]`.
#[derive(Debug, Clone, Default)]
struct Boundary {
    verts: Vec<VertexId>,
    open_len: Vec<u32>,
}

/// Incremental builder; each call to [`Grower::grow`] adds one generation.
#[derive(Debug, Clone)]
pub struct Grower {
    map: PlanarMap,
    face_degree: Option<u32>,
    boundary: Boundary,
    /// Generation of the boundary vertices (0 before the first step).
    frontier_layer: u32,
}

impl Grower {
    pub fn new(symbol: Schlafli) -> Result<Self, BuildError> {
        if !symbol.is_admissible() {
            return Err(BuildError::BadSymbol(SymbolError::SphericalOutOfScope(
                symbol,
            )));
        }
        let face_degree = match symbol.p {
            FaceDegree::Finite(p) => Some(p),
            FaceDegree::Infinite => None,
        };
        Ok(Grower {
            map: PlanarMap::with_origin(symbol),
            face_degree,
            boundary: Boundary::default(),
            frontier_layer: 0,
        })
    }

    pub fn map(&self) -> &PlanarMap {
        &self.map
    }

    pub fn into_map(self) -> PlanarMap {
        self.map
    }

    /// Every vertex of construction layer `<= depth` has degree `q` once
    /// `saturated_layers() > depth`.
    pub fn saturated_layers(&self) -> u32 {
        self.frontier_layer
    }

    fn q(&self) -> u32 {
        self.map.symbol().q
    }

    fn free(&self, v: VertexId) -> u32 {
        self.q() - self.map.degree(v) as u32
    }

    fn is_full(&self, len: u32, missing: u32) -> bool {
        self.face_degree.is_some_and(|p| len + missing == p)
    }

    /// Add one generation, unless that would push the map past `budget`
    /// vertices, in which case `Ok(false)` is returned and the map keeps
    /// its current vertex set.
    pub fn grow(&mut self, budget: usize) -> Result<bool, BuildError> {
        if self.map.vertex_count() == 1 && self.map.degree(0) == 0 {
            return Ok(self.seed(budget));
        }
        self.close_and_merge()?;
        self.spawn(budget)
    }

    fn seed(&mut self, budget: usize) -> bool {
        let q = self.q();
        if 1 + q as usize > budget {
            return false;
        }
        let origin = self.map.origin();
        for _ in 0..q {
            let c = self.map.add_vertex(1);
            self.map.connect(origin, Slot::Back, c, Slot::Front);
            self.boundary.verts.push(c);
            self.boundary.open_len.push(2);
        }
        self.frontier_layer = 1;
        true
    }

    /// Step 1: same-generation edges, and removal of vertices without free
    /// slots.
    fn close_and_merge(&mut self) -> Result<(), BuildError> {
        loop {
            let m = self.boundary.verts.len();
            if m < 3 {
                return Err(self.inconsistent("boundary collapsed"));
            }
            let mut changed = false;
            for i in 0..m {
                let len = self.boundary.open_len[i];
                if self.face_degree.is_some_and(|p| len >= p) {
                    return Err(self.inconsistent("open face overshoots p"));
                }
                if !self.is_full(len, 1) {
                    continue;
                }
                let u = self.boundary.verts[i];
                let w = self.boundary.verts[(i + 1) % m];
                if self.free(u) == 0 || self.free(w) == 0 {
                    return Err(self.inconsistent("face needs an edge at a full vertex"));
                }
                if self.map.are_adjacent(u, w) {
                    return Err(self.inconsistent("closing edge would duplicate an edge"));
                }
                // w lies on the counterclockwise side of u.
                self.map.connect(u, Slot::Front, w, Slot::Back);
                self.boundary.open_len[i] = 1;
                changed = true;
            }
            let keep: Vec<bool> = self
                .boundary
                .verts
                .iter()
                .map(|&v| self.free(v) > 0)
                .collect();
            if keep.iter().any(|k| !k) {
                let start = keep
                    .iter()
                    .position(|&k| k)
                    .ok_or_else(|| self.inconsistent("every boundary vertex is full"))?;
                let mut verts = Vec::with_capacity(m);
                let mut lens: Vec<u32> = Vec::with_capacity(m);
                for j in start..start + m {
                    let idx = j % m;
                    if keep[idx] {
                        verts.push(self.boundary.verts[idx]);
                        lens.push(self.boundary.open_len[idx]);
                    } else {
                        *lens.last_mut().unwrap() += self.boundary.open_len[idx];
                    }
                }
                self.boundary = Boundary {
                    verts,
                    open_len: lens,
                };
                changed = true;
            }
            if !changed {
                return Ok(());
            }
        }
    }

    /// Step 2: new outward edges, sharing an endpoint where a face closes.
    fn spawn(&mut self, budget: usize) -> Result<bool, BuildError> {
        let m = self.boundary.verts.len();
        // Slot k belongs to boundary position owner[k]; shares_prev[k] marks
        // a slot whose new vertex is the previous slot's one.
        let mut owner: Vec<usize> = Vec::new();
        let mut shares_prev: Vec<bool> = Vec::new();
        for i in 0..m {
            let before = self.boundary.open_len[(i + m - 1) % m];
            let closes = self.is_full(before, 2);
            for j in 0..self.free(self.boundary.verts[i]) {
                owner.push(i);
                shares_prev.push(j == 0 && closes);
            }
        }
        let n = owner.len();
        let Some(start) = shares_prev.iter().position(|s| !s) else {
            return Err(self.inconsistent("all new vertices coincide"));
        };
        let fresh = shares_prev.iter().filter(|s| !**s).count();
        if fresh < 3 {
            return Err(self.inconsistent("next boundary has fewer than three vertices"));
        }
        if self.map.vertex_count() + fresh > budget {
            return Ok(false);
        }

        let layer = self.frontier_layer + 1;
        let mut next = Boundary {
            verts: Vec::with_capacity(fresh),
            open_len: Vec::with_capacity(fresh),
        };
        // New vertices are created walking from a slot that starts one, so
        // a vertex shared across the wrap-around is not split.
        let mut child: Vec<VertexId> = vec![0; n];
        let mut current: VertexId = 0;
        for step in 0..n {
            let k = (start + step) % n;
            if !shares_prev[k] {
                current = self.map.add_vertex(layer);
                next.verts.push(current);
            }
            child[k] = current;

            let after = (k + 1) % n;
            if !shares_prev[after] {
                let len = if owner[after] == owner[k] {
                    2
                } else {
                    self.boundary.open_len[owner[k]] + 2
                };
                next.open_len.push(len);
            }
        }
        // Edges go in in slot order so every parent lists its children
        // counterclockwise. A shared child sees its later parent first.
        for k in 0..n {
            let parent = self.boundary.verts[owner[k]];
            let at_child = if shares_prev[k] {
                Slot::Front
            } else {
                Slot::Back
            };
            self.map.connect(parent, Slot::Back, child[k], at_child);
        }
        self.boundary = next;
        self.frontier_layer = layer;
        Ok(true)
    }

    fn inconsistent(&self, what: &str) -> BuildError {
        BuildError::Inconsistent {
            symbol: self.map.symbol(),
            layer: self.frontier_layer,
            reason: what.to_string(),
        }
    }
}

/// Grow until every vertex within `min_saturated_depth` of the origin has
/// degree `q`.
pub fn build_map(
    s: Schlafli,
    min_saturated_depth: usize,
    vertex_budget: usize,
) -> Result<PlanarMap, BuildError> {
    let mut g = Grower::new(s)?;
    while (g.saturated_layers() as usize) <= min_saturated_depth {
        if !g.grow(vertex_budget)? {
            return Err(BuildError::BudgetExceeded {
                requested_depth: min_saturated_depth,
                achieved_depth: (g.saturated_layers() as usize).saturating_sub(1),
                vertices: g.map().vertex_count(),
            });
        }
    }
    Ok(g.into_map())
}

/// Grow as deep as `vertex_budget` allows, stopping once `max_depth` is
/// saturated.
pub fn build_map_within_budget(
    s: Schlafli,
    max_depth: usize,
    vertex_budget: usize,
) -> Result<PlanarMap, BuildError> {
    let mut g = Grower::new(s)?;
    while (g.saturated_layers() as usize) <= max_depth {
        if !g.grow(vertex_budget)? {
            break;
        }
    }
    Ok(g.into_map())
}

/// The `q`-regular tree, saturated through `depth`.
pub fn build_tree(q: u32, depth: usize) -> Result<PlanarMap, BuildError> {
    let s = Schlafli::tree(q).map_err(BuildError::BadSymbol)?;
    build_map(s, depth, usize::MAX)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(p: u32, q: u32) -> Schlafli {
        Schlafli::finite(p, q).unwrap()
    }

    #[test]
    fn seventh_triangle_first_ring() {
        let map = build_map(sym(3, 7), 1, DEFAULT_VERTEX_BUDGET).unwrap();
        let origin = map.origin();
        assert!(map.is_saturated(origin));
        for n in map.neighbors(origin).collect::<Vec<_>>() {
            assert!(map.is_saturated(n));
            let ring: Vec<_> = map.neighbors(n).filter(|&w| map.layer(w) == 1).collect();
            assert_eq!(ring.len(), 2);
        }
    }

    #[test]
    fn tree_sizes() {
        let map = build_tree(3, 2).unwrap();
        // saturated through depth 2, so generation 3 exists: 1 + 3 + 6 + 12
        assert_eq!(map.vertex_count(), 22);
        assert!(map.closed_faces().is_empty());
    }

    #[test]
    fn budget_is_respected() {
        let err = build_map(sym(4, 5), 10, 500).unwrap_err();
        match err {
            BuildError::BudgetExceeded {
                achieved_depth,
                vertices,
                ..
            } => {
                assert!(vertices <= 500);
                assert!(achieved_depth < 10);
            }
            other => panic!("unexpected {other:?}"),
        }
        let map = build_map_within_budget(sym(4, 5), 10, 500).unwrap();
        assert!(map.vertex_count() <= 500);
    }

    #[test]
    fn spherical_symbols_are_rejected() {
        assert!(matches!(
            build_map(sym(5, 3), 2, 1000),
            Err(BuildError::BadSymbol(_))
        ));
    }

    #[test]
    fn closed_faces_have_degree_p() {
        for (p, q) in [(4, 4), (3, 6), (6, 3), (5, 4), (7, 3), (3, 7)] {
            let map = build_map(sym(p, q), 4, DEFAULT_VERTEX_BUDGET).unwrap();
            let faces = map.closed_faces();
            assert!(!faces.is_empty());
            assert!(
                faces.iter().all(|f| f.degree() == p as usize),
                "{{{p},{q}}}"
            );
        }
    }
}
