use crate::genfunc::Schlafli;

pub type VertexId = u32;
pub type HalfEdgeId = u32;

/// Where a new half-edge goes in a vertex's rotation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Slot {
    Front,
    Back,
}

/// A finite piece of a tessellation stored as a rotation system.
///
/// Half-edges come in twin pairs `2k, 2k+1`, so `twin(h) = h ^ 1` and only
/// the head of each half-edge is stored. Every vertex keeps its outgoing
/// half-edges in counterclockwise order. For a vertex that has not reached
/// degree `q` the list is linear: the unbuilt part of its neighbourhood
/// lies between the last and the first entry.
#[derive(Debug, Clone)]
pub struct PlanarMap {
    symbol: Schlafli,
    heads: Vec<VertexId>,
    rotations: Vec<Vec<HalfEdgeId>>,
    layers: Vec<u32>,
}

/// A closed face, as the cycle of half-edges that bound it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub half_edges: Vec<HalfEdgeId>,
}

impl Face {
    pub fn degree(&self) -> usize {
        self.half_edges.len()
    }
}

impl PlanarMap {
    pub(crate) fn with_origin(symbol: Schlafli) -> Self {
        PlanarMap {
            symbol,
            heads: Vec::new(),
            rotations: vec![Vec::new()],
            layers: vec![0],
        }
    }

    /// A map holding only the origin.
    pub fn singleton(symbol: Schlafli) -> Self {
        Self::with_origin(symbol)
    }

    pub fn symbol(&self) -> Schlafli {
        self.symbol
    }

    pub fn origin(&self) -> VertexId {
        0
    }

    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    pub fn edge_count(&self) -> usize {
        self.heads.len() / 2
    }

    pub fn half_edge_count(&self) -> usize {
        self.heads.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        0..self.rotations.len() as VertexId
    }

    /// Construction layer of a vertex. It matches the BFS distance from the
    /// origin when the builder is correct; the census never relies on it.
    pub fn layer(&self, v: VertexId) -> u32 {
        self.layers[v as usize]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rotations[v as usize].len()
    }

    /// All `q` incident edges are present.
    pub fn is_saturated(&self, v: VertexId) -> bool {
        self.degree(v) == self.symbol.q as usize
    }

    pub fn rotation(&self, v: VertexId) -> &[HalfEdgeId] {
        &self.rotations[v as usize]
    }

    pub fn head(&self, h: HalfEdgeId) -> VertexId {
        self.heads[h as usize]
    }

    pub fn tail(&self, h: HalfEdgeId) -> VertexId {
        self.heads[(h ^ 1) as usize]
    }

    pub fn twin(&self, h: HalfEdgeId) -> HalfEdgeId {
        h ^ 1
    }

    /// Neighbours in rotation order.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.rotations[v as usize]
            .iter()
            .map(move |&h| self.head(h))
    }

    pub fn are_adjacent(&self, u: VertexId, w: VertexId) -> bool {
        self.neighbors(u).any(|x| x == w)
    }

    /// Next half-edge around the face to the right of `h`, or `None` when
    /// that face runs into the unbuilt part of the map at `head(h)`.
    pub fn next_in_face(&self, h: HalfEdgeId) -> Option<HalfEdgeId> {
        let v = self.head(h);
        let rot = &self.rotations[v as usize];
        let t = self.twin(h);
        let idx = rot.iter().position(|&x| x == t)?;
        if idx + 1 < rot.len() {
            Some(rot[idx + 1])
        } else if self.is_saturated(v) {
            Some(rot[0])
        } else {
            None
        }
    }

    /// Every face whose boundary is fully built.
    pub fn closed_faces(&self) -> Vec<Face> {
        let n = self.heads.len();
        let mut seen = vec![false; n];
        let mut faces = Vec::new();
        for start in 0..n as HalfEdgeId {
            if seen[start as usize] {
                continue;
            }
            let mut walk = vec![start];
            seen[start as usize] = true;
            let mut h = start;
            let closed = loop {
                match self.next_in_face(h) {
                    None => break false,
                    Some(nx) if nx == start => break true,
                    Some(nx) if seen[nx as usize] => break false,
                    Some(nx) => {
                        seen[nx as usize] = true;
                        walk.push(nx);
                        h = nx;
                    }
                }
            };
            if closed {
                faces.push(Face { half_edges: walk });
            }
        }
        faces
    }

    pub(crate) fn add_vertex(&mut self, layer: u32) -> VertexId {
        self.rotations.push(Vec::new());
        self.layers.push(layer);
        (self.rotations.len() - 1) as VertexId
    }

    /// Join `u` and `w`, placing the new half-edges at the given ends of the
    /// two rotations. Returns the half-edge `u -> w`.
    pub(crate) fn connect(
        &mut self,
        u: VertexId,
        at_u: Slot,
        w: VertexId,
        at_w: Slot,
    ) -> HalfEdgeId {
        let h = self.heads.len() as HalfEdgeId;
        self.heads.push(w);
        self.heads.push(u);
        place(&mut self.rotations[u as usize], h, at_u);
        place(&mut self.rotations[w as usize], h ^ 1, at_w);
        h
    }
}

fn place(rot: &mut Vec<HalfEdgeId>, h: HalfEdgeId, at: Slot) {
    match at {
        Slot::Front => rot.insert(0, h),
        Slot::Back => rot.push(h),
    }
}
