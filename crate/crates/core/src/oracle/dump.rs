//! Line-oriented adjacency dump.
//!
//! ```text
//! # tilecensus-map v1
//! # symbol {4,5} vertices 21 edges 25 trusted_depth 1
//! 0 0 O closed 1 2 3 4 5
//! 1 1 A closed 6 0 ...
//! ```
//!
//! After the two header lines there is one line per vertex: id, BFS
//! generation, type tag (`O` for the origin, `A`/`B`/`C`, `-` beyond the
//! trusted depth), `closed` or `open` depending on saturation, then the
//! neighbour ids in counterclockwise rotation order.

use std::io::{self, Write};

use super::census::{CensusReport, VertexType};
use super::map::PlanarMap;

pub const DUMP_HEADER: &str = "# tilecensus-map v1";

pub fn write_dump<W: Write>(
    out: &mut W,
    map: &PlanarMap,
    report: &CensusReport,
    types: &[Option<VertexType>],
) -> io::Result<()> {
    writeln!(out, "{DUMP_HEADER}")?;
    writeln!(
        out,
        "# symbol {} vertices {} edges {} trusted_depth {}",
        map.symbol(),
        map.vertex_count(),
        map.edge_count(),
        report.trusted_depth
    )?;
    for v in map.vertices() {
        let tag = if v == map.origin() {
            "O"
        } else {
            types
                .get(v as usize)
                .copied()
                .flatten()
                .map_or("-", |t| t.as_str())
        };
        let state = if map.is_saturated(v) {
            "closed"
        } else {
            "open"
        };
        write!(out, "{v} {} {tag} {state}", report.distances[v as usize])?;
        for w in map.neighbors(v) {
            write!(out, " {w}")?;
        }
        writeln!(out)?;
    }
    Ok(())
}
