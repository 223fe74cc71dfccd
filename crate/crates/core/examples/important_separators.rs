//! Lists the important separators between two vertex sets of a grid.

use mwns::separators::{enumerate_important_separators, max_vertex_flow, SeparatorQuery};
use mwns::{Graph, VertexSet};

fn main() {
    // 3 x 4 grid, vertex (r, c) = 4r + c + 1.
    let mut edges = Vec::new();
    for r in 0..3 {
        for c in 0..4 {
            let v = 4 * r + c + 1;
            if c < 3 {
                edges.push((v, v + 1));
            }
            if r < 2 {
                edges.push((v, v + 4));
            }
        }
    }
    let g = Graph::from_edges(edges).unwrap();
    let q = SeparatorQuery::new(&g, VertexSet::from([1]), VertexSet::from([12]));
    println!("max flow: {:?}", max_vertex_flow(&q).value);
    for k in 2..=3 {
        let found = enumerate_important_separators(&q, k);
        println!("size <= {k}: {} separators", found.separators.len());
        for s in &found.separators {
            println!("  {s:?}");
        }
    }
}
