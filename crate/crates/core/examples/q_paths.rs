//! Packs vertex-disjoint paths between marked vertices and prints a hitting set.

use mwns::separators::gallai_q_paths;
use mwns::{Graph, VertexSet};

fn main() {
    // Petersen graph.
    let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i + 1, (i + 1) % 5 + 1)).collect();
    edges.extend((0..5).map(|i| (i + 1, i + 6)));
    edges.extend((0..5).map(|i| (i + 6, (i + 2) % 5 + 6)));
    let g = Graph::from_edges(edges).unwrap();
    let q = VertexSet::from([1, 3, 7, 8, 10]);
    let r = gallai_q_paths(&g, &q);
    println!("{} disjoint paths:", r.packing.len());
    for p in &r.packing {
        println!("  {p:?}");
    }
    println!("cover {:?}", r.cover);
}
