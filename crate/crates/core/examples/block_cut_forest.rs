//! Prints the blocks and cut vertices of a graph and its forest in DOT.

use mwns::blockcut::{block_cut_forest, Node};
use mwns::io::forest_to_dot;
use mwns::Graph;

fn main() {
    let g = Graph::from_edges([(1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 6), (6, 4), (6, 7), (8, 9)]).unwrap();
    let f = block_cut_forest(&g);
    for (id, node) in f.nodes() {
        let parent = f.parent(id).map_or("-".to_string(), |p| p.to_string());
        match node {
            Node::Block(b) => println!("{id}: block {b:?} parent {parent}"),
            Node::Cut(v) => println!("{id}: cut {v} parent {parent}"),
        }
    }
    print!("{}", forest_to_dot(&g));
}
