//! Blocks, cut vertices and the rooted block-cut forest.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::{connected_components, Graph, Vertex, VertexSet};
use crate::separators::path_through_forced_vertex;

/// Index of a node in a [`BlockCutForest`]. Ids follow a pre-order walk.
pub type NodeId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Node {
    Block(VertexSet),
    Cut(Vertex),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BlockCutError {
    #[error("unknown node {0}")]
    UnknownNode(NodeId),
    #[error("nodes {0} and {1} do not form a parent-child edge")]
    NotATreeEdge(NodeId, NodeId),
    #[error("vertices are not all inside one block")]
    NotInBlock,
    #[error("block has fewer than three vertices")]
    BlockTooSmall,
    #[error("endpoints lie in different components")]
    DifferentTrees,
    #[error("forced vertex {1} of node {0} is not on the tree path")]
    PickOffPath(NodeId, Vertex),
    #[error("two forced vertices in block {0}")]
    DuplicatePick(NodeId),
}

/// Rooted block-cut forest of a graph.
///
/// Every tree is rooted at its lexicographically smallest block. Children of a
/// block are its cut vertices in ascending order; children of a cut vertex are
/// its blocks in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockCutForest {
    nodes: Vec<Node>,
    parent: Vec<Option<NodeId>>,
    children: Vec<Vec<NodeId>>,
    depth: Vec<usize>,
    roots: Vec<NodeId>,
    subtree: Vec<VertexSet>,
    cut_node: BTreeMap<Vertex, NodeId>,
    blocks_of: BTreeMap<Vertex, Vec<NodeId>>,
}

/// Maximal 2-connected pieces, bridges and isolated vertices of `g`.
pub fn blocks(g: &Graph) -> Vec<VertexSet> {
    let order: Vec<Vertex> = g.vertices().collect();
    let index: BTreeMap<Vertex, usize> = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let nbrs: Vec<Vec<usize>> = order
        .iter()
        .map(|v| g.neighbors(*v).iter().map(|w| index[w]).collect())
        .collect();
    let n = order.len();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut out = Vec::new();
    let mut vstack: Vec<usize> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        if nbrs[root].is_empty() {
            disc[root] = time;
            time += 1;
            out.push(VertexSet::from([order[root]]));
            continue;
        }
        // (vertex, parent, next neighbour position)
        let mut call: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        disc[root] = time;
        low[root] = time;
        time += 1;
        vstack.push(root);
        while let Some(&mut (v, parent, ref mut pos)) = call.last_mut() {
            if *pos < nbrs[v].len() {
                let w = nbrs[v][*pos];
                *pos += 1;
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    vstack.push(w);
                    call.push((w, v, 0));
                } else if w != parent {
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(p, _, _)) = call.last() {
                low[p] = low[p].min(low[v]);
                if low[v] >= disc[p] {
                    let mut block = VertexSet::from([order[p]]);
                    loop {
                        let u = vstack.pop().expect("block vertices on stack");
                        block.insert(order[u]);
                        if u == v {
                            break;
                        }
                    }
                    out.push(block);
                }
            }
        }
        vstack.clear();
    }
    out
}

/// Builds the rooted block-cut forest of `g`.
pub fn block_cut_forest(g: &Graph) -> BlockCutForest {
    let all_blocks = blocks(g);
    let mut blocks_of_vertex: BTreeMap<Vertex, Vec<usize>> = BTreeMap::new();
    for (i, b) in all_blocks.iter().enumerate() {
        for &v in b {
            blocks_of_vertex.entry(v).or_default().push(i);
        }
    }
    let is_cut = |v: Vertex| blocks_of_vertex[&v].len() >= 2;

    let mut forest = BlockCutForest {
        nodes: Vec::new(),
        parent: Vec::new(),
        children: Vec::new(),
        depth: Vec::new(),
        roots: Vec::new(),
        subtree: Vec::new(),
        cut_node: BTreeMap::new(),
        blocks_of: BTreeMap::new(),
    };

    enum Item {
        Block(usize),
        Cut(Vertex),
    }

    for comp in connected_components(g) {
        let root = blocks_of_vertex
            .iter()
            .filter(|(v, _)| comp.contains(v))
            .flat_map(|(_, bs)| bs.iter().copied())
            .min_by(|a, b| all_blocks[*a].cmp(&all_blocks[*b]))
            .expect("component has a block");
        // pre-order walk with an explicit stack of (item, parent node)
        let mut stack = vec![(Item::Block(root), None::<NodeId>)];
        while let Some((item, parent)) = stack.pop() {
            let id = forest.nodes.len();
            let depth = parent.map_or(0, |p| forest.depth[p] + 1);
            forest.parent.push(parent);
            forest.children.push(Vec::new());
            forest.depth.push(depth);
            if let Some(p) = parent {
                forest.children[p].push(id);
            } else {
                forest.roots.push(id);
            }
            match item {
                Item::Block(b) => {
                    let block = all_blocks[b].clone();
                    for &v in &block {
                        forest.blocks_of.entry(v).or_default().push(id);
                    }
                    let parent_cut = parent.map(|p| match forest.nodes[p] {
                        Node::Cut(c) => c,
                        Node::Block(_) => unreachable!("blocks only hang below cut vertices"),
                    });
                    let kids: Vec<Vertex> = block
                        .iter()
                        .copied()
                        .filter(|&v| is_cut(v) && Some(v) != parent_cut)
                        .collect();
                    for &c in kids.iter().rev() {
                        stack.push((Item::Cut(c), Some(id)));
                    }
                    forest.nodes.push(Node::Block(block));
                }
                Item::Cut(c) => {
                    forest.cut_node.insert(c, id);
                    let parent_block = match &forest.nodes[parent.expect("cut nodes have parents")] {
                        Node::Block(b) => b.clone(),
                        Node::Cut(_) => unreachable!("cut vertices only hang below blocks"),
                    };
                    let mut kids: Vec<usize> = blocks_of_vertex[&c]
                        .iter()
                        .copied()
                        .filter(|&b| all_blocks[b] != parent_block)
                        .collect();
                    kids.sort_by(|a, b| all_blocks[*a].cmp(&all_blocks[*b]));
                    for &b in kids.iter().rev() {
                        stack.push((Item::Block(b), Some(id)));
                    }
                    forest.nodes.push(Node::Cut(c));
                }
            }
        }
    }

    // Pre-order ids let a reverse sweep accumulate subtrees bottom-up.
    let mut subtree: Vec<VertexSet> = forest
        .nodes
        .iter()
        .map(|n| match n {
            Node::Block(b) => b.clone(),
            Node::Cut(c) => VertexSet::from([*c]),
        })
        .collect();
    for id in (0..forest.nodes.len()).rev() {
        if let Some(p) = forest.parent[id] {
            let child = std::mem::take(&mut subtree[id]);
            subtree[p].extend(child.iter().copied());
            subtree[id] = child;
        }
    }
    forest.subtree = subtree;
    forest
}

impl BlockCutForest {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node(&self, id: NodeId) -> &Node {
        &self.nodes[id]
    }

    pub fn nodes(&self) -> impl Iterator<Item = (NodeId, &Node)> {
        self.nodes.iter().enumerate()
    }

    pub fn is_cut(&self, id: NodeId) -> bool {
        matches!(self.nodes[id], Node::Cut(_))
    }

    /// Vertex set of a block node, `None` for cut nodes.
    pub fn block(&self, id: NodeId) -> Option<&VertexSet> {
        match &self.nodes[id] {
            Node::Block(b) => Some(b),
            Node::Cut(_) => None,
        }
    }

    /// Vertex of a cut node, `None` for block nodes.
    pub fn cut_vertex(&self, id: NodeId) -> Option<Vertex> {
        match self.nodes[id] {
            Node::Cut(c) => Some(c),
            Node::Block(_) => None,
        }
    }

    pub fn parent(&self, id: NodeId) -> Option<NodeId> {
        self.parent[id]
    }

    pub fn children(&self, id: NodeId) -> &[NodeId] {
        &self.children[id]
    }

    pub fn depth(&self, id: NodeId) -> usize {
        self.depth[id]
    }

    pub fn roots(&self) -> &[NodeId] {
        &self.roots
    }

    pub fn block_ids(&self) -> impl Iterator<Item = NodeId> + '_ {
        (0..self.nodes.len()).filter(|&i| !self.is_cut(i))
    }

    pub fn cut_vertices(&self) -> VertexSet {
        self.cut_node.keys().copied().collect()
    }

    /// Node of a cut vertex.
    pub fn cut_node(&self, v: Vertex) -> Option<NodeId> {
        self.cut_node.get(&v).copied()
    }

    /// Block nodes containing `v`.
    pub fn blocks_containing(&self, v: Vertex) -> &[NodeId] {
        self.blocks_of.get(&v).map_or(&[], |b| b.as_slice())
    }

    /// The cut node of `v`, or its unique block if `v` is not a cut vertex.
    pub fn node_of(&self, v: Vertex) -> Option<NodeId> {
        self.cut_node(v).or_else(|| self.blocks_containing(v).first().copied())
    }

    /// V_G of the subtree rooted at `d`.
    pub fn subtree_vertices(&self, d: NodeId) -> Result<&VertexSet, BlockCutError> {
        self.subtree.get(d).ok_or(BlockCutError::UnknownNode(d))
    }

    pub fn root_of(&self, mut id: NodeId) -> NodeId {
        while let Some(p) = self.parent[id] {
            id = p;
        }
        id
    }

    /// Whether `a` lies in the subtree of `d` (including `d` itself).
    pub fn is_descendant(&self, mut a: NodeId, d: NodeId) -> bool {
        loop {
            if a == d {
                return true;
            }
            match self.parent[a] {
                Some(p) => a = p,
                None => return false,
            }
        }
    }

    /// Node sequence from `a` to `b` along the tree, or `None` across trees.
    pub fn tree_path(&self, a: NodeId, b: NodeId) -> Option<Vec<NodeId>> {
        let (mut x, mut y) = (a, b);
        let mut left = Vec::new();
        let mut right = Vec::new();
        while self.depth[x] > self.depth[y] {
            left.push(x);
            x = self.parent[x]?;
        }
        while self.depth[y] > self.depth[x] {
            right.push(y);
            y = self.parent[y]?;
        }
        while x != y {
            left.push(x);
            right.push(y);
            x = self.parent[x]?;
            y = self.parent[y]?;
        }
        left.push(x);
        left.extend(right.into_iter().rev());
        Some(left)
    }

    /// Cut-vertex grandchildren of a cut node.
    pub fn grandchildren(&self, v: NodeId) -> Vec<NodeId> {
        self.children[v]
            .iter()
            .flat_map(|&b| self.children[b].iter().copied())
            .collect()
    }
}

/// The cut vertex on tree edge (`parent`, `child`) and the vertex sets of the
/// two sides: the part holding `parent` first, the subtree of `child` second.
pub fn separating_cut_vertex(
    f: &BlockCutForest,
    parent: NodeId,
    child: NodeId,
) -> Result<(Vertex, VertexSet, VertexSet), BlockCutError> {
    if child >= f.len() || parent >= f.len() {
        return Err(BlockCutError::UnknownNode(parent.max(child)));
    }
    if f.parent(child) != Some(parent) {
        return Err(BlockCutError::NotATreeEdge(parent, child));
    }
    let v = f
        .cut_vertex(parent)
        .or_else(|| f.cut_vertex(child))
        .expect("tree edges join a block and a cut vertex");
    let below = f.subtree_vertices(child)?.clone();
    let root = f.root_of(parent);
    let above: VertexSet = f
        .block_ids()
        .filter(|&b| f.root_of(b) == root && !f.is_descendant(b, child))
        .flat_map(|b| f.block(b).expect("block node").iter().copied())
        .collect();
    Ok((v, above, below))
}

/// Two paths p..t and q..t inside `block` that share only `t`.
pub fn path_through_vertex_in_block(
    g: &Graph,
    block: &VertexSet,
    p: Vertex,
    q: Vertex,
    t: Vertex,
) -> Result<(Vec<Vertex>, Vec<Vertex>), BlockCutError> {
    if p == q || p == t || q == t || ![p, q, t].iter().all(|v| block.contains(v)) {
        return Err(BlockCutError::NotInBlock);
    }
    if block.len() < 3 {
        return Err(BlockCutError::BlockTooSmall);
    }
    let h = g.induced(block);
    let path = path_through_forced_vertex(&h, &VertexSet::from([p]), &VertexSet::from([q]), t)
        .ok_or(BlockCutError::NotInBlock)?;
    let at = path.iter().position(|&v| v == t).expect("path passes t");
    let first = path[..=at].to_vec();
    let mut second = path[at..].to_vec();
    second.reverse();
    Ok((first, second))
}

/// A simple `x`-`y` path that visits every forced vertex, one per block on the
/// tree path between the nodes of `x` and `y`.
pub fn threaded_path(
    g: &Graph,
    f: &BlockCutForest,
    x: Vertex,
    y: Vertex,
    forced: &[(NodeId, Vertex)],
) -> Result<Vec<Vertex>, BlockCutError> {
    let nx = f.node_of(x).ok_or(BlockCutError::DifferentTrees)?;
    let ny = f.node_of(y).ok_or(BlockCutError::DifferentTrees)?;
    let nodes = f.tree_path(nx, ny).ok_or(BlockCutError::DifferentTrees)?;
    let mut picks: BTreeMap<NodeId, Vertex> = BTreeMap::new();
    for &(b, v) in forced {
        if b >= f.len() {
            return Err(BlockCutError::UnknownNode(b));
        }
        if !nodes.contains(&b) || !f.block(b).is_some_and(|s| s.contains(&v)) {
            return Err(BlockCutError::PickOffPath(b, v));
        }
        if picks.insert(b, v).is_some() {
            return Err(BlockCutError::DuplicatePick(b));
        }
    }
    if x == y {
        return Ok(vec![x]);
    }
    let mut path = vec![x];
    let mut entry = x;
    for (i, &id) in nodes.iter().enumerate() {
        let Some(block) = f.block(id) else { continue };
        let exit = match nodes.get(i + 1) {
            Some(&c) => f.cut_vertex(c).expect("blocks alternate with cut vertices"),
            None => y,
        };
        let segment = match picks.get(&id) {
            Some(&v) if v != entry && v != exit => {
                let (mut a, b) = path_through_vertex_in_block(g, block, entry, exit, v)?;
                a.extend(b.into_iter().rev().skip(1));
                a
            }
            _ => g
                .induced(block)
                .shortest_path(entry, exit)
                .ok_or(BlockCutError::NotInBlock)?,
        };
        path.extend(segment.into_iter().skip(1));
        entry = exit;
    }
    Ok(path)
}
