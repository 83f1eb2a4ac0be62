use serde::Serialize;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BlockKind {
    /// Exactly one cut vertex.
    End,
    /// At least two cut vertices.
    Inner,
    /// No cut vertex: the block is a whole component.
    Isolated,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    /// Sorted by smallest member.
    pub blocks: Vec<VertexSet>,
    pub kinds: Vec<BlockKind>,
    pub cut_vertices: VertexSet,
    /// Number of blocks containing each vertex.
    pub blocks_containing: Vec<usize>,
}

impl BlockDecomposition {
    pub fn inner_blocks(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.blocks.iter().zip(&self.kinds).filter(|(_, &k)| k == BlockKind::Inner).map(|(&b, _)| b)
    }

    /// Vertices lying in at least `k` blocks.
    pub fn vertices_in_at_least(&self, k: usize) -> VertexSet {
        self.blocks_containing.iter().enumerate().filter(|(_, &c)| c >= k).map(|(v, _)| v).collect()
    }
}

struct Tarjan<'a> {
    g: &'a Graph,
    disc: Vec<Option<usize>>,
    low: Vec<usize>,
    clock: usize,
    stack: Vec<(usize, usize)>,
    blocks: Vec<VertexSet>,
}

impl Tarjan<'_> {
    fn dfs(&mut self, u: usize, parent: Option<usize>) {
        self.disc[u] = Some(self.clock);
        self.low[u] = self.clock;
        self.clock += 1;
        for w in self.g.neighbors(u).iter() {
            match self.disc[w] {
                None => {
                    self.stack.push((u, w));
                    self.dfs(w, Some(u));
                    self.low[u] = self.low[u].min(self.low[w]);
                    if self.low[w] >= self.disc[u].expect("discovered") {
                        let mut block = VertexSet::EMPTY;
                        while let Some((a, b)) = self.stack.pop() {
                            block.insert(a);
                            block.insert(b);
                            if (a, b) == (u, w) {
                                break;
                            }
                        }
                        self.blocks.push(block);
                    }
                }
                Some(dw) if Some(w) != parent && dw < self.disc[u].expect("discovered") => {
                    self.stack.push((u, w));
                    self.low[u] = self.low[u].min(dw);
                }
                _ => {}
            }
        }
    }
}

/// Blocks by articulation-point search; isolated vertices form their own
/// single-vertex blocks.
pub fn block_decomposition(g: &Graph) -> BlockDecomposition {
    let n = g.order();
    let mut t = Tarjan { g, disc: vec![None; n], low: vec![0; n], clock: 0, stack: Vec::new(), blocks: Vec::new() };
    for v in 0..n {
        if t.disc[v].is_none() {
            if g.degree(v) == 0 {
                t.disc[v] = Some(t.clock);
                t.clock += 1;
                t.blocks.push(VertexSet::singleton(v));
            } else {
                t.dfs(v, None);
            }
        }
    }
    let mut blocks = t.blocks;
    blocks.sort_by(|a, b| a.lex_cmp(*b));

    let mut blocks_containing = vec![0usize; n];
    for b in &blocks {
        for v in b.iter() {
            blocks_containing[v] += 1;
        }
    }
    let cut_vertices: VertexSet = (0..n).filter(|&v| blocks_containing[v] >= 2).collect();
    let kinds = blocks
        .iter()
        .map(|b| match (*b & cut_vertices).len() {
            0 => BlockKind::Isolated,
            1 => BlockKind::End,
            _ => BlockKind::Inner,
        })
        .collect();
    BlockDecomposition { blocks, kinds, cut_vertices, blocks_containing }
}

/// Every block is complete.
pub fn is_block_graph(g: &Graph) -> bool {
    block_decomposition(g).blocks.iter().all(|&b| g.is_clique(b))
}
