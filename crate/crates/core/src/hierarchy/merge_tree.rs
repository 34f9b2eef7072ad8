use std::fmt::Write as _;

use crate::graph::Weight;
use crate::partition::Partition;
use crate::union_find::UnionFindForest;

use super::ScaleMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeNode {
    /// 0 for leaves.
    pub scale: u64,
    pub size: usize,
    pub internal_difference: Weight,
    pub children: Vec<usize>,
    pub parent: Option<usize>,
}

/// Binary dendrogram of a [`ScaleMap`]. Nodes `0..leaf_count` are the
/// vertices; internal nodes follow in creation order, which is ascending
/// `(scale, edge id)`, so a parent always has a larger index than its
/// children.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MergeTree {
    leaf_count: usize,
    nodes: Vec<TreeNode>,
}

impl MergeTree {
    pub fn from_scale_map(scales: &ScaleMap) -> Self {
        let n = scales.vertex_count();
        let mut nodes: Vec<TreeNode> = (0..n)
            .map(|_| TreeNode {
                scale: 0,
                size: 1,
                internal_difference: 0,
                children: Vec::new(),
                parent: None,
            })
            .collect();
        let mut order: Vec<_> = scales.entries().to_vec();
        order.sort_by_key(|(e, s)| (*s, e.id));
        let mut uf = UnionFindForest::new(n);
        // tree node currently standing for each union-find root
        let mut top: Vec<usize> = (0..n).collect();
        for (e, s) in order {
            let (ra, rb) = (uf.find(e.u.index()), uf.find(e.v.index()));
            if ra == rb {
                continue;
            }
            let (ta, tb) = (top[ra], top[rb]);
            let id = nodes.len();
            nodes.push(TreeNode {
                scale: s,
                size: nodes[ta].size + nodes[tb].size,
                internal_difference: nodes[ta]
                    .internal_difference
                    .max(nodes[tb].internal_difference)
                    .max(e.weight),
                children: vec![ta, tb],
                parent: None,
            });
            nodes[ta].parent = Some(id);
            nodes[tb].parent = Some(id);
            let r = uf.union(ra, rb, 0).expect("distinct roots");
            top[r] = id;
        }
        Self { leaf_count: n, nodes }
    }

    pub fn leaf_count(&self) -> usize {
        self.leaf_count
    }

    pub fn nodes(&self) -> &[TreeNode] {
        &self.nodes
    }

    pub fn internal_nodes(&self) -> impl Iterator<Item = (usize, &TreeNode)> {
        self.nodes.iter().enumerate().skip(self.leaf_count)
    }

    pub fn roots(&self) -> impl Iterator<Item = usize> + '_ {
        self.nodes
            .iter()
            .enumerate()
            .filter(|(_, n)| n.parent.is_none())
            .map(|(i, _)| i)
    }

    /// Partition given by cutting the tree at `λ`: each leaf joins its
    /// highest ancestor with scale `≤ λ`.
    pub fn flatten(&self, lambda: u64) -> Partition {
        let mut rep: Vec<usize> = (0..self.nodes.len()).collect();
        for i in (0..self.nodes.len()).rev() {
            if let Some(p) = self.nodes[i].parent {
                if self.nodes[p].scale <= lambda {
                    rep[i] = rep[p];
                }
            }
        }
        Partition::from_keys(rep[..self.leaf_count].iter().copied())
    }

    /// Text form: a header line, then one `id,scale,size,internal_difference,children`
    /// record per internal node, children separated by spaces. Leaves are
    /// implicit (ids below the leaf count).
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "# merge-tree leaves={} internal={}\nid,scale,size,internal_difference,children\n",
            self.leaf_count,
            self.nodes.len() - self.leaf_count
        );
        for (id, node) in self.internal_nodes() {
            let children: Vec<String> = node.children.iter().map(|c| c.to_string()).collect();
            let _ = writeln!(
                out,
                "{id},{},{},{},{}",
                node.scale,
                node.size,
                node.internal_difference,
                children.join(" ")
            );
        }
        out
    }
}
