use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use crate::error::Error;
use crate::graph::{EdgeWeightedGraph, Weight};
use crate::partition::Partition;

/// Absorbs regions smaller than `min_area` vertices.
///
/// The smallest undersized region (ties: smaller label) is merged into the
/// neighbor across its lightest connecting edge (ties: smaller neighbor
/// label), until no undersized region has a neighbor left. Labels of merged
/// regions are the smallest original label they contain.
pub fn area_filter(partition: &Partition, graph: &EdgeWeightedGraph, min_area: usize) -> Result<Partition, Error> {
    if partition.vertex_count() != graph.vertex_count() {
        return Err(Error::SizeMismatch {
            expected: graph.vertex_count(),
            found: partition.vertex_count(),
        });
    }
    let labels = partition.labels();
    let r = partition.region_count();
    let mut size = partition.region_sizes();
    let mut parent: Vec<u32> = (0..r as u32).collect();
    let mut canon: Vec<u32> = (0..r as u32).collect();
    let mut adj: Vec<HashMap<u32, Weight>> = vec![HashMap::new(); r];
    for e in graph.edges() {
        let (a, b) = (labels[e.u.index()], labels[e.v.index()]);
        if a != b {
            for (x, y) in [(a, b), (b, a)] {
                let w = adj[x as usize].entry(y).or_insert(e.weight);
                *w = (*w).min(e.weight);
            }
        }
    }

    fn find(parent: &mut [u32], x: u32) -> u32 {
        let mut root = x;
        while parent[root as usize] != root {
            root = parent[root as usize];
        }
        let mut cur = x;
        while parent[cur as usize] != root {
            let next = parent[cur as usize];
            parent[cur as usize] = root;
            cur = next;
        }
        root
    }

    let mut heap: BinaryHeap<Reverse<(usize, u32, u32)>> = (0..r as u32)
        .filter(|&l| size[l as usize] < min_area)
        .map(|l| Reverse((size[l as usize], l, l)))
        .collect();
    let mut regions = r;
    while let Some(Reverse((sz, cn, root))) = heap.pop() {
        if regions <= 1 {
            break;
        }
        if parent[root as usize] != root || size[root as usize] != sz || canon[root as usize] != cn {
            continue;
        }
        let target = adj[root as usize]
            .iter()
            .map(|(&n, &w)| (w, canon[n as usize], n))
            .min()
            .map(|(_, _, n)| n);
        let Some(target) = target else { continue };

        let (big, small) = if adj[root as usize].len() >= adj[target as usize].len() {
            (root, target)
        } else {
            (target, root)
        };
        let small_adj = std::mem::take(&mut adj[small as usize]);
        adj[big as usize].remove(&small);
        for (n, w) in small_adj {
            if n == big {
                continue;
            }
            let nm = &mut adj[n as usize];
            nm.remove(&small);
            let slot = nm.entry(big).or_insert(w);
            *slot = (*slot).min(w);
            let slot = adj[big as usize].entry(n).or_insert(w);
            *slot = (*slot).min(w);
        }
        parent[small as usize] = big;
        size[big as usize] += size[small as usize];
        canon[big as usize] = canon[big as usize].min(canon[small as usize]);
        regions -= 1;
        if size[big as usize] < min_area {
            heap.push(Reverse((size[big as usize], canon[big as usize], big)));
        }
    }
    Ok(Partition::from_keys(labels.iter().map(|&l| find(&mut parent, l))))
}
