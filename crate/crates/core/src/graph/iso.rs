use super::Graph;

/// Brute-force isomorphism test: backtracking over vertex maps, pruned by
/// degree and by adjacency with the already-mapped prefix. Meant for graphs
/// with a dozen vertices or so.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.vertex_count() != h.vertex_count()
        || g.edge_count() != h.edge_count()
        || g.degree_sequence() != h.degree_sequence()
    {
        return false;
    }
    let n = g.vertex_count();
    // Map high-degree vertices first; they constrain the search the most.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(g, h, &order, 0, &mut image, &mut used)
}

fn extend(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for w in 0..h.vertex_count() {
        if used[w] || h.degree(w) != g.degree(v) {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&x| g.has_edge(v, x) == h.has_edge(w, image[x]));
        if !consistent {
            continue;
        }
        image[v] = w;
        used[w] = true;
        if extend(g, h, order, depth + 1, image, used) {
            return true;
        }
        used[w] = false;
        image[v] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Family, ThetaGraph, ThetaSpec};

    #[test]
    fn k23_is_theta_222() {
        let t = ThetaGraph::build(ThetaSpec::new(2, 2, 2).unwrap());
        let k23 = Family::CompleteBipartite(2, 3).build().unwrap();
        assert!(are_isomorphic(&t.graph, &k23));
    }

    #[test]
    fn same_degrees_not_isomorphic() {
        // C6 versus two disjoint triangles.
        let c6 = Family::Cycle(6).build().unwrap();
        let two_k3 = Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!are_isomorphic(&c6, &two_k3));
        assert!(are_isomorphic(&c6, &c6));
    }

    #[test]
    fn relabeled_graph_is_isomorphic() {
        let g = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]).unwrap();
        let perm = [3, 0, 4, 1, 2];
        let h = Graph::new(5, g.edges().iter().map(|&(a, b)| (perm[a], perm[b]))).unwrap();
        assert!(are_isomorphic(&g, &h));
    }
}
