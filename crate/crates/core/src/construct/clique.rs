//! Exact maximum clique by branch and bound with bitset adjacency and a
//! greedy coloring bound.

#[derive(Clone)]
pub struct BitGraph {
    pub n: usize,
    words: usize,
    adj: Vec<u64>,
}

impl BitGraph {
    pub fn new(n: usize) -> BitGraph {
        let words = n.div_ceil(64);
        BitGraph {
            n,
            words,
            adj: vec![0; n * words],
        }
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        debug_assert_ne!(a, b);
        self.adj[a * self.words + b / 64] |= 1 << (b % 64);
        self.adj[b * self.words + a / 64] |= 1 << (a % 64);
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.row(a)[b / 64] >> (b % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }
}

struct Search<'g> {
    g: &'g BitGraph,
    best: Vec<usize>,
}

impl<'g> Search<'g> {
    /// Greedy coloring of the candidate set; returns vertices ordered so that
    /// color numbers are nondecreasing, with their colors (1-based).
    fn color_sort(&self, cand: &[u64]) -> Vec<(usize, usize)> {
        let words = self.g.words;
        let mut uncolored = cand.to_vec();
        let mut out: Vec<(usize, usize)> = Vec::new();
        let mut color = 0usize;
        while uncolored.iter().any(|&w| w != 0) {
            color += 1;
            let mut avail = uncolored.clone();
            loop {
                let v = match first_bit(&avail) {
                    Some(v) => v,
                    None => break,
                };
                out.push((v, color));
                clear_bit(&mut uncolored, v);
                clear_bit(&mut avail, v);
                for w in 0..words {
                    avail[w] &= !self.g.row(v)[w];
                }
            }
        }
        out
    }

    fn expand(&mut self, cur: &mut Vec<usize>, cand: &[u64]) {
        let order = self.color_sort(cand);
        let mut cand = cand.to_vec();
        for (v, color) in order.into_iter().rev() {
            if cur.len() + color <= self.best.len() {
                return;
            }
            cur.push(v);
            let mut next: Vec<u64> = cand.clone();
            for w in 0..self.g.words {
                next[w] &= self.g.row(v)[w];
            }
            if next.iter().all(|&w| w == 0) {
                if cur.len() > self.best.len() {
                    self.best = cur.clone();
                }
            } else {
                self.expand(cur, &next);
            }
            cur.pop();
            clear_bit(&mut cand, v);
        }
    }
}

fn first_bit(words: &[u64]) -> Option<usize> {
    for (i, &w) in words.iter().enumerate() {
        if w != 0 {
            return Some(i * 64 + w.trailing_zeros() as usize);
        }
    }
    None
}

fn clear_bit(words: &mut [u64], v: usize) {
    words[v / 64] &= !(1 << (v % 64));
}

/// Vertices of a maximum clique (any one of them), ascending.
pub fn max_clique(g: &BitGraph) -> Vec<usize> {
    let mut all = vec![0u64; g.words];
    for v in 0..g.n {
        all[v / 64] |= 1 << (v % 64);
    }
    let mut s = Search { g, best: vec![] };
    let mut cur = Vec::new();
    s.expand(&mut cur, &all);
    let mut best = s.best;
    best.sort_unstable();
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cliques() {
        // triangle plus pendant
        let mut g = BitGraph::new(4);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(0, 2);
        g.add_edge(2, 3);
        assert_eq!(max_clique(&g), vec![0, 1, 2]);
        // empty graph: single vertex
        let g2 = BitGraph::new(3);
        assert_eq!(max_clique(&g2).len(), 1);
        // complete graph K5
        let mut g3 = BitGraph::new(5);
        for a in 0..5 {
            for b in a + 1..5 {
                g3.add_edge(a, b);
            }
        }
        assert_eq!(max_clique(&g3), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn bipartite_bound() {
        // C6 cycle: max clique 2
        let mut g = BitGraph::new(6);
        for i in 0..6 {
            g.add_edge(i, (i + 1) % 6);
        }
        assert_eq!(max_clique(&g).len(), 2);
    }
}
