//! Second-order (p,q)-biased random walks with a reusable transition cache.
//!
//! The next step of a walk depends on the previous node: stepping back is
//! weighted 1/p, staying at distance one from the previous node is weighted
//! 1, and moving outward is weighted 1/q, all scaled by the edge weight.
//! Each visited (prev, cur) state gets an O(1) alias sampling table, built
//! lazily and kept in a cache that survives across timestamps; a snapshot
//! delta invalidates exactly the entries whose distribution could have
//! changed. Walk starts are restricted to the evolving node set at t > 1,
//! but the walks themselves roam the whole current graph.

use alloc::vec::Vec;

use hashbrown::HashMap;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{GraphSnapshot, NodeId, SnapshotDelta};
use crate::mix::mix64;

/// Walk generation parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WalkParams {
    /// Return parameter: likelihood of immediately revisiting the previous
    /// node scales with 1/p.
    pub p: f64,
    /// In-out parameter: likelihood of leaving the previous node's
    /// neighbourhood scales with 1/q.
    pub q: f64,
    /// Walks started per start node.
    pub walks_per_node: usize,
    /// Maximum walk length counted in nodes.
    pub walk_length: usize,
    pub seed: u64,
}

impl Default for WalkParams {
    fn default() -> Self {
        WalkParams { p: 0.5, q: 1.0, walks_per_node: 10, walk_length: 80, seed: 0 }
    }
}

impl WalkParams {
    pub fn is_valid(&self) -> bool {
        self.p > 0.0
            && self.p.is_finite()
            && self.q > 0.0
            && self.q.is_finite()
            && self.walks_per_node >= 1
            && self.walk_length >= 1
    }
}

/// A bag of walks from one generation pass, ordered by start-node index
/// then walk index.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct WalkCorpus {
    walks: Vec<Vec<NodeId>>,
}

impl WalkCorpus {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_walks(walks: Vec<Vec<NodeId>>) -> Self {
        WalkCorpus { walks }
    }

    pub fn walks(&self) -> &[Vec<NodeId>] {
        &self.walks
    }

    pub fn len(&self) -> usize {
        self.walks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.walks.is_empty()
    }

    pub fn token_count(&self) -> usize {
        self.walks.iter().map(|w| w.len()).sum()
    }

    pub fn push(&mut self, walk: Vec<NodeId>) {
        self.walks.push(walk);
    }
}

/// Walker/Vose alias table: O(n) build, two random draws per sample.
#[derive(Debug, Clone)]
pub struct AliasTable {
    prob: Vec<f64>,
    alias: Vec<u32>,
}

impl AliasTable {
    /// `weights` must be non-empty with a strictly positive, finite sum.
    pub fn new(weights: &[f64]) -> Self {
        let n = weights.len();
        assert!(n > 0, "alias table over empty support");
        let sum: f64 = weights.iter().sum();
        debug_assert!(sum > 0.0 && sum.is_finite());
        let mut scaled: Vec<f64> = weights.iter().map(|&w| w * n as f64 / sum).collect();
        let mut prob = alloc::vec![0.0; n];
        let mut alias = alloc::vec![0u32; n];
        let mut small: Vec<usize> = Vec::new();
        let mut large: Vec<usize> = Vec::new();
        for (i, &s) in scaled.iter().enumerate() {
            if s < 1.0 {
                small.push(i);
            } else {
                large.push(i);
            }
        }
        while let (Some(&s), Some(&l)) = (small.last(), large.last()) {
            small.pop();
            prob[s] = scaled[s];
            alias[s] = l as u32;
            scaled[l] += scaled[s] - 1.0;
            if scaled[l] < 1.0 {
                large.pop();
                small.push(l);
            }
        }
        // Leftovers on either stack are 1.0 up to rounding.
        for &i in small.iter().chain(large.iter()) {
            prob[i] = 1.0;
        }
        AliasTable { prob, alias }
    }

    pub fn len(&self) -> usize {
        self.prob.len()
    }

    pub fn is_empty(&self) -> bool {
        self.prob.is_empty()
    }

    /// Samples an outcome index. Consumes no randomness when only one
    /// outcome exists.
    pub fn sample<R: Rng>(&self, rng: &mut R) -> usize {
        let n = self.prob.len();
        if n == 1 {
            return 0;
        }
        let slot = rng.gen_range(0..n);
        if rng.gen::<f64>() < self.prob[slot] {
            slot
        } else {
            self.alias[slot] as usize
        }
    }

    /// The exact distribution this table samples from.
    pub fn outcome_probabilities(&self) -> Vec<f64> {
        let n = self.prob.len();
        let mut out = alloc::vec![0.0; n];
        for i in 0..n {
            out[i] += self.prob[i] / n as f64;
            if self.prob[i] < 1.0 {
                out[self.alias[i] as usize] += (1.0 - self.prob[i]) / n as f64;
            }
        }
        out
    }
}

/// Unnormalized transition weight α for stepping `cur → next` given the
/// walk arrived from `prev` (`None` on the first step, which is biased by
/// edge weight only).
///
/// Requires `(cur, next)` to be an edge and, when present, `prev` adjacent
/// to `cur`; violating that is a programming error.
pub fn transition_weight(
    prev: Option<NodeId>,
    cur: NodeId,
    next: NodeId,
    params: &WalkParams,
    g: &GraphSnapshot,
) -> f64 {
    let nbrs = g.neighbors(cur);
    let w = match nbrs.binary_search_by_key(&next, |&(n, _)| n) {
        Ok(i) => nbrs[i].1,
        Err(_) => {
            debug_assert!(false, "transition_weight: (cur, next) is not an edge");
            return 0.0;
        }
    };
    match prev {
        None => w,
        Some(prev) => {
            debug_assert!(g.has_edge(cur, prev) || g.has_edge(prev, cur));
            if next == prev {
                w / params.p
            } else if g.has_edge(prev, next) {
                w
            } else {
                w / params.q
            }
        }
    }
}

fn build_first_table(g: &GraphSnapshot, cur: NodeId) -> AliasTable {
    let weights: Vec<f64> = g.neighbors(cur).iter().map(|&(_, w)| w).collect();
    AliasTable::new(&weights)
}

fn build_second_table(
    g: &GraphSnapshot,
    prev: NodeId,
    cur: NodeId,
    params: &WalkParams,
) -> AliasTable {
    let weights: Vec<f64> = g
        .neighbors(cur)
        .iter()
        .map(|&(next, w)| {
            if next == prev {
                w / params.p
            } else if g.has_edge(prev, next) {
                w
            } else {
                w / params.q
            }
        })
        .collect();
    AliasTable::new(&weights)
}

/// Lazily built alias tables per walk state, reusable across timestamps.
///
/// Sampled outcome indices refer to positions in the snapshot's neighbor
/// list for `cur`; entries stay valid across snapshots as long as the
/// neighbourhoods they were built from are untouched, which
/// [`TransitionCache::invalidate`] enforces.
#[derive(Debug, Default)]
pub struct TransitionCache {
    first: HashMap<u32, AliasTable>,
    second: HashMap<(u32, u32), AliasTable>,
}

impl TransitionCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.first.len() + self.second.len()
    }

    pub fn is_empty(&self) -> bool {
        self.first.is_empty() && self.second.is_empty()
    }

    pub fn clear(&mut self) {
        self.first.clear();
        self.second.clear();
    }

    /// Samples the first step out of `cur`; `None` at a dead end.
    pub fn sample_first<R: Rng>(
        &mut self,
        g: &GraphSnapshot,
        cur: NodeId,
        rng: &mut R,
    ) -> Option<NodeId> {
        let nbrs = g.neighbors(cur);
        if nbrs.is_empty() {
            return None;
        }
        let table = self
            .first
            .entry(cur.raw())
            .or_insert_with(|| build_first_table(g, cur));
        Some(nbrs[table.sample(rng)].0)
    }

    /// Samples the next step of a walk sitting at `cur` having arrived from
    /// `prev`; `None` at a dead end.
    pub fn sample_second<R: Rng>(
        &mut self,
        g: &GraphSnapshot,
        prev: NodeId,
        cur: NodeId,
        params: &WalkParams,
        rng: &mut R,
    ) -> Option<NodeId> {
        let nbrs = g.neighbors(cur);
        if nbrs.is_empty() {
            return None;
        }
        let table = self
            .second
            .entry((prev.raw(), cur.raw()))
            .or_insert_with(|| build_second_table(g, prev, cur, params));
        Some(nbrs[table.sample(rng)].0)
    }

    /// Drops every entry whose distribution may differ on the snapshot the
    /// delta leads to: entries whose `cur` was touched by an edge change,
    /// or whose `cur` has a touched neighbor. Untouched entries persist.
    pub fn invalidate(&mut self, g: &GraphSnapshot, delta: &SnapshotDelta) {
        let touched_list = delta.touched_nodes();
        if touched_list.is_empty() {
            return;
        }
        let bound = touched_list
            .last()
            .map(|n| n.index() + 1)
            .unwrap_or(0)
            .max(g.index_bound());
        let mut touched = alloc::vec![false; bound];
        for n in &touched_list {
            touched[n.index()] = true;
        }
        let is_touched = |raw: u32| touched.get(raw as usize).copied().unwrap_or(false);
        let stale = |cur: u32| {
            is_touched(cur)
                || g.neighbors(NodeId::new(cur)).iter().any(|&(n, _)| is_touched(n.raw()))
        };
        self.first.retain(|&cur, _| !stale(cur));
        self.second.retain(|&(_, cur), _| !stale(cur));
    }
}

/// Seed for one walk, independent of scheduling: derived only from the run
/// seed, the start node, and the walk index.
pub fn walk_seed(seed: u64, start: NodeId, walk_index: usize) -> u64 {
    mix64(seed, &[start.raw() as u64, walk_index as u64])
}

/// Generates one walk from `start`, truncating at dead ends.
pub fn walk_from<R: Rng>(
    g: &GraphSnapshot,
    start: NodeId,
    params: &WalkParams,
    cache: &mut TransitionCache,
    rng: &mut R,
) -> Vec<NodeId> {
    let mut walk = Vec::with_capacity(params.walk_length);
    walk.push(start);
    if params.walk_length == 1 {
        return walk;
    }
    let Some(next) = cache.sample_first(g, start, rng) else {
        return walk;
    };
    walk.push(next);
    while walk.len() < params.walk_length {
        let cur = walk[walk.len() - 1];
        let prev = walk[walk.len() - 2];
        match cache.sample_second(g, prev, cur, params, rng) {
            Some(next) => walk.push(next),
            None => break,
        }
    }
    walk
}

/// Generates exactly `walks_per_node` walks from every node in `starts`
/// (deduplicated, sorted by internal index). Nodes without neighbors yield
/// singleton walks so they still enter the vocabulary.
pub fn generate_walks(
    g: &GraphSnapshot,
    starts: &[NodeId],
    params: &WalkParams,
    cache: &mut TransitionCache,
) -> WalkCorpus {
    debug_assert!(params.is_valid());
    let mut order: Vec<NodeId> = starts.to_vec();
    order.sort_unstable();
    order.dedup();
    debug_assert!(order.iter().all(|&n| g.contains(n)), "walk start outside snapshot");

    let mut corpus = WalkCorpus::new();
    for &start in &order {
        for walk_index in 0..params.walks_per_node {
            let mut rng = ChaCha8Rng::seed_from_u64(walk_seed(params.seed, start, walk_index));
            corpus.push(walk_from(g, start, params, &mut rng));
        }
    }
    corpus
}

/// Walks from every node of the snapshot: the t = 1 cold start and the
/// all-nodes ablation mode.
pub fn full_walks(
    g: &GraphSnapshot,
    params: &WalkParams,
    cache: &mut TransitionCache,
) -> WalkCorpus {
    generate_walks(g, g.nodes(), params, cache)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{compute_delta, NodeId, SnapshotBuilder};
    use alloc::vec;

    fn node(i: u32) -> NodeId {
        NodeId::new(i)
    }

    fn undirected(edges: &[(u32, u32, f64)]) -> GraphSnapshot {
        let mut b = SnapshotBuilder::new(1, false);
        for &(u, v, w) in edges {
            b.add_edge(node(u), node(v), w);
        }
        b.build()
    }

    fn params(p: f64, q: f64, gamma: usize, l: usize, seed: u64) -> WalkParams {
        WalkParams { p, q, walks_per_node: gamma, walk_length: l, seed }
    }

    #[test]
    fn unbiased_reduction_p_q_one() {
        let g = undirected(&[(0, 1, 2.0), (1, 2, 3.0), (0, 2, 1.0)]);
        let prm = params(1.0, 1.0, 1, 10, 0);
        for (prev, cur, next, w) in [(0, 1, 0, 2.0), (0, 1, 2, 3.0), (2, 0, 1, 2.0)] {
            assert_eq!(
                transition_weight(Some(node(prev)), node(cur), node(next), &prm, &g),
                w
            );
        }
        assert_eq!(transition_weight(None, node(1), node(2), &prm, &g), 3.0);
    }

    #[test]
    fn triangle_bias() {
        // Triangle a-b-c, unit weights, walk arrived a → b.
        let g = undirected(&[(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)]);
        let prm = params(4.0, 2.0, 1, 10, 0);
        let back = transition_weight(Some(node(0)), node(1), node(0), &prm, &g);
        let side = transition_weight(Some(node(0)), node(1), node(2), &prm, &g);
        assert_eq!(back, 1.0 / 4.0); // 1/p
        assert_eq!(side, 1.0); // dist(a, c) == 1
    }

    #[test]
    fn path_bias() {
        // Path a-b-c without the closing edge: c is at distance 2 from a.
        let g = undirected(&[(0, 1, 1.0), (1, 2, 1.0)]);
        let prm = params(4.0, 2.0, 1, 10, 0);
        let back = transition_weight(Some(node(0)), node(1), node(0), &prm, &g);
        let out = transition_weight(Some(node(0)), node(1), node(2), &prm, &g);
        assert_eq!(back, 1.0 / 4.0); // 1/p
        assert_eq!(out, 1.0 / 2.0); // 1/q
    }

    #[test]
    fn alias_table_matches_weights() {
        let weights = [3.0, 1.0, 0.5, 10.0, 2.25];
        let table = AliasTable::new(&weights);
        let sum: f64 = weights.iter().sum();
        let probs = table.outcome_probabilities();
        assert!((probs.iter().sum::<f64>() - 1.0).abs() < 1e-9);
        for (i, &w) in weights.iter().enumerate() {
            assert!((probs[i] - w / sum).abs() < 1e-12, "outcome {i}");
        }
    }

    #[test]
    fn alias_sampling_tracks_distribution() {
        let weights = [1.0, 2.0, 7.0];
        let table = AliasTable::new(&weights);
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        let mut counts = [0usize; 3];
        let draws = 100_000;
        for _ in 0..draws {
            counts[table.sample(&mut rng)] += 1;
        }
        let sum: f64 = weights.iter().sum();
        let tv: f64 = counts
            .iter()
            .zip(weights.iter())
            .map(|(&c, &w)| (c as f64 / draws as f64 - w / sum).abs())
            .sum::<f64>()
            / 2.0;
        assert!(tv < 0.01, "tv = {tv}");
    }

    #[test]
    fn empty_starts_empty_corpus() {
        let g = undirected(&[(0, 1, 1.0)]);
        let mut cache = TransitionCache::new();
        let corpus = generate_walks(&g, &[], &params(1.0, 1.0, 3, 5, 1), &mut cache);
        assert!(corpus.is_empty());
    }

    #[test]
    fn isolated_node_singleton_walks() {
        let mut b = SnapshotBuilder::new(1, false);
        b.add_node(node(7));
        let g = b.build();
        let mut cache = TransitionCache::new();
        let corpus = generate_walks(&g, &[node(7)], &params(1.0, 1.0, 3, 5, 1), &mut cache);
        assert_eq!(corpus.len(), 3);
        for w in corpus.walks() {
            assert_eq!(w.as_slice(), &[node(7)]);
        }
    }

    #[test]
    fn two_cycle_alternates() {
        let g = undirected(&[(0, 1, 1.0)]);
        let mut cache = TransitionCache::new();
        let corpus = generate_walks(&g, &[node(0)], &params(1.0, 1.0, 1, 4, 9), &mut cache);
        assert_eq!(corpus.walks()[0], vec![node(0), node(1), node(0), node(1)]);
    }

    #[test]
    fn directed_dead_end_truncates() {
        let mut b = SnapshotBuilder::new(1, true);
        b.add_edge(node(0), node(1), 1.0);
        b.add_edge(node(1), node(2), 1.0);
        let g = b.build();
        let mut cache = TransitionCache::new();
        let corpus = generate_walks(&g, &[node(0)], &params(1.0, 1.0, 1, 6, 3), &mut cache);
        assert_eq!(corpus.walks()[0], vec![node(0), node(1), node(2)]);
    }

    #[test]
    fn full_walk_count_and_determinism() {
        let g = undirected(&[(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0), (3, 0, 1.0)]);
        let prm = params(0.5, 2.0, 4, 7, 42);
        let mut c1 = TransitionCache::new();
        let mut c2 = TransitionCache::new();
        let a = full_walks(&g, &prm, &mut c1);
        let b = full_walks(&g, &prm, &mut c2);
        assert_eq!(a.len(), 4 * 4);
        assert_eq!(a, b);
        // Duplicate starts collapse to the node set.
        let mut c3 = TransitionCache::new();
        let dup = generate_walks(&g, &[node(1), node(1), node(0)], &prm, &mut c3);
        assert_eq!(dup.len(), 2 * 4);
        assert_eq!(dup.walks()[0][0], node(0));
    }

    #[test]
    fn weighted_star_first_step_frequencies() {
        let g = undirected(&[(0, 1, 1.0), (0, 2, 2.0), (0, 3, 3.0), (0, 4, 4.0)]);
        let prm = params(1.0, 1.0, 40_000, 2, 5);
        let mut cache = TransitionCache::new();
        let corpus = generate_walks(&g, &[node(0)], &prm, &mut cache);
        let mut counts = [0usize; 5];
        for w in corpus.walks() {
            counts[w[1].index()] += 1;
        }
        let total = corpus.len() as f64;
        let tv: f64 = (1..=4)
            .map(|i| (counts[i] as f64 / total - i as f64 / 10.0).abs())
            .sum::<f64>()
            / 2.0;
        assert!(tv < 0.01, "tv = {tv}");
    }

    #[test]
    fn second_order_distribution_all_grid_cells() {
        let g = undirected(&[
            (0, 1, 1.0),
            (1, 2, 2.0),
            (1, 3, 0.5),
            (2, 3, 1.5),
            (0, 3, 1.0),
            (1, 4, 1.0),
        ]);
        let (prev, cur) = (node(0), node(1));
        let grid = [0.5, 1.0, 2.0, 4.0];
        for (pi, &p) in grid.iter().enumerate() {
            for (qi, &q) in grid.iter().enumerate() {
                let prm = params(p, q, 1, 2, 0);
                let nbrs = g.neighbors(cur);
                let alphas: Vec<f64> = nbrs
                    .iter()
                    .map(|&(next, _)| transition_weight(Some(prev), cur, next, &prm, &g))
                    .collect();
                let sum: f64 = alphas.iter().sum();
                let mut cache = TransitionCache::new();
                let mut rng = ChaCha8Rng::seed_from_u64((pi * 4 + qi) as u64);
                let draws = 100_000;
                let mut counts = alloc::vec![0usize; nbrs.len()];
                for _ in 0..draws {
                    let next = cache.sample_second(&g, prev, cur, &prm, &mut rng).unwrap();
                    let pos = nbrs.iter().position(|&(n, _)| n == next).unwrap();
                    counts[pos] += 1;
                }
                let tv: f64 = counts
                    .iter()
                    .zip(alphas.iter())
                    .map(|(&c, &a)| (c as f64 / draws as f64 - a / sum).abs())
                    .sum::<f64>()
                    / 2.0;
                assert!(tv < 0.01, "p={p} q={q} tv={tv}");
            }
        }
    }

    #[test]
    fn invalidate_empty_delta_keeps_cache() {
        let g = undirected(&[(0, 1, 1.0), (1, 2, 1.0)]);
        let mut cache = TransitionCache::new();
        full_walks(&g, &params(1.0, 1.0, 2, 5, 1), &mut cache);
        let before = cache.len();
        assert!(before > 0);
        let delta = compute_delta(&g, &g, true).unwrap();
        cache.invalidate(&g, &delta);
        assert_eq!(cache.len(), before);
    }

    #[test]
    fn invalidate_follows_touch_rule() {
        // Path 0-1-2-3 plus far pair 4-5; then edge (1,2) is removed.
        let g1 = undirected(&[(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0), (4, 5, 1.0)]);
        let g2 = undirected(&[(0, 1, 1.0), (2, 3, 1.0), (4, 5, 1.0)]);
        let mut cache = TransitionCache::new();
        full_walks(&g1, &params(1.0, 1.0, 2, 6, 1), &mut cache);
        assert!(cache.second.contains_key(&(0, 1)));
        assert!(cache.second.contains_key(&(5, 4)));
        let delta = compute_delta(&g1, &g2, true).unwrap();
        cache.invalidate(&g2, &delta);
        // Touched nodes are 1 and 2: every entry whose cur is 1 or 2, or
        // whose cur neighbours 1 or 2, must be gone.
        for (&(prev, cur), _) in &cache.second {
            assert!(cur != 1 && cur != 2, "({prev},{cur}) should be invalidated");
            assert!(
                !g2.neighbors(node(cur)).iter().any(|&(n, _)| n == node(1) || n == node(2)),
                "({prev},{cur}) has a touched neighbor"
            );
        }
        // The far pair is untouched and must persist.
        assert!(cache.second.contains_key(&(5, 4)));
        assert!(cache.first.contains_key(&4));
    }

    #[test]
    fn invalidate_everything_on_full_churn() {
        let g1 = undirected(&[(0, 1, 1.0), (1, 2, 1.0), (2, 0, 1.0)]);
        let g2 = undirected(&[(0, 2, 3.0), (1, 2, 2.0), (0, 1, 2.0)]);
        let mut cache = TransitionCache::new();
        full_walks(&g1, &params(1.0, 1.0, 2, 6, 1), &mut cache);
        assert!(!cache.is_empty());
        let delta = compute_delta(&g1, &g2, true).unwrap();
        cache.invalidate(&g2, &delta);
        assert!(cache.is_empty());
    }

    #[test]
    fn cache_reuse_is_transparent() {
        // Corpus on g2 must be identical whether the cache is fresh or
        // carried over from g1 and invalidated.
        let g1 = undirected(&[(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0), (3, 0, 1.0), (4, 5, 1.0)]);
        let g2 = undirected(&[(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0), (3, 1, 2.0), (4, 5, 1.0)]);
        let prm = params(0.5, 2.0, 3, 8, 77);

        let mut carried = TransitionCache::new();
        full_walks(&g1, &prm, &mut carried);
        let delta = compute_delta(&g1, &g2, true).unwrap();
        carried.invalidate(&g2, &delta);
        let with_reuse = full_walks(&g2, &prm, &mut carried);

        let mut fresh = TransitionCache::new();
        let without_reuse = full_walks(&g2, &prm, &mut fresh);

        assert_eq!(with_reuse, without_reuse);
    }

    #[test]
    fn evolving_corpus_starts_in_delta() {
        let g1 = undirected(&[(0, 1, 1.0), (1, 2, 1.0), (3, 4, 1.0)]);
        let g2 = undirected(&[(0, 1, 1.0), (1, 2, 1.0), (3, 4, 1.0), (2, 3, 1.0)]);
        let delta = compute_delta(&g1, &g2, true).unwrap();
        let mut cache = TransitionCache::new();
        let corpus = generate_walks(&g2, &delta.evolving, &params(1.0, 1.0, 2, 5, 3), &mut cache);
        assert_eq!(corpus.len(), delta.evolving.len() * 2);
        for w in corpus.walks() {
            assert!(delta.evolving.contains(&w[0]));
        }
    }
}
