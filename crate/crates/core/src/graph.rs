//! Timestamped graph snapshots and the diff between consecutive ones.
//!
//! A snapshot is an immutable weighted graph at one ordinal timestamp.
//! Node labels are interned once per run into dense indices that stay
//! stable across timestamps: a node keeps its index even if it disappears
//! for a while and comes back. The delta between two snapshots carries the
//! added/deleted nodes and edges, weight changes, and the evolving node
//! set that seeds walk generation at t > 1.

use alloc::borrow::ToOwned;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use hashbrown::HashMap;
use thiserror::Error;

/// Dense internal node index. The external string label lives in the
/// [`NodeInterner`] that assigned it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(u32);

impl NodeId {
    pub fn new(raw: u32) -> Self {
        NodeId(raw)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn raw(self) -> u32 {
        self.0
    }
}

/// Bijective label ↔ index map, shared by every snapshot of one run.
#[derive(Debug, Clone, Default)]
pub struct NodeInterner {
    labels: Vec<String>,
    index: HashMap<String, u32>,
}

impl NodeInterner {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns the existing index for `label` or assigns the next one.
    pub fn intern(&mut self, label: &str) -> NodeId {
        if let Some(&i) = self.index.get(label) {
            return NodeId(i);
        }
        let i = self.labels.len() as u32;
        self.labels.push(label.to_owned());
        self.index.insert(label.to_owned(), i);
        NodeId(i)
    }

    pub fn get(&self, label: &str) -> Option<NodeId> {
        self.index.get(label).map(|&i| NodeId(i))
    }

    /// Panics if `id` was never assigned by this interner.
    pub fn label(&self, id: NodeId) -> &str {
        &self.labels[id.index()]
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum GraphError {
    #[error("line {line}: expected `u<TAB>v[<TAB>w]`, got {got:?}")]
    MalformedLine { line: usize, got: String },
    #[error("line {line}: weight must be strictly positive and finite, got {got}")]
    BadWeight { line: usize, got: f64 },
    #[error("line {line}: unparseable timestamp {got:?}")]
    BadTimestamp { line: usize, got: String },
    #[error("empty input")]
    EmptyInput,
    #[error("bucketing must request at least one bucket")]
    ZeroBuckets,
    #[error("snapshots differ in directedness")]
    DirectednessMismatch,
}

/// Accumulates edges (last occurrence wins) and extra isolated nodes, then
/// freezes them into a [`GraphSnapshot`].
#[derive(Debug, Clone)]
pub struct SnapshotBuilder {
    timestamp: usize,
    directed: bool,
    edges: BTreeMap<(u32, u32), f64>,
    nodes: BTreeSet<u32>,
}

impl SnapshotBuilder {
    pub fn new(timestamp: usize, directed: bool) -> Self {
        SnapshotBuilder {
            timestamp,
            directed,
            edges: BTreeMap::new(),
            nodes: BTreeSet::new(),
        }
    }

    pub fn add_node(&mut self, n: NodeId) {
        self.nodes.insert(n.raw());
    }

    /// Inserts or overwrites the edge. Undirected edges are keyed
    /// canonically with the smaller internal index first. The weight must
    /// already be validated (> 0, finite).
    pub fn add_edge(&mut self, u: NodeId, v: NodeId, w: f64) {
        debug_assert!(w > 0.0 && w.is_finite());
        let key = if self.directed || u.raw() <= v.raw() {
            (u.raw(), v.raw())
        } else {
            (v.raw(), u.raw())
        };
        self.nodes.insert(u.raw());
        self.nodes.insert(v.raw());
        self.edges.insert(key, w);
    }

    pub fn remove_edge(&mut self, u: NodeId, v: NodeId) -> bool {
        let key = if self.directed || u.raw() <= v.raw() {
            (u.raw(), v.raw())
        } else {
            (v.raw(), u.raw())
        };
        self.edges.remove(&key).is_some()
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        let key = if self.directed || u.raw() <= v.raw() {
            (u.raw(), v.raw())
        } else {
            (v.raw(), u.raw())
        };
        self.edges.contains_key(&key)
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn build(self) -> GraphSnapshot {
        let bound = self.nodes.iter().next_back().map_or(0, |&m| m as usize + 1);
        let mut adj: Vec<Vec<(NodeId, f64)>> = alloc::vec![Vec::new(); bound];
        for (&(u, v), &w) in &self.edges {
            adj[u as usize].push((NodeId(v), w));
            if !self.directed && u != v {
                adj[v as usize].push((NodeId(u), w));
            }
        }
        for list in &mut adj {
            list.sort_unstable_by_key(|&(n, _)| n);
        }
        let mut present = alloc::vec![false; bound];
        for &n in &self.nodes {
            present[n as usize] = true;
        }
        GraphSnapshot {
            timestamp: self.timestamp,
            directed: self.directed,
            nodes: self.nodes.iter().map(|&n| NodeId(n)).collect(),
            present,
            adj,
            edges: self.edges,
        }
    }
}

/// One immutable graph at one timestamp. Safe to share read-only across
/// threads.
#[derive(Debug, Clone)]
pub struct GraphSnapshot {
    timestamp: usize,
    directed: bool,
    /// Canonical edge map: directed as written, undirected with u ≤ v.
    edges: BTreeMap<(u32, u32), f64>,
    /// All nodes, sorted, including isolated ones.
    nodes: Vec<NodeId>,
    present: Vec<bool>,
    /// Out-adjacency (both directions for undirected), sorted by neighbor.
    adj: Vec<Vec<(NodeId, f64)>>,
}

impl GraphSnapshot {
    pub fn timestamp(&self) -> usize {
        self.timestamp
    }

    pub fn directed(&self) -> bool {
        self.directed
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn nodes(&self) -> &[NodeId] {
        &self.nodes
    }

    pub fn contains(&self, n: NodeId) -> bool {
        self.present.get(n.index()).copied().unwrap_or(false)
    }

    /// One past the highest internal index present; adjacency and
    /// membership vectors are sized to this.
    pub fn index_bound(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, n: NodeId) -> &[(NodeId, f64)] {
        self.adj.get(n.index()).map_or(&[], |v| v.as_slice())
    }

    pub fn degree(&self, n: NodeId) -> usize {
        self.neighbors(n).len()
    }

    /// Adjacency test as the walker sees it: for directed graphs u → v.
    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        self.neighbors(u).binary_search_by_key(&v, |&(n, _)| n).is_ok()
    }

    /// Weight under the canonical edge key, `None` if absent.
    pub fn edge_weight(&self, u: NodeId, v: NodeId) -> Option<f64> {
        let key = if self.directed || u.raw() <= v.raw() {
            (u.raw(), v.raw())
        } else {
            (v.raw(), u.raw())
        };
        self.edges.get(&key).copied()
    }

    /// Canonical edges in sorted order.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId, f64)> + '_ {
        self.edges.iter().map(|(&(u, v), &w)| (NodeId(u), NodeId(v), w))
    }
}

/// Parses one edge-list snapshot: `u<TAB>v[<TAB>w]` per line, `#` comments
/// and blank lines skipped, duplicate edges resolved last-wins.
pub fn parse_edge_list(
    source: &str,
    timestamp: usize,
    directed: bool,
    interner: &mut NodeInterner,
) -> Result<GraphSnapshot, GraphError> {
    let mut builder = SnapshotBuilder::new(timestamp, directed);
    let mut saw_edge = false;
    for (lineno, raw) in source.lines().enumerate() {
        let line = raw.trim_end_matches('\r');
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        let (u, v, w) = match fields.as_slice() {
            [u, v] if !u.is_empty() && !v.is_empty() => (*u, *v, 1.0),
            [u, v, w_str] if !u.is_empty() && !v.is_empty() => {
                let w: f64 = w_str.parse().map_err(|_| GraphError::MalformedLine {
                    line: lineno + 1,
                    got: line.to_owned(),
                })?;
                (*u, *v, w)
            }
            _ => {
                return Err(GraphError::MalformedLine {
                    line: lineno + 1,
                    got: line.to_owned(),
                })
            }
        };
        if !(w > 0.0 && w.is_finite()) {
            return Err(GraphError::BadWeight { line: lineno + 1, got: w });
        }
        let ui = interner.intern(u);
        let vi = interner.intern(v);
        builder.add_edge(ui, vi, w);
        saw_edge = true;
    }
    if !saw_edge {
        return Err(GraphError::EmptyInput);
    }
    Ok(builder.build())
}

/// One timestamped edge observation from an event stream.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeEvent {
    pub u: String,
    pub v: String,
    pub w: f64,
    pub time: i64,
}

/// Parses a `u<TAB>v<TAB>w<TAB>epoch_seconds` event file.
pub fn parse_event_list(source: &str) -> Result<Vec<EdgeEvent>, GraphError> {
    let mut events = Vec::new();
    for (lineno, raw) in source.lines().enumerate() {
        let line = raw.trim_end_matches('\r');
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        let [u, v, w_str, t_str] = fields.as_slice() else {
            return Err(GraphError::MalformedLine {
                line: lineno + 1,
                got: line.to_owned(),
            });
        };
        if u.is_empty() || v.is_empty() {
            return Err(GraphError::MalformedLine {
                line: lineno + 1,
                got: line.to_owned(),
            });
        }
        let w: f64 = w_str.parse().map_err(|_| GraphError::MalformedLine {
            line: lineno + 1,
            got: line.to_owned(),
        })?;
        if !(w > 0.0 && w.is_finite()) {
            return Err(GraphError::BadWeight { line: lineno + 1, got: w });
        }
        let time: i64 = t_str.parse().map_err(|_| GraphError::BadTimestamp {
            line: lineno + 1,
            got: (*t_str).to_owned(),
        })?;
        events.push(EdgeEvent { u: (*u).to_owned(), v: (*v).to_owned(), w, time });
    }
    if events.is_empty() {
        return Err(GraphError::EmptyInput);
    }
    Ok(events)
}

/// How to cut the event stream into windows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BucketSpec {
    /// Split the observed time range into this many equal windows.
    Count(usize),
    /// Fixed window length in the event time unit (seconds for epoch input).
    Duration(i64),
}

/// Whether snapshot t holds only window t or the union of windows 1..t.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Accumulation {
    PerWindow,
    Cumulative,
}

/// Buckets timestamped events into a snapshot sequence. Later events for
/// the same edge override earlier ones; empty windows yield empty
/// snapshots.
pub fn bucket_events(
    events: &[EdgeEvent],
    spec: BucketSpec,
    accumulation: Accumulation,
    directed: bool,
    interner: &mut NodeInterner,
) -> Result<Vec<GraphSnapshot>, GraphError> {
    if events.is_empty() {
        return Err(GraphError::EmptyInput);
    }
    let mut order: Vec<&EdgeEvent> = events.iter().collect();
    order.sort_by_key(|e| e.time);

    let t_min = order[0].time;
    let t_max = order[order.len() - 1].time;
    let span = (t_max - t_min) as u128 + 1;
    let buckets = match spec {
        BucketSpec::Count(0) | BucketSpec::Duration(..=0) => return Err(GraphError::ZeroBuckets),
        BucketSpec::Count(k) => k,
        BucketSpec::Duration(d) => ((t_max - t_min) / d) as usize + 1,
    };
    let bucket_of = |time: i64| -> usize {
        match spec {
            BucketSpec::Count(k) => {
                let idx = ((time - t_min) as u128 * k as u128 / span) as usize;
                idx.min(k - 1)
            }
            BucketSpec::Duration(d) => ((time - t_min) / d) as usize,
        }
    };

    let mut snapshots = Vec::with_capacity(buckets);
    let mut cursor = 0;
    let mut carry = SnapshotBuilder::new(0, directed);
    for t in 1..=buckets {
        let mut builder = match accumulation {
            Accumulation::PerWindow => SnapshotBuilder::new(t, directed),
            Accumulation::Cumulative => {
                let mut b = carry.clone();
                b.timestamp = t;
                b
            }
        };
        while cursor < order.len() && bucket_of(order[cursor].time) == t - 1 {
            let ev = order[cursor];
            let u = interner.intern(&ev.u);
            let v = interner.intern(&ev.v);
            builder.add_edge(u, v, ev.w);
            cursor += 1;
        }
        if accumulation == Accumulation::Cumulative {
            carry = builder.clone();
        }
        snapshots.push(builder.build());
    }
    debug_assert_eq!(cursor, order.len());
    Ok(snapshots)
}

/// Diff between two consecutive snapshots.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct SnapshotDelta {
    pub v_add: Vec<NodeId>,
    pub v_del: Vec<NodeId>,
    /// Edges present only in the newer snapshot, with their new weight.
    pub e_add: Vec<(NodeId, NodeId, f64)>,
    /// Edges present only in the older snapshot, with their old weight.
    pub e_del: Vec<(NodeId, NodeId, f64)>,
    /// Edges present in both with differing weight: (u, v, old, new).
    pub e_change: Vec<(NodeId, NodeId, f64, f64)>,
    /// The evolving node set: added nodes plus current nodes incident to an
    /// added/deleted (and, by default, weight-changed) edge. Always a
    /// subset of the newer snapshot's nodes, sorted.
    pub evolving: Vec<NodeId>,
}

impl SnapshotDelta {
    pub fn is_empty(&self) -> bool {
        self.v_add.is_empty()
            && self.v_del.is_empty()
            && self.e_add.is_empty()
            && self.e_del.is_empty()
            && self.e_change.is_empty()
    }

    /// Endpoints of every added, deleted, or weight-changed edge, sorted
    /// and deduplicated. Weight changes always count here because cached
    /// transition tables bake weights in.
    pub fn touched_nodes(&self) -> Vec<NodeId> {
        let mut out: Vec<NodeId> = self
            .e_add
            .iter()
            .chain(self.e_del.iter())
            .flat_map(|&(u, v, _)| [u, v])
            .chain(self.e_change.iter().flat_map(|&(u, v, _, _)| [u, v]))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

fn sorted_difference(a: &[NodeId], b: &[NodeId]) -> Vec<NodeId> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() {
        if j == b.len() || a[i] < b[j] {
            out.push(a[i]);
            i += 1;
        } else if a[i] == b[j] {
            i += 1;
            j += 1;
        } else {
            j += 1;
        }
    }
    out
}

/// Computes the delta from `prev` to `cur`.
///
/// `include_weight_changes` controls whether endpoints of weight-changed
/// edges join the evolving set (default on in the pipeline: weight changes
/// alter transition probabilities, so those neighbourhoods are stale).
pub fn compute_delta(
    prev: &GraphSnapshot,
    cur: &GraphSnapshot,
    include_weight_changes: bool,
) -> Result<SnapshotDelta, GraphError> {
    if prev.directed != cur.directed {
        return Err(GraphError::DirectednessMismatch);
    }

    let v_add = sorted_difference(&cur.nodes, &prev.nodes);
    let v_del = sorted_difference(&prev.nodes, &cur.nodes);

    let mut e_add = Vec::new();
    let mut e_del = Vec::new();
    let mut e_change = Vec::new();
    let mut pi = prev.edges.iter().peekable();
    let mut ci = cur.edges.iter().peekable();
    loop {
        match (pi.peek(), ci.peek()) {
            (Some(&(&pk, &pw)), Some(&(&ck, &cw))) => {
                if pk < ck {
                    e_del.push((NodeId(pk.0), NodeId(pk.1), pw));
                    pi.next();
                } else if pk > ck {
                    e_add.push((NodeId(ck.0), NodeId(ck.1), cw));
                    ci.next();
                } else {
                    if pw != cw {
                        e_change.push((NodeId(pk.0), NodeId(pk.1), pw, cw));
                    }
                    pi.next();
                    ci.next();
                }
            }
            (Some(&(&pk, &pw)), None) => {
                e_del.push((NodeId(pk.0), NodeId(pk.1), pw));
                pi.next();
            }
            (None, Some(&(&ck, &cw))) => {
                e_add.push((NodeId(ck.0), NodeId(ck.1), cw));
                ci.next();
            }
            (None, None) => break,
        }
    }

    let mut evolving: Vec<NodeId> = v_add.clone();
    evolving.extend(e_add.iter().flat_map(|&(u, v, _)| [u, v]));
    evolving.extend(
        e_del
            .iter()
            .flat_map(|&(u, v, _)| [u, v])
            .filter(|&n| cur.contains(n)),
    );
    if include_weight_changes {
        evolving.extend(e_change.iter().flat_map(|&(u, v, _, _)| [u, v]));
    }
    evolving.sort_unstable();
    evolving.dedup();

    Ok(SnapshotDelta { v_add, v_del, e_add, e_del, e_change, evolving })
}

/// Replays a delta on top of `prev`, producing the snapshot it was
/// computed against.
pub fn apply_delta(prev: &GraphSnapshot, delta: &SnapshotDelta, timestamp: usize) -> GraphSnapshot {
    let mut builder = SnapshotBuilder::new(timestamp, prev.directed);
    let deleted: BTreeSet<u32> = delta.v_del.iter().map(|n| n.raw()).collect();
    for &n in &prev.nodes {
        if !deleted.contains(&n.raw()) {
            builder.add_node(n);
        }
    }
    for &n in &delta.v_add {
        builder.add_node(n);
    }
    for (u, v, w) in prev.edges() {
        builder.add_edge(u, v, w);
    }
    for &(u, v, _) in &delta.e_del {
        builder.remove_edge(u, v);
    }
    for &(u, v, w) in &delta.e_add {
        builder.add_edge(u, v, w);
    }
    for &(u, v, _, new_w) in &delta.e_change {
        builder.add_edge(u, v, new_w);
    }
    builder.build()
}
