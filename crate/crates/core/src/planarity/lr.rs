//! Left-right planarity test with embedding extraction.
//!
//! Implements the LR partition algorithm: a first DFS orients the graph
//! and computes lowpoints and nesting depths, a second DFS maintains a
//! stack of conflict pairs of back-edge intervals, and on success a
//! third DFS assembles a rotation system from the computed edge sides.
//!
//! Reference: U. Brandes, "The left-right planarity test" (the same
//! formulation used by several production implementations).
//!
//! Input must be simple (no loops, no parallel edges).

const NONE: usize = usize::MAX;

/// Oriented edge index into `Lr::edges` (tree and back edges).
type E = usize;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct Interval {
    low: E,
    high: E,
}

impl Interval {
    const EMPTY: Interval = Interval {
        low: NONE,
        high: NONE,
    };

    fn is_empty(&self) -> bool {
        self.low == NONE && self.high == NONE
    }
}

#[derive(Clone, Copy, Debug)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

pub struct Lr {
    n: usize,
    /// oriented edges (u, v)
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<E>>,
    height: Vec<usize>,
    parent_edge: Vec<E>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting_depth: Vec<i64>,
    orient_visited: Vec<bool>,
    // testing phase
    stack: Vec<ConflictPair>,
    stack_bottom: Vec<usize>,
    lowpt_edge: Vec<E>,
    refer: Vec<E>,
    side: Vec<i8>,
    ordered_adj: Vec<Vec<E>>,
    roots: Vec<usize>,
}

/// Rotation system produced by the test: for each vertex the cyclic
/// order of its neighbors.
pub struct LrEmbedding {
    pub rotation: Vec<Vec<usize>>,
}

impl Lr {
    pub fn new(n: usize, undirected_edges: &[(usize, usize)]) -> Self {
        let mut lr = Lr {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
            height: vec![NONE; n],
            parent_edge: vec![NONE; n],
            lowpt: Vec::new(),
            lowpt2: Vec::new(),
            nesting_depth: Vec::new(),
            orient_visited: Vec::new(),
            stack: Vec::new(),
            stack_bottom: Vec::new(),
            lowpt_edge: Vec::new(),
            refer: Vec::new(),
            side: Vec::new(),
            ordered_adj: vec![Vec::new(); n],
            roots: Vec::new(),
        };
        // each undirected edge appears as two oriented halves; the DFS
        // keeps the first traversed direction
        for &(u, v) in undirected_edges {
            let e1 = lr.edges.len();
            lr.edges.push((u, v));
            lr.adj[u].push(e1);
            let e2 = lr.edges.len();
            lr.edges.push((v, u));
            lr.adj[v].push(e2);
        }
        let m = lr.edges.len();
        lr.lowpt = vec![NONE; m];
        lr.lowpt2 = vec![NONE; m];
        lr.nesting_depth = vec![0; m];
        lr.orient_visited = vec![false; m];
        lr.stack_bottom = vec![NONE; m];
        lr.lowpt_edge = vec![NONE; m];
        lr.refer = vec![NONE; m];
        lr.side = vec![1; m];
        lr
    }

    fn twin(e: E) -> E {
        e ^ 1
    }

    /// Phase 1: orientation DFS. Computes heights, lowpoints and
    /// nesting depths; keeps in `ordered_adj` only the DFS-oriented
    /// edge set.
    fn orient(&mut self) {
        let mut kept: Vec<E> = Vec::new();
        for root in 0..self.n {
            if self.height[root] != NONE {
                continue;
            }
            self.height[root] = 0;
            self.roots.push(root);
            // stack of (vertex, adjacency index)
            let mut st: Vec<(usize, usize)> = vec![(root, 0)];
            while let Some(&mut (v, ref mut idx)) = st.last_mut() {
                if *idx >= self.adj[v].len() {
                    st.pop();
                    // after finishing v, update parent's lowpoints
                    if let Some(&(_, _)) = st.last() {
                        let e = self.parent_edge[v];
                        if e != NONE {
                            self.finish_edge(e);
                        }
                    }
                    continue;
                }
                let e = self.adj[v][*idx];
                *idx += 1;
                if self.orient_visited[e] || self.orient_visited[Self::twin(e)] {
                    continue;
                }
                self.orient_visited[e] = true;
                kept.push(e);
                let w = self.edges[e].1;
                self.lowpt[e] = self.height[v];
                self.lowpt2[e] = self.height[v];
                if self.height[w] == NONE {
                    // tree edge
                    self.parent_edge[w] = e;
                    self.height[w] = self.height[v] + 1;
                    st.push((w, 0));
                } else {
                    // back edge
                    self.lowpt[e] = self.height[w];
                    self.finish_edge(e);
                }
            }
        }
        for &e in &kept {
            let (u, _) = self.edges[e];
            self.ordered_adj[u].push(e);
        }
        // sort adjacency by nesting depth for the testing DFS
        let nd = &self.nesting_depth;
        for v in 0..self.n {
            self.ordered_adj[v].sort_by_key(|&e| nd[e]);
        }
    }

    /// Compute the nesting depth of a finished edge and fold its
    /// lowpoints into its parent edge.
    fn finish_edge(&mut self, e: E) {
        let (v, _) = self.edges[e];
        // nesting depth: twice the lowpoint, odd if chordal
        self.nesting_depth[e] = 2 * self.lowpt[e] as i64;
        if self.lowpt2[e] < self.height[v] {
            self.nesting_depth[e] += 1;
        }
        let pe = self.parent_edge[v];
        if pe != NONE {
            if self.lowpt[e] < self.lowpt[pe] {
                self.lowpt2[pe] = self.lowpt[pe].min(self.lowpt2[e]);
                self.lowpt[pe] = self.lowpt[e];
            } else if self.lowpt[e] > self.lowpt[pe] {
                self.lowpt2[pe] = self.lowpt2[pe].min(self.lowpt[e]);
            } else {
                self.lowpt2[pe] = self.lowpt2[pe].min(self.lowpt2[e]);
            }
        }
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        if p.left.is_empty() {
            return self.lowpt[p.right.low];
        }
        if p.right.is_empty() {
            return self.lowpt[p.left.low];
        }
        self.lowpt[p.left.low].min(self.lowpt[p.right.low])
    }

    fn conflicting(&self, i: &Interval, b: E) -> bool {
        !i.is_empty() && self.lowpt[i.high] > self.lowpt[b]
    }

    /// Phase 2: testing DFS. Returns false as soon as a left-right
    /// partition is impossible.
    fn test(&mut self) -> bool {
        for r in 0..self.roots.len() {
            let root = self.roots[r];
            if !self.test_dfs(root) {
                return false;
            }
        }
        true
    }

    fn test_dfs(&mut self, root: usize) -> bool {
        // recursion emulated with an explicit stack: (vertex, index)
        let mut st: Vec<(usize, usize)> = vec![(root, 0)];
        while let Some(&(v, idx)) = st.last() {
            if idx < self.ordered_adj[v].len() {
                st.last_mut().unwrap().1 += 1;
                let ei = self.ordered_adj[v][idx];
                self.stack_bottom[ei] = self.stack.len();
                let w = self.edges[ei].1;
                if self.parent_edge[w] == ei {
                    // tree edge: descend; constraints integrated on return
                    st.push((w, 0));
                    continue;
                } else {
                    // back edge
                    self.lowpt_edge[ei] = ei;
                    self.stack.push(ConflictPair {
                        left: Interval::EMPTY,
                        right: Interval { low: ei, high: ei },
                    });
                }
                if !self.integrate(v, ei) {
                    return false;
                }
            } else {
                st.pop();
                let e = self.parent_edge[v];
                if e != NONE {
                    let u = self.edges[e].0;
                    // remove back edges returning to u
                    self.trim_back_edges(u);
                    // side of e is side of a highest return edge
                    if self.lowpt[e] < self.height[u] {
                        if let Some(top) = self.stack.last() {
                            let hl = top.left.high;
                            let hr = top.right.high;
                            if hl != NONE && (hr == NONE || self.lowpt[hl] > self.lowpt[hr]) {
                                self.refer[e] = hl;
                            } else {
                                self.refer[e] = hr;
                            }
                        }
                    }
                    // now integrate e into its parent's constraints
                    if let Some(&(pv, pidx)) = st.last() {
                        debug_assert_eq!(pv, u);
                        let _ = pidx;
                        if !self.integrate(u, e) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Fold the constraints of outgoing edge `ei` of `v` into the
    /// conflict-pair stack (the `add_constraints` step).
    fn integrate(&mut self, v: usize, ei: E) -> bool {
        let pe = self.parent_edge[v];
        if self.lowpt[ei] >= self.height[v] {
            // no return edge below v: nothing to merge
            return true;
        }
        let first = self.ordered_adj[v].first().copied();
        if first == Some(ei) {
            if pe != NONE {
                self.lowpt_edge[pe] = self.lowpt_edge[ei];
            }
            return true;
        }
        if pe == NONE {
            // root vertex with several children: constraints between the
            // children's intervals still apply
        }
        let e = pe;
        let mut p = ConflictPair {
            left: Interval::EMPTY,
            right: Interval::EMPTY,
        };
        // merge return edges of ei into p.right
        loop {
            let mut q = match self.stack.pop() {
                Some(q) => q,
                None => break,
            };
            if !q.left.is_empty() {
                std::mem::swap(&mut q.left, &mut q.right);
            }
            if !q.left.is_empty() {
                return false; // not planar
            }
            debug_assert!(!q.right.is_empty());
            if e != NONE && self.lowpt[q.right.low] > self.lowpt[e] {
                // merge intervals
                if p.right.is_empty() {
                    p.right.high = q.right.high;
                } else {
                    self.refer[p.right.low] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                // align
                let anchor = if e != NONE { self.lowpt_edge[e] } else { NONE };
                if anchor != NONE {
                    self.refer[q.right.low] = anchor;
                }
            }
            if self.stack.len() == self.stack_bottom[ei] {
                break;
            }
        }
        // merge conflicting return edges of previous siblings into p.left
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().unwrap();
            if self.conflicting(&q.right, ei) {
                std::mem::swap(&mut q.left, &mut q.right);
            }
            if self.conflicting(&q.right, ei) {
                return false; // not planar
            }
            // merge interval below lowpt(ei) into p.right
            if p.right.low != NONE {
                self.refer[p.right.low] = q.right.high;
            }
            if q.right.low != NONE {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left.high = q.left.high;
            } else {
                self.refer[p.left.low] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    /// Drop back edges ending at the parent `u` from the stack tops.
    fn trim_back_edges(&mut self, u: usize) {
        // drop entire conflict pairs
        while let Some(top) = self.stack.last() {
            if self.lowest(top) == self.height[u] {
                let p = self.stack.pop().unwrap();
                if p.left.low != NONE {
                    self.side[p.left.low] = -1;
                }
            } else {
                break;
            }
        }
        // trim one more conflict pair
        if let Some(mut p) = self.stack.pop() {
            // trim left interval
            while p.left.high != NONE && self.edges[p.left.high].1 == u {
                p.left.high = self.refer[p.left.high];
            }
            if p.left.high == NONE && p.left.low != NONE {
                self.refer[p.left.low] = p.right.low;
                self.side[p.left.low] = -1;
                p.left.low = NONE;
            }
            // trim right interval
            while p.right.high != NONE && self.edges[p.right.high].1 == u {
                p.right.high = self.refer[p.right.high];
            }
            if p.right.high == NONE && p.right.low != NONE {
                self.refer[p.right.low] = p.left.low;
                self.side[p.right.low] = -1;
                p.right.low = NONE;
            }
            self.stack.push(p);
        }
    }

    fn sign(&mut self, e: E) -> i8 {
        // resolve the side of e through its reference chain
        let mut chain = vec![e];
        while self.refer[*chain.last().unwrap()] != NONE {
            chain.push(self.refer[*chain.last().unwrap()]);
        }
        for i in (0..chain.len() - 1).rev() {
            let c = chain[i];
            self.side[c] *= self.side[self.refer[c]];
            self.refer[c] = NONE;
        }
        self.side[e]
    }

    /// Phase 3: embedding DFS. Only valid after `test` succeeded.
    fn embed(&mut self) -> LrEmbedding {
        // signed nesting depth, then re-sort adjacency
        for e in 0..self.edges.len() {
            if self.orient_visited[e] {
                self.nesting_depth[e] *= self.sign(e) as i64;
            }
        }
        let nd = self.nesting_depth.clone();
        for v in 0..self.n {
            self.ordered_adj[v].sort_by_key(|&e| nd[e]);
        }

        // rotation[v]: cyclic clockwise list of neighbor vertices
        let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for v in 0..self.n {
            for &e in &self.ordered_adj[v] {
                rotation[v].push(self.edges[e].1);
            }
        }
        let mut left_ref: Vec<usize> = (0..self.n).collect();
        let mut right_ref: Vec<usize> = (0..self.n).collect();

        for r in 0..self.roots.len() {
            let root = self.roots[r];
            let mut st: Vec<(usize, usize)> = vec![(root, 0)];
            while let Some(&(v, idx)) = st.last() {
                if idx >= self.ordered_adj[v].len() {
                    st.pop();
                    continue;
                }
                st.last_mut().unwrap().1 += 1;
                let ei = self.ordered_adj[v][idx];
                let w = self.edges[ei].1;
                if self.parent_edge[w] == ei {
                    // tree edge: the parent half-edge becomes the first
                    // entry at w
                    rotation[w].insert(0, v);
                    left_ref[v] = w;
                    right_ref[v] = w;
                    st.push((w, 0));
                } else {
                    // back edge ending at ancestor w
                    if self.side[ei] == 1 {
                        // place just after right_ref[w] in cw order
                        let pos = rotation[w]
                            .iter()
                            .position(|&x| x == right_ref[w])
                            .expect("right reference present");
                        rotation[w].insert(pos + 1, v);
                    } else {
                        let pos = rotation[w]
                            .iter()
                            .position(|&x| x == left_ref[w])
                            .expect("left reference present");
                        rotation[w].insert(pos, v);
                        left_ref[w] = v;
                    }
                }
            }
        }
        LrEmbedding { rotation }
    }

    /// Run the full test; returns a rotation system when planar.
    pub fn run(mut self) -> Option<LrEmbedding> {
        let m = self.edges.len() / 2;
        if self.n >= 3 && m > 3 * self.n - 6 {
            return None;
        }
        self.orient();
        if !self.test() {
            return None;
        }
        Some(self.embed())
    }
}
