use std::collections::VecDeque;

use crate::words::Word;

use super::BudgetExceeded;

const NONE: u32 = u32::MAX;

/// Partial Cayley graph under construction.
///
/// Every generator acts as an involution, so an edge `v --g-- u` is stored in
/// both rows. Vertices are numbered in creation order and never reused; a
/// vertex that has been identified with another is dead and forwards to its
/// representative through the union-find parent array. The surviving
/// representative is always the smaller index.
#[derive(Clone, Debug)]
pub struct DiagramGraph {
    gens: usize,
    edges: Vec<u32>,
    parent: Vec<u32>,
    /// Dead vertices whose rows still have to be folded into their
    /// representative.
    pending: VecDeque<u32>,
    live: usize,
    max_vertices: usize,
    merges: u64,
}

impl DiagramGraph {
    pub fn new(gens: usize, max_vertices: usize) -> Self {
        DiagramGraph {
            gens,
            edges: Vec::new(),
            parent: Vec::new(),
            pending: VecDeque::new(),
            live: 0,
            max_vertices,
            merges: 0,
        }
    }

    /// Number of vertices ever created.
    pub fn created(&self) -> usize {
        self.parent.len()
    }

    pub fn live(&self) -> usize {
        self.live
    }

    /// Number of identifications performed so far.
    pub fn merges(&self) -> u64 {
        self.merges
    }

    pub fn gens(&self) -> usize {
        self.gens
    }

    pub fn add_vertex(&mut self) -> Result<usize, BudgetExceeded> {
        let v = self.parent.len();
        if v >= self.max_vertices {
            return Err(BudgetExceeded {
                max_vertices: self.max_vertices,
                live_vertices: self.live,
            });
        }
        self.parent.push(v as u32);
        self.edges.extend(std::iter::repeat_n(NONE, self.gens));
        self.live += 1;
        Ok(v)
    }

    #[inline]
    pub fn is_live(&self, v: usize) -> bool {
        self.parent[v] as usize == v
    }

    #[inline]
    pub fn edge(&self, v: usize, g: usize) -> Option<usize> {
        match self.edges[v * self.gens + g] {
            NONE => None,
            u => Some(u as usize),
        }
    }

    #[inline]
    fn clear(&mut self, v: usize, g: usize) {
        self.edges[v * self.gens + g] = NONE;
    }

    /// Joins `v` and `u` with a `g`-edge (a loop if `v == u`).
    #[inline]
    pub fn set_edge(&mut self, v: usize, g: usize, u: usize) {
        self.edges[v * self.gens + g] = u as u32;
        self.edges[u * self.gens + g] = v as u32;
    }

    pub fn find(&mut self, v: usize) -> usize {
        let mut root = v;
        while self.parent[root] as usize != root {
            root = self.parent[root] as usize;
        }
        let mut cur = v;
        while self.parent[cur] as usize != root {
            let next = self.parent[cur] as usize;
            self.parent[cur] = root as u32;
            cur = next;
        }
        root
    }

    /// Records that `a` and `b` are the same element. The larger
    /// representative dies immediately; its edges are moved by
    /// [`collapse`](Self::collapse).
    pub fn identify(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return;
        }
        let (keep, kill) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[kill] = keep as u32;
        self.live -= 1;
        self.merges += 1;
        self.pending.push_back(kill as u32);
    }

    /// Processes pending identifications until no vertex has two distinct
    /// neighbours along the same generator.
    pub fn collapse(&mut self) {
        while let Some(dead) = self.pending.pop_front() {
            let dead = dead as usize;
            for g in 0..self.gens {
                let Some(nb) = self.edge(dead, g) else {
                    continue;
                };
                self.clear(dead, g);
                if nb != dead && self.edge(nb, g) == Some(dead) {
                    self.clear(nb, g);
                }
                let mu = self.find(dead);
                let nu = self.find(nb);
                if let Some(t) = self.edge(mu, g) {
                    self.identify(nu, t);
                } else if let Some(t) = self.edge(nu, g) {
                    self.identify(mu, t);
                } else {
                    self.set_edge(mu, g, nu);
                }
            }
        }
    }

    /// Walks `word` from `start`, creating vertices where edges are missing,
    /// and returns the vertex reached.
    pub fn trace_open(&mut self, start: usize, word: &Word) -> Result<usize, BudgetExceeded> {
        let mut v = start;
        for &g in word {
            let g = g.index();
            v = match self.edge(v, g) {
                Some(u) => u,
                None => {
                    let u = self.add_vertex()?;
                    self.set_edge(v, g, u);
                    u
                }
            };
        }
        Ok(v)
    }

    /// Traces `word` from `start` so that it ends at `end`.
    ///
    /// The word is scanned forward from `start` and backward from `end` along
    /// existing edges. A one-letter gap is closed with a new edge; a longer
    /// gap gets a fresh vertex and the scan resumes. If the two scans meet,
    /// the meeting vertices are identified (queued for [`collapse`]).
    ///
    /// Must be called with no pending identifications.
    ///
    /// [`collapse`]: Self::collapse
    pub fn trace_closed(
        &mut self,
        start: usize,
        word: &Word,
        end: usize,
    ) -> Result<(), BudgetExceeded> {
        debug_assert!(self.pending.is_empty());
        let w = word.letters();
        let (mut f, mut i) = (start, 0usize);
        let (mut b, mut j) = (end, w.len());
        loop {
            while i < j {
                match self.edge(f, w[i].index()) {
                    Some(u) => {
                        f = u;
                        i += 1;
                    }
                    None => break,
                }
            }
            if i == j {
                self.identify(f, b);
                return Ok(());
            }
            while j > i {
                match self.edge(b, w[j - 1].index()) {
                    Some(u) => {
                        b = u;
                        j -= 1;
                    }
                    None => break,
                }
            }
            if i == j {
                self.identify(f, b);
                return Ok(());
            }
            if j == i + 1 {
                self.set_edge(f, w[i].index(), b);
                return Ok(());
            }
            let u = self.add_vertex()?;
            self.set_edge(f, w[i].index(), u);
            f = u;
            i += 1;
        }
    }

    /// True when following `word` from `v` returns to `v` without needing
    /// any new edge.
    pub fn closes(&self, v: usize, word: &Word) -> bool {
        let mut cur = v;
        for &g in word {
            match self.edge(cur, g.index()) {
                Some(u) => cur = u,
                None => return false,
            }
        }
        cur == v
    }

    pub fn is_complete_at(&self, v: usize) -> bool {
        (0..self.gens).all(|g| self.edge(v, g).is_some())
    }

    /// Live vertices in creation order with their generator edges, renumbered
    /// densely. Returns `(perms, old→new map)`.
    pub fn compact(&self) -> (Vec<Vec<usize>>, Vec<Option<usize>>) {
        let mut map = vec![None; self.created()];
        let mut n = 0;
        for (v, slot) in map.iter_mut().enumerate() {
            if self.is_live(v) {
                *slot = Some(n);
                n += 1;
            }
        }
        let mut perms = vec![vec![0usize; n]; self.gens];
        for (v, slot) in map.iter().enumerate() {
            let Some(nv) = *slot else { continue };
            for (g, perm) in perms.iter_mut().enumerate() {
                let u = self.edge(v, g).expect("compact requires a complete graph");
                perm[nv] = map[u].expect("live vertex points at dead vertex");
            }
        }
        (perms, map)
    }
}
