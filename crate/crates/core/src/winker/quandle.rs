use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::words::Gen;

/// A finite involutory quandle stored as its full operation table, together
/// with the elements that the presentation's generators evaluate to.
///
/// Right translations are stored contiguously: `right[b * n + a] = a ▷ b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteQuandle {
    order: usize,
    right: Vec<u32>,
    generators: Vec<usize>,
    names: Vec<String>,
    component: Vec<usize>,
    component_count: usize,
}

/// First violated axiom found by [`FiniteQuandle::axioms_check`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AxiomViolation {
    /// `x ▷ x != x`
    Idempotence { x: usize },
    /// `(x ▷ y) ▷ y != x`
    Involution { x: usize, y: usize },
    /// `(x ▷ y) ▷ z != (x ▷ z) ▷ (y ▷ z)`
    Distributivity { x: usize, y: usize, z: usize },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            AxiomViolation::Idempotence { x } => write!(f, "A1 fails at x={x}"),
            AxiomViolation::Involution { x, y } => write!(f, "A2 fails at x={x}, y={y}"),
            AxiomViolation::Distributivity { x, y, z } => {
                write!(f, "A3 fails at x={x}, y={y}, z={z}")
            }
        }
    }
}

impl FiniteQuandle {
    /// Builds a quandle from a full table given row-wise (`table[a][b] = a ▷ b`).
    /// Axioms are not checked here; see [`axioms_check`](Self::axioms_check).
    pub fn from_table(
        table: &[Vec<usize>],
        generators: Vec<usize>,
        names: Vec<String>,
    ) -> Result<Self> {
        let n = table.len();
        if generators.is_empty() && n > 0 {
            return Err(Error::NoGenerators);
        }
        let mut right = vec![0u32; n * n];
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InconsistentCayleyGraph(format!(
                    "row {a} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for (b, &c) in row.iter().enumerate() {
                if c >= n {
                    return Err(Error::ElementOutOfRange(c));
                }
                right[b * n + a] = c as u32;
            }
        }
        Self::assemble(n, right, generators, names)
    }

    /// Builds the full table from a complete Cayley graph.
    ///
    /// `perms[g][v]` is `v ▷ g` for generator `g` (0-based) and
    /// `generators[g]` is the element generator `g` denotes. Every element must
    /// be reachable from some generator element. The right translation of
    /// `b ▷ g` is obtained as `R_g ∘ R_b ∘ R_g`; every Cayley edge is checked
    /// against that rule.
    pub fn from_cayley(
        perms: &[Vec<usize>],
        generators: Vec<usize>,
        names: Vec<String>,
    ) -> Result<Self> {
        let k = perms.len();
        if k == 0 || generators.len() != k {
            return Err(Error::NoGenerators);
        }
        let n = perms[0].len();
        for (g, p) in perms.iter().enumerate() {
            if p.len() != n {
                return Err(Error::InconsistentCayleyGraph(format!(
                    "generator {} has {} edges, expected {n}",
                    g + 1,
                    p.len()
                )));
            }
            for (v, &u) in p.iter().enumerate() {
                if u >= n || p[u] != v {
                    return Err(Error::InconsistentCayleyGraph(format!(
                        "generator {} does not act as an involution at {v}",
                        g + 1
                    )));
                }
            }
        }
        const UNSET: u32 = u32::MAX;
        let mut right = vec![UNSET; n * n];
        let mut done = vec![false; n];
        let mut queue = VecDeque::new();
        for (g, &e) in generators.iter().enumerate() {
            if e >= n {
                return Err(Error::ElementOutOfRange(e));
            }
            let col: Vec<u32> = perms[g].iter().map(|&u| u as u32).collect();
            if done[e] {
                if right[e * n..(e + 1) * n] != col[..] {
                    return Err(Error::InconsistentCayleyGraph(format!(
                        "generators share element {e} but act differently"
                    )));
                }
                continue;
            }
            right[e * n..(e + 1) * n].copy_from_slice(&col);
            done[e] = true;
            queue.push_back(e);
        }
        let mut scratch = vec![0u32; n];
        while let Some(b) = queue.pop_front() {
            for (g, perm) in perms.iter().enumerate() {
                let c = perm[b];
                let rb = &right[b * n..(b + 1) * n];
                for a in 0..n {
                    scratch[a] = perm[rb[perm[a]] as usize] as u32;
                }
                if done[c] {
                    if right[c * n..(c + 1) * n] != scratch[..] {
                        return Err(Error::InconsistentCayleyGraph(format!(
                            "translation of {c} disagrees along edge {b} --{}--> {c}",
                            g + 1
                        )));
                    }
                } else {
                    right[c * n..(c + 1) * n].copy_from_slice(&scratch);
                    done[c] = true;
                    queue.push_back(c);
                }
            }
        }
        if let Some(v) = done.iter().position(|d| !d) {
            return Err(Error::InconsistentCayleyGraph(format!(
                "element {v} is not reachable from any generator"
            )));
        }
        Self::assemble(n, right, generators, names)
    }

    fn assemble(
        n: usize,
        right: Vec<u32>,
        generators: Vec<usize>,
        mut names: Vec<String>,
    ) -> Result<Self> {
        if let Some(&e) = generators.iter().find(|&&e| e >= n) {
            return Err(Error::ElementOutOfRange(e));
        }
        if names.len() != generators.len() {
            names = (1..=generators.len()).map(|i| i.to_string()).collect();
        }
        let mut q = FiniteQuandle {
            order: n,
            right,
            generators,
            names,
            component: vec![usize::MAX; n],
            component_count: 0,
        };
        q.label_components();
        Ok(q)
    }

    /// Orbits of the generator action, numbered in order of first element.
    fn label_components(&mut self) {
        let n = self.order;
        let mut next = 0;
        let mut stack = Vec::new();
        for s in 0..n {
            if self.component[s] != usize::MAX {
                continue;
            }
            self.component[s] = next;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for &ge in &self.generators {
                    let u = self.op(v, ge);
                    if self.component[u] == usize::MAX {
                        self.component[u] = next;
                        stack.push(u);
                    }
                }
            }
            next += 1;
        }
        self.component_count = next;
    }

    /// `Core(Z/n)`: `a ▷ b = 2b − a mod n`, generated by `0` and `1`.
    pub fn core_cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let table: Vec<Vec<usize>> = (0..n)
            .map(|a| (0..n).map(|b| (2 * b + n - a) % n).collect())
            .collect();
        let gens = if n == 1 { vec![0] } else { vec![0, 1] };
        let names = (1..=gens.len()).map(|i| i.to_string()).collect();
        Self::from_table(&table, gens, names).expect("core table is well formed")
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// `a ▷ b`.
    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.right[b * self.order + a] as usize
    }

    /// The right translation `x ↦ x ▷ b` as a slice indexed by `x`.
    #[inline]
    pub fn right_translation(&self, b: usize) -> &[u32] {
        &self.right[b * self.order..(b + 1) * self.order]
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn generator_elements(&self) -> &[usize] {
        &self.generators
    }

    pub fn generator_element(&self, g: Gen) -> Option<usize> {
        self.generators.get(g.index()).copied()
    }

    pub fn generator_names(&self) -> &[String] {
        &self.names
    }

    pub fn component_of(&self, a: usize) -> usize {
        self.component[a]
    }

    pub fn component_count(&self) -> usize {
        self.component_count
    }

    /// Cayley-graph components as sorted element lists, ordered by smallest
    /// element.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.component_count];
        for (a, &c) in self.component.iter().enumerate() {
            out[c].push(a);
        }
        out
    }

    /// Component sizes, largest first.
    pub fn component_sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.components().iter().map(Vec::len).collect();
        s.sort_unstable_by(|a, b| b.cmp(a));
        s
    }

    /// Number of fixed points of the right translation by `b`.
    pub fn fixed_points(&self, b: usize) -> usize {
        self.right_translation(b)
            .iter()
            .enumerate()
            .filter(|&(a, &c)| a == c as usize)
            .count()
    }

    /// Exhaustive check of idempotence, involutivity and right
    /// self-distributivity. Returns the first violation in `(x, y, z)`
    /// lexicographic order.
    pub fn axioms_check(&self) -> std::result::Result<(), AxiomViolation> {
        let n = self.order;
        for x in 0..n {
            if self.op(x, x) != x {
                return Err(AxiomViolation::Idempotence { x });
            }
        }
        for y in 0..n {
            let ry = self.right_translation(y);
            for x in 0..n {
                if ry[ry[x] as usize] as usize != x {
                    return Err(AxiomViolation::Involution { x, y });
                }
            }
        }
        // (x ▷ y) ▷ z = (x ▷ z) ▷ (y ▷ z), scanned with z outermost so that
        // both R_z and R_{y ▷ z} are contiguous.
        let mut first: Option<AxiomViolation> = None;
        for z in 0..n {
            let rz = self.right_translation(z);
            for y in 0..n {
                let ry = self.right_translation(y);
                let ryz = self.right_translation(rz[y] as usize);
                for x in 0..n {
                    if rz[ry[x] as usize] != ryz[rz[x] as usize] {
                        let v = AxiomViolation::Distributivity { x, y, z };
                        if first.is_none_or(|f| key(v) < key(f)) {
                            first = Some(v);
                        }
                        break;
                    }
                }
            }
        }
        fn key(v: AxiomViolation) -> (usize, usize, usize) {
            match v {
                AxiomViolation::Distributivity { x, y, z } => (x, y, z),
                _ => (0, 0, 0),
            }
        }
        match first {
            Some(v) => Err(v),
            None => Ok(()),
        }
    }

    /// Row-wise copy of the table.
    pub fn table(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| (0..self.order).map(|b| self.op(a, b)).collect())
            .collect()
    }

    /// Relabels generators, keeping elements and table.
    pub fn with_generators(&self, generators: Vec<usize>, names: Vec<String>) -> Result<Self> {
        Self::assemble(self.order, self.right.clone(), generators, names)
    }
}
