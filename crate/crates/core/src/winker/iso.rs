//! Isomorphism search by generator propagation.
//!
//! A homomorphism out of a quandle is fixed by the images of its generators:
//! once `φ(g)` is chosen for every generator, `φ(v ▷ g) = φ(v) ▷ φ(g)` walks the
//! Cayley graph and determines `φ` everywhere. If that walk is consistent on
//! every Cayley edge the map respects the whole operation, because acting by
//! `g^W` is the same as acting by the word `reverse(W) g W` on both sides.

use std::collections::HashMap;

use super::FiniteQuandle;

const UNSET: usize = usize::MAX;

/// Per-element isomorphism invariants: size of the element's component and
/// number of fixed points of its right translation.
pub fn element_keys(q: &FiniteQuandle) -> Vec<(usize, usize)> {
    let comps = q.components();
    (0..q.order())
        .map(|a| (comps[q.component_of(a)].len(), q.fixed_points(a)))
        .collect()
}

fn key_histogram(keys: &[(usize, usize)]) -> HashMap<(usize, usize), usize> {
    let mut h = HashMap::new();
    for &k in keys {
        *h.entry(k).or_insert(0) += 1;
    }
    h
}

/// Extends generator images to a map on all of `src`. Returns false if the
/// extension is inconsistent or not injective.
fn extend(
    src: &FiniteQuandle,
    dst: &FiniteQuandle,
    images: &[usize],
    phi: &mut Vec<usize>,
    stack: &mut Vec<usize>,
    seen: &mut Vec<bool>,
) -> bool {
    phi.clear();
    phi.resize(src.order(), UNSET);
    stack.clear();
    let gens = src.generator_elements();
    for (&ge, &img) in gens.iter().zip(images) {
        if phi[ge] == UNSET {
            phi[ge] = img;
            stack.push(ge);
        } else if phi[ge] != img {
            return false;
        }
    }
    while let Some(v) = stack.pop() {
        let pv = phi[v];
        for (&ge, &img) in gens.iter().zip(images) {
            let u = src.op(v, ge);
            let pu = dst.op(pv, img);
            if phi[u] == UNSET {
                phi[u] = pu;
                stack.push(u);
            } else if phi[u] != pu {
                return false;
            }
        }
    }
    if src.order() != dst.order() {
        return phi.iter().all(|&x| x != UNSET);
    }
    seen.clear();
    seen.resize(dst.order(), false);
    for &x in phi.iter() {
        if x == UNSET || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

/// Enumerates isomorphisms `src → dst`, calling `visit` with each one (as an
/// element map). Stops early when `visit` returns false. Returns the number
/// of isomorphisms visited.
pub fn search_isomorphisms(
    src: &FiniteQuandle,
    dst: &FiniteQuandle,
    mut visit: impl FnMut(&[usize]) -> bool,
) -> u64 {
    if src.order() != dst.order() || src.component_sizes() != dst.component_sizes() {
        return 0;
    }
    let ks = element_keys(src);
    let kd = element_keys(dst);
    if key_histogram(&ks) != key_histogram(&kd) {
        return 0;
    }
    let gens = src.generator_elements().to_vec();
    let cands: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| (0..dst.order()).filter(|&c| kd[c] == ks[g]).collect())
        .collect();

    let mut st = SearchState {
        src,
        dst,
        ks: &ks,
        kd: &kd,
        gens: &gens,
        cands: &cands,
        images: vec![0; gens.len()],
        phi: Vec::new(),
        stack: Vec::new(),
        seen: Vec::new(),
        found: 0,
    };
    st.dfs(0, &mut visit);
    st.found
}

struct SearchState<'a> {
    src: &'a FiniteQuandle,
    dst: &'a FiniteQuandle,
    ks: &'a [(usize, usize)],
    kd: &'a [(usize, usize)],
    gens: &'a [usize],
    cands: &'a [Vec<usize>],
    images: Vec<usize>,
    phi: Vec<usize>,
    stack: Vec<usize>,
    seen: Vec<bool>,
    found: u64,
}

impl SearchState<'_> {
    /// Returns false once the visitor asked to stop.
    fn dfs(&mut self, depth: usize, visit: &mut impl FnMut(&[usize]) -> bool) -> bool {
        if depth == self.gens.len() {
            if extend(
                self.src,
                self.dst,
                &self.images,
                &mut self.phi,
                &mut self.stack,
                &mut self.seen,
            ) {
                self.found += 1;
                return visit(&self.phi);
            }
            return true;
        }
        let gd = self.gens[depth];
        for ci in 0..self.cands[depth].len() {
            let c = self.cands[depth][ci];
            // products among already-chosen generator images must match
            let consistent = (0..depth).all(|j| {
                let gj = self.gens[j];
                let cj = self.images[j];
                (gj == gd) == (cj == c)
                    && self.ks[self.src.op(gd, gj)] == self.kd[self.dst.op(c, cj)]
                    && self.ks[self.src.op(gj, gd)] == self.kd[self.dst.op(cj, c)]
            });
            if !consistent {
                continue;
            }
            self.images[depth] = c;
            if !self.dfs(depth + 1, visit) {
                return false;
            }
        }
        true
    }
}

/// Finds an isomorphism `q1 → q2` (as an element map), if one exists.
///
/// When both quandles have the same number of generators, the assignment
/// sending generator `i` to generator `i` is tried first.
pub fn isomorphic(q1: &FiniteQuandle, q2: &FiniteQuandle) -> Option<Vec<usize>> {
    if q1.order() != q2.order() {
        return None;
    }
    if q1.generator_count() == q2.generator_count() {
        let (mut phi, mut stack, mut seen) = (Vec::new(), Vec::new(), Vec::new());
        if extend(
            q1,
            q2,
            q2.generator_elements(),
            &mut phi,
            &mut stack,
            &mut seen,
        ) && verify_isomorphism(q1, q2, &phi)
        {
            return Some(phi);
        }
    }
    let mut out = None;
    search_isomorphisms(q1, q2, |phi| {
        out = Some(phi.to_vec());
        false
    });
    out.filter(|phi| verify_isomorphism(q1, q2, phi))
}

/// Full check that `phi` is a bijection with `phi(a ▷ b) = phi(a) ▷ phi(b)`.
pub fn verify_isomorphism(q1: &FiniteQuandle, q2: &FiniteQuandle, phi: &[usize]) -> bool {
    let n = q1.order();
    if q2.order() != n || phi.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &x in phi {
        if x >= n || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    (0..n).all(|b| {
        let r1 = q1.right_translation(b);
        let r2 = q2.right_translation(phi[b]);
        (0..n).all(|a| phi[r1[a] as usize] == r2[phi[a]] as usize)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn self_isomorphism_is_identity_first() {
        let q = FiniteQuandle::core_cyclic(7);
        let phi = isomorphic(&q, &q).unwrap();
        assert_eq!(phi, (0..7).collect::<Vec<_>>());
    }

    #[test]
    fn size_mismatch() {
        let a = FiniteQuandle::core_cyclic(3);
        let b = FiniteQuandle::core_cyclic(5);
        assert!(isomorphic(&a, &b).is_none());
    }

    #[test]
    fn relabelled_core() {
        // Core(Z/5) generated by 2 and 4 instead of 0 and 1
        let a = FiniteQuandle::core_cyclic(5);
        let b = a.with_generators(vec![2, 4], vec![]).unwrap();
        let phi = isomorphic(&a, &b).unwrap();
        assert!(verify_isomorphism(&a, &b, &phi));
    }

    #[test]
    fn core_automorphisms_counted() {
        // Aut(Core(Z/5)) is the affine group x -> ax + b, of order 20
        let q = FiniteQuandle::core_cyclic(5);
        assert_eq!(search_isomorphisms(&q, &q, |_| true), 20);
    }
}
