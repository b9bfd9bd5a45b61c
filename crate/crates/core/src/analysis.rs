//! Geodesics, maximal geodesics and automorphisms of finite involutory
//! quandles, with the closed-form bounds for the Montesinos family.

use std::collections::HashSet;

use crate::error::Result;
use crate::montesinos::{presentation, MontesinosParams};
use crate::winker::{
    enumerate, isomorphic, search_isomorphisms, FiniteQuandle, DEFAULT_MAX_VERTICES,
};

/// The subquandle generated by two elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Geodesic {
    pub generators: (usize, usize),
    /// Sorted.
    pub elements: Vec<usize>,
}

impl Geodesic {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }
}

/// Closes `{a, b}` under the operation.
pub fn geodesic(q: &FiniteQuandle, a: usize, b: usize) -> Geodesic {
    let mut inside = vec![false; q.order()];
    let mut members = Vec::new();
    let mut next = 0;
    for x in [a, b] {
        if !inside[x] {
            inside[x] = true;
            members.push(x);
        }
    }
    // every product involving at least one member at index ≥ next is pending
    while next < members.len() {
        let z = members[next];
        next += 1;
        let mut i = 0;
        while i < next {
            let s = members[i];
            for c in [q.op(s, z), q.op(z, s)] {
                if !inside[c] {
                    inside[c] = true;
                    members.push(c);
                }
            }
            i += 1;
        }
    }
    members.sort_unstable();
    Geodesic {
        generators: (a, b),
        elements: members,
    }
}

/// The distinct geodesics not properly contained in another, largest first
/// (ties by element list).
pub fn maximal_geodesics(q: &FiniteQuandle) -> Vec<Geodesic> {
    let n = q.order();
    let mut found: Vec<Geodesic> = Vec::new();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    // membership[x] lists the found geodesics containing x
    let mut membership: Vec<Vec<usize>> = vec![Vec::new(); n];
    for a in 0..n {
        for b in a..n {
            // g(a, b) lies inside any geodesic holding both a and b
            let covered = membership[a].iter().any(|&gi| found[gi].contains(b));
            if covered {
                continue;
            }
            let g = geodesic(q, a, b);
            if seen.insert(g.elements.clone()) {
                let gi = found.len();
                for &x in &g.elements {
                    membership[x].push(gi);
                }
                found.push(g);
            }
        }
    }
    let sets: Vec<HashSet<usize>> = found
        .iter()
        .map(|g| g.elements.iter().copied().collect())
        .collect();
    let mut out: Vec<Geodesic> = found
        .iter()
        .enumerate()
        .filter(|&(i, g)| {
            !sets.iter().enumerate().any(|(j, s)| {
                j != i && s.len() > g.len() && g.elements.iter().all(|x| s.contains(x))
            })
        })
        .map(|(_, g)| g.clone())
        .collect();
    out.sort_by(|x, y| {
        y.len()
            .cmp(&x.len())
            .then_with(|| x.elements.cmp(&y.elements))
    });
    out
}

/// Sizes of the `q + 1` maximal geodesics of the Montesinos quandle, largest
/// first: one of `2q|w|` and `q` of `4|w|`.
pub fn predicted_maximal_geodesic_sizes(params: &MontesinosParams) -> Vec<usize> {
    let (q, w) = (params.q() as usize, params.abs_w() as usize);
    let mut v = vec![2 * q * w];
    v.extend(std::iter::repeat_n(4 * w, q));
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// Euler's Φ by trial factorisation.
pub fn totient(n: u64) -> u64 {
    assert!(n >= 1);
    let mut m = n;
    let mut out = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            out = out / p * (p - 1);
        }
        p += 1;
    }
    if m > 1 {
        out = out / m * (m - 1);
    }
    out
}

/// `24w²Φ(4|w|)` if `q = 2`, `4qw²Φ(2q|w|)` otherwise.
pub fn aut_upper_bound(params: &MontesinosParams) -> u64 {
    let w = params.abs_w() as u64;
    let q = params.q() as u64;
    if q == 2 {
        24 * w * w * totient(4 * w)
    } else {
        4 * q * w * w * totient(2 * q * w)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AutReport {
    pub count: u64,
    pub upper_bound: u64,
    pub attained: bool,
}

/// Number of automorphisms: generator-image tuples whose propagation through
/// the Cayley graph is a well-defined bijection.
pub fn automorphism_count(q: &FiniteQuandle) -> u64 {
    search_isomorphisms(q, q, |_| true)
}

/// Every automorphism, as an element map.
pub fn automorphisms(q: &FiniteQuandle) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    search_isomorphisms(q, q, |phi| {
        out.push(phi.to_vec());
        true
    });
    out
}

pub fn aut_report(q: &FiniteQuandle, params: &MontesinosParams) -> AutReport {
    let count = automorphism_count(q);
    let upper_bound = aut_upper_bound(params);
    AutReport {
        count,
        upper_bound,
        attained: count == upper_bound,
    }
}

/// True if each map sends every maximal geodesic onto a maximal geodesic.
pub fn automorphisms_preserve_geodesics(autos: &[Vec<usize>], geodesics: &[Geodesic]) -> bool {
    let sets: HashSet<&[usize]> = geodesics.iter().map(|g| g.elements.as_slice()).collect();
    autos.iter().all(|phi| {
        geodesics.iter().all(|g| {
            let mut img: Vec<usize> = g.elements.iter().map(|&x| phi[x]).collect();
            img.sort_unstable();
            sets.contains(img.as_slice())
        })
    })
}

/// True if the quandles of the two links are not isomorphic.
pub fn distinguishes(p1: &MontesinosParams, p2: &MontesinosParams) -> Result<bool> {
    if p1.predicted_order() != p2.predicted_order() {
        return Ok(true);
    }
    let q1 = enumerate(&presentation(p1), DEFAULT_MAX_VERTICES)?;
    let q2 = enumerate(&presentation(p2), DEFAULT_MAX_VERTICES)?;
    Ok(isomorphic(&q1, &q2).is_none())
}
