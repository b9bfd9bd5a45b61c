//! The links `L(1/2, 1/2, p/q; e)`.
//!
//! Provides the three-generator presentation of their involutory quandles,
//! an equivalent presentation whose primary relations already produce the
//! final Cayley graph, closed-form order and component predictions, and an
//! independent model of each Cayley-graph component as a quotient of a
//! labelled hexagonal tiling of the plane.

mod audit;
mod lattice;
mod model;
mod presentation;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::words::Word;

pub use audit::{
    ab_displacements, audit_displacements, predicted_ab_displacements,
    predicted_relation_displacements, relation_displacements, AbDisplacements, AuditLine,
};
pub use lattice::{
    displacement, lattice_step, sigma, trace_point, Affine, Displacement, LatticePoint,
    LatticeTransform, TypePermutation, VertexType,
};
pub use model::{build_model, canonical_rep, Component, LatticeModel};
pub use presentation::{
    presentation, relation_words, rewritten_presentation, rewritten_presentation_with_sign,
    secondary_loop_words, words_ab,
};

/// Parity class of `(p, q)`; selects the shape of the second and third
/// relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    /// `p` odd, `q` odd
    OddOdd,
    /// `p` even, `q` odd
    EvenOdd,
    /// `p` odd, `q` even
    OddEven,
}

/// Parameters `(p, q, e)` of `L(1/2, 1/2, p/q; e)` with `0 < p < q`,
/// `gcd(p, q) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MontesinosParams {
    p: i64,
    q: i64,
    e: i64,
}

impl MontesinosParams {
    pub fn new(p: i64, q: i64, e: i64) -> Result<Self> {
        let bad = |reason| Error::InvalidParams { p, q, e, reason };
        if !(0 < p && p < q) {
            return Err(bad("need 0 < p < q"));
        }
        if p.gcd(&q) != 1 {
            return Err(bad("need gcd(p, q) = 1"));
        }
        // keeps every word length and lattice coordinate far from overflow
        if q > 1 << 20 || e.abs() > 1 << 20 {
            return Err(bad("parameters too large"));
        }
        Ok(MontesinosParams { p, q, e })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn e(&self) -> i64 {
        self.e
    }

    /// `w = (e − 1)q − p`; never zero since `q ∤ p`.
    pub fn w(&self) -> i64 {
        (self.e - 1) * self.q - self.p
    }

    pub fn abs_w(&self) -> i64 {
        self.w().abs()
    }

    pub fn parity(&self) -> Parity {
        match (self.p.is_odd(), self.q.is_odd()) {
            (true, true) => Parity::OddOdd,
            (false, true) => Parity::EvenOdd,
            (true, false) => Parity::OddEven,
            (false, false) => unreachable!("gcd(p, q) = 1"),
        }
    }

    pub fn q_is_odd(&self) -> bool {
        self.q.is_odd()
    }

    /// `(q − p, q, 3 − e)`, the parameters of the mirror image.
    pub fn mirror(&self) -> Self {
        MontesinosParams {
            p: self.q - self.p,
            q: self.q,
            e: 3 - self.e,
        }
    }

    /// `2(q + 1)|w|`.
    pub fn predicted_order(&self) -> u64 {
        (2 * (self.q + 1) * self.abs_w()) as u64
    }

    /// `{2q|w|, 2|w|}` for odd `q`, `{q|w|, q|w|, 2|w|}` for even `q`, largest
    /// first.
    pub fn predicted_component_sizes(&self) -> Vec<u64> {
        let (q, w) = (self.q as u64, self.abs_w() as u64);
        let mut v = if self.q_is_odd() {
            vec![2 * q * w, 2 * w]
        } else {
            vec![q * w, q * w, 2 * w]
        };
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    pub fn predicted_component_count(&self) -> usize {
        if self.q_is_odd() {
            2
        } else {
            3
        }
    }

    /// All valid parameters with `2 ≤ q ≤ q_max`, `e_min ≤ e ≤ e_max`, in
    /// `(q, p, e)` order.
    pub fn sweep(q_max: i64, e_min: i64, e_max: i64) -> Vec<Self> {
        let mut out = Vec::new();
        for q in 2..=q_max {
            for p in 1..q {
                if p.gcd(&q) != 1 {
                    continue;
                }
                for e in e_min..=e_max {
                    out.push(MontesinosParams { p, q, e });
                }
            }
        }
        out
    }
}

impl std::fmt::Display for MontesinosParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "L(1/2, 1/2, {}/{}; {})", self.p, self.q, self.e)
    }
}

pub fn mirror_params(params: &MontesinosParams) -> MontesinosParams {
    params.mirror()
}

pub fn predicted_order(params: &MontesinosParams) -> u64 {
    params.predicted_order()
}

pub fn predicted_component_sizes(params: &MontesinosParams) -> Vec<u64> {
    params.predicted_component_sizes()
}

pub fn predicted_component_count(params: &MontesinosParams) -> usize {
    params.predicted_component_count()
}

/// The two sides of the commuting identity `x^{A1A232B1B} = x^{B1B232A1A}`.
pub fn commuting_identity_words(e: i64) -> (Word, Word) {
    let (a, b) = words_ab(e);
    let d = Word::digits;
    let lhs = crate::words::cat(&[&a, &d("1"), &a, &d("232"), &b, &d("1"), &b]);
    let rhs = crate::words::cat(&[&b, &d("1"), &b, &d("232"), &a, &d("1"), &a]);
    (lhs, rhs)
}
