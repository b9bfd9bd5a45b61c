//! Closed-form permutations and displacements of the relation words, checked
//! against tracing in the tiling.

use std::fmt;

use num_integer::Integer;

use crate::words::{cat, Word};

use super::lattice::{displacement, sigma, Displacement, TypePermutation, VertexType};
use super::presentation::{relation_words, secondary_loop_words, words_ab};
use super::{MontesinosParams, Parity};

/// Permutation and displacement (from a type `01` vertex) of `A`, `B`,
/// `232A1A` and `232B1B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AbDisplacements {
    pub a: (TypePermutation, Displacement),
    pub b: (TypePermutation, Displacement),
    pub xa: (TypePermutation, Displacement),
    pub xb: (TypePermutation, Displacement),
}

fn measure(w: &Word) -> (TypePermutation, Displacement) {
    (sigma(w), displacement(w, VertexType::T01))
}

/// Traced values for the words built from `e` half-twists.
pub fn ab_displacements(e: i64) -> AbDisplacements {
    let (a, b) = words_ab(e);
    let d = Word::digits;
    AbDisplacements {
        a: measure(&a),
        b: measure(&b),
        xa: measure(&cat(&[&d("232"), &a, &d("1"), &a])),
        xb: measure(&cat(&[&d("232"), &b, &d("1"), &b])),
    }
}

/// Closed forms for the same quantities.
pub fn predicted_ab_displacements(e: i64) -> AbDisplacements {
    let s1 = sigma(&Word::digits("1"));
    let s2 = sigma(&Word::digits("2"));
    let id = TypePermutation::identity();
    let dv = Displacement::new;
    if e.is_even() {
        AbDisplacements {
            a: (s2, dv(e - 1, 0)),
            b: (s1, dv(e, -2)),
            xa: (id, dv(4 - 2 * e, 4)),
            xb: (id, dv(2 - 2 * e, 4)),
        }
    } else {
        AbDisplacements {
            a: (s1, dv(e - 1, -2)),
            b: (s2, dv(e, 0)),
            xa: (id, dv(4 - 2 * e, 4)),
            xb: (id, dv(2 - 2 * e, 4)),
        }
    }
}

/// Traced displacements of `α` and `β` from a type `01` vertex.
pub fn relation_displacements(params: &MontesinosParams) -> (Displacement, Displacement) {
    let (alpha, beta) = relation_words(params);
    (
        displacement(&alpha, VertexType::T01),
        displacement(&beta, VertexType::T01),
    )
}

/// Closed forms for the displacements of `α` and `β`, by parity row and the
/// parity of `e`.
pub fn predicted_relation_displacements(params: &MontesinosParams) -> (Displacement, Displacement) {
    let (q, w) = (params.q(), params.w());
    let up = Displacement::new(w, 2 * q - 2);
    let down = Displacement::new(w, -2 * q);
    let e_even = params.e().is_even();
    match params.parity() {
        Parity::OddOdd if e_even => (up, down),
        Parity::OddOdd => (down, up),
        Parity::EvenOdd if e_even => (down, up),
        Parity::EvenOdd => (up, down),
        Parity::OddEven => {
            let alpha = Displacement::new(w, 2 * q);
            let beta = if e_even {
                Displacement::new(w, 2 * q - 2)
            } else {
                Displacement::new(w, -2 * q - 2)
            };
            (alpha, beta)
        }
    }
}

/// Closed forms for the displacements of the simplified secondary loop words
/// (odd `q` only), keyed like [`secondary_loop_words`].
fn predicted_secondary_displacement(params: &MontesinosParams, name: &str) -> Displacement {
    let (q, aw) = (params.q(), params.abs_w());
    if name == "s_mu" {
        return -Displacement::new(2 * aw, 4 * q);
    }
    if name == "s_delta'" {
        return Displacement::new(0, 8 * q);
    }
    if name == "s_kappa" {
        return Displacement::new(4 * aw, 0);
    }
    if let Some(i) = name.strip_prefix("s_delta_") {
        let i: i64 = i.parse().expect("numeric index");
        let sign = if i.is_even() { 1 } else { -1 };
        return Displacement::new(0, -8 * q).scale(sign);
    }
    // s_theta_i_k and s_iota_i
    Displacement::default()
}

/// One compared quantity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditLine {
    pub name: String,
    pub computed: Displacement,
    pub predicted: Displacement,
    /// Traced and predicted type permutations, where the closed form gives one.
    pub sigma: Option<(TypePermutation, TypePermutation)>,
}

impl AuditLine {
    pub fn ok(&self) -> bool {
        self.computed == self.predicted && self.sigma.is_none_or(|(c, p)| c == p)
    }
}

impl fmt::Display for AuditLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<16} traced {} expected {}",
            self.name, self.computed, self.predicted
        )?;
        if let Some((c, p)) = self.sigma {
            write!(f, ", sigma traced {c} expected {p}")?;
        }
        f.write_str(if self.ok() { "  ok" } else { "  MISMATCH" })
    }
}

/// Every closed-form displacement that applies to `params`: the four
/// half-twist words, `α` and `β`, and for odd `q` the secondary loop words.
pub fn audit_displacements(params: &MontesinosParams) -> Vec<AuditLine> {
    let mut out = Vec::new();
    let got = ab_displacements(params.e());
    let want = predicted_ab_displacements(params.e());
    for (name, g, w) in [
        ("A", got.a, want.a),
        ("B", got.b, want.b),
        ("232A1A", got.xa, want.xa),
        ("232B1B", got.xb, want.xb),
    ] {
        out.push(AuditLine {
            name: name.to_string(),
            computed: g.1,
            predicted: w.1,
            sigma: Some((g.0, w.0)),
        });
    }
    let (ga, gb) = relation_displacements(params);
    let (wa, wb) = predicted_relation_displacements(params);
    out.push(AuditLine {
        name: "alpha".into(),
        computed: ga,
        predicted: wa,
        sigma: None,
    });
    out.push(AuditLine {
        name: "beta".into(),
        computed: gb,
        predicted: wb,
        sigma: None,
    });
    if params.q_is_odd() {
        for (name, word) in secondary_loop_words(params) {
            out.push(AuditLine {
                computed: displacement(&word, VertexType::T01),
                predicted: predicted_secondary_displacement(params, &name),
                name,
                sigma: None,
            });
        }
    }
    out
}
