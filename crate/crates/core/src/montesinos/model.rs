//! Cayley-graph components as quotients of the tiling.
//!
//! Each component is the tiling modulo a group generated by half-turns,
//! reflections and glides. Every such group is a translation lattice
//! extended by at most four cosets, so a vertex is reduced by moving it into
//! a box of the lattice, applying each coset representative, and keeping the
//! smallest image under a fixed key.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::error::Result;
use crate::winker::FiniteQuandle;
use crate::words::Gen;

use super::lattice::{lattice_step, trace_point, Affine, LatticePoint};
use super::presentation::rewritten_presentation_with_sign;
use super::MontesinosParams;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Component {
    C1,
    C2,
    C3,
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Component::C1 => "C1",
            Component::C2 => "C2",
            Component::C3 => "C3",
        };
        f.write_str(s)
    }
}

/// The symmetry group of one component, as a translation lattice
/// `⟨(2a, 0), (0, 4b)⟩` plus coset representatives, and the box used to
/// reduce modulo the lattice.
struct Quotient {
    period_x: i64,
    period_y: i64,
    x_lo: i64,
    y_lo: i64,
    cosets: Vec<Affine>,
    key: fn(LatticePoint) -> (i64, i64, i64),
}

fn affine(sx: i64, sy: i64, tx: i64, ty: i64) -> Affine {
    Affine { sx, sy, tx, ty }
}

fn quotient(params: &MontesinosParams, comp: Component) -> Quotient {
    let q = params.q();
    let w = params.w();
    let aw = params.abs_w();
    let lex = |p: LatticePoint| (p.x, p.y, 0);
    let centred = |p: LatticePoint| (p.x.abs(), p.y, p.x);
    match (comp, params.q_is_odd()) {
        // ⟨τ(0,4), φ(1/2), φ(w + 1/2)⟩; the two reflections differ by τ(2w, 0)
        (Component::C2, _) => Quotient {
            period_x: 2 * aw,
            period_y: 4,
            x_lo: 1,
            y_lo: 0,
            cosets: vec![Affine::IDENTITY, affine(-1, 1, 1, 0)],
            key: lex,
        },
        // ⟨ρ(0,0), ρ(w,0), ρ(0,2q)⟩ = lattice ⟨(2w,0),(0,4q)⟩ ⋊ ⟨ρ(0,0)⟩
        (Component::C1, true) => Quotient {
            period_x: 2 * aw,
            period_y: 4 * q,
            x_lo: 0,
            y_lo: 0,
            cosets: vec![Affine::IDENTITY, affine(-1, -1, 0, 0)],
            key: lex,
        },
        // ⟨ρ(0,0), ρ(0,2q), γ⟩ with γ: (x, y) ↦ (w − x, y + 2q)
        (Component::C1, false) => Quotient {
            period_x: 2 * aw,
            period_y: 4 * q,
            x_lo: -aw,
            y_lo: 0,
            cosets: vec![
                Affine::IDENTITY,
                affine(-1, -1, 0, 0),
                affine(-1, 1, w, 2 * q),
                affine(1, -1, w, 2 * q),
            ],
            key: centred,
        },
        // ⟨ρ(0,2), ρ(0,2+2q), γ⟩
        (Component::C3, false) => Quotient {
            period_x: 2 * aw,
            period_y: 4 * q,
            x_lo: -aw,
            y_lo: 2,
            cosets: vec![
                Affine::IDENTITY,
                affine(-1, -1, 0, 4),
                affine(-1, 1, w, 2 * q),
                affine(1, -1, w, 4 + 2 * q),
            ],
            key: centred,
        },
        (Component::C3, true) => panic!("for odd q the third generator lies in C1"),
    }
}

impl Quotient {
    fn reduce_box(&self, p: LatticePoint) -> LatticePoint {
        LatticePoint {
            x: self.x_lo + (p.x - self.x_lo).rem_euclid(self.period_x),
            y: self.y_lo + (p.y - self.y_lo).rem_euclid(self.period_y),
        }
    }

    fn canonical(&self, p: LatticePoint) -> LatticePoint {
        self.cosets
            .iter()
            .map(|c| self.reduce_box(c.apply(p)))
            .min_by_key(|&r| (self.key)(r))
            .expect("at least the identity coset")
    }
}

/// The representative of `pt`'s orbit under the symmetry group of `comp`.
///
/// Representatives lie in the usual fundamental domains: `0 ≤ x ≤ |w|` for
/// `C1` with odd `q`; `2|x| ≤ |w|` and `0 < y < 2q` (shifted up by 2 for
/// `C3`) for even `q`; `1 ≤ x ≤ |w|`, `y ∈ {1, 3}` for `C2`.
///
/// Panics if `comp` is `C3` and `q` is odd.
pub fn canonical_rep(pt: LatticePoint, params: &MontesinosParams, comp: Component) -> LatticePoint {
    quotient(params, comp).canonical(pt)
}

/// The lattice model of `Q₂(L)`: one labelled quotient graph per component,
/// assembled into a quandle table.
#[derive(Clone, Debug)]
pub struct LatticeModel {
    pub params: MontesinosParams,
    pub quandle: FiniteQuandle,
    /// Component and canonical point of each element.
    pub points: Vec<(Component, LatticePoint)>,
    index: HashMap<(Component, LatticePoint), usize>,
}

impl LatticeModel {
    pub fn element_at(&self, comp: Component, pt: LatticePoint) -> Option<usize> {
        let c = canonical_rep(pt, &self.params, comp);
        self.index.get(&(comp, c)).copied()
    }

    pub fn elements_of(&self, comp: Component) -> Vec<usize> {
        (0..self.points.len())
            .filter(|&i| self.points[i].0 == comp)
            .collect()
    }

    pub fn components(&self) -> Vec<Component> {
        if self.params.q_is_odd() {
            vec![Component::C1, Component::C2]
        } else {
            vec![Component::C1, Component::C2, Component::C3]
        }
    }
}

/// Builds the model.
///
/// Generator 1 sits at `(0, 1)` in `C1` and generator 2 at `(0, 1)` in `C2`.
/// For even `q` generator 3 sits at `(0, 1)` in `C3`; for odd `q` it is the
/// end of the word of `μ` traced from generator 1.
pub fn build_model(params: &MontesinosParams) -> Result<LatticeModel> {
    let origin = LatticePoint::new(0, 1);
    let comps: Vec<Component> = if params.q_is_odd() {
        vec![Component::C1, Component::C2]
    } else {
        vec![Component::C1, Component::C2, Component::C3]
    };

    let mut points: Vec<(Component, LatticePoint)> = Vec::new();
    let mut index: HashMap<(Component, LatticePoint), usize> = HashMap::new();
    for &comp in &comps {
        let quot = quotient(params, comp);
        let start = quot.canonical(origin);
        let mut queue = VecDeque::from([start]);
        index.insert((comp, start), points.len());
        points.push((comp, start));
        while let Some(v) = queue.pop_front() {
            for g in 1..=3 {
                let u = quot.canonical(lattice_step(v, Gen::new(g)));
                if let std::collections::hash_map::Entry::Vacant(e) = index.entry((comp, u)) {
                    e.insert(points.len());
                    points.push((comp, u));
                    queue.push_back(u);
                }
            }
        }
    }

    let perms: Vec<Vec<usize>> = (1..=3)
        .map(|g| {
            points
                .iter()
                .map(|&(comp, v)| {
                    let u = canonical_rep(lattice_step(v, Gen::new(g)), params, comp);
                    index[&(comp, u)]
                })
                .collect()
        })
        .collect();

    let g1 = index[&(Component::C1, canonical_rep(origin, params, Component::C1))];
    let g2 = index[&(Component::C2, canonical_rep(origin, params, Component::C2))];
    let g3 = if params.q_is_odd() {
        let mu = rewritten_presentation_with_sign(params, 1)
            .relations()
            .iter()
            .find(|r| r.name.as_deref() == Some("mu"))
            .map(|r| r.rhs.word.clone())
            .expect("odd q has a relation mu");
        let end = trace_point(origin, &mu);
        index[&(Component::C1, canonical_rep(end, params, Component::C1))]
    } else {
        index[&(Component::C3, canonical_rep(origin, params, Component::C3))]
    };

    let names = vec!["1".to_string(), "2".to_string(), "3".to_string()];
    let quandle = FiniteQuandle::from_cayley(&perms, vec![g1, g2, g3], names)?;
    Ok(LatticeModel {
        params: *params,
        quandle,
        points,
        index,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::Word;

    fn mp(p: i64, q: i64, e: i64) -> MontesinosParams {
        MontesinosParams::new(p, q, e).unwrap()
    }

    fn pt(x: i64, y: i64) -> LatticePoint {
        LatticePoint::new(x, y)
    }

    #[test]
    fn far_point_reduces_to_origin() {
        let params = mp(3, 5, 3);
        let (q, w) = (params.q(), params.abs_w());
        let far = pt(-2 * q * w, -8 * q * w + 1);
        assert_eq!(canonical_rep(far, &params, Component::C1), pt(0, 1));
        assert_eq!(canonical_rep(pt(0, 1), &params, Component::C1), pt(0, 1));
        assert_eq!(canonical_rep(pt(0, -1), &params, Component::C1), pt(0, 1));
    }

    #[test]
    fn reps_idempotent_and_in_domain() {
        for params in MontesinosParams::sweep(6, -2, 4) {
            let (q, w) = (params.q(), params.abs_w());
            let comps: &[Component] = if params.q_is_odd() {
                &[Component::C1, Component::C2]
            } else {
                &[Component::C1, Component::C2, Component::C3]
            };
            for &comp in comps {
                for x in -3 * w..3 * w {
                    for k in -3 * q..3 * q {
                        let c = canonical_rep(pt(x, 2 * k + 1), &params, comp);
                        assert_eq!(canonical_rep(c, &params, comp), c);
                        match (comp, params.q_is_odd()) {
                            (Component::C2, _) => {
                                assert!((1..=w).contains(&c.x) && (c.y == 1 || c.y == 3))
                            }
                            (Component::C1, true) => {
                                assert!((0..=w).contains(&c.x) && (0..4 * q).contains(&c.y))
                            }
                            (Component::C1, false) => {
                                assert!(2 * c.x.abs() <= w && 0 < c.y && c.y < 2 * q)
                            }
                            (Component::C3, false) => {
                                assert!(2 * c.x.abs() <= w && 2 < c.y && c.y < 2 * q + 2)
                            }
                            _ => unreachable!(),
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn model_orders() {
        for params in MontesinosParams::sweep(7, -2, 4) {
            let m = build_model(&params).unwrap();
            assert_eq!(
                m.quandle.order() as u64,
                params.predicted_order(),
                "{params}"
            );
            let sizes: Vec<u64> = m
                .quandle
                .component_sizes()
                .iter()
                .map(|&s| s as u64)
                .collect();
            assert_eq!(sizes, params.predicted_component_sizes(), "{params}");
            assert!(m.quandle.axioms_check().is_ok(), "{params}");
        }
    }

    #[test]
    fn third_generator_for_353() {
        let params = mp(3, 5, 3);
        let m = build_model(&params).unwrap();
        let g3 = m.quandle.generator_elements()[2];
        // (w, ±2q ± 1) all represent generator 3
        assert_eq!(m.points[g3], (Component::C1, pt(7, 9)));
        for y in [11, 9, -9, -11] {
            assert_eq!(m.element_at(Component::C1, pt(7, y)), Some(g3));
        }
    }

    #[test]
    fn c3_is_c1_with_labels_swapped() {
        // ψ(x, y) = (−x, y + 2) carries 1-edges to 3-edges and fixes 2-edges
        for params in MontesinosParams::sweep(8, -2, 4) {
            if params.q_is_odd() {
                continue;
            }
            let m = build_model(&params).unwrap();
            let q = &m.quandle;
            let psi = |i: usize| {
                let (comp, p) = m.points[i];
                assert_eq!(comp, Component::C1);
                m.element_at(Component::C3, pt(-p.x, p.y + 2)).unwrap()
            };
            let c1 = m.elements_of(Component::C1);
            let c3 = m.elements_of(Component::C3);
            let mut image: Vec<usize> = c1.iter().map(|&i| psi(i)).collect();
            image.sort_unstable();
            assert_eq!(image, c3);
            let gens = q.generator_elements();
            for &v in &c1 {
                assert_eq!(psi(q.op(v, gens[0])), q.op(psi(v), gens[2]));
                assert_eq!(psi(q.op(v, gens[2])), q.op(psi(v), gens[0]));
                assert_eq!(psi(q.op(v, gens[1])), q.op(psi(v), gens[1]));
            }
        }
    }

    #[test]
    fn generator_loops() {
        for params in MontesinosParams::sweep(6, -1, 3) {
            let m = build_model(&params).unwrap();
            let q = &m.quandle;
            for (i, &g) in q.generator_elements().iter().enumerate() {
                let word = Word::new(vec![Gen::from_index(i)]);
                assert_eq!(crate::words::apply_word(q, g, &word).unwrap(), g);
            }
        }
    }
}
