//! Winker's diagramming method.
//!
//! Starting from one vertex per generator, each primary relation
//! `x_j^w = x_k` is traced and collapsed in order; then every secondary
//! relation `y^{reverse(w) x_j w x_k} = y` is traced at every vertex in label
//! order, with missing edges filled in as new vertices, until a full pass
//! neither creates a vertex nor identifies two. A finished graph is the Cayley
//! graph of the presented quandle.

mod graph;
mod iso;
mod quandle;

use std::fmt;

use thiserror::Error;

use crate::error::{Error as CrateError, Result};
use crate::words::{Gen, Word};

pub use graph::DiagramGraph;
pub use iso::{element_keys, isomorphic, search_isomorphisms, verify_isomorphism};
pub use quandle::{AxiomViolation, FiniteQuandle};

pub const DEFAULT_MAX_VERTICES: usize = 100_000;

/// The vertex budget ran out. The presented quandle may be infinite, or just
/// larger than the budget; nothing more is claimed.
#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
#[error("budget exceeded: more than {max_vertices} vertices ({live_vertices} live)")]
pub struct BudgetExceeded {
    pub max_vertices: usize,
    pub live_vertices: usize,
}

/// `base^{word}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub base: Gen,
    pub word: Word,
}

impl Term {
    pub fn new(base: Gen, word: Word) -> Self {
        Term { base, word }
    }

    pub fn bare(base: Gen) -> Self {
        Term {
            base,
            word: Word::empty(),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            write!(f, "{}", self.base)
        } else {
            write!(f, "{}^({})", self.base, self.word)
        }
    }
}

/// `lhs = rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    pub lhs: Term,
    pub rhs: Term,
    /// Optional label (e.g. `R2`, `theta_3_1`); not part of the algebra.
    pub name: Option<String>,
}

impl Relation {
    pub fn new(lhs: Term, rhs: Term) -> Self {
        Relation {
            lhs,
            rhs,
            name: None,
        }
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    fn letters(&self) -> impl Iterator<Item = Gen> + '_ {
        [self.lhs.base, self.rhs.base]
            .into_iter()
            .chain(self.lhs.word.letters().iter().copied())
            .chain(self.rhs.word.letters().iter().copied())
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

/// Standard form `base^{word} = target`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StandardRelation {
    pub base: Gen,
    pub word: Word,
    pub target: Gen,
}

/// Rewrites `a^X = b^Y` as `a^{X·reverse(Y)} = b`. A side without exponent is
/// used as the target so that no reversal is needed.
pub fn normalize_relation(r: &Relation) -> StandardRelation {
    let (l, rt) = (&r.lhs, &r.rhs);
    if rt.word.is_empty() {
        StandardRelation {
            base: l.base,
            word: l.word.clone(),
            target: rt.base,
        }
    } else if l.word.is_empty() {
        StandardRelation {
            base: rt.base,
            word: rt.word.clone(),
            target: l.base,
        }
    } else {
        StandardRelation {
            base: l.base,
            word: l.word.concat(&rt.word.reverse()),
            target: rt.base,
        }
    }
}

/// Loop word `reverse(w) x_j w x_k` of the secondary relation: tracing it from
/// any element must return to that element.
pub fn secondary_of(s: &StandardRelation) -> Word {
    let mut out = s.word.reverse();
    out.push(s.base);
    let mut out = out.concat(&s.word);
    out.push(s.target);
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    names: Vec<String>,
    relations: Vec<Relation>,
}

impl Presentation {
    /// Generators are numbered `1..=names.len()` in the given order.
    pub fn new(names: Vec<String>, relations: Vec<Relation>) -> Result<Self> {
        if names.is_empty() {
            return Err(CrateError::NoGenerators);
        }
        let n = names.len();
        for r in &relations {
            if let Some(g) = r.letters().find(|g| g.index() >= n) {
                return Err(CrateError::UnknownGenerator(g.id() as u32));
            }
        }
        Ok(Presentation { names, relations })
    }

    /// Generators named `1`, `2`, … `n`.
    pub fn numbered(n: usize, relations: Vec<Relation>) -> Result<Self> {
        Self::new((1..=n).map(|i| i.to_string()).collect(), relations)
    }

    pub fn generator_count(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn with_relations(&self, relations: Vec<Relation>) -> Result<Self> {
        Self::new(self.names.clone(), relations)
    }

    pub fn standard_relations(&self) -> Vec<StandardRelation> {
        self.relations.iter().map(normalize_relation).collect()
    }

    pub fn secondary_words(&self) -> Vec<Word> {
        self.standard_relations().iter().map(secondary_of).collect()
    }

    /// Canonical text form used for hashing and display.
    pub fn to_text(&self) -> String {
        let mut s = format!("gens: {}\n", self.names.join(" "));
        let name = |g: Gen| self.names[g.index()].as_str();
        let term = |t: &Term| {
            if t.word.is_empty() {
                name(t.base).to_string()
            } else {
                let w: Vec<&str> = t.word.letters().iter().map(|&g| name(g)).collect();
                format!("{}^({})", name(t.base), w.join(" "))
            }
        };
        for r in &self.relations {
            s.push_str(&format!("rel: {} = {}\n", term(&r.lhs), term(&r.rhs)));
        }
        s
    }
}

/// Counters from a finished enumeration.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumerationStats {
    pub vertices_created: usize,
    pub identifications: u64,
    /// Secondary passes, including the final pass that changed nothing.
    pub passes: usize,
}

/// Runs Winker's method on `p`. `max_vertices` bounds the number of vertices
/// ever created.
pub fn enumerate(
    p: &Presentation,
    max_vertices: usize,
) -> std::result::Result<FiniteQuandle, BudgetExceeded> {
    enumerate_with_stats(p, max_vertices).map(|(q, _)| q)
}

pub fn enumerate_with_stats(
    p: &Presentation,
    max_vertices: usize,
) -> std::result::Result<(FiniteQuandle, EnumerationStats), BudgetExceeded> {
    let k = p.generator_count();
    let mut g = DiagramGraph::new(k, max_vertices);

    // generator vertices, each with its idempotence loop
    for i in 0..k {
        let v = g.add_vertex()?;
        g.set_edge(v, i, v);
    }

    let primaries = p.standard_relations();
    for r in &primaries {
        let start = g.find(r.base.index());
        let end = g.find(r.target.index());
        g.trace_closed(start, &r.word, end)?;
        g.collapse();
    }

    let secondaries: Vec<Word> = primaries.iter().map(secondary_of).collect();
    let mut passes = 0;
    loop {
        passes += 1;
        let created = g.created();
        let merges = g.merges();
        let mut v = 0;
        while v < g.created() {
            for s in &secondaries {
                if !g.is_live(v) {
                    break;
                }
                g.trace_closed(v, s, v)?;
                g.collapse();
            }
            if g.is_live(v) {
                for gen in 0..k {
                    if g.edge(v, gen).is_none() {
                        let u = g.add_vertex()?;
                        g.set_edge(v, gen, u);
                    }
                }
            }
            v += 1;
        }
        if g.created() == created && g.merges() == merges {
            break;
        }
    }

    let (perms, map) = g.compact();
    let gen_elems: Vec<usize> = (0..k)
        .map(|i| map[g.find(i)].expect("representative is live"))
        .collect();
    let q = FiniteQuandle::from_cayley(&perms, gen_elems, p.names().to_vec())
        .expect("completed diagram is a Cayley graph");
    let stats = EnumerationStats {
        vertices_created: g.created(),
        identifications: g.merges(),
        passes,
    };
    Ok((q, stats))
}

/// Cayley-graph components of `q`.
pub fn components(q: &FiniteQuandle) -> Vec<Vec<usize>> {
    q.components()
}

/// Whether `base^{word} = target` holds in `q`.
pub fn relation_holds(q: &FiniteQuandle, r: &Relation) -> Result<bool> {
    let eval = |t: &Term| -> Result<usize> {
        let b = q
            .generator_element(t.base)
            .ok_or(CrateError::UnknownGenerator(t.base.id() as u32))?;
        crate::words::apply_word(q, b, &t.word)
    };
    Ok(eval(&r.lhs)? == eval(&r.rhs)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(i: u16) -> Gen {
        Gen::new(i)
    }

    fn trefoil() -> Presentation {
        // 1^2 = 2^1
        let r = Relation::new(
            Term::new(g(1), Word::digits("2")),
            Term::new(g(2), Word::digits("1")),
        );
        Presentation::numbered(2, vec![r]).unwrap()
    }

    #[test]
    fn normalize_examples() {
        let r = Relation::new(
            Term::new(g(2), Word::digits("1")),
            Term::new(g(2), Word::digits("3")),
        );
        assert_eq!(
            normalize_relation(&r),
            StandardRelation {
                base: g(2),
                word: Word::digits("13"),
                target: g(2)
            }
        );
        let r = Relation::new(
            Term::new(g(1), Word::digits("2")),
            Term::new(g(2), Word::digits("1")),
        );
        assert_eq!(normalize_relation(&r).word, Word::digits("21"));
        let w = Word::digits("2123");
        let r = Relation::new(Term::bare(g(3)), Term::new(g(1), w.clone()));
        assert_eq!(
            normalize_relation(&r),
            StandardRelation {
                base: g(1),
                word: w,
                target: g(3)
            }
        );
    }

    #[test]
    fn secondary_examples() {
        let s = |b, w: &str, t| StandardRelation {
            base: g(b),
            word: Word::digits(w),
            target: g(t),
        };
        assert_eq!(secondary_of(&s(1, "21", 2)), Word::digits("121212"));
        assert_eq!(secondary_of(&s(2, "13", 2)), Word::digits("312132"));
        assert_eq!(secondary_of(&s(1, "", 1)), Word::digits("11"));
    }

    #[test]
    fn trefoil_has_three_elements() {
        let (q, stats) = enumerate_with_stats(&trefoil(), 1000).unwrap();
        assert_eq!(q.order(), 3);
        assert_eq!(stats.vertices_created, 3);
        assert_eq!(q.generator_elements(), &[0, 1]);
        assert_eq!(q.axioms_check(), Ok(()));
        // the secondary loop closes everywhere
        for v in 0..3 {
            assert_eq!(
                crate::words::apply_word(&q, v, &Word::digits("121212")).unwrap(),
                v
            );
        }
    }

    #[test]
    fn one_generator() {
        let p = Presentation::numbered(1, vec![]).unwrap();
        let q = enumerate(&p, 10).unwrap();
        assert_eq!(q.order(), 1);
        assert_eq!(q.op(0, 0), 0);
        assert_eq!(q.component_count(), 1);
    }

    #[test]
    fn free_two_generator_exceeds_budget() {
        let p = Presentation::numbered(2, vec![]).unwrap();
        let err = enumerate(&p, 1000).unwrap_err();
        assert_eq!(err.max_vertices, 1000);
    }

    #[test]
    fn budget_smaller_than_generators() {
        let p = Presentation::numbered(3, vec![]).unwrap();
        assert!(enumerate(&p, 2).is_err());
    }

    #[test]
    fn coinciding_generators() {
        // 1 = 2 collapses to a single element
        let r = Relation::new(Term::bare(g(1)), Term::bare(g(2)));
        let p = Presentation::numbered(2, vec![r]).unwrap();
        let q = enumerate(&p, 100).unwrap();
        assert_eq!(q.order(), 1);
        assert_eq!(q.generator_elements(), &[0, 0]);
    }

    #[test]
    fn unknown_generator_rejected() {
        let r = Relation::new(Term::bare(g(1)), Term::new(g(1), Word::digits("4")));
        assert_eq!(
            Presentation::numbered(2, vec![r]),
            Err(CrateError::UnknownGenerator(4))
        );
    }

    #[test]
    fn two_bridge_cores() {
        // ⟨1,2 | 1^{2121} = 2⟩ presents Core(Z/5)
        let r = Relation::new(Term::new(g(1), Word::digits("2121")), Term::bare(g(2)));
        let p = Presentation::numbered(2, vec![r]).unwrap();
        let q = enumerate(&p, 1000).unwrap();
        assert_eq!(q.order(), 5);
        assert!(isomorphic(&q, &FiniteQuandle::core_cyclic(5)).is_some());
    }

    #[test]
    fn deterministic() {
        let a = enumerate(&trefoil(), 100).unwrap();
        let b = enumerate(&trefoil(), 100).unwrap();
        assert_eq!(a, b);
    }
}
