//! Words over the generators of an involutory quandle.
//!
//! A word `g1 g2 … gk` acts on an element `a` from the right, grouped to the
//! left: `a^{g1 g2 … gk} = ((a ▷ g1) ▷ g2) … ▷ gk`. Since every generator acts
//! as an involution, inverse letters never appear.

use std::fmt;

use crate::error::{Error, Result};
use crate::winker::FiniteQuandle;

/// A generator, identified by its 1-based position in a presentation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gen(u16);

impl Gen {
    /// Panics if `id == 0`.
    pub fn new(id: u16) -> Self {
        assert!(id >= 1, "generator ids are 1-based");
        Gen(id)
    }

    pub fn id(self) -> u16 {
        self.0
    }

    /// 0-based column index.
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize - 1
    }

    pub fn from_index(index: usize) -> Self {
        Gen::new(u16::try_from(index + 1).expect("too many generators"))
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Gen>);

impl Word {
    pub fn new(letters: Vec<Gen>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Builds a word from a string of decimal digits, one generator per digit
    /// (`"232"` is the word `2 3 2`). Whitespace is ignored.
    ///
    /// Panics on anything other than the digits `1`–`9`.
    pub fn digits(s: &str) -> Self {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| {
                let d = c.to_digit(10).filter(|&d| d >= 1).unwrap_or_else(|| {
                    panic!("invalid generator digit {c:?}");
                });
                Gen::new(d as u16)
            })
            .collect()
    }

    pub fn letters(&self) -> &[Gen] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn push(&mut self, g: Gen) {
        self.0.push(g);
    }

    /// The word written backwards.
    pub fn reverse(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// `[X]^n`: `n` copies of `X` for `n > 0`, the empty word for `n = 0`, and
    /// `[reverse(X)]^{-n}` for `n < 0`.
    pub fn power(&self, n: i64) -> Word {
        let (base, count) = if n >= 0 {
            (self.clone(), n as usize)
        } else {
            (self.reverse(), n.unsigned_abs() as usize)
        };
        Word(base.0.repeat(count))
    }

    /// Cancels adjacent repeated letters (`gg` acts trivially) until none
    /// remain.
    pub fn reduced(&self) -> Word {
        let mut out: Vec<Gen> = Vec::with_capacity(self.len());
        for &g in &self.0 {
            if out.last() == Some(&g) {
                out.pop();
            } else {
                out.push(g);
            }
        }
        Word(out)
    }

    pub fn is_palindrome(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    pub fn max_gen(&self) -> Option<Gen> {
        self.0.iter().copied().max()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let compact = self.0.iter().all(|g| g.0 < 10);
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 && !compact {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl FromIterator<Gen> for Word {
    fn from_iter<I: IntoIterator<Item = Gen>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a Word {
    type Item = &'a Gen;
    type IntoIter = std::slice::Iter<'a, Gen>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Concatenation of several words.
pub fn cat(parts: &[&Word]) -> Word {
    let mut v = Vec::with_capacity(parts.iter().map(|w| w.len()).sum());
    for p in parts {
        v.extend_from_slice(&p.0);
    }
    Word(v)
}

/// `[X]^n`, free-function form.
pub fn expand_power(x: &Word, n: i64) -> Word {
    x.power(n)
}

pub fn reverse(x: &Word) -> Word {
    x.reverse()
}

/// One exponent entry in a [`NestedTerm`]: either a bare generator or a
/// nested element expression acting as a whole.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Exponent {
    Letter(Gen),
    Term(NestedTerm),
}

/// An element expression `base^{e1 e2 … ek}` whose exponents may themselves
/// be nested expressions, e.g. `x^{y^{z}}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NestedTerm {
    pub base: Gen,
    pub tower: Vec<Exponent>,
}

impl NestedTerm {
    pub fn new(base: Gen, tower: Vec<Exponent>) -> Self {
        NestedTerm { base, tower }
    }

    pub fn flat(base: Gen, word: &Word) -> Self {
        NestedTerm {
            base,
            tower: word
                .letters()
                .iter()
                .copied()
                .map(Exponent::Letter)
                .collect(),
        }
    }

    /// Rewrites the term in left-associated form.
    ///
    /// Acting by the element `y^{W}` is the same as acting by the word
    /// `reverse(W) y W`, so `x^{y^{z1…zk}}` becomes `x^{zk…z1 y z1…zk}`.
    pub fn flatten(&self) -> (Gen, Word) {
        let mut out = Vec::new();
        for e in &self.tower {
            match e {
                Exponent::Letter(g) => out.push(*g),
                Exponent::Term(t) => {
                    let (b, w) = t.flatten();
                    out.extend(w.letters().iter().rev().copied());
                    out.push(b);
                    out.extend_from_slice(w.letters());
                }
            }
        }
        (self.base, Word(out))
    }
}

pub fn flatten(t: &NestedTerm) -> (Gen, Word) {
    t.flatten()
}

/// Evaluates `a^{x}` in `q`, letting each letter act through the element the
/// quandle assigns to that generator.
pub fn apply_word(q: &FiniteQuandle, a: usize, x: &Word) -> Result<usize> {
    if a >= q.order() {
        return Err(Error::ElementOutOfRange(a));
    }
    let mut cur = a;
    for &g in x {
        let ge = q
            .generator_element(g)
            .ok_or(Error::UnknownGenerator(g.id() as u32))?;
        cur = q.op(cur, ge);
    }
    Ok(cur)
}
