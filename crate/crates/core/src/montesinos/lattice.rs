//! The infinite labelled tiling.
//!
//! Vertices are the points `(x, y)` with `y` odd. Each vertex has one edge per
//! generator:
//!
//! * `2` is horizontal, to `(x + 1, y)` when `y ≡ 2x + 1 (mod 4)` and to
//!   `(x − 1, y)` otherwise;
//! * `1` and `3` are vertical; the edge between `(x, y)` and `(x, y + 2)` is
//!   labelled `3` if `y + 2 ≡ 3 (mod 4)` and `1` if `y + 2 ≡ 1 (mod 4)`.
//!
//! The faces are hexagons reading `121323` around their boundary.

use std::fmt;
use std::ops::{Add, Neg};

use crate::words::{Gen, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    /// Panics if `y` is even.
    pub fn new(x: i64, y: i64) -> Self {
        assert!(y.rem_euclid(2) == 1, "lattice vertices have odd y");
        LatticePoint { x, y }
    }

    pub fn vertex_type(&self) -> VertexType {
        match (self.x.rem_euclid(2), self.y.rem_euclid(4)) {
            (0, 1) => VertexType::T01,
            (0, 3) => VertexType::T03,
            (1, 1) => VertexType::T11,
            (1, 3) => VertexType::T13,
            _ => unreachable!("y is odd"),
        }
    }

    pub fn offset(&self, d: Displacement) -> LatticePoint {
        LatticePoint::new(self.x + d.dx, self.y + d.dy)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// The class `(x mod 2, y mod 4)` of a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexType {
    T01,
    T03,
    T11,
    T13,
}

impl VertexType {
    pub const ALL: [VertexType; 4] = [
        VertexType::T01,
        VertexType::T03,
        VertexType::T11,
        VertexType::T13,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    /// The representative vertex of this type closest to the origin tile.
    pub fn representative(self) -> LatticePoint {
        match self {
            VertexType::T01 => LatticePoint::new(0, 1),
            VertexType::T03 => LatticePoint::new(0, 3),
            VertexType::T11 => LatticePoint::new(1, 1),
            VertexType::T13 => LatticePoint::new(1, 3),
        }
    }
}

impl fmt::Display for VertexType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            VertexType::T01 => "01",
            VertexType::T03 => "03",
            VertexType::T11 => "11",
            VertexType::T13 => "13",
        };
        f.write_str(s)
    }
}

/// Follows the edge labelled `g` from `pt`.
///
/// Panics unless `g` is 1, 2 or 3.
pub fn lattice_step(pt: LatticePoint, g: Gen) -> LatticePoint {
    let LatticePoint { x, y } = pt;
    let y_mod = y.rem_euclid(4);
    match g.id() {
        2 => {
            if y_mod == (2 * x + 1).rem_euclid(4) {
                LatticePoint { x: x + 1, y }
            } else {
                LatticePoint { x: x - 1, y }
            }
        }
        // The edge above (x, y) has upper endpoint y + 2, labelled 3 when
        // y + 2 ≡ 3, i.e. y ≡ 1; the edge below has upper endpoint y.
        3 => {
            if y_mod == 1 {
                LatticePoint { x, y: y + 2 }
            } else {
                LatticePoint { x, y: y - 2 }
            }
        }
        1 => {
            if y_mod == 1 {
                LatticePoint { x, y: y - 2 }
            } else {
                LatticePoint { x, y: y + 2 }
            }
        }
        other => panic!("the tiling carries generators 1, 2, 3 only (got {other})"),
    }
}

/// End point of `word` traced from `start`.
pub fn trace_point(start: LatticePoint, word: &Word) -> LatticePoint {
    word.letters()
        .iter()
        .fold(start, |pt, &g| lattice_step(pt, g))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Displacement {
    pub dx: i64,
    pub dy: i64,
}

impl Displacement {
    pub const fn new(dx: i64, dy: i64) -> Self {
        Displacement { dx, dy }
    }

    pub fn scale(self, k: i64) -> Self {
        Displacement::new(self.dx * k, self.dy * k)
    }
}

impl Add for Displacement {
    type Output = Displacement;
    fn add(self, o: Displacement) -> Displacement {
        Displacement::new(self.dx + o.dx, self.dy + o.dy)
    }
}

impl Neg for Displacement {
    type Output = Displacement;
    fn neg(self) -> Displacement {
        Displacement::new(-self.dx, -self.dy)
    }
}

impl fmt::Display for Displacement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}, {}>", self.dx, self.dy)
    }
}

/// Displacement of `word` traced from a vertex of type `t`. Translations by
/// `(2a, 4b)` preserve labels, so the type's representative suffices.
pub fn displacement(word: &Word, t: VertexType) -> Displacement {
    let a = t.representative();
    let b = trace_point(a, word);
    Displacement::new(b.x - a.x, b.y - a.y)
}

/// Permutation of the four vertex types induced by tracing a word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TypePermutation([VertexType; 4]);

impl TypePermutation {
    pub fn identity() -> Self {
        TypePermutation(VertexType::ALL)
    }

    pub fn apply(&self, t: VertexType) -> VertexType {
        self.0[t.index()]
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &TypePermutation) -> TypePermutation {
        TypePermutation(VertexType::ALL.map(|t| other.apply(self.apply(t))))
    }

    pub fn is_bijection(&self) -> bool {
        let mut seen = [false; 4];
        for t in self.0 {
            seen[t.index()] = true;
        }
        seen.iter().all(|&s| s)
    }
}

impl fmt::Display for TypePermutation {
    /// Cycle notation, e.g. `(01 11)(03 13)`; `id` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut done = [false; 4];
        let mut any = false;
        for t in VertexType::ALL {
            if done[t.index()] || self.apply(t) == t {
                continue;
            }
            any = true;
            write!(f, "({t}")?;
            done[t.index()] = true;
            let mut c = self.apply(t);
            while c != t {
                write!(f, " {c}")?;
                done[c.index()] = true;
                c = self.apply(c);
            }
            write!(f, ")")?;
        }
        if !any {
            f.write_str("id")?;
        }
        Ok(())
    }
}

/// Composes the single-letter permutations of `word`.
pub fn sigma(word: &Word) -> TypePermutation {
    let letter = |g: Gen| {
        TypePermutation(VertexType::ALL.map(|t| lattice_step(t.representative(), g).vertex_type()))
    };
    word.letters()
        .iter()
        .fold(TypePermutation::identity(), |acc, &g| acc.then(&letter(g)))
}

/// `(x, y) ↦ (sx·x + tx, sy·y + ty)` with `sx, sy ∈ {±1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Affine {
    pub sx: i64,
    pub sy: i64,
    pub tx: i64,
    pub ty: i64,
}

impl Affine {
    pub const IDENTITY: Affine = Affine {
        sx: 1,
        sy: 1,
        tx: 0,
        ty: 0,
    };

    pub fn apply(&self, p: LatticePoint) -> LatticePoint {
        LatticePoint {
            x: self.sx * p.x + self.tx,
            y: self.sy * p.y + self.ty,
        }
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Affine) -> Affine {
        Affine {
            sx: self.sx * other.sx,
            sy: self.sy * other.sy,
            tx: self.sx * other.tx + self.tx,
            ty: self.sy * other.ty + self.ty,
        }
    }
}

/// Label-preserving symmetries of the tiling.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LatticeTransform {
    /// Half-turn about `(cx, 2·half_cy)`.
    Rotation { cx: i64, half_cy: i64 },
    /// `(x, y) ↦ (x + 2·a, y + 4·b)`.
    Translation { a: i64, b: i64 },
    /// Reflection across the line `x = n + 1/2`.
    Reflection { n: i64 },
    /// Vertical shift by `4·k` after reflecting across `x = m + 1/2`.
    Glide { k: i64, m: i64 },
}

impl LatticeTransform {
    pub fn rotation(cx: i64, cy: i64) -> Self {
        assert!(cy % 2 == 0, "rotation centres have even y");
        LatticeTransform::Rotation {
            cx,
            half_cy: cy / 2,
        }
    }

    pub fn affine(&self) -> Affine {
        match *self {
            LatticeTransform::Rotation { cx, half_cy } => Affine {
                sx: -1,
                sy: -1,
                tx: 2 * cx,
                ty: 4 * half_cy,
            },
            LatticeTransform::Translation { a, b } => Affine {
                sx: 1,
                sy: 1,
                tx: 2 * a,
                ty: 4 * b,
            },
            LatticeTransform::Reflection { n } => Affine {
                sx: -1,
                sy: 1,
                tx: 2 * n + 1,
                ty: 0,
            },
            LatticeTransform::Glide { k, m } => Affine {
                sx: -1,
                sy: 1,
                tx: 2 * m + 1,
                ty: 4 * k,
            },
        }
    }

    pub fn apply(&self, p: LatticePoint) -> LatticePoint {
        self.affine().apply(p)
    }
}
