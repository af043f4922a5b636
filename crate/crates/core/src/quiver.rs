//! Type A quivers with arbitrary orientation and the interval model of
//! their indecomposable representations.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Direction of the arrow between vertices `i` and `i+1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ArrowDir {
    /// `i -> i+1`
    Right,
    /// `i <- i+1`
    Left,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuiverError {
    TooFewVertices(usize),
    OrientationLength { expected: usize, got: usize },
    BadOrientationChar(char),
    VertexOutOfRange { vertex: usize, n: usize },
    /// MAR-layer operations require n >= 3.
    NeedsAtLeastThree(usize),
    BadInterval { lo: usize, hi: usize, n: usize },
}

impl fmt::Display for QuiverError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuiverError::TooFewVertices(n) => write!(f, "need at least 2 vertices, got {n}"),
            QuiverError::OrientationLength { expected, got } => {
                write!(f, "orientation word must have length {expected}, got {got}")
            }
            QuiverError::BadOrientationChar(c) => {
                write!(f, "orientation word may only contain 'R' and 'L', got {c:?}")
            }
            QuiverError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range 1..={n}")
            }
            QuiverError::NeedsAtLeastThree(n) => {
                write!(f, "this operation requires n >= 3, got n = {n}")
            }
            QuiverError::BadInterval { lo, hi, n } => {
                write!(f, "invalid interval [{lo},{hi}] for n = {n}")
            }
        }
    }
}

/// A quiver of type A_n: vertices 1..=n, one arrow between each pair of
/// consecutive vertices, oriented by a word over {R, L}.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TypeAQuiver {
    n: usize,
    orientation: Vec<ArrowDir>,
}

/// An indecomposable representation, identified by its support interval
/// `[lo, hi]` inside `[n]`. The dimension vector is the 0/1 indicator of
/// the interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval {
    pub lo: usize,
    pub hi: usize,
}

impl Interval {
    pub fn new(lo: usize, hi: usize, n: usize) -> Result<Self, QuiverError> {
        if lo >= 1 && lo <= hi && hi <= n {
            Ok(Interval { lo, hi })
        } else {
            Err(QuiverError::BadInterval { lo, hi, n })
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.lo <= v && v <= self.hi
    }

    pub fn dim_vector(&self, n: usize) -> Vec<usize> {
        (1..=n).map(|v| usize::from(self.contains(v))).collect()
    }

    /// Total dimension.
    pub fn dim(&self) -> usize {
        self.hi - self.lo + 1
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

impl TypeAQuiver {
    pub fn new(n: usize, orientation: &str) -> Result<Self, QuiverError> {
        if n < 2 {
            return Err(QuiverError::TooFewVertices(n));
        }
        if orientation.chars().count() != n - 1 {
            return Err(QuiverError::OrientationLength {
                expected: n - 1,
                got: orientation.chars().count(),
            });
        }
        let mut dirs = Vec::with_capacity(n - 1);
        for c in orientation.chars() {
            match c {
                'R' | 'r' => dirs.push(ArrowDir::Right),
                'L' | 'l' => dirs.push(ArrowDir::Left),
                other => return Err(QuiverError::BadOrientationChar(other)),
            }
        }
        Ok(TypeAQuiver { n, orientation: dirs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Direction of the arrow between `i` and `i+1`, for `i` in `1..n`.
    pub fn dir(&self, i: usize) -> ArrowDir {
        self.orientation[i - 1]
    }

    pub fn orientation_word(&self) -> String {
        self.orientation
            .iter()
            .map(|d| match d {
                ArrowDir::Right => 'R',
                ArrowDir::Left => 'L',
            })
            .collect()
    }

    fn check_vertex(&self, i: usize) -> Result<(), QuiverError> {
        if i >= 1 && i <= self.n {
            Ok(())
        } else {
            Err(QuiverError::VertexOutOfRange { vertex: i, n: self.n })
        }
    }

    /// The projective cover P(i): vertices reachable from `i` along arrows.
    pub fn projective(&self, i: usize) -> Result<Interval, QuiverError> {
        self.check_vertex(i)?;
        let mut hi = i;
        while hi < self.n && self.dir(hi) == ArrowDir::Right {
            hi += 1;
        }
        let mut lo = i;
        while lo > 1 && self.dir(lo - 1) == ArrowDir::Left {
            lo -= 1;
        }
        Ok(Interval { lo, hi })
    }

    /// The injective envelope I(i): vertices from which `i` is reachable.
    pub fn injective(&self, i: usize) -> Result<Interval, QuiverError> {
        self.check_vertex(i)?;
        let mut hi = i;
        while hi < self.n && self.dir(hi) == ArrowDir::Left {
            hi += 1;
        }
        let mut lo = i;
        while lo > 1 && self.dir(lo - 1) == ArrowDir::Right {
            lo -= 1;
        }
        Ok(Interval { lo, hi })
    }

    pub fn simple(&self, i: usize) -> Result<Interval, QuiverError> {
        self.check_vertex(i)?;
        Ok(Interval { lo: i, hi: i })
    }

    pub fn is_projective(&self, m: Interval) -> bool {
        (1..=self.n).any(|i| self.projective(i) == Ok(m))
    }

    pub fn is_injective(&self, m: Interval) -> bool {
        (1..=self.n).any(|i| self.injective(i) == Ok(m))
    }

    /// All n(n+1)/2 indecomposables, lexicographic by (lo, hi).
    pub fn indecomposables(&self) -> Vec<Interval> {
        let mut out = Vec::with_capacity(self.n * (self.n + 1) / 2);
        for lo in 1..=self.n {
            for hi in lo..=self.n {
                out.push(Interval { lo, hi });
            }
        }
        out
    }

    /// All 2^(n-1) orientations of A_n.
    pub fn all_orientations(n: usize) -> Result<Vec<TypeAQuiver>, QuiverError> {
        if n < 2 {
            return Err(QuiverError::TooFewVertices(n));
        }
        let mut out = Vec::with_capacity(1 << (n - 1));
        for mask in 0u32..(1 << (n - 1)) {
            let dirs = (0..n - 1)
                .map(|i| {
                    if mask & (1 << i) == 0 {
                        ArrowDir::Right
                    } else {
                        ArrowDir::Left
                    }
                })
                .collect();
            out.push(TypeAQuiver { n, orientation: dirs });
        }
        Ok(out)
    }
}

/// A finite multiset of intervals, kept sorted. `is_basic` holds when all
/// multiplicities are 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ModuleSum {
    summands: Vec<Interval>,
}

impl ModuleSum {
    pub fn new(mut summands: Vec<Interval>) -> Self {
        summands.sort();
        ModuleSum { summands }
    }

    pub fn empty() -> Self {
        ModuleSum { summands: Vec::new() }
    }

    pub fn summands(&self) -> &[Interval] {
        &self.summands
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn is_basic(&self) -> bool {
        self.summands.windows(2).all(|w| w[0] != w[1])
    }

    pub fn contains(&self, iv: Interval) -> bool {
        self.summands.binary_search(&iv).is_ok()
    }

    pub fn push(&mut self, iv: Interval) {
        let idx = self.summands.partition_point(|x| *x < iv);
        self.summands.insert(idx, iv);
    }

    /// Remove one copy of `iv`; returns false if absent.
    pub fn remove(&mut self, iv: Interval) -> bool {
        match self.summands.binary_search(&iv) {
            Ok(idx) => {
                self.summands.remove(idx);
                true
            }
            Err(_) => false,
        }
    }

    pub fn dim_vector(&self, n: usize) -> Vec<usize> {
        let mut d = alloc::vec![0usize; n];
        for iv in &self.summands {
            for v in iv.lo..=iv.hi {
                d[v - 1] += 1;
            }
        }
        d
    }
}

impl FromIterator<Interval> for ModuleSum {
    fn from_iter<T: IntoIterator<Item = Interval>>(iter: T) -> Self {
        ModuleSum::new(iter.into_iter().collect())
    }
}

impl fmt::Display for ModuleSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return write!(f, "0");
        }
        for (k, iv) in self.summands.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{iv}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig1() -> TypeAQuiver {
        TypeAQuiver::new(5, "RLRR").unwrap()
    }

    #[test]
    fn build_validation() {
        assert!(TypeAQuiver::new(5, "RLRR").is_ok());
        assert!(TypeAQuiver::new(2, "R").is_ok());
        assert_eq!(
            TypeAQuiver::new(5, "RLR"),
            Err(QuiverError::OrientationLength { expected: 4, got: 3 })
        );
        assert_eq!(TypeAQuiver::new(1, ""), Err(QuiverError::TooFewVertices(1)));
        assert!(matches!(
            TypeAQuiver::new(3, "RX"),
            Err(QuiverError::BadOrientationChar('X'))
        ));
    }

    #[test]
    fn projectives_fig1() {
        let q = fig1();
        assert_eq!(q.projective(1).unwrap(), Interval { lo: 1, hi: 2 });
        assert_eq!(q.projective(2).unwrap(), Interval { lo: 2, hi: 2 });
        assert_eq!(q.projective(3).unwrap(), Interval { lo: 2, hi: 5 });
        assert_eq!(q.projective(4).unwrap(), Interval { lo: 4, hi: 5 });
        assert_eq!(q.projective(5).unwrap(), Interval { lo: 5, hi: 5 });
        assert!(q.projective(6).is_err());
    }

    #[test]
    fn injectives_fig1() {
        let q = fig1();
        assert_eq!(q.injective(1).unwrap(), Interval { lo: 1, hi: 1 });
        assert_eq!(q.injective(2).unwrap(), Interval { lo: 1, hi: 3 });
        assert_eq!(q.injective(3).unwrap(), Interval { lo: 3, hi: 3 });
        assert_eq!(q.injective(4).unwrap(), Interval { lo: 3, hi: 4 });
        assert_eq!(q.injective(5).unwrap(), Interval { lo: 3, hi: 5 });
    }

    #[test]
    fn linear_extremes() {
        let q = TypeAQuiver::new(6, "RRRRR").unwrap();
        assert_eq!(q.projective(1).unwrap(), Interval { lo: 1, hi: 6 });
        assert_eq!(q.injective(6).unwrap(), Interval { lo: 1, hi: 6 });
        for i in 1..=6 {
            assert_eq!(q.simple(i).unwrap(), Interval { lo: i, hi: i });
        }
    }

    #[test]
    fn indecomposable_counts() {
        for (n, word) in [(5usize, "RLRR"), (2, "R"), (7, "RRRRRR")] {
            let q = TypeAQuiver::new(n, word).unwrap();
            assert_eq!(q.indecomposables().len(), n * (n + 1) / 2);
        }
        let q2 = TypeAQuiver::new(2, "L").unwrap();
        assert_eq!(
            q2.indecomposables(),
            alloc::vec![
                Interval { lo: 1, hi: 1 },
                Interval { lo: 1, hi: 2 },
                Interval { lo: 2, hi: 2 }
            ]
        );
    }

    #[test]
    fn projectives_distinct_and_contain_vertex() {
        for q in TypeAQuiver::all_orientations(6).unwrap() {
            let ps: Vec<_> = (1..=6).map(|i| q.projective(i).unwrap()).collect();
            let is: Vec<_> = (1..=6).map(|i| q.injective(i).unwrap()).collect();
            for i in 1..=6usize {
                assert!(ps[i - 1].contains(i));
                assert!(is[i - 1].contains(i));
                for j in i + 1..=6 {
                    assert_ne!(ps[i - 1], ps[j - 1]);
                    assert_ne!(is[i - 1], is[j - 1]);
                }
            }
            // a projective equal to an injective is the full interval
            for p in &ps {
                for iv in &is {
                    if p == iv {
                        assert_eq!(*p, Interval { lo: 1, hi: 6 });
                    }
                }
            }
        }
    }

    #[test]
    fn module_sum_basics() {
        let a = Interval { lo: 1, hi: 2 };
        let b = Interval { lo: 2, hi: 3 };
        let mut t = ModuleSum::new(alloc::vec![b, a]);
        assert_eq!(t.summands(), &[a, b]);
        assert!(t.is_basic());
        t.push(a);
        assert!(!t.is_basic());
        assert!(t.remove(a));
        assert!(t.is_basic());
        assert_eq!(t.dim_vector(3), alloc::vec![1, 2, 1]);
    }
}
