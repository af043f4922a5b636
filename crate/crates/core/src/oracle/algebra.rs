//! Bound quiver algebras with monomial relations: path bases and
//! projective representations.

use alloc::vec::Vec;
use core::fmt;

use super::field::Field;
use super::matrix::Matrix;
use super::rep::Rep;

pub const PATH_LENGTH_CAP: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    PathBasisOverflow,
    ShapeMismatch,
    NotABrick { catalog_index: usize, end_dim: usize },
    UnmatchedSummand,
    RelationViolated { relation: usize },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::PathBasisOverflow => {
                write!(f, "path basis exceeds length cap {PATH_LENGTH_CAP}")
            }
            OracleError::ShapeMismatch => write!(f, "representation shape mismatch"),
            OracleError::NotABrick { catalog_index, end_dim } => write!(
                f,
                "catalog entry {catalog_index} has endomorphism dimension {end_dim}, not a brick"
            ),
            OracleError::UnmatchedSummand => {
                write!(f, "nonzero residual module matches no catalog entry")
            }
            OracleError::RelationViolated { relation } => {
                write!(f, "relation {relation} does not vanish on the representation")
            }
        }
    }
}

/// A quiver with monomial relations. Vertices are 0-based; a relation is
/// a path given as a sequence of composable arrow ids (length >= 2),
/// read left to right: `[a, b]` is the path "first a, then b".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundQuiver {
    pub n_vertices: usize,
    /// (source, target) per arrow.
    pub arrows: Vec<(usize, usize)>,
    pub relations: Vec<Vec<usize>>,
}

/// A path in the quiver: the trivial path at `start` when `arrows` is empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Path {
    pub start: usize,
    pub arrows: Vec<usize>,
}

impl BoundQuiver {
    pub fn new(
        n_vertices: usize,
        arrows: Vec<(usize, usize)>,
        relations: Vec<Vec<usize>>,
    ) -> Self {
        for r in &relations {
            assert!(r.len() >= 2, "monomial relations have length >= 2");
            for w in r.windows(2) {
                assert_eq!(arrows[w[0]].1, arrows[w[1]].0, "relation path not composable");
            }
        }
        BoundQuiver { n_vertices, arrows, relations }
    }

    pub fn path_end(&self, p: &Path) -> usize {
        p.arrows.last().map_or(p.start, |&a| self.arrows[a].1)
    }

    fn contains_relation(&self, arrows: &[usize]) -> bool {
        self.relations.iter().any(|rel| {
            arrows.len() >= rel.len()
                && arrows.windows(rel.len()).any(|w| w == rel.as_slice())
        })
    }

    /// All paths avoiding the relations, trivial paths included.
    pub fn path_basis(&self) -> Result<Vec<Path>, OracleError> {
        let mut paths: Vec<Path> = (0..self.n_vertices)
            .map(|v| Path { start: v, arrows: Vec::new() })
            .collect();
        let mut frontier = paths.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for p in &frontier {
                if p.arrows.len() >= PATH_LENGTH_CAP {
                    return Err(OracleError::PathBasisOverflow);
                }
                let end = self.path_end(p);
                for (a, &(s, _)) in self.arrows.iter().enumerate() {
                    if s != end {
                        continue;
                    }
                    let mut ext = p.arrows.clone();
                    ext.push(a);
                    if !self.contains_relation(&ext) {
                        next.push(Path { start: p.start, arrows: ext });
                    }
                }
            }
            paths.extend(next.iter().cloned());
            frontier = next;
        }
        Ok(paths)
    }

    /// Basis paths of P(i) in the order used by `projective_rep`, each
    /// with its end vertex and its index within that vertex block.
    pub fn projective_basis(&self, i: usize) -> Result<Vec<(Path, usize, usize)>, OracleError> {
        let all = self.path_basis()?;
        let mut per_vertex = alloc::vec![0usize; self.n_vertices];
        Ok(all
            .into_iter()
            .filter(|p| p.start == i)
            .map(|p| {
                let v = self.path_end(&p);
                let l = per_vertex[v];
                per_vertex[v] += 1;
                (p, v, l)
            })
            .collect())
    }

    /// The projective representation P(i), with basis the paths out of `i`.
    pub fn projective_rep<F: Field>(&self, i: usize) -> Result<Rep<F>, OracleError> {
        let all = self.path_basis()?;
        let basis: Vec<&Path> = all.iter().filter(|p| p.start == i).collect();
        let mut dims = alloc::vec![0usize; self.n_vertices];
        // index of each basis path within its vertex block
        let mut local = alloc::vec![0usize; basis.len()];
        for (k, p) in basis.iter().enumerate() {
            let v = self.path_end(p);
            local[k] = dims[v];
            dims[v] += 1;
        }
        let mut mats: Vec<Matrix<F>> = self
            .arrows
            .iter()
            .map(|&(s, t)| Matrix::zero(dims[t], dims[s]))
            .collect();
        for (k, p) in basis.iter().enumerate() {
            let end = self.path_end(p);
            for (a, &(s, _)) in self.arrows.iter().enumerate() {
                if s != end {
                    continue;
                }
                let mut ext = p.arrows.clone();
                ext.push(a);
                if self.contains_relation(&ext) {
                    continue;
                }
                let q = Path { start: i, arrows: ext };
                let j = basis.iter().position(|b| **b == q).expect("extension in basis");
                mats[a].set(local[j], local[k], F::one());
            }
        }
        Ok(Rep { dims, mats })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::field::Rat;

    /// The gentle algebra of the worked example: 1 -> 2 -> {3, 4} with
    /// the composite through 3 killed.
    fn gentle() -> BoundQuiver {
        BoundQuiver::new(4, alloc::vec![(0, 1), (1, 2), (1, 3)], alloc::vec![alloc::vec![0, 1]])
    }

    #[test]
    fn path_basis_respects_relations() {
        let q = gentle();
        let paths = q.path_basis().unwrap();
        // 4 trivial + arrows a, b, c + path ac (ab is killed)
        assert_eq!(paths.len(), 8);
        assert!(!paths.iter().any(|p| p.arrows == [0, 1]));
        assert!(paths.iter().any(|p| p.arrows == [0, 2]));
    }

    #[test]
    fn projectives_of_gentle() {
        let q = gentle();
        let p0: Rep<Rat> = q.projective_rep(0).unwrap();
        assert_eq!(p0.dims, alloc::vec![1, 1, 0, 1]);
        let p1: Rep<Rat> = q.projective_rep(1).unwrap();
        assert_eq!(p1.dims, alloc::vec![0, 1, 1, 1]);
        p1.check_relations(&q).unwrap();
    }

    #[test]
    fn cap_detects_cycles() {
        let q = BoundQuiver::new(1, alloc::vec![(0, 0)], alloc::vec![]);
        assert_eq!(q.path_basis(), Err(OracleError::PathBasisOverflow));
    }
}
