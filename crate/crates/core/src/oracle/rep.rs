//! Matrix representations of bound quivers, morphism spaces, kernels,
//! cokernels, and Krull-Schmidt summand splitting.

use alloc::vec::Vec;

use super::algebra::{BoundQuiver, OracleError};
use super::field::Field;
use super::matrix::Matrix;

/// A representation: per-vertex dimensions and per-arrow matrices of
/// shape (dim target x dim source).
#[derive(Debug, Clone, PartialEq)]
pub struct Rep<F: Field> {
    pub dims: Vec<usize>,
    pub mats: Vec<Matrix<F>>,
}

/// A morphism of representations: one matrix per vertex, of shape
/// (dim target_vertex x dim source_vertex).
#[derive(Debug, Clone, PartialEq)]
pub struct Morphism<F: Field> {
    pub blocks: Vec<Matrix<F>>,
}

impl<F: Field> Rep<F> {
    pub fn zero(q: &BoundQuiver) -> Self {
        Rep {
            dims: alloc::vec![0; q.n_vertices],
            mats: q.arrows.iter().map(|_| Matrix::zero(0, 0)).collect(),
        }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// A representation supported on a set of vertices with identity maps
    /// on every arrow inside the support ("thin" module).
    pub fn thin(q: &BoundQuiver, support: &[usize]) -> Self {
        let dims: Vec<usize> =
            (0..q.n_vertices).map(|v| usize::from(support.contains(&v))).collect();
        let mats = q
            .arrows
            .iter()
            .map(|&(s, t)| {
                let m = Matrix::zero(dims[t], dims[s]);
                if dims[s] == 1 && dims[t] == 1 {
                    let mut m = m;
                    m.set(0, 0, F::one());
                    m
                } else {
                    m
                }
            })
            .collect();
        Rep { dims, mats }
    }

    pub fn check_relations(&self, q: &BoundQuiver) -> Result<(), OracleError> {
        for (ri, rel) in q.relations.iter().enumerate() {
            let s = q.arrows[rel[0]].0;
            let mut acc = Matrix::<F>::identity(self.dims[s]);
            for &a in rel {
                acc = self.mats[a].mul(&acc);
            }
            if !acc.is_zero() {
                return Err(OracleError::RelationViolated { relation: ri });
            }
        }
        Ok(())
    }

    /// Direct sum, with the inclusion and projection of each part.
    pub fn direct_sum(q: &BoundQuiver, parts: &[&Rep<F>]) -> (Rep<F>, Vec<Morphism<F>>, Vec<Morphism<F>>) {
        let nv = q.n_vertices;
        let mut dims = alloc::vec![0usize; nv];
        let mut offsets: Vec<Vec<usize>> = Vec::with_capacity(parts.len());
        for p in parts {
            offsets.push(dims.clone());
            for v in 0..nv {
                dims[v] += p.dims[v];
            }
        }
        let mats = q
            .arrows
            .iter()
            .enumerate()
            .map(|(a, &(s, t))| {
                let mut m = Matrix::zero(dims[t], dims[s]);
                for (k, p) in parts.iter().enumerate() {
                    for r in 0..p.dims[t] {
                        for c in 0..p.dims[s] {
                            m.set(offsets[k][t] + r, offsets[k][s] + c, p.mats[a].get(r, c).clone());
                        }
                    }
                }
                m
            })
            .collect();
        let total = Rep { dims: dims.clone(), mats };
        let mut incls = Vec::new();
        let mut projs = Vec::new();
        for (k, p) in parts.iter().enumerate() {
            let incl = Morphism {
                blocks: (0..nv)
                    .map(|v| {
                        Matrix::from_fn(dims[v], p.dims[v], |r, c| {
                            if r == offsets[k][v] + c { F::one() } else { F::zero() }
                        })
                    })
                    .collect(),
            };
            let proj = Morphism {
                blocks: (0..nv)
                    .map(|v| {
                        Matrix::from_fn(p.dims[v], dims[v], |r, c| {
                            if c == offsets[k][v] + r { F::one() } else { F::zero() }
                        })
                    })
                    .collect(),
            };
            incls.push(incl);
            projs.push(proj);
        }
        (total, incls, projs)
    }
}

impl<F: Field> Morphism<F> {
    pub fn zero(from: &Rep<F>, to: &Rep<F>) -> Self {
        Morphism {
            blocks: from
                .dims
                .iter()
                .zip(&to.dims)
                .map(|(&m, &n)| Matrix::zero(n, m))
                .collect(),
        }
    }

    pub fn identity(of: &Rep<F>) -> Self {
        Morphism { blocks: of.dims.iter().map(|&d| Matrix::identity(d)).collect() }
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &Morphism<F>) -> Morphism<F> {
        Morphism {
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(g, f)| g.mul(f))
                .collect(),
        }
    }

    pub fn add(&self, other: &Morphism<F>) -> Morphism<F> {
        Morphism {
            blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn scale(&self, s: &F) -> Morphism<F> {
        Morphism { blocks: self.blocks.iter().map(|b| b.scale(s)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    pub fn is_injective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.cols)
    }

    pub fn is_surjective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.rows)
    }

    /// Flatten all blocks into one coordinate vector.
    pub fn vectorize(&self) -> Vec<F> {
        let mut out = Vec::new();
        for b in &self.blocks {
            for r in 0..b.rows {
                out.extend(b.row(r).iter().cloned());
            }
        }
        out
    }
}

/// Basis of Hom(M, N): solution space of the intertwining system.
pub fn hom_basis<F: Field>(q: &BoundQuiver, m: &Rep<F>, n: &Rep<F>) -> Vec<Morphism<F>> {
    let nv = q.n_vertices;
    // unknown layout: block per vertex, row-major
    let mut offset = alloc::vec![0usize; nv + 1];
    for v in 0..nv {
        offset[v + 1] = offset[v] + n.dims[v] * m.dims[v];
    }
    let unknowns = offset[nv];
    let mut rows: Vec<Vec<F>> = Vec::new();
    for (a, &(s, t)) in q.arrows.iter().enumerate() {
        // f_t * M_a - N_a * f_s = 0, one equation per (r, c)
        for r in 0..n.dims[t] {
            for c in 0..m.dims[s] {
                let mut row = alloc::vec![F::zero(); unknowns];
                for k in 0..m.dims[t] {
                    let idx = offset[t] + r * m.dims[t] + k;
                    row[idx] = row[idx].add(m.mats[a].get(k, c));
                }
                for k in 0..n.dims[s] {
                    let idx = offset[s] + k * m.dims[s] + c;
                    row[idx] = row[idx].sub(n.mats[a].get(r, k));
                }
                rows.push(row);
            }
        }
    }
    let system = if rows.is_empty() {
        Matrix::zero(0, unknowns)
    } else {
        Matrix::from_rows(rows)
    };
    system
        .kernel_basis()
        .into_iter()
        .map(|v| Morphism {
            blocks: (0..nv)
                .map(|i| {
                    Matrix::from_fn(n.dims[i], m.dims[i], |r, c| {
                        v[offset[i] + r * m.dims[i] + c].clone()
                    })
                })
                .collect(),
        })
        .collect()
}

pub fn hom_dim<F: Field>(q: &BoundQuiver, m: &Rep<F>, n: &Rep<F>) -> usize {
    hom_basis(q, m, n).len()
}

pub fn end_dim<F: Field>(q: &BoundQuiver, m: &Rep<F>) -> usize {
    hom_dim(q, m, m)
}

/// Kernel of a morphism as a subrepresentation, with its inclusion.
pub fn kernel_rep<F: Field>(
    q: &BoundQuiver,
    f: &Morphism<F>,
    m: &Rep<F>,
) -> (Rep<F>, Morphism<F>) {
    let nv = q.n_vertices;
    let mut dims = alloc::vec![0usize; nv];
    let mut incl_blocks = Vec::with_capacity(nv);
    for v in 0..nv {
        let basis = f.blocks[v].kernel_basis();
        dims[v] = basis.len();
        incl_blocks.push(Matrix::from_fn(m.dims[v], basis.len(), |r, c| basis[c][r].clone()));
    }
    let mats = q
        .arrows
        .iter()
        .enumerate()
        .map(|(a, &(s, t))| {
            let mut k = Matrix::zero(dims[t], dims[s]);
            for c in 0..dims[s] {
                let col: Vec<F> = (0..m.dims[s]).map(|r| incl_blocks[s].get(r, c).clone()).collect();
                let w = m.mats[a].apply(&col);
                let x = incl_blocks[t].solve(&w).expect("kernel not arrow-stable");
                for r in 0..dims[t] {
                    k.set(r, c, x[r].clone());
                }
            }
            k
        })
        .collect();
    (Rep { dims, mats }, Morphism { blocks: incl_blocks })
}

/// Cokernel of a morphism, with the quotient projection and a chosen
/// linear section of it.
pub fn cokernel_rep<F: Field>(
    q: &BoundQuiver,
    f: &Morphism<F>,
    m: &Rep<F>,
    n: &Rep<F>,
) -> (Rep<F>, Morphism<F>, Morphism<F>) {
    let nv = q.n_vertices;
    let mut dims = alloc::vec![0usize; nv];
    let mut proj_blocks = Vec::with_capacity(nv);
    let mut sect_blocks = Vec::with_capacity(nv);
    for v in 0..nv {
        // rows of the image, as a rowspace
        let img_rows = f.blocks[v].transpose();
        let chosen = Matrix::<F>::complement_of_rowspace(&img_rows);
        dims[v] = chosen.len();
        // section: coset basis j -> unit vector chosen[j]
        let sect = Matrix::from_fn(n.dims[v], chosen.len(), |r, c| {
            if r == chosen[c] { F::one() } else { F::zero() }
        });
        // projection: solve [f | U] x = e_r, keep the U-coordinates
        let b = f.blocks[v].hstack(&sect);
        let proj = Matrix::from_fn(dims[v], n.dims[v], |_, _| F::zero());
        let mut proj = proj;
        for r in 0..n.dims[v] {
            let mut e = alloc::vec![F::zero(); n.dims[v]];
            e[r] = F::one();
            let x = b.solve(&e).expect("[image | complement] must span");
            for c in 0..dims[v] {
                proj.set(c, r, x[m.dims[v] + c].clone());
            }
        }
        proj_blocks.push(proj);
        sect_blocks.push(sect);
    }
    let mats = q
        .arrows
        .iter()
        .enumerate()
        .map(|(a, &(s, t))| proj_blocks[t].mul(&n.mats[a]).mul(&sect_blocks[s]))
        .collect();
    (
        Rep { dims, mats },
        Morphism { blocks: proj_blocks },
        Morphism { blocks: sect_blocks },
    )
}

/// Scalar lambda with h = lambda * id on a brick; panics if h is not
/// scalar (callers must have verified the brick property).
fn endo_scalar<F: Field>(h: &Morphism<F>, of: &Rep<F>) -> F {
    let mut lambda = F::zero();
    for (v, &d) in of.dims.iter().enumerate() {
        if d > 0 {
            lambda = h.blocks[v].get(0, 0).clone();
            break;
        }
    }
    let expected = Morphism::identity(of).scale(&lambda);
    assert!(
        h.blocks == expected.blocks,
        "endomorphism of a brick is not scalar"
    );
    lambda
}

/// Krull-Schmidt decomposition against a catalog of bricks.
///
/// X splits off M exactly when the pairing Hom(X,M) x Hom(M,X) -> End(X)
/// is nonzero; the complement is the kernel of the normalized retraction.
pub fn decompose<F: Field>(
    q: &BoundQuiver,
    m: &Rep<F>,
    catalog: &[Rep<F>],
) -> Result<Vec<usize>, OracleError> {
    for (idx, x) in catalog.iter().enumerate() {
        let e = end_dim(q, x);
        if e != 1 {
            return Err(OracleError::NotABrick { catalog_index: idx, end_dim: e });
        }
    }
    let mut cur = m.clone();
    let mut found = Vec::new();
    'outer: while !cur.is_zero() {
        for (idx, x) in catalog.iter().enumerate() {
            if x.dims.iter().zip(&cur.dims).any(|(a, b)| a > b) {
                continue;
            }
            let ins = hom_basis(q, x, &cur);
            if ins.is_empty() {
                continue;
            }
            let outs = hom_basis(q, &cur, x);
            for f in &ins {
                for g in &outs {
                    let h = g.compose(f);
                    if h.is_zero() {
                        continue;
                    }
                    let lambda = endo_scalar(&h, x);
                    let retraction = g.scale(&lambda.inv());
                    let (rest, _) = kernel_rep(q, &retraction, &cur);
                    cur = rest;
                    found.push(idx);
                    continue 'outer;
                }
            }
        }
        return Err(OracleError::UnmatchedSummand);
    }
    found.sort_unstable();
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::field::Rat;

    fn a2() -> BoundQuiver {
        BoundQuiver::new(2, alloc::vec![(0, 1)], alloc::vec![])
    }

    #[test]
    fn hom_of_thin_modules() {
        let q = a2();
        let p1 = Rep::<Rat>::thin(&q, &[0, 1]);
        let s1 = Rep::<Rat>::thin(&q, &[0]);
        let s2 = Rep::<Rat>::thin(&q, &[1]);
        // S(2) is the socle of P(1), not a quotient of it
        assert_eq!(hom_dim(&q, &p1, &s2), 0);
        assert_eq!(hom_dim(&q, &s2, &p1), 1);
        assert_eq!(hom_dim(&q, &p1, &s1), 1);
        assert_eq!(hom_dim(&q, &s1, &p1), 0);
        assert_eq!(end_dim(&q, &p1), 1);
    }

    #[test]
    fn kernel_and_cokernel() {
        let q = a2();
        let p1 = Rep::<Rat>::thin(&q, &[0, 1]);
        let s2 = Rep::<Rat>::thin(&q, &[1]);
        let f = &hom_basis(&q, &s2, &p1)[0];
        let (k, _) = kernel_rep(&q, f, &s2);
        assert!(k.is_zero());
        let (c, proj, _) = cokernel_rep(&q, f, &s2, &p1);
        assert_eq!(c.dims, alloc::vec![1, 0]);
        assert!(proj.is_surjective());
    }

    #[test]
    fn decompose_direct_sum() {
        let q = a2();
        let p1 = Rep::<Rat>::thin(&q, &[0, 1]);
        let s1 = Rep::<Rat>::thin(&q, &[0]);
        let s2 = Rep::<Rat>::thin(&q, &[1]);
        let catalog = alloc::vec![s1.clone(), s2.clone(), p1.clone()];
        let (sum, _, _) = Rep::direct_sum(&q, &[&p1, &s2, &p1]);
        let parts = decompose(&q, &sum, &catalog).unwrap();
        assert_eq!(parts, alloc::vec![1, 2, 2]);
        assert_eq!(decompose(&q, &Rep::zero(&q), &catalog).unwrap(), alloc::vec![]);
    }
}
