use serde::Serialize;

use crate::error::{Error, Result};
use crate::simplexcat::{b_vertex, f_vertex, q_vertex, BitVector, MonotoneMap};

/// The order of `ℕ_{/[n]}`: `φ : [m] -> [n]` is below `φ' : [m'] -> [n]` iff
/// `m <= m'` and `φ(i) <= φ'(i + m' - m)` for all `i`.
pub fn n_over_leq(phi: &MonotoneMap, psi: &MonotoneMap) -> bool {
    let (m, m2) = (phi.source_dim(), psi.source_dim());
    phi.target_dim() == psi.target_dim() && m <= m2 && (0..=m).all(|i| phi.apply(i) <= psi.apply(i + m2 - m))
}

/// A map `{0,1}^k -> ℕ_{/[n]}`; `vertices[j.index()]` is the image of `j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cube {
    pub k: usize,
    pub vertices: Vec<MonotoneMap>,
}

impl Cube {
    pub fn from_fn(k: usize, mut f: impl FnMut(&BitVector) -> Result<MonotoneMap>) -> Result<Self> {
        let vertices = BitVector::all(k).iter().map(&mut f).collect::<Result<Vec<_>>>()?;
        Ok(Self { k, vertices })
    }

    pub fn vertex(&self, j: &BitVector) -> &MonotoneMap {
        &self.vertices[j.index()]
    }

    pub fn labels(&self) -> Vec<String> {
        self.vertices.iter().map(MonotoneMap::label).collect()
    }

    /// Edges `(j, j + e_i)` as index pairs with their direction `i` (1-based).
    pub fn edges(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for j in 0..1usize << self.k {
            for i in 0..self.k {
                if j >> i & 1 == 0 {
                    out.push((j, j | 1 << i, i + 1));
                }
            }
        }
        out
    }

    /// Every edge must be a relation of `ℕ_{/[n]}`.
    pub fn check_edges(&self) -> std::result::Result<(), String> {
        for (a, b, i) in self.edges() {
            if !n_over_leq(&self.vertices[a], &self.vertices[b]) {
                return Err(format!("edge in direction {i} from {} to {} is not a relation", self.vertices[a], self.vertices[b]));
            }
        }
        Ok(())
    }

    /// `v ↦ v ∘ δ` at every vertex.
    pub fn precompose(&self, delta: &MonotoneMap) -> Result<Self> {
        Ok(Self { k: self.k, vertices: self.vertices.iter().map(|v| v.compose(delta)).collect::<Result<_>>()? })
    }

    /// `v ↦ σ ∘ v` at every vertex.
    pub fn postcompose(&self, sigma: &MonotoneMap) -> Result<Self> {
        Ok(Self { k: self.k, vertices: self.vertices.iter().map(|v| sigma.compose(v)).collect::<Result<_>>()? })
    }

    /// The face `j_i = value` as a `(k-1)`-cube.
    pub fn face(&self, i: usize, value: bool) -> Result<Self> {
        if i == 0 || i > self.k {
            return Err(Error::Index(format!("cube direction {i} out of 1..={}", self.k)));
        }
        let vertices = BitVector::all(self.k - 1)
            .iter()
            .map(|j| {
                let mut bits = j.bits.clone();
                bits.insert(i - 1, value);
                self.vertices[BitVector::new(bits).index()].clone()
            })
            .collect();
        Ok(Self { k: self.k - 1, vertices })
    }
}

fn need_positive(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::Precondition("cubes are defined for k >= 1".into()));
    }
    Ok(())
}

/// `f : [1]^k -> ℕ_{/[k]}`
pub fn cube_f(k: usize) -> Result<Cube> {
    need_positive(k)?;
    Cube::from_fn(k, |j| f_vertex(k, j))
}

/// `b : [1]^k -> ℕ_{/[k]}`
pub fn cube_b(k: usize) -> Result<Cube> {
    need_positive(k)?;
    Cube::from_fn(k, |j| b_vertex(k, j))
}

/// `q : [1]^{k+1} -> ℕ_{/[k]}`; direction 1 is `j_0`.
pub fn cube_q(k: usize) -> Result<Cube> {
    need_positive(k)?;
    Cube::from_fn(k + 1, |j| {
        let rest = BitVector::new(j.bits[1..].to_vec());
        q_vertex(k, j.bits[0], &rest)
    })
}
