//! Shadows in Grothendieck groups: nerve simplices `{b_σ}` of a presented
//! complex, rank triangles `(a_i, a_ij)` of the relative `S`-pattern, and
//! alternating sums over cubes.

mod json;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;

use crate::abgrp::NormalForm;
use crate::doldkan::{dold_kan_nerve, ChainComplexFp, Nerve};
use crate::error::{Error, Result};
use crate::sabgrp::SimplicialAbGroup;
use crate::simplexcat::{f_vertex, BitVector};
use crate::twocat::mask_label;

pub use json::{K0SimplexWire, RankTriangleWire};

fn bits(mask: u64) -> Vec<usize> {
    (0..64).filter(|&b| mask >> b & 1 == 1).collect()
}

fn dim(mask: u64) -> usize {
    mask.count_ones() as usize - 1
}

fn add(x: &[BigInt], y: &[BigInt]) -> Vec<BigInt> {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

fn sub(x: &[BigInt], y: &[BigInt]) -> Vec<BigInt> {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

/// Classes `b_σ ∈ B_(dim σ)` for every nonempty `σ ⊆ [n]`, keyed by the
/// bit mask of `σ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct K0Simplex {
    n: usize,
    classes: BTreeMap<u64, Vec<BigInt>>,
}

impl K0Simplex {
    /// Entries left out of `classes` are zero.
    pub fn new(b: &ChainComplexFp, n: usize, mut classes: BTreeMap<u64, Vec<BigInt>>) -> Result<Self> {
        if n > b.truncation() {
            return Err(Error::Truncation { level: n, truncation: b.truncation() });
        }
        if n >= 63 {
            return Err(Error::Index(format!("dimension {n} is too large")));
        }
        for (&mask, x) in &classes {
            if mask == 0 || mask >> (n + 1) != 0 {
                return Err(Error::Index(format!("{} is not a nonempty subset of [{n}]", mask_label(mask))));
            }
            let g = b.level(dim(mask));
            if x.len() != g.generators() {
                return Err(Error::Shape(format!("class at {} has {} entries, B_{} has {} generators", mask_label(mask), x.len(), dim(mask), g.generators())));
            }
        }
        for mask in 1u64..1 << (n + 1) {
            classes.entry(mask).or_insert_with(|| vec![BigInt::zero(); b.level(dim(mask)).generators()]);
        }
        Ok(Self { n, classes })
    }

    pub fn zero(b: &ChainComplexFp, n: usize) -> Result<Self> {
        Self::new(b, n, BTreeMap::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn class(&self, mask: u64) -> &[BigInt] {
        &self.classes[&mask]
    }

    pub fn classes(&self) -> &BTreeMap<u64, Vec<BigInt>> {
        &self.classes
    }
}

/// Subsets `σ` at which `d b_σ = Σ (-1)^i b_(σ∘∂_i)` fails.
pub fn nerve_violations(b: &ChainComplexFp, s: &K0Simplex) -> Result<Vec<u64>> {
    if s.n > b.truncation() {
        return Err(Error::Truncation { level: s.n, truncation: b.truncation() });
    }
    let mut out = Vec::new();
    for (&mask, x) in &s.classes {
        let k = dim(mask);
        if k == 0 {
            continue;
        }
        let lower = b.level(k - 1);
        let mut rhs = vec![BigInt::zero(); lower.generators()];
        for (i, e) in bits(mask).into_iter().enumerate() {
            let face = s.class(mask & !(1 << e));
            rhs = if i % 2 == 0 { add(&rhs, face) } else { sub(&rhs, face) };
        }
        if x.len() != b.level(k).generators() || rhs.len() != lower.generators() {
            return Err(Error::Shape(format!("class at {} does not match the complex", mask_label(mask))));
        }
        if !lower.elements_equal(&b.d(k)?.apply(x)?, &rhs)? {
            out.push(mask);
        }
    }
    Ok(out)
}

/// Whether `{b_σ}` is an `n`-simplex of `N(B)`.
pub fn check_nerve_simplex(b: &ChainComplexFp, s: &K0Simplex) -> Result<bool> {
    Ok(nerve_violations(b, s)?.is_empty())
}

/// Classes `a_i ∈ B_0` and `a_ij ∈ B_1` for `i <= j <= n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankTriangle {
    pub n: usize,
    pub vertices: Vec<Vec<BigInt>>,
    pub edges: BTreeMap<(usize, usize), Vec<BigInt>>,
}

impl RankTriangle {
    pub fn zero(b: &ChainComplexFp, n: usize) -> Self {
        let (g0, g1) = (b.level(0).generators(), if b.truncation() >= 1 { b.level(1).generators() } else { 0 });
        let vertices = vec![vec![BigInt::zero(); g0]; n + 1];
        let edges = (0..=n).flat_map(|i| (i..=n).map(move |j| ((i, j), vec![BigInt::zero(); g1]))).collect();
        Self { n, vertices, edges }
    }

    pub fn edge(&self, i: usize, j: usize) -> &[BigInt] {
        &self.edges[&(i, j)]
    }

    fn validate(&self, b: &ChainComplexFp) -> Result<()> {
        if b.truncation() < 1 {
            return Err(Error::Precondition("B needs a degree 1 group".into()));
        }
        if self.vertices.len() != self.n + 1 {
            return Err(Error::Shape(format!("{} vertex classes for n = {}", self.vertices.len(), self.n)));
        }
        let (g0, g1) = (b.level(0).generators(), b.level(1).generators());
        if self.vertices.iter().any(|x| x.len() != g0) {
            return Err(Error::Shape("vertex class of the wrong length".into()));
        }
        for i in 0..=self.n {
            for j in i..=self.n {
                let x = self.edges.get(&(i, j)).ok_or_else(|| Error::Index(format!("missing edge class a_{i}{j}")))?;
                if x.len() != g1 {
                    return Err(Error::Shape(format!("edge class a_{i}{j} of the wrong length")));
                }
            }
        }
        if self.edges.len() != (self.n + 1) * (self.n + 2) / 2 {
            return Err(Error::Index("edge classes outside i <= j <= n".into()));
        }
        Ok(())
    }
}

fn require_two_term(b: &ChainComplexFp) -> Result<()> {
    if b.truncation() < 1 {
        return Err(Error::Precondition("B needs a degree 1 group".into()));
    }
    if b.levels()[2..].iter().any(|g| !g.is_trivial()) {
        return Err(Error::Precondition("B must be concentrated in degrees 0 and 1".into()));
    }
    Ok(())
}

/// The relations of `t` that fail: `a_ii = 0`, `d a_ij = a_j - a_i`,
/// `a_ik = a_ij + a_jk`.
pub fn relative_s_violations(b: &ChainComplexFp, t: &RankTriangle) -> Result<Vec<String>> {
    require_two_term(b)?;
    t.validate(b)?;
    let (b0, b1, d) = (b.level(0), b.level(1), b.d(1)?);
    let mut out = Vec::new();
    for i in 0..=t.n {
        if !b1.is_zero_element(t.edge(i, i))? {
            out.push(format!("a_{i}{i} is not zero"));
        }
        for j in i + 1..=t.n {
            if !b0.elements_equal(&d.apply(t.edge(i, j))?, &sub(&t.vertices[j], &t.vertices[i]))? {
                out.push(format!("d a_{i}{j} differs from a_{j} - a_{i}"));
            }
            for k in j + 1..=t.n {
                if !b1.elements_equal(t.edge(i, k), &add(t.edge(i, j), t.edge(j, k)))? {
                    out.push(format!("a_{i}{k} differs from a_{i}{j} + a_{j}{k}"));
                }
            }
        }
    }
    Ok(out)
}

pub fn check_relative_s(b: &ChainComplexFp, t: &RankTriangle) -> Result<bool> {
    Ok(relative_s_violations(b, t)?.is_empty())
}

/// `B` padded with zero groups up to level `n`; the home of
/// [`decategorify_relative_s`].
pub fn padded(b: &ChainComplexFp, n: usize) -> ChainComplexFp {
    b.resize(n.max(b.truncation()))
}

/// `b_i = a_i`, `b_ij = a_ij`, and zero above dimension 1, as a simplex
/// over [`padded`]`(b, n)`.
pub fn decategorify_relative_s(t: &RankTriangle, b: &ChainComplexFp) -> Result<K0Simplex> {
    let bad = relative_s_violations(b, t)?;
    if let Some(first) = bad.first() {
        return Err(Error::Precondition(format!("not a valid triangle: {first}")));
    }
    let mut classes = BTreeMap::new();
    for i in 0..=t.n {
        classes.insert(1u64 << i, t.vertices[i].clone());
        for j in i + 1..=t.n {
            classes.insert(1u64 << i | 1 << j, t.edge(i, j).to_vec());
        }
    }
    K0Simplex::new(&padded(b, t.n), t.n, classes)
}

/// A valid triangle from random `a_0` and `a_0j`, entries in `-range..=range`.
pub fn random_relative_s<R: Rng>(rng: &mut R, b: &ChainComplexFp, n: usize, range: i64) -> Result<RankTriangle> {
    require_two_term(b)?;
    let (g0, g1, d) = (b.level(0).generators(), b.level(1).generators(), b.d(1)?);
    let mut draw = |g: usize| -> Vec<BigInt> { (0..g).map(|_| BigInt::from(rng.gen_range(-range..=range))).collect() };
    let a0 = draw(g0);
    let mut from0 = vec![vec![BigInt::zero(); g1]];
    for _ in 1..=n {
        from0.push(draw(g1));
    }
    let vertices = from0.iter().map(|e| Ok(add(&a0, &d.apply(e)?))).collect::<Result<Vec<_>>>()?;
    let mut edges = BTreeMap::new();
    for i in 0..=n {
        for j in i..=n {
            edges.insert((i, j), sub(&from0[j], &from0[i]));
        }
    }
    Ok(RankTriangle { n, vertices, edges })
}

/// Classes on the vertices of `{0,1}^k`, stored by [`BitVector::index`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassCube {
    k: usize,
    values: Vec<Vec<BigInt>>,
}

impl ClassCube {
    pub fn new(k: usize, values: Vec<Vec<BigInt>>) -> Result<Self> {
        if k >= 32 || values.len() != 1 << k {
            return Err(Error::Shape(format!("{} values for a {k}-cube", values.len())));
        }
        if values.iter().any(|v| v.len() != values[0].len()) {
            return Err(Error::Shape("cube values of different lengths".into()));
        }
        Ok(Self { k, values })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn value(&self, j: &BitVector) -> &[BigInt] {
        &self.values[j.index()]
    }

    /// The face `j_i = value`, directions numbered from 1.
    pub fn face(&self, i: usize, value: bool) -> Result<Self> {
        if i == 0 || i > self.k {
            return Err(Error::Index(format!("cube direction {i} out of 1..={}", self.k)));
        }
        let values = BitVector::all(self.k - 1)
            .into_iter()
            .map(|j| {
                let mut b = j.bits.clone();
                b.insert(i - 1, value);
                self.values[BitVector::new(b).index()].clone()
            })
            .collect();
        Ok(Self { k: self.k - 1, values })
    }
}

/// `Σ_j (-1)^(k-|j|) cube(j)`.
pub fn euler_totalization(cube: &ClassCube) -> Result<Vec<BigInt>> {
    if cube.k == 0 {
        return Err(Error::Precondition("totalization needs k >= 1".into()));
    }
    let mut acc = vec![BigInt::zero(); cube.values[0].len()];
    for j in BitVector::all(cube.k) {
        let x = cube.value(&j);
        acc = if (cube.k - j.weight()) % 2 == 0 { add(&acc, x) } else { sub(&acc, x) };
    }
    Ok(acc)
}

/// `{f_j^* x}` for `x ∈ A_n`.
pub fn pi_cube(a: &SimplicialAbGroup, n: usize, x: &[BigInt]) -> Result<ClassCube> {
    let values = BitVector::all(n).iter().map(|j| a.act(&f_vertex(n, j)?)?.apply(x)).collect::<Result<Vec<_>>>()?;
    ClassCube::new(n, values)
}

/// Normal forms of `N(B)_n` for `n <= m`.
pub fn nerve_rank_table(b: &ChainComplexFp, m: usize) -> Result<Vec<NormalForm>> {
    let nerve = dold_kan_nerve(b, m)?;
    Ok((0..=m).map(|n| nerve.group.level(n).normal_form()).collect())
}

/// The coordinates `{b_σ}` of an element of `N(B)_n`.
pub fn nerve_element_simplex(b: &ChainComplexFp, nerve: &Nerve, n: usize, x: &[BigInt]) -> Result<K0Simplex> {
    let ambient = nerve.inclusions[n].apply(x)?;
    let mut classes = BTreeMap::new();
    for (p, sigma) in nerve.index(n).iter().enumerate() {
        classes.insert(sigma.image_mask(), nerve.coordinate(n, p)?.apply(&ambient)?);
    }
    K0Simplex::new(b, n, classes)
}
