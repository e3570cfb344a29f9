//! Finitely presented abelian groups `Z^g / colspan(R)` and homomorphisms
//! between them, stored as integer matrices on generators.

mod json;

pub use json::{GroupWire, HomWire};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::intlin::{hermite_basis, image_basis, kernel_basis, smith_normal_form, solve, solve_many, IntMatrix};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FpAbelianGroup {
    generators: usize,
    /// `generators x r`; each column is a relator.
    relations: IntMatrix,
}

/// `G = Z^free_rank + Z/d_1 + ... + Z/d_k` with `d_1 | d_2 | ...` and every `d_i >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub struct NormalForm {
    pub free_rank: usize,
    #[serde(serialize_with = "ser_bigints")]
    pub invariant_factors: Vec<BigInt>,
}

fn ser_bigints<S: serde::Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        seq.serialize_element(&x.to_string())?;
    }
    seq.end()
}

impl NormalForm {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }
}

impl std::fmt::Display for NormalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        if self.free_rank > 0 {
            parts.push(if self.free_rank == 1 { "Z".to_string() } else { format!("Z^{}", self.free_rank) });
        }
        parts.extend(self.invariant_factors.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// A subgroup presented on its own generators, with its inclusion.
#[derive(Clone, Debug)]
pub struct Subgroup {
    pub group: FpAbelianGroup,
    pub inclusion: AbHom,
}

/// A quotient with its projection.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: FpAbelianGroup,
    pub projection: AbHom,
}

/// A smaller presentation of the same group with mutually inverse isomorphisms.
#[derive(Clone, Debug)]
pub struct Minimized {
    pub group: FpAbelianGroup,
    pub to_original: AbHom,
    pub from_original: AbHom,
}

impl FpAbelianGroup {
    pub fn new(generators: usize, relations: IntMatrix) -> Result<Self> {
        if relations.rows() != generators {
            return Err(Error::Shape(format!(
                "relation matrix has {} rows for {generators} generators",
                relations.rows()
            )));
        }
        Ok(Self { generators, relations })
    }

    pub fn free(rank: usize) -> Self {
        Self { generators: rank, relations: IntMatrix::zeros(rank, 0) }
    }

    pub fn trivial() -> Self {
        Self::free(0)
    }

    /// `Z/m`; `m = 0` gives `Z`.
    pub fn cyclic(m: i64) -> Self {
        Self { generators: 1, relations: IntMatrix::from_rows(&[[m]]) }
    }

    /// `Z^free_rank + Z/d_1 + ...`, torsion generators first.
    pub fn from_invariants(free_rank: usize, factors: &[i64]) -> Self {
        let n = factors.len() + free_rank;
        let mut rel = IntMatrix::zeros(n, factors.len());
        for (i, &d) in factors.iter().enumerate() {
            rel.set(i, i, BigInt::from(d));
        }
        Self { generators: n, relations: rel }
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.relations
    }

    pub fn normal_form(&self) -> NormalForm {
        let snf = smith_normal_form(&self.relations);
        let invariant_factors: Vec<BigInt> = snf.invariants().into_iter().filter(|d| !d.is_one()).collect();
        NormalForm { free_rank: self.generators - snf.rank, invariant_factors }
    }

    pub fn is_trivial(&self) -> bool {
        self.generators == 0 || self.normal_form().is_trivial()
    }

    /// Whether `x` (in generator coordinates) is zero in the group.
    pub fn is_zero_element(&self, x: &[BigInt]) -> Result<bool> {
        if x.len() != self.generators {
            return Err(Error::Shape(format!("element of length {} in group on {} generators", x.len(), self.generators)));
        }
        if x.iter().all(Zero::is_zero) {
            return Ok(true);
        }
        Ok(solve(&self.relations, x)?.is_some())
    }

    pub fn elements_equal(&self, x: &[BigInt], y: &[BigInt]) -> Result<bool> {
        if x.len() != y.len() {
            return Err(Error::Shape("elements of different length".into()));
        }
        let d: Vec<BigInt> = x.iter().zip(y).map(|(a, b)| a - b).collect();
        self.is_zero_element(&d)
    }

    /// Whether every column of `m` is zero in the group.
    pub fn columns_vanish(&self, m: &IntMatrix) -> Result<bool> {
        if m.rows() != self.generators {
            return Err(Error::Shape(format!("{} rows against {} generators", m.rows(), self.generators)));
        }
        if m.is_zero() {
            return Ok(true);
        }
        Ok(solve_many(&self.relations, m)?.is_some())
    }

    pub fn direct_sum(groups: &[&FpAbelianGroup]) -> FpAbelianGroup {
        let rels: Vec<&IntMatrix> = groups.iter().map(|g| &g.relations).collect();
        FpAbelianGroup { generators: groups.iter().map(|g| g.generators).sum(), relations: IntMatrix::block_diag(&rels) }
    }

    /// Drops trivial cyclic factors and zero relators via the Smith form of the
    /// relations.
    pub fn minimize(&self) -> Minimized {
        let snf = smith_normal_form(&self.relations);
        let g = self.generators;
        let kept: Vec<usize> = (0..g).filter(|&i| i >= snf.rank || !snf.s.get(i, i).is_one()).collect();
        let torsion: Vec<usize> = kept.iter().copied().filter(|&i| i < snf.rank).collect();
        let mut rel = IntMatrix::zeros(kept.len(), torsion.len());
        for (c, &i) in torsion.iter().enumerate() {
            let row = kept.iter().position(|&k| k == i).expect("kept");
            rel.set(row, c, snf.s.get(i, i).clone());
        }
        let group = FpAbelianGroup { generators: kept.len(), relations: rel };
        let to = snf.u_inv.select_columns(&kept);
        let from = snf.u.select_rows(&kept);
        Minimized {
            to_original: AbHom::reduced(group.clone(), self.clone(), to),
            from_original: AbHom::reduced(self.clone(), group.clone(), from),
            group,
        }
    }

    /// The subgroup generated by the columns of `gens`.
    pub fn subgroup_generated(&self, gens: &IntMatrix) -> Result<Subgroup> {
        if gens.rows() != self.generators {
            return Err(Error::Shape(format!("{} rows against {} generators", gens.rows(), self.generators)));
        }
        let free = FpAbelianGroup::free(gens.cols());
        let map = AbHom::unchecked(free, self.clone(), gens.clone());
        map.image()
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup { group: self.clone(), inclusion: AbHom::identity(self) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbHom {
    source: FpAbelianGroup,
    target: FpAbelianGroup,
    /// `target.generators x source.generators`
    matrix: IntMatrix,
}

impl AbHom {
    /// Checks shape and well-definedness.
    pub fn new(source: FpAbelianGroup, target: FpAbelianGroup, matrix: IntMatrix) -> Result<Self> {
        if matrix.rows() != target.generators || matrix.cols() != source.generators {
            return Err(Error::Shape(format!(
                "hom matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.generators,
                source.generators
            )));
        }
        let h = Self { source, target, matrix };
        if !h.is_well_defined()? {
            return Err(Error::IllDefined("relations of the source do not map into the relations of the target".into()));
        }
        Ok(h)
    }

    /// No well-definedness check; callers guarantee it by construction.
    pub(crate) fn unchecked(source: FpAbelianGroup, target: FpAbelianGroup, matrix: IntMatrix) -> Self {
        debug_assert_eq!(matrix.rows(), target.generators);
        debug_assert_eq!(matrix.cols(), source.generators);
        Self { source, target, matrix }
    }

    /// Like `unchecked`, with each column replaced by its canonical
    /// representative modulo the target relations.
    pub(crate) fn reduced(source: FpAbelianGroup, target: FpAbelianGroup, matrix: IntMatrix) -> Self {
        let matrix = reduce_mod(&target, &matrix);
        Self::unchecked(source, target, matrix)
    }

    pub fn identity(g: &FpAbelianGroup) -> Self {
        Self::unchecked(g.clone(), g.clone(), IntMatrix::identity(g.generators))
    }

    pub fn zero(source: &FpAbelianGroup, target: &FpAbelianGroup) -> Self {
        Self::unchecked(source.clone(), target.clone(), IntMatrix::zeros(target.generators, source.generators))
    }

    pub fn source(&self) -> &FpAbelianGroup {
        &self.source
    }

    pub fn target(&self) -> &FpAbelianGroup {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn is_well_defined(&self) -> Result<bool> {
        let image = self.matrix.try_mul(&self.source.relations)?;
        self.target.columns_vanish(&image)
    }

    pub fn apply(&self, x: &[BigInt]) -> Result<Vec<BigInt>> {
        self.matrix.mul_vec(x)
    }

    /// `self ∘ f`.
    pub fn compose(&self, f: &AbHom) -> Result<AbHom> {
        if f.target != self.source {
            return Err(Error::Presentation("composition: target of the inner map differs from the source of the outer map".into()));
        }
        Ok(Self::reduced(f.source.clone(), self.target.clone(), self.matrix.try_mul(&f.matrix)?))
    }

    fn check_parallel(&self, other: &AbHom) -> Result<()> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::Presentation("homomorphisms are not parallel".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &AbHom) -> Result<AbHom> {
        self.check_parallel(other)?;
        Ok(Self::reduced(self.source.clone(), self.target.clone(), self.matrix.try_add(&other.matrix)?))
    }

    pub fn sub(&self, other: &AbHom) -> Result<AbHom> {
        self.check_parallel(other)?;
        Ok(Self::reduced(self.source.clone(), self.target.clone(), self.matrix.try_sub(&other.matrix)?))
    }

    pub fn neg(&self) -> AbHom {
        Self::unchecked(self.source.clone(), self.target.clone(), -&self.matrix)
    }

    pub fn scale(&self, k: i64) -> AbHom {
        Self::unchecked(self.source.clone(), self.target.clone(), self.matrix.scale(&BigInt::from(k)))
    }

    /// Equality as maps: the difference lands in the relation span.
    pub fn equals_as_map(&self, other: &AbHom) -> Result<bool> {
        self.check_parallel(other)?;
        self.target.columns_vanish(&self.matrix.try_sub(&other.matrix)?)
    }

    pub fn is_zero(&self) -> Result<bool> {
        self.target.columns_vanish(&self.matrix)
    }

    /// `f_1 + ... + f_k : S_1 + ... + S_k -> T_1 + ... + T_k`.
    pub fn direct_sum(homs: &[&AbHom]) -> AbHom {
        let src: Vec<&FpAbelianGroup> = homs.iter().map(|h| &h.source).collect();
        let tgt: Vec<&FpAbelianGroup> = homs.iter().map(|h| &h.target).collect();
        let mats: Vec<&IntMatrix> = homs.iter().map(|h| &h.matrix).collect();
        Self::unchecked(FpAbelianGroup::direct_sum(&src), FpAbelianGroup::direct_sum(&tgt), IntMatrix::block_diag(&mats))
    }

    /// `(f_1, ..., f_k) : S -> T_1 + ... + T_k` for maps with a common source.
    pub fn stack(source: &FpAbelianGroup, homs: &[&AbHom]) -> Result<AbHom> {
        for h in homs {
            if &h.source != source {
                return Err(Error::Presentation("stack: maps do not share a source".into()));
            }
        }
        let tgt: Vec<&FpAbelianGroup> = homs.iter().map(|h| &h.target).collect();
        let mats: Vec<&IntMatrix> = homs.iter().map(|h| &h.matrix).collect();
        Ok(Self::unchecked(source.clone(), FpAbelianGroup::direct_sum(&tgt), IntMatrix::vstack_all(source.generators, &mats)?))
    }

    /// `[f_1 ... f_k] : S_1 + ... + S_k -> T` for maps with a common target.
    pub fn costack(target: &FpAbelianGroup, homs: &[&AbHom]) -> Result<AbHom> {
        for h in homs {
            if &h.target != target {
                return Err(Error::Presentation("costack: maps do not share a target".into()));
            }
        }
        let src: Vec<&FpAbelianGroup> = homs.iter().map(|h| &h.source).collect();
        let mats: Vec<&IntMatrix> = homs.iter().map(|h| &h.matrix).collect();
        Ok(Self::unchecked(FpAbelianGroup::direct_sum(&src), target.clone(), IntMatrix::hstack_all(target.generators, &mats)?))
    }

    /// Kernel with its inclusion, presented minimally.
    pub fn kernel(&self) -> Result<Subgroup> {
        let s = self.source.generators;
        // {x : F x in colspan(R_T)} is the projection of ker [F | R_T].
        let joint = self.matrix.hstack(&self.target.relations)?;
        let k = kernel_basis(&joint).row_range(0..s);
        let lattice = image_basis(&k);
        // The lattice contains the source relations; re-express them on its basis.
        let rel = solve_many(&lattice, &self.source.relations)?
            .ok_or_else(|| Error::IllDefined("source relations not in the preimage lattice".into()))?;
        let raw = FpAbelianGroup { generators: lattice.cols(), relations: rel };
        let min = raw.minimize();
        let inclusion = lattice.try_mul(min.to_original.matrix())?;
        Ok(Subgroup { inclusion: Self::reduced(min.group.clone(), self.source.clone(), inclusion), group: min.group })
    }

    pub fn cokernel(&self) -> Result<Quotient> {
        let raw = FpAbelianGroup { generators: self.target.generators, relations: self.target.relations.hstack(&self.matrix)? };
        let min = raw.minimize();
        let projection = Self::unchecked(self.target.clone(), min.group.clone(), min.from_original.matrix().clone());
        Ok(Quotient { group: min.group, projection })
    }

    /// The image as a subgroup of the target.
    pub fn image(&self) -> Result<Subgroup> {
        // Same image from a lattice basis of the columns, usually far fewer.
        let spanning = image_basis(&self.matrix);
        let free = FpAbelianGroup::free(spanning.cols());
        let lifted = Self::unchecked(free.clone(), self.target.clone(), spanning.clone());
        let ker = lifted.kernel()?;
        let raw = FpAbelianGroup { generators: free.generators, relations: ker.inclusion.matrix.clone() };
        let min = raw.minimize();
        let inclusion = spanning.try_mul(min.to_original.matrix())?;
        Ok(Subgroup { inclusion: Self::reduced(min.group.clone(), self.target.clone(), inclusion), group: min.group })
    }

    pub fn is_injective(&self) -> Result<bool> {
        Ok(self.kernel()?.group.is_trivial())
    }

    pub fn is_surjective(&self) -> Result<bool> {
        let joint = self.matrix.hstack(&self.target.relations)?;
        let snf = smith_normal_form(&joint);
        Ok(snf.rank == self.target.generators && snf.invariants().iter().all(One::is_one))
    }

    /// Bijective on group elements: trivial kernel and trivial cokernel.
    pub fn is_isomorphism(&self) -> Result<bool> {
        Ok(self.is_surjective()? && self.is_injective()?)
    }

    /// The unique `h` with `mono ∘ h = self`, when `self` lands in the image of
    /// the injective map `mono`.
    pub fn factor_through(&self, mono: &AbHom) -> Result<AbHom> {
        if mono.target != self.target {
            return Err(Error::Presentation("factor_through: targets differ".into()));
        }
        let joint = mono.matrix.hstack(&self.target.relations)?;
        let sol = solve_many(&joint, &self.matrix)?
            .ok_or_else(|| Error::Invalid("map does not factor through the given subgroup".into()))?;
        let h = sol.row_range(0..mono.source.generators);
        let out = Self::reduced(self.source.clone(), mono.source.clone(), h);
        if !out.is_well_defined()? {
            return Err(Error::IllDefined("factorization through a non-injective map".into()));
        }
        Ok(out)
    }

    /// `self` restricted to `sub` and corestricted to `onto`.
    pub fn restrict(&self, sub: &Subgroup, onto: &Subgroup) -> Result<AbHom> {
        self.compose(&sub.inclusion)?.factor_through(&onto.inclusion)
    }
}

fn reduce_mod(target: &FpAbelianGroup, m: &IntMatrix) -> IntMatrix {
    if target.relations.cols() == 0 || m.cols() == 0 {
        return m.clone();
    }
    hermite_basis(&target.relations).reduce_columns(m)
}

/// `f_1, ..., f_k : S -> T_i`; the kernel of the stacked map. An empty list
/// gives the whole source.
pub fn intersection_of_kernels(source: &FpAbelianGroup, fs: &[&AbHom]) -> Result<Subgroup> {
    let mut acc = source.whole();
    for f in fs {
        if f.source() != source {
            return Err(Error::Presentation("intersection_of_kernels: maps do not share a source".into()));
        }
        // One map at a time keeps the eliminations small.
        let k = f.compose(&acc.inclusion)?.kernel()?;
        let inclusion = acc.inclusion.compose(&k.inclusion)?;
        acc = Subgroup { group: k.group, inclusion };
    }
    Ok(acc)
}

impl Subgroup {
    pub fn ambient(&self) -> &FpAbelianGroup {
        self.inclusion.target()
    }

    pub fn contains(&self, x: &[BigInt]) -> Result<bool> {
        let joint = self.inclusion.matrix.hstack(&self.ambient().relations)?;
        Ok(solve(&joint, x)?.is_some())
    }

    pub fn is_contained_in(&self, other: &Subgroup) -> Result<bool> {
        if self.ambient() != other.ambient() {
            return Err(Error::Presentation("subgroups of different groups".into()));
        }
        let joint = other.inclusion.matrix.hstack(&other.ambient().relations)?;
        Ok(solve_many(&joint, &self.inclusion.matrix)?.is_some())
    }

    /// `factor_through` the inclusion for several maps at once.
    pub fn factor_all(&self, fs: &[AbHom]) -> Result<Vec<AbHom>> {
        if fs.iter().any(|f| f.target() != self.ambient()) {
            return Err(Error::Presentation("factor_all: map does not land in the ambient group".into()));
        }
        let blocks: Vec<&IntMatrix> = fs.iter().map(|f| &f.matrix).collect();
        let rhs = IntMatrix::hstack_all(self.ambient().generators, &blocks)?;
        let joint = self.inclusion.matrix.hstack(&self.ambient().relations)?;
        let sol = solve_many(&joint, &rhs)?.ok_or_else(|| Error::Invalid("map does not factor through the given subgroup".into()))?;
        let h = sol.row_range(0..self.group.generators);
        let mut out = Vec::with_capacity(fs.len());
        let mut col = 0;
        for f in fs {
            let w = f.source.generators;
            let g = AbHom::reduced(f.source.clone(), self.group.clone(), h.column_range(col..col + w));
            if !g.is_well_defined()? {
                return Err(Error::IllDefined("factorization through a non-injective map".into()));
            }
            out.push(g);
            col += w;
        }
        Ok(out)
    }

    pub fn same_as(&self, other: &Subgroup) -> Result<bool> {
        Ok(self.is_contained_in(other)? && other.is_contained_in(self)?)
    }
}
