//! Finitely presented abelian groups in Smith normal form, their elements
//! and homomorphisms, subgroup presentations, and the multiplicative
//! degree maps used by the automorphism refiner.
//!
//! A group is the cokernel of its relation matrix. Canonical coordinates
//! list the free generators first, then the torsion generators in
//! increasing invariant-factor order; elements are integer vectors in
//! canonical coordinates with torsion entries reduced.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use num::Integer;

use crate::error::{Error, Result};
use crate::intmat::{self, IntMat};
use crate::scalar::{self, Field, FieldKind, Scalar};

#[derive(Debug)]
struct GroupData {
    ngens: usize,
    relations: IntMat,
    free_rank: usize,
    invariant_factors: Vec<BigInt>,
    col_ops: IntMat,
    col_ops_inv: IntMat,
    /// Positions in transformed presentation coordinates, in canonical
    /// order: free positions first, then torsion positions.
    canonical_positions: Vec<usize>,
}

/// A finitely presented abelian group. Equality compares canonical data
/// (free rank and invariant factors); the presentation is provenance.
#[derive(Clone, Debug)]
pub struct AbelianGroup(Arc<GroupData>);

impl PartialEq for AbelianGroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.free_rank == other.0.free_rank
                && self.0.invariant_factors == other.0.invariant_factors)
    }
}

impl Eq for AbelianGroup {}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.0.free_rank == 1 {
            parts.push("Z".into());
        } else if self.0.free_rank > 1 {
            parts.push(format!("Z^{}", self.0.free_rank));
        }
        for d in &self.0.invariant_factors {
            parts.push(format!("Z/{d}"));
        }
        if parts.is_empty() {
            parts.push("0".into());
        }
        write!(f, "{}", parts.join(" x "))
    }
}

impl AbelianGroup {
    /// Cokernel of a relation matrix (rows are relations on `ngens`
    /// presentation generators).
    pub fn from_presentation(ngens: usize, relations: IntMat) -> Result<AbelianGroup> {
        if relations.ncols() != ngens {
            return Err(Error::DimensionMismatch {
                expected: ngens,
                got: relations.ncols(),
            });
        }
        let snf = intmat::smith_normal_form(&relations);
        let k = relations.nrows().min(ngens);
        let mut torsion_positions = Vec::new();
        let mut free_positions = Vec::new();
        let mut invariant_factors = Vec::new();
        for j in 0..ngens {
            let d = if j < k {
                snf.s.get(j, j).clone()
            } else {
                BigInt::zero()
            };
            if d.is_zero() {
                free_positions.push(j);
            } else if !d.is_one() {
                torsion_positions.push(j);
                invariant_factors.push(d);
            }
        }
        let mut canonical_positions = free_positions;
        let free_rank = canonical_positions.len();
        canonical_positions.extend(torsion_positions);
        Ok(AbelianGroup(Arc::new(GroupData {
            ngens,
            relations,
            free_rank,
            invariant_factors,
            col_ops: snf.col_ops,
            col_ops_inv: snf.col_ops_inv,
            canonical_positions,
        })))
    }

    /// Direct construction from canonical data; the invariant factors must
    /// already satisfy the divisibility chain.
    pub fn from_canonical(free_rank: usize, invariant_factors: Vec<BigInt>) -> AbelianGroup {
        for w in invariant_factors.windows(2) {
            debug_assert!(w[1].mod_floor(&w[0]).is_zero(), "broken divisibility chain");
        }
        debug_assert!(invariant_factors.iter().all(|d| *d >= BigInt::from(2)));
        let n = free_rank + invariant_factors.len();
        let mut rel_rows = Vec::new();
        for (i, d) in invariant_factors.iter().enumerate() {
            let mut row = vec![BigInt::zero(); n];
            row[free_rank + i] = d.clone();
            rel_rows.push(row);
        }
        AbelianGroup(Arc::new(GroupData {
            ngens: n,
            relations: IntMat::from_rows(rel_rows, n),
            free_rank,
            invariant_factors,
            col_ops: IntMat::identity(n),
            col_ops_inv: IntMat::identity(n),
            canonical_positions: (0..n).collect(),
        }))
    }

    pub fn integers() -> AbelianGroup {
        AbelianGroup::from_canonical(1, vec![])
    }

    pub fn free(rank: usize) -> AbelianGroup {
        AbelianGroup::from_canonical(rank, vec![])
    }

    pub fn trivial() -> AbelianGroup {
        AbelianGroup::from_canonical(0, vec![])
    }

    pub fn cyclic(n: u64) -> AbelianGroup {
        if n <= 1 {
            AbelianGroup::trivial()
        } else {
            AbelianGroup::from_canonical(0, vec![BigInt::from(n)])
        }
    }

    pub fn free_rank(&self) -> usize {
        self.0.free_rank
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.0.invariant_factors
    }

    /// Number of canonical generators.
    pub fn rank(&self) -> usize {
        self.0.free_rank + self.0.invariant_factors.len()
    }

    pub fn presentation_ngens(&self) -> usize {
        self.0.ngens
    }

    pub fn presentation_relations(&self) -> &IntMat {
        &self.0.relations
    }

    pub fn is_trivial(&self) -> bool {
        self.rank() == 0
    }

    /// Order of the i-th canonical generator (None = infinite).
    pub fn generator_order(&self, i: usize) -> Option<&BigInt> {
        if i < self.0.free_rank {
            None
        } else {
            Some(&self.0.invariant_factors[i - self.0.free_rank])
        }
    }

    fn reduce(&self, mut coords: Vec<BigInt>) -> Vec<BigInt> {
        for (i, d) in self.0.invariant_factors.iter().enumerate() {
            let idx = self.0.free_rank + i;
            coords[idx] = coords[idx].mod_floor(d);
        }
        coords
    }

    /// An element from canonical coordinates.
    pub fn element(&self, coords: Vec<BigInt>) -> Result<GroupElement> {
        if coords.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: coords.len(),
            });
        }
        Ok(GroupElement {
            group: self.clone(),
            coords: self.reduce(coords),
        })
    }

    pub fn element_i64(&self, coords: &[i64]) -> Result<GroupElement> {
        self.element(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement {
            group: self.clone(),
            coords: vec![BigInt::zero(); self.rank()],
        }
    }

    pub fn generator(&self, i: usize) -> GroupElement {
        let mut coords = vec![BigInt::zero(); self.rank()];
        coords[i] = BigInt::one();
        GroupElement {
            group: self.clone(),
            coords,
        }
    }

    /// Map presentation coordinates to the canonical element they present.
    pub fn project(&self, presentation_coords: &[BigInt]) -> GroupElement {
        assert_eq!(presentation_coords.len(), self.0.ngens);
        let w = transform_row(presentation_coords, &self.0.col_ops);
        let coords = self
            .0
            .canonical_positions
            .iter()
            .map(|&p| w[p].clone())
            .collect();
        GroupElement {
            group: self.clone(),
            coords: self.reduce(coords),
        }
    }

    /// Presentation coordinates of the i-th canonical generator.
    pub fn canonical_generator_presentation(&self, i: usize) -> Vec<BigInt> {
        let pos = self.0.canonical_positions[i];
        self.0.col_ops_inv.row(pos).to_vec()
    }

    /// Rows enforcing the torsion relations in canonical coordinates.
    fn torsion_relation_rows(&self) -> Vec<Vec<BigInt>> {
        let n = self.rank();
        self.0
            .invariant_factors
            .iter()
            .enumerate()
            .map(|(i, d)| {
                let mut row = vec![BigInt::zero(); n];
                row[self.0.free_rank + i] = d.clone();
                row
            })
            .collect()
    }
}

/// True iff the canonical invariants coincide, which classifies finitely
/// generated abelian groups completely.
pub fn groups_isomorphic(a: &AbelianGroup, b: &AbelianGroup) -> bool {
    a == b
}

fn transform_row(v: &[BigInt], m: &IntMat) -> Vec<BigInt> {
    m.mul_row_vec(v)
}

/// An element in canonical coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement {
    group: AbelianGroup,
    coords: Vec<BigInt>,
}

impl GroupElement {
    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn coords_strings(&self) -> Vec<String> {
        self.coords.iter().map(|c| c.to_string()).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn compose(&self, other: &GroupElement) -> Result<GroupElement> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        Ok(GroupElement {
            group: self.group.clone(),
            coords: self.group.reduce(coords),
        })
    }

    pub fn inverse(&self) -> GroupElement {
        let coords = self.coords.iter().map(|c| -c).collect();
        GroupElement {
            group: self.group.clone(),
            coords: self.group.reduce(coords),
        }
    }

    pub fn scaled(&self, n: &BigInt) -> GroupElement {
        let coords = self.coords.iter().map(|c| c * n).collect();
        GroupElement {
            group: self.group.clone(),
            coords: self.group.reduce(coords),
        }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.coords_strings().join(","))
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.group
            .0
            .free_rank
            .cmp(&other.group.0.free_rank)
            .then_with(|| {
                self.group
                    .0
                    .invariant_factors
                    .cmp(&other.group.0.invariant_factors)
            })
            .then_with(|| self.coords.cmp(&other.coords))
    }
}

/// A homomorphism between finitely presented abelian groups, given by the
/// images of the canonical generators and validated at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    src: AbelianGroup,
    dst: AbelianGroup,
    images: Vec<GroupElement>,
}

impl GroupHom {
    pub fn new(src: &AbelianGroup, dst: &AbelianGroup, images: Vec<GroupElement>) -> Result<GroupHom> {
        if images.len() != src.rank() {
            return Err(Error::DimensionMismatch {
                expected: src.rank(),
                got: images.len(),
            });
        }
        for im in &images {
            if im.group() != dst {
                return Err(Error::GroupMismatch);
            }
        }
        for (i, d) in src.invariant_factors().iter().enumerate() {
            let gen_index = src.free_rank() + i;
            let image = images[gen_index].scaled(d);
            if !image.is_identity() {
                let mut relation = vec!["0".to_string(); src.rank()];
                relation[gen_index] = d.to_string();
                return Err(Error::RelationNotKilled {
                    relation,
                    image: image.coords_strings(),
                });
            }
        }
        Ok(GroupHom {
            src: src.clone(),
            dst: dst.clone(),
            images,
        })
    }

    /// A homomorphism described on the presentation generators of `src`
    /// rather than canonical ones.
    pub fn from_presentation_images(
        src: &AbelianGroup,
        dst: &AbelianGroup,
        images: Vec<GroupElement>,
    ) -> Result<GroupHom> {
        if images.len() != src.presentation_ngens() {
            return Err(Error::DimensionMismatch {
                expected: src.presentation_ngens(),
                got: images.len(),
            });
        }
        let mut canonical_images = Vec::with_capacity(src.rank());
        for i in 0..src.rank() {
            let pres = src.canonical_generator_presentation(i);
            let mut acc = dst.identity();
            for (coef, img) in pres.iter().zip(&images) {
                acc = acc.compose(&img.scaled(coef))?;
            }
            canonical_images.push(acc);
        }
        GroupHom::new(src, dst, canonical_images)
    }

    pub fn identity(group: &AbelianGroup) -> GroupHom {
        let images = (0..group.rank()).map(|i| group.generator(i)).collect();
        GroupHom {
            src: group.clone(),
            dst: group.clone(),
            images,
        }
    }

    pub fn zero(src: &AbelianGroup, dst: &AbelianGroup) -> GroupHom {
        GroupHom {
            src: src.clone(),
            dst: dst.clone(),
            images: vec![dst.identity(); src.rank()],
        }
    }

    pub fn src(&self) -> &AbelianGroup {
        &self.src
    }

    pub fn dst(&self) -> &AbelianGroup {
        &self.dst
    }

    pub fn images(&self) -> &[GroupElement] {
        &self.images
    }

    pub fn apply(&self, x: &GroupElement) -> Result<GroupElement> {
        if x.group() != &self.src {
            return Err(Error::GroupMismatch);
        }
        let mut acc = self.dst.identity();
        for (c, img) in x.coords().iter().zip(&self.images) {
            acc = acc.compose(&img.scaled(c))?;
        }
        Ok(acc)
    }

    /// `self` after `first`: apply(first, x) then apply(self, ...).
    pub fn compose(&self, first: &GroupHom) -> Result<GroupHom> {
        if first.dst != self.src {
            return Err(Error::GroupMismatch);
        }
        let images = first
            .images
            .iter()
            .map(|img| self.apply(img))
            .collect::<Result<Vec<_>>>()?;
        GroupHom::new(&first.src, &self.dst, images)
    }

    /// True iff the map is a group isomorphism: the canonical invariants
    /// coincide and the images generate the codomain (finitely generated
    /// abelian groups are Hopfian, so a surjection between isomorphic
    /// groups is bijective).
    pub fn is_isomorphism(&self) -> bool {
        if !groups_isomorphic(&self.src, &self.dst) {
            return false;
        }
        let n = self.dst.rank();
        let mut rows: Vec<Vec<BigInt>> = self
            .images
            .iter()
            .map(|im| im.coords().to_vec())
            .collect();
        rows.extend(self.dst.torsion_relation_rows());
        let stacked = IntMat::from_rows(rows, n);
        (0..n).all(|i| {
            let target: Vec<BigInt> = (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect();
            intmat::solve_left(&stacked, &target).is_some()
        })
    }
}

/// A subgroup of an ambient group, presented on a chosen generating set,
/// with membership testing that rewrites ambient elements in terms of the
/// generators.
#[derive(Clone, Debug)]
pub struct Subgroup {
    ambient: AbelianGroup,
    group: AbelianGroup,
    generators: Vec<GroupElement>,
    stacked: IntMat,
}

impl Subgroup {
    /// Present the subgroup of `ambient` generated by `elements`, one
    /// presentation generator per element.
    pub fn generated_by(ambient: &AbelianGroup, elements: &[GroupElement]) -> Result<Subgroup> {
        for e in elements {
            if e.group() != ambient {
                return Err(Error::GroupMismatch);
            }
        }
        let m = elements.len();
        let n = ambient.rank();
        let mut rows: Vec<Vec<BigInt>> = elements.iter().map(|e| e.coords().to_vec()).collect();
        rows.extend(ambient.torsion_relation_rows());
        let stacked = IntMat::from_rows(rows, n);
        let kernel = intmat::left_kernel_basis(&stacked);
        let relation_rows: Vec<Vec<BigInt>> =
            kernel.into_iter().map(|r| r[..m].to_vec()).collect();
        let group =
            AbelianGroup::from_presentation(m, IntMat::from_rows(relation_rows, m))?;
        Ok(Subgroup {
            ambient: ambient.clone(),
            group,
            generators: elements.to_vec(),
            stacked,
        })
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn ambient(&self) -> &AbelianGroup {
        &self.ambient
    }

    /// The class of the i-th chosen generator inside the subgroup.
    pub fn generator_class(&self, i: usize) -> GroupElement {
        let mut pres = vec![BigInt::zero(); self.generators.len()];
        pres[i] = BigInt::one();
        self.group.project(&pres)
    }

    /// Rewrite an ambient element as a subgroup element, if it lies in the
    /// subgroup.
    pub fn express(&self, x: &GroupElement) -> Result<GroupElement> {
        if x.group() != &self.ambient {
            return Err(Error::GroupMismatch);
        }
        match intmat::solve_left(&self.stacked, x.coords()) {
            Some(sol) => Ok(self.group.project(&sol[..self.generators.len()])),
            None => Err(Error::NotInSubgroup),
        }
    }

    /// The inclusion homomorphism into the ambient group.
    pub fn inclusion(&self) -> Result<GroupHom> {
        GroupHom::from_presentation_images(&self.group, &self.ambient, self.generators.clone())
    }
}

/// Direct product presented on the canonical generators of both factors,
/// with the two injections.
pub fn product(g: &AbelianGroup, h: &AbelianGroup) -> Result<(AbelianGroup, GroupHom, GroupHom)> {
    let n = g.rank() + h.rank();
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for (i, d) in g.invariant_factors().iter().enumerate() {
        let mut row = vec![BigInt::zero(); n];
        row[g.free_rank() + i] = d.clone();
        rows.push(row);
    }
    for (i, d) in h.invariant_factors().iter().enumerate() {
        let mut row = vec![BigInt::zero(); n];
        row[g.rank() + h.free_rank() + i] = d.clone();
        rows.push(row);
    }
    let p = AbelianGroup::from_presentation(n, IntMat::from_rows(rows, n))?;
    let gen = |i: usize| {
        let mut pres = vec![BigInt::zero(); n];
        pres[i] = BigInt::one();
        p.project(&pres)
    };
    let left = GroupHom::new(g, &p, (0..g.rank()).map(gen).collect())?;
    let right = GroupHom::new(h, &p, (g.rank()..n).map(gen).collect())?;
    Ok((p, left, right))
}

/// Degree assignment for a finitely generated multiplicative subgroup of
/// the nonzero rationals, presented on the occurring primes and the sign.
#[derive(Clone, Debug)]
pub struct RationalDegreeMap {
    primes: Vec<u64>,
    subgroup: Subgroup,
}

impl RationalDegreeMap {
    pub fn degree(&self, q: &BigRational) -> Result<GroupElement> {
        let (sign, exps) = scalar::factor_rational_multiplicative(q)?;
        let mut coords = vec![BigInt::zero(); self.primes.len() + 1];
        for (p, e) in exps {
            match self.primes.binary_search(&p) {
                Ok(i) => coords[i] = BigInt::from(e),
                Err(_) => return Err(Error::NotInSubgroup),
            }
        }
        if sign < 0 {
            coords[self.primes.len()] = BigInt::one();
        }
        let ambient_elt = self.subgroup.ambient().element(coords)?;
        self.subgroup.express(&ambient_elt)
    }
}

/// The subgroup of Q^x generated by the given nonzero rationals, together
/// with a multiplicative degree map into it.
pub fn multiplicative_subgroup_of_rationals(
    generators: &[BigRational],
) -> Result<(AbelianGroup, RationalDegreeMap)> {
    let mut factored = Vec::new();
    for q in generators {
        if q.is_zero() {
            return Err(Error::ZeroGenerator);
        }
        factored.push(scalar::factor_rational_multiplicative(q)?);
    }
    let mut primes: Vec<u64> = factored
        .iter()
        .flat_map(|(_, e)| e.keys().copied())
        .collect();
    primes.sort();
    primes.dedup();
    // Ambient: free part indexed by the primes, one order-2 sign factor.
    let ambient = AbelianGroup::from_canonical(primes.len(), vec![BigInt::from(2)]);
    let elements: Vec<GroupElement> = factored
        .iter()
        .map(|(sign, exps)| {
            let mut coords = vec![BigInt::zero(); primes.len() + 1];
            for (p, e) in exps {
                let i = primes.binary_search(p).unwrap();
                coords[i] = BigInt::from(*e);
            }
            if *sign < 0 {
                coords[primes.len()] = BigInt::one();
            }
            ambient.element(coords).unwrap()
        })
        .collect();
    let subgroup = Subgroup::generated_by(&ambient, &elements)?;
    Ok((
        subgroup.group().clone(),
        RationalDegreeMap { primes, subgroup },
    ))
}

/// Degree assignment for a multiplicative subgroup of a prime field,
/// backed by brute-force discrete logarithms (p <= 10^6).
#[derive(Clone, Debug)]
pub struct PrimeFieldDegreeMap {
    field: Field,
    primitive_root: u64,
    subgroup: Subgroup,
}

impl PrimeFieldDegreeMap {
    pub fn degree(&self, x: &Scalar) -> Result<GroupElement> {
        if x.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        let v = x.as_prime().ok_or(Error::FieldMismatch)?;
        if v == 0 {
            return Err(Error::ZeroGenerator);
        }
        let p = self.field.characteristic();
        if p == 2 {
            return self.subgroup.express(&self.subgroup.ambient().identity());
        }
        let d = discrete_log(self.primitive_root, v, p).ok_or(Error::NotInSubgroup)?;
        let ambient_elt = self.subgroup.ambient().element(vec![BigInt::from(d)])?;
        self.subgroup.express(&ambient_elt)
    }
}

fn discrete_log(base: u64, target: u64, p: u64) -> Option<u64> {
    let mut acc = 1u64;
    for e in 0..p - 1 {
        if acc == target {
            return Some(e);
        }
        acc = ((acc as u128 * base as u128) % p as u128) as u64;
    }
    None
}

fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let mut m = p - 1;
    let mut prime_divisors = Vec::new();
    let mut d = 2u64;
    while d * d <= m {
        if m % d == 0 {
            prime_divisors.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        prime_divisors.push(m);
    }
    let powmod = |mut a: u64, mut e: u64| -> u64 {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = ((acc as u128 * a as u128) % p as u128) as u64;
            }
            a = ((a as u128 * a as u128) % p as u128) as u64;
            e >>= 1;
        }
        acc
    };
    'next: for g in 2..p {
        for q in &prime_divisors {
            if powmod(g, (p - 1) / q) == 1 {
                continue 'next;
            }
        }
        return g;
    }
    unreachable!("a primitive root exists for every prime")
}

/// The multiplicative subgroup of F_p^x generated by the given nonzero
/// elements, with its degree map.
pub fn multiplicative_subgroup_of_prime_field(
    field: &Field,
    generators: &[Scalar],
) -> Result<(AbelianGroup, PrimeFieldDegreeMap)> {
    let FieldKind::Prime(p) = field.kind() else {
        return Err(Error::FieldMismatch);
    };
    let p = *p;
    if p > 1_000_000 {
        return Err(Error::Unsupported(
            "discrete logarithms limited to p <= 10^6".into(),
        ));
    }
    let root = primitive_root(p);
    let mut dlog_cache: HashMap<u64, u64> = HashMap::new();
    let mut acc = 1u64;
    for e in 0..p - 1 {
        dlog_cache.entry(acc).or_insert(e);
        acc = ((acc as u128 * root as u128) % p as u128) as u64;
    }
    let ambient = AbelianGroup::cyclic(p - 1);
    let mut elements = Vec::new();
    for g in generators {
        if g.field() != field {
            return Err(Error::FieldMismatch);
        }
        let v = g.as_prime().ok_or(Error::FieldMismatch)?;
        if v == 0 {
            return Err(Error::ZeroGenerator);
        }
        let d = *dlog_cache.get(&v).expect("every unit has a discrete log");
        let coords = if ambient.is_trivial() {
            vec![]
        } else {
            vec![BigInt::from(d)]
        };
        elements.push(ambient.element(coords)?);
    }
    let subgroup = Subgroup::generated_by(&ambient, &elements)?;
    Ok((
        subgroup.group().clone(),
        PrimeFieldDegreeMap {
            field: field.clone(),
            primitive_root: root,
            subgroup,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> AbelianGroup {
        AbelianGroup::integers()
    }

    #[test]
    fn presentation_examples() {
        // one generator, no relations: Z
        let g = AbelianGroup::from_presentation(1, IntMat::zero(0, 1)).unwrap();
        assert_eq!(g.free_rank(), 1);
        assert!(g.invariant_factors().is_empty());

        // [[2,0],[0,2]]: Z/2 x Z/2
        let g = AbelianGroup::from_presentation(
            2,
            IntMat::from_i64_rows(&[vec![2, 0], vec![0, 2]], 2),
        )
        .unwrap();
        assert_eq!(g.free_rank(), 0);
        assert_eq!(
            g.invariant_factors(),
            &[BigInt::from(2), BigInt::from(2)]
        );

        // [[1,-1]]: Z
        let g = AbelianGroup::from_presentation(2, IntMat::from_i64_rows(&[vec![1, -1]], 2))
            .unwrap();
        assert_eq!(g.free_rank(), 1);
        assert!(g.invariant_factors().is_empty());
    }

    #[test]
    fn presentation_projection_consistency() {
        // Z/4 presented on two generators a, b with a = 3b: group is Z/4
        // generated by the class of b.
        let g = AbelianGroup::from_presentation(
            2,
            IntMat::from_i64_rows(&[vec![1, -3], vec![0, 4]], 2),
        )
        .unwrap();
        assert_eq!(g.invariant_factors(), &[BigInt::from(4)]);
        let a = g.project(&[BigInt::one(), BigInt::zero()]);
        let b = g.project(&[BigInt::zero(), BigInt::one()]);
        assert_eq!(a, b.scaled(&BigInt::from(3)));
        // relation rows project to the identity
        let rel = g.project(&[BigInt::from(1), BigInt::from(-3)]);
        assert!(rel.is_identity());
    }

    #[test]
    fn element_arithmetic_mod_4() {
        let g = AbelianGroup::cyclic(4);
        let three = g.element_i64(&[3]).unwrap();
        let two = g.element_i64(&[2]).unwrap();
        let one = g.element_i64(&[1]).unwrap();
        assert_eq!(three.compose(&two).unwrap(), one);
        assert_eq!(three.compose(&g.identity()).unwrap(), three);
        assert!(three.compose(&three.inverse()).unwrap().is_identity());
    }

    #[test]
    fn hom_validation() {
        // Z -> Z/5, generator to 1: fine
        let z5 = AbelianGroup::cyclic(5);
        let h = GroupHom::new(&z(), &z5, vec![z5.element_i64(&[1]).unwrap()]).unwrap();
        assert_eq!(
            h.apply(&z().element_i64(&[7]).unwrap()).unwrap(),
            z5.element_i64(&[2]).unwrap()
        );

        // Z/2 -> Z, generator to 1: relation not killed
        let z2 = AbelianGroup::cyclic(2);
        let err = GroupHom::new(&z2, &z(), vec![z().element_i64(&[1]).unwrap()]);
        assert!(matches!(err, Err(Error::RelationNotKilled { .. })));

        // identity hom acts as identity
        let idh = GroupHom::identity(&z5);
        let x = z5.element_i64(&[3]).unwrap();
        assert_eq!(idh.apply(&x).unwrap(), x);
    }

    #[test]
    fn hom_composition_respects_apply() {
        let z4 = AbelianGroup::cyclic(4);
        let z2 = AbelianGroup::cyclic(2);
        let f = GroupHom::new(&z(), &z4, vec![z4.element_i64(&[1]).unwrap()]).unwrap();
        let g = GroupHom::new(&z4, &z2, vec![z2.element_i64(&[1]).unwrap()]).unwrap();
        let gf = g.compose(&f).unwrap();
        for n in -5..5 {
            let x = z().element_i64(&[n]).unwrap();
            assert_eq!(
                gf.apply(&x).unwrap(),
                g.apply(&f.apply(&x).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn isomorphism_detection() {
        // Z/2 x Z/3 is isomorphic to Z/6
        let a = AbelianGroup::from_presentation(
            2,
            IntMat::from_i64_rows(&[vec![2, 0], vec![0, 3]], 2),
        )
        .unwrap();
        let b = AbelianGroup::cyclic(6);
        assert!(groups_isomorphic(&a, &b));
        assert!(!groups_isomorphic(&z(), &AbelianGroup::cyclic(2)));
        assert!(groups_isomorphic(&z(), &z()));

        // negation is an isomorphism of Z; doubling is not
        let neg = GroupHom::new(&z(), &z(), vec![z().element_i64(&[-1]).unwrap()]).unwrap();
        assert!(neg.is_isomorphism());
        let dbl = GroupHom::new(&z(), &z(), vec![z().element_i64(&[2]).unwrap()]).unwrap();
        assert!(!dbl.is_isomorphism());
    }

    #[test]
    fn subgroup_of_z2_diagonal() {
        let g = AbelianGroup::free(2);
        let d = g.element_i64(&[2, 2]).unwrap();
        let sub = Subgroup::generated_by(&g, &[d.clone()]).unwrap();
        assert_eq!(sub.group().free_rank(), 1);
        assert!(sub.express(&d).is_ok());
        assert!(matches!(
            sub.express(&g.element_i64(&[1, 1]).unwrap()),
            Err(Error::NotInSubgroup)
        ));
    }

    #[test]
    fn multiplicative_subgroup_examples() {
        let q = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
        // {1, -1}: Z/2 with -1 the involution
        let (g, deg) = multiplicative_subgroup_of_rationals(&[q(1, 1), q(-1, 1)]).unwrap();
        assert_eq!(g, AbelianGroup::cyclic(2));
        let m = deg.degree(&q(-1, 1)).unwrap();
        assert!(!m.is_identity());
        assert!(m.compose(&m).unwrap().is_identity());

        // {2, 4}: infinite cyclic generated by 2; degree(4) = 2*degree(2)
        let (g, deg) = multiplicative_subgroup_of_rationals(&[q(2, 1), q(4, 1)]).unwrap();
        assert_eq!(g, AbelianGroup::integers());
        let d2 = deg.degree(&q(2, 1)).unwrap();
        let d4 = deg.degree(&q(4, 1)).unwrap();
        assert_eq!(d4, d2.scaled(&BigInt::from(2)));

        // {1}: trivial group
        let (g, _) = multiplicative_subgroup_of_rationals(&[q(1, 1)]).unwrap();
        assert!(g.is_trivial());

        // degree is multiplicative when defined
        let (_, deg) = multiplicative_subgroup_of_rationals(&[q(2, 1), q(-3, 1)]).unwrap();
        let a = q(2, 1);
        let b = q(-3, 1);
        let ab = &a * &b;
        assert_eq!(
            deg.degree(&ab).unwrap(),
            deg.degree(&a).unwrap().compose(&deg.degree(&b).unwrap()).unwrap()
        );
    }

    #[test]
    fn prime_field_degree_map() {
        let f7 = Field::prime(7).unwrap();
        let three = Scalar::prime_element(&f7, 3).unwrap();
        let two = Scalar::prime_element(&f7, 2).unwrap();
        // 3 generates F_7^x (order 6); 2 = 3^2
        let (g, deg) = multiplicative_subgroup_of_prime_field(&f7, &[three.clone()]).unwrap();
        assert_eq!(g, AbelianGroup::cyclic(6));
        let d3 = deg.degree(&three).unwrap();
        let d2 = deg.degree(&two).unwrap();
        assert_eq!(d2, d3.scaled(&BigInt::from(2)));

        // 2 generates only the order-3 subgroup; 3 is not in it
        let (g, deg) = multiplicative_subgroup_of_prime_field(&f7, &[two]).unwrap();
        assert_eq!(g, AbelianGroup::cyclic(3));
        assert!(matches!(deg.degree(&three), Err(Error::NotInSubgroup)));
    }

    #[test]
    fn product_injections() {
        let z2 = AbelianGroup::cyclic(2);
        let z3 = AbelianGroup::cyclic(3);
        let (p, i1, i2) = product(&z2, &z3).unwrap();
        assert_eq!(p, AbelianGroup::cyclic(6));
        let a = i1.apply(&z2.element_i64(&[1]).unwrap()).unwrap();
        let b = i2.apply(&z3.element_i64(&[1]).unwrap()).unwrap();
        assert!(a.scaled(&BigInt::from(2)).is_identity());
        assert!(b.scaled(&BigInt::from(3)).is_identity());
        assert!(!a.compose(&b).unwrap().is_identity());
    }

    #[test]
    fn presentation_row_operation_invariance() {
        // shuffling rows and adding multiples leaves canonical data fixed
        let base = IntMat::from_i64_rows(&[vec![2, 0, 4], vec![0, 6, 0]], 3);
        let variant = IntMat::from_i64_rows(
            &[vec![0, 6, 0], vec![2, 6, 4], vec![2, 0, 4]],
            3,
        );
        let a = AbelianGroup::from_presentation(3, base).unwrap();
        let b = AbelianGroup::from_presentation(3, variant).unwrap();
        assert_eq!(a.free_rank(), b.free_rank());
        assert_eq!(a.invariant_factors(), b.invariant_factors());
    }
}
