use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::snf::{lattice_basis, smith_normal_form, IntMatrix};
use crate::{Error, Modulus, Result};

/// A finitely presented abelian group `ℤ^r / ⟨relations, m·eᵢ⟩`.
///
/// The cyclic normal form is computed at construction: the group is
/// isomorphic to `⊕ ℤ/dₖ` over its nontrivial invariant factors (with
/// `dₖ = 0` standing for ℤ), and `to_cyclic`/`from_cyclic` translate between
/// ambient coordinates and that decomposition.
#[derive(Clone)]
pub struct FpGroup {
    modulus: Modulus,
    rank: usize,
    relations: IntMatrix,
    factors: Vec<BigInt>,
    to_cyclic: IntMatrix,
    from_cyclic: IntMatrix,
}

impl FpGroup {
    /// `relations` has one column per relator, `rank` rows.
    pub fn new(modulus: Modulus, rank: usize, relations: IntMatrix) -> Result<Self> {
        if relations.rows() != rank {
            return Err(Error::Shape(format!(
                "relation matrix has {} rows, expected {rank}",
                relations.rows()
            )));
        }
        let full = if modulus == 0 {
            relations
        } else {
            relations.hconcat(&IntMatrix::identity(rank).scale(&BigInt::from(modulus)))
        };
        let relations = lattice_basis(&full);
        let snf = smith_normal_form(&relations);
        let diag = snf.diagonal();
        let mut keep = Vec::new();
        let mut factors = Vec::new();
        for i in 0..rank {
            let d = diag.get(i).cloned().unwrap_or_default();
            if !d.is_one() {
                keep.push(i);
                factors.push(d);
            }
        }
        Ok(FpGroup {
            modulus,
            rank,
            to_cyclic: snf.u.select_rows(keep.iter().copied()),
            from_cyclic: snf.u_inv.select_columns(keep.iter().copied()),
            relations,
            factors,
        })
    }

    /// `⊕ ℤ/dᵢ` with one ambient generator per order (`0` = ℤ).
    pub fn cyclic<T: Into<BigInt> + Clone>(modulus: Modulus, orders: &[T]) -> Self {
        let n = orders.len();
        Self::new(modulus, n, IntMatrix::diagonal(n, n, orders)).expect("diagonal presentation")
    }

    pub fn free(modulus: Modulus, rank: usize) -> Self {
        Self::new(modulus, rank, IntMatrix::zeros(rank, 0)).expect("free presentation")
    }

    pub fn zero(modulus: Modulus) -> Self {
        Self::free(modulus, 0)
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn ambient_rank(&self) -> usize {
        self.rank
    }

    /// Relation lattice basis, the implicit `m·eᵢ` included.
    pub fn relations(&self) -> &IntMatrix {
        &self.relations
    }

    /// Nontrivial invariant factors `d₁ | d₂ | …`, free factors as trailing zeros.
    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.factors
    }

    pub fn cyclic_rank(&self) -> usize {
        self.factors.len()
    }

    pub fn group_type(&self) -> GroupType {
        GroupType::from_factors(&self.factors)
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    /// `None` for infinite groups.
    pub fn order(&self) -> Option<BigInt> {
        self.factors
            .iter()
            .try_fold(BigInt::one(), |acc, d| (!d.is_zero()).then(|| acc * d))
    }

    /// Canonical coordinates in `⊕ ℤ/dₖ`, each reduced into `[0, dₖ)`.
    pub fn to_cyclic(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.to_cyclic
            .mul_vec(x)
            .into_iter()
            .zip(&self.factors)
            .map(|(c, d)| if d.is_zero() { c } else { c.mod_floor(d) })
            .collect()
    }

    pub fn from_cyclic(&self, c: &[BigInt]) -> Vec<BigInt> {
        self.reduce(self.from_cyclic.mul_vec(c))
    }

    /// Ambient image of the `k`-th cyclic generator.
    pub fn cyclic_generator(&self, k: usize) -> Vec<BigInt> {
        self.reduce(self.from_cyclic.column(k))
    }

    pub(crate) fn to_cyclic_matrix(&self) -> &IntMatrix {
        &self.to_cyclic
    }

    pub(crate) fn from_cyclic_matrix(&self) -> &IntMatrix {
        &self.from_cyclic
    }

    pub fn is_zero_coords(&self, x: &[BigInt]) -> bool {
        self.to_cyclic(x).iter().all(Zero::is_zero)
    }

    /// Reduces coordinates modulo the ring modulus (not modulo the relations).
    pub fn reduce(&self, mut x: Vec<BigInt>) -> Vec<BigInt> {
        if self.modulus != 0 {
            let m = BigInt::from(self.modulus);
            for v in &mut x {
                *v = v.mod_floor(&m);
            }
        }
        x
    }

    /// Same presentation (not merely isomorphic).
    pub fn same_as(self: &Arc<Self>, other: &Arc<Self>) -> bool {
        Arc::ptr_eq(self, other) || **self == **other
    }

    pub fn element(self: &Arc<Self>, coords: Vec<BigInt>) -> Element {
        Element::new(self.clone(), coords)
    }

    pub fn zero_element(self: &Arc<Self>) -> Element {
        Element::new(self.clone(), vec![BigInt::zero(); self.rank])
    }

    pub fn generators(self: &Arc<Self>) -> Vec<Element> {
        (0..self.rank)
            .map(|i| {
                let mut e = vec![BigInt::zero(); self.rank];
                e[i] = BigInt::one();
                self.element(e)
            })
            .collect()
    }

    /// Every element of a finite group, as canonical representatives.
    /// Panics on infinite groups; meant for small instances.
    pub fn elements(self: &Arc<Self>) -> Vec<Element> {
        let orders: Vec<u64> = self
            .factors
            .iter()
            .map(|d| {
                assert!(!d.is_zero(), "cannot enumerate an infinite group");
                d.to_u64().expect("factor fits in u64")
            })
            .collect();
        let mut out = Vec::new();
        let mut c = vec![0u64; orders.len()];
        loop {
            let big: Vec<BigInt> = c.iter().map(|&v| BigInt::from(v)).collect();
            out.push(self.element(self.from_cyclic(&big)));
            let mut k = 0;
            loop {
                if k == c.len() {
                    return out;
                }
                c[k] += 1;
                if c[k] < orders[k] {
                    break;
                }
                c[k] = 0;
                k += 1;
            }
        }
    }
}

impl PartialEq for FpGroup {
    fn eq(&self, other: &Self) -> bool {
        self.modulus == other.modulus && self.rank == other.rank && self.relations == other.relations
    }
}

impl Eq for FpGroup {}

impl fmt::Debug for FpGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FpGroup(m={}, rank={}, {})",
            self.modulus,
            self.rank,
            self.group_type()
        )
    }
}

/// Isomorphism class of a finitely generated abelian group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupType {
    /// Torsion invariant factors, all `> 1`, each dividing the next.
    pub torsion: Vec<BigInt>,
    pub free_rank: usize,
}

impl GroupType {
    pub fn trivial() -> Self {
        GroupType {
            torsion: Vec::new(),
            free_rank: 0,
        }
    }

    /// Accepts any list of cyclic orders (not necessarily a divisibility chain).
    pub fn from_factors(factors: &[BigInt]) -> Self {
        let orders: Vec<BigInt> = factors.iter().map(|d| d.abs()).collect();
        let free_rank = orders.iter().filter(|d| d.is_zero()).count();
        let torsion_orders: Vec<BigInt> = orders.into_iter().filter(|d| !d.is_zero()).collect();
        let n = torsion_orders.len();
        let g = FpGroup::new(0, n, IntMatrix::diagonal(n, n, &torsion_orders)).expect("diagonal");
        GroupType {
            torsion: g.factors,
            free_rank,
        }
    }

    pub fn cyclic(order: u64) -> Self {
        Self::from_factors(&[BigInt::from(order)])
    }

    pub fn is_trivial(&self) -> bool {
        self.torsion.is_empty() && self.free_rank == 0
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = self.torsion.iter().map(|d| format!("Z/{d}")).collect();
        if self.free_rank > 0 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

/// An element of an [`FpGroup`], stored as a coset representative.
/// Equality is decided modulo the relations.
#[derive(Clone)]
pub struct Element {
    group: Arc<FpGroup>,
    coords: Vec<BigInt>,
}

impl Element {
    pub fn new(group: Arc<FpGroup>, coords: Vec<BigInt>) -> Self {
        assert_eq!(coords.len(), group.ambient_rank(), "element coordinate length");
        let coords = group.reduce(coords);
        Element { group, coords }
    }

    pub fn group(&self) -> &Arc<FpGroup> {
        &self.group
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.group.is_zero_coords(&self.coords)
    }

    pub fn cyclic_coords(&self) -> Vec<BigInt> {
        self.group.to_cyclic(&self.coords)
    }

    /// Canonical representative of the same class.
    pub fn normalized(&self) -> Element {
        let c = self.cyclic_coords();
        Element::new(self.group.clone(), self.group.from_cyclic(&c))
    }

    pub fn scale(&self, k: &BigInt) -> Element {
        Element::new(self.group.clone(), self.coords.iter().map(|x| x * k).collect())
    }

    fn check_same_group(&self, other: &Element) {
        assert!(
            self.group.same_as(&other.group),
            "arithmetic between elements of different groups"
        );
    }
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.group.same_as(&other.group) && (self - other).is_zero()
    }
}

impl Eq for Element {}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        self.check_same_group(rhs);
        let c = self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect();
        Element::new(self.group.clone(), c)
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        self.check_same_group(rhs);
        let c = self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect();
        Element::new(self.group.clone(), c)
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element::new(self.group.clone(), self.coords.iter().map(|a| -a).collect())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element{:?}", self.coords)
    }
}

pub(crate) fn modulus_gcd(a: Modulus, b: Modulus) -> Modulus {
    a.gcd(&b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn invariant_factors_of_presentations() {
        let g = FpGroup::new(0, 2, IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]], 0)).unwrap();
        assert_eq!(g.invariant_factors(), &big(&[2, 4])[..]);
        assert_eq!(g.group_type().to_string(), "Z/2 ⊕ Z/4");
        let h = FpGroup::cyclic(0, &[2, 3, 0]);
        assert_eq!(h.invariant_factors(), &big(&[6, 0])[..]);
        assert_eq!(h.group_type().to_string(), "Z/6 ⊕ Z^1");
        assert_eq!(h.order(), None);
        // modulus folds in
        let k = FpGroup::cyclic(4, &[6]);
        assert_eq!(k.group_type(), GroupType::cyclic(2));
        assert_eq!(FpGroup::free(4, 2).order(), Some(BigInt::from(16)));
        assert!(FpGroup::zero(0).group_type().is_trivial());
        assert_eq!(FpGroup::zero(0).group_type().to_string(), "0");
    }

    #[test]
    fn factors_divide_modulus() {
        let g = FpGroup::new(12, 3, IntMatrix::from_rows(&[vec![3], vec![5], vec![0]], 0)).unwrap();
        for d in g.invariant_factors() {
            assert!(BigInt::from(12).is_multiple_of(d));
        }
    }

    #[test]
    fn cyclic_round_trip() {
        let g = Arc::new(
            FpGroup::new(0, 3, IntMatrix::from_rows(&[vec![2, 0], vec![4, 6], vec![0, 0]], 0)).unwrap(),
        );
        for x in [big(&[1, 2, 3]), big(&[-5, 7, 0]), big(&[0, 0, 1])] {
            let back = g.from_cyclic(&g.to_cyclic(&x));
            assert_eq!(g.element(back), g.element(x));
        }
    }

    #[test]
    fn element_equality_is_semantic() {
        let g = Arc::new(FpGroup::cyclic(0, &[4]));
        assert_eq!(g.element(big(&[1])), g.element(big(&[5])));
        assert_ne!(g.element(big(&[1])), g.element(big(&[3])));
        assert!(g.element(big(&[-8])).is_zero());
        assert_eq!(g.elements().len(), 4);
    }
}
