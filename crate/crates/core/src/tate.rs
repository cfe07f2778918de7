//! Tate cohomology and Tate homology over `ℤ/m`, each computed two ways,
//! and reports checking that the two ways agree.
//!
//! Ext-hat is indexed cohomologically: `Ext^n(M, N) = Hⁿ(Hom(P, N))` with
//! `Hom(P, N)ⁱ = Hom(Pᵢ, N)`. Tor-hat is indexed homologically:
//! `Tor_n(M, N) = H_n(P ⊗ N)`, which is `H^{-n}` in cohomological reading.

use std::ops::RangeInclusive;
use std::sync::Arc;

use crate::abgroup::{FpGroup, GroupType, Subgroup};
use crate::bicomplex::{BiClass, Bicomplex, Bidegree, Direction};
use crate::complex::{hom_from_module, hom_into_module, module_tensor_with, tensor_with_module, Complex, Convention};
use crate::constructions::{complete_injective_resolution, complete_projective_resolution, hom_bicomplex, tensor_bicomplex};
use crate::{Error, Modulus, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExtRoute {
    /// Resolve the first argument: `Hⁿ(Hom(P, N))`.
    ViaProjective,
    /// Resolve the second argument: `Hⁿ(Hom(M, E))`.
    ViaInjective,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TorRoute {
    /// `H_n(P ⊗ N)` with `P` resolving `M`.
    ResolveLeft,
    /// `H_n(M ⊗ Q)` with `Q` resolving `N`.
    ResolveRight,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TateKind {
    Ext,
    Tor,
}

/// Two modules over `ℤ/m` together with complete resolutions of both.
#[derive(Clone, Debug)]
pub struct TateSetup {
    modulus: Modulus,
    left: Arc<FpGroup>,
    right: Arc<FpGroup>,
    left_resolution: Complex,
    right_projective: Complex,
    right_injective: Complex,
}

fn require_exact(c: &Complex, what: &str) -> Result<()> {
    if let Some(&n) = c.exactness_report()?.first() {
        return Err(Error::InvalidComplex {
            degree: n,
            reason: format!("{what} is not exact"),
        });
    }
    Ok(())
}

impl TateSetup {
    pub fn new(m: Modulus, left: &Arc<FpGroup>, right: &Arc<FpGroup>) -> Result<Self> {
        let p = complete_projective_resolution(m, left)?;
        let q = complete_projective_resolution(m, right)?;
        let e = complete_injective_resolution(m, right)?;
        Self::from_resolutions(
            m,
            left.clone(),
            right.clone(),
            p.complex().clone(),
            q.complex().clone(),
            e.complex().clone(),
        )
    }

    /// Uses caller-supplied resolutions. They are re-checked to be exact
    /// complexes, which is all the routes rely on besides freeness.
    pub fn from_resolutions(
        m: Modulus,
        left: Arc<FpGroup>,
        right: Arc<FpGroup>,
        left_resolution: Complex,
        right_projective: Complex,
        right_injective: Complex,
    ) -> Result<Self> {
        let conventions = [
            (&left_resolution, Convention::Homological),
            (&right_projective, Convention::Homological),
            (&right_injective, Convention::Cohomological),
        ];
        for (c, conv) in conventions {
            if c.convention() != conv {
                return Err(Error::Shape(format!("resolution must be {conv:?}")));
            }
        }
        for c in [&left_resolution, &right_projective, &right_injective] {
            c.check_square_zero()?;
            require_exact(c, "resolution")?;
        }
        Ok(TateSetup {
            modulus: m,
            left,
            right,
            left_resolution,
            right_projective,
            right_injective,
        })
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn left_resolution(&self) -> &Complex {
        &self.left_resolution
    }

    pub fn right_injective(&self) -> &Complex {
        &self.right_injective
    }

    pub fn right_projective(&self) -> &Complex {
        &self.right_projective
    }

    pub fn ext(&self, n: i64, route: ExtRoute) -> Result<Arc<FpGroup>> {
        let c = match route {
            ExtRoute::ViaProjective => hom_into_module(&self.left_resolution, &self.right)?,
            ExtRoute::ViaInjective => hom_from_module(&self.left, &self.right_injective)?,
        };
        Ok(c.homology(n)?.group().clone())
    }

    pub fn tor(&self, n: i64, route: TorRoute) -> Result<Arc<FpGroup>> {
        let c = match route {
            TorRoute::ResolveLeft => tensor_with_module(&self.left_resolution, &self.right)?,
            TorRoute::ResolveRight => module_tensor_with(&self.left, &self.right_projective)?,
        };
        Ok(c.homology(n)?.group().clone())
    }

    /// The bicomplex whose corners carry both routes.
    pub fn bicomplex(&self, kind: TateKind) -> Result<Bicomplex> {
        match kind {
            TateKind::Ext => hom_bicomplex(&self.left_resolution, &self.right_injective),
            TateKind::Tor => tensor_bicomplex(&self.left_resolution, &self.right_projective),
        }
    }
}

pub fn tate_ext(m: Modulus, left: &Arc<FpGroup>, right: &Arc<FpGroup>, n: i64, route: ExtRoute) -> Result<Arc<FpGroup>> {
    TateSetup::new(m, left, right)?.ext(n, route)
}

pub fn tate_tor(m: Modulus, left: &Arc<FpGroup>, right: &Arc<FpGroup>, n: i64, route: TorRoute) -> Result<Arc<FpGroup>> {
    TateSetup::new(m, left, right)?.tor(n, route)
}

/// Bidegrees where the two routes sit in the bicomplex, and the direction
/// of the diagonal walk from the first corner to the second.
pub fn corners(kind: TateKind, n: i64) -> (Bidegree, Bidegree, Direction) {
    match kind {
        TateKind::Ext => ((n, 0), (0, n), if n >= 0 { Direction::Minus } else { Direction::Plus }),
        TateKind::Tor => ((-n, 0), (0, -n), if n >= 0 { Direction::Plus } else { Direction::Minus }),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalanceRow {
    pub degree: i64,
    /// Route resolving the first module (projective / resolve_left).
    pub first_route: GroupType,
    /// Route resolving the second module (injective / resolve_right).
    pub second_route: GroupType,
    pub first_corner: GroupType,
    pub second_corner: GroupType,
    /// The diagonal walk between the corners is a bijection on classes.
    pub walk_ok: bool,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalanceReport {
    pub kind: TateKind,
    pub modulus: Modulus,
    pub left: GroupType,
    pub right: GroupType,
    pub rows: Vec<BalanceRow>,
}

impl BalanceReport {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }
}

/// Walks `steps` diagonal shifts from `c`.
fn walk(x: &Bicomplex, c: &BiClass, direction: Direction, steps: u64) -> Result<BiClass> {
    let mut cur = c.clone();
    for _ in 0..steps {
        cur = x.diagonal_shift(&cur, direction)?;
    }
    Ok(cur)
}

/// Carries generators from one corner to the other and back. The walk is
/// accepted when every generator returns to itself and the images generate
/// the far corner.
fn walk_is_bijective(x: &Bicomplex, from: Bidegree, to: Bidegree, direction: Direction) -> Result<bool> {
    let steps = (from.0 - to.0).unsigned_abs();
    let gens = x.core_generators(from.0, from.1)?;
    let far = x.core_homology(to.0, to.1)?;
    let mut images = Vec::new();
    for g in &gens {
        let there = walk(x, g, direction, steps)?;
        if there.bidegree() != to {
            return Ok(false);
        }
        let back = walk(x, &there, direction.reversed(), steps)?;
        if back != *g {
            return Ok(false);
        }
        images.push(there.class());
    }
    let spanned = Subgroup::new(far.group().clone(), images);
    Ok(spanned.equals(&Subgroup::whole(far.group().clone())))
}

impl TateSetup {
    pub fn balance_report(&self, kind: TateKind, degrees: RangeInclusive<i64>) -> Result<BalanceReport> {
        let x = self.bicomplex(kind)?;
        let mut rows = Vec::new();
        for n in degrees {
            let (first_route, second_route) = match kind {
                TateKind::Ext => (self.ext(n, ExtRoute::ViaProjective)?, self.ext(n, ExtRoute::ViaInjective)?),
                TateKind::Tor => (self.tor(n, TorRoute::ResolveLeft)?, self.tor(n, TorRoute::ResolveRight)?),
            };
            let (a, b, direction) = corners(kind, n);
            let first_corner = x.core_homology(a.0, a.1)?.group().group_type();
            let second_corner = x.core_homology(b.0, b.1)?.group().group_type();
            let walk_ok = walk_is_bijective(&x, a, b, direction)?;
            let (first_route, second_route) = (first_route.group_type(), second_route.group_type());
            let pass = walk_ok
                && first_route == second_route
                && first_route == first_corner
                && second_route == second_corner;
            rows.push(BalanceRow {
                degree: n,
                first_route,
                second_route,
                first_corner,
                second_corner,
                walk_ok,
                pass,
            });
        }
        Ok(BalanceReport {
            kind,
            modulus: self.modulus,
            left: self.left.group_type(),
            right: self.right.group_type(),
            rows,
        })
    }
}

pub fn balance_report(
    m: Modulus,
    left: &Arc<FpGroup>,
    right: &Arc<FpGroup>,
    degrees: RangeInclusive<i64>,
    kind: TateKind,
) -> Result<BalanceReport> {
    TateSetup::new(m, left, right)?.balance_report(kind, degrees)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(m: u64, orders: &[i64]) -> Arc<FpGroup> {
        Arc::new(FpGroup::cyclic(m, orders))
    }

    #[test]
    fn ext_examples() {
        let z2 = cyc(4, &[2]);
        let s = TateSetup::new(4, &z2, &z2).unwrap();
        for n in -3..=3 {
            for route in [ExtRoute::ViaProjective, ExtRoute::ViaInjective] {
                assert_eq!(s.ext(n, route).unwrap().group_type(), GroupType::cyclic(2));
            }
        }
        let free = TateSetup::new(4, &cyc(4, &[4]), &z2).unwrap();
        assert!((-3..=3).all(|n| free.ext(n, ExtRoute::ViaProjective).unwrap().is_trivial()));
        let z3 = cyc(9, &[3]);
        assert_eq!(tate_ext(9, &z3, &z3, 5, ExtRoute::ViaInjective).unwrap().group_type(), GroupType::cyclic(3));
    }

    #[test]
    fn tor_examples() {
        let z2 = cyc(4, &[2]);
        for n in -3..=3 {
            for route in [TorRoute::ResolveLeft, TorRoute::ResolveRight] {
                assert_eq!(tate_tor(4, &z2, &z2, n, route).unwrap().group_type(), GroupType::cyclic(2));
            }
        }
        let free = TateSetup::new(4, &z2, &cyc(4, &[4])).unwrap();
        assert!((-3..=3).all(|n| free.tor(n, TorRoute::ResolveRight).unwrap().is_trivial()));
        let s = TateSetup::new(6, &cyc(6, &[2]), &cyc(6, &[3])).unwrap();
        assert!((-3..=3).all(|n| s.tor(n, TorRoute::ResolveLeft).unwrap().is_trivial()));
    }

    #[test]
    fn balance_examples() {
        let z2 = cyc(4, &[2]);
        for kind in [TateKind::Ext, TateKind::Tor] {
            let r = balance_report(4, &z2, &z2, -3..=3, kind).unwrap();
            assert_eq!(r.rows.len(), 7);
            assert!(r.all_pass(), "{r:?}");
            assert!(r.rows.iter().all(|row| row.first_route == GroupType::cyclic(2)));
        }
        let r = balance_report(4, &cyc(4, &[4]), &z2, -2..=2, TateKind::Ext).unwrap();
        assert!(r.all_pass());
        assert!(r.rows.iter().all(|row| row.first_corner.is_trivial()));
        let r = balance_report(12, &cyc(12, &[2, 6]), &cyc(12, &[4, 3]), -2..=2, TateKind::Ext).unwrap();
        assert!(r.all_pass(), "{r:?}");
    }

    #[test]
    fn corrupted_resolution_is_rejected() {
        let z2 = cyc(4, &[2]);
        let s = TateSetup::new(4, &z2, &z2).unwrap();
        let p = s.left_resolution();
        let mut m = p.diff(0).unwrap().matrix().clone();
        m[(0, 0)] += 1;
        let bad = Complex::new_unchecked(
            Convention::Homological,
            4,
            p.support(),
            vec![p.cell(0).unwrap()],
            std::collections::BTreeMap::from([(0, m)]),
        )
        .unwrap();
        let err = TateSetup::from_resolutions(4, z2.clone(), z2.clone(), bad, s.right_projective().clone(), s.right_injective().clone());
        assert!(matches!(err, Err(Error::InvalidComplex { .. })));
    }
}
