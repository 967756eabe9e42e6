//! Homomorphisms between enumerated finite groups.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// A total map of element indices, verified multiplicative at construction.
#[derive(Clone)]
pub struct GroupHom {
    domain: Arc<FiniteGroup>,
    codomain: Arc<FiniteGroup>,
    images: Vec<usize>,
}

impl GroupHom {
    /// Extends generator images along the stored generator words and checks
    /// multiplicativity on every pair of domain elements.
    pub fn from_generator_images(
        domain: Arc<FiniteGroup>,
        codomain: Arc<FiniteGroup>,
        generator_images: &[usize],
    ) -> Result<Self> {
        if generator_images.len() != domain.generator_indices().len() {
            return Err(Error::NotAHomomorphism(alloc::format!(
                "expected {} generator images, got {}",
                domain.generator_indices().len(),
                generator_images.len()
            )));
        }
        let images: Vec<usize> = (0..domain.order())
            .map(|i| {
                domain
                    .word(i)
                    .iter()
                    .fold(codomain.identity(), |acc, &g| {
                        codomain.mul(acc, generator_images[g])
                    })
            })
            .collect();
        Self::from_images(domain, codomain, images)
    }

    /// Wraps a fully specified image table, checking multiplicativity.
    pub fn from_images(
        domain: Arc<FiniteGroup>,
        codomain: Arc<FiniteGroup>,
        images: Vec<usize>,
    ) -> Result<Self> {
        for x in 0..domain.order() {
            for y in 0..domain.order() {
                if images[domain.mul(x, y)] != codomain.mul(images[x], images[y]) {
                    return Err(Error::NotAHomomorphism(alloc::format!(
                        "image of product of {} and {} disagrees",
                        domain.element(x),
                        domain.element(y)
                    )));
                }
            }
        }
        Ok(GroupHom {
            domain,
            codomain,
            images,
        })
    }

    pub fn identity(group: Arc<FiniteGroup>) -> Self {
        let images = (0..group.order()).collect();
        GroupHom {
            domain: group.clone(),
            codomain: group,
            images,
        }
    }

    /// The inclusion of a subgroup: both groups act on the same points and
    /// every element of `sub` must occur in `sup`.
    pub fn inclusion(sub: Arc<FiniteGroup>, sup: Arc<FiniteGroup>) -> Result<Self> {
        if sub.degree() != sup.degree() {
            return Err(Error::Mismatch("inclusion requires equal degrees".into()));
        }
        let images = (0..sub.order())
            .map(|i| {
                sup.index_of(sub.element(i)).ok_or_else(|| {
                    Error::Mismatch(alloc::format!(
                        "element {} is not in the supergroup",
                        sub.element(i)
                    ))
                })
            })
            .collect::<Result<Vec<usize>>>()?;
        Ok(GroupHom {
            domain: sub,
            codomain: sup,
            images,
        })
    }

    /// The map `x ↦ u^{-1} x u` from one subgroup of `ambient` onto another;
    /// used to transport data between conjugate stabilizers. Errors if the
    /// conjugate of some element of `from` is missing from `to`.
    pub fn conjugation(
        from: Arc<FiniteGroup>,
        to: Arc<FiniteGroup>,
        ambient: &FiniteGroup,
        u: usize,
    ) -> Result<Self> {
        let u_inv_perm = ambient.element(ambient.inv(u));
        let u_perm = ambient.element(u);
        let images = (0..from.order())
            .map(|i| {
                let conj = u_inv_perm.compose(from.element(i)).compose(u_perm);
                to.index_of(&conj).ok_or_else(|| {
                    Error::Mismatch(alloc::format!(
                        "conjugate of {} lies outside the target subgroup",
                        from.element(i)
                    ))
                })
            })
            .collect::<Result<Vec<usize>>>()?;
        Ok(GroupHom {
            domain: from,
            codomain: to,
            images,
        })
    }

    /// `outer ∘ inner`.
    pub fn compose(outer: &GroupHom, inner: &GroupHom) -> Result<Self> {
        if *outer.domain != *inner.codomain {
            return Err(Error::Mismatch(
                "composition requires matching middle group".into(),
            ));
        }
        Ok(GroupHom {
            domain: inner.domain.clone(),
            codomain: outer.codomain.clone(),
            images: inner.images.iter().map(|&i| outer.images[i]).collect(),
        })
    }

    pub fn domain(&self) -> &Arc<FiniteGroup> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<FiniteGroup> {
        &self.codomain
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = alloc::vec![false; self.codomain.order()];
        self.images.iter().all(|&i| {
            let fresh = !seen[i];
            seen[i] = true;
            fresh
        })
    }
}

impl core::fmt::Debug for GroupHom {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(
            f,
            "GroupHom(order {} -> order {})",
            self.domain.order(),
            self.codomain.order()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, symmetric};
    use crate::perm::Perm;

    #[test]
    fn identity_hom_on_s3() {
        let s3 = symmetric(3);
        let gen_images: Vec<usize> = s3.generator_indices().to_vec();
        let h = GroupHom::from_generator_images(s3.clone(), s3.clone(), &gen_images).unwrap();
        for i in 0..6 {
            assert_eq!(h.apply(i), i);
        }
    }

    #[test]
    fn z2_into_s3_via_transposition() {
        let z2 = cyclic(2);
        let s3 = symmetric(3);
        let t = s3
            .index_of(&Perm::from_cycles(3, &[alloc::vec![0, 1]]).unwrap())
            .unwrap();
        let h = GroupHom::from_generator_images(z2, s3, &[t]).unwrap();
        assert!(h.is_injective());
        assert_eq!(h.apply(0), 0);
    }

    #[test]
    fn order_obstruction_is_rejected() {
        // Z/2 generator cannot map to a 4-cycle.
        let z2 = cyclic(2);
        let s4 = symmetric(4);
        let c4 = s4
            .index_of(&Perm::from_cycles(4, &[alloc::vec![0, 1, 2, 3]]).unwrap())
            .unwrap();
        let err = GroupHom::from_generator_images(z2, s4, &[c4]).unwrap_err();
        assert!(matches!(err, Error::NotAHomomorphism(_)));
    }

    #[test]
    fn z4_onto_z2() {
        let z4 = cyclic(4);
        let z2 = cyclic(2);
        let h = GroupHom::from_generator_images(z4, z2.clone(), &[1]).unwrap();
        assert!(!h.is_injective());
        // The square of the generator dies.
        let sq = h.domain().mul(
            h.domain().generator_indices()[0],
            h.domain().generator_indices()[0],
        );
        assert_eq!(h.apply(sq), z2.identity());
    }

    #[test]
    fn composition_chains() {
        let z4 = cyclic(4);
        let z2 = cyclic(2);
        let s3 = symmetric(3);
        let f = GroupHom::from_generator_images(z4.clone(), z2.clone(), &[1]).unwrap();
        let t = s3
            .index_of(&Perm::from_cycles(3, &[alloc::vec![0, 1]]).unwrap())
            .unwrap();
        let g = GroupHom::from_generator_images(z2, s3, &[t]).unwrap();
        let gf = GroupHom::compose(&g, &f).unwrap();
        assert_eq!(gf.apply(z4.generator_indices()[0]), t);
    }
}
