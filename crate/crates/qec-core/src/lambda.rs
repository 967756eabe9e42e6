//! The representation ring `R(Λ_K(g))` as a free `Z[q^±]`-module.
//!
//! For a finite group `K` with central element `g` of order `l`, the
//! irreducible representations of `Λ_K(g) = K × R / ⟨(g, -1)⟩` that occur
//! here are classified by pairs `(λ, c)` of an irreducible of `K` and the
//! phase `c ∈ [0, 1)` with `χ_λ(g) = e^{2πic} χ_λ(1)`; the canonical basis
//! takes one such pair per irreducible. Products decompose through the
//! tensor decomposition of `K` with an integral `q`-power bookkeeping the
//! rotation characters.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::chartab::CharacterTable;
use crate::error::{Error, Result};
use crate::group::LambdaGroupDescriptor;
use crate::hom::GroupHom;
use crate::laurent::LaurentPoly;
use crate::matrix::LaurentMatrix;
use crate::Phase;

/// The canonical `Z[q^±]`-basis of `R(Λ_K(g))`: one entry per irreducible
/// of `K`, in the table's normalized order, with its central phase at `g`.
pub struct LambdaBasis {
    descriptor: LambdaGroupDescriptor,
    table: Arc<CharacterTable>,
    phases: Vec<Phase>,
}

impl LambdaBasis {
    pub fn build(descriptor: LambdaGroupDescriptor) -> Result<Arc<Self>> {
        let table = CharacterTable::build(descriptor.group().clone())?;
        Self::with_table(descriptor, table)
    }

    pub fn with_table(
        descriptor: LambdaGroupDescriptor,
        table: Arc<CharacterTable>,
    ) -> Result<Arc<Self>> {
        if **table.group() != **descriptor.group() {
            return Err(Error::Mismatch("table group differs from descriptor".into()));
        }
        // central_phase verifies χ_λ(g) = e^{2πic} χ_λ(1) exactly.
        let phases = (0..table.len())
            .map(|i| table.central_phase(i, descriptor.central()))
            .collect::<Result<Vec<Phase>>>()?;
        debug_assert!(phases
            .iter()
            .all(|c| (*c * Phase::from_integer(descriptor.order_l() as i64)).is_integer()));
        Ok(Arc::new(LambdaBasis {
            descriptor,
            table,
            phases,
        }))
    }

    pub fn descriptor(&self) -> &LambdaGroupDescriptor {
        &self.descriptor
    }

    pub fn table(&self) -> &Arc<CharacterTable> {
        &self.table
    }

    /// Free rank over `Z[q^±]`: the number of irreducibles of `K`.
    pub fn rank(&self) -> usize {
        self.table.len()
    }

    /// Canonical phase `c_λ ∈ [0, 1)` of basis entry `i`.
    pub fn phase(&self, i: usize) -> Phase {
        self.phases[i]
    }

    pub fn phases(&self) -> &[Phase] {
        &self.phases
    }

    pub fn trivial_index(&self) -> usize {
        self.table.trivial_index()
    }
}

impl PartialEq for LambdaBasis {
    fn eq(&self, other: &Self) -> bool {
        self.descriptor == other.descriptor
    }
}

impl Eq for LambdaBasis {}

impl core::fmt::Debug for LambdaBasis {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "LambdaBasis({:?}, rank {})", self.descriptor, self.rank())
    }
}

/// An element of `R(Λ_K(g))` in the canonical basis: finitely many basis
/// entries with nonzero Laurent coefficients.
#[derive(Clone)]
pub struct LambdaRingElement {
    basis: Arc<LambdaBasis>,
    coeffs: BTreeMap<usize, LaurentPoly>,
}

impl LambdaRingElement {
    pub fn zero(basis: Arc<LambdaBasis>) -> Self {
        LambdaRingElement {
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    /// The multiplicative unit `triv ⊙ q^0`.
    pub fn one(basis: Arc<LambdaBasis>) -> Self {
        let triv = basis.trivial_index();
        LambdaRingElement::basis_element(basis, triv)
    }

    pub fn basis_element(basis: Arc<LambdaBasis>, i: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(i, LaurentPoly::one());
        LambdaRingElement { basis, coeffs }
    }

    pub fn from_coeffs<I>(basis: Arc<LambdaBasis>, iter: I) -> Self
    where
        I: IntoIterator<Item = (usize, LaurentPoly)>,
    {
        let mut out = LambdaRingElement::zero(basis);
        for (i, c) in iter {
            out.add_coeff(i, c);
        }
        out
    }

    pub fn basis(&self) -> &Arc<LambdaBasis> {
        &self.basis
    }

    pub fn coeff(&self, i: usize) -> LaurentPoly {
        self.coeffs.get(&i).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (usize, &LaurentPoly)> {
        self.coeffs.iter().map(|(i, c)| (*i, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_coeff(&mut self, i: usize, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(i) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &LambdaRingElement) -> Result<LambdaRingElement> {
        self.check_same_basis(other)?;
        let mut out = self.clone();
        for (i, c) in other.coeffs() {
            out.add_coeff(i, c.clone());
        }
        Ok(out)
    }

    /// Ring product. Basis entries multiply by
    /// `(λ_i ⊙ q^{c_i})(λ_j ⊙ q^{c_j}) = Σ_μ n_μ q^{c_i + c_j - c_μ} (μ ⊙ q^{c_μ})`
    /// where `λ_i ⊗ λ_j = Σ n_μ μ`; every exponent is asserted integral.
    pub fn mul(&self, other: &LambdaRingElement) -> Result<LambdaRingElement> {
        self.check_same_basis(other)?;
        let basis = &self.basis;
        let table = basis.table();
        let mut out = LambdaRingElement::zero(self.basis.clone());
        for (i, a) in self.coeffs() {
            for (j, b) in other.coeffs() {
                let mults =
                    table.tensor_decompose(table.irreducible(i), table.irreducible(j))?;
                let coeff = a * b;
                for (mu, &n) in mults.iter().enumerate() {
                    if n == 0 {
                        continue;
                    }
                    let shift = basis.phase(i) + basis.phase(j) - basis.phase(mu);
                    if !shift.is_integer() {
                        return Err(Error::PhaseMismatch(alloc::format!(
                            "product phase {shift} is not integral at component {mu}"
                        )));
                    }
                    let shifted = coeff.scaled(&n.into()).shifted(*shift.numer());
                    out.add_coeff(mu, shifted);
                }
            }
        }
        Ok(out)
    }

    /// Multiplication by `q^k`.
    pub fn q_scale(&self, k: i64) -> LambdaRingElement {
        LambdaRingElement {
            basis: self.basis.clone(),
            coeffs: self
                .coeffs
                .iter()
                .map(|(i, c)| (*i, c.shifted(k)))
                .collect(),
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> LambdaRingElement {
        if c.is_zero() {
            return LambdaRingElement::zero(self.basis.clone());
        }
        LambdaRingElement {
            basis: self.basis.clone(),
            coeffs: self.coeffs.iter().map(|(i, x)| (*i, x * c)).collect(),
        }
    }

    /// Coefficient vector in basis order, length `rank`.
    pub fn to_vec(&self) -> Vec<LaurentPoly> {
        (0..self.basis.rank()).map(|i| self.coeff(i)).collect()
    }

    fn check_same_basis(&self, other: &LambdaRingElement) -> Result<()> {
        if *self.basis != *other.basis {
            return Err(Error::Mismatch("elements over different Λ-bases".into()));
        }
        Ok(())
    }
}

impl PartialEq for LambdaRingElement {
    fn eq(&self, other: &Self) -> bool {
        *self.basis == *other.basis && self.coeffs == other.coeffs
    }
}

impl Eq for LambdaRingElement {}

impl core::fmt::Debug for LambdaRingElement {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})·[λ{} ⊙ q^{}]", i, self.basis.phase(i))?;
        }
        Ok(())
    }
}

/// The matrix of the restriction map along `ψ: K' → K` with `ψ(g') = g`:
/// the basis entry `λ ⊙ q^{c_λ}` of the source pulls back to
/// `Σ_μ n_μ (μ ⊙ q^{c_μ})` where `λ∘ψ = Σ_μ n_μ μ`, and every contributing
/// `μ` must carry the same phase `c_μ = c_λ` (the central element `g'` acts
/// by the scalar `e^{2πic_λ}` on all of `λ∘ψ`). Rows are indexed by the
/// target basis, columns by the source basis.
pub fn restriction_matrix(
    source: &LambdaBasis,
    target: &LambdaBasis,
    psi: &GroupHom,
) -> Result<LaurentMatrix> {
    if **psi.codomain() != **source.descriptor().group()
        || **psi.domain() != **target.descriptor().group()
    {
        return Err(Error::Mismatch(
            "restriction hom must map the target group into the source group".into(),
        ));
    }
    if psi.apply(target.descriptor().central()) != source.descriptor().central() {
        return Err(Error::Mismatch(
            "restriction hom must carry the central element to the central element".into(),
        ));
    }
    let mut m = LaurentMatrix::zero(target.rank(), source.rank());
    for col in 0..source.rank() {
        let pulled = source.table().irreducible(col).pulled_back(psi)?;
        let mults = target.table().decompose(&pulled)?;
        for (row, &n) in mults.iter().enumerate() {
            if n == 0 {
                continue;
            }
            if target.phase(row) != source.phase(col) {
                return Err(Error::PhaseMismatch(alloc::format!(
                    "restricted component {row} has phase {} but the source has {}",
                    target.phase(row),
                    source.phase(col)
                )));
            }
            *m.at_mut(row, col) = LaurentPoly::constant(n as i64);
        }
    }
    Ok(m)
}

/// Applies the restriction map to an element.
pub fn lambda_restrict(
    x: &LambdaRingElement,
    target: &Arc<LambdaBasis>,
    psi: &GroupHom,
) -> Result<LambdaRingElement> {
    let m = restriction_matrix(x.basis(), target, psi)?;
    let v = m.apply_vec(&x.to_vec())?;
    Ok(LambdaRingElement::from_coeffs(
        target.clone(),
        v.into_iter().enumerate().map(|(i, c)| (i, c)),
    ))
}

/// The transport hom for conjugation by `u` in an ambient group carrying
/// `(K, g)` onto `(K', g')`: the isomorphism `K' → K`, `x ↦ u^{-1} x u`.
/// Restriction along it transports basis data with phases preserved.
pub fn transport_hom(
    source: &LambdaBasis,
    target: &LambdaBasis,
    ambient: &crate::group::FiniteGroup,
    u: usize,
) -> Result<GroupHom> {
    let psi = GroupHom::conjugation(
        target.descriptor().group().clone(),
        source.descriptor().group().clone(),
        ambient,
        u,
    )?;
    if psi.apply(target.descriptor().central()) != source.descriptor().central() {
        return Err(Error::Mismatch(
            "conjugation does not align the central elements".into(),
        ));
    }
    Ok(psi)
}

/// Transports an element of `R(Λ_K(g))` to `R(Λ_{K'}(g'))` along `u`.
pub fn lambda_conjugate_transport(
    x: &LambdaRingElement,
    target: &Arc<LambdaBasis>,
    ambient: &crate::group::FiniteGroup,
    u: usize,
) -> Result<LambdaRingElement> {
    let psi = transport_hom(x.basis(), target, ambient, u)?;
    lambda_restrict(x, target, &psi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, symmetric};
    use crate::perm::Perm;

    fn basis_of(group: Arc<crate::group::FiniteGroup>, central: usize) -> Arc<LambdaBasis> {
        LambdaBasis::build(LambdaGroupDescriptor::new(group, central).unwrap()).unwrap()
    }

    fn trivial_group_basis() -> Arc<LambdaBasis> {
        let g = crate::group::FiniteGroup::enumerate(1, Vec::new(), 10).unwrap();
        basis_of(g, 0)
    }

    #[test]
    fn trivial_group_has_single_phase_zero_entry() {
        let b = trivial_group_basis();
        assert_eq!(b.rank(), 1);
        assert_eq!(b.phase(0), Phase::zero());
    }

    #[test]
    fn z2_basis_phases() {
        let b = basis_of(cyclic(2), 1);
        assert_eq!(b.rank(), 2);
        let mut phases = b.phases().to_vec();
        phases.sort();
        assert_eq!(phases, alloc::vec![Phase::new(0, 1), Phase::new(1, 2)]);
    }

    #[test]
    fn z4_basis_phases() {
        let z4 = cyclic(4);
        let gen = z4
            .index_of(&Perm::from_cycles(4, &[alloc::vec![0, 1, 2, 3]]).unwrap())
            .unwrap();
        let b = basis_of(z4, gen);
        let mut phases = b.phases().to_vec();
        phases.sort();
        assert_eq!(
            phases,
            alloc::vec![
                Phase::new(0, 1),
                Phase::new(1, 4),
                Phase::new(1, 2),
                Phase::new(3, 4)
            ]
        );
    }

    #[test]
    fn rank_matches_class_count_of_centralizers() {
        let s3 = symmetric(3);
        let b = basis_of(s3.clone(), 0); // C_{S3}(e) = S3
        assert_eq!(b.rank(), s3.class_count());
    }

    #[test]
    fn unit_law_and_sign_square() {
        let b = basis_of(cyclic(2), 1);
        let one = LambdaRingElement::one(b.clone());
        let sign_idx = (0..2).find(|&i| b.phase(i) == Phase::new(1, 2)).unwrap();
        let sign = LambdaRingElement::basis_element(b.clone(), sign_idx);

        assert_eq!(one.mul(&sign).unwrap(), sign);
        // (sign ⊙ q^{1/2})² = q · (triv ⊙ q^0).
        let sq = sign.mul(&sign).unwrap();
        let expected = LambdaRingElement::one(b).q_scale(1);
        assert_eq!(sq, expected);
    }

    #[test]
    fn z4_quarter_and_three_quarter_phases_multiply_to_q() {
        let z4 = cyclic(4);
        let gen = z4
            .index_of(&Perm::from_cycles(4, &[alloc::vec![0, 1, 2, 3]]).unwrap())
            .unwrap();
        let b = basis_of(z4, gen);
        let quarter = (0..4).find(|&i| b.phase(i) == Phase::new(1, 4)).unwrap();
        let three_quarter = (0..4).find(|&i| b.phase(i) == Phase::new(3, 4)).unwrap();
        let x = LambdaRingElement::basis_element(b.clone(), quarter);
        let y = LambdaRingElement::basis_element(b.clone(), three_quarter);
        let prod = x.mul(&y).unwrap();
        assert_eq!(prod, LambdaRingElement::one(b).q_scale(1));
    }

    #[test]
    fn q_scale_is_a_module_map() {
        let b = basis_of(cyclic(2), 1);
        let x = LambdaRingElement::from_coeffs(
            b.clone(),
            [
                (0, LaurentPoly::from_terms([(-1, 2), (3, 1)])),
                (1, LaurentPoly::one()),
            ],
        );
        let y = LambdaRingElement::basis_element(b, 1);
        assert_eq!(x.q_scale(0), x);
        let lhs = x.mul(&y).unwrap().q_scale(2);
        let rhs = x.q_scale(2).mul(&y).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn identity_restriction_is_identity() {
        let b = basis_of(cyclic(2), 1);
        let psi = GroupHom::identity(b.descriptor().group().clone());
        let m = restriction_matrix(&b, &b, &psi).unwrap();
        assert_eq!(m, LaurentMatrix::identity(2));
    }

    #[test]
    fn restriction_to_trivial_central_element_counts_dimension() {
        // ψ: trivial → S3 forces g = e; each λ ⊙ q^0 restricts to
        // degree(λ) · (triv ⊙ q^0).
        let s3 = symmetric(3);
        let source = basis_of(s3.clone(), 0);
        let trivial = trivial_group_basis();
        let triv_group = trivial.descriptor().group().clone();
        let psi =
            GroupHom::from_images(triv_group, s3.clone(), alloc::vec![s3.identity()]).unwrap();
        let m = restriction_matrix(&source, &trivial, &psi).unwrap();
        let table = source.table();
        for col in 0..source.rank() {
            assert_eq!(
                *m.at(0, col),
                LaurentPoly::constant(table.degrees()[col] as i64)
            );
        }
    }

    #[test]
    fn conjugate_transport_between_transposition_centralizers() {
        let s3 = symmetric(3);
        let t01 = s3
            .index_of(&Perm::from_cycles(3, &[alloc::vec![0, 1]]).unwrap())
            .unwrap();
        let t12 = s3
            .index_of(&Perm::from_cycles(3, &[alloc::vec![1, 2]]).unwrap())
            .unwrap();
        let u = s3
            .index_of(&Perm::from_cycles(3, &[alloc::vec![0, 2]]).unwrap())
            .unwrap();
        assert_eq!(s3.conj(u, t01), t12);

        let c01 = s3.centralizer(t01);
        let c12 = s3.centralizer(t12);
        let b01 = basis_of(c01.clone(), c01.index_of(s3.element(t01)).unwrap());
        let b12 = basis_of(c12.clone(), c12.index_of(s3.element(t12)).unwrap());

        let mut p01 = b01.phases().to_vec();
        let mut p12 = b12.phases().to_vec();
        p01.sort();
        p12.sort();
        assert_eq!(p01, p12);
        assert_eq!(p01, alloc::vec![Phase::new(0, 1), Phase::new(1, 2)]);

        // Transport by u and back by u^{-1} is the identity.
        for i in 0..2 {
            let x = LambdaRingElement::basis_element(b01.clone(), i);
            let over = lambda_conjugate_transport(&x, &b12, &s3, u).unwrap();
            let back = lambda_conjugate_transport(&over, &b01, &s3, s3.inv(u)).unwrap();
            assert_eq!(back, x);
        }

        // Transport is a ring map: check on the product of the two basis
        // elements, and that conjugating by the identity does nothing.
        let x = LambdaRingElement::basis_element(b01.clone(), 0);
        let y = LambdaRingElement::basis_element(b01.clone(), 1);
        let t_xy = lambda_conjugate_transport(&x.mul(&y).unwrap(), &b12, &s3, u).unwrap();
        let tx = lambda_conjugate_transport(&x, &b12, &s3, u).unwrap();
        let ty = lambda_conjugate_transport(&y, &b12, &s3, u).unwrap();
        assert_eq!(t_xy, tx.mul(&ty).unwrap());
        let t_id = lambda_conjugate_transport(&x, &b01, &s3, s3.identity()).unwrap();
        assert_eq!(t_id, x);
    }

    #[test]
    fn restriction_is_a_ring_map() {
        // Restrict along Z/2 = ⟨(0 1)⟩ ↪ C_{S3}((0 1)) and check
        // f(xy) = f(x)f(y) and f(1) = 1.
        let s3 = symmetric(3);
        let t01 = s3
            .index_of(&Perm::from_cycles(3, &[alloc::vec![0, 1]]).unwrap())
            .unwrap();
        let c = s3.centralizer(t01);
        let source = basis_of(c.clone(), c.index_of(s3.element(t01)).unwrap());

        let z2 = crate::group::FiniteGroup::enumerate(
            3,
            alloc::vec![Perm::from_cycles(3, &[alloc::vec![0, 1]]).unwrap()],
            10,
        )
        .unwrap();
        let target_central = z2.index_of(s3.element(t01)).unwrap();
        let target = basis_of(z2.clone(), target_central);
        let psi = GroupHom::inclusion(z2, c).unwrap();

        let x = LambdaRingElement::from_coeffs(
            source.clone(),
            [(0, LaurentPoly::from_terms([(0, 1), (1, 1)]))],
        );
        let y = LambdaRingElement::basis_element(source.clone(), 1);
        let f = |v: &LambdaRingElement| lambda_restrict(v, &target, &psi).unwrap();
        assert_eq!(f(&x.mul(&y).unwrap()), f(&x).mul(&f(&y)).unwrap());
        assert_eq!(
            f(&LambdaRingElement::one(source.clone())),
            LambdaRingElement::one(target.clone())
        );
    }
}
