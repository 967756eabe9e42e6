//! Exact complex character theory of finite groups.
//!
//! Character tables are computed by Dixon's method: the class-algebra
//! structure constant matrices are simultaneously diagonalized over a prime
//! field `F_p` with `p ≡ 1 (mod exponent)` and `p > 2|G|`, and the character
//! values are lifted to `Q(ζ_e)` through eigenvalue-multiplicity power sums.
//! The finished table is verified against exact row orthonormality and the
//! degree equation before it is returned.

use alloc::sync::Arc;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::hom::GroupHom;
use crate::modp;
use crate::Phase;

/// A class function with exact cyclotomic values, one per conjugacy class in
/// the group's deterministic class order.
#[derive(Clone, PartialEq, Eq)]
pub struct ClassFunction {
    group: Arc<FiniteGroup>,
    values: Vec<Cyclotomic>,
}

impl ClassFunction {
    pub fn new(group: Arc<FiniteGroup>, values: Vec<Cyclotomic>) -> Result<Self> {
        if values.len() != group.class_count() {
            return Err(Error::Mismatch("one value per conjugacy class".into()));
        }
        Ok(ClassFunction { group, values })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value_at_class(&self, c: usize) -> &Cyclotomic {
        &self.values[c]
    }

    pub fn value_at_element(&self, g: usize) -> &Cyclotomic {
        &self.values[self.group.class_of(g)]
    }

    /// The value at the identity; an integer for characters.
    pub fn degree(&self) -> Result<BigInt> {
        self.values[self.group.class_of(self.group.identity())].as_integer()
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.zip_with(other, Cyclotomic::add)
    }

    /// Pointwise product: the character of the tensor product.
    pub fn mul(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.zip_with(other, Cyclotomic::mul)
    }

    fn zip_with(
        &self,
        other: &ClassFunction,
        f: impl Fn(&Cyclotomic, &Cyclotomic) -> Cyclotomic,
    ) -> Result<ClassFunction> {
        if *self.group != *other.group {
            return Err(Error::Mismatch("class functions on different groups".into()));
        }
        Ok(ClassFunction {
            group: self.group.clone(),
            values: self
                .values
                .iter()
                .zip(other.values.iter())
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn scale_integer(&self, k: impl Into<BigInt>) -> ClassFunction {
        let r = Cyclotomic::from_integer(k.into());
        ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().map(|v| v.mul(&r)).collect(),
        }
    }

    /// Value-wise complex conjugate: the character of the dual.
    pub fn dual(&self) -> ClassFunction {
        ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().map(Cyclotomic::conj).collect(),
        }
    }

    pub fn is_real_valued(&self) -> bool {
        self.values.iter().all(|v| *v == v.conj())
    }

    /// `⟨a, b⟩ = (1/|G|) Σ_g a(g) conj(b(g))`, computed class-wise. Exact.
    pub fn inner_product(&self, other: &ClassFunction) -> Result<Cyclotomic> {
        if *self.group != *other.group {
            return Err(Error::Mismatch("class functions on different groups".into()));
        }
        let mut sum = Cyclotomic::zero();
        for c in 0..self.group.class_count() {
            let term = self.values[c].mul(&other.values[c].conj());
            let size = BigRational::from_integer(BigInt::from(self.group.class(c).len()));
            sum = sum.add(&term.scale(&size));
        }
        let inv_order = BigRational::new(BigInt::one(), BigInt::from(self.group.order()));
        Ok(sum.scale(&inv_order))
    }

    /// Pullback along `φ: H → G` of a class function on `G`; restriction to
    /// a subgroup is the special case of an inclusion.
    pub fn pulled_back(&self, phi: &GroupHom) -> Result<ClassFunction> {
        if **phi.codomain() != *self.group {
            return Err(Error::Mismatch(
                "pullback requires the function's group as codomain".into(),
            ));
        }
        let h = phi.domain();
        let values = (0..h.class_count())
            .map(|c| self.value_at_element(phi.apply(h.class_rep(c))).clone())
            .collect();
        Ok(ClassFunction {
            group: h.clone(),
            values,
        })
    }

    /// Frobenius induction along an inclusion `H ≤ G`:
    /// `ind χ(g) = (1/|H|) Σ_{u ∈ G, u^{-1} g u ∈ H} χ(u^{-1} g u)`.
    pub fn induced_along(&self, inclusion: &GroupHom) -> Result<ClassFunction> {
        if **inclusion.domain() != *self.group {
            return Err(Error::Mismatch(
                "induction requires the function's group as domain".into(),
            ));
        }
        let g = inclusion.codomain().clone();
        let h = &self.group;
        // For each element of G, its index in H when it lies in the image.
        let mut h_index_of = alloc::vec![usize::MAX; g.order()];
        for i in 0..h.order() {
            h_index_of[inclusion.apply(i)] = i;
        }
        let values: Vec<Cyclotomic> = (0..g.class_count())
            .map(|c| {
                let rep = g.class_rep(c);
                let mut sum = Cyclotomic::zero();
                for u in 0..g.order() {
                    let conj = g.mul(g.mul(g.inv(u), rep), u);
                    let k = h_index_of[conj];
                    if k != usize::MAX {
                        sum = sum.add(&self.values[h.class_of(k)]);
                    }
                }
                sum
            })
            .collect();
        let inv_h = BigRational::new(BigInt::one(), BigInt::from(h.order()));
        Ok(ClassFunction {
            group: g,
            values: values.into_iter().map(|v| v.scale(&inv_h)).collect(),
        })
    }
}

impl core::fmt::Debug for ClassFunction {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "ClassFunction[")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// The complete, exact, canonically ordered irreducible character table.
pub struct CharacterTable {
    group: Arc<FiniteGroup>,
    irreducibles: Vec<ClassFunction>,
    degrees: Vec<u64>,
    trivial: usize,
}

impl CharacterTable {
    /// Runs Dixon's algorithm and verifies the result exactly.
    pub fn build(group: Arc<FiniteGroup>) -> Result<Arc<CharacterTable>> {
        let r = group.class_count();
        let n = group.order() as u64;
        let e = group.exponent();

        // Smallest prime p ≡ 1 (mod e) with p > 2|G|.
        let mut p = 2 * n + 1;
        while p % e != 1 || !modp::is_prime(p) {
            p += 1;
        }

        let reps = group.class_reps();
        let sizes: Vec<u64> = (0..r).map(|c| group.class(c).len() as u64).collect();

        // Class matrices A_i[j][k] = #{(x, y) ∈ C_i × C_j : x y = rep_k}.
        let mut mats = alloc::vec![alloc::vec![alloc::vec![0u64; r]; r]; r];
        for (k, &rep_k) in reps.iter().enumerate() {
            for x in 0..group.order() {
                let i = group.class_of(x);
                let y = group.mul(group.inv(x), rep_k);
                let j = group.class_of(y);
                mats[i][j][k] += 1;
            }
        }

        // Simultaneous eigenspace splitting over F_p. Subspaces are lists of
        // column vectors of length r.
        let unit_basis: Vec<Vec<u64>> = (0..r)
            .map(|i| {
                let mut v = alloc::vec![0u64; r];
                v[i] = 1;
                v
            })
            .collect();
        let mut subspaces = alloc::vec![unit_basis];
        for mat in mats.iter().skip(1) {
            if subspaces.iter().all(|s| s.len() == 1) {
                break;
            }
            let mut next = Vec::new();
            for basis in subspaces {
                if basis.len() == 1 {
                    next.push(basis);
                    continue;
                }
                // Restrict the class matrix to the invariant subspace.
                let images: Vec<Vec<u64>> = basis
                    .iter()
                    .map(|b| {
                        (0..r)
                            .map(|row| {
                                let mut acc = 0u64;
                                for (col, &bv) in b.iter().enumerate() {
                                    acc = modp::add(p, acc, modp::mul(p, mat[row][col], bv));
                                }
                                acc
                            })
                            .collect()
                    })
                    .collect();
                let coords = modp::coords_in_span(p, &basis, &images);
                let k = basis.len();
                let restricted: Vec<Vec<u64>> = (0..k)
                    .map(|row| (0..k).map(|col| coords[col][row]).collect())
                    .collect();
                for lambda in modp::eigenvalues(p, &restricted) {
                    let shifted: Vec<Vec<u64>> = (0..k)
                        .map(|rr| {
                            (0..k)
                                .map(|cc| {
                                    if rr == cc {
                                        modp::sub(p, restricted[rr][cc], lambda)
                                    } else {
                                        restricted[rr][cc]
                                    }
                                })
                                .collect()
                        })
                        .collect();
                    let null = modp::nullspace(p, &shifted);
                    if null.is_empty() {
                        continue;
                    }
                    let lifted: Vec<Vec<u64>> = null
                        .iter()
                        .map(|coord| {
                            let mut v = alloc::vec![0u64; r];
                            for (bi, b) in basis.iter().enumerate() {
                                for (row, &bv) in b.iter().enumerate() {
                                    v[row] =
                                        modp::add(p, v[row], modp::mul(p, coord[bi], bv));
                                }
                            }
                            v
                        })
                        .collect();
                    next.push(lifted);
                }
            }
            subspaces = next;
        }
        if subspaces.len() != r || subspaces.iter().any(|s| s.len() != 1) {
            return Err(Error::Invalid(
                "class matrices failed to split into one-dimensional joint eigenspaces".into(),
            ));
        }

        // Each eigenvector, scaled so the identity-class entry is 1, is the
        // central character ω_k = |C_k| χ(g_k) / χ(1).
        let inv_classes: Vec<usize> = (0..r).map(|c| group.inverse_class(c)).collect();
        let mut characters_mod_p = Vec::with_capacity(r);
        for sub in &subspaces {
            let v = &sub[0];
            if v[0] == 0 {
                return Err(Error::Invalid("eigenvector vanishes at identity".into()));
            }
            let scale = modp::inv(p, v[0]);
            let omega: Vec<u64> = v.iter().map(|&x| modp::mul(p, x, scale)).collect();
            // χ(1)² = |G| / Σ_k ω_k ω_{k̄} / |C_k|.
            let mut s = 0u64;
            for k in 0..r {
                let term = modp::mul(
                    p,
                    modp::mul(p, omega[k], omega[inv_classes[k]]),
                    modp::inv(p, sizes[k]),
                );
                s = modp::add(p, s, term);
            }
            let d_squared = modp::mul(p, n % p, modp::inv(p, s));
            let mut degree = 0u64;
            let mut d = 1u64;
            while d * d <= n {
                if modp::mul(p, d, d) == d_squared {
                    degree = d;
                    break;
                }
                d += 1;
            }
            if degree == 0 {
                return Err(Error::Invalid("no integer degree matches eigenvector".into()));
            }
            let chi: Vec<u64> = (0..r)
                .map(|k| modp::mul(p, modp::mul(p, degree, omega[k]), modp::inv(p, sizes[k])))
                .collect();
            characters_mod_p.push((degree, chi));
        }

        // Lift from F_p to Q(ζ_e): fix z of multiplicative order e, compute
        // eigenvalue multiplicities by power sums.
        let z = {
            let mut found = 0;
            for c in 2..p {
                let cand = modp::pow(p, c, (p - 1) / e);
                let mut ok = cand != 1 || e == 1;
                // Order must be exactly e.
                for d in crate::cyclotomic::divisors(e) {
                    if d < e && modp::pow(p, cand, d) == 1 {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    found = cand;
                    break;
                }
            }
            if e == 1 {
                1
            } else {
                found
            }
        };

        // Power classes: class of rep_k^t.
        let power_class: Vec<Vec<usize>> = (0..r)
            .map(|k| {
                let d = group.element_order(reps[k]) as usize;
                let mut cur = group.identity();
                let mut out = Vec::with_capacity(d);
                for _ in 0..d {
                    out.push(group.class_of(cur));
                    cur = group.mul(cur, reps[k]);
                }
                out
            })
            .collect();

        let mut irreducibles = Vec::with_capacity(r);
        let mut degrees = Vec::with_capacity(r);
        for (degree, chi) in &characters_mod_p {
            let mut values = Vec::with_capacity(r);
            for k in 0..r {
                let d = group.element_order(reps[k]) as u64;
                let z_d = modp::pow(p, z, e / d);
                let inv_d = modp::inv(p, d % p);
                let mut value = Cyclotomic::zero();
                for s in 0..d {
                    let mut mu = 0u64;
                    for (t, &cls) in power_class[k].iter().enumerate() {
                        let w = modp::pow(p, z_d, (s * t as u64) % d);
                        // z_d^{-st} = inverse power.
                        let w_inv = modp::inv(p, w);
                        mu = modp::add(p, mu, modp::mul(p, chi[cls], w_inv));
                    }
                    mu = modp::mul(p, mu, inv_d);
                    if mu == 0 {
                        continue;
                    }
                    debug_assert!(mu <= *degree, "eigenvalue multiplicity exceeds degree");
                    let root = Cyclotomic::root_of_unity(e, (s * (e / d)) as i64);
                    value = value.add(&root.scale(&BigRational::from_integer(BigInt::from(mu))));
                }
                values.push(value);
            }
            irreducibles.push(ClassFunction {
                group: group.clone(),
                values,
            });
            degrees.push(*degree);
        }

        // Canonical ordering: by degree, then lexicographically on value
        // vectors compared coefficient-wise.
        let mut order: Vec<usize> = (0..r).collect();
        order.sort_by(|&a, &b| {
            degrees[a].cmp(&degrees[b]).then_with(|| {
                for (x, y) in irreducibles[a]
                    .values
                    .iter()
                    .zip(irreducibles[b].values.iter())
                {
                    let o = x.canonical_cmp(y);
                    if o != core::cmp::Ordering::Equal {
                        return o;
                    }
                }
                core::cmp::Ordering::Equal
            })
        });
        let irreducibles: Vec<ClassFunction> =
            order.iter().map(|&i| irreducibles[i].clone()).collect();
        let degrees: Vec<u64> = order.iter().map(|&i| degrees[i]).collect();

        let trivial = irreducibles
            .iter()
            .position(|chi| chi.values.iter().all(|v| *v == Cyclotomic::one()))
            .ok_or_else(|| Error::Invalid("trivial character missing".into()))?;

        let table = CharacterTable {
            group,
            irreducibles,
            degrees,
            trivial,
        };
        table.verify()?;
        Ok(Arc::new(table))
    }

    /// Exact self-check: row orthonormality and the degree equation.
    fn verify(&self) -> Result<()> {
        let r = self.irreducibles.len();
        if r != self.group.class_count() {
            return Err(Error::Invalid("irreducible count is not class count".into()));
        }
        let sum_sq: u64 = self.degrees.iter().map(|d| d * d).sum();
        if sum_sq != self.group.order() as u64 {
            return Err(Error::Invalid("degree squares do not sum to |G|".into()));
        }
        for i in 0..r {
            for j in 0..r {
                let ip = self.irreducibles[i].inner_product(&self.irreducibles[j])?;
                let expect = if i == j {
                    Cyclotomic::one()
                } else {
                    Cyclotomic::zero()
                };
                if ip != expect {
                    return Err(Error::Invalid(alloc::format!(
                        "row orthonormality fails at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn irreducibles(&self) -> &[ClassFunction] {
        &self.irreducibles
    }

    pub fn irreducible(&self, i: usize) -> &ClassFunction {
        &self.irreducibles[i]
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreducibles.is_empty()
    }

    pub fn trivial_index(&self) -> usize {
        self.trivial
    }

    /// The character of the regular representation.
    pub fn regular_character(&self) -> ClassFunction {
        let mut values = alloc::vec![Cyclotomic::zero(); self.group.class_count()];
        values[0] = Cyclotomic::from_integer(self.group.order() as i64);
        ClassFunction {
            group: self.group.clone(),
            values,
        }
    }

    /// Multiplicities of a character against the irreducibles; errors if any
    /// inner product is negative or non-integral.
    pub fn decompose(&self, chi: &ClassFunction) -> Result<Vec<u64>> {
        self.irreducibles
            .iter()
            .map(|irr| {
                let ip = chi.inner_product(irr)?;
                let q = ip.as_rational().map_err(|_| {
                    Error::NotACharacter("non-rational multiplicity".into())
                })?;
                if !q.is_integer() || q.is_negative() {
                    return Err(Error::NotACharacter(alloc::format!(
                        "multiplicity {q} is not a nonnegative integer"
                    )));
                }
                u64::try_from(q.to_integer())
                    .map_err(|_| Error::NotACharacter("multiplicity overflow".into()))
            })
            .collect()
    }

    /// Decomposes the pointwise product of two characters.
    pub fn tensor_decompose(
        &self,
        a: &ClassFunction,
        b: &ClassFunction,
    ) -> Result<Vec<u64>> {
        self.decompose(&a.mul(b)?)
    }

    /// Frobenius–Schur indicator `(1/|G|) Σ_g χ(g²) ∈ {-1, 0, +1}`.
    pub fn fs_indicator(&self, chi: &ClassFunction) -> Result<i8> {
        let g = &self.group;
        let mut sum = Cyclotomic::zero();
        for c in 0..g.class_count() {
            let rep = g.class_rep(c);
            let square_class = g.class_of(g.mul(rep, rep));
            let size = BigRational::from_integer(BigInt::from(g.class(c).len()));
            sum = sum.add(&chi.values[square_class].scale(&size));
        }
        let nu = sum
            .scale(&BigRational::new(BigInt::one(), BigInt::from(g.order())))
            .as_integer()
            .map_err(|_| Error::Invalid("indicator is not an integer".into()))?;
        i8::try_from(&nu)
            .ok()
            .filter(|v| (-1..=1).contains(v))
            .ok_or_else(|| Error::Invalid(alloc::format!("indicator {nu} out of range")))
    }

    /// Index of the dual of irreducible `i`.
    pub fn dual_index(&self, i: usize) -> usize {
        let dual = self.irreducibles[i].dual();
        self.irreducibles
            .iter()
            .position(|chi| *chi == dual)
            .expect("dual of an irreducible is irreducible")
    }

    /// The unique `c = m/l ∈ [0, 1)` with `χ(z) = e^{2πic} χ(1)` for a
    /// central element `z` of order `l` and irreducible `χ`.
    pub fn central_phase(&self, irreducible: usize, z: usize) -> Result<Phase> {
        let chi = &self.irreducibles[irreducible];
        let l = self.group.element_order(z) as i64;
        let degree = Cyclotomic::from_integer(BigInt::from(self.degrees[irreducible]));
        let value = chi.value_at_element(z);
        for m in 0..l {
            let candidate = Cyclotomic::root_of_unity(l as u64, m).mul(&degree);
            if candidate == *value {
                return Ok(Phase::new(m, l));
            }
        }
        Err(Error::NonScalarAction(alloc::format!(
            "element {} does not act as a root-of-unity scalar",
            self.group.element(z)
        )))
    }
}

impl core::fmt::Debug for CharacterTable {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(
            f,
            "CharacterTable(order {}, {} irreducibles)",
            self.group.order(),
            self.irreducibles.len()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, quaternion8, symmetric};
    use crate::perm::Perm;

    #[test]
    fn z2_table_is_the_sign_table() {
        let table = CharacterTable::build(cyclic(2)).unwrap();
        assert_eq!(table.degrees(), &[1, 1]);
        let values: Vec<Vec<Cyclotomic>> = table
            .irreducibles()
            .iter()
            .map(|chi| chi.values().to_vec())
            .collect();
        let one = Cyclotomic::one();
        let neg = Cyclotomic::from_integer(-1);
        assert!(values.contains(&alloc::vec![one.clone(), one.clone()]));
        assert!(values.contains(&alloc::vec![one, neg]));
    }

    #[test]
    fn s3_has_degrees_1_1_2() {
        let table = CharacterTable::build(symmetric(3)).unwrap();
        let mut d = table.degrees().to_vec();
        d.sort_unstable();
        assert_eq!(d, alloc::vec![1, 1, 2]);
    }

    #[test]
    fn q8_has_degrees_and_quaternionic_indicator() {
        let table = CharacterTable::build(quaternion8()).unwrap();
        let mut d = table.degrees().to_vec();
        d.sort_unstable();
        assert_eq!(d, alloc::vec![1, 1, 1, 1, 2]);
        let two_dim = table.degrees().iter().position(|&d| d == 2).unwrap();
        assert_eq!(table.fs_indicator(table.irreducible(two_dim)).unwrap(), -1);
    }

    #[test]
    fn regular_character_decomposes_by_degree() {
        let table = CharacterTable::build(symmetric(3)).unwrap();
        let reg = table.regular_character();
        let mults = table.decompose(&reg).unwrap();
        assert_eq!(mults, table.degrees().to_vec());
        // ⟨triv, triv⟩ = 1 and ⟨triv, sign⟩ = 0 are instances of verify();
        // check one directly anyway.
        let triv = table.irreducible(table.trivial_index());
        assert_eq!(triv.inner_product(triv).unwrap(), Cyclotomic::one());
    }

    #[test]
    fn restriction_of_2dim_to_transposition_subgroup() {
        let s3 = symmetric(3);
        let table = CharacterTable::build(s3.clone()).unwrap();
        let h = s3
            .subgroup(alloc::vec![Perm::from_cycles(3, &[alloc::vec![0, 1]]).unwrap()])
            .unwrap();
        let h_table = CharacterTable::build(h.clone()).unwrap();
        let incl = GroupHom::inclusion(h, s3).unwrap();
        let two_dim = table.degrees().iter().position(|&d| d == 2).unwrap();
        let restricted = table.irreducible(two_dim).pulled_back(&incl).unwrap();
        let mults = h_table.decompose(&restricted).unwrap();
        assert_eq!(mults, alloc::vec![1, 1]); // triv + sign
    }

    #[test]
    fn induction_satisfies_frobenius_reciprocity() {
        let s3 = symmetric(3);
        let g_table = CharacterTable::build(s3.clone()).unwrap();
        let h = s3
            .subgroup(alloc::vec![Perm::from_cycles(3, &[alloc::vec![0, 1]]).unwrap()])
            .unwrap();
        let h_table = CharacterTable::build(h.clone()).unwrap();
        let incl = GroupHom::inclusion(h, s3.clone()).unwrap();
        for chi in h_table.irreducibles() {
            let ind = chi.induced_along(&incl).unwrap();
            // Degree multiplies by the index.
            assert_eq!(
                ind.degree().unwrap(),
                chi.degree().unwrap() * BigInt::from(3)
            );
            for psi in g_table.irreducibles() {
                // ⟨ind χ, ψ⟩_G = ⟨χ, res ψ⟩_H exactly.
                let lhs = ind.inner_product(psi).unwrap();
                let rhs = chi.inner_product(&psi.pulled_back(&incl).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
        // Induce triv from ⟨(0 1)⟩: triv + 2-dim.
        let triv = h_table.irreducible(h_table.trivial_index());
        let ind = triv
            .induced_along(&GroupHom::inclusion(
                h_table.group().clone(),
                s3.clone(),
            )
            .unwrap())
            .unwrap();
        let mults = g_table.decompose(&ind).unwrap();
        let by_degree: Vec<(u64, u64)> = mults
            .iter()
            .zip(g_table.degrees())
            .map(|(&m, &d)| (d, m))
            .collect();
        assert!(by_degree.contains(&(2, 1)));
        assert_eq!(
            mults
                .iter()
                .zip(g_table.degrees())
                .map(|(&m, &d)| m * d)
                .sum::<u64>(),
            3
        );
    }

    #[test]
    fn tensor_decomposition_on_s3() {
        let table = CharacterTable::build(symmetric(3)).unwrap();
        let two = table.degrees().iter().position(|&d| d == 2).unwrap();
        let chi = table.irreducible(two);
        // 2 ⊗ 2 = triv + sign + 2-dim.
        let mults = table.tensor_decompose(chi, chi).unwrap();
        assert_eq!(mults, alloc::vec![1, 1, 1]);
        // triv ⊗ χ = χ.
        let triv = table.irreducible(table.trivial_index());
        let mults = table.tensor_decompose(triv, chi).unwrap();
        let expected: Vec<u64> = (0..3).map(|i| u64::from(i == two)).collect();
        assert_eq!(mults, expected);
    }

    #[test]
    fn duals_and_indicators_on_z3() {
        let table = CharacterTable::build(cyclic(3)).unwrap();
        let nontrivial: Vec<usize> = (0..3).filter(|&i| i != table.trivial_index()).collect();
        let [a, b] = nontrivial[..] else { panic!() };
        assert_eq!(table.dual_index(a), b);
        assert_eq!(table.dual_index(b), a);
        assert_eq!(table.fs_indicator(table.irreducible(a)).unwrap(), 0);
        assert_eq!(
            table
                .fs_indicator(table.irreducible(table.trivial_index()))
                .unwrap(),
            1
        );
        // dual ∘ dual = id.
        assert_eq!(table.dual_index(table.dual_index(a)), a);
    }

    #[test]
    fn central_phases() {
        // Sign character of Z/2 at the generator: c = 1/2.
        let z2 = CharacterTable::build(cyclic(2)).unwrap();
        let sign = (0..2).find(|&i| i != z2.trivial_index()).unwrap();
        assert_eq!(z2.central_phase(sign, 1).unwrap(), Phase::new(1, 2));
        assert_eq!(z2.central_phase(sign, 0).unwrap(), Phase::new(0, 1));

        // The four linear characters of Z/4 have phases {0, 1/4, 1/2, 3/4}
        // at the generator.
        let z4 = CharacterTable::build(cyclic(4)).unwrap();
        let gen = z4
            .group()
            .index_of(&Perm::from_cycles(4, &[alloc::vec![0, 1, 2, 3]]).unwrap())
            .unwrap();
        let mut phases: Vec<Phase> = (0..4)
            .map(|i| z4.central_phase(i, gen).unwrap())
            .collect();
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
    fn non_scalar_action_is_reported() {
        let s3 = symmetric(3);
        let table = CharacterTable::build(s3.clone()).unwrap();
        let two = table.degrees().iter().position(|&d| d == 2).unwrap();
        let t = s3
            .index_of(&Perm::from_cycles(3, &[alloc::vec![0, 1]]).unwrap())
            .unwrap();
        // (0 1) is not central; the 2-dim irreducible sees it non-scalar.
        assert!(matches!(
            table.central_phase(two, t),
            Err(Error::NonScalarAction(_))
        ));
    }
}
