//! Finite G-sets: actions of enumerated groups on indexed point sets.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::hom::GroupHom;
use crate::perm::Perm;

/// A finite set with a verified left action of a finite group, stored as a
/// full table `table[element][point]`.
#[derive(Clone)]
pub struct FiniteGSet {
    group: Arc<FiniteGroup>,
    labels: Vec<String>,
    table: Vec<Vec<u32>>,
}

/// One orbit of a subgroup action: its least point, all points, and the
/// stabilizer of the representative.
pub struct Orbit {
    pub rep: usize,
    pub points: Vec<usize>,
    pub stabilizer: Arc<FiniteGroup>,
}

impl FiniteGSet {
    /// Builds the G-set from one point-permutation per group generator,
    /// extending along generator words and verifying the action axioms.
    pub fn from_generator_images(
        group: Arc<FiniteGroup>,
        size: usize,
        generator_images: &[Perm],
    ) -> Result<Self> {
        if generator_images.len() != group.generator_indices().len() {
            return Err(Error::NotAnAction(alloc::format!(
                "expected {} generator images, got {}",
                group.generator_indices().len(),
                generator_images.len()
            )));
        }
        for p in generator_images {
            if p.degree() != size {
                return Err(Error::NotAnAction(
                    "generator image degree does not match point count".into(),
                ));
            }
        }
        let table: Vec<Vec<u32>> = (0..group.order())
            .map(|i| {
                let perm = group.word(i).iter().fold(Perm::identity(size), |acc, &g| {
                    // Left action: the word [a, b] acts as gen_a ∘ gen_b.
                    acc.compose(&generator_images[g])
                });
                (0..size).map(|x| perm.apply(x) as u32).collect()
            })
            .collect();
        let labels = (0..size).map(|x| alloc::format!("{x}")).collect();
        let gset = FiniteGSet {
            group,
            labels,
            table,
        };
        gset.verify_action()?;
        Ok(gset)
    }

    fn from_table(group: Arc<FiniteGroup>, labels: Vec<String>, table: Vec<Vec<u32>>) -> Self {
        let gset = FiniteGSet {
            group,
            labels,
            table,
        };
        debug_assert!(gset.verify_action().is_ok());
        gset
    }

    fn verify_action(&self) -> Result<()> {
        let n = self.size();
        for x in 0..n {
            if self.act(self.group.identity(), x) != x {
                return Err(Error::NotAnAction("identity moves a point".into()));
            }
        }
        for g in 0..self.group.order() {
            for h in 0..self.group.order() {
                let gh = self.group.mul(g, h);
                for x in 0..n {
                    if self.act(g, self.act(h, x)) != self.act(gh, x) {
                        return Err(Error::NotAnAction(alloc::format!(
                            "compatibility fails at g = {}, h = {}, x = {x}",
                            self.group.element(g),
                            self.group.element(h)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// The one-point G-set.
    pub fn point(group: Arc<FiniteGroup>) -> Self {
        let table = (0..group.order()).map(|_| alloc::vec![0u32]).collect();
        FiniteGSet::from_table(group, alloc::vec![String::from("*")], table)
    }

    /// The group acting on itself by left translation.
    pub fn regular(group: Arc<FiniteGroup>) -> Self {
        let labels = (0..group.order())
            .map(|i| alloc::format!("{}", group.element(i)))
            .collect();
        let table = (0..group.order())
            .map(|g| (0..group.order()).map(|x| group.mul(g, x) as u32).collect())
            .collect();
        FiniteGSet::from_table(group, labels, table)
    }

    /// Left cosets of a subgroup, with `g · bH = (gb)H`.
    pub fn cosets(group: Arc<FiniteGroup>, subgroup: &FiniteGroup) -> Result<Self> {
        if !subgroup.is_subgroup_of(&group) {
            return Err(Error::Mismatch("cosets require a subgroup".into()));
        }
        let n = group.order();
        // Coset representative of each element: the least member of its coset.
        let mut coset_rep = alloc::vec![usize::MAX; n];
        let mut reps = Vec::new();
        for b in 0..n {
            if coset_rep[b] != usize::MAX {
                continue;
            }
            let members: Vec<usize> = (0..subgroup.order())
                .map(|h| {
                    let hp = subgroup.element(h);
                    group.mul(b, group.index_of(hp).expect("subgroup element"))
                })
                .collect();
            let least = *members.iter().min().unwrap();
            for m in members {
                coset_rep[m] = least;
            }
            reps.push(least);
        }
        reps.sort_unstable();
        let point_of_rep = |r: usize| reps.binary_search(&r).unwrap();
        let labels = reps
            .iter()
            .map(|&r| alloc::format!("{}H", group.element(r)))
            .collect();
        let table = (0..n)
            .map(|g| {
                reps.iter()
                    .map(|&b| point_of_rep(coset_rep[group.mul(g, b)]) as u32)
                    .collect()
            })
            .collect();
        Ok(FiniteGSet::from_table(group, labels, table))
    }

    /// The defining action on the permutation points `0..degree`.
    pub fn natural(group: Arc<FiniteGroup>) -> Self {
        let degree = group.degree();
        let labels = (0..degree).map(|x| alloc::format!("{x}")).collect();
        let table = (0..group.order())
            .map(|g| {
                (0..degree)
                    .map(|x| group.element(g).apply(x) as u32)
                    .collect()
            })
            .collect();
        FiniteGSet::from_table(group, labels, table)
    }

    /// Disjoint union of two G-sets over the same group.
    pub fn disjoint_union(&self, other: &FiniteGSet) -> Result<Self> {
        if *self.group != *other.group {
            return Err(Error::Mismatch("disjoint union requires one group".into()));
        }
        let offset = self.size() as u32;
        let labels = self
            .labels
            .iter()
            .map(|l| alloc::format!("L:{l}"))
            .chain(other.labels.iter().map(|l| alloc::format!("R:{l}")))
            .collect();
        let table = (0..self.group.order())
            .map(|g| {
                self.table[g]
                    .iter()
                    .copied()
                    .chain(other.table[g].iter().map(|&x| x + offset))
                    .collect()
            })
            .collect();
        Ok(FiniteGSet::from_table(self.group.clone(), labels, table))
    }

    /// Views a G-set as an H-set through `φ: H → G`.
    pub fn restricted_through(&self, phi: &GroupHom) -> Result<Self> {
        if **phi.codomain() != *self.group {
            return Err(Error::Mismatch(
                "homomorphism codomain must be the acting group".into(),
            ));
        }
        let h = phi.domain().clone();
        let table = (0..h.order())
            .map(|a| self.table[phi.apply(a)].clone())
            .collect();
        Ok(FiniteGSet::from_table(h, self.labels.clone(), table))
    }

    /// The induced G-set `G ×_H X` for an inclusion `H ≤ G`, together with
    /// the unit map `i: X → G ×_H X`, `x ↦ [e, x]`.
    pub fn induced(inclusion: &GroupHom, x: &FiniteGSet) -> Result<(Self, Vec<usize>)> {
        if !inclusion.is_injective() {
            return Err(Error::Mismatch("induction requires an injective hom".into()));
        }
        if **inclusion.domain() != *x.group {
            return Err(Error::Mismatch(
                "G-set group must be the inclusion domain".into(),
            ));
        }
        let g = inclusion.codomain().clone();
        let h = inclusion.domain();
        let ng = g.order();
        let nx = x.size();
        // Union-find over raw pairs (g, x), glued by (g·φ(h), x) ~ (g, h·x).
        let mut parent: Vec<usize> = (0..ng * nx).collect();
        fn find(parent: &mut Vec<usize>, mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        for gi in 0..ng {
            for xi in 0..nx {
                for hi in 0..h.order() {
                    let a = g.mul(gi, inclusion.apply(hi)) * nx + xi;
                    let b = gi * nx + x.act(hi, xi);
                    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                    if ra != rb {
                        let (lo, hi2) = if ra < rb { (ra, rb) } else { (rb, ra) };
                        parent[hi2] = lo;
                    }
                }
            }
        }
        // Points: classes ordered by least raw pair.
        let mut class_ids: Vec<usize> = (0..ng * nx)
            .filter(|&i| find(&mut parent, i) == i)
            .collect();
        class_ids.sort_unstable();
        let point_of = |parent: &mut Vec<usize>, raw: usize, ids: &[usize]| {
            let r = find(parent, raw);
            ids.binary_search(&r).unwrap()
        };
        let labels = class_ids
            .iter()
            .map(|&raw| {
                alloc::format!("[{},{}]", g.element(raw / nx), x.labels[raw % nx])
            })
            .collect();
        let mut table = Vec::with_capacity(ng);
        for gp in 0..ng {
            let mut row = Vec::with_capacity(class_ids.len());
            for &raw in &class_ids {
                let moved = g.mul(gp, raw / nx) * nx + raw % nx;
                row.push(point_of(&mut parent, moved, &class_ids) as u32);
            }
            table.push(row);
        }
        let unit_map = (0..nx)
            .map(|xi| point_of(&mut parent, g.identity() * nx + xi, &class_ids))
            .collect();
        Ok((FiniteGSet::from_table(g, labels, table), unit_map))
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn act(&self, g: usize, x: usize) -> usize {
        self.table[g][x] as usize
    }

    /// Points fixed by `g`, ascending.
    pub fn fixed_points(&self, g: usize) -> Vec<usize> {
        (0..self.size()).filter(|&x| self.act(g, x) == x).collect()
    }

    /// Orbits of a subgroup (given by its own enumeration plus the inclusion
    /// indices into the acting group) on a subset of points. Representatives
    /// are the least points; stabilizers are returned as enumerated groups.
    pub fn orbits_on(
        &self,
        subgroup: &Arc<FiniteGroup>,
        member_indices: &[usize],
        points: &[usize],
    ) -> Vec<Orbit> {
        let mut seen = alloc::vec![false; self.size()];
        let mut orbits = Vec::new();
        for &start in points {
            if seen[start] {
                continue;
            }
            let mut orbit: Vec<usize> = Vec::new();
            let mut stab_elems: Vec<Perm> = Vec::new();
            for (k, &gk) in member_indices.iter().enumerate() {
                let image = self.act(gk, start);
                if image == start {
                    stab_elems.push(subgroup.element(k).clone());
                }
                if !seen[image] {
                    seen[image] = true;
                    orbit.push(image);
                }
            }
            orbit.sort_unstable();
            debug_assert_eq!(orbit[0], start, "points must be scanned in order");
            let stabilizer = FiniteGroup::from_elements(subgroup.degree(), stab_elems)
                .expect("stabilizer is a subgroup");
            debug_assert_eq!(orbit.len() * stabilizer.order(), subgroup.order());
            orbits.push(Orbit {
                rep: start,
                points: orbit,
                stabilizer,
            });
        }
        orbits
    }
}

impl PartialEq for FiniteGSet {
    fn eq(&self, other: &Self) -> bool {
        *self.group == *other.group && self.table == other.table
    }
}

impl Eq for FiniteGSet {}

impl core::fmt::Debug for FiniteGSet {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(
            f,
            "FiniteGSet({} points over order-{} group)",
            self.size(),
            self.group.order()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, symmetric, DEFAULT_CAP};

    fn s3_mod_transposition() -> (Arc<FiniteGroup>, FiniteGSet) {
        let s3 = symmetric(3);
        let h = s3
            .subgroup(alloc::vec![Perm::from_cycles(3, &[alloc::vec![0, 1]]).unwrap()])
            .unwrap();
        let cosets = FiniteGSet::cosets(s3.clone(), &h).unwrap();
        (s3, cosets)
    }

    #[test]
    fn point_and_regular_sets() {
        let s3 = symmetric(3);
        let pt = FiniteGSet::point(s3.clone());
        assert_eq!(pt.size(), 1);
        assert_eq!(pt.fixed_points(3), alloc::vec![0]);

        let reg = FiniteGSet::regular(s3.clone());
        assert_eq!(reg.size(), 6);
        // Free: only the identity fixes anything.
        for g in 1..6 {
            assert!(reg.fixed_points(g).is_empty());
        }
        assert_eq!(reg.fixed_points(0).len(), 6);
    }

    #[test]
    fn coset_set_of_s3() {
        let (s3, cosets) = s3_mod_transposition();
        assert_eq!(cosets.size(), 3);
        let t = s3
            .index_of(&Perm::from_cycles(3, &[alloc::vec![0, 1]]).unwrap())
            .unwrap();
        let r = s3
            .index_of(&Perm::from_cycles(3, &[alloc::vec![0, 1, 2]]).unwrap())
            .unwrap();
        // b^{-1}(0 1)b ∈ H for exactly one coset.
        assert_eq!(cosets.fixed_points(t).len(), 1);
        // No 3-cycle conjugate lies in H.
        assert!(cosets.fixed_points(r).is_empty());
    }

    #[test]
    fn orbits_of_z2_on_three_points() {
        let z2 = FiniteGroup::enumerate(
            3,
            alloc::vec![Perm::from_cycles(3, &[alloc::vec![0, 1]]).unwrap()],
            DEFAULT_CAP,
        )
        .unwrap();
        let x = FiniteGSet::natural(z2.clone());
        let members: Vec<usize> = (0..2).collect();
        let orbits = x.orbits_on(&z2, &members, &[0, 1, 2]);
        assert_eq!(orbits.len(), 2);
        assert_eq!(orbits[0].points, alloc::vec![0, 1]);
        assert_eq!(orbits[0].stabilizer.order(), 1);
        assert_eq!(orbits[1].points, alloc::vec![2]);
        assert_eq!(orbits[1].stabilizer.order(), 2);
    }

    #[test]
    fn transitive_coset_orbit() {
        let (s3, cosets) = s3_mod_transposition();
        let members: Vec<usize> = (0..6).collect();
        let points: Vec<usize> = (0..3).collect();
        let orbits = cosets.orbits_on(&s3, &members, &points);
        assert_eq!(orbits.len(), 1);
        assert_eq!(orbits[0].stabilizer.order(), 2);
    }

    #[test]
    fn induced_from_whole_group_is_isomorphic() {
        let (s3, cosets) = s3_mod_transposition();
        let incl = GroupHom::identity(s3.clone());
        let (ind, unit) = FiniteGSet::induced(&incl, &cosets).unwrap();
        assert_eq!(ind.size(), 3);
        // The unit map is a bijection here and H-equivariant.
        let mut sorted = unit.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), 3);
        for g in 0..6 {
            for x in 0..3 {
                assert_eq!(ind.act(g, unit[x]), unit[cosets.act(g, x)]);
            }
        }
    }

    #[test]
    fn induced_from_trivial_subgroup_is_regular() {
        let s3 = symmetric(3);
        let triv = s3.subgroup(Vec::new()).unwrap();
        let incl = GroupHom::inclusion(triv.clone(), s3.clone()).unwrap();
        let pt = FiniteGSet::point(triv);
        let (ind, _) = FiniteGSet::induced(&incl, &pt).unwrap();
        assert_eq!(ind.size(), 6);
        for g in 1..6 {
            assert!(ind.fixed_points(g).is_empty());
        }
    }

    #[test]
    fn induced_coset_count() {
        let s3 = symmetric(3);
        let h = s3
            .subgroup(alloc::vec![Perm::from_cycles(3, &[alloc::vec![0, 1]]).unwrap()])
            .unwrap();
        let incl = GroupHom::inclusion(h.clone(), s3.clone()).unwrap();
        let pt = FiniteGSet::point(h);
        let (ind, unit) = FiniteGSet::induced(&incl, &pt).unwrap();
        assert_eq!(ind.size(), 3);
        assert_eq!(unit.len(), 1);
    }

    #[test]
    fn restriction_through_hom() {
        let z2 = cyclic(2);
        let s3 = symmetric(3);
        let t = s3
            .index_of(&Perm::from_cycles(3, &[alloc::vec![0, 1]]).unwrap())
            .unwrap();
        let phi = GroupHom::from_generator_images(z2, s3.clone(), &[t]).unwrap();
        let nat = FiniteGSet::natural(s3);
        let restricted = nat.restricted_through(&phi).unwrap();
        assert_eq!(restricted.size(), 3);
        assert_eq!(restricted.act(1, 0), 1);
        assert_eq!(restricted.act(1, 2), 2);
    }

    #[test]
    fn disjoint_union_sizes() {
        let s3 = symmetric(3);
        let pt = FiniteGSet::point(s3.clone());
        let both = pt.disjoint_union(&pt).unwrap();
        assert_eq!(both.size(), 2);
        assert_eq!(both.fixed_points(0).len(), 2);
    }
}
