//! Finite permutation groups with eagerly computed class data.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::perm::Perm;

/// Default ceiling on element enumeration.
pub const DEFAULT_CAP: usize = 20_000;

/// A fully enumerated finite permutation group.
///
/// Elements are stored sorted lexicographically by image array, so element
/// index 0 is always the identity and "enumeration-least" choices
/// (representatives of classes, orbits, cosets) are reproducible
/// bit-for-bit. Every element carries a word in the generators, used to
/// extend maps defined on generators. Conjugacy data is computed eagerly;
/// all queries are pure.
#[derive(Clone)]
pub struct FiniteGroup {
    degree: usize,
    elements: Vec<Perm>,
    /// Indices of the defining generators.
    generators: Vec<usize>,
    /// For each element, a word in generator list positions (left to right,
    /// composed so that the word `[a, b]` means `gen_a * gen_b`).
    words: Vec<Vec<usize>>,
    inverses: Vec<usize>,
    orders: Vec<u32>,
    /// Conjugacy class index of each element.
    class_of: Vec<usize>,
    /// Classes as sorted element-index lists, ordered by least member; the
    /// identity's class comes first.
    classes: Vec<Vec<usize>>,
}

impl FiniteGroup {
    /// Enumerates the closure of `generators` by breadth-first search.
    pub fn enumerate(degree: usize, generators: Vec<Perm>, cap: usize) -> Result<Arc<Self>> {
        if degree == 0 || degree > u16::MAX as usize {
            return Err(Error::Invalid(alloc::format!("unsupported degree {degree}")));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::Invalid(alloc::format!(
                    "generator degree {} does not match group degree {degree}",
                    g.degree()
                )));
            }
        }
        let identity = Perm::identity(degree);
        let mut words: BTreeMap<Perm, Vec<usize>> = BTreeMap::new();
        words.insert(identity.clone(), Vec::new());
        let mut queue = alloc::vec![identity];
        while let Some(x) = queue.pop() {
            let base_word = words[&x].clone();
            for (gi, g) in generators.iter().enumerate() {
                let y = x.compose(g);
                if !words.contains_key(&y) {
                    if words.len() >= cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    let mut w = base_word.clone();
                    w.push(gi);
                    words.insert(y.clone(), w);
                    queue.push(y);
                }
            }
        }
        let elements: Vec<Perm> = words.keys().cloned().collect();
        let word_list: Vec<Vec<usize>> = elements.iter().map(|e| words[e].clone()).collect();
        let generator_indices = generators
            .iter()
            .map(|g| elements.binary_search(g).expect("generator is in closure"))
            .collect();
        Ok(Arc::new(Self::finish(
            degree,
            elements,
            generator_indices,
            word_list,
        )))
    }

    /// Builds a group from a closed element set, deriving a small generator
    /// set greedily. Verifies closure.
    pub fn from_elements(degree: usize, elements: Vec<Perm>) -> Result<Arc<Self>> {
        let set: BTreeSet<Perm> = elements.into_iter().collect();
        if !set.contains(&Perm::identity(degree)) {
            return Err(Error::Invalid("element set lacks the identity".into()));
        }
        for a in &set {
            for b in &set {
                if !set.contains(&a.compose(b)) {
                    return Err(Error::Invalid(alloc::format!(
                        "element set not closed: {a} * {b} missing"
                    )));
                }
            }
        }
        let elements: Vec<Perm> = set.iter().cloned().collect();
        // Greedy minimal generating sequence: repeatedly adjoin the least
        // element outside the current closure.
        let mut gens: Vec<Perm> = Vec::new();
        let mut closure: BTreeSet<Perm> = [Perm::identity(degree)].into_iter().collect();
        while closure.len() < elements.len() {
            let next = elements.iter().find(|e| !closure.contains(*e)).unwrap();
            gens.push(next.clone());
            let mut queue: Vec<Perm> = closure.iter().cloned().collect();
            while let Some(x) = queue.pop() {
                for g in &gens {
                    let y = x.compose(g);
                    if closure.insert(y.clone()) {
                        queue.push(y);
                    }
                }
            }
        }
        let g = FiniteGroup::enumerate(degree, gens, elements.len())?;
        debug_assert_eq!(g.order(), elements.len());
        Ok(g)
    }

    fn finish(
        degree: usize,
        elements: Vec<Perm>,
        generators: Vec<usize>,
        words: Vec<Vec<usize>>,
    ) -> Self {
        let n = elements.len();
        let index_of = |p: &Perm| elements.binary_search(p).expect("closed");
        let inverses: Vec<usize> = elements.iter().map(|e| index_of(&e.inverse())).collect();
        let orders: Vec<u32> = elements.iter().map(Perm::order).collect();

        // Conjugation orbits.
        let mut class_of = alloc::vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if class_of[start] != usize::MAX {
                continue;
            }
            let cid = classes.len();
            let mut orbit = alloc::vec![start];
            class_of[start] = cid;
            let mut queue = alloc::vec![start];
            while let Some(x) = queue.pop() {
                for (ui, u) in elements.iter().enumerate() {
                    let y = index_of(&u.compose(&elements[x]).compose(&elements[inverses[ui]]));
                    if class_of[y] == usize::MAX {
                        class_of[y] = cid;
                        orbit.push(y);
                        queue.push(y);
                    }
                }
            }
            orbit.sort_unstable();
            classes.push(orbit);
        }

        FiniteGroup {
            degree,
            elements,
            generators,
            words,
            inverses,
            orders,
            class_of,
            classes,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.generators
    }

    /// Word of element `i` as positions into the generator list.
    pub fn word(&self, i: usize) -> &[usize] {
        &self.words[i]
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.elements.binary_search(p).ok()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.index_of(p).is_some()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.index_of(&self.elements[a].compose(&self.elements[b]))
            .expect("group is closed")
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `u a u^{-1}`.
    pub fn conj(&self, u: usize, a: usize) -> usize {
        self.mul(self.mul(u, a), self.inverses[u])
    }

    pub fn element_order(&self, a: usize) -> u32 {
        self.orders[a]
    }

    /// Exponent of the group: lcm of element orders.
    pub fn exponent(&self) -> u64 {
        self.orders
            .iter()
            .fold(1u64, |acc, &o| num_integer::lcm(acc, o as u64))
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, a: usize) -> usize {
        self.class_of[a]
    }

    /// Element indices of class `c`, ascending.
    pub fn class(&self, c: usize) -> &[usize] {
        &self.classes[c]
    }

    /// Enumeration-least representative of class `c`.
    pub fn class_rep(&self, c: usize) -> usize {
        self.classes[c][0]
    }

    pub fn class_reps(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c[0]).collect()
    }

    /// Index of the class of inverses of class `c`.
    pub fn inverse_class(&self, c: usize) -> usize {
        self.class_of[self.inverses[self.classes[c][0]]]
    }

    pub fn is_abelian(&self) -> bool {
        self.classes.len() == self.elements.len()
    }

    pub fn is_central(&self, a: usize) -> bool {
        (0..self.order()).all(|b| self.mul(a, b) == self.mul(b, a))
    }

    /// The centralizer `C_G(g)` as its own enumerated group (same degree).
    pub fn centralizer(&self, g: usize) -> Arc<FiniteGroup> {
        let elems: Vec<Perm> = (0..self.order())
            .filter(|&h| self.mul(h, g) == self.mul(g, h))
            .map(|h| self.elements[h].clone())
            .collect();
        FiniteGroup::from_elements(self.degree, elems).expect("centralizer is a subgroup")
    }

    /// Subgroup generated by the given permutations; errors if any generated
    /// element escapes this group.
    pub fn subgroup(&self, gens: Vec<Perm>) -> Result<Arc<FiniteGroup>> {
        let sub = FiniteGroup::enumerate(self.degree, gens, self.order())?;
        for e in sub.elements() {
            if !self.contains(e) {
                return Err(Error::Invalid(alloc::format!(
                    "generated element {e} lies outside the group"
                )));
            }
        }
        Ok(sub)
    }

    pub fn is_subgroup_of(&self, other: &FiniteGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|e| other.contains(e))
    }

    /// All subgroups, one representative per conjugacy class of subgroups,
    /// ordered by (order, element set). Intended for small groups.
    pub fn subgroups_up_to_conjugacy(&self) -> Vec<Arc<FiniteGroup>> {
        let n = self.order();
        let mut all: BTreeSet<Vec<usize>> = BTreeSet::new();
        all.insert(alloc::vec![0]);
        let mut queue: Vec<Vec<usize>> = all.iter().cloned().collect();
        while let Some(h) = queue.pop() {
            for x in 1..n {
                if h.binary_search(&x).is_ok() {
                    continue;
                }
                let ext = self.closure_indices(&h, x);
                if all.insert(ext.clone()) {
                    queue.push(ext);
                }
            }
        }
        // Keep the least member of each conjugacy orbit of subgroups.
        let mut reps: BTreeSet<Vec<usize>> = BTreeSet::new();
        for h in &all {
            let canon = (0..n)
                .map(|u| {
                    let mut c: Vec<usize> = h.iter().map(|&a| self.conj(u, a)).collect();
                    c.sort_unstable();
                    c
                })
                .min()
                .unwrap();
            reps.insert(canon);
        }
        let mut out: Vec<Arc<FiniteGroup>> = reps
            .into_iter()
            .map(|idxs| {
                let elems: Vec<Perm> = idxs.iter().map(|&i| self.elements[i].clone()).collect();
                FiniteGroup::from_elements(self.degree, elems).expect("subgroup set is closed")
            })
            .collect();
        out.sort_by(|a, b| {
            (a.order(), a.elements()).cmp(&(b.order(), b.elements()))
        });
        out
    }

    fn closure_indices(&self, base: &[usize], extra: usize) -> Vec<usize> {
        let mut set: BTreeSet<usize> = base.iter().copied().collect();
        set.insert(extra);
        let mut queue: Vec<usize> = set.iter().copied().collect();
        while let Some(x) = queue.pop() {
            for g in [extra].iter().chain(base.iter()) {
                let y = self.mul(x, *g);
                if set.insert(y) {
                    queue.push(y);
                }
            }
            let y = self.inv(x);
            if set.insert(y) {
                queue.push(y);
            }
        }
        // Close under all pairwise products to be safe for non-generating
        // base sets.
        loop {
            let cur: Vec<usize> = set.iter().copied().collect();
            let before = set.len();
            for &a in &cur {
                for &b in &cur {
                    set.insert(self.mul(a, b));
                }
            }
            if set.len() == before {
                break;
            }
        }
        set.into_iter().collect()
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for FiniteGroup {}

impl core::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "FiniteGroup(degree {}, order {})", self.degree, self.order())
    }
}

// ---------------------------------------------------------------------------
// Named families
// ---------------------------------------------------------------------------

/// `Z/n` as the cyclic group generated by an n-cycle (degree n; degree 1 for
/// the trivial group).
pub fn cyclic(n: usize) -> Arc<FiniteGroup> {
    assert!(n >= 1);
    if n == 1 {
        return FiniteGroup::enumerate(1, Vec::new(), DEFAULT_CAP).unwrap();
    }
    let cycle: Vec<u16> = (0..n as u16).collect();
    let g = Perm::from_cycles(n, &[cycle]).unwrap();
    FiniteGroup::enumerate(n, alloc::vec![g], DEFAULT_CAP).unwrap()
}

/// The symmetric group on `n` points.
pub fn symmetric(n: usize) -> Arc<FiniteGroup> {
    assert!(n >= 1);
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(Perm::from_cycles(n, &[alloc::vec![0, 1]]).unwrap());
    }
    if n >= 3 {
        gens.push(Perm::from_cycles(n, &[(0..n as u16).collect()]).unwrap());
    }
    FiniteGroup::enumerate(n.max(1), gens, DEFAULT_CAP).unwrap()
}

/// The alternating group on `n` points.
pub fn alternating(n: usize) -> Arc<FiniteGroup> {
    assert!(n >= 3);
    let mut gens = alloc::vec![Perm::from_cycles(n, &[alloc::vec![0, 1, 2]]).unwrap()];
    if n >= 4 {
        let tail: Vec<u16> = if n % 2 == 1 {
            (0..n as u16).collect()
        } else {
            (1..n as u16).collect()
        };
        gens.push(Perm::from_cycles(n, &[tail]).unwrap());
    }
    FiniteGroup::enumerate(n, gens, DEFAULT_CAP).unwrap()
}

/// The dihedral group of order `2n` acting on the n-gon (n ≥ 3).
pub fn dihedral(n: usize) -> Arc<FiniteGroup> {
    assert!(n >= 3, "dihedral groups are supported for n >= 3");
    let rotation = Perm::from_cycles(n, &[(0..n as u16).collect()]).unwrap();
    let reflection = Perm::from_images(
        (0..n as u16).map(|i| (n as u16 - i) % n as u16).collect(),
    )
    .unwrap();
    FiniteGroup::enumerate(n, alloc::vec![rotation, reflection], DEFAULT_CAP).unwrap()
}

/// The quaternion group `Q8` acting on itself by left translation
/// (points `1, -1, i, -i, j, -j, k, -k`).
pub fn quaternion8() -> Arc<FiniteGroup> {
    let i = Perm::from_images(alloc::vec![2, 3, 1, 0, 6, 7, 5, 4]).unwrap();
    let j = Perm::from_images(alloc::vec![4, 5, 7, 6, 1, 0, 2, 3]).unwrap();
    FiniteGroup::enumerate(8, alloc::vec![i, j], DEFAULT_CAP).unwrap()
}

/// The Klein four-group `Z/2 × Z/2` on 4 points.
pub fn klein4() -> Arc<FiniteGroup> {
    let a = Perm::from_cycles(4, &[alloc::vec![0, 1]]).unwrap();
    let b = Perm::from_cycles(4, &[alloc::vec![2, 3]]).unwrap();
    FiniteGroup::enumerate(4, alloc::vec![a, b], DEFAULT_CAP).unwrap()
}

/// The direct product acting on the disjoint union of the factors' points.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Arc<FiniteGroup> {
    let degree = a.degree() + b.degree();
    let lift_a = |p: &Perm| -> Perm {
        let mut images: Vec<u16> = (0..degree as u16).collect();
        for i in 0..a.degree() {
            images[i] = p.apply(i) as u16;
        }
        Perm::from_images(images).unwrap()
    };
    let lift_b = |p: &Perm| -> Perm {
        let mut images: Vec<u16> = (0..degree as u16).collect();
        for i in 0..b.degree() {
            images[a.degree() + i] = (a.degree() + p.apply(i)) as u16;
        }
        Perm::from_images(images).unwrap()
    };
    let mut gens: Vec<Perm> = a
        .generator_indices()
        .iter()
        .map(|&g| lift_a(a.element(g)))
        .collect();
    gens.extend(b.generator_indices().iter().map(|&g| lift_b(b.element(g))));
    FiniteGroup::enumerate(degree, gens, DEFAULT_CAP).unwrap()
}

/// Index in the product group of the pair `(x, y)`.
pub fn pair_element(
    product: &FiniteGroup,
    a: &FiniteGroup,
    b: &FiniteGroup,
    x: usize,
    y: usize,
) -> usize {
    let mut images: Vec<u16> = (0..product.degree() as u16).collect();
    for i in 0..a.degree() {
        images[i] = a.element(x).apply(i) as u16;
    }
    for i in 0..b.degree() {
        images[a.degree() + i] = (a.degree() + b.element(y).apply(i)) as u16;
    }
    product
        .index_of(&Perm::from_images(images).unwrap())
        .expect("pair lies in the product")
}

// ---------------------------------------------------------------------------
// Λ-group descriptors
// ---------------------------------------------------------------------------

/// Finite data of the group `Λ_K(g) = K × R / ⟨(g, -1)⟩`: the finite part
/// `K`, a central element `g`, and its order `l`. The circle factor is never
/// materialized; every representation in scope is determined by this data.
#[derive(Clone)]
pub struct LambdaGroupDescriptor {
    group: Arc<FiniteGroup>,
    central: usize,
    order_l: u32,
}

impl LambdaGroupDescriptor {
    pub fn new(group: Arc<FiniteGroup>, central: usize) -> Result<Self> {
        if central >= group.order() {
            return Err(Error::Invalid("central element index out of range".into()));
        }
        if !group.is_central(central) {
            return Err(Error::Invalid(alloc::format!(
                "element {} is not central",
                group.element(central)
            )));
        }
        let order_l = group.element_order(central);
        Ok(LambdaGroupDescriptor {
            group,
            central,
            order_l,
        })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn central(&self) -> usize {
        self.central
    }

    /// Order `l` of the central element.
    pub fn order_l(&self) -> u32 {
        self.order_l
    }
}

impl PartialEq for LambdaGroupDescriptor {
    fn eq(&self, other: &Self) -> bool {
        self.central == other.central && *self.group == *other.group
    }
}

impl Eq for LambdaGroupDescriptor {}

impl core::fmt::Debug for LambdaGroupDescriptor {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(
            f,
            "Λ(order-{} group, g = {})",
            self.group.order(),
            self.group.element(self.central)
        )
    }
}
