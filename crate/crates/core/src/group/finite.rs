//! Finite groups by multiplication table, subgroups and homomorphisms.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{Error, Result};

/// Orders up to this bound get an exhaustive associativity check; larger
/// tables are checked on a fixed pseudo-random sample of triples.
pub const EXHAUSTIVE_ASSOCIATIVITY_LIMIT: usize = 64;
const ASSOCIATIVITY_SAMPLES: usize = 20_000;

/// A finite group given by its Cayley table. Elements are `0..order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl FiniteGroup {
    /// Validates a table: square, Latin, two-sided identity, associative.
    pub fn from_table(table: Vec<Vec<usize>>, identity: usize, labels: Option<Vec<String>>) -> Result<Self> {
        let order = table.len();
        if order == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        let mut flat = Vec::with_capacity(order * order);
        for (i, row) in table.iter().enumerate() {
            if row.len() != order {
                return Err(Error::InvalidGroup(format!(
                    "row {i} has {} entries, expected {order}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= order) {
                return Err(Error::InvalidGroup(format!("entry {bad} in row {i} is out of range")));
            }
            flat.extend_from_slice(row);
        }
        if identity >= order {
            return Err(Error::InvalidGroup(format!("identity {identity} is out of range")));
        }
        if let Some(l) = &labels {
            if l.len() != order {
                return Err(Error::InvalidGroup(format!("{} labels for {order} elements", l.len())));
            }
        }
        // Latin square
        let mut seen = vec![usize::MAX; order];
        for i in 0..order {
            for j in 0..order {
                let x = flat[i * order + j];
                if seen[x] == i {
                    return Err(Error::InvalidGroup(format!("row {i} repeats element {x}")));
                }
                seen[x] = i;
            }
        }
        let mut seen = vec![usize::MAX; order];
        for j in 0..order {
            for i in 0..order {
                let x = flat[i * order + j];
                if seen[x] == j {
                    return Err(Error::InvalidGroup(format!("column {j} repeats element {x}")));
                }
                seen[x] = j;
            }
        }
        for a in 0..order {
            if flat[identity * order + a] != a || flat[a * order + identity] != a {
                return Err(Error::InvalidGroup(format!(
                    "element {identity} is not a two-sided identity"
                )));
            }
        }
        let g = Self::from_flat_unchecked(order, flat, identity).with_labels_unchecked(labels);
        g.check_associativity()?;
        Ok(g)
    }

    /// Builds a group from a flat table already known to be a group table.
    pub(crate) fn from_flat_unchecked(order: usize, table: Vec<usize>, identity: usize) -> Self {
        let mut inverses = vec![0; order];
        for a in 0..order {
            for b in 0..order {
                if table[a * order + b] == identity {
                    inverses[a] = b;
                    break;
                }
            }
        }
        Self {
            order,
            table,
            identity,
            inverses,
            labels: None,
        }
    }

    fn with_labels_unchecked(mut self, labels: Option<Vec<String>>) -> Self {
        self.labels = labels;
        self
    }

    pub fn with_labels(self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order {
            return Err(Error::InvalidGroup(format!(
                "{} labels for {} elements",
                labels.len(),
                self.order
            )));
        }
        Ok(self.with_labels_unchecked(Some(labels)))
    }

    fn check_associativity(&self) -> Result<()> {
        let n = self.order;
        let check = |a: usize, b: usize, c: usize| {
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                Err(Error::InvalidGroup(format!("({a}·{b})·{c} ≠ {a}·({b}·{c})")))
            } else {
                Ok(())
            }
        };
        if n <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        check(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x00A5_50C1);
            for _ in 0..ASSOCIATIVITY_SAMPLES {
                check(rng.random_range(0..n), rng.random_range(0..n), rng.random_range(0..n))?;
            }
        }
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn elements(&self) -> core::ops::Range<usize> {
        0..self.order
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, a: usize) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => format!("{a}"),
        }
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(a) } else { a };
        let mut acc = self.identity;
        for _ in 0..k.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    #[inline]
    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    /// `a b a⁻¹`
    pub fn conj(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.inv(a))
    }

    /// `a b a⁻¹ b⁻¹`
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.commute(a, b)))
    }

    /// Isomorphic copy where old element `i` becomes `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<FiniteGroup> {
        let n = self.order;
        if perm.len() != n {
            return Err(Error::InvalidGroup("relabelling has the wrong length".into()));
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || seen[p] {
                return Err(Error::InvalidGroup("relabelling is not a permutation".into()));
            }
            seen[p] = true;
        }
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[perm[a] * n + perm[b]] = perm[self.mul(a, b)];
            }
        }
        Ok(Self::from_flat_unchecked(n, table, perm[self.identity]))
    }

    /// Smallest-first greedy generating set.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = Subgroup::trivial(self);
        for x in self.elements() {
            if !span.contains(x) {
                gens.push(x);
                span = Subgroup::generated(self, &gens);
            }
        }
        gens
    }
}

/// A subgroup, stored as the sorted member list of its parent.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    parent_order: usize,
    members: Vec<usize>,
}

impl Subgroup {
    pub fn new(parent: &FiniteGroup, mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        if let Some(&bad) = members.iter().find(|&&x| x >= parent.order()) {
            return Err(Error::InvalidSubgroup(format!("element {bad} is out of range")));
        }
        let s = Self {
            parent_order: parent.order(),
            members,
        };
        if !s.contains(parent.identity()) {
            return Err(Error::InvalidSubgroup("identity missing".into()));
        }
        for &a in &s.members {
            if !s.contains(parent.inv(a)) {
                return Err(Error::InvalidSubgroup(format!("inverse of {a} missing")));
            }
            for &b in &s.members {
                if !s.contains(parent.mul(a, b)) {
                    return Err(Error::InvalidSubgroup(format!("not closed: {a}·{b}")));
                }
            }
        }
        Ok(s)
    }

    pub(crate) fn from_members_unchecked(parent_order: usize, mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        Self { parent_order, members }
    }

    pub fn trivial(parent: &FiniteGroup) -> Self {
        Self {
            parent_order: parent.order(),
            members: vec![parent.identity()],
        }
    }

    pub fn whole(parent: &FiniteGroup) -> Self {
        Self {
            parent_order: parent.order(),
            members: parent.elements().collect(),
        }
    }

    /// The subgroup generated by `gens`.
    pub fn generated(parent: &FiniteGroup, gens: &[usize]) -> Self {
        let mut in_set = vec![false; parent.order()];
        let mut queue = vec![parent.identity()];
        in_set[parent.identity()] = true;
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            i += 1;
            for &g in gens {
                let y = parent.mul(x, g);
                if !in_set[y] {
                    in_set[y] = true;
                    queue.push(y);
                }
            }
        }
        Self::from_members_unchecked(parent.order(), queue)
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    /// `[G : S]`
    pub fn index(&self) -> usize {
        self.parent_order / self.members.len()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.binary_search(&a).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&a| other.contains(a))
    }

    pub fn is_abelian(&self, parent: &FiniteGroup) -> bool {
        self.members
            .iter()
            .enumerate()
            .all(|(i, &a)| self.members[..i].iter().all(|&b| parent.commute(a, b)))
    }

    pub fn is_normal(&self, parent: &FiniteGroup) -> bool {
        parent
            .elements()
            .all(|g| self.members.iter().all(|&n| self.contains(parent.conj(g, n))))
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Self {
            parent_order: self.parent_order,
            members: self.members.iter().copied().filter(|&a| other.contains(a)).collect(),
        }
    }

    /// The subgroup as a group in its own right, with the embedding
    /// `new index → parent index`.
    pub fn to_group(&self, parent: &FiniteGroup) -> (FiniteGroup, Vec<usize>) {
        let n = self.members.len();
        let pos = |a: usize| self.members.binary_search(&a).expect("subgroup is closed");
        let mut table = Vec::with_capacity(n * n);
        for &a in &self.members {
            for &b in &self.members {
                table.push(pos(parent.mul(a, b)));
            }
        }
        let mut g = FiniteGroup::from_flat_unchecked(n, table, pos(parent.identity()));
        if let Some(labels) = parent.labels() {
            g.labels = Some(self.members.iter().map(|&a| labels[a].clone()).collect());
        }
        (g, self.members.clone())
    }
}

/// A homomorphism between finite groups, as the image of every element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    source_order: usize,
    target_order: usize,
    images: Vec<usize>,
}

impl GroupHom {
    /// Checks `images[a·b] = images[a]·images[b]` for all pairs.
    pub fn new(source: &FiniteGroup, target: &FiniteGroup, images: Vec<usize>) -> Result<Self> {
        if images.len() != source.order() {
            return Err(Error::InvalidHom(format!(
                "{} images for {} elements",
                images.len(),
                source.order()
            )));
        }
        if let Some(&bad) = images.iter().find(|&&x| x >= target.order()) {
            return Err(Error::InvalidHom(format!("image {bad} is out of range")));
        }
        for a in source.elements() {
            for b in source.elements() {
                if images[source.mul(a, b)] != target.mul(images[a], images[b]) {
                    return Err(Error::InvalidHom(format!("not multiplicative at ({a}, {b})")));
                }
            }
        }
        Ok(Self {
            source_order: source.order(),
            target_order: target.order(),
            images,
        })
    }

    pub fn identity(g: &FiniteGroup) -> Self {
        Self {
            source_order: g.order(),
            target_order: g.order(),
            images: g.elements().collect(),
        }
    }

    pub fn source_order(&self) -> usize {
        self.source_order
    }

    pub fn target_order(&self) -> usize {
        self.target_order
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.images[a]
    }

    pub fn kernel(&self, target: &FiniteGroup) -> Subgroup {
        let members = (0..self.source_order)
            .filter(|&a| self.images[a] == target.identity())
            .collect();
        Subgroup::from_members_unchecked(self.source_order, members)
    }

    pub fn image(&self) -> Subgroup {
        Subgroup::from_members_unchecked(self.target_order, self.images.clone())
    }

    pub fn is_surjective(&self) -> bool {
        self.image().order() == self.target_order
    }
}
