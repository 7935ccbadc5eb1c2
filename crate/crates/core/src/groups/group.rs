use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeMap, HashMap, VecDeque};
use std::hash::{Hash, Hasher};

use crate::arith::FieldElem;
use crate::error::{Error, Result};
use crate::polyfactor::CycleType;

use super::mat2::Mat2;

/// Closure sizes beyond this signal wrong generators.
pub const GROUP_ORDER_CAP: usize = 10_000;

/// Multiplication tables are precomputed up to this order.
const TABLE_LIMIT: usize = 2048;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjClass {
    /// Smallest member index, used as the representative.
    pub representative: usize,
    /// Member indices, ascending.
    pub members: Vec<usize>,
    pub element_order: u64,
}

impl ConjClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// A finite matrix group with its elements in canonical (sorted) order.
#[derive(Clone, Debug)]
pub struct GroupData<F: FieldElem> {
    elements: Vec<Mat2<F>>,
    index: HashMap<Mat2<F>, usize>,
    table: Option<Vec<u32>>,
    inverses: Vec<usize>,
    orders: Vec<u64>,
    classes: Vec<ConjClass>,
    class_of: Vec<usize>,
    generators: Vec<Mat2<F>>,
    tag: u64,
}

impl<F: FieldElem> GroupData<F> {
    /// Closure of `generators` under multiplication.
    pub fn build(generators: &[Mat2<F>]) -> Result<Self> {
        for g in generators {
            if g.inverse().is_none() {
                return Err(Error::Domain(format!("generator {g} is singular")));
            }
        }
        let id = Mat2::identity();
        let mut seen: HashMap<Mat2<F>, ()> = HashMap::new();
        seen.insert(id, ());
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for &g in generators {
                let y = x * g;
                if seen.insert(y, ()).is_none() {
                    if seen.len() > GROUP_ORDER_CAP {
                        return Err(Error::Domain(format!("closure exceeds {GROUP_ORDER_CAP} elements")));
                    }
                    queue.push_back(y);
                }
            }
        }
        let elements: Vec<_> = seen.into_keys().collect();
        Self::from_elements(elements, generators.to_vec())
    }

    /// Wraps an element list that is already known to be a group.
    pub fn from_elements(mut elements: Vec<Mat2<F>>, generators: Vec<Mat2<F>>) -> Result<Self> {
        elements.sort();
        elements.dedup();
        let n = elements.len();
        let index: HashMap<_, _> = elements.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let lookup = |m: &Mat2<F>| -> Result<usize> {
            index.get(m).copied().ok_or_else(|| Error::Domain(format!("not closed: {m} missing")))
        };
        let table = if n <= TABLE_LIMIT {
            let mut t = Vec::with_capacity(n * n);
            for a in &elements {
                for b in &elements {
                    t.push(lookup(&(*a * *b))? as u32);
                }
            }
            Some(t)
        } else {
            None
        };
        let mut inverses = Vec::with_capacity(n);
        let mut orders = Vec::with_capacity(n);
        for m in &elements {
            let inv = m.inverse().ok_or_else(|| Error::Domain(format!("{m} is singular")))?;
            inverses.push(lookup(&inv)?);
            orders.push(m.order().expect("invertible"));
        }
        let mut hasher = DefaultHasher::new();
        elements.hash(&mut hasher);
        let tag = hasher.finish();
        let mut group = GroupData {
            tag,
            elements,
            index,
            table,
            inverses,
            orders,
            classes: Vec::new(),
            class_of: Vec::new(),
            generators,
        };
        group.compute_classes();
        Ok(group)
    }

    fn compute_classes(&mut self) {
        let n = self.order();
        let mut class_of = vec![usize::MAX; n];
        let mut raw: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let mut members = Vec::new();
            for g in 0..n {
                let y = self.mul(self.mul(g, x), self.inverses[g]);
                if class_of[y] == usize::MAX {
                    class_of[y] = raw.len();
                    members.push(y);
                }
            }
            members.sort_unstable();
            raw.push(members);
        }
        raw.sort_by_key(|m| {
            let rep = &self.elements[m[0]];
            (self.orders[m[0]], rep.trace().encode(), m[0])
        });
        for (ci, members) in raw.iter().enumerate() {
            for &m in members {
                class_of[m] = ci;
            }
        }
        self.classes = raw
            .into_iter()
            .map(|members| ConjClass { representative: members[0], element_order: self.orders[members[0]], members })
            .collect();
        self.class_of = class_of;
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Hash of the element list; equal tags identify the same group.
    pub fn tag(&self) -> u64 {
        self.tag
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(ConjClass::size).collect()
    }

    pub fn elements(&self) -> &[Mat2<F>] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> Mat2<F> {
        self.elements[i]
    }

    pub fn generators(&self) -> &[Mat2<F>] {
        &self.generators
    }

    pub fn index_of(&self, m: &Mat2<F>) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn identity(&self) -> usize {
        self.index[&Mat2::identity()]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.elements.len() + b] as usize,
            None => self.index[&(self.elements[a] * self.elements[b])],
        }
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn element_order(&self, a: usize) -> u64 {
        self.orders[a]
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn class_of(&self, a: usize) -> usize {
        self.class_of[a]
    }

    /// Index of the class containing the inverses of class `c`.
    pub fn inverse_class(&self, c: usize) -> usize {
        self.class_of[self.inverses[self.classes[c].representative]]
    }

    pub fn center(&self) -> Vec<usize> {
        self.classes.iter().filter(|c| c.size() == 1).map(|c| c.representative).collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.classes.len() == self.order()
    }

    /// Multiset of element orders.
    pub fn order_statistics(&self) -> BTreeMap<u64, usize> {
        let mut m = BTreeMap::new();
        for &o in &self.orders {
            *m.entry(o).or_insert(0) += 1;
        }
        m
    }

    /// The subgroup as a group in its own right.
    pub fn subgroup_data(&self, sub: &Subgroup) -> Result<GroupData<F>> {
        let elems = sub.members().iter().map(|&i| self.elements[i]).collect();
        GroupData::from_elements(elems, Vec::new())
    }

    /// Subgroup generated by the given element indices.
    pub fn generated_subgroup(&self, gens: &[usize]) -> Subgroup {
        let mut inside = vec![false; self.order()];
        let id = self.identity();
        inside[id] = true;
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !inside[y] {
                    inside[y] = true;
                    queue.push_back(y);
                }
            }
        }
        Subgroup::from_mask(&inside)
    }

    pub fn is_subgroup(&self, set: &[usize]) -> bool {
        let mut inside = vec![false; self.order()];
        for &i in set {
            inside[i] = true;
        }
        inside[self.identity()]
            && set.iter().all(|&a| inside[self.inverses[a]] && set.iter().all(|&b| inside[self.mul(a, b)]))
    }

    /// Whether `sub` is normalized by every element of `ambient`.
    pub fn normalizes(&self, ambient: &Subgroup, sub: &Subgroup) -> bool {
        ambient.members().iter().all(|&g| {
            let gi = self.inverses[g];
            sub.members().iter().all(|&n| sub.contains(self.mul(self.mul(g, n), gi)))
        })
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup { members: (0..self.order()).collect() }
    }
}

/// A subgroup recorded as sorted element indices of an ambient group.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subgroup {
    members: Vec<usize>,
}

impl Subgroup {
    pub fn from_members(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        Subgroup { members }
    }

    pub fn from_mask(mask: &[bool]) -> Self {
        Subgroup { members: (0..mask.len()).filter(|&i| mask[i]).collect() }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup { members: self.members.iter().copied().filter(|&i| other.contains(i)).collect() }
    }
}

/// A permutation representation: one image table per group element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermAction {
    degree: usize,
    perms: Vec<Vec<usize>>,
}

impl PermAction {
    /// `perms[g][x]` is the image of point `x` under element `g`.
    pub fn new(degree: usize, perms: Vec<Vec<usize>>) -> Result<Self> {
        for p in &perms {
            let mut seen = vec![false; degree];
            if p.len() != degree {
                return Err(Error::Internal("permutation of wrong length".into()));
            }
            for &x in p {
                if x >= degree || std::mem::replace(&mut seen[x], true) {
                    return Err(Error::Internal("image table is not a permutation".into()));
                }
            }
        }
        Ok(PermAction { degree, perms })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn perm(&self, g: usize) -> &[usize] {
        &self.perms[g]
    }

    pub fn cycle_type(&self, g: usize) -> CycleType {
        CycleType::of_permutation(&self.perms[g])
    }

    pub fn is_identity(&self, g: usize) -> bool {
        self.perms[g].iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn kernel(&self) -> Vec<usize> {
        (0..self.perms.len()).filter(|&g| self.is_identity(g)).collect()
    }

    pub fn is_transitive(&self) -> bool {
        let mut reached = vec![false; self.degree];
        if self.degree == 0 {
            return true;
        }
        for p in &self.perms {
            reached[p[0]] = true;
        }
        reached.into_iter().all(|b| b)
    }

    pub fn stabilizer(&self, point: usize) -> Subgroup {
        Subgroup::from_members((0..self.perms.len()).filter(|&g| self.perms[g][point] == point).collect())
    }

    /// Checks `σ(xy) = σ(x)∘σ(y)` on the given pairs.
    pub fn homomorphism_holds<F: FieldElem>(
        &self,
        group: &GroupData<F>,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> bool {
        pairs.into_iter().all(|(x, y)| {
            let xy = &self.perms[group.mul(x, y)];
            let (px, py) = (&self.perms[x], &self.perms[y]);
            (0..self.degree).all(|pt| xy[pt] == px[py[pt]])
        })
    }
}

/// Cycle type per conjugacy class, and the reverse lookup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassCycleTable {
    pub forward: Vec<CycleType>,
    pub inverse: BTreeMap<CycleType, Vec<usize>>,
}

impl ClassCycleTable {
    pub fn classes_with(&self, t: &CycleType) -> &[usize] {
        self.inverse.get(t).map(Vec::as_slice).unwrap_or(&[])
    }
}

/// Cycle type of each class under `action`; errors if a class is not uniform.
pub fn class_cycletype_table<F: FieldElem>(action: &PermAction, group: &GroupData<F>) -> Result<ClassCycleTable> {
    let mut forward = Vec::with_capacity(group.classes().len());
    let mut inverse: BTreeMap<CycleType, Vec<usize>> = BTreeMap::new();
    for (ci, class) in group.classes().iter().enumerate() {
        let t = action.cycle_type(class.representative);
        if class.members.iter().any(|&m| action.cycle_type(m) != t) {
            return Err(Error::Internal(format!("cycle type not constant on class {ci}")));
        }
        inverse.entry(t.clone()).or_default().push(ci);
        forward.push(t);
    }
    Ok(ClassCycleTable { forward, inverse })
}

/// Action of `group` on `P¹` over the prime subfield by Möbius transformations.
///
/// Points `0..q` are `[x:1]` and point `q` is `[1:0]`.
pub fn p1_action<F: FieldElem>(group: &GroupData<F>) -> Result<PermAction> {
    let field = F::prime_subfield();
    let q = field.len();
    let point_index = |u: F, v: F| -> Result<usize> {
        if v.is_zero() {
            return Ok(q);
        }
        let t = u * v.inv().expect("nonzero");
        if !t.in_prime_subfield() {
            return Err(Error::Domain("element does not preserve the prime-field projective line".into()));
        }
        Ok(field.binary_search(&t).expect("prime subfield element"))
    };
    let mut perms = Vec::with_capacity(group.order());
    for m in group.elements() {
        let [a, b, c, d] = m.entries();
        let mut p = Vec::with_capacity(q + 1);
        for &x in &field {
            p.push(point_index(a * x + b, c * x + d)?);
        }
        p.push(point_index(a, c)?);
        perms.push(p);
    }
    PermAction::new(q + 1, perms)
}

/// Left translation on the left cosets `xN`, numbered by first appearance in
/// canonical element order. Errors if the action is not faithful.
pub fn coset_action<F: FieldElem>(group: &GroupData<F>, sub: &Subgroup) -> Result<PermAction> {
    let n = group.order();
    if sub.order() == 0 || !n.is_multiple_of(sub.order()) {
        return Err(Error::Domain("subgroup order does not divide group order".into()));
    }
    let mut coset_of = vec![usize::MAX; n];
    let mut count = 0;
    for x in 0..n {
        if coset_of[x] == usize::MAX {
            for &h in sub.members() {
                coset_of[group.mul(x, h)] = count;
            }
            count += 1;
        }
    }
    let mut reps = vec![usize::MAX; count];
    for x in (0..n).rev() {
        reps[coset_of[x]] = x;
    }
    let perms = (0..n).map(|g| reps.iter().map(|&r| coset_of[group.mul(g, r)]).collect()).collect();
    let action = PermAction::new(count, perms)?;
    let kernel = action.kernel();
    if kernel.len() != 1 {
        return Err(Error::Verification(format!("coset action has kernel of order {}", kernel.len())));
    }
    Ok(action)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{F3, F5};

    fn sl2_f5() -> GroupData<F5> {
        GroupData::build(&[Mat2::from_i64(1, 1, 0, 1), Mat2::from_i64(0, -1, 1, 0)]).unwrap()
    }

    #[test]
    fn orders_of_classical_groups() {
        let sl = sl2_f5();
        assert_eq!(sl.order(), 120);
        assert_eq!(sl.classes().len(), 9);
        assert_eq!(sl.center().len(), 2);
        let gl3 = GroupData::<F3>::build(&[
            Mat2::from_i64(1, 1, 0, 1),
            Mat2::from_i64(0, 1, 1, 0),
            Mat2::from_i64(2, 0, 0, 1),
        ])
        .unwrap();
        assert_eq!(gl3.order(), 48);
        assert_eq!(gl3.classes().len(), 8);
        let trivial = GroupData::<F5>::build(&[Mat2::identity()]).unwrap();
        assert_eq!(trivial.order(), 1);
        assert_eq!(trivial.classes().len(), 1);
    }

    #[test]
    fn singular_generator_rejected() {
        assert!(GroupData::<F5>::build(&[Mat2::from_i64(1, 0, 0, 0)]).is_err());
    }

    #[test]
    fn classes_brute_force_oracle() {
        // Two elements are conjugate iff some g conjugates one to the other.
        let sl = sl2_f5();
        for x in (0..sl.order()).step_by(7) {
            for y in (0..sl.order()).step_by(5) {
                let conj = (0..sl.order()).any(|g| sl.mul(sl.mul(g, x), sl.inverse(g)) == y);
                assert_eq!(conj, sl.class_of(x) == sl.class_of(y));
            }
        }
        let total: usize = sl.classes().iter().map(ConjClass::size).sum();
        assert_eq!(total, 120);
    }

    #[test]
    fn p1_action_of_sl2() {
        let sl = sl2_f5();
        let act = p1_action(&sl).unwrap();
        assert_eq!(act.degree(), 6);
        assert!(act.is_transitive());
        assert_eq!(act.kernel().len(), 2);
        let u = sl.index_of(&Mat2::from_i64(1, 1, 0, 1)).unwrap();
        assert_eq!(act.cycle_type(u).to_string(), "1 5");
        let n = sl.order();
        assert!(act.homomorphism_holds(&sl, (0..n).flat_map(|x| (0..n).map(move |y| (x, y)))));
    }

    #[test]
    fn coset_action_faithfulness() {
        let sl = sl2_f5();
        let u = sl.index_of(&Mat2::from_i64(1, 1, 0, 1)).unwrap();
        let sub = sl.generated_subgroup(&[u]);
        assert_eq!(sub.order(), 5);
        let act = coset_action(&sl, &sub).unwrap();
        assert_eq!(act.degree(), 24);
        let minus = sl.index_of(&Mat2::scalar(F5::new(4))).unwrap();
        let center = sl.generated_subgroup(&[minus]);
        assert!(coset_action(&sl, &center).is_err());
    }
}
