use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::arith::{kronecker_i64, F25Elem, FieldElem};
use crate::error::{Error, Result};
use crate::polyfactor::CycleType;
use crate::report::VerifyReport;

use super::group::{class_cycletype_table, coset_action, p1_action, GroupData, PermAction, Subgroup};
use super::mat2::{char_poly_string, Mat2, MatF25, ZETA};
use super::s5::{projective_data, s5_class_of, S5Class};

pub type LiftedGroup = GroupData<F25Elem>;

fn f25(a: u8, b: u8) -> F25Elem {
    F25Elem::new(a, b)
}

pub fn sl2_generators() -> [MatF25; 2] {
    [Mat2::from_i64(1, 1, 0, 1), Mat2::from_i64(0, -1, 1, 0)]
}

/// `[[0, ζ], [-ζ⁻¹, 0]]`: determinant 1, square `-I`.
pub fn w_matrix() -> MatF25 {
    let zinv = ZETA.inv().expect("ζ invertible");
    Mat2::new(F25Elem::ZERO, ZETA, -zinv, F25Elem::ZERO)
}

/// `[[0, ζ], [ζ⁻¹, 0]]`: determinant `-1`.
pub fn det_sgn_generator() -> MatF25 {
    let zinv = ZETA.inv().expect("ζ invertible");
    Mat2::new(F25Elem::ZERO, ZETA, zinv, F25Elem::ZERO)
}

/// `[[0, 2ζ], [2ζ⁻¹, 0]]`: the inertia generator at the prime with order-4 inertia.
pub fn inertia_151() -> MatF25 {
    let two = f25(2, 0);
    let zinv = ZETA.inv().expect("ζ invertible");
    Mat2::new(F25Elem::ZERO, two * ZETA, two * zinv, F25Elem::ZERO)
}

pub fn scalar(v: u8) -> MatF25 {
    Mat2::scalar(f25(v, 0))
}

/// The group generated by `SL2(F5)`, `w` and, for `r = 2`, the scalar `2I`.
/// Orders are 240 (`r = 1`) and 480 (`r = 2`).
pub fn lifted_group(r: u32) -> Result<LiftedGroup> {
    let mut gens = sl2_generators().to_vec();
    gens.push(w_matrix());
    match r {
        1 => {}
        2 => gens.push(scalar(2)),
        _ => return Err(Error::Domain(format!("r must be 1 or 2, got {r}"))),
    }
    GroupData::build(&gens)
}

pub fn sl2_f5() -> Result<LiftedGroup> {
    GroupData::build(&sl2_generators())
}

/// S5 class of every conjugacy class.
pub fn class_labels(g: &LiftedGroup) -> Result<Vec<S5Class>> {
    g.classes()
        .iter()
        .map(|c| {
            let label = s5_class_of(&g.element(c.representative))?;
            for &m in &c.members {
                if s5_class_of(&g.element(m))? != label {
                    return Err(Error::Internal("S5 class not constant on a conjugacy class".into()));
                }
            }
            Ok(label)
        })
        .collect()
}

/// The stabilizer of `[1:0]`, its unipotent radical, and the two normal
/// order-10 subgroups with cyclic quotient of order 8.
#[derive(Clone, Debug)]
pub struct SubgroupChain {
    pub h: Subgroup,
    pub u: Subgroup,
    pub n1: Subgroup,
    pub n2: Subgroup,
}

/// Order of `x` modulo the normal subgroup `n`.
fn order_mod<F: FieldElem>(g: &GroupData<F>, x: usize, n: &Subgroup) -> usize {
    let mut y = x;
    let mut k = 1;
    while !n.contains(y) {
        y = g.mul(y, x);
        k += 1;
    }
    k
}

/// Coset representatives of `n` inside `ambient` (first member of each coset).
fn coset_reps<F: FieldElem>(g: &GroupData<F>, ambient: &Subgroup, n: &Subgroup) -> Vec<usize> {
    let mut done = vec![false; g.order()];
    let mut reps = Vec::new();
    for &x in ambient.members() {
        if !done[x] {
            reps.push(x);
            for &m in n.members() {
                done[g.mul(x, m)] = true;
            }
        }
    }
    reps
}

/// Element-order multiset of `ambient / n` and whether it is abelian.
pub fn quotient_fingerprint<F: FieldElem>(
    g: &GroupData<F>,
    ambient: &Subgroup,
    n: &Subgroup,
) -> (BTreeMap<usize, usize>, bool) {
    let reps = coset_reps(g, ambient, n);
    let mut orders = BTreeMap::new();
    for &x in &reps {
        *orders.entry(order_mod(g, x, n)).or_insert(0) += 1;
    }
    let abelian = reps.iter().all(|&a| {
        reps.iter().all(|&b| {
            let comm = g.mul(g.mul(a, b), g.mul(g.inverse(a), g.inverse(b)));
            n.contains(comm)
        })
    });
    (orders, abelian)
}

pub fn find_h80(g: &LiftedGroup, action: &PermAction) -> Result<Subgroup> {
    let infinity = action.degree() - 1;
    let h = action.stabilizer(infinity);
    if h.order() * action.degree() != g.order() {
        return Err(Error::Internal(format!("point stabilizer has order {}", h.order())));
    }
    // Every point stabilizer is conjugate to h.
    for pt in 0..action.degree() {
        let stab = action.stabilizer(pt);
        let mover = (0..g.order())
            .find(|&x| action.perm(x)[infinity] == pt)
            .ok_or_else(|| Error::Internal("action is not transitive".into()))?;
        let conj =
            Subgroup::from_members(h.members().iter().map(|&y| g.mul(g.mul(mover, y), g.inverse(mover))).collect());
        if conj != stab {
            return Err(Error::Internal(format!("stabilizer of point {pt} is not conjugate")));
        }
    }
    Ok(h)
}

pub fn unipotent_subgroup(g: &LiftedGroup, h: &Subgroup) -> Result<Subgroup> {
    let mut members: Vec<usize> = h.members().iter().copied().filter(|&x| g.element_order(x) == 5).collect();
    members.push(g.identity());
    let u = Subgroup::from_members(members);
    if u.order() != 5 || !g.is_subgroup(u.members()) || !g.normalizes(h, &u) {
        return Err(Error::Internal("no unique normal subgroup of order 5".into()));
    }
    Ok(u)
}

/// Normal subgroups `N` of `h` with `U ⊂ N`, `|N| = 10` and `h/N` cyclic of order 8.
pub fn normal_order10_subgroups(g: &LiftedGroup, h: &Subgroup, u: &Subgroup) -> Result<(Subgroup, Subgroup)> {
    let mut found = Vec::new();
    for x in coset_reps(g, h, u) {
        if order_mod(g, x, u) != 2 {
            continue;
        }
        let mut members = u.members().to_vec();
        members.extend(u.members().iter().map(|&m| g.mul(x, m)));
        let n = Subgroup::from_members(members);
        if !g.is_subgroup(n.members()) || !g.normalizes(h, &n) {
            continue;
        }
        let (orders, _) = quotient_fingerprint(g, h, &n);
        if orders.get(&8) == Some(&4) {
            found.push(n);
        }
    }
    found.sort();
    if found.len() != 2 {
        return Err(Error::Internal(format!("found {} normal order-10 subgroups", found.len())));
    }
    let center = Subgroup::from_members(g.center());
    for n in &found {
        let sub = g.subgroup_data(n)?;
        let involutions = sub.order_statistics().get(&2).copied().unwrap_or(0);
        if involutions != 5 || sub.center().len() != 1 || n.intersection(&center).order() != 1 {
            return Err(Error::Internal("order-10 subgroup is not dihedral".into()));
        }
    }
    let n2 = found.pop().expect("two");
    let n1 = found.pop().expect("two");
    Ok((n1, n2))
}

pub fn subgroup_chain(g: &LiftedGroup, p1: &PermAction) -> Result<SubgroupChain> {
    let h = find_h80(g, p1)?;
    let u = unipotent_subgroup(g, &h)?;
    let (n1, n2) = normal_order10_subgroups(g, &h, &u)?;
    Ok(SubgroupChain { h, u, n1, n2 })
}

/// Which of the three index-2 kernels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum QuadraticCharacter {
    Sgn,
    Det,
    DetSgn,
}

impl QuadraticCharacter {
    pub const ALL: [QuadraticCharacter; 3] =
        [QuadraticCharacter::Sgn, QuadraticCharacter::Det, QuadraticCharacter::DetSgn];

    pub fn label(self) -> &'static str {
        match self {
            QuadraticCharacter::Sgn => "sgn",
            QuadraticCharacter::Det => "det",
            QuadraticCharacter::DetSgn => "det*sgn",
        }
    }

    /// Value on a matrix of the lifted group; `det` is read as `±1`.
    pub fn eval(self, m: &MatF25) -> Result<i8> {
        let sgn = if projective_data(m)?.in_psl { 1 } else { -1 };
        let det = det_sign(m.det())?;
        Ok(match self {
            QuadraticCharacter::Sgn => sgn,
            QuadraticCharacter::Det => det,
            QuadraticCharacter::DetSgn => sgn * det,
        })
    }

    /// Discriminant `D` with the character equal to `(D/p)` at unramified `p`.
    pub fn discriminant(self) -> i64 {
        match self {
            QuadraticCharacter::Sgn => 19 * 151,
            QuadraticCharacter::Det => -19,
            QuadraticCharacter::DetSgn => -151,
        }
    }

    /// `(D/p)` for the discriminant `D` of this character.
    pub fn kronecker(self, p: u64) -> i8 {
        kronecker_i64(self.discriminant(), p as i64)
    }
}

/// Determinants in the lifted group are `±1`.
pub fn det_sign(det: F25Elem) -> Result<i8> {
    if det == F25Elem::ONE {
        Ok(1)
    } else if det == -F25Elem::ONE {
        Ok(-1)
    } else {
        Err(Error::Domain(format!("determinant {det} is not ±1")))
    }
}

#[derive(Clone, Debug)]
pub struct Index2Kernels {
    pub sgn: Subgroup,
    pub det: Subgroup,
    pub det_sgn: Subgroup,
}

impl Index2Kernels {
    pub fn get(&self, c: QuadraticCharacter) -> &Subgroup {
        match c {
            QuadraticCharacter::Sgn => &self.sgn,
            QuadraticCharacter::Det => &self.det,
            QuadraticCharacter::DetSgn => &self.det_sgn,
        }
    }
}

/// All surjections to `C2`, found by assigning a bit to each generator and
/// propagating along the Cayley graph.
pub fn surjections_to_c2<F: FieldElem>(g: &GroupData<F>) -> Vec<Vec<u8>> {
    let gens: Vec<usize> = g.generators().iter().filter_map(|m| g.index_of(m)).collect();
    let mut out = Vec::new();
    for bits in 1u32..(1 << gens.len()) {
        let mut label = vec![u8::MAX; g.order()];
        let id = g.identity();
        label[id] = 0;
        let mut queue = VecDeque::from([id]);
        let mut ok = true;
        'bfs: while let Some(x) = queue.pop_front() {
            for (k, &s) in gens.iter().enumerate() {
                let y = g.mul(x, s);
                let want = label[x] ^ ((bits >> k) & 1) as u8;
                if label[y] == u8::MAX {
                    label[y] = want;
                    queue.push_back(y);
                } else if label[y] != want {
                    ok = false;
                    break 'bfs;
                }
            }
        }
        if ok && !out.contains(&label) {
            out.push(label);
        }
    }
    out
}

pub fn index2_kernels(g: &LiftedGroup) -> Result<Index2Kernels> {
    let homs = surjections_to_c2(g);
    if homs.len() != 3 {
        return Err(Error::Verification(format!("{} surjections to C2, expected 3", homs.len())));
    }
    let kernels: Vec<Subgroup> =
        homs.iter().map(|lab| Subgroup::from_members((0..lab.len()).filter(|&i| lab[i] == 0).collect())).collect();
    let find = |c: QuadraticCharacter| -> Result<Subgroup> {
        let expected = Subgroup::from_members(
            (0..g.order()).filter(|&i| c.eval(&g.element(i)).map(|v| v == 1).unwrap_or(false)).collect(),
        );
        kernels
            .iter()
            .find(|k| **k == expected)
            .cloned()
            .ok_or_else(|| Error::Verification(format!("no kernel matches {}", c.label())))
    };
    Ok(Index2Kernels {
        sgn: find(QuadraticCharacter::Sgn)?,
        det: find(QuadraticCharacter::Det)?,
        det_sgn: find(QuadraticCharacter::DetSgn)?,
    })
}

/// A trace/determinant pair, ordered by encodings.
pub type TrDet = (F25Elem, F25Elem);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table1Row {
    pub class: S5Class,
    pub standard_trace: i64,
    pub pairs: BTreeSet<TrDet>,
    pub sgn: i8,
}

/// Trace/determinant pairs of all lifts of each `S5` class.
pub fn table1(g: &LiftedGroup) -> Result<Vec<Table1Row>> {
    let mut rows: BTreeMap<S5Class, (BTreeSet<TrDet>, BTreeSet<i8>)> = BTreeMap::new();
    for m in g.elements() {
        let class = s5_class_of(m)?;
        let sgn = if projective_data(m)?.in_psl { 1 } else { -1 };
        let e = rows.entry(class).or_default();
        e.0.insert((m.trace(), m.det()));
        e.1.insert(sgn);
    }
    S5Class::ALL
        .into_iter()
        .map(|class| {
            let (pairs, sgns) = rows.remove(&class).ok_or_else(|| Error::Internal(format!("no lifts of {class}")))?;
            if sgns.len() != 1 {
                return Err(Error::Internal(format!("sgn not constant on lifts of {class}")));
            }
            Ok(Table1Row { class, standard_trace: class.standard_trace(), pairs, sgn: *sgns.first().expect("one") })
        })
        .collect()
}

/// The published table, entered verbatim.
pub fn expected_table1() -> Vec<Table1Row> {
    let z = |k: u8| f25(0, k);
    let n = |a: u8| f25(a, 0);
    let row = |class, t, pairs: &[TrDet], sgn| Table1Row {
        class,
        standard_trace: t,
        pairs: pairs.iter().copied().collect(),
        sgn,
    };
    let scalar_pairs = [(n(1), n(4)), (n(2), n(1)), (n(3), n(1)), (n(4), n(4))];
    vec![
        row(S5Class::Identity, 4, &scalar_pairs, 1),
        row(S5Class::FiveCycle, -1, &scalar_pairs, 1),
        row(S5Class::DoubleTransposition, 0, &[(n(0), n(1)), (n(0), n(4))], 1),
        row(S5Class::Transposition, 2, &[(n(0), n(1)), (n(0), n(4))], -1),
        row(S5Class::ThreeCycle, 1, &[(n(1), n(1)), (n(2), n(4)), (n(3), n(4)), (n(4), n(1))], 1),
        row(S5Class::SixElement, -1, &[(z(1), n(4)), (z(2), n(1)), (-z(1), n(4)), (-z(2), n(1))], -1),
        row(S5Class::FourCycle, 0, &[(z(1), n(1)), (z(2), n(4)), (-z(1), n(1)), (-z(2), n(4))], -1),
    ]
}

pub fn format_pairs(pairs: &BTreeSet<TrDet>) -> String {
    let items: Vec<String> = pairs.iter().map(|(t, d)| format!("({t},{d})")).collect();
    format!("{{{}}}", items.join(","))
}

pub fn verify_table1(g: &LiftedGroup) -> Result<VerifyReport> {
    let mut rep = VerifyReport::new("table1", "trace/determinant pairs of all lifts of each S5 class");
    let computed = table1(g)?;
    for (c, e) in computed.iter().zip(expected_table1()) {
        let subject = c.class.label();
        rep.check_eq("table1.standard_trace", subject, c.standard_trace, e.standard_trace);
        rep.check("table1.pairs", subject, format_pairs(&c.pairs), format_pairs(&e.pairs), c.pairs == e.pairs);
        rep.check_eq("table1.sgn", subject, c.sgn, e.sgn);
    }
    Ok(rep)
}

/// Exact checks on the index-2 kernels and their named generators.
pub fn verify_table2(g: &LiftedGroup) -> Result<VerifyReport> {
    let mut rep = VerifyReport::new("table2", "the three index-2 normal subgroups and their generators");
    let homs = surjections_to_c2(g);
    rep.check_eq("table2.surjection_count", "G~", homs.len(), 3);
    let k = index2_kernels(g)?;
    let named = [
        (QuadraticCharacter::Sgn, scalar(2), 4usize),
        (QuadraticCharacter::Det, w_matrix(), 2),
        (QuadraticCharacter::DetSgn, det_sgn_generator(), 2),
    ];
    for (c, extra, center) in named {
        let ker = k.get(c);
        let subject = format!("ker {}", c.label());
        rep.check_eq("table2.order", &subject, ker.order(), 240);
        let idx = g.index_of(&extra).ok_or_else(|| Error::Internal(format!("{extra} not in group")))?;
        rep.check("table2.contains", &subject, extra, "member", ker.contains(idx));
        let mut gens: Vec<usize> = sl2_generators().iter().filter_map(|m| g.index_of(m)).collect();
        gens.push(idx);
        let generated = g.generated_subgroup(&gens);
        rep.check("table2.generated", &subject, generated.order(), "equal to kernel", generated == *ker);
        let sub = g.subgroup_data(ker)?;
        rep.check_eq("table2.center_order", &subject, sub.center().len(), center);
    }
    // CSU2(F5) has a single involution; C2.S5 has more.
    let inv = |c| -> Result<usize> { Ok(g.subgroup_data(k.get(c))?.order_statistics().get(&2).copied().unwrap_or(0)) };
    let det_inv = inv(QuadraticCharacter::Det)?;
    let ds_inv = inv(QuadraticCharacter::DetSgn)?;
    rep.check_eq("table2.involutions", "ker det", det_inv, 1);
    rep.check("table2.involutions", "ker det*sgn", ds_inv, "> 1", ds_inv > 1);
    Ok(rep)
}

/// Inertia matrices and the conductor they imply.
pub fn verify_inertia_matrices(g: &LiftedGroup) -> Result<VerifyReport> {
    let mut rep = VerifyReport::new("inertia", "inertia generators at 19 and 151 and the conductor");
    let m = inertia_151();
    let subject = m.to_string();
    rep.check("inertia151.member", &subject, "-", "in G~", g.index_of(&m).is_some());
    rep.check_eq("inertia151.order", &subject, m.order().unwrap_or(0), 4);
    rep.check_eq("inertia151.square", &subject, m * m, scalar(4));
    rep.check_eq("inertia151.det", &subject, m.det(), F25Elem::ONE);
    rep.check_eq("inertia151.trace", &subject, m.trace(), F25Elem::ZERO);
    rep.check_eq("inertia151.charpoly", &subject, char_poly_string(m.trace(), m.det()), "X^2+1".into());
    rep.check_eq("inertia151.fixed_lines", &subject, m.fixed_space_dim(), 0);
    rep.check_eq("inertia151.s5_class", &subject, s5_class_of(&m)?, S5Class::Transposition);

    let mut polys = BTreeSet::new();
    let mut line_fixing_involution = None;
    for x in g.elements() {
        if s5_class_of(x)? == S5Class::Transposition {
            polys.insert(char_poly_string(x.trace(), x.det()));
            if line_fixing_involution.is_none() && x.order() == Some(2) && x.fixed_space_dim() == 1 {
                line_fixing_involution = Some(*x);
            }
        }
    }
    let polys: Vec<String> = polys.into_iter().collect();
    rep.check_eq("transposition_lifts.charpolys", "(1,4)", polys.join(","), "X^2+1,X^2-1".into());
    let m19 = line_fixing_involution;
    rep.check(
        "inertia19.order2_fixing_line",
        "(1,4)",
        m19.map(|x| x.to_string()).unwrap_or_else(|| "none".into()),
        "exists",
        m19.is_some(),
    );
    let codim19 = m19.map(|x| 2 - x.fixed_space_dim() as u32).unwrap_or(0);
    let codim151 = 2 - m.fixed_space_dim() as u32;
    let conductor = 19u64.pow(codim19) * 151u64.pow(codim151);
    rep.check_eq("conductor.rho", "19^a 151^b", conductor, 433_219);
    // θ5 restricted to a transposition fixes a 3-dimensional space in a 4-dimensional one.
    let theta_codim = (4 - (S5Class::Transposition.standard_trace() + 4) / 2) as u32;
    rep.check_eq("conductor.theta5", "19^a 151^b", 19u64.pow(theta_codim) * 151u64.pow(theta_codim), 2869);

    let w = w_matrix();
    rep.info(
        "w.order",
        w.to_string(),
        format!(
            "matrix order {}, projective order {} (described as order 2)",
            w.order().unwrap_or(0),
            w.projective_order().unwrap_or(0)
        ),
    );
    Ok(rep)
}

/// Structural checks on the group, the 6-point action and the subgroup chain.
pub fn verify_structure(g: &LiftedGroup) -> Result<VerifyReport> {
    let mut rep = VerifyReport::new("structure", "the lifted group, its point stabilizer and 48-point actions");
    rep.check_eq("group.order", "G~", g.order(), 480);
    let mut center: Vec<String> = g.center().iter().map(|&i| g.element(i).to_string()).collect();
    center.sort();
    let mut expected_center: Vec<String> = [1, 2, 3, 4].iter().map(|&v| scalar(v).to_string()).collect();
    expected_center.sort();
    rep.check_eq("group.center", "G~", center.join(" "), expected_center.join(" "));
    let p1 = p1_action(g)?;
    let id = g.identity();
    rep.check_eq("p1.kernel_order", "G~", p1.kernel().len(), 4);
    rep.check("p1.transitive", "G~", p1.is_transitive(), true, p1.is_transitive());
    rep.check_eq("p1.identity", "I", p1.cycle_type(id).to_string(), "1^6".into());

    let labels = class_labels(g)?;
    let six = class_cycletype_table(&p1, g)?;
    let mut dictionary: BTreeMap<S5Class, BTreeSet<CycleType>> = BTreeMap::new();
    for (ci, label) in labels.iter().enumerate() {
        dictionary.entry(*label).or_default().insert(six.forward[ci].clone());
    }
    let expected_six = |c: S5Class| -> &'static str {
        match c {
            S5Class::Identity => "1^6",
            S5Class::FiveCycle => "1 5",
            S5Class::DoubleTransposition => "1^2 2^2",
            S5Class::Transposition => "2^3",
            S5Class::ThreeCycle => "3^2",
            S5Class::SixElement => "6",
            S5Class::FourCycle => "1^2 4",
        }
    };
    for c in S5Class::ALL {
        let got: Vec<String> = dictionary.get(&c).into_iter().flatten().map(|t| t.to_string()).collect();
        rep.check_eq("p1.cycle_type", c.label(), got.join("|"), expected_six(c).into());
    }

    let chain = subgroup_chain(g, &p1)?;
    rep.check_eq("h.order", "H", chain.h.order(), 80);
    rep.check_eq("u.order", "U", chain.u.order(), 5);
    let mut tables = Vec::new();
    let (quot, abelian) = quotient_fingerprint(g, &chain.h, &chain.u);
    let quot_str = format!("{quot:?} abelian={abelian}");
    let c8c2 = BTreeMap::from([(1, 1), (2, 3), (4, 4), (8, 8)]);
    rep.check("h_mod_u.fingerprint", "H/U", &quot_str, "C8 x C2", quot == c8c2 && abelian);
    for (name, n) in [("N1", &chain.n1), ("N2", &chain.n2)] {
        rep.check_eq("n.order", name, n.order(), 10);
        rep.check("n.contains_u", name, "-", "U ⊂ N", chain.u.members().iter().all(|&x| n.contains(x)));
        let minus = g.index_of(&scalar(4)).expect("-I");
        rep.check("n.avoids_minus_identity", name, "-", "-I ∉ N", !n.contains(minus));
        let act = coset_action(g, n)?;
        rep.check_eq("n.coset_degree", name, act.degree(), 48);
        rep.check("n.faithful", name, act.kernel().len(), 1, act.kernel().len() == 1);
        rep.check("n.transitive", name, "-", "transitive", act.is_transitive());
        let t2 = act.cycle_type(g.index_of(&scalar(2)).expect("2I")).to_string();
        rep.check_eq("n.cycle_type_2I", name, t2, "4^12".into());
        let tm = act.cycle_type(minus).to_string();
        rep.check_eq("n.cycle_type_minus_I", name, tm, "2^24".into());
        let table = class_cycletype_table(&act, g)?;
        let inverse_shared = (0..g.classes().len()).all(|c| table.forward[c] == table.forward[g.inverse_class(c)]);
        rep.check("n.inverse_classes_share_type", name, inverse_shared, true, inverse_shared);
        let others = collisions_outside_inverse_pairs(g, &table.inverse);
        rep.info(
            "n.type_collisions",
            name,
            format!(
                "{} classes, {} cycle types, {} types shared beyond inverse pairs",
                g.classes().len(),
                table.inverse.len(),
                others.len()
            ),
        );
        tables.push(table.forward);
    }
    rep.info("n.tables_agree", "N1,N2", tables[0] == tables[1]);
    Ok(rep)
}

/// Classes sharing a cycle type that are not a class together with its inverse class.
pub fn collisions_outside_inverse_pairs<F: FieldElem>(
    g: &GroupData<F>,
    inverse: &BTreeMap<CycleType, Vec<usize>>,
) -> Vec<(CycleType, Vec<usize>)> {
    inverse
        .iter()
        .filter(|(_, cls)| cls.len() > 1)
        .filter(|(_, cls)| !(cls.len() == 2 && g.inverse_class(cls[0]) == cls[1]))
        .map(|(t, cls)| (t.clone(), cls.clone()))
        .collect()
}
