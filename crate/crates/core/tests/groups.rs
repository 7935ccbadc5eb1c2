use std::collections::BTreeSet;

use quintic::arith::{F25Elem, FieldElem};
use quintic::groups::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn g480() -> LiftedGroup {
    lifted_group(2).unwrap()
}

#[test]
fn group_orders() {
    assert_eq!(sl2_f5().unwrap().order(), 120);
    assert_eq!(sl2_f5().unwrap().classes().len(), 9);
    assert_eq!(lifted_group(1).unwrap().order(), 240);
    let g = g480();
    assert_eq!(g.order(), 480);
    assert!(lifted_group(3).is_err());
}

#[test]
fn class_partition_is_deterministic() {
    let a = g480();
    let b = g480();
    assert_eq!(a.classes(), b.classes());
    assert_eq!(table1(&a).unwrap(), table1(&b).unwrap());
}

#[test]
fn center_and_quotient() {
    let g = g480();
    let center: BTreeSet<MatF25> = g.center().iter().map(|&i| g.element(i)).collect();
    let expected: BTreeSet<MatF25> = (1..5).map(scalar).collect();
    assert_eq!(center, expected);
    // Modulo scalars the images form PGL2(F5), of order 120.
    let images: BTreeSet<Vec<usize>> = {
        let act = p1_action(&g).unwrap();
        (0..g.order()).map(|i| act.perm(i).to_vec()).collect()
    };
    assert_eq!(images.len(), 120);
}

#[test]
fn s5_labels_constant_on_classes_and_cover_s5() {
    let g = g480();
    let labels = class_labels(&g).unwrap();
    let mut counts = std::collections::BTreeMap::new();
    for (ci, c) in g.classes().iter().enumerate() {
        *counts.entry(labels[ci]).or_insert(0usize) += c.size();
    }
    for c in S5Class::ALL {
        // Each S5 element has four lifts.
        assert_eq!(counts[&c], 4 * c.size(), "{c}");
    }
}

#[test]
fn p1_action_examples_and_homomorphism() {
    let g = g480();
    let act = p1_action(&g).unwrap();
    let u = g.index_of(&MatF25::from_i64(1, 1, 0, 1)).unwrap();
    let w = g.index_of(&w_matrix()).unwrap();
    assert_eq!(act.cycle_type(g.identity()).to_string(), "1^6");
    assert_eq!(act.cycle_type(u).to_string(), "1 5");
    assert_eq!(act.cycle_type(w).to_string(), "2^3");
    let gens: Vec<usize> = g.generators().iter().map(|m| g.index_of(m).unwrap()).collect();
    let pairs: Vec<(usize, usize)> = gens.iter().flat_map(|&a| gens.iter().map(move |&b| (a, b))).collect();
    assert!(act.homomorphism_holds(&g, pairs));
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let random: Vec<_> = (0..1000).map(|_| (rng.random_range(0..480), rng.random_range(0..480))).collect();
    assert!(act.homomorphism_holds(&g, random));
}

#[test]
fn six_point_dictionary_is_bijective() {
    let g = g480();
    let act = p1_action(&g).unwrap();
    let labels = class_labels(&g).unwrap();
    let table = class_cycletype_table(&act, &g).unwrap();
    let mut pairs = BTreeSet::new();
    for (ci, l) in labels.iter().enumerate() {
        pairs.insert((*l, table.forward[ci].clone()));
    }
    assert_eq!(pairs.len(), 7);
    let types: BTreeSet<_> = pairs.iter().map(|(_, t)| t.clone()).collect();
    assert_eq!(types.len(), 7);
    let find = |c: S5Class| pairs.iter().find(|(l, _)| *l == c).unwrap().1.to_string();
    assert_eq!(find(S5Class::SixElement), "6");
    assert_eq!(find(S5Class::DoubleTransposition), "1^2 2^2");
}

#[test]
fn subgroup_chain_and_coset_actions() {
    let g = g480();
    let p1 = p1_action(&g).unwrap();
    let chain = subgroup_chain(&g, &p1).unwrap();
    assert_eq!(chain.h.order(), 80);
    assert_eq!(chain.n1.order(), 10);
    assert_eq!(chain.n2.order(), 10);
    assert_ne!(chain.n1, chain.n2);
    let minus = g.index_of(&scalar(4)).unwrap();
    let two = g.index_of(&scalar(2)).unwrap();
    let three = g.index_of(&scalar(3)).unwrap();
    let mut tables = Vec::new();
    for n in [&chain.n1, &chain.n2] {
        assert!(chain.u.members().iter().all(|&x| n.contains(x)));
        assert!(!n.contains(minus));
        let act = coset_action(&g, n).unwrap();
        assert_eq!(act.degree(), 48);
        assert_eq!(act.cycle_type(g.identity()).to_string(), "1^48");
        assert_eq!(act.cycle_type(two).to_string(), "4^12");
        assert_eq!(act.cycle_type(minus).to_string(), "2^24");
        let table = class_cycletype_table(&act, &g).unwrap();
        let shared = table.classes_with(&act.cycle_type(two));
        assert!(shared.contains(&g.class_of(two)) && shared.contains(&g.class_of(three)));
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let random: Vec<_> = (0..1000).map(|_| (rng.random_range(0..480), rng.random_range(0..480))).collect();
        assert!(act.homomorphism_holds(&g, random));
        for c in 0..g.classes().len() {
            assert_eq!(table.forward[c], table.forward[g.inverse_class(c)]);
        }
        // Frozen by enumeration: 24 classes collapse to 11 cycle types, and
        // collisions go well beyond inverse pairs.
        assert_eq!(g.classes().len(), 24);
        assert_eq!(table.inverse.len(), 11);
        let labels = class_labels(&g).unwrap();
        let on_minus: BTreeSet<S5Class> =
            table.classes_with(&act.cycle_type(minus)).iter().map(|&c| labels[c]).collect();
        assert_eq!(on_minus, [S5Class::Identity, S5Class::Transposition].into_iter().collect());
        assert_eq!(collisions_outside_inverse_pairs(&g, &table.inverse).len(), 5);
        tables.push(table.forward);
    }
    assert_eq!(tables[0], tables[1]);
}

#[test]
fn table1_matches_published_rows() {
    let g = g480();
    let rep = verify_table1(&g).unwrap();
    assert!(rep.passed(), "{rep}");
    let rows = table1(&g).unwrap();
    assert_eq!(rows[0].pairs, rows[1].pairs);
    let z = F25Elem::ZETA;
    let four = F25Elem::new(4, 0);
    let t = rows.iter().find(|r| r.class == S5Class::Transposition).unwrap();
    assert_eq!(t.pairs, [(F25Elem::ZERO, F25Elem::ONE), (F25Elem::ZERO, four)].into_iter().collect());
    assert_eq!(t.sgn, -1);
    let f = rows.iter().find(|r| r.class == S5Class::FourCycle).unwrap();
    assert!(f.pairs.contains(&(z, F25Elem::ONE)) && f.pairs.contains(&(-(z + z), four)));
}

#[test]
fn index_two_kernels() {
    let g = g480();
    let k = index2_kernels(&g).unwrap();
    assert_eq!(k.sgn.order(), 240);
    assert!(k.sgn.contains(g.index_of(&scalar(2)).unwrap()));
    assert!(k.det.contains(g.index_of(&w_matrix()).unwrap()));
    assert!(k.det_sgn.contains(g.index_of(&det_sgn_generator()).unwrap()));
    let rep = verify_table2(&g).unwrap();
    assert!(rep.passed(), "{rep}");
    // ker sgn is the set of matrices with entries in F5.
    for i in 0..g.order() {
        let rational = g.element(i).entries().iter().all(|e| e.in_prime_subfield());
        assert_eq!(rational, k.sgn.contains(i));
    }
}

#[test]
fn inertia_and_structure_reports() {
    let g = g480();
    let rep = verify_inertia_matrices(&g).unwrap();
    assert!(rep.passed(), "{rep}");
    let m = inertia_151();
    assert_eq!(m * m, scalar(4));
    assert_eq!(m.det(), F25Elem::ONE);
    let rep = verify_structure(&g).unwrap();
    assert!(rep.passed(), "{rep}");
}

#[test]
fn r1_group_has_one_surjection() {
    // ⟨SL2(F5), w⟩ = CSU2(F5): its only index-2 subgroup is SL2(F5).
    let g = lifted_group(1).unwrap();
    assert_eq!(surjections_to_c2(&g).len(), 1);
    assert_eq!(g.center().len(), 2);
}
