use num_complex::Complex64;
use quintic::arith::{F25Elem, FieldElem, SmallFp, F5};
use quintic::asai::*;
use quintic::groups::*;

const TOL: f64 = 1e-6;
const SEED: u64 = 20240601;

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

#[test]
fn cyclic_group_of_order_four() {
    let g = GroupData::<F5>::build(&[Mat2::scalar(F5::new(2))]).unwrap();
    let t = character_table(&g, SEED, TOL).unwrap();
    assert_eq!(t.len(), 4);
    assert!(t.degrees().iter().all(|&d| d == 1));
    let fourth_roots = [c(1.0), Complex64::new(0.0, 1.0), c(-1.0), Complex64::new(0.0, -1.0)];
    for chi in t.irreducibles() {
        for v in chi.values() {
            assert!(fourth_roots.iter().any(|r| (r - v).norm() < TOL), "{v}");
        }
    }
}

#[test]
fn symmetric_group_on_three_letters() {
    // GL2(F2) ≅ S3.
    let g = GroupData::<SmallFp<2>>::build(&[Mat2::from_i64(1, 1, 0, 1), Mat2::from_i64(0, 1, 1, 0)]).unwrap();
    assert_eq!(g.order(), 6);
    let t = character_table(&g, SEED, TOL).unwrap();
    assert_eq!(t.degrees(), &[1, 1, 2]);
    // Independent check: the regular character decomposes as Σ d·χ.
    let regular = ClassFunction::from_elements(&g, 0.0, |x| Ok(c(if x == g.identity() { 6.0 } else { 0.0 }))).unwrap();
    let mults = t.decompose(&regular).unwrap();
    for (m, &d) in mults.iter().zip(t.degrees()) {
        assert!((m - c(d as f64)).norm() < TOL);
    }
}

#[test]
fn tables_of_the_lifted_groups() {
    let sl = sl2_f5().unwrap();
    let t = character_table(&sl, SEED, TOL).unwrap();
    assert_eq!(t.degrees(), &[1, 2, 2, 3, 3, 4, 4, 5, 6]);
    let g = lifted_group(2).unwrap();
    let k = index2_kernels(&g).unwrap();
    let sub = g.subgroup_data(&k.sgn).unwrap();
    let ts = character_table(&sub, SEED, TOL).unwrap();
    assert_eq!(ts.of_degree(2).count(), 4);
    let tg = character_table(&g, SEED, TOL).unwrap();
    assert_eq!(tg.len(), g.classes().len());
    let sum: u64 = tg.degrees().iter().map(|d| d * d).sum();
    assert_eq!(sum, 480);
    assert!(tg.orthogonality_defect() < TOL);
}

#[test]
fn table_is_seed_independent_up_to_rounding() {
    let g = lifted_group(1).unwrap();
    let a = character_table(&g, 1, TOL).unwrap();
    let b = character_table(&g, 99, TOL).unwrap();
    assert_eq!(a.degrees(), b.degrees());
    for (x, y) in a.irreducibles().iter().zip(b.irreducibles()) {
        assert!(x.approx_eq(y, 1e-6));
    }
}

#[test]
fn inner_products() {
    let g = lifted_group(2).unwrap();
    let triv = ClassFunction::constant(&g, c(1.0));
    assert!((inner_product(&triv, &triv).unwrap() - c(1.0)).norm() < TOL);
    let theta = theta_std(&g).unwrap();
    assert!((inner_product(&theta, &theta).unwrap() - c(1.0)).norm() < TOL);
    // θ + 1 is the permutation character on five letters: one orbit.
    let perm = theta.add(&triv).unwrap();
    assert!((inner_product(&perm, &triv).unwrap() - c(1.0)).norm() < TOL);
    let other = ClassFunction::constant(&sl2_f5().unwrap(), c(1.0));
    assert!(inner_product(&triv, &other).is_err());
}

#[test]
fn theta_values() {
    let g = lifted_group(2).unwrap();
    let theta = theta_std(&g).unwrap();
    assert_eq!(value_at(&g, &theta, &MatF25::identity()).unwrap(), c(4.0));
    assert_eq!(value_at(&g, &theta, &w_matrix()).unwrap(), c(2.0));
    assert_eq!(value_at(&g, &theta, &MatF25::from_i64(1, 1, 0, 1)).unwrap(), c(-1.0));
}

#[test]
fn transfer_of_trivial_is_trivial() {
    let setup = AsaiSetup::new(2, SEED, TOL).unwrap();
    let triv = ClassFunction::constant(&setup.sub, c(1.0));
    let a = asai_transfer(&triv, &setup.sub, &setup.group, setup.g0(), TOL).unwrap();
    assert!(a.approx_eq(&ClassFunction::constant(&setup.group, c(1.0)), TOL));
    // g0 must lie outside the subgroup.
    let inside = setup.group.identity();
    assert!(asai_transfer(&triv, &setup.sub, &setup.group, inside, TOL).is_err());
}

#[test]
fn center_extended_character_examples() {
    let setup = AsaiSetup::new(2, SEED, TOL).unwrap();
    let g = &setup.group;
    let eta = &setup.etas()[0];
    let chi = setup.chi_for(eta, Section::Smallest).unwrap();
    assert!((value_at(g, &chi, &scalar(4)).unwrap() - c(1.0)).norm() < TOL);
    assert!((value_at(g, &chi, &scalar(2)).unwrap() - c(-1.0)).norm() < TOL);
    assert!((value_at(g, &chi, &w_matrix()).unwrap() - c(-1.0)).norm() < TOL);
    // α nontrivial on -I is rejected.
    let bad = |m: &MatF25| if *m == scalar(4) { c(-1.0) } else { c(1.0) };
    assert!(chi_from_lemma(&bad, PglCharacter::Trivial, g, Section::Smallest, TOL).is_err());
    // Trivial data gives the trivial character.
    let one = |_: &MatF25| c(1.0);
    let triv = chi_from_lemma(&one, PglCharacter::Trivial, g, Section::Largest, TOL).unwrap();
    assert!(triv.approx_eq(&ClassFunction::constant(g, c(1.0)), TOL));
}

#[test]
fn central_values_of_the_transfer() {
    let setup = AsaiSetup::new(2, SEED, TOL).unwrap();
    for eta in setup.etas() {
        let a = asai_transfer(&eta, &setup.sub, &setup.group, setup.g0(), TOL).unwrap();
        // 2I acts by ±i in a degree-2 irreducible, so the transfer is 4·(-1).
        assert!((value_at(&setup.group, &a, &scalar(2)).unwrap() - c(-4.0)).norm() < TOL);
        assert!((value_at(&setup.group, &a, &w_matrix()).unwrap() - c(-2.0)).norm() < TOL);
        assert!((value_at(&setup.group, &a, &scalar(4)).unwrap() - c(4.0)).norm() < TOL);
    }
}

#[test]
fn transfer_identities_for_both_levels() {
    for r in [1, 2] {
        let setup = AsaiSetup::new(r, SEED, TOL).unwrap();
        let rep = verify_prop_asai(&setup).unwrap();
        assert!(rep.passed(), "{rep}");
        let rep = verify_cor_asai(&setup).unwrap();
        assert!(rep.passed(), "{rep}");
        let rep = verify_hilbert_products(&setup).unwrap();
        assert!(rep.passed(), "{rep}");
    }
}

#[test]
fn hilbert_product_values() {
    assert_eq!(predicted_hilbert_product(S5Class::Identity, 1), 4);
    assert_eq!(predicted_hilbert_product(S5Class::Transposition, -1), -2);
    assert_eq!(predicted_hilbert_product(S5Class::FiveCycle, 1), -1);
    // Oracle: on each lift the det·sgn sign times the standard trace.
    let g = lifted_group(2).unwrap();
    for m in g.elements() {
        let class = s5_class_of(m).unwrap();
        let ds = QuadraticCharacter::DetSgn.eval(m).unwrap();
        let sgn = if projective_data(m).unwrap().in_psl { 1 } else { -1 };
        let det = if m.det() == F25Elem::ONE { 1 } else { -1 };
        assert_eq!(ds, sgn * det);
        assert_eq!(predicted_hilbert_product(class, ds), (sgn * det) as i64 * class.standard_trace());
    }
}

#[test]
fn n4_identity() {
    let rep = verify_n4_identity(SEED, TOL).unwrap();
    assert!(rep.passed(), "{rep}");
}
