use proptest::prelude::*;
use quintic::arith::Integer;
use quintic::modforms::*;
use quintic::polyfactor::{count_roots_mod_p, reduce_mod_p, PolyZ};

/// Expands `∏_{d,k} (1 - q^{dk})^e` by dense multiplication with i128.
fn naive_product(factors: &[(usize, u32)], n: usize) -> Vec<i128> {
    let mut acc = vec![0i128; n + 1];
    acc[0] = 1;
    for &(d, e) in factors {
        for k in 1..=n {
            if d * k > n {
                break;
            }
            for _ in 0..e {
                for i in (d * k..=n).rev() {
                    acc[i] -= acc[i - d * k];
                }
            }
        }
    }
    acc
}

fn ints(v: &[i128]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn strs(s: &QSeries) -> Vec<String> {
    s.coeffs().iter().map(|x| x.to_string()).collect()
}

fn brute_theta(a: i64, b: i64, c: i64, n: usize, bound: i64) -> Vec<u64> {
    let mut out = vec![0u64; n + 1];
    for x in -bound..=bound {
        for y in -bound..=bound {
            let v = a * x * x + b * x * y + c * y * y;
            if (0..=n as i64).contains(&v) {
                out[v as usize] += 1;
            }
        }
    }
    out
}

#[test]
fn pentagonal_expansion_matches_product() {
    assert_eq!(strs(&euler_product(300)), ints(&naive_product(&[(1, 1)], 300)));
}

#[test]
fn delta_leading_coefficients() {
    let d = delta(3).unwrap();
    assert_eq!(strs(&d), ["0", "1", "-24", "252"]);
    let d = delta(60).unwrap();
    let mut expected = vec![0i128];
    expected.extend(naive_product(&[(1, 24)], 59));
    assert_eq!(strs(&d), ints(&expected));
}

#[test]
fn level23_form_small_coefficients() {
    let f = level23_form(10).unwrap();
    // q(1 - q - q^2 + q^5 + q^7 - ...), the second factor starting at q^23.
    assert_eq!(strs(&f), ["0", "1", "-1", "-1", "0", "0", "1", "0", "1", "0", "0"]);
    let f = level23_form(120).unwrap();
    let mut expected = vec![0i128];
    expected.extend(naive_product(&[(1, 1), (23, 1)], 119));
    assert_eq!(strs(&f), ints(&expected));
}

#[test]
fn eta_product_domain_errors() {
    assert!(eta_product(&[(1, 1), (23, 1)], 0).is_err());
    assert!(eta_product(&[(1, 1)], 10).is_err());
    assert!(eta_product(&[(1, -24)], 10).is_err());
}

#[test]
fn negative_exponents_invert() {
    let a = eta_product(&[(1, 48), (1, -24)], 40).unwrap();
    assert_eq!(a, delta(40).unwrap());
    let e = euler_product(50);
    let prod = e.mul(&e.inverse().unwrap());
    assert_eq!(prod, QSeries::one(50));
    // Partition numbers.
    let p = e.inverse().unwrap();
    assert_eq!(p.coeffs()[10].to_string(), "42");
    assert_eq!(p.coeffs()[50].to_string(), "204226");
}

#[test]
fn theta_examples() {
    let t = theta_binary_qf(1, 1, 6, 30).unwrap();
    assert_eq!(t.coeffs()[0].to_string(), "1");
    assert_eq!(t.coeffs()[1].to_string(), "2");
    let t2 = theta_binary_qf(2, 1, 3, 30).unwrap();
    assert_eq!(t2.coeffs()[0].to_string(), "1");
    assert_eq!(t2.coeffs()[1].to_string(), "0");
    assert_eq!(t2.coeffs()[2].to_string(), "2");
    let want: Vec<String> = brute_theta(2, 1, 3, 30, 40).iter().map(|x| x.to_string()).collect();
    assert_eq!(strs(&t2), want);
    // 2x² + 6xy + 3y² has discriminant 12: indefinite, no theta series.
    assert!(theta_binary_qf(2, 6, 3, 30).is_err());
    assert!(theta_binary_qf(1, 3, 1, 10).is_err());
    assert!(theta_binary_qf(-1, 0, -1, 10).is_err());
}

#[test]
fn n3_small_cases() {
    let f = level23_form(50).unwrap();
    let cubic = PolyZ::x_n_minus_x_minus_1(3);
    assert_eq!(count_roots_mod_p(&reduce_mod_p(&cubic, 2).unwrap()).unwrap(), 0);
    assert_eq!(f.coeffs()[2], Integer::from(-1i64));
    // τ(2) = -24 ≡ -1 mod 23.
    assert_eq!(delta(2).unwrap().residues(23)[2], f.residues(23)[2]);
    assert!(verify_n3(100, 200).is_err());
    let rows = n3_table(5).unwrap();
    assert_eq!(rows[1], N3Row { n: 2, a_n: "-1".into(), tau_mod_23: 22 });
}

#[test]
fn n3_full_truncation() {
    let rep = verify_n3(5000, 5000).unwrap();
    assert!(rep.passed(), "{rep}");
    assert!(rep.failures().next().is_none());
}

proptest! {
    #[test]
    fn theta_matches_brute_force(a in 1i64..5, b in -4i64..5, c in 1i64..6) {
        prop_assume!(4 * a * c - b * b > 0);
        let n = 40;
        let t = theta_binary_qf(a, b, c, n).unwrap();
        let want: Vec<String> = brute_theta(a, b, c, n, 60).iter().map(|x| x.to_string()).collect();
        prop_assert_eq!(strs(&t), want);
    }

    #[test]
    fn multiplication_is_commutative_and_truncates(
        xs in prop::collection::vec(-50i64..50, 1..20),
        ys in prop::collection::vec(-50i64..50, 1..20),
        n in 1usize..15,
        m in 1usize..15,
    ) {
        let a = QSeries::from_i64(&xs, n);
        let b = QSeries::from_i64(&ys, m);
        let ab = a.mul(&b);
        prop_assert_eq!(&ab, &b.mul(&a));
        prop_assert_eq!(ab.order(), n.min(m));
        // Oracle: schoolbook product of the untruncated lists.
        for k in 0..=ab.order() {
            let mut s = 0i64;
            for i in 0..=k {
                let x = if i < xs.len() && i <= n { xs[i] } else { 0 };
                let y = if k - i < ys.len() && k - i <= m { ys[k - i] } else { 0 };
                s += x * y;
            }
            prop_assert_eq!(ab.coeffs()[k].to_string(), s.to_string());
        }
    }
}
