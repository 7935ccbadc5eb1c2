use quintic::arith::{kronecker_i64, primes_up_to};
use quintic::data::DataBundle;
use quintic::polyfactor::*;
use quintic::Error;

#[test]
fn root_counts_match_fixed_points_for_shipped_polynomials() {
    let data = DataBundle::embedded().unwrap();
    let mut checked = 0;
    for p in primes_up_to(10_000) {
        for f in [&data.f5, &data.g, &data.h] {
            let fp = reduce_mod_p(f, p).unwrap();
            match factorization_cycle_type(&fp) {
                Ok(t) => {
                    assert_eq!(count_roots_mod_p(&fp).unwrap(), t.fixed_points(), "p={p}");
                    assert_eq!(t.degree() as usize, fp.degree().unwrap());
                    checked += 1;
                }
                Err(Error::Ramified(_)) => assert!(!fp.is_squarefree()),
                Err(e) => panic!("{e}"),
            }
        }
    }
    assert!(checked > 3 * 1200);
}

#[test]
fn f5_type_parity_is_the_discriminant_symbol() {
    // Stickelberger: the number of even-length cycles is odd exactly when disc is a non-square mod p.
    let f5 = PolyZ::x_n_minus_x_minus_1(5);
    for p in primes_up_to(5000).into_iter().filter(|&p| p != 19 && p != 151 && p != 2) {
        let t = factorization_cycle_type(&reduce_mod_p(&f5, p).unwrap()).unwrap();
        assert_eq!(t.sign(), kronecker_i64(2869, p as i64), "p={p}");
    }
}

#[test]
fn discriminant_report() {
    let rep = verify_discriminants(DISC_NMAX, SQUAREFREE_NMAX, SQUAREFREE_BOUND).unwrap();
    assert!(rep.passed(), "{rep}");
    assert_eq!(rep.lines.iter().filter(|l| l.id == "disc.formula").count(), 39);
    assert_eq!(rep.lines.iter().filter(|l| l.id == "disc.no_square_factor").count(), 19);
}

#[test]
fn factorization_is_deterministic() {
    let data = DataBundle::embedded().unwrap();
    let hp = reduce_mod_p(&data.h, 7919).unwrap();
    assert_eq!(factorization_cycle_type(&hp).unwrap(), factorization_cycle_type(&hp).unwrap());
}
