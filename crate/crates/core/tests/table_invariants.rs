use suzuki_semigroups::feng_rao::horizon;
use suzuki_semigroups::suzuki::{nonrational_point_semigroup, rational_point_semigroup};
use suzuki_semigroups::tables::{code_length, compare};
use suzuki_semigroups::{d_ord, SuzukiParams};

#[test]
fn record_invariants() {
    for q in [8, 32] {
        let p = SuzukiParams::from_q(q).unwrap();
        let generic = nonrational_point_semigroup(&p);
        let rational = rational_point_semigroup(&p);
        let c = compare(&p);
        assert_eq!(c.n, code_length(&p));
        for r in &c.records {
            let ell = r.ell();
            assert_eq!(r.dim + ell, r.n);
            assert!(r.d1 > r.d2);
            assert!(r.d2 >= 2);
            assert!(r.d2 + p.genus() > ell);
            assert_eq!(generic.index_of(r.rho_ell), Ok(ell));
            assert_eq!(rational.index_of(r.rho_ell), Ok(ell));
        }
        assert!(c.records.windows(2).all(|w| w[0].rho_ell < w[1].rho_ell));
    }
}

#[test]
fn no_difference_beyond_both_horizons() {
    for q in [8, 32] {
        let p = SuzukiParams::from_q(q).unwrap();
        let generic = nonrational_point_semigroup(&p);
        let rational = rational_point_semigroup(&p);
        let limit = horizon(&generic).max(horizon(&rational));
        for ell in limit + 1..limit + 30 {
            let floor = ell + 1 - p.genus();
            assert_eq!(d_ord(&generic, ell), floor);
            assert_eq!(d_ord(&rational, ell), floor);
        }
        assert!(compare(&p).records.iter().all(|r| r.ell() <= limit));
    }
}
