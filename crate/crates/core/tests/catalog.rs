use num_bigint::BigInt;

use spinor_core::arith::{binomial, rat, Rat};
use spinor_core::catalog::{
    known_aspinorial_witness, make_group, summary_check, tabulated_q_half_spin, tabulated_q_minus,
    type_d_dim_casimir, GroupSpec, TypeDRow, TypeDWeight,
};
use spinor_core::repcalc::{freudenthal_multiplicities, DEFAULT_GUARD};
use spinor_core::spinor::{is_spinorial, q_irreducible};
use spinor_core::OrthRep;

#[test]
fn table_one_p_values() {
    for n in [4, 6, 8, 10, 12] {
        for row in TypeDRow::ALL {
            let (_, fg) = make_group(&row.spec(n)).unwrap();
            assert_eq!(fg.p_value, Some(row.tabulated_p(n)), "{:?} n={n}", row);
        }
    }
}

#[test]
fn odd_so_p_value() {
    for m in [5usize, 7, 9, 11] {
        let (_, fg) = make_group(&GroupSpec::So { m }).unwrap();
        assert_eq!(fg.p_value, Some(rat(m as i64 - 2)));
    }
}

#[test]
fn table_two_casimir_column() {
    for n in [4, 6, 8] {
        let mut ws: Vec<TypeDWeight> = (1..=n).map(TypeDWeight::Fundamental).collect();
        ws.extend([TypeDWeight::HalfSpin, TypeDWeight::HalfSpinMinus, TypeDWeight::Minus]);
        for w in ws {
            let (_, chi) = type_d_dim_casimir(n, w).unwrap();
            assert_eq!(chi, w.tabulated(n).1, "{} n={n}", w.label());
        }
    }
}

#[test]
fn table_two_dimensions_below_middle() {
    for n in [4, 6, 8] {
        for k in 1..n {
            let w = TypeDWeight::Fundamental(k);
            assert_eq!(type_d_dim_casimir(n, w).unwrap().0, w.tabulated(n).0);
        }
        for w in [TypeDWeight::HalfSpin, TypeDWeight::HalfSpinMinus] {
            assert_eq!(type_d_dim_casimir(n, w).unwrap().0, w.tabulated(n).0);
        }
    }
}

// The tabulated (2n−1)!/2^n for ϖ_− is not the dimension; both the Weyl formula
// and the Freudenthal table give C(2n,n)/2, the same as V_{ϖ_n}.
#[test]
fn minus_weight_dimension() {
    for n in [4usize, 6, 8] {
        let expected = binomial(2 * n as u64, n as u64) / 2;
        let (dim, _) = type_d_dim_casimir(n, TypeDWeight::Minus).unwrap();
        assert_eq!(dim, expected);
        assert_eq!(type_d_dim_casimir(n, TypeDWeight::Fundamental(n)).unwrap().0, expected);
        assert_ne!(dim, TypeDWeight::Minus.tabulated(n).0);
    }
    let (rd, _) = make_group(&GroupSpec::Spin { m: 8 }).unwrap();
    let w = rd.weight(TypeDWeight::Minus.coords(4)).unwrap();
    let t = freudenthal_multiplicities(&rd, &w, DEFAULT_GUARD).unwrap();
    assert_eq!(t.dim(), 35);
}

#[test]
fn q_of_minus_weight() {
    for n in [4usize, 8] {
        let (rd, fg) = make_group(&GroupSpec::So { m: 2 * n }).unwrap();
        let w = rd.character(TypeDWeight::Minus.coords(n)).unwrap();
        let q = q_irreducible(&rd, &w, &fg.generators[0]).unwrap();
        let half = Rat::from_integer(binomial(2 * n as u64 - 2, n as u64 - 1)) / rat(2);
        assert_eq!(q, half);
        assert_ne!(q, Rat::from_integer(tabulated_q_minus(n)));
        // the parity conclusion is unaffected
        assert!(is_spinorial(&rd, &fg, &OrthRep::irreducible(&rd, w).unwrap()).unwrap().spinorial);
    }
}

#[test]
fn q_of_fundamental_weights() {
    for n in [4usize, 6, 8] {
        let (rd, fg) = make_group(&GroupSpec::So { m: 2 * n }).unwrap();
        for k in 1..n {
            let w = rd.character(TypeDWeight::Fundamental(k).coords(n)).unwrap();
            let q = q_irreducible(&rd, &w, &fg.generators[0]).unwrap();
            assert_eq!(q, Rat::from_integer(binomial(2 * n as u64 - 2, k as u64 - 1)), "n={n} k={k}");
        }
    }
}

#[test]
fn q_of_half_spin() {
    for n in [8usize, 12, 16] {
        for (spec, w) in [
            (GroupSpec::Gplus { n }, TypeDWeight::HalfSpin),
            (GroupSpec::Gminus { n }, TypeDWeight::HalfSpinMinus),
        ] {
            let (rd, fg) = make_group(&spec).unwrap();
            let lambda = rd.character(w.coords(n)).unwrap();
            let q = q_irreducible(&rd, &lambda, &fg.generators[0]).unwrap();
            assert_eq!(q, tabulated_q_half_spin(n), "{spec}");
        }
    }
}

#[test]
fn literal_generators() {
    let (_, fg) = make_group(&GroupSpec::SlQuot { n: 8, d: 4 }).unwrap();
    assert_eq!(fg.generators[0].coords()[0], rat(2) - rat(2) / rat(8));
    let (_, fg) = make_group(&GroupSpec::SpQuot { n: 3 }).unwrap();
    assert_eq!(fg.generators[0].coords(), &[rat(1) / rat(2), rat(1) / rat(2), rat(1) / rat(2)]);
    let (_, fg) = make_group(&GroupSpec::Gminus { n: 4 }).unwrap();
    assert_eq!(fg.generators[0].coords()[3], rat(-1) / rat(2));
}

#[test]
fn summary_examples() {
    assert!(summary_check(&"Sp16/2".parse().unwrap()));
    assert!(!summary_check(&"SL8/4".parse().unwrap()));
    assert!(summary_check(&"G+16".parse().unwrap()));
    assert!(summary_check(&"E6ad".parse().unwrap()));
    assert!(!summary_check(&"E7ad".parse().unwrap()));
    assert!(!summary_check(&"SO9".parse().unwrap()));
}

#[test]
fn witness_examples() {
    let check = |name: &str, coords: &[Rat]| {
        let spec: GroupSpec = name.parse().unwrap();
        let (w, kind) = known_aspinorial_witness(&spec).unwrap().unwrap();
        assert_eq!(w.coords(), coords, "{name}");
        let (rd, fg) = make_group(&spec).unwrap();
        assert!(!is_spinorial(&rd, &fg, &kind.rep(&rd, w).unwrap()).unwrap().spinorial, "{name}");
    };
    let h = rat(1) / rat(2);
    check("SO9", &[rat(1), rat(0), rat(0), rat(0)]);
    check("G+8", &[h.clone(), h.clone(), h.clone(), h.clone()]);
    check("PSO12", &[rat(1), rat(1), rat(0), rat(0), rat(0), rat(0)]);
    check("PSO10", &[rat(2), rat(0), rat(0), rat(0), rat(0)]);
    check("E7ad", &[rat(2), rat(2), rat(3), rat(4), rat(3), rat(2), rat(1)]);
    assert!(known_aspinorial_witness(&"Spin8".parse().unwrap()).unwrap().is_none());
}

#[test]
fn sl_quot_order() {
    for (n, d) in [(12usize, 4usize), (9, 3), (6, 6)] {
        let (_, fg) = make_group(&GroupSpec::SlQuot { n, d }).unwrap();
        assert_eq!(fg.order(), Some(BigInt::from(d)));
        let nd = (n / d) as i64;
        assert_eq!(fg.p_value, Some(rat(nd * nd * (n as i64 - 1))));
    }
}
