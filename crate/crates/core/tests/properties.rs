mod common;

use common::*;
use fieldlab::cli::density_points;
use fieldlab::criteria::{no_low_degree_relation, normal_det};
use fieldlab::exact::{poly_eval, poly_gcd, rational_reconstruct, squarefree_part};
use fieldlab::galois::{
    apply, automorphisms_with_prime, compose, find_split_prime_from, galois_group, GaloisOptions,
};
use fieldlab::parse::parse_poly;
use fieldlab::repr::{minpoly, norm, regrep, trace};
use fieldlab::search::{search_primitive, SearchConfig};
use fieldlab::{FieldElem, NumberField, Rat, UPoly};
use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rat> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| Rat::new(n, d))
}

fn upoly(max_len: usize) -> impl Strategy<Value = UPoly> {
    prop::collection::vec(rat(), 0..=max_len).prop_map(UPoly::new)
}

fn field_index() -> impl Strategy<Value = usize> {
    0..REFERENCE_FIELDS.len()
}

fn elem_in(e: &NumberField) -> impl Strategy<Value = FieldElem> {
    let e = e.clone();
    prop::collection::vec(rat(), e.degree()).prop_map(move |c| e.element(c))
}

fn field_and_elems(k: usize) -> impl Strategy<Value = (NumberField, Vec<FieldElem>)> {
    field_index().prop_flat_map(move |i| {
        let e = field(REFERENCE_FIELDS[i].1);
        (Just(e.clone()), prop::collection::vec(elem_in(&e), k))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn polynomial_ring_axioms(a in upoly(5), b in upoly(5), c in upoly(5)) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a - &a, UPoly::zero());
        prop_assert_eq!(&a * &UPoly::one(), a.clone());
    }

    #[test]
    fn field_ring_axioms((_e, v) in field_and_elems(3)) {
        let (a, b, c) = (&v[0], &v[1], &v[2]);
        prop_assert_eq!(&(a * b) * c, a * &(b * c));
        prop_assert_eq!(a * &(b + c), &(a * b) + &(a * c));
        prop_assert_eq!(a * b, b * a);
        prop_assert_eq!(&(a + b) - b, a.clone());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn gcd_divides_both(a in upoly(5), b in upoly(5), c in upoly(3)) {
        let p = &a * &c;
        let q = &b * &c;
        let g = poly_gcd(&p, &q);
        if !p.is_zero() || !q.is_zero() {
            prop_assert!(p.is_divisible_by(&g));
            prop_assert!(q.is_divisible_by(&g));
            if !c.is_zero() {
                prop_assert!(g.is_divisible_by(&c.monic()));
            }
        }
    }

    #[test]
    fn squarefree_part_is_coprime_to_derivative(a in upoly(4), b in upoly(3)) {
        let p = &(&a * &a) * &b;
        prop_assume!(p.degree().unwrap_or(0) > 0);
        let s = squarefree_part(&p).unwrap();
        prop_assert!(poly_gcd(&s, &s.derivative()).is_constant());
        prop_assert!(p.is_divisible_by(&s));
    }

    #[test]
    fn rational_reconstruction_round_trips(n in -1000i64..=1000, d in 1i64..=1000) {
        let q = Rat::new(n, d);
        let m = BigInt::from(2_000_003u64) * BigInt::from(1_000_033u64);
        let bound = BigInt::from(1000);
        let residue = (q.numer() * q.denom().modinv(&m).unwrap()).mod_floor(&m);
        prop_assert_eq!(rational_reconstruct(&residue, &m, &bound).unwrap(), Some(q));
    }

    #[test]
    fn inverses((e, v) in field_and_elems(1)) {
        let a = &v[0];
        if a.is_zero() {
            prop_assert!(a.inv().is_err());
        } else {
            let inv = a.inv().unwrap();
            prop_assert!((a * &inv).is_one());
            prop_assert!(mul_mod(&elem_poly(a), &elem_poly(&inv), e.minpoly()) == UPoly::one());
        }
    }

    #[test]
    fn regular_representation_is_a_homomorphism((e, v) in field_and_elems(2)) {
        let (a, b) = (&v[0], &v[1]);
        prop_assert_eq!(regrep(&(a * b)), regrep(a).try_mul(&regrep(b)).unwrap());
        prop_assert_eq!(regrep(&(a + b)), regrep(a).try_add(&regrep(b)).unwrap());
        prop_assert_eq!(regrep(a).to_rows(), mult_matrix(&elem_poly(a), e.minpoly()));
    }

    #[test]
    fn norm_and_trace((e, v) in field_and_elems(2), c in rat()) {
        let (a, b) = (&v[0], &v[1]);
        prop_assert_eq!(norm(&(a * b)), &norm(a) * &norm(b));
        prop_assert_eq!(norm(a), norm_oracle(&elem_poly(a), e.minpoly()));
        prop_assert_eq!(trace(&(a + b)), &trace(a) + &trace(b));
        prop_assert_eq!(trace(&a.scale(&c)), &c * &trace(a));
        prop_assert_eq!(norm(&e.from_rat(c.clone())), c.pow(e.degree() as u32));
    }

    #[test]
    fn minpoly_divides_charpoly((e, v) in field_and_elems(1)) {
        let a = &v[0];
        let mp = minpoly(a).unwrap();
        let cp = charpoly_oracle(&mult_matrix(&elem_poly(a), e.minpoly()));
        prop_assert!(mp.is_monic());
        prop_assert!(cp.is_divisible_by(&mp));
        prop_assert!(poly_eval(&mp, a).is_zero());
        prop_assert_eq!(mp.degree().unwrap(), minpoly_degree_oracle(&elem_poly(a), e.minpoly()));
        // degree n iff 1, a, ..., a^(n-1) have full rank
        let n = e.degree();
        let powers: Vec<Vec<Rat>> = (0..n).map(|k| a.pow(k as u32).coeffs().to_vec()).collect();
        prop_assert_eq!(mp.degree() == Some(n), rank(powers) == n);
        if mp.degree() == Some(n) {
            prop_assert_eq!(cp, mp);
        }
    }

    #[test]
    fn h_of_a_is_functional((e, v) in field_and_elems(1), h in upoly(4)) {
        let a = &v[0];
        let value = poly_eval(&h, a);
        prop_assert_eq!(elem_poly(&value), h.compose(&elem_poly(a)).rem(e.minpoly()).unwrap());
        prop_assert_eq!(value, poly_eval(&h, &e.element(a.coeffs().to_vec())));
    }

    #[test]
    fn automorphisms_are_homomorphisms((e, v) in field_and_elems(2)) {
        let (a, b) = (&v[0], &v[1]);
        for s in fieldlab::galois::automorphisms(&e).unwrap() {
            prop_assert_eq!(apply(&s, &(a * b)).unwrap(), &apply(&s, a).unwrap() * &apply(&s, b).unwrap());
            prop_assert_eq!(apply(&s, &(a + b)).unwrap(), &apply(&s, a).unwrap() + &apply(&s, b).unwrap());
            prop_assert_eq!(norm(&apply(&s, a).unwrap()), norm(a));
        }
    }

    #[test]
    fn normal_filter_ignores_scaling(i in 0usize..GALOIS_FIELDS.len(), c in rat(), coeffs in prop::collection::vec(rat(), 4)) {
        prop_assume!(!c.is_zero());
        let e = field(GALOIS_FIELDS[i]);
        let group = galois_group(&e, &GaloisOptions::default()).unwrap();
        let a = e.element(coeffs[..e.degree()].to_vec());
        let d = normal_det(&group, &a).unwrap();
        let dc = normal_det(&group, &a.scale(&c)).unwrap();
        prop_assert_eq!(d.is_zero(), dc.is_zero());
        prop_assert_eq!(dc, d.scale(&c.pow(e.degree() as u32)));
    }

    #[test]
    fn products_are_never_fields(
        a in prop::collection::vec(-9i64..=9, 2..=4),
        b in prop::collection::vec(-9i64..=9, 2..=4),
    ) {
        let (a, b) = (UPoly::from_ints(&a), UPoly::from_ints(&b));
        prop_assume!(!a.is_constant() && !b.is_constant());
        prop_assert!(NumberField::new(&(&a * &b)).is_err());
    }

    #[test]
    fn parse_inverts_printing(p in upoly(7)) {
        prop_assume!(!p.is_zero());
        prop_assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
    }
}

#[test]
fn group_axioms() {
    for c in GALOIS_FIELDS.iter().chain([&[1i64, 1, 1, 1, 1][..]].iter()) {
        let e = field(c);
        let g = galois_group(&e, &GaloisOptions::default()).unwrap();
        let n = g.order();
        assert_eq!(n, e.degree());
        assert!(g.elements()[0].is_identity());
        for i in 0..n {
            assert_eq!(g.compose_index(0, i), i);
            assert_eq!(g.compose_index(i, g.inverse_index(i)), 0);
            for j in 0..n {
                let direct = compose(&g.elements()[i], &g.elements()[j]).unwrap();
                assert_eq!(&direct, &g.elements()[g.compose_index(i, j)]);
                for k in 0..n {
                    assert_eq!(
                        g.compose_index(g.compose_index(i, j), k),
                        g.compose_index(i, g.compose_index(j, k))
                    );
                }
            }
            assert_eq!(n % g.element_order(i), 0);
        }
        assert!(g.is_abelian());
    }
}

#[test]
fn split_prime_choice_does_not_change_the_count() {
    for (name, c) in REFERENCE_FIELDS {
        let e = field(c);
        let first = find_split_prime_from(&e, 2, 100_000).unwrap();
        let second = find_split_prime_from(&e, first.p + 1, 100_000).unwrap();
        assert_ne!(first.p, second.p);
        let opts = GaloisOptions::default();
        let a = automorphisms_with_prime(&e, &first, &opts).unwrap();
        let b = automorphisms_with_prime(&e, &second, &opts).unwrap();
        assert_eq!(a.automorphisms, b.automorphisms, "{name}");
    }
}

#[test]
fn density_probe_finds_no_low_degree_relation() {
    let x2 = parse_poly("x^2").unwrap();
    let x3x = parse_poly("x^3 + x").unwrap();
    for hs in [vec![x2.clone()], vec![x3x.clone()], vec![x2, x3x]] {
        let points = density_points(&hs, 10);
        assert_eq!(points.len(), 21usize.pow(hs.len() as u32));
        for d in 1..=3 {
            assert!(no_low_degree_relation(&points, d).unwrap(), "{hs:?} degree {d}");
        }
    }
    // control: the rational points of the unit circle do satisfy a quadric
    let circle: Vec<Vec<Rat>> = (1..=12i64)
        .map(|t| {
            let d = 1 + t * t;
            vec![Rat::new(1 - t * t, d), Rat::new(2 * t, d)]
        })
        .collect();
    assert!(no_low_degree_relation(&circle, 1).unwrap());
    assert!(!no_low_degree_relation(&circle, 2).unwrap());
}

#[test]
fn shorter_searches_are_prefixes() {
    let set = vec![parse_poly("x").unwrap(), parse_poly("x^2").unwrap()];
    for c in [&[-1i64, -1, 0, 1][..], &[1, 0, -10, 0, 1]] {
        let e = field(c);
        let long = search_primitive(&e, &SearchConfig::new(set.clone(), 15)).unwrap();
        for k in [1, 5, 10] {
            let short = search_primitive(&e, &SearchConfig::new(set.clone(), k)).unwrap();
            assert_eq!(short[..], long[..k]);
        }
    }
}
