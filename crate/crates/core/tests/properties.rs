use num_rational::BigRational;
use proptest::prelude::*;

use hlspringer::diagrams::{flatten_step, reading_filling, reverse_filling};
use hlspringer::fillings::{admissible_words, dinv, frob_delta, inv_stat, prd_of_word};
use hlspringer::fqgeom::{FpMatrix, Subspace};
use hlspringer::hlexp::{coinv_identity_sides, containing_partitions, free_pair_count, free_pairs, hl_rhs, n_skew, n_skew_closed_form};
use hlspringer::qcore::{compositions, partitions, q_binom, Poly};
use hlspringer::{Basis, Composition, DeltaInstance, Int, Partition, QPoly, SymFunc};

fn partition(max: usize) -> impl Strategy<Value = Partition> {
    (0..=max).prop_flat_map(|n| {
        let all = partitions(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn instance(max_n: usize, max_s: usize) -> impl Strategy<Value = DeltaInstance> {
    (0..=max_n, 1..=max_s).prop_flat_map(|(n, s)| {
        let lambdas: Vec<Partition> = (0..=n).flat_map(partitions).filter(|l| l.len() <= s).collect();
        (0..lambdas.len()).prop_map(move |i| DeltaInstance::new(n, lambdas[i].clone(), s).unwrap())
    })
}

fn vectors(p: u32, dim: usize, count: usize) -> impl Strategy<Value = Vec<Vec<u8>>> {
    prop::collection::vec(prop::collection::vec(0..p as u8, dim), 0..=count)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conjugation_is_an_involution(l in partition(12)) {
        prop_assert_eq!(l.conjugate().conjugate(), l.clone());
        prop_assert_eq!(l.conjugate().size(), l.size());
    }

    #[test]
    fn q_binomial_symmetry_and_specialization(a in 0i64..12, b in 0i64..12) {
        let f: QPoly = q_binom(a, b);
        prop_assert_eq!(&f, &q_binom::<Int>(a, a - b));
        prop_assert!(f.is_palindromic());
        let binom = if b > a { 0u64 } else { (0..b as u64).fold(1, |acc, i| acc * (a as u64 - i) / (i + 1)) };
        prop_assert_eq!(f.eval(&Int::from(1)), Int::from(binom));
    }

    #[test]
    fn q_binomial_agrees_over_rationals(a in 0i64..10, b in 0i64..10) {
        let z: QPoly = q_binom(a, b);
        let r: Poly<BigRational> = q_binom(a, b);
        let lifted: Vec<BigRational> = z.coeffs().iter().map(|c| BigRational::from_integer(c.clone())).collect();
        prop_assert_eq!(r.coeffs(), lifted.as_slice());
    }

    #[test]
    fn frob_matches_expansion(i in instance(5, 3)) {
        let f: SymFunc = frob_delta(&i).unwrap();
        prop_assert_eq!(&f, &hl_rhs::<Int>(&i).unwrap());
        prop_assert!(f.is_positive_in(Basis::Schur).unwrap());
        if i.n() > 0 {
            prop_assert_eq!(f.q_degree(), Some(i.top_degree()));
        }
    }

    #[test]
    fn basis_round_trip(i in instance(4, 3)) {
        let f: SymFunc = frob_delta(&i).unwrap();
        let back = f.to_basis(Basis::Schur).unwrap().to_basis(Basis::Monomial).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn reading_and_reverse_fillings_are_bijective(i in instance(6, 4)) {
        for t in [reading_filling(&i), reverse_filling(&i)] {
            let mut labels: Vec<usize> = i.cells().map(|c| t.label(c)).collect();
            labels.sort_unstable();
            prop_assert_eq!(labels, (1..=i.big_k()).collect::<Vec<_>>());
        }
    }

    #[test]
    fn flattening_shrinks_by_one(i in instance(5, 3), row in 1usize..=3) {
        prop_assume!(i.n() > 0 && row <= i.s() && i.row_len(row) > 0);
        let t = reading_filling(&i);
        let (map, t2) = flatten_step(&t, row).unwrap();
        prop_assert_eq!(t2.instance().n(), i.n() - 1);
        prop_assert_eq!(map.deleted().len(), i.big_k() - t2.instance().big_k());
    }

    #[test]
    fn inv_equals_dinv(i in instance(4, 3)) {
        let t = reading_filling(&i);
        for w in admissible_words(&t, &Composition::new(vec![1; i.n()])).unwrap() {
            prop_assert_eq!(inv_stat(&t, &w).unwrap(), dinv(&prd_of_word(&t, &w).unwrap()));
        }
    }

    #[test]
    fn skew_statistic_has_closed_form(i in instance(7, 4)) {
        for nu in containing_partitions(&i) {
            prop_assert_eq!(n_skew(&nu, i.lambda(), &i).unwrap(), n_skew_closed_form(&nu, i.lambda()) as i64);
        }
    }

    #[test]
    fn coinv_identity(nu in partition(8), s in 1usize..=5, pick in any::<prop::sample::Index>()) {
        prop_assume!(nu.len() <= s);
        let inside: Vec<Partition> = (0..=nu.size()).flat_map(partitions).filter(|l| nu.contains(l)).collect();
        let lambda = &inside[pick.index(inside.len())];
        let (l, r) = coinv_identity_sides::<Int>(&nu, lambda, s).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn free_pairs_closed_form(i in instance(6, 4)) {
        for a in compositions(i.n(), i.s()).into_iter().filter(|a| a.contains(i.lambda())) {
            prop_assert_eq!(free_pairs(&a, &i).unwrap().len(), free_pair_count(&a, &i).unwrap());
        }
    }

    #[test]
    fn subspace_canonical_form(p in prop::sample::select(vec![2u32, 3, 5, 7]), vs in vectors(7, 5, 4)) {
        let vs: Vec<Vec<u8>> = vs.into_iter().map(|v| v.into_iter().map(|x| x % p as u8).collect()).collect();
        let a = Subspace::span(p, 5, vs.clone()).unwrap();
        let mut rev = vs.clone();
        rev.reverse();
        let scaled = rev.into_iter().map(|v| v.into_iter().map(|x| ((x as u32 * (p - 1)) % p) as u8).collect::<Vec<u8>>());
        let b = Subspace::span(p, 5, scaled).unwrap();
        prop_assert_eq!(&a, &b);
        for v in &vs {
            prop_assert!(a.contains_vector(v));
        }
        prop_assert!(a.dim() <= vs.len());
    }

    #[test]
    fn matrix_product_is_associative(p in prop::sample::select(vec![2u32, 3, 5]), es in prop::collection::vec(0u8..5, 48)) {
        let mk = |off: usize| {
            let mut m = FpMatrix::zero(p, 4).unwrap();
            for r in 0..4 {
                for c in 0..4 {
                    m.set(r, c, es[off + 4 * r + c] % p as u8);
                }
            }
            m
        };
        let (a, b, c) = (mk(0), mk(16), mk(32));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        let v = vec![1, 0, 1, 1];
        prop_assert_eq!(a.mul(&b).apply(&v), a.apply(&b.apply(&v)));
    }
}
