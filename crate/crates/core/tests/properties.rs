use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use nilsum::construct::{classical, zassenhaus, GradedAlgebra};
use nilsum::deform::{
    check_maurer_cartan, coboundary1, coboundary2, conjugated_deformation, decompose_deformation,
    random_degree_raising_map, star, Cochain1, Cochain2, Cochain3,
};
use nilsum::driver::suites::random_abelian_extension;
use nilsum::driver::{AlgebraFile, AlgebraSpec};
use nilsum::{Fp, Subspace};

fn prime() -> impl Strategy<Value = u32> {
    prop::sample::select(vec![2u32, 3, 5, 7])
}

fn vectors(p: u32, n: usize, count: usize) -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(prop::collection::vec(0..p, n), 0..=count)
}

fn subspace_pair() -> impl Strategy<Value = (Fp, Vec<Vec<u32>>, Vec<Vec<u32>>, usize)> {
    (prime(), 1usize..=6).prop_flat_map(|(p, n)| {
        (
            Just(Fp::new(p).unwrap()),
            vectors(p, n, 5),
            vectors(p, n, 5),
            Just(n),
        )
    })
}

/// A random cochain of a single weight `s` on a graded algebra.
fn homogeneous_cochain(g: &GradedAlgebra, s: i64, rng: &mut ChaCha8Rng) -> Cochain2 {
    use rand::Rng;
    let f = g.algebra().field();
    let n = g.dim();
    let mut psi = Cochain2::zero(f, n);
    for i in 0..n {
        for j in i + 1..n {
            let mut v = vec![0; n];
            for k in g.basis_of_degree(g.degree(i) + g.degree(j) + s) {
                if rng.gen_bool(0.5) {
                    v[k] = f.random(rng);
                }
            }
            psi.set(i, j, v);
        }
    }
    psi
}

/// Every nonzero value of `c` on a basis triple lands in total degree + `s`.
fn triple_weight_is(g: &GradedAlgebra, c: &Cochain3, s: i64) -> bool {
    let n = g.dim();
    (0..n).all(|i| {
        (i + 1..n).all(|j| {
            (j + 1..n).all(|k| {
                let v = c.basis_value(i, j, k);
                let want = g.degree(i) + g.degree(j) + g.degree(k) + s;
                v.iter()
                    .enumerate()
                    .all(|(x, &a)| a == 0 || g.degree(x) == want)
            })
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn span_of_basis_is_itself((f, a, _, n) in subspace_pair()) {
        let u = Subspace::span(f, n, &a);
        prop_assert_eq!(Subspace::span(f, n, &u.basis_vectors()), u.clone());
        for v in &a {
            prop_assert!(u.contains_vector(v));
        }
    }

    #[test]
    fn sum_and_intersection_dimensions((f, a, b, n) in subspace_pair()) {
        let u = Subspace::span(f, n, &a);
        let v = Subspace::span(f, n, &b);
        let s = u.sum(&v).unwrap();
        let i = u.intersect(&v).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), u.dim() + v.dim());
        prop_assert!(s.contains(&u).unwrap() && s.contains(&v).unwrap());
        prop_assert!(u.contains(&i).unwrap() && v.contains(&i).unwrap());
    }

    #[test]
    fn ad_is_a_derivation(seed in any::<u64>(), p in prop::sample::select(vec![3u32, 5, 7])) {
        let f = Fp::new(p).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for l in [classical::sl2(f).unwrap(), zassenhaus(f, 1).unwrap().into_algebra()] {
            let n = l.dim();
            let (x, y, z) = (f.random_vector(n, &mut rng), f.random_vector(n, &mut rng), f.random_vector(n, &mut rng));
            let lhs = l.bracket(&x, &l.bracket(&y, &z));
            let rhs = f.add_vec(&l.bracket(&l.bracket(&x, &y), &z), &l.bracket(&y, &l.bracket(&x, &z)));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn coboundary_squares_to_zero(seed in any::<u64>()) {
        let f = Fp::new(5).unwrap();
        let l = zassenhaus(f, 1).unwrap().into_algebra();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let phi = Cochain1::from_values(f, (0..5).map(|_| f.random_vector(5, &mut rng)).collect());
        prop_assert!(coboundary2(&l, &coboundary1(&l, &phi)).is_zero());
    }

    #[test]
    fn weights_add_under_star_and_survive_d(seed in any::<u64>(), a in 1i64..3, b in 1i64..3) {
        let f = Fp::new(7).unwrap();
        let g = zassenhaus(f, 1).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pa = homogeneous_cochain(&g, a, &mut rng);
        let pb = homogeneous_cochain(&g, b, &mut rng);
        prop_assert!(triple_weight_is(&g, &star(&pa, &pb), a + b));
        prop_assert!(triple_weight_is(&g, &coboundary2(g.algebra(), &pa), a));
    }

    #[test]
    fn conjugated_deformations_satisfy_maurer_cartan(seed in any::<u64>()) {
        let f = Fp::new(5).unwrap();
        let g = zassenhaus(f, 1).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = conjugated_deformation(&g, &random_degree_raising_map(&g, &mut rng)).unwrap();
        prop_assert!(d.validate_structure().is_valid());
        let psis = decompose_deformation(&d, &g).unwrap();
        prop_assert!(psis.iter().all(|(s, _)| *s > 0));
        prop_assert!(check_maurer_cartan(&g, &psis).all_zero);
    }

    #[test]
    fn algebra_files_round_trip(seed in any::<u64>(), p in prop::sample::select(vec![3u32, 5, 7])) {
        let f = Fp::new(p).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let l = random_abelian_extension(f, &mut rng).unwrap().algebra;
        let text = AlgebraFile::from_algebra(&l, None).to_json().unwrap();
        let (back, graded) = AlgebraFile::from_json(&text).unwrap().to_algebra().unwrap();
        prop_assert!(graded.is_none());
        prop_assert_eq!(back.structure_constants(), l.structure_constants());
    }

    #[test]
    fn specs_round_trip(
        name in prop::sample::select(vec![
            "sl2:p={p}",
            "zassenhaus:p={p},n=2",
            "witt:p={p},m=2",
            "uppertriangular:n=3,p={p}",
            "semidirect:heisenberg_weyl,p={p}",
            "tensor:S=sl2(p={p}),m=1",
            "G:S=zassenhaus(p={p},n=1),m=1,D=span(d1)",
            "G:S=zassenhaus(p={p}),m=2,D=span(d1,d2,x1^2*d2-2*x2*d1)",
        ]),
        p in prop::sample::select(vec![3u32, 5, 7]),
    ) {
        let src = name.replace("{p}", &p.to_string());
        let spec = AlgebraSpec::parse(&src).unwrap();
        let canonical = spec.to_string();
        let again = AlgebraSpec::parse(&canonical).unwrap();
        prop_assert_eq!(&again, &spec);
        prop_assert_eq!(again.to_string(), canonical);
    }
}
