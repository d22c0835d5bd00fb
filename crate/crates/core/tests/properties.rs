use proptest::prelude::*;
use rand::Rng;

use hhquiver::cochains::{bracket, circ_i, circ_i_basic, coboundary, cochain_basis, hochschild, Cochain};
use hhquiver::cycles::{build_cycle, compose_cycles, cycle_via_pullback, cycles_isomorphic, recover, stationary_cycle};
use hhquiver::ext::gz_dimension_check;
use hhquiver::gamma::enumerate_gamma;
use hhquiver::gen::{bypass_instance, oriented_cycle_instance, random_cochain, rng, AlgebraGenerator};
use hhquiver::linalg::Matrix;
use hhquiver::quiver::Vertex;
use hhquiver::{Rational, Scalar, F3};

type Q = Rational;

fn config() -> ProptestConfig {
    ProptestConfig { cases: 48, ..ProptestConfig::default() }
}

fn sign<S: Scalar>(n: usize, m: usize) -> S {
    -S::sign((n - 1) * (m - 1))
}

fn antisymmetric<S: Scalar>(seed: u64) {
    let mut r = rng(seed);
    let alg = AlgebraGenerator::default().generate(&mut r);
    let (n, m) = (r.gen_range(1..=3), r.gen_range(1..=3));
    let f = random_cochain::<S>(&alg, n, &mut r);
    let g = random_cochain::<S>(&alg, m, &mut r);
    let fg = bracket(&alg, &f, &g).unwrap();
    let gf = bracket(&alg, &g, &f).unwrap();
    assert_eq!(fg, gf.scale(&sign::<S>(n, m)));
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn coboundary_squares_to_zero(seed in any::<u64>(), n in 0usize..=3) {
        let mut r = rng(seed);
        let alg = AlgebraGenerator::default().generate(&mut r);
        let f = random_cochain::<Q>(&alg, n, &mut r);
        prop_assert!(coboundary(&alg, &coboundary(&alg, &f)).is_zero());
        let f = random_cochain::<F3>(&alg, n, &mut r);
        prop_assert!(coboundary(&alg, &coboundary(&alg, &f)).is_zero());
    }

    #[test]
    fn bracket_is_graded_antisymmetric(seed in any::<u64>()) {
        antisymmetric::<Q>(seed);
        antisymmetric::<F3>(seed);
    }

    #[test]
    fn hochschild_dims_obey_rank_nullity(seed in any::<u64>()) {
        let alg = AlgebraGenerator::default().generate(&mut rng(seed));
        let report = hochschild::<Q>(&alg, 3);
        for d in &report.degrees {
            prop_assert_eq!(d.cochain_dim, cochain_basis(&alg, d.degree).len());
            prop_assert_eq!(d.dim, d.cochain_dim - d.rank_out - d.rank_in);
            prop_assert_eq!(d.representatives.len(), d.dim);
        }
    }

    #[test]
    fn closed_formula_matches_substitution_on_bypasses(seed in any::<u64>()) {
        let inst = bypass_instance(&mut rng(seed));
        let alg = &inst.algebra;
        let (f, g) = (inst.left(), inst.right());
        let direct = circ_i(alg, &Cochain::<Q>::basic(f.clone()), &Cochain::basic(g.clone()), inst.s).unwrap();
        let closed = circ_i_basic(alg, &f, &g, inst.s).unwrap();
        prop_assert_eq!(closed.clone(), Some(inst.composed()));
        prop_assert_eq!(direct, Cochain::basic(closed.unwrap()));
    }

    #[test]
    fn recover_inverts_build(seed in any::<u64>()) {
        let inst = bypass_instance(&mut rng(seed));
        let alg = &inst.algebra;
        for b in [inst.left(), inst.right(), inst.composed()] {
            let c = build_cycle::<Q>(alg, &b).unwrap();
            c.validate(alg).unwrap();
            let (u, p) = recover(alg, &c).unwrap();
            prop_assert_eq!(&u, b.u().path());
            prop_assert_eq!(&p, b.p());
            let pulled = cycle_via_pullback::<Q>(alg, &b).unwrap();
            prop_assert!(cycles_isomorphic(alg.quiver(), &pulled, &c.sequence()));
        }
    }

    #[test]
    fn composing_cycles_follows_the_bypass(seed in any::<u64>()) {
        let inst = bypass_instance(&mut rng(seed));
        let alg = &inst.algebra;
        let left = build_cycle::<Q>(alg, &inst.left()).unwrap();
        let right = build_cycle::<Q>(alg, &inst.right()).unwrap();
        let expected = build_cycle::<Q>(alg, &inst.composed()).unwrap();
        prop_assert_eq!(compose_cycles(alg, &left, &right, inst.s).unwrap(), expected);
    }

    #[test]
    fn ext_dimensions_match_gamma_counts(seed in any::<u64>()) {
        let mut r = rng(seed);
        let alg = AlgebraGenerator::default().generate(&mut r);
        let x = Vertex(r.gen_range(0..alg.quiver().vertex_count()));
        for report in gz_dimension_check::<Q>(&alg, x, 4).unwrap() {
            prop_assert!(report.exact && report.agrees(), "degree {}", report.degree);
        }
    }

    #[test]
    fn stationary_cycles_are_exact(seed in any::<u64>(), n in 2usize..=4) {
        let alg = AlgebraGenerator::default().generate(&mut rng(seed));
        let closed = enumerate_gamma(&alg, n, None, None).into_iter().filter(|u| u.source() == u.target());
        let inst = oriented_cycle_instance(&mut rng(seed));
        for (alg, u) in closed.map(|u| (&alg, u)).chain([(&inst.algebra, inst.u.clone())]) {
            let c = stationary_cycle::<Q>(alg, &u).unwrap();
            prop_assert_eq!(c.modules.len(), u.degree());
            prop_assert!(c.sequence().is_exact());
        }
    }

    #[test]
    fn rank_plus_nullity(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 5), 1..6)) {
        let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
        let m = Matrix::<Q>::from_ints(&refs);
        let kernel = m.kernel_basis();
        prop_assert_eq!(m.rank() + kernel.len(), m.cols());
        prop_assert_eq!(m.rank(), m.transpose().rank());
        for v in &kernel {
            prop_assert!(m.apply(v).iter().all(|x| x == &Q::from_int(0)));
        }
        let b = m.apply(&(0..m.cols()).map(|i| Q::from_int(i as i64)).collect::<Vec<_>>());
        let x = m.solve(&b).unwrap();
        prop_assert_eq!(m.apply(&x), b);
    }
}
