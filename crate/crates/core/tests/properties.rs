//! Property tests over randomized poset-derived instances.

use catcheck::bridge;
use catcheck::emnd::enumerate_algebras;
use catcheck::fincat::{
    compose_functors, enumerate_nat_trans, interchange_holds, FinCategory, Functor,
};
use catcheck::fixtures;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Random posets always satisfy the category laws when rebuilt from
    /// their raw tables.
    #[test]
    fn random_posets_revalidate(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cat = fixtures::random_poset(&mut rng, 5);
        let rebuilt = FinCategory::validate(
            cat.objects().to_vec(),
            cat.morphisms().cloned().collect(),
            cat.objects()
                .iter()
                .map(|a| (a.clone(), cat.identity_of(a).unwrap()))
                .collect(),
            cat.morphisms()
                .flat_map(|g| {
                    cat.morphisms()
                        .filter(|f| f.tgt == g.src)
                        .map(|f| ((g.id.clone(), f.id.clone()), cat.comp(&g.id, &f.id).unwrap()))
                        .collect::<Vec<_>>()
                })
                .collect(),
        );
        prop_assert!(rebuilt.is_ok());
    }

    /// Composites of validated functors pass re-validation without having
    /// been re-checked at composition time.
    #[test]
    fn functor_composites_revalidate(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m1 = fixtures::random_chain_closure(&mut rng, 6);
        let c1 = m1.s.clone();
        let f = fixtures::poset_functor(&m1.base, &m1.base, |a| c1[a].clone()).unwrap();
        let g = compose_functors(&f, &f).unwrap();
        prop_assert!(g.revalidate().is_ok());
        let h = compose_functors(&g, &Functor::identity(&m1.base)).unwrap();
        prop_assert_eq!(h, g);
    }

    /// The interchange square commutes for every pair of whiskerable cells
    /// between a random closure functor and the identity.
    #[test]
    fn interchange_commutes_on_random_chains(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = fixtures::random_chain_closure(&mut rng, 5);
        let c = m.s.clone();
        let cf = fixtures::poset_functor(&m.base, &m.base, |a| c[a].clone()).unwrap();
        let idf = Functor::identity(&m.base);
        for f in [&idf, &cf] {
            for g in [&idf, &cf] {
                for a in enumerate_nat_trans(f, g, 100_000).unwrap() {
                    for h in [&idf, &cf] {
                        for k in [&idf, &cf] {
                            for cc in enumerate_nat_trans(h, k, 100_000).unwrap() {
                                prop_assert!(interchange_holds(&cc, &a).unwrap());
                            }
                        }
                    }
                }
            }
        }
    }

    /// The zeta triangle R zeta(v) . eta = v holds for every entry of the
    /// arrow induced by a random closure monad.
    #[test]
    fn zeta_triangle_on_random_closures(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = fixtures::random_chain_closure(&mut rng, 6);
        let em = bridge::psi_on_object(&m, 1_000_000).unwrap();
        let arrow = &em.arrow;
        for ((a, _n, v), w) in &arrow.zeta {
            let rw = arrow.right.on_mor(w).unwrap();
            let got = arrow.base.comp(rw, &arrow.unit[a]).unwrap();
            prop_assert_eq!(&got, v);
        }
    }

    /// Algebras of a random closure monad are exactly the fixed points,
    /// each carrying the unique order-witness extension.
    #[test]
    fn closure_algebras_are_fixed_points(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = fixtures::random_chain_closure(&mut rng, 6);
        let ac = enumerate_algebras(&m, 1_000_000).unwrap();
        let fixed: Vec<&String> = m.base.objects().iter().filter(|a| &m.s[*a] == *a).collect();
        prop_assert_eq!(ac.category.objects().iter().collect::<Vec<_>>(), fixed);
    }
}
