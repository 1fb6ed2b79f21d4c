use num_traits::Signed;
use planarity::grouppres::{
    badness, compile, order_and_realize, reduce_presentation, reduce_step, satisfies_prc, Letter, Presentation,
};
use proptest::prelude::*;

fn presentation(max_gens: usize, max_rels: usize, max_len: usize) -> impl Strategy<Value = Presentation> {
    (1..=max_gens, 0..=max_rels).prop_flat_map(move |(m, r)| words(m, r, max_len))
}

fn words(m: usize, r: usize, max_len: usize) -> impl Strategy<Value = Presentation> {
    Just((m, r))
        .prop_flat_map(move |(m, r)| {
            let letter = (0..m, any::<bool>()).prop_map(|(generator, inverse)| Letter { generator, inverse });
            (Just(m), prop::collection::vec(prop::collection::vec(letter, 1..=max_len), r))
        })
        .prop_map(|(m, relators)| {
            let names = (0..m).map(|i| format!("x{i}")).collect();
            Presentation::new(names, relators).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn each_step_preserves_the_group_proxy(p in presentation(4, 4, 6)) {
        let mut current = p.clone();
        let mut next = 0;
        let mut steps = 0;
        let start = badness(&p).implementation_total;
        while let Some((q, _)) = reduce_step(&current, &mut next) {
            prop_assert_eq!(q.abelianization(), current.abelianization());
            prop_assert_eq!(q.deficiency(), current.deficiency());
            prop_assert_eq!(badness(&q).implementation_total + 1, badness(&current).implementation_total);
            current = q;
            steps += 1;
        }
        prop_assert_eq!(steps, start);
    }

    #[test]
    fn trace_length_is_the_badness(p in presentation(5, 5, 7)) {
        let t = reduce_presentation(&p);
        prop_assert_eq!(t.steps.len() as u64, badness(&p).implementation_total);
        prop_assert_eq!(badness(&t.result).implementation_total, 0);
        prop_assert_eq!(t.result.deficiency(), p.deficiency());
    }

    #[test]
    fn realization_satisfies_prc(p in presentation(5, 5, 7)) {
        let t = reduce_presentation(&p);
        let r = order_and_realize(&t.result).unwrap();
        prop_assert!(satisfies_prc(&t.result, &r.hole_order));
        // each curve encloses exactly the holes of its relator's generators
        for (w, c) in t.result.relators().iter().zip(r.factorization.cycles()) {
            let enclosed = c.winding().iter().filter(|&&x| x).count();
            prop_assert_eq!(enclosed, w.len());
            for l in w {
                let hole = r.hole_order.iter().position(|&g| g == l.generator).unwrap();
                prop_assert!(c.winding()[hole]);
            }
        }
    }

    #[test]
    fn compiled_homology_is_the_abelianization(p in presentation(4, 4, 6)) {
        let c = compile(&p);
        prop_assert_eq!(&c.homology.h1, &p.abelianization());
        prop_assert!(c.euler.adjusted_bound_holds);
        if c.badness.short_repeats == 0 {
            prop_assert!(c.euler.stated_bound_holds);
        }
    }

    #[test]
    fn perfect_deficiency_zero_compiles_to_a_ball(p in (1usize..=3).prop_flat_map(|m| words(m, m, 6))) {
        prop_assume!(p.exponent_matrix().determinant().abs() == 1.into());
        let c = compile(&p);
        prop_assert!(c.integral_homology_ball);
        prop_assert!(c.homology.h1.is_empty());
        prop_assert_eq!(c.homology.h2_rank, 0);
    }
}
