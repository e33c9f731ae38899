mod common;

use hopf_jordan_core::group::{minimal_abelian_index, reduce_to_finite};
use hopf_jordan_core::hopf::{aut_jordan_index, build_extension_model, exact_sequence_data, LinearHopfModel};
use hopf_jordan_core::{c64, CMatrix, Tolerance};
use proptest::prelude::*;

fn tol() -> Tolerance {
    Tolerance::default()
}

#[test]
fn extension_models_recover_the_abstract_group() {
    for (name, model, group) in common::reduction_models() {
        let em = build_extension_model(&model, &tol()).unwrap();
        assert_eq!(em.ext.order(), group.order(), "{name}");
        let direct = minimal_abelian_index(em.ext.quotient()).unwrap().index;
        assert_eq!(direct, common::abelian_index_oracle(&group), "{name}");
        // R_a·R_b = g^{c(a,b)}·R_{ab} as matrices
        let g = model.contraction();
        let q = em.ext.quotient();
        for a in q.elements() {
            for b in q.elements() {
                let lhs = &em.representatives[a] * &em.representatives[b];
                let rhs = &g.powi(em.ext.c(a, b)).unwrap() * &em.representatives[q.mul(a, b)];
                assert!(lhs.dist(&rhs) <= 1e-9 * lhs.max_norm().max(1.0), "{name}");
            }
        }
    }
}

#[test]
fn reduction_certifies_and_kills_gamma() {
    for (name, model, _) in common::reduction_models() {
        let em = build_extension_model(&model, &tol()).unwrap();
        let r = reduce_to_finite(
            model.generators(),
            model.contraction(),
            &em.ext,
            &em.generator_coords,
            &tol(),
        )
        .unwrap();
        assert!(r.certificates.iter().all(|c| c.passed), "{name}");
        assert_eq!(r.index_h.index, r.index_h_prime.index, "{name}");
        assert!(r.finite.group.order() <= em.ext.order(), "{name}");
        // φ(g) = E
        let phi_g = &r.images[model.contraction_index()];
        assert!(phi_g.dist(&CMatrix::identity(2)) <= 1e-8, "{name}");
    }
}

#[test]
fn twisted_generators_need_a_nontrivial_root() {
    let models = common::reduction_models();
    let (_, model, _) = models.iter().find(|(n, _, _)| n == "C4/twisted").unwrap();
    let report = aut_jordan_index(model, &tol()).unwrap();
    assert!(report.root_order > 1);
    assert_eq!((report.quotient_order, report.jordan_index), (4, 1));
}

#[test]
fn report_arithmetic_and_exact_sequence() {
    for (name, model, _) in common::reduction_models() {
        let r = aut_jordan_index(&model, &tol()).unwrap();
        assert!(r.certified(), "{name}");
        assert_eq!(r.primary_quotient_order, r.quotient_order * r.quotient_order, "{name}");
        assert_eq!(r.quotient_order % r.jordan_index, 0, "{name}");
        assert_eq!(r.theta_exponent, r.quotient_order, "{name}");
        let seq = exact_sequence_data(&model, &tol()).unwrap();
        assert_eq!(seq.group.order(), r.primary_quotient_order, "{name}");
        assert_eq!(seq.kernel.order(), r.quotient_order, "{name}");
    }
}

#[test]
fn observed_indices_are_bounded_by_the_finite_groups_present() {
    let bound = common::finite_matrix_groups()
        .iter()
        .map(|(_, _, g)| minimal_abelian_index(g).unwrap().index)
        .max()
        .unwrap();
    for (name, model, _) in common::reduction_models() {
        let r = aut_jordan_index(&model, &tol()).unwrap();
        assert!(r.jordan_index <= bound, "{name}");
    }
}

fn conjugator() -> impl Strategy<Value = CMatrix> {
    proptest::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 4).prop_filter_map("well conditioned", |v| {
        let s = &CMatrix::identity(2)
            + &CMatrix::from_fn(2, |i, j| c64(v[2 * i + j].0, v[2 * i + j].1)).scale(c64(0.6, 0.0));
        let inv = s.inverse().ok()?;
        (s.max_norm() * inv.max_norm() < 50.0).then_some(s)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn conjugating_the_model_keeps_order_and_index(which in 0usize..25, s in conjugator()) {
        let models = common::reduction_models();
        let (_, model, _) = &models[which];
        let conj: LinearHopfModel = model.conjugated(&s).unwrap();
        let a = aut_jordan_index(model, &tol()).unwrap();
        let b = aut_jordan_index(&conj, &tol()).unwrap();
        prop_assert_eq!(a.quotient_order, b.quotient_order);
        prop_assert_eq!(a.jordan_index, b.jordan_index);
    }
}

#[test]
fn odd_order_twist_enlarges_the_quotient() {
    // (√g·r)³ = g^{3/2} is not a power of g, so √g·E joins H: S3 × C2
    let (_, gens, _) = common::finite_matrix_groups()
        .into_iter()
        .find(|x| x.0 == "S3")
        .unwrap();
    let g = CMatrix::scalar(2, c64(0.5, 0.0));
    let twisted = gens[0].scale(c64(0.5f64.sqrt(), 0.0));
    let model = LinearHopfModel::new(vec![g, twisted, gens[1].clone()], 0).unwrap();
    let r = aut_jordan_index(&model, &tol()).unwrap();
    assert_eq!((r.quotient_order, r.jordan_index), (12, 2));
}
