use eulercert::circle::{milnor_euler, milnor_euler_exact_orbit};
use eulercert::doubling::{reflection, run_doubling, HeuristicParams, Status};
use eulercert::explore::{sample_point, sample_rep, sample_sl2, sample_tuple, trial_rng};
use eulercert::twist::{discrete_twist, separating_element};
use eulercert::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;

fn q() -> FieldKind {
    FieldKind::Rational
}

fn maximal_pair(b: [[i64; 2]; 2]) -> PairTuple {
    let a = Mat2::diag(FieldElement::from_int(2, &q()), FieldElement::from_ratio(1, 2, &q())).unwrap();
    PairTuple::new(vec![(a, Mat2::from_ints(&q(), b))]).unwrap()
}

#[test]
fn base_point_and_conjugation_invariance() {
    for i in 0..40 {
        let mut rng = trial_rng(11, i);
        let (rep, _) = sample_rep(&mut rng, 1, 3, &q()).unwrap();
        let k = rep.kind().clone();
        let e0 = euler_number(&rep, &BasePoint::zero(&k)).unwrap();
        for _ in 0..3 {
            let p = BasePoint::new(sample_point(&mut rng, 3, &q()));
            assert_eq!(euler_number(&rep, &p).unwrap(), e0, "trial {i}");
        }
        let g = sample_sl2(&mut rng, 3, &k);
        assert_eq!(euler_number(&rep.conjugated(&g).unwrap(), &BasePoint::zero(&k)).unwrap(), e0);
        assert_eq!(euler_number(&rep.reversed().unwrap(), &BasePoint::zero(&k)).unwrap(), -e0);
    }
}

#[test]
fn oracle_agrees_with_exact_sum() {
    let mut maximal = 0;
    let mut declined = 0;
    for i in 0..60 {
        let mut rng = trial_rng(5, i);
        let (rep, _) = sample_rep(&mut rng, 1, 2, &q()).unwrap();
        let exact = euler_number(&rep, &BasePoint::zero(rep.kind())).unwrap();
        let orbit = milnor_euler_exact_orbit(&rep).unwrap();
        assert_eq!(exact, NORM_CONST * orbit, "trial {i}");
        // the pure float oracle may decline, but must not disagree
        match milnor_euler(&rep.to_float().unwrap()) {
            Ok(oracle) => assert_eq!(oracle, orbit, "trial {i}"),
            Err(Error::PrecisionLoss(_)) => declined += 1,
            Err(e) => panic!("trial {i}: {e}"),
        }
        maximal += (exact.abs() == 4) as usize;
    }
    for b in [[[3, 2], [1, 1]], [[1, 2], [1, 3]], [[2, 3], [1, 2]]] {
        let rep = double(&maximal_pair(b)).unwrap();
        let exact = euler_number(&rep, &BasePoint::zero(rep.kind())).unwrap();
        assert_eq!(exact.abs(), 4);
        assert_eq!(exact, NORM_CONST * milnor_euler(&rep.to_float().unwrap()).unwrap());
        maximal += 1;
    }
    assert!(maximal >= 3);
    assert!(declined < 20, "{declined}");
}

#[test]
fn doubling_identities_hold_exactly() {
    let mut hyperbolic = 0;
    for i in 0..200 {
        let mut rng = trial_rng(3, i);
        let t = sample_tuple(&mut rng, 1 + (i % 2) as usize, 3, &q());
        let Ok(res) = run_doubling(&t) else { continue };
        hyperbolic += 1;
        assert!(res.doubled.relator().is_identity());
        assert!((&res.r * &res.r).is_identity());
        let h = res.h.embed_into(&res.r.kind()).unwrap();
        assert_eq!(&res.r * &h, &h * &res.r);
        assert!(res.f_value.abs() <= res.bound);
        assert_eq!(res.status == Status::Maximal, res.f_value.abs() == res.bound);
        // f is a conjugation invariant of the input
        let g = sample_sl2(&mut rng, 2, &q());
        let conj = run_doubling(&t.conjugated(&g).unwrap()).unwrap();
        assert_eq!(conj.f_value, res.f_value);
    }
    assert!(hyperbolic > 50, "{hyperbolic}");
}

#[test]
fn reflection_does_not_depend_on_route() {
    for i in 0..50 {
        let mut rng = trial_rng(8, i);
        let h = sample_sl2(&mut rng, 3, &q());
        if classify(&h) != ElementClass::Hyperbolic {
            continue;
        }
        let r = reflection(&h).unwrap().r;
        let split = doubling::eigen_split(&h).unwrap();
        assert_eq!(doubling::reflection_from_eigenvectors(&split.x1, &split.x2).unwrap(), r);
        assert_eq!(*r.det(), FieldElement::from_int(-1, &r.kind()));
    }
}

#[test]
fn maximality_is_open() {
    let base = maximal_pair([[3, 2], [1, 1]]);
    let mut rng = trial_rng(99, 0);
    for _ in 0..10 {
        let pairs = base
            .pairs()
            .iter()
            .map(|(a, b)| (perturb(a, &mut rng), perturb(b, &mut rng)))
            .collect();
        let t = PairTuple::new(pairs).unwrap();
        let cert = certify(&t, &HeuristicParams::default()).unwrap();
        assert_eq!(cert.result.status, Status::Maximal);
    }
}

/// Each entry moved by at most 1e-6, then the first column rescaled to restore det 1.
fn perturb<R: Rng>(m: &Mat2, rng: &mut R) -> Mat2 {
    let k = m.kind();
    let mut e: Vec<FieldElement> = m
        .entries()
        .iter()
        .map(|x| {
            let delta = BigRational::new(BigInt::from(rng.random_range(-1000..=1000)), BigInt::from(1_000_000_000i64));
            *x + &FieldElement::from_rational(delta, &k)
        })
        .collect();
    let det = &(&e[0] * &e[3]) - &(&e[1] * &e[2]);
    let s = det.try_inv().unwrap();
    e[0] = &e[0] * &s;
    e[2] = &e[2] * &s;
    Mat2::sl2(e[0].clone(), e[1].clone(), e[2].clone(), e[3].clone()).unwrap()
}

#[test]
fn twist_preserves_relator_and_gamma() {
    let mut twisted = 0;
    for i in 0..60 {
        let mut rng = trial_rng(21, i);
        let (rep, _) = sample_rep(&mut rng, 1, 3, &q()).unwrap();
        let Ok(t) = discrete_twist(&rep, 1) else { continue };
        twisted += 1;
        assert_eq!(t.relator_sign(), rep.relator_sign());
        let g0 = separating_element(&rep, 1).unwrap().trace().embed_into(t.kind()).unwrap();
        assert_eq!(separating_element(&t, 1).unwrap().trace(), g0);
        assert_eq!(discrete_twist(&t, 1).unwrap(), rep.embed_into(t.kind()).unwrap());
    }
    assert!(twisted > 10);
}

#[test]
fn ratfunc_reps_obey_milnor_wood() {
    for i in 0..20 {
        let mut rng = trial_rng(4, i);
        let (rep, _) = sample_rep(&mut rng, 1, 2, &FieldKind::RatFunc).unwrap();
        let mw = milnor_wood_check(&rep, &BasePoint::zero(rep.kind())).unwrap();
        assert!(mw.ok);
        let p = BasePoint::new(ProjPoint::finite(FieldElement::indeterminate()));
        assert_eq!(euler_number(&rep, &p).unwrap(), mw.value);
    }
}
