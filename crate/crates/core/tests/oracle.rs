use biquat_core::verify::exact::{oracle_mul, rat, ExactBiQuat, ExactScalar, STRUCTURE_CONSTANTS};
use biquat_core::{sample, BiQuat, Conjugation, Quat};
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::Rng;

/// `n / 2^k`, exactly representable in f64 with room for exact products.
fn dyadic<R: Rng>(rng: &mut R) -> f64 {
    rng.random_range(-97i32..=97) as f64 / (1u32 << rng.random_range(0..=6)) as f64
}

fn dyadic_biquat<R: Rng>(rng: &mut R) -> BiQuat {
    BiQuat::from_parts(
        std::array::from_fn(|_| dyadic(rng)),
        std::array::from_fn(|_| dyadic(rng)),
    )
}

fn small_rational<R: Rng>(rng: &mut R) -> BigRational {
    rat(rng.random_range(-97..=97), rng.random_range(1..=97))
}

fn random_exact<R: Rng>(rng: &mut R) -> ExactBiQuat {
    ExactBiQuat {
        coords: std::array::from_fn(|_| small_rational(rng)),
    }
}

#[test]
fn basis_table_is_associative() {
    let mut count = 0;
    for a in 0..8 {
        for b in 0..8 {
            for c in 0..8 {
                let (x, y, z) = (ExactBiQuat::basis(a), ExactBiQuat::basis(b), ExactBiQuat::basis(c));
                assert_eq!(oracle_mul(&oracle_mul(&x, &y), &z), oracle_mul(&x, &oracle_mul(&y, &z)));
                count += 1;
            }
        }
    }
    assert_eq!(count, 512);
}

#[test]
fn table_has_one_entry_per_pair() {
    // Each row and column is a signed permutation.
    for (a, entries) in STRUCTURE_CONSTANTS.iter().enumerate() {
        let mut row: Vec<usize> = entries.iter().map(|e| e.1).collect();
        let mut col: Vec<usize> = (0..8).map(|b| STRUCTURE_CONSTANTS[b][a].1).collect();
        row.sort();
        col.sort();
        assert_eq!(row, (0..8).collect::<Vec<_>>());
        assert_eq!(col, (0..8).collect::<Vec<_>>());
    }
}

#[test]
fn oracle_matches_bmul_exactly_on_dyadic_inputs() {
    let mut rng = sample::rng(2024);
    for _ in 0..20_000 {
        let (p, q) = (dyadic_biquat(&mut rng), dyadic_biquat(&mut rng));
        let exact = oracle_mul(
            &ExactBiQuat::from_biquat(p).unwrap(),
            &ExactBiQuat::from_biquat(q).unwrap(),
        );
        assert_eq!(ExactBiQuat::from_biquat(p * q).unwrap(), exact, "p = {p:?}, q = {q:?}");
    }
}

#[test]
fn oracle_matches_bmul_on_general_rationals() {
    let mut rng = sample::rng(5);
    for _ in 0..2_000 {
        let (pe, qe) = (random_exact(&mut rng), random_exact(&mut rng));
        let exact = oracle_mul(&pe, &qe).to_biquat();
        let float = pe.to_biquat() * qe.to_biquat();
        let scale = exact.max_abs().max(1.0);
        assert!(
            (exact - float).max_abs() <= 1e-15 * scale * 8.0,
            "{exact:?} vs {float:?}"
        );
    }
}

#[test]
fn oracle_examples() {
    let i = ExactBiQuat::basis(1);
    let j = ExactBiQuat::basis(2);
    assert_eq!(oracle_mul(&i, &j), ExactBiQuat::basis(3));
    let imag = ExactBiQuat::basis(4);
    let prod = oracle_mul(&imag, &i);
    assert_eq!(prod.coeff(1), ExactScalar::from_ints(0, 1));
}

#[test]
fn conjugation_identities_hold_exactly() {
    let mut rng = sample::rng(11);
    for _ in 0..2_000 {
        let (q, p) = (random_exact(&mut rng), random_exact(&mut rng));
        let star = |x: &ExactBiQuat| x.conjugate(Conjugation::Complex);
        let bar = |x: &ExactBiQuat| x.conjugate(Conjugation::Quaternion);
        let dag = |x: &ExactBiQuat| x.conjugate(Conjugation::Hermitian);
        let qp = oracle_mul(&q, &p);
        assert_eq!(star(&bar(&q)), bar(&star(&q)));
        assert_eq!(star(&qp), oracle_mul(&star(&q), &star(&p)));
        assert_eq!(bar(&qp), oracle_mul(&bar(&p), &bar(&q)));
        assert_eq!(dag(&qp), oracle_mul(&dag(&p), &dag(&q)));
    }
}

#[test]
fn exact_conjugations_agree_with_float_ones() {
    let mut rng = sample::rng(12);
    for _ in 0..200 {
        let q = dyadic_biquat(&mut rng);
        let e = ExactBiQuat::from_biquat(q).unwrap();
        for kind in [Conjugation::Complex, Conjugation::Quaternion, Conjugation::Hermitian] {
            assert_eq!(e.conjugate(kind).to_biquat(), q.conjugate(kind));
        }
    }
}

#[test]
fn quat_mul_is_associative_and_distributive_exactly() {
    let mut rng = sample::rng(13);
    for _ in 0..500 {
        let real = |rng: &mut _| {
            let mut e = random_exact(rng);
            for c in &mut e.coords[4..] {
                *c = BigRational::from_integer(0.into());
            }
            e
        };
        let (x, y, z) = (real(&mut rng), real(&mut rng), real(&mut rng));
        assert_eq!(oracle_mul(&oracle_mul(&x, &y), &z), oracle_mul(&x, &oracle_mul(&y, &z)));
        assert_eq!(oracle_mul(&x, &(&y + &z)), &oracle_mul(&x, &y) + &oracle_mul(&x, &z));
        assert_eq!(oracle_mul(&(&y + &z), &x), &oracle_mul(&y, &x) + &oracle_mul(&z, &x));
    }
}

#[test]
fn dyadic_quat_products_are_exact() {
    let mut rng = sample::rng(14);
    for _ in 0..1_000 {
        let p = Quat::from_array(std::array::from_fn(|_| dyadic(&mut rng)));
        let q = Quat::from_array(std::array::from_fn(|_| dyadic(&mut rng)));
        let exact = oracle_mul(
            &ExactBiQuat::from_biquat(p.into()).unwrap(),
            &ExactBiQuat::from_biquat(q.into()).unwrap(),
        );
        let got: Vec<f64> = exact.coords[..4].iter().map(|c| c.to_f64().unwrap()).collect();
        assert_eq!(got, (p * q).to_array());
    }
}
