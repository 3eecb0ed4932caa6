use biquat_core::entangle::{concurrence, concurrence_unchecked};
use biquat_core::{sample, BiQuat, Conjugation, Quat};

#[test]
fn quaternion_identities_on_random_inputs() {
    let mut rng = sample::rng(1);
    for _ in 0..10_000 {
        let p = sample::quat(&mut rng, 3.0);
        let q = sample::quat(&mut rng, 3.0);
        let rhs = p.norm() * q.norm();
        assert!(((p * q).norm() - rhs).abs() <= 1e-12 * rhs.max(1.0));
        assert!(((p * q).scalar() - (q * p).scalar()).abs() <= 1e-12 * rhs.max(1.0));
        let lhs = (p * q).inverse().unwrap();
        let rhs = q.inverse().unwrap() * p.inverse().unwrap();
        let d = (lhs - rhs).to_array().iter().fold(0.0f64, |m, x| m.max(x.abs()));
        assert!(d <= 1e-10 * lhs.magnitude().max(1.0));
    }
}

#[test]
fn inverse_is_two_sided() {
    let mut rng = sample::rng(2);
    for _ in 0..1_000 {
        let q = sample::quat(&mut rng, 2.0);
        let inv = q.inverse().unwrap();
        for prod in [q * inv, inv * q] {
            assert!((prod - Quat::ONE).to_array().iter().all(|d| d.abs() < 1e-10));
        }
    }
}

#[test]
fn pauli_elements_square_to_one_and_anticommute() {
    let basis = [BiQuat::SIGMA_X, BiQuat::SIGMA_Y, BiQuat::SIGMA_Z];
    for (a, x) in basis.iter().enumerate() {
        assert_eq!(*x * *x, BiQuat::ONE);
        for (b, y) in basis.iter().enumerate() {
            if a != b {
                assert_eq!(*x * *y, -(*y * *x));
            }
        }
    }
    assert_eq!(BiQuat::SIGMA_X * BiQuat::SIGMA_Y, BiQuat::IMAG * BiQuat::SIGMA_Z);
}

#[test]
fn conditional_norm_multiplicativity() {
    let mut rng = sample::rng(3);
    for _ in 0..10_000 {
        let p = sample::biquat(&mut rng, 2.0);
        let q = BiQuat::from(sample::quat(&mut rng, 2.0));
        assert_eq!(q.conjugate(Conjugation::Complex), q);
        let rhs = p.norm_h() * q.norm_h();
        assert!(((p * q).norm_h() - rhs).abs() <= 1e-12 * rhs.max(1.0));
        assert!(((q * p).norm_h() - rhs).abs() <= 1e-12 * rhs.max(1.0));
    }
}

#[test]
fn hermitian_norm_is_not_multiplicative_in_general() {
    let p = BiQuat::SIGMA_X + BiQuat::ONE;
    let q = BiQuat::ONE - BiQuat::SIGMA_X;
    assert_eq!((p * q).norm_h(), 0.0);
    assert_eq!(p.norm_h() * q.norm_h(), 4.0);
}

/// The relation N_pq = 2 N_p N_q − N_{pq*} is ambiguous as printed; this
/// only reports how often it holds with N = norm_h.
#[test]
fn exploratory_product_norm_relation() {
    let mut rng = sample::rng(4);
    let trials = 1_000;
    let mut holds = 0;
    let mut worst = 0.0f64;
    for _ in 0..trials {
        let p = sample::biquat(&mut rng, 1.0);
        let q = sample::biquat(&mut rng, 1.0);
        let lhs = (p * q).norm_h();
        let rhs = 2.0 * p.norm_h() * q.norm_h() - (p * q.conjugate(Conjugation::Complex)).norm_h();
        let err = (lhs - rhs).abs();
        worst = worst.max(err);
        if err <= 1e-9 * lhs.max(1.0) {
            holds += 1;
        }
    }
    println!("N_pq = 2N_pN_q - N_pq*: holds on {holds}/{trials} samples, worst |Δ| = {worst:e}");
}

#[test]
fn concurrence_is_bounded() {
    let mut rng = sample::rng(6);
    for _ in 0..100_000 {
        let q = sample::state(&mut rng);
        let c = concurrence(q).unwrap();
        assert!((0.0..=1.0 + 1e-12).contains(&c));
    }
}

#[test]
fn concurrence_of_product_states_is_zero() {
    let mut rng = sample::rng(7);
    for _ in 0..1_000 {
        let (a0, a1) = sample::amplitudes(&mut rng);
        let (b0, b1) = sample::amplitudes(&mut rng);
        // |a⟩⊗|b⟩ in the (00, 01, 10, 11) ordering
        let q = BiQuat::new(a0 * b0, a0 * b1, a1 * b0, a1 * b1);
        assert!(concurrence_unchecked(q) < 1e-12);
    }
}
