//! Parameter points and the (ν, ρ) ↔ (ψ, ζ) reparameterization.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactring::{int, q, Rational};

/// ψ_l = ν_l ∏_{r<l} ν_r/ρ_r and ζ_i = ∏_{r≤i} ρ_r/ν_r.
pub fn nu_rho_to_psi_zeta(nu: &[Rational], rho: &[Rational]) -> Result<(Vec<Rational>, Vec<Rational>)> {
    let ratio = |r: usize| -> Result<Rational> {
        let (Some(n), Some(p)) = (nu.get(r), rho.get(r)) else {
            return Err(Error::BadParameters(format!("ν/ρ needs index {}", r + 1)));
        };
        if n.is_zero() || p.is_zero() {
            return Err(Error::DivisionByZero(format!("ν_{0} or ρ_{0} is zero", r + 1)));
        }
        Ok(n / p)
    };
    let mut psi = Vec::with_capacity(nu.len());
    let mut acc = Rational::one();
    for (l, v) in nu.iter().enumerate() {
        psi.push(v * &acc);
        if l + 1 < nu.len() {
            acc *= ratio(l)?;
        }
    }
    let mut zeta = Vec::with_capacity(rho.len());
    let mut acc = Rational::one();
    for i in 0..rho.len() {
        acc *= ratio(i)?.recip();
        zeta.push(acc.clone());
    }
    Ok((psi, zeta))
}

/// Inverse map: ν_l = ψ_l ζ_{l−1} (ζ_0 = 1), ρ_i = ψ_i ζ_i.
pub fn psi_zeta_to_nu_rho(psi: &[Rational], zeta: &[Rational]) -> Result<(Vec<Rational>, Vec<Rational>)> {
    let z = |i: usize| if i == 0 { Some(Rational::one()) } else { zeta.get(i - 1).cloned() };
    let nu = psi
        .iter()
        .enumerate()
        .map(|(l, p)| z(l).map(|zz| p * zz).ok_or_else(|| Error::BadParameters(format!("ζ_{l} missing"))))
        .collect::<Result<Vec<_>>>()?;
    let rho = zeta
        .iter()
        .enumerate()
        .map(|(i, zz)| psi.get(i).map(|p| p * zz).ok_or_else(|| Error::BadParameters(format!("ψ_{} missing", i + 1))))
        .collect::<Result<Vec<_>>>()?;
    Ok((nu, rho))
}

/// One assignment of link parameters ψ and Jordanian parameters ζ.
#[derive(Clone, Debug, PartialEq)]
pub struct ParamPoint {
    pub name: String,
    pub psi: Vec<Rational>,
    pub zeta: Vec<Rational>,
    pub seed: Option<u64>,
}

/// Nonzero rational p/q with |p| ≤ 9, 1 ≤ q ≤ 9.
pub fn random_rational(rng: &mut impl Rng) -> Rational {
    loop {
        let p: i64 = rng.gen_range(-9..=9);
        let d: i64 = rng.gen_range(1..=9);
        if p != 0 {
            return q(p, d);
        }
    }
}

/// The fixed point ψ = (1, 1/2, 1/3, …), ζ = (1, 2, 3, …), followed by two
/// pseudorandom points drawn from `seed` and `seed + 1`.
pub fn parameter_points(n_psi: usize, n_zeta: usize, seed: u64) -> Vec<ParamPoint> {
    let mut pts = vec![ParamPoint {
        name: "default".into(),
        psi: (1..=n_psi).map(|i| q(1, i as i64)).collect(),
        zeta: (1..=n_zeta).map(|i| int(i as i64)).collect(),
        seed: None,
    }];
    for s in [seed, seed + 1] {
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let psi = (0..n_psi).map(|_| random_rational(&mut rng)).collect();
        let zeta = (0..n_zeta).map(|_| random_rational(&mut rng)).collect();
        pts.push(ParamPoint { name: format!("random-{s}"), psi, zeta, seed: Some(s) });
    }
    pts
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn maps_are_inverse() {
        let psi = vec![q(2, 3), q(-5, 7), q(1, 4)];
        let zeta = vec![q(3, 1), q(-1, 2), q(7, 5)];
        let (nu, rho) = psi_zeta_to_nu_rho(&psi, &zeta).unwrap();
        let (p2, z2) = nu_rho_to_psi_zeta(&nu, &rho).unwrap();
        assert_eq!((p2, z2), (psi, zeta));
    }

    #[test]
    fn zero_rho_is_rejected() {
        let r = nu_rho_to_psi_zeta(&[int(1), int(1)], &[int(0)]);
        assert!(matches!(r, Err(Error::DivisionByZero(_))));
    }

    #[test]
    fn points_are_reproducible() {
        assert_eq!(parameter_points(3, 3, 7), parameter_points(3, 3, 7));
        assert_ne!(parameter_points(3, 3, 7)[1], parameter_points(3, 3, 8)[1]);
    }
}
