use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::{factorize, Factorization};
use crate::scalar::Real;
use crate::sombor_index::pkq_shape;
use crate::structure::build_compressed;

use super::matrix::DENSE_EIG_MAX_ORDER;
use super::quotient::{spectrum_full, spectrum_theoretical};
use super::spectrum::Spectrum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClosedFormCase {
    /// `n = p^k`, `k ≥ 2`
    Pk,
    /// `n = p^k q`, `k ≥ 2`
    PkQ,
    None,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnergyReport<T> {
    pub n: u64,
    pub energy: T,
    pub lower_bound: T,
    /// Printed closed-form energy when one applies; compared in the audit.
    pub closed_form: Option<T>,
    pub closed_form_case: ClosedFormCase,
}

/// Sombor energy `Σ |λ|`.
pub fn energy<T: Real>(s: &Spectrum<T>) -> T {
    s.energy()
}

/// `√2 (N−1)(K−1)` with `N` the order and `K` the clique size; the `K−1`
/// eigenvalues `−√2(N−1)` alone contribute this much energy.
pub fn energy_lower_bound<T: Real>(n: u64) -> Result<T> {
    let g = build_compressed(n)?;
    if g.partition.is_trivial() {
        return Err(Error::NotApplicable {
            n,
            reason: "prime modulus gives the null graph",
        });
    }
    let order = T::count(g.order());
    let clique = T::count(g.partition.clique_size());
    Ok(T::sqrt2() * (order - T::one()) * (clique - T::one()))
}

/// Printed closed-form energy for `n = p^k` or `n = p^k q` (`k ≥ 2`).
pub fn printed_energy_closed_form<T: Real>(fact: &Factorization) -> (Option<T>, ClosedFormCase) {
    let f = |x: u64| T::count(x);
    let s2 = T::sqrt2();
    match fact.factors[..] {
        [(p, k)] if k >= 2 => {
            let pk1 = f(p.pow(k - 1));
            let a = pk1 - f(2);
            let b = pk1 - f(1);
            (Some(s2 * a * a + s2 * b * b), ClosedFormCase::Pk)
        }
        _ => match pkq_shape(fact) {
            Some((p, k, q)) if k >= 2 => {
                let phi = f(p.pow(k - 1) * (p - 1));
                let big = f(p.pow(k - 1) * q) + phi - f(1);
                let small = f(p.pow(k - 1) * q) - f(1);
                let lambda =
                    f(2) * big * big * (small - f(1)) * (small - f(1)) + f(4) * phi * small * small * big * big;
                (Some(s2 * big * small + lambda.sqrt()), ClosedFormCase::PkQ)
            }
            _ => (None, ClosedFormCase::None),
        },
    }
}

/// Energy report from an already computed spectrum.
pub fn energy_report<T: Real>(n: u64, spectrum: &Spectrum<T>) -> Result<EnergyReport<T>> {
    let lower_bound = energy_lower_bound(n)?;
    let (closed_form, closed_form_case) = printed_energy_closed_form(&factorize(n)?);
    Ok(EnergyReport {
        n,
        energy: spectrum.energy(),
        lower_bound,
        closed_form,
        closed_form_case,
    })
}

/// Energy from the dense spectrum, or from the class-level spectrum when the
/// dense eigensolve guard would refuse.
pub fn energy_bounds<T: Real>(n: u64) -> Result<EnergyReport<T>> {
    let g = build_compressed(n)?;
    let spectrum = if g.order() as usize <= DENSE_EIG_MAX_ORDER {
        spectrum_full(n)?
    } else {
        spectrum_theoretical(n)?
    };
    energy_report(n, &spectrum)
}

#[cfg(test)]
mod tests {
    use super::*;

    const SQRT2: f64 = std::f64::consts::SQRT_2;

    #[test]
    fn energy_examples() {
        let e8 = energy_bounds::<f64>(8).unwrap();
        assert!((e8.energy - 8.0 * SQRT2).abs() < 1e-12);
        assert_eq!(e8.closed_form_case, ClosedFormCase::Pk);
        assert!((e8.closed_form.unwrap() - 13.0 * SQRT2).abs() < 1e-12);

        let e9 = energy_bounds::<f64>(9).unwrap();
        assert!((e9.energy - 2.0 * SQRT2).abs() < 1e-12);
        assert!((e9.lower_bound - SQRT2).abs() < 1e-15);

        let e12 = energy_bounds::<f64>(12).unwrap();
        assert!((e12.lower_bound - 24.0 * SQRT2).abs() < 1e-12);
        assert!((e12.energy - 93.874).abs() < 1e-3);
        assert!(e12.energy >= e12.lower_bound);
        assert_eq!(e12.closed_form_case, ClosedFormCase::PkQ);

        assert_eq!(energy(&Spectrum::<f64>::empty()), 0.0);
        assert!(energy_bounds::<f64>(13).is_err());
    }

    #[test]
    fn lower_bound_holds() {
        for n in 4..=300u64 {
            if crate::numtheory::is_prime(n) {
                continue;
            }
            let r = energy_bounds::<f64>(n).unwrap();
            assert!(r.energy >= r.lower_bound - 1e-6, "n = {n}");
        }
    }

    #[test]
    fn closed_form_cases() {
        let case = |n| printed_energy_closed_form::<f64>(&factorize(n).unwrap()).1;
        assert_eq!(case(27), ClosedFormCase::Pk);
        assert_eq!(case(18), ClosedFormCase::PkQ);
        assert_eq!(case(15), ClosedFormCase::None);
        assert_eq!(case(30), ClosedFormCase::None);
        assert_eq!(case(36), ClosedFormCase::None);
    }
}
