//! Compares printed closed forms against computed values.
//!
//! Claim IDs are stable across versions:
//!
//! | id          | claim                                                     |
//! |-------------|-----------------------------------------------------------|
//! | INDEX-THM   | index theorem, both cases                                 |
//! | INDEX-PKQ   | index corollary for `n = p^k q`                           |
//! | INDEX-PQR   | index corollary for `n = pqr`                             |
//! | AF-1        | spectrum of the complete case (all exponents ≥ 2)         |
//! | AF-2        | spectrum corollary for `n = p^k q`, `k ≥ 2`               |
//! | AF-3        | spectrum corollary for `n = pqr`                          |
//! | AF-4        | closed-form energies for `n = p^k` and `n = p^k q`        |

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::sombor_index::{corollary_values, pkq_shape, pqr_shape, sombor_formula, FormulaCase};
use crate::spectral::{printed_energy_closed_form, quotient_matrix, Spectrum};
use crate::structure::CompressedGraph;

/// Relative size above which a printed-vs-computed delta is flagged.
pub const FLAG_REL_TOL: f64 = 1e-6;
/// Flag threshold for the index theorem, which must hold to this precision.
pub const THEOREM_REL_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditFinding {
    pub claim_id: String,
    pub quantity: String,
    pub printed_value: f64,
    /// Value from the class structure.
    pub derived_value: f64,
    /// Value from the computation path (dense sum or eigensolver).
    pub computed_value: f64,
    /// `|printed − computed|`
    pub abs_delta: f64,
    pub flagged: bool,
}

impl AuditFinding {
    fn new(claim_id: &str, quantity: &str, printed: f64, derived: f64, computed: f64, rel_tol: f64) -> Self {
        let abs_delta = (printed - computed).abs();
        AuditFinding {
            claim_id: claim_id.into(),
            quantity: quantity.into(),
            printed_value: printed,
            derived_value: derived,
            computed_value: computed,
            abs_delta,
            flagged: abs_delta > rel_tol * computed.abs().max(1.0),
        }
    }
}

/// Inputs shared by every claim check.
pub struct AuditInput<'a> {
    pub graph: &'a CompressedGraph,
    /// Sombor index from the dense edge sum.
    pub so_direct: f64,
    pub spectrum: &'a Spectrum<f64>,
}

struct Ctx<'a> {
    input: &'a AuditInput<'a>,
    match_tol: f64,
    out: Vec<AuditFinding>,
}

impl Ctx<'_> {
    fn value(&mut self, id: &str, quantity: &str, printed: f64, derived: f64) {
        let computed = self.input.spectrum.nearest(derived).map_or(f64::NAN, |p| p.0);
        self.out.push(AuditFinding::new(
            id,
            quantity,
            printed,
            derived,
            computed,
            FLAG_REL_TOL,
        ));
    }

    fn multiplicity(&mut self, id: &str, quantity: &str, printed: f64, derived_value: f64, derived_mult: u64) {
        let computed = self.input.spectrum.multiplicity_of(derived_value, self.match_tol) as f64;
        self.out.push(AuditFinding::new(
            id,
            quantity,
            printed,
            derived_mult as f64,
            computed,
            FLAG_REL_TOL,
        ));
    }
}

/// Runs every claim that applies to the modulus of `input.graph`.
pub fn audit(input: &AuditInput<'_>) -> Result<Vec<AuditFinding>> {
    let g = input.graph;
    let n = g.n();
    if g.partition.is_trivial() {
        return Ok(Vec::new());
    }
    let fact = &g.partition.factorization;
    let order = g.order();
    let clique = g.partition.clique_size();
    let s2 = std::f64::consts::SQRT_2;
    let frob = (g.sombor_frobenius_sq() as f64).sqrt();
    let mut ctx = Ctx {
        input,
        match_tol: 1e-6 * frob.max(1.0),
        out: Vec::new(),
    };
    let clique_eig = -s2 * (order - 1) as f64;

    let (theorem, _) = sombor_formula::<f64>(n)?;
    ctx.out.push(AuditFinding::new(
        "INDEX-THM",
        "sombor index",
        theorem,
        theorem,
        input.so_direct,
        THEOREM_REL_TOL,
    ));

    for (case, printed) in corollary_values::<f64>(n)? {
        let id = match case {
            FormulaCase::PkQCorollary => "INDEX-PKQ",
            _ => "INDEX-PQR",
        };
        ctx.out.push(AuditFinding::new(
            id,
            "sombor index",
            printed,
            theorem,
            input.so_direct,
            FLAG_REL_TOL,
        ));
    }

    if fact.simple_count() == 0 {
        let big = order as f64;
        ctx.value(
            "AF-1",
            "largest eigenvalue",
            s2 * big * big,
            s2 * (big - 1.0) * (big - 1.0),
        );
        ctx.multiplicity("AF-1", "multiplicity of -sqrt2(N-1)", big - 1.0, clique_eig, order - 1);
    }

    let quotient: Vec<f64> = {
        let mut v = quotient_matrix::<f64>(g).eigenvalues()?;
        v.sort_by(|a, b| b.partial_cmp(a).expect("finite"));
        v
    };

    if let Some((p, k, q)) = pkq_shape(fact).filter(|s| s.1 >= 2) {
        let phi_pk = (p.pow(k - 1) * (p - 1)) as f64;
        let a = (p.pow(k - 1) * q) as f64 + phi_pk - 1.0;
        let b = (p.pow(k - 1) * q) as f64 - 1.0;
        ctx.value("AF-2", "clique eigenvalue", -s2 * a, clique_eig);
        ctx.multiplicity("AF-2", "clique eigenvalue multiplicity", b, clique_eig, clique - 1);
        ctx.multiplicity(
            "AF-2",
            "zero eigenvalue multiplicity",
            phi_pk - 1.0,
            0.0,
            (phi_pk - 1.0) as u64,
        );
        let lambda = 2.0 * a * a * (b - 1.0) * (b - 1.0) + 4.0 * phi_pk * b * b * a * a;
        let centre = s2 * a * (b - 1.0);
        ctx.value(
            "AF-2",
            "quotient eigenvalue (+)",
            (centre + lambda.sqrt()) / 2.0,
            quotient[0],
        );
        ctx.value(
            "AF-2",
            "quotient eigenvalue (-)",
            (centre - lambda.sqrt()) / 2.0,
            quotient[quotient.len() - 1],
        );
    }

    if let Some((p, q, r)) = pqr_shape(fact) {
        let d1 = (p * (q - 1) + q * (r - 1) + r * (p - 1)) as f64 - 4.0;
        let zero_printed = ((p - 1) * (q - 1) + (p - 1) * (r - 1) + (q - 1) * (r - 1)) as f64 - 4.0;
        let zero_derived: u64 = g.partition.independent().map(|c| c.size - 1).sum();
        ctx.value("AF-3", "clique eigenvalue", -s2 * d1, clique_eig);
        ctx.multiplicity(
            "AF-3",
            "clique eigenvalue multiplicity",
            (p + q + r - 4) as f64,
            clique_eig,
            clique - 1,
        );
        ctx.multiplicity("AF-3", "zero eigenvalue multiplicity", zero_printed, 0.0, zero_derived);
    }

    if let (Some(printed), case) = printed_energy_closed_form::<f64>(fact) {
        let derived = derived_energy(g, &quotient, clique);
        let computed = input.spectrum.energy();
        ctx.out.push(AuditFinding::new(
            "AF-4",
            &format!("energy closed form ({case:?})"),
            printed,
            derived,
            computed,
            FLAG_REL_TOL,
        ));
    }

    Ok(ctx.out)
}

fn derived_energy(g: &CompressedGraph, quotient: &[f64], clique: u64) -> f64 {
    let twin = if clique >= 2 {
        (clique - 1) as f64 * std::f64::consts::SQRT_2 * (g.order() - 1) as f64
    } else {
        0.0
    };
    twin + quotient.iter().map(|v| v.abs()).sum::<f64>()
}

/// Number of flagged findings.
pub fn flag_count(findings: &[AuditFinding]) -> usize {
    findings.iter().filter(|f| f.flagged).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sombor_index::sombor_direct;
    use crate::spectral::spectrum_full;
    use crate::structure::{build_compressed, expand};

    fn run(n: u64) -> Vec<AuditFinding> {
        let g = build_compressed(n).unwrap();
        let so = sombor_direct(&expand(&g).unwrap());
        let s = spectrum_full(n).unwrap();
        audit(&AuditInput {
            graph: &g,
            so_direct: so,
            spectrum: &s,
        })
        .unwrap()
    }

    fn find<'a>(f: &'a [AuditFinding], id: &str, quantity: &str) -> &'a AuditFinding {
        f.iter()
            .find(|x| x.claim_id == id && x.quantity.starts_with(quantity))
            .unwrap_or_else(|| panic!("{id} {quantity}"))
    }

    #[test]
    fn complete_case_largest_eigenvalue_at_8() {
        let f = run(8);
        let s2 = std::f64::consts::SQRT_2;
        let af1 = find(&f, "AF-1", "largest eigenvalue");
        assert!((af1.printed_value - 9.0 * s2).abs() < 1e-12);
        assert!((af1.computed_value - 4.0 * s2).abs() < 1e-12);
        assert!(af1.flagged);
        assert!(!find(&f, "AF-1", "multiplicity").flagged);
        let af4 = find(&f, "AF-4", "energy");
        assert!((af4.abs_delta - 5.0 * s2).abs() < 1e-12);
        assert!(!find(&f, "INDEX-THM", "sombor").flagged);
    }

    #[test]
    fn pkq_findings_at_12() {
        let f = run(12);
        let m = find(&f, "AF-2", "clique eigenvalue multiplicity");
        assert_eq!((m.printed_value, m.computed_value), (5.0, 4.0));
        assert!(m.flagged);
        assert!(!find(&f, "AF-2", "zero eigenvalue multiplicity").flagged);
        assert!(find(&f, "AF-4", "energy").flagged);
        assert!(find(&f, "INDEX-PKQ", "sombor").flagged);
        assert!(!find(&f, "INDEX-THM", "sombor").flagged);
    }

    #[test]
    fn pqr_findings_at_30() {
        let f = run(30);
        let z = find(&f, "AF-3", "zero eigenvalue multiplicity");
        // sizes φ(15), φ(10), φ(6) = 8, 4, 2; derived zeros 7 + 3 + 1 = 11
        assert_eq!(z.computed_value, 11.0);
        assert_eq!(z.printed_value, 10.0);
        assert!(z.flagged);
        assert!(find(&f, "INDEX-PQR", "sombor").flagged);
        assert!(!find(&f, "INDEX-THM", "sombor").flagged);
    }

    #[test]
    fn prime_has_no_findings() {
        let g = build_compressed(17).unwrap();
        let s = Spectrum::empty();
        assert!(audit(&AuditInput {
            graph: &g,
            so_direct: 0.0,
            spectrum: &s
        })
        .unwrap()
        .is_empty());
    }
}
