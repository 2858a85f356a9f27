//! End-to-end acceptance checks. Runs as a plain binary and prints one
//! `[PASS]`/`[FAIL]` line per criterion; exits non-zero if any fails.

use std::f64::consts::SQRT_2;
use std::process::ExitCode;
use std::time::Instant;

use wzd_core::audit::{audit, AuditFinding, AuditInput};
use wzd_core::numtheory::is_prime;
use wzd_core::ring_oracle::build_dense_oracle;
use wzd_core::sombor_index::{sombor_compressed, sombor_direct, sombor_formula};
use wzd_core::spectral::{energy_lower_bound, quotient_matrix, spectrum_full, spectrum_theoretical, Spectrum};
use wzd_core::structure::{build_compressed, expand, partition, ClassKind};

type Check = Result<String, String>;

fn composites(from: u64, to: u64) -> impl Iterator<Item = u64> {
    (from..=to).filter(|&n| !is_prime(n))
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1.0)
}

fn c1_oracle_equivalence() -> Check {
    let mut count = 0;
    for n in composites(4, 300) {
        let oracle = build_dense_oracle(n).map_err(|e| format!("n={n}: {e}"))?;
        let structural = expand(&build_compressed(n).unwrap()).unwrap();
        if oracle != structural {
            return Err(format!("n={n}: vertex or edge sets differ"));
        }
        count += 1;
    }
    Ok(format!("{count} moduli, identical vertex and edge sets"))
}

fn c2_example_18() -> Check {
    let p = partition(18).map_err(|e| e.to_string())?;
    let got: Vec<(u64, u64, ClassKind)> = p.classes.iter().map(|c| (c.divisor, c.size, c.kind)).collect();
    let want = vec![
        (2, 6, ClassKind::Independent),
        (3, 2, ClassKind::Complete),
        (6, 2, ClassKind::Complete),
        (9, 1, ClassKind::Complete),
    ];
    if got == want {
        Ok("classes null K_6, K_2, K_2, K_1 on divisors 2, 3, 6, 9".into())
    } else {
        Err(format!("got {got:?}"))
    }
}

fn c3_index_agreement() -> Check {
    let (mut worst_paths, mut worst_formula) = (0f64, 0f64);
    for n in composites(4, 2000) {
        let g = build_compressed(n).unwrap();
        let direct: f64 = sombor_direct(&expand(&g).unwrap());
        let compressed: f64 = sombor_compressed(&g);
        let (formula, _) = sombor_formula::<f64>(n).map_err(|e| format!("n={n}: {e}"))?;
        let dp = rel(direct, compressed);
        let df = rel(direct, formula).max(rel(compressed, formula));
        worst_paths = worst_paths.max(dp);
        worst_formula = worst_formula.max(df);
        if dp > 1e-12 || df > 1e-9 {
            return Err(format!(
                "n={n}: direct {direct}, compressed {compressed}, formula {formula}"
            ));
        }
    }
    Ok(format!(
        "max rel delta paths {worst_paths:.1e} (tol 1e-12), formula {worst_formula:.1e} (tol 1e-9)"
    ))
}

struct SpectrumPair {
    n: u64,
    full: Spectrum<f64>,
}

fn c4_spectrum_cross_path(keep: &mut Vec<SpectrumPair>) -> Check {
    let (mut count, mut worst_match, mut worst_trace, mut worst_frob) = (0, 0f64, 0f64, 0f64);
    for n in composites(4, 1000) {
        let g = build_compressed(n).unwrap();
        if g.order() > 2000 {
            continue;
        }
        let frob_sq = g.sombor_frobenius_sq() as f64;
        let frob = frob_sq.sqrt();
        let full = spectrum_full::<f64>(n).map_err(|e| format!("n={n}: {e}"))?;
        let theo = spectrum_theoretical::<f64>(n).map_err(|e| format!("n={n}: {e}"))?;
        let tol = 1e-6 * frob.max(1.0);
        let dev = full
            .max_deviation(&theo)
            .ok_or_else(|| format!("n={n}: orders differ"))?;
        if dev > tol {
            return Err(format!("n={n}: multiset deviation {dev:e} > {tol:e}"));
        }
        worst_match = worst_match.max(dev / frob.max(1.0));
        for (label, s) in [("full", &full), ("theoretical", &theo)] {
            let tr = s.trace().abs();
            if tr > 1e-8 * frob {
                return Err(format!("n={n} {label}: trace {tr:e}"));
            }
            let fr = (s.sum_of_squares() - frob_sq).abs() / frob_sq;
            if fr > 1e-8 {
                return Err(format!("n={n} {label}: Frobenius residual {fr:e}"));
            }
            worst_trace = worst_trace.max(tr / frob);
            worst_frob = worst_frob.max(fr);
        }
        keep.push(SpectrumPair { n, full });
        count += 1;
    }
    Ok(format!(
        "{count} moduli; max deviation {worst_match:.1e}·‖S‖_F, trace {worst_trace:.1e}·‖S‖_F, Frobenius {worst_frob:.1e}"
    ))
}

fn c5_energy_bound(spectra: &[SpectrumPair]) -> Check {
    if spectra.is_empty() {
        return Err("no spectra from the cross-path check".into());
    }
    let mut min_slack = f64::INFINITY;
    for sp in spectra {
        let bound: f64 = energy_lower_bound(sp.n).unwrap();
        let slack = sp.full.energy() - bound;
        min_slack = min_slack.min(slack);
        if slack < -1e-6 {
            return Err(format!("n={}: energy {} below bound {bound}", sp.n, sp.full.energy()));
        }
    }
    Ok(format!("{} moduli, min slack {min_slack:.3}", spectra.len()))
}

fn expect_spectrum(n: u64, want: &[f64]) -> Result<(), String> {
    let got = spectrum_full::<f64>(n).map_err(|e| e.to_string())?.expanded();
    let mut want = want.to_vec();
    want.sort_by(|a, b| b.partial_cmp(a).unwrap());
    let mut got_sorted = got.clone();
    got_sorted.sort_by(|a, b| b.partial_cmp(a).unwrap());
    let scale = want.iter().map(|v| v * v).sum::<f64>().sqrt().max(1.0);
    if got.len() != want.len()
        || got_sorted
            .iter()
            .zip(&want)
            .any(|(g, w)| (g - w).abs() > 1e-9 * w.abs().max(scale * 1e-6))
    {
        return Err(format!("n={n}: spectrum {got:?}, expected {want:?}"));
    }
    Ok(())
}

fn expect_close(what: &str, got: f64, want: f64) -> Result<(), String> {
    if rel(got, want) > 1e-9 {
        return Err(format!("{what}: {got} vs {want}"));
    }
    Ok(())
}

fn c6_fixed_points() -> Check {
    let r2 = SQRT_2;
    expect_spectrum(8, &[4.0 * r2, -2.0 * r2, -2.0 * r2])?;
    expect_close("energy(8)", spectrum_full::<f64>(8).unwrap().energy(), 8.0 * r2)?;
    expect_spectrum(9, &[r2, -r2])?;

    let g = build_compressed(12).unwrap();
    expect_close(
        "SO(12)",
        sombor_direct(&expand(&g).unwrap()),
        60.0 * r2 + 10.0 * 61f64.sqrt(),
    )?;
    // λ² − 24√2λ − 610 = 0
    let disc = 898f64.sqrt();
    let (hi, lo) = (12.0 * r2 + disc, 12.0 * r2 - disc);
    let c = -6.0 * r2;
    expect_spectrum(12, &[hi, lo, c, c, c, c, 0.0])?;
    let e = spectrum_full::<f64>(12).unwrap().energy();
    expect_close("energy(12)", e, 24.0 * r2 + 2.0 * disc)?;
    if (e - 93.874).abs() > 5e-4 {
        return Err(format!("energy(12) = {e}"));
    }
    let mut q = quotient_matrix::<f64>(&g).eigenvalues().map_err(|e| e.to_string())?;
    q.sort_by(|a, b| b.partial_cmp(a).unwrap());
    let roots: Vec<f64> = q.iter().copied().filter(|v| rel(*v, c) > 1e-9).collect();
    if roots.len() != 2 {
        return Err(format!("quotient(12) eigenvalues {q:?}"));
    }
    expect_close("quotient root +", roots[0], hi)?;
    expect_close("quotient root -", roots[1], lo)?;
    Ok("n=8, 9, 12 spectra, energies, SO(12) and quotient roots within 1e-9".into())
}

fn findings(n: u64) -> Vec<AuditFinding> {
    let g = build_compressed(n).unwrap();
    let so = sombor_direct(&expand(&g).unwrap());
    let spectrum = spectrum_full::<f64>(n).unwrap();
    audit(&AuditInput {
        graph: &g,
        so_direct: so,
        spectrum: &spectrum,
    })
    .unwrap()
}

fn c7_audit_sensitivity() -> Check {
    let cases = [
        (8, "AF-1", "largest eigenvalue"),
        (12, "AF-2", "clique eigenvalue multiplicity"),
        (30, "AF-3", "zero eigenvalue multiplicity"),
        (8, "AF-4", "energy closed form"),
        (12, "AF-4", "energy closed form"),
        (30, "INDEX-PQR", "sombor index"),
    ];
    let mut seen = Vec::new();
    for (n, id, quantity) in cases {
        let f = findings(n);
        let hit = f
            .iter()
            .find(|x| x.claim_id == id && x.quantity.starts_with(quantity))
            .ok_or_else(|| format!("n={n}: no {id} finding for {quantity}"))?;
        if !(hit.abs_delta > 0.0 && hit.flagged) {
            return Err(format!("n={n}: {id} {quantity} delta {} not flagged", hit.abs_delta));
        }
        seen.push(format!("{id}@{n} Δ={:.3}", hit.abs_delta));
    }
    let mut thm_count = 0;
    for n in composites(4, 2000) {
        let g = build_compressed(n).unwrap();
        let so = sombor_direct(&expand(&g).unwrap());
        let spectrum = spectrum_theoretical::<f64>(n).unwrap();
        let f = audit(&AuditInput {
            graph: &g,
            so_direct: so,
            spectrum: &spectrum,
        })
        .unwrap();
        let thm = f
            .iter()
            .find(|x| x.claim_id == "INDEX-THM")
            .ok_or_else(|| format!("n={n}: no INDEX-THM"))?;
        if thm.flagged {
            return Err(format!("n={n}: INDEX-THM flagged, delta {}", thm.abs_delta));
        }
        thm_count += 1;
    }
    Ok(format!(
        "{}; INDEX-THM unflagged on {thm_count} moduli",
        seen.join(", ")
    ))
}

fn main() -> ExitCode {
    let mut spectra = Vec::new();
    let mut failed = 0;
    let mut report = |id: &str, title: &str, t: Instant, r: Check| {
        let secs = t.elapsed().as_secs_f64();
        match r {
            Ok(detail) => println!("[PASS] C{id} {title} ({secs:.1}s): {detail}"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] C{id} {title} ({secs:.1}s): {detail}");
            }
        }
    };
    let t = Instant::now();
    report("1", "oracle equivalence, n in [4,300]", t, c1_oracle_equivalence());
    let t = Instant::now();
    report("2", "divisor classes of n=18", t, c2_example_18());
    let t = Instant::now();
    report("3", "Sombor index agreement, n in [4,2000]", t, c3_index_agreement());
    let t = Instant::now();
    let c4 = c4_spectrum_cross_path(&mut spectra);
    report("4", "spectrum cross-path, n in [4,1000]", t, c4);
    let t = Instant::now();
    report("5", "energy lower bound", t, c5_energy_bound(&spectra));
    let t = Instant::now();
    report("6", "fixed points n=8, 9, 12", t, c6_fixed_points());
    let t = Instant::now();
    report("7", "audit sensitivity", t, c7_audit_sensitivity());
    if failed == 0 {
        println!("acceptance: all 7 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of 7 criteria failed");
        ExitCode::FAILURE
    }
}
