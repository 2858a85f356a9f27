use std::fmt::Write as _;

use wzd_core::analysis::AnalysisRecord;
use wzd_core::numfmt::format_real;
use wzd_core::structure::ClassKind;

pub fn analysis_text(r: &AnalysisRecord) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "n = {} = {}", r.n, r.factorization);
    if r.trivial {
        let _ = writeln!(s, "prime modulus: null graph (0 vertices)");
        return s;
    }
    let _ = writeln!(
        s,
        "vertices {}  edges {}  method {:?}",
        r.num_vertices, r.num_edges, r.method
    );
    if let Some(m) = r.oracle_match {
        let _ = writeln!(s, "oracle match: {m}");
    }
    let _ = writeln!(s, "classes:");
    for c in &r.classes {
        let shape = match c.kind {
            ClassKind::Complete => "K",
            ClassKind::Independent => "null K",
        };
        let _ = writeln!(
            s,
            "  d={:<6} size {:<6} {shape}_{:<6} degree {}",
            c.divisor, c.size, c.size, c.degree
        );
    }
    let ix = &r.index;
    let _ = writeln!(s, "Sombor index:");
    let _ = writeln!(s, "  direct      {}", format_real(ix.so_direct));
    let _ = writeln!(s, "  compressed  {}", format_real(ix.so_compressed));
    if let (Some(f), Some(d)) = (ix.so_formula, ix.rel_delta_formula) {
        let _ = writeln!(
            s,
            "  formula     {} ({:?}, rel delta {:.2e})",
            format_real(f),
            ix.formula_case,
            d
        );
    }
    let sp = &r.spectrum;
    let _ = write!(s, "Sombor spectrum ({:?}", sp.source);
    if let Some(m) = sp.multiset_match {
        let _ = write!(s, ", paths match: {m}");
    }
    let _ = writeln!(s, "):");
    for (v, m) in &sp.spectrum.pairs {
        let _ = writeln!(s, "  {:>24} x {m}", format_real(*v));
    }
    let _ = writeln!(
        s,
        "  trace {:.3e}  frobenius residual {:.3e}",
        sp.trace, sp.frobenius_residual
    );
    if let Some(e) = &r.energy {
        let _ = writeln!(
            s,
            "Sombor energy {}  (lower bound {})",
            format_real(e.energy),
            format_real(e.lower_bound)
        );
    }
    if !r.audit_findings.is_empty() {
        let _ = writeln!(s, "audit:");
        for f in &r.audit_findings {
            let _ = writeln!(
                s,
                "  {} {:<9} {:<34} printed {:<22} computed {:<22} delta {:.3e}",
                if f.flagged { "!" } else { " " },
                f.claim_id,
                f.quantity,
                format_real(f.printed_value),
                format_real(f.computed_value),
                f.abs_delta
            );
        }
    }
    s
}
