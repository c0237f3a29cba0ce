use std::fmt::Write;

use grs_core::dinv::format_rational;
use grs_core::report::ReportJson;
use grs_core::ObstructionReport;

pub fn json_line(r: &ObstructionReport) -> String {
    serde_json::to_string(&ReportJson::from(r)).expect("report serialization cannot fail")
}

/// `p^e=value` for each nonzero D, joined by `;`.
pub fn nonzero_d_field(r: &ObstructionReport) -> String {
    r.nonzero_d()
        .map(|d| format!("{}^{}={}", d.p, d.e, format_rational(&d.value)))
        .collect::<Vec<_>>()
        .join(";")
}

fn label(h: &[grs_core::Int]) -> String {
    let parts: Vec<String> = h.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

/// Human-readable summary.
pub fn pretty(r: &ObstructionReport) -> String {
    let mut out = String::new();
    let h2 = r.h2();
    let group = if h2.invariant_factors.is_empty() {
        "0".to_string()
    } else {
        h2.invariant_factors.iter().map(|d| format!("Z/{d}")).collect::<Vec<_>>().join(" + ")
    };
    let factors = if r.factors.is_empty() {
        "1".to_string()
    } else {
        r.factors
            .iter()
            .map(|(p, m)| if *m == 1 { p.to_string() } else { format!("{p}^{m}") })
            .collect::<Vec<_>>()
            .join(" * ")
    };
    let _ = writeln!(out, "knot      {}", r.name);
    let _ = writeln!(out, "det       {} = {factors}", r.det);
    let _ = writeln!(out, "H^2       {group}");
    let _ = writeln!(out, "goeritz   {}", r.form.matrix());
    let _ = writeln!(out, "mirrored  {}", if r.form.mirror_flag() { "yes" } else { "no" });
    let _ = writeln!(out, "spin^c    h -> d");
    for e in r.table.entries() {
        let mark = if e.spinc.is_canonical { "  (canonical)" } else { "" };
        let _ = writeln!(out, "          {} -> {}{mark}", label(&e.spinc.label), e.d);
    }
    for d in &r.d_values {
        let _ = writeln!(out, "D_{}^{}     {}", d.p, d.e, format_rational(&d.value));
    }
    if !r.noncyclic_primes.is_empty() {
        let ps: Vec<String> = r.noncyclic_primes.iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "skipped   non-cyclic primary parts at p = {}", ps.join(", "));
    }
    let _ = writeln!(out, "verdict   {}", r.verdict.as_str());
    out
}
