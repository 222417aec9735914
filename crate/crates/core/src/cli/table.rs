//! Plain-text tables for `--pretty`.

use std::fmt::Write;

use super::commands::{InconsistentOutput, InterpolateOutput, KernelOutput, SigmaOutput, SolveOutput};
use crate::bench::BenchReport;

fn grid(header: &[String], rows: &[Vec<String>]) -> String {
    let cols = header.len();
    let mut widths: Vec<usize> = header.iter().map(String::len).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &[String]| {
        let parts: Vec<String> = (0..cols)
            .map(|c| format!("{:>w$}", cells.get(c).map_or("", String::as_str), w = widths[c]))
            .collect();
        let _ = writeln!(out, "{}", parts.join("  ").trim_end());
    };
    line(header);
    for row in rows {
        line(row);
    }
    out
}

fn indexed(label: &str, values: &[String]) -> String {
    let rows: Vec<Vec<String>> = values
        .iter()
        .enumerate()
        .map(|(i, v)| vec![i.to_string(), v.clone()])
        .collect();
    grid(&["i".into(), label.into()], &rows)
}

fn matrix(prefix: &str, rows: &[Vec<String>]) -> String {
    let Some(first) = rows.first() else {
        return String::from("(none)\n");
    };
    let header: Vec<String> = std::iter::once(String::new())
        .chain((0..first.len()).map(|j| j.to_string()))
        .collect();
    let body: Vec<Vec<String>> = rows
        .iter()
        .enumerate()
        .map(|(k, r)| std::iter::once(format!("{prefix}{k}")).chain(r.iter().cloned()).collect())
        .collect();
    grid(&header, &body)
}

pub fn interpolate(out: &InterpolateOutput) -> String {
    let degree = out.degree.map_or_else(|| "-inf (zero polynomial)".to_string(), |d| d.to_string());
    let mut s = format!("degree {degree}\n");
    s.push_str(&indexed("coefficient of x^i", &out.coefficients));
    if let Some(v) = &out.verified {
        let _ = writeln!(s, "verified: nodes={} oracle={}", v.nodes, v.oracle);
    }
    s
}

pub fn solve(out: &SolveOutput) -> String {
    let mut s = String::from("particular solution\n");
    s.push_str(&indexed("omega_i", &out.particular));
    let _ = writeln!(s, "kernel basis ({} vectors)", out.kernel_basis.len());
    s.push_str(&matrix("v", &out.kernel_basis));
    if let Some(v) = &out.verified {
        let _ = writeln!(s, "verified: system={} oracle={}", v.nodes, v.oracle);
    }
    s
}

pub fn inconsistent(out: &InconsistentOutput) -> String {
    format!(
        "inconsistent system: equation {} has residual {}\n",
        out.equation_index, out.residual
    )
}

pub fn kernel(out: &KernelOutput) -> String {
    let mut s = format!("kernel of the {} x {} Vandermonde matrix\n", out.p, out.n);
    s.push_str(&matrix("v", &out.kernel_basis));
    s
}

pub fn sigma(out: &SigmaOutput) -> String {
    let mut s = indexed("sigma(t)", &out.sigma);
    if let Some(rows) = &out.deflated {
        s.push_str("deflated rows (row i omits node i)\n");
        s.push_str(&matrix("", rows));
    }
    s
}

pub fn bench(report: &BenchReport) -> String {
    let header: Vec<String> = [
        "p",
        "closed ops",
        "gauss ops",
        "closed s",
        "gauss s",
        "speedup",
    ]
    .iter()
    .map(|h| h.to_string())
    .collect();
    let rows: Vec<Vec<String>> = report
        .sizes
        .iter()
        .enumerate()
        .map(|(k, p)| {
            let closed = report.times.closed_form[k];
            let gauss = report.times.gaussian[k];
            vec![
                p.to_string(),
                report.op_counts.closed_form[k].to_string(),
                report.op_counts.gaussian[k].to_string(),
                format!("{closed:.3e}"),
                format!("{gauss:.3e}"),
                format!("{:.1}", gauss / closed.max(f64::MIN_POSITIVE)),
            ]
        })
        .collect();
    let mut s = grid(&header, &rows);
    let f = &report.fit;
    let _ = writeln!(
        s,
        "log-log slope: ops closed={:.3} gauss={:.3}; time closed={:.3} gauss={:.3} (median of {} reps)",
        f.closed_form_ops, f.gaussian_ops, f.closed_form_time, f.gaussian_time, report.repetitions
    );
    s
}
