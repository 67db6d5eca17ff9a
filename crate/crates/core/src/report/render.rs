use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};

use super::{SeriesEntry, VerificationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Md,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "md" => Ok(Format::Md),
            "json" => Ok(Format::Json),
            _ => Err(Error::UnknownSelector(s.to_string())),
        }
    }
}

fn series_line(s: &SeriesEntry) -> String {
    format!(
        "{}: {} ⊃ 0; factors {} = {}",
        s.module,
        s.chain[..s.chain.len() - 1]
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(" ⊃ "),
        s.factors_lowest.join(","),
        s.factors.join(",")
    )
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn text(r: &VerificationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{} p = {}: {}",
        r.command,
        r.prime,
        r.status.as_str().to_uppercase()
    );
    let width = r.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
    for c in &r.checks {
        let _ = writeln!(
            out,
            "  [{:<4}] {:<width$}  {}",
            c.status.as_str(),
            c.name,
            c.detail
        );
    }
    if let Some(t) = &r.tables.weight_table {
        let _ = writeln!(out, "\nweight space dimensions, λ = 0..{}", t.p - 1);
        for row in &t.rows {
            let mark = if row.matches() { "" } else { "  (expected differs)" };
            let _ = writeln!(out, "  {:<5} {}{mark}", row.module, join(&row.observed));
        }
    }
    for t in &r.tables.chains {
        let _ = writeln!(out, "\n{} (dim {})", t.module, t.dim);
        for row in &t.rows {
            let _ = writeln!(
                out,
                "  [{}] dim {:<4} head {} = {:<7} v = {}",
                row.degree, row.dim, row.factor_lowest, row.factor, row.generator
            );
        }
    }
    if !r.series.is_empty() {
        let _ = writeln!(out);
        for s in &r.series {
            let _ = writeln!(out, "{}", series_line(s));
        }
    }
    if let Some(t) = &r.timing {
        let _ = writeln!(out, "\ntimings (ms)");
        for (phase, ms) in t {
            let _ = writeln!(out, "  {phase:<10} {ms:.1}");
        }
    }
    out
}

fn md(r: &VerificationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# {} p = {}: {}\n",
        r.command,
        r.prime,
        r.status.as_str()
    );
    let _ = writeln!(out, "| check | status | detail |\n|---|---|---|");
    for c in &r.checks {
        let _ = writeln!(
            out,
            "| {} | {} | {} |",
            c.name,
            c.status.as_str(),
            c.detail.replace('|', "\\|")
        );
    }
    if let Some(t) = &r.tables.weight_table {
        let _ = writeln!(out, "\n## Weight space dimensions\n");
        let header: Vec<String> = (0..t.p).map(|l| format!("λ={l}")).collect();
        let _ = writeln!(out, "| module | {} |", header.join(" | "));
        let _ = writeln!(out, "|---|{}", "---|".repeat(t.p as usize));
        for row in &t.rows {
            let cells: Vec<String> = row.observed.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "| {} | {} |", row.module, cells.join(" | "));
        }
    }
    for t in &r.tables.chains {
        let _ = writeln!(out, "\n## {} (dim {})\n", t.module, t.dim);
        let _ = writeln!(out, "| i | dim | factor | generator |\n|---|---|---|---|");
        for row in &t.rows {
            let _ = writeln!(
                out,
                "| {} | {} | {} = {} | {} |",
                row.degree, row.dim, row.factor_lowest, row.factor, row.generator
            );
        }
    }
    if !r.series.is_empty() {
        let _ = writeln!(out, "\n## Composition series\n");
        for s in &r.series {
            let _ = writeln!(out, "- {}", series_line(s));
        }
    }
    if let Some(t) = &r.timing {
        let _ = writeln!(out, "\n## Timings (ms)\n\n| phase | ms |\n|---|---|");
        for (phase, ms) in t {
            let _ = writeln!(out, "| {phase} | {ms:.1} |");
        }
    }
    out
}

/// Pretty JSON with keys sorted at every level.
fn json<T: serde::Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("reports serialize");
    let mut s = serde_json::to_string_pretty(&v).expect("values serialize");
    s.push('\n');
    s
}

pub fn render(r: &VerificationReport, format: Format) -> String {
    match format {
        Format::Text => text(r),
        Format::Md => md(r),
        Format::Json => json(r),
    }
}

/// Several primes at once; JSON becomes an array ordered as given.
pub fn render_batch(reports: &[VerificationReport], format: Format) -> String {
    match format {
        Format::Json => json(&reports),
        _ => reports
            .iter()
            .map(|r| render(r, format))
            .collect::<Vec<_>>()
            .join("\n"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::{Check, Status};

    fn sample() -> VerificationReport {
        let mut r = VerificationReport::new(5, "verify");
        r.push(Check::new("a.b", true, "fine"));
        r
    }

    #[test]
    fn json_keys_are_sorted() {
        let s = render(&sample(), Format::Json);
        let keys: Vec<usize> = ["checks", "command", "prime", "series", "status", "tables"]
            .iter()
            .map(|k| s.find(&format!("\n  \"{k}\"")).unwrap())
            .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
        assert!(!s.contains("timing"));
    }

    #[test]
    fn failing_check_flips_status() {
        let mut r = sample();
        r.push(Check::new("c", false, "broken"));
        assert_eq!(r.status, Status::Fail);
        assert!(render(&r, Format::Text).starts_with("verify p = 5: FAIL"));
        r.push(Check::skipped("d", "n/a"));
        assert_eq!(r.status, Status::Fail);
    }

    #[test]
    fn formats_parse() {
        assert_eq!("md".parse::<Format>().unwrap(), Format::Md);
        assert!("yaml".parse::<Format>().is_err());
    }
}
