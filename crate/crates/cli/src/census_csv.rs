//! `param,H,K,A,logK_over_logH,logA_over_logH`

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRow {
    pub param: String,
    pub h: usize,
    pub k: usize,
    pub a: usize,
}

impl CensusRow {
    fn ratio(&self, x: usize) -> String {
        if self.h <= 1 || x == 0 {
            return String::new();
        }
        significant((x as f64).ln() / (self.h as f64).ln(), 6)
    }
}

/// Fixed-point text with `digits` significant digits.
pub fn significant(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x:.prec$}", prec = digits.saturating_sub(1));
    }
    let magnitude = x.abs().log10().floor() as i64;
    let decimals = (digits as i64 - 1 - magnitude).max(0) as usize;
    let text = format!("{x:.decimals$}");
    // Rounding can carry into a new leading digit (0.9999996 -> 1.000000).
    let rounded: f64 = text.parse().expect("formatted float parses");
    if rounded != 0.0 && rounded.abs().log10().floor() as i64 > magnitude && decimals > 0 {
        format!("{x:.prec$}", prec = decimals - 1)
    } else {
        text
    }
}

pub fn emit_census_csv(rows: &[CensusRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["param", "H", "K", "A", "logK_over_logH", "logA_over_logH"]).expect("writing to memory");
    for r in rows {
        w.write_record([
            r.param.clone(),
            r.h.to_string(),
            r.k.to_string(),
            r.a.to_string(),
            r.ratio(r.k),
            r.ratio(r.a),
        ])
        .expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("ascii output")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(param: &str, h: usize, k: usize, a: usize) -> CensusRow {
        CensusRow { param: param.into(), h, k, a }
    }

    #[test]
    fn unit_ball_row() {
        let out = emit_census_csv(&[row("1", 9, 3, 2)]);
        assert_eq!(out, "param,H,K,A,logK_over_logH,logA_over_logH\n1,9,3,2,0.500000,0.315465\n");
    }

    #[test]
    fn empty_row() {
        let out = emit_census_csv(&[row("0", 0, 0, 0)]);
        assert!(out.ends_with("\n0,0,0,0,,\n"));
    }

    #[test]
    fn rows_in_order() {
        let out = emit_census_csv(&[row("1", 9, 3, 2), row("2", 5, 2, 2)]);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(lines[1].starts_with("1,") && lines[2].starts_with("2,"));
    }

    #[test]
    fn significant_digits() {
        assert_eq!(significant(1.0, 6), "1.00000");
        assert_eq!(significant(0.0123456789, 6), "0.0123457");
        assert_eq!(significant(0.99999996, 6), "1.00000");
        assert_eq!(significant(123.4567, 6), "123.457");
    }
}
