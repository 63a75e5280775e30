//! Figure data: distance surfaces and envelope nets as CSV.
//!
//! Output is a pure function of the arguments. Rows are computed in parallel
//! and written in grid order.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use rayon::prelude::*;

use crate::distances::NamedDistance;
use crate::envelopes::{EnvFamily, Side};
use crate::error::{invalid, GbdError, Result};
use crate::scalar::ExtReal;

pub const CSV_MAGIC: &str = "# gbd-kit v1";

/// `n` evenly spaced points from `lo` to `hi`, written `lo:hi:n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    lo: f64,
    hi: f64,
    n: usize,
}

impl GridSpec {
    pub fn new(lo: f64, hi: f64, n: usize) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(invalid("grid", format!("need finite lo < hi, got {lo}:{hi}")));
        }
        if n < 2 {
            return Err(invalid("grid", format!("need n >= 2, got {n}")));
        }
        Ok(Self { lo, hi, n })
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn points(&self) -> Vec<f64> {
        let span = self.hi - self.lo;
        let last = self.n - 1;
        (0..self.n)
            .map(|i| {
                if i == last {
                    self.hi
                } else {
                    self.lo + span * i as f64 / last as f64
                }
            })
            .collect()
    }
}

impl FromStr for GridSpec {
    type Err = GbdError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || invalid("grid", format!("expected lo:hi:n, got {s:?}"));
        let parts: Vec<&str> = s.split(':').collect();
        let [lo, hi, n] = parts[..] else {
            return Err(bad());
        };
        let lo: f64 = lo.trim().parse().map_err(|_| bad())?;
        let hi: f64 = hi.trim().parse().map_err(|_| bad())?;
        let n: usize = n.trim().parse().map_err(|_| bad())?;
        GridSpec::new(lo, hi, n)
    }
}

impl fmt::Display for GridSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.lo, self.hi, self.n)
    }
}

/// C's `%.17g`: 17 significant digits, trailing zeros dropped, scientific
/// notation below `1e-4` and from `1e17` up.
pub fn fmt_g17(v: f64) -> String {
    const P: i32 = 17;
    if v.is_nan() {
        return "nan".into();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if v == 0.0 {
        return if v.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    let sci = format!("{:.*e}", (P - 1) as usize, v);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..P).contains(&exp) {
        let m = strip_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{m}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (P - 1 - exp) as usize;
        strip_zeros(&format!("{:.*}", decimals, v)).to_string()
    }
}

fn strip_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Value cell: `-0` is written as `0` so that a zero distance always reads `0`.
fn cell(v: ExtReal) -> String {
    match v {
        ExtReal::Finite(x) => fmt_g17(x + 0.0),
        ExtReal::PosInf => "inf".into(),
        ExtReal::NegInf => "-inf".into(),
    }
}

/// Rows `x,y,value` over the product grid, `x` outermost.
pub fn write_dist_csv(
    out: &mut impl Write,
    dist: NamedDistance,
    grid_x: &GridSpec,
    grid_y: &GridSpec,
) -> Result<()> {
    let xs = grid_x.points();
    let ys = grid_y.points();
    let rows: Vec<String> = xs
        .par_iter()
        .flat_map_iter(|&x| {
            ys.iter()
                .map(move |&y| format!("{},{},{}", fmt_g17(x), fmt_g17(y), cell(dist.eval(x, y))))
        })
        .collect();
    writeln!(out, "{CSV_MAGIC}")?;
    writeln!(out, "x,y,value")?;
    for r in rows {
        writeln!(out, "{r}")?;
    }
    Ok(())
}

/// Rows `gamma,x,env,prox_lo,prox_hi`, one block per `γ` in the given order.
/// An empty prox is written as `inf,-inf`.
pub fn write_env_csv(
    out: &mut impl Write,
    side: Side,
    dist: NamedDistance,
    gammas: &[f64],
    grid: &GridSpec,
) -> Result<()> {
    let family = EnvFamily::new(side, dist);
    let xs = grid.points();
    let cases: Vec<(f64, f64)> = gammas.iter().flat_map(|&g| xs.iter().map(move |&x| (g, x))).collect();
    let rows = cases
        .par_iter()
        .map(|&(g, x)| -> Result<String> {
            let env = family.envelope(g, x)?;
            let p = family.prox(g, x)?;
            let (lo, hi) = if p.set.is_empty() {
                (ExtReal::PosInf, ExtReal::NegInf)
            } else {
                (p.set.lo(), p.set.hi())
            };
            Ok(format!("{},{},{},{},{}", fmt_g17(g), fmt_g17(x), cell(env), cell(lo), cell(hi)))
        })
        .collect::<Result<Vec<_>>>()?;
    writeln!(out, "{CSV_MAGIC}")?;
    writeln!(out, "gamma,x,env,prox_lo,prox_hi")?;
    for r in rows {
        writeln!(out, "{r}")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g17_matches_c() {
        // reference strings from printf("%.17g")
        let cases = [
            (0.1, "0.10000000000000001"),
            (0.05, "0.050000000000000003"),
            (1.0, "1"),
            (3.0, "3"),
            (1.5, "1.5"),
            (-2.25, "-2.25"),
            (1e-5, "1.0000000000000001e-05"),
            (1e17, "1e+17"),
            (1e16, "10000000000000000"),
            (123456.789, "123456.789"),
            (0.0001, "0.0001"),
            (std::f64::consts::PI, "3.1415926535897931"),
            (1e300, "1.0000000000000001e+300"),
            (5e-324, "4.9406564584124654e-324"),
        ];
        for (v, want) in cases {
            assert_eq!(fmt_g17(v), want, "{v}");
        }
        assert_eq!(fmt_g17(f64::INFINITY), "inf");
        assert_eq!(fmt_g17(f64::NEG_INFINITY), "-inf");
    }

    #[test]
    fn g17_round_trips() {
        for v in [0.1, 1.0 / 3.0, 2.0f64.sqrt(), 1e-300, 6.02e23, -7.5e-7] {
            assert_eq!(fmt_g17(v).parse::<f64>().unwrap(), v);
        }
    }

    #[test]
    fn grid_parsing() {
        let g: GridSpec = "0:3:61".parse().unwrap();
        assert_eq!(g.points().len(), 61);
        assert_eq!(g.points()[20], 1.0);
        assert_eq!(g.points()[60], 3.0);
        for bad in ["3:0:10", "0:1:1", "0:1", "a:1:3", "0:1:3:4", "0:inf:3"] {
            assert!(bad.parse::<GridSpec>().is_err(), "{bad}");
        }
    }

    #[test]
    fn dist_csv_header_and_rows() {
        let mut buf = Vec::new();
        let g = GridSpec::new(0.0, 3.0, 4).unwrap();
        write_dist_csv(&mut buf, NamedDistance::Kl, &g, &g).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], CSV_MAGIC);
        assert_eq!(lines[1], "x,y,value");
        assert_eq!(lines.len(), 2 + 16);
        assert!(lines.contains(&"0,1,1"));
        assert!(lines.contains(&"1,0,inf"));
    }

    #[test]
    fn env_csv_writes_empty_prox_as_inf_minus_inf() {
        let mut buf = Vec::new();
        let g = GridSpec::new(-1.0, 1.0, 3).unwrap();
        write_env_csv(&mut buf, Side::Left, NamedDistance::Kl, &[1.0], &g).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.contains("\n1,-1,inf,inf,-inf\n"), "{text}");
    }
}
