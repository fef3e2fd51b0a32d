//! Plain-text form of finite algebras.
//!
//! ```text
//! chain 4                      # or: product chain:2,chain:2   or: table 3
//! labels 0 1/2 1               # optional; required names for `table`
//! zero 0                       # optional, defaults to 0
//! oplus                        # optional explicit tables (n rows of n indices)
//! 0 1 2
//! 1 2 2
//! 2 2 2
//! star
//! 2 1 0
//! ```
//!
//! Explicit tables replace the ones computed from the header without any law
//! check, which is how corrupted algebras are fed to the axiom checker.

use super::{AlgebraSpec, FiniteMv, MvError};

fn err(line: usize, msg: impl Into<String>) -> MvError {
    MvError::Parse {
        line,
        msg: msg.into(),
    }
}

impl FiniteMv {
    pub fn from_text(text: &str) -> Result<Self, MvError> {
        let lines: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty())
            .collect();
        let Some(&(hline, header)) = lines.first() else {
            return Err(err(0, "empty input"));
        };
        let (kind, rest) = header.split_once(char::is_whitespace).unwrap_or((header, ""));
        let rest = rest.trim();
        let base: Option<FiniteMv> = match kind {
            "chain" => {
                let spec: AlgebraSpec = format!("chain:{rest}").parse().map_err(|e: MvError| err(hline, e.to_string()))?;
                Some(FiniteMv::from_spec(&spec)?)
            }
            "product" => {
                let spec: AlgebraSpec = format!("product:{rest}").parse().map_err(|e: MvError| err(hline, e.to_string()))?;
                Some(FiniteMv::from_spec(&spec)?)
            }
            "table" => None,
            other => return Err(err(hline, format!("unknown header `{other}`"))),
        };
        let n = match &base {
            Some(b) => b.len(),
            None => rest
                .parse::<usize>()
                .map_err(|_| err(hline, "table size must be a positive integer"))?,
        };
        if n == 0 {
            return Err(err(hline, "empty carrier"));
        }

        let mut labels: Option<Vec<String>> = None;
        let mut zero = base.as_ref().map_or(0, |b| b.zero_ix());
        let mut oplus: Option<Vec<usize>> = None;
        let mut star: Option<Vec<usize>> = None;
        let mut i = 1;
        let parse_row = |line: usize, s: &str, len: usize| -> Result<Vec<usize>, MvError> {
            let row = s
                .split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| err(line, format!("bad index `{t}`"))))
                .collect::<Result<Vec<_>, _>>()?;
            if row.len() != len {
                return Err(err(line, format!("expected {len} entries, found {}", row.len())));
            }
            Ok(row)
        };
        while i < lines.len() {
            let (ln, line) = lines[i];
            let (key, tail) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            match key {
                "labels" => {
                    let ls: Vec<String> = tail.split_whitespace().map(str::to_string).collect();
                    if ls.len() != n {
                        return Err(err(ln, format!("expected {n} labels")));
                    }
                    labels = Some(ls);
                    i += 1;
                }
                "zero" => {
                    zero = tail.trim().parse().map_err(|_| err(ln, "bad zero index"))?;
                    i += 1;
                }
                "oplus" => {
                    let mut table = Vec::with_capacity(n * n);
                    for r in 0..n {
                        let &(rl, row) = lines.get(i + 1 + r).ok_or_else(|| err(ln, "truncated oplus table"))?;
                        table.extend(parse_row(rl, row, n)?);
                    }
                    oplus = Some(table);
                    i += n + 1;
                }
                "star" => {
                    let &(rl, row) = lines.get(i + 1).ok_or_else(|| err(ln, "missing star row"))?;
                    star = Some(parse_row(rl, row, n)?);
                    i += 2;
                }
                other => return Err(err(ln, format!("unknown section `{other}`"))),
            }
        }
        match base {
            Some(b) if labels.is_none() && oplus.is_none() && star.is_none() && zero == b.zero_ix() => Ok(b),
            Some(b) => FiniteMv::from_tables(
                labels.unwrap_or_else(|| b.labels().to_vec()),
                oplus.unwrap_or_else(|| b.oplus_table().to_vec()),
                star.unwrap_or_else(|| b.star_table().to_vec()),
                zero,
            ),
            None => FiniteMv::from_tables(
                labels.unwrap_or_else(|| (0..n).map(|i| i.to_string()).collect()),
                oplus.ok_or_else(|| err(hline, "table algebra needs an oplus table"))?,
                star.ok_or_else(|| err(hline, "table algebra needs a star row"))?,
                zero,
            ),
        }
    }

    /// Header line, plus explicit tables when `with_tables` is set or when
    /// the algebra has no spec.
    pub fn to_text(&self, with_tables: bool) -> String {
        let mut out = String::new();
        let with_tables = with_tables || self.spec().is_none();
        match self.spec() {
            Some(AlgebraSpec::Chain(k)) => out.push_str(&format!("chain {k}\n")),
            Some(spec @ AlgebraSpec::Product(_)) => {
                let s = spec.to_string();
                out.push_str(&format!("product {}\n", s.trim_start_matches("product:")));
            }
            _ => {
                out.push_str(&format!("table {}\n", self.len()));
                out.push_str(&format!("labels {}\n", self.labels().join(" ")));
            }
        }
        if with_tables {
            if self.zero_ix() != 0 {
                out.push_str(&format!("zero {}\n", self.zero_ix()));
            }
            out.push_str("oplus\n");
            let n = self.len();
            for r in 0..n {
                let row: Vec<String> = self.oplus_table()[r * n..(r + 1) * n].iter().map(usize::to_string).collect();
                out.push_str(&row.join(" "));
                out.push('\n');
            }
            out.push_str("star\n");
            let row: Vec<String> = self.star_table().iter().map(usize::to_string).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}
