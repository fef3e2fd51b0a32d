use std::fmt;
use std::str::FromStr;

use super::MvError;

/// Which MV-algebra to build.
///
/// Text form: `chain:K`, `product:<spec>,<spec>[,...]` and `unit`. A nested
/// product factor is wrapped in parentheses, e.g.
/// `product:(product:chain:1,chain:1),chain:2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraSpec {
    /// The Łukasiewicz chain `{0, 1/k, …, 1}`.
    Chain(u32),
    /// Finite direct product, carrier in lexicographic order.
    Product(Vec<AlgebraSpec>),
    /// `[0, 1]` on exact rationals.
    UnitInterval,
}

impl AlgebraSpec {
    pub fn chain(k: u32) -> Self {
        AlgebraSpec::Chain(k)
    }

    pub fn product(factors: impl IntoIterator<Item = AlgebraSpec>) -> Self {
        AlgebraSpec::Product(factors.into_iter().collect())
    }

    pub fn is_finite(&self) -> bool {
        match self {
            AlgebraSpec::Chain(_) => true,
            AlgebraSpec::Product(fs) => fs.iter().all(AlgebraSpec::is_finite),
            AlgebraSpec::UnitInterval => false,
        }
    }

    /// Carrier size, `None` for the unit interval or on overflow.
    pub fn size(&self) -> Option<usize> {
        match self {
            AlgebraSpec::Chain(k) => (*k as usize).checked_add(1),
            AlgebraSpec::Product(fs) => fs
                .iter()
                .try_fold(1usize, |acc, f| acc.checked_mul(f.size()?)),
            AlgebraSpec::UnitInterval => None,
        }
    }

    /// Leaf chain coordinates `(numerator, denominator)` of the element with
    /// canonical index `idx`. Products flatten depth-first.
    pub fn coordinates(&self, idx: usize) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        self.push_coordinates(idx, &mut out);
        out
    }

    fn push_coordinates(&self, idx: usize, out: &mut Vec<(u32, u32)>) {
        match self {
            AlgebraSpec::Chain(k) => out.push((idx as u32, *k)),
            AlgebraSpec::Product(fs) => {
                for (f, digit) in fs.iter().zip(self.factor_digits(idx)) {
                    f.push_coordinates(digit, out);
                }
            }
            AlgebraSpec::UnitInterval => unreachable!("unit interval has no index coordinates"),
        }
    }

    /// Splits a product index into factor indices (first factor most significant).
    pub fn factor_digits(&self, mut idx: usize) -> Vec<usize> {
        match self {
            AlgebraSpec::Product(fs) => {
                let mut digits = vec![0; fs.len()];
                for (slot, f) in digits.iter_mut().zip(fs).rev() {
                    let size = f.size().expect("finite factor");
                    *slot = idx % size;
                    idx /= size;
                }
                digits
            }
            _ => vec![idx],
        }
    }

    /// Inverse of [`factor_digits`](Self::factor_digits).
    pub fn index_of_digits(&self, digits: &[usize]) -> usize {
        match self {
            AlgebraSpec::Product(fs) => fs
                .iter()
                .zip(digits)
                .fold(0, |acc, (f, &d)| acc * f.size().expect("finite factor") + d),
            _ => digits[0],
        }
    }

    /// Exact label of an element, e.g. `1/2` or `(0,1/2)`.
    pub fn label(&self, idx: usize) -> String {
        match self {
            AlgebraSpec::Chain(k) => fraction_label(idx as u32, *k),
            AlgebraSpec::Product(fs) => {
                let parts: Vec<String> = fs
                    .iter()
                    .zip(self.factor_digits(idx))
                    .map(|(f, d)| f.label(d))
                    .collect();
                format!("({})", parts.join(","))
            }
            AlgebraSpec::UnitInterval => unreachable!("unit interval has no index labels"),
        }
    }

    /// Decimal label, e.g. `0.5` or `(0,0.5)`.
    pub fn decimal_label(&self, idx: usize) -> String {
        match self {
            AlgebraSpec::Chain(k) => format_decimal(idx as f64 / *k as f64),
            AlgebraSpec::Product(fs) => {
                let parts: Vec<String> = fs
                    .iter()
                    .zip(self.factor_digits(idx))
                    .map(|(f, d)| f.decimal_label(d))
                    .collect();
                format!("({})", parts.join(","))
            }
            AlgebraSpec::UnitInterval => unreachable!("unit interval has no index labels"),
        }
    }
}

pub(crate) fn fraction_label(num: u32, den: u32) -> String {
    if num == 0 {
        return "0".into();
    }
    let g = gcd(num, den);
    let (n, d) = (num / g, den / g);
    if d == 1 {
        n.to_string()
    } else {
        format!("{n}/{d}")
    }
}

pub(crate) fn format_decimal(x: f64) -> String {
    let s = format!("{x:.6}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s.is_empty() {
        "0".into()
    } else {
        s.to_string()
    }
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraSpec::Chain(k) => write!(f, "chain:{k}"),
            AlgebraSpec::UnitInterval => write!(f, "unit"),
            AlgebraSpec::Product(fs) => {
                write!(f, "product:")?;
                for (i, factor) in fs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    if matches!(factor, AlgebraSpec::Product(_)) {
                        write!(f, "({factor})")?;
                    } else {
                        write!(f, "{factor}")?;
                    }
                }
                Ok(())
            }
        }
    }
}

impl FromStr for AlgebraSpec {
    type Err = MvError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_spec(s.trim()).map_err(|msg| MvError::BadSpec(s.to_string(), msg))
    }
}

fn parse_spec(s: &str) -> Result<AlgebraSpec, String> {
    let s = strip_parens(s);
    if s == "unit" {
        return Ok(AlgebraSpec::UnitInterval);
    }
    if let Some(k) = s.strip_prefix("chain:") {
        let k: u32 = k
            .trim()
            .parse()
            .map_err(|_| format!("chain length `{k}` is not a positive integer"))?;
        if k == 0 {
            return Err("chain length must be at least 1".into());
        }
        return Ok(AlgebraSpec::Chain(k));
    }
    if let Some(rest) = s.strip_prefix("product:") {
        let factors = split_top_level(rest)?
            .into_iter()
            .map(parse_spec)
            .collect::<Result<Vec<_>, _>>()?;
        if factors.is_empty() {
            return Err("product needs at least one factor".into());
        }
        if factors.iter().any(|f| !f.is_finite()) {
            return Err("product factors must be finite".into());
        }
        return Ok(AlgebraSpec::Product(factors));
    }
    Err("expected `chain:K`, `product:<spec>,<spec>` or `unit`".into())
}

fn strip_parens(s: &str) -> &str {
    let s = s.trim();
    if s.starts_with('(') && s.ends_with(')') {
        // only strip when the outer pair matches
        let mut depth = 0i32;
        for (i, c) in s.char_indices() {
            match c {
                '(' => depth += 1,
                ')' => {
                    depth -= 1;
                    if depth == 0 && i != s.len() - 1 {
                        return s;
                    }
                }
                _ => {}
            }
        }
        return strip_parens(&s[1..s.len() - 1]);
    }
    s
}

fn split_top_level(s: &str) -> Result<Vec<&str>, String> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err("unbalanced parentheses".into());
                }
            }
            ',' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err("unbalanced parentheses".into());
    }
    parts.push(&s[start..]);
    if parts.iter().any(|p| p.trim().is_empty()) {
        return Err("empty product factor".into());
    }
    Ok(parts)
}
