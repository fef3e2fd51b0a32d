use super::{FiniteSemimodule, SemimoduleError};

/// Reads a semimodule description over the scalars of `ambient`.
///
/// Two shapes are accepted, with `#` starting a comment:
///
/// ```text
/// subset 0 1/2
/// ```
///
/// names a subsemimodule of `ambient` by labels, while
///
/// ```text
/// elements 0 x 1
/// zero 0
/// join
/// 0 x 1
/// x x 1
/// 1 1 1
/// action
/// 0 0 0
/// 0 x 1
/// ```
///
/// gives full tables, one `action` row per scalar in carrier order.
pub fn parse_module(text: &str, ambient: &FiniteSemimodule) -> Result<FiniteSemimodule, SemimoduleError> {
    let lines: Vec<(usize, Vec<&str>)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").split_whitespace().collect::<Vec<_>>()))
        .filter(|(_, w)| !w.is_empty())
        .collect();
    let err = |line: usize, msg: String| SemimoduleError::Parse { line, msg };
    let Some((first_line, head)) = lines.first() else {
        return Err(err(0, "empty module description".into()));
    };
    match head[0] {
        "subset" => {
            if lines.len() > 1 {
                return Err(err(lines[1].0, "unexpected content after `subset`".into()));
            }
            let members = head[1..]
                .iter()
                .map(|l| {
                    ambient
                        .index_of(l)
                        .ok_or_else(|| err(*first_line, format!("unknown element `{l}`")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            ambient.submodule(&members)
        }
        "elements" => parse_tables(&lines, ambient),
        other => Err(err(*first_line, format!("expected `subset` or `elements`, found `{other}`"))),
    }
}

fn parse_tables(lines: &[(usize, Vec<&str>)], ambient: &FiniteSemimodule) -> Result<FiniteSemimodule, SemimoduleError> {
    let err = |line: usize, msg: String| SemimoduleError::Parse { line, msg };
    let labels: Vec<String> = lines[0].1[1..].iter().map(|s| s.to_string()).collect();
    let n = labels.len();
    let s = ambient.ring().len();
    let lookup = |line: usize, l: &str| {
        labels
            .iter()
            .position(|x| x == l)
            .ok_or_else(|| err(line, format!("unknown element `{l}`")))
    };
    let mut zero = None;
    let mut join = Vec::new();
    let mut action = Vec::new();
    let mut i = 1;
    while i < lines.len() {
        let (line, words) = &lines[i];
        match words[0] {
            "zero" if words.len() == 2 => {
                zero = Some(lookup(*line, words[1])?);
                i += 1;
            }
            "join" | "action" => {
                let rows = if words[0] == "join" { n } else { s };
                let target = if words[0] == "join" { &mut join } else { &mut action };
                for r in 0..rows {
                    let Some((row_line, row)) = lines.get(i + 1 + r) else {
                        return Err(err(*line, format!("`{}` needs {rows} rows", words[0])));
                    };
                    if row.len() != n {
                        return Err(err(*row_line, format!("expected {n} entries")));
                    }
                    for w in row {
                        target.push(lookup(*row_line, w)?);
                    }
                }
                i += 1 + rows;
            }
            other => return Err(err(*line, format!("unexpected `{other}`"))),
        }
    }
    let zero = zero.ok_or_else(|| err(lines[0].0, "missing `zero` line".into()))?;
    if join.is_empty() || action.is_empty() {
        return Err(err(lines[0].0, "both `join` and `action` tables are required".into()));
    }
    FiniteSemimodule::new(ambient.ring().clone(), labels, join, zero, action)
}
