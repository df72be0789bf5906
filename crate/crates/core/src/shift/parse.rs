use std::collections::BTreeMap;

use super::{gamma, BiSeq, ShiftError, Symbol};

fn syntax(line: usize, message: impl Into<String>) -> ShiftError {
    ShiftError::Syntax {
        line,
        message: message.into(),
    }
}

fn word(line: usize, raw: &str, open: char, close: char) -> Result<Vec<Symbol>, ShiftError> {
    let inner = raw
        .strip_prefix(open)
        .and_then(|r| r.strip_suffix(close))
        .ok_or_else(|| syntax(line, format!("expected {open}...{close}, found `{raw}`")))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| syntax(line, format!("bad symbol `{s}`")))
        })
        .collect()
}

fn integer<T: std::str::FromStr>(line: usize, key: &str, raw: &str) -> Result<T, ShiftError> {
    raw.parse()
        .map_err(|_| syntax(line, format!("bad value for {key}: `{raw}`")))
}

fn parse_line(line: usize, text: &str) -> Result<BiSeq, ShiftError> {
    let mut tokens = text.split_whitespace();
    let head = tokens.next().ok_or_else(|| syntax(line, "empty sequence spec"))?;
    let mut fields = BTreeMap::new();
    for token in tokens {
        let (key, value) = token
            .split_once('=')
            .ok_or_else(|| syntax(line, format!("expected key=value, found `{token}`")))?;
        if fields.insert(key, value).is_some() {
            return Err(syntax(line, format!("duplicate key `{key}`")));
        }
    }
    let expected: &[&str] = match head {
        "seq" => &["left", "middle", "n", "right", "start"],
        "gamma" => &["m", "n", "shift"],
        other => return Err(syntax(line, format!("unknown sequence kind `{other}`"))),
    };
    let keys: Vec<&str> = fields.keys().copied().collect();
    if keys != expected {
        return Err(syntax(
            line,
            format!("`{head}` takes exactly the keys {}", expected.join(", ")),
        ));
    }
    let n: u32 = integer(line, "n", fields["n"])?;
    if head == "gamma" {
        let m: Symbol = integer(line, "m", fields["m"])?;
        let shift: i64 = integer(line, "shift", fields["shift"])?;
        return Ok(gamma(m, n)?.shift(shift));
    }
    BiSeq::new(
        n,
        word(line, fields["left"], '(', ')')?,
        word(line, fields["middle"], '[', ']')?,
        integer(line, "start", fields["start"])?,
        word(line, fields["right"], '(', ')')?,
    )
}

/// Parses one `seq ...` or `gamma ...` spec.
pub fn parse_sequence(text: &str) -> Result<BiSeq, ShiftError> {
    parse_line(1, text.trim())
}

/// One sequence spec per line; blank lines and `#` comments are skipped.
pub fn parse_sample(text: &str) -> Result<Vec<BiSeq>, ShiftError> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let body = raw.split('#').next().unwrap_or("").trim();
            (!body.is_empty()).then(|| parse_line(i + 1, body))
        })
        .collect()
}
