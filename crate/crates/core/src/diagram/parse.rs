//! Diagram notation parsers.
//!
//! The canonical text form is PD: one diagram per line, `X(a,b,c,d)` terms
//! with positive integer edge labels listed counterclockwise from the incoming
//! understrand, an optional `label:` prefix, and `%` comments. Gauss codes
//! (`gauss: O1+ U2+ ...`, signs optional, components separated by `;`) and DT
//! codes (`dt: 4 6 2`) are converted to PD internally; for unsigned codes the
//! planar sign assignment is recovered by search and validated through the
//! Euler count.

use super::LinkDiagram;
use crate::error::DiagramError;
use serde::{Deserialize, Serialize};

/// JSON mirror of the PD format.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PdJson {
    pub crossings: Vec<[u64; 4]>,
    /// Optional per-crossing signs. Shape-checked when present (one entry in
    /// {-1, +1} per crossing) and kept as annotation; the rotation system in
    /// `crossings` is authoritative.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub signs: Option<Vec<i8>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

/// Parse one diagram from a single line of text (PD, `gauss:`, or `dt:`).
pub fn parse_diagram(line: &str) -> Result<LinkDiagram, DiagramError> {
    let stripped = strip_comment(line).trim();
    if stripped.is_empty() {
        return Err(DiagramError::NoCrossings);
    }
    let lower = stripped.to_ascii_lowercase();
    if lower.starts_with("gauss") {
        let (label, body) = split_prefixed(stripped, "gauss")?;
        return parse_gauss(body, label);
    }
    if lower.starts_with("dt") {
        let (label, body) = split_prefixed(stripped, "dt")?;
        return parse_dt(body, label);
    }
    parse_pd_line(stripped)
}

/// Parse a multi-line text: one diagram per nonempty line. Returns one result
/// per line, tagged with its 1-based line number.
pub fn parse_collection(text: &str) -> Vec<(usize, Result<LinkDiagram, DiagramError>)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, line)| {
            let stripped = strip_comment(line);
            if stripped.trim().is_empty() {
                None
            } else {
                Some((i + 1, parse_diagram(stripped)))
            }
        })
        .collect()
}

/// Parse the JSON mirror format.
pub fn parse_diagram_json(text: &str) -> Result<LinkDiagram, DiagramError> {
    let pd: PdJson =
        serde_json::from_str(text).map_err(|e| DiagramError::Syntax(format!("json: {e}")))?;
    if let Some(signs) = &pd.signs {
        if signs.len() != pd.crossings.len() {
            return Err(DiagramError::Syntax(format!(
                "signs has {} entries for {} crossings",
                signs.len(),
                pd.crossings.len()
            )));
        }
        if signs.iter().any(|s| *s != 1 && *s != -1) {
            return Err(DiagramError::Syntax("signs entries must be +1 or -1".into()));
        }
    }
    LinkDiagram::from_pd(&pd.crossings, pd.label.unwrap_or_default())
}

fn strip_comment(line: &str) -> &str {
    match line.find('%') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Split `<keyword>[ label]: body`.
fn split_prefixed<'a>(line: &'a str, keyword: &str) -> Result<(String, &'a str), DiagramError> {
    let rest = &line[keyword.len()..];
    let colon = rest
        .find(':')
        .ok_or_else(|| DiagramError::Syntax(format!("expected ':' after '{keyword}'")))?;
    let label = rest[..colon].trim().to_string();
    Ok((label, rest[colon + 1..].trim()))
}

fn parse_pd_line(line: &str) -> Result<LinkDiagram, DiagramError> {
    // optional label before the first X-term
    let (label, body) = match (line.find(':'), line.find('X')) {
        (Some(c), Some(x)) if c < x => (line[..c].trim().to_string(), &line[c + 1..]),
        _ => (String::new(), line),
    };
    let mut rows = Vec::new();
    let mut rest = body.trim_start();
    while !rest.is_empty() {
        if let Some(stripped) = rest.strip_prefix(',') {
            rest = stripped.trim_start();
            continue;
        }
        if !rest.starts_with('X') {
            return Err(DiagramError::Syntax(format!(
                "expected X(...) term at '{}'",
                rest.chars().take(12).collect::<String>()
            )));
        }
        let after_x = &rest[1..];
        let (open, close) = match after_x.chars().next() {
            Some('(') => ('(', ')'),
            Some('[') => ('[', ']'),
            _ => return Err(DiagramError::Syntax("expected '(' or '[' after X".into())),
        };
        let _ = open;
        let end = after_x
            .find(close)
            .ok_or_else(|| DiagramError::Syntax(format!("unterminated X{open}...")))?;
        let args: Vec<&str> = after_x[1..end].split(',').map(str::trim).collect();
        if args.len() != 4 {
            return Err(DiagramError::NotFourValent(format!(
                "crossing with {} incident edges",
                args.len()
            )));
        }
        let mut row = [0u64; 4];
        for (i, a) in args.iter().enumerate() {
            row[i] = a
                .parse::<u64>()
                .ok()
                .filter(|&v| v > 0)
                .ok_or_else(|| DiagramError::Syntax(format!("bad edge label '{a}'")))?;
        }
        rows.push(row);
        rest = after_x[end + 1..].trim_start();
    }
    if rows.is_empty() {
        return Err(DiagramError::NoCrossings);
    }
    LinkDiagram::from_pd(&rows, label)
}

#[derive(Debug, Clone, Copy)]
struct GaussEntry {
    over: bool,
    crossing: usize,
    sign: Option<i8>,
}

fn parse_gauss(body: &str, label: String) -> Result<LinkDiagram, DiagramError> {
    let mut components: Vec<Vec<GaussEntry>> = Vec::new();
    let mut labels: Vec<u64> = Vec::new();
    for comp_text in body.split(';') {
        let mut entries = Vec::new();
        for tok in comp_text.split([' ', ',', '\t']).filter(|t| !t.is_empty()) {
            let mut chars = tok.chars();
            let over = match chars.next() {
                Some('O') | Some('o') => true,
                Some('U') | Some('u') => false,
                _ => {
                    return Err(DiagramError::Syntax(format!(
                        "gauss entry '{tok}' must start with O or U"
                    )))
                }
            };
            let rest: String = chars.collect();
            let (num_part, sign) = match rest.chars().last() {
                Some('+') => (&rest[..rest.len() - 1], Some(1i8)),
                Some('-') => (&rest[..rest.len() - 1], Some(-1i8)),
                _ => (rest.as_str(), None),
            };
            let lab: u64 = num_part
                .parse()
                .map_err(|_| DiagramError::Syntax(format!("bad gauss entry '{tok}'")))?;
            let crossing = match labels.iter().position(|&l| l == lab) {
                Some(i) => i,
                None => {
                    labels.push(lab);
                    labels.len() - 1
                }
            };
            entries.push(GaussEntry { over, crossing, sign });
        }
        if !entries.is_empty() {
            components.push(entries);
        }
    }
    let n = labels.len();
    if n == 0 {
        return Err(DiagramError::NoCrossings);
    }
    let all: Vec<&GaussEntry> = components.iter().flatten().collect();
    for c in 0..n {
        let overs = all.iter().filter(|e| e.crossing == c && e.over).count();
        let unders = all.iter().filter(|e| e.crossing == c && !e.over).count();
        if overs != 1 || unders != 1 {
            return Err(DiagramError::Syntax(format!(
                "crossing {} needs exactly one O and one U pass",
                labels[c]
            )));
        }
    }
    let signed = all.iter().filter(|e| e.sign.is_some()).count();
    if signed == all.len() {
        let signs: Vec<i8> = {
            let mut signs = vec![0i8; n];
            for e in &all {
                let s = e.sign.unwrap();
                if signs[e.crossing] != 0 && signs[e.crossing] != s {
                    return Err(DiagramError::Syntax(format!(
                        "conflicting signs at crossing {}",
                        labels[e.crossing]
                    )));
                }
                signs[e.crossing] = s;
            }
            signs
        };
        gauss_to_diagram(&components, &signs, label)
    } else if signed == 0 {
        realize_unsigned(&components, n, label)
    } else {
        Err(DiagramError::Syntax(
            "gauss code must be fully signed or fully unsigned".into(),
        ))
    }
}

/// Search over sign assignments for a planar realization. Deterministic:
/// the first assignment (counting up in binary, + for 0) that passes the
/// Euler check wins.
fn realize_unsigned(
    components: &[Vec<GaussEntry>],
    n: usize,
    label: String,
) -> Result<LinkDiagram, DiagramError> {
    const LIMIT: usize = 16;
    if n > LIMIT {
        return Err(DiagramError::SearchTooLarge { limit: LIMIT, got: n });
    }
    for mask in 0u64..(1 << n) {
        let signs: Vec<i8> = (0..n)
            .map(|i| if mask >> i & 1 == 0 { 1 } else { -1 })
            .collect();
        if let Ok(d) = gauss_to_diagram(components, &signs, label.clone()) {
            return Ok(d);
        }
    }
    Err(DiagramError::Unrealizable)
}

/// Lay out crossings from a signed Gauss code and hand off to the PD builder.
///
/// Slot convention per crossing: understrand enters at slot 0 and leaves at
/// slot 2; a positive crossing has the overstrand entering at slot 1 and
/// leaving at slot 3, a negative one the reverse.
fn gauss_to_diagram(
    components: &[Vec<GaussEntry>],
    signs: &[i8],
    label: String,
) -> Result<LinkDiagram, DiagramError> {
    let n = signs.len();
    let mut rows = vec![[0u64; 4]; n];
    let mut next_edge = 1u64;
    for comp in components {
        let m = comp.len();
        for i in 0..m {
            let cur = comp[i];
            let nxt = comp[(i + 1) % m];
            let exit_slot = |e: &GaussEntry| -> usize {
                if !e.over {
                    2
                } else if signs[e.crossing] > 0 {
                    3
                } else {
                    1
                }
            };
            let entry_slot = |e: &GaussEntry| -> usize {
                if !e.over {
                    0
                } else if signs[e.crossing] > 0 {
                    1
                } else {
                    3
                }
            };
            let lab = next_edge;
            next_edge += 1;
            rows[cur.crossing][exit_slot(&cur)] = lab;
            rows[nxt.crossing][entry_slot(&nxt)] = lab;
        }
    }
    if rows.iter().any(|r| r.contains(&0)) {
        return Err(DiagramError::Syntax("gauss code leaves unused crossing slots".into()));
    }
    LinkDiagram::from_pd(&rows, label)
}

/// DT code for a knot: the even partner of each odd pass 1, 3, 5, ...; a
/// negative value marks the even-numbered pass as the overpass.
fn parse_dt(body: &str, label: String) -> Result<LinkDiagram, DiagramError> {
    if body.contains(';') {
        return Err(DiagramError::DtMultiComponent);
    }
    let vals: Vec<i64> = body
        .split([' ', ',', '\t'])
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<i64>()
                .map_err(|_| DiagramError::DtInvalid(format!("bad entry '{t}'")))
        })
        .collect::<Result<_, _>>()?;
    let n = vals.len();
    if n == 0 {
        return Err(DiagramError::NoCrossings);
    }
    let mut pos_crossing = vec![usize::MAX; 2 * n + 1];
    for (i, &v) in vals.iter().enumerate() {
        let a = v.unsigned_abs() as usize;
        if v == 0 || a % 2 != 0 || a > 2 * n {
            return Err(DiagramError::DtInvalid(format!("entry {v} out of range")));
        }
        let odd = 2 * i + 1;
        if pos_crossing[a] != usize::MAX {
            return Err(DiagramError::DtInvalid(format!("even label {a} repeated")));
        }
        pos_crossing[odd] = i;
        pos_crossing[a] = i;
    }
    // one component walking positions 1..=2n in order
    let entries: Vec<GaussEntry> = (1..=2 * n)
        .map(|p| {
            let c = pos_crossing[p];
            let over = if p % 2 == 1 { vals[c] > 0 } else { vals[c] < 0 };
            GaussEntry { over, crossing: c, sign: None }
        })
        .collect();
    realize_unsigned(&[entries], n, label)
}
