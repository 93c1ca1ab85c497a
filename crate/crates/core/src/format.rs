//! Plain-text interpretation files.
//!
//! ```text
//! # comment
//! concepts A
//! roles r
//! individuals a b
//! features I O
//! domain u u' v1
//! ind a u
//! ind b u'
//! concept A v1 0.7
//! role r u v1 0.5
//! ```

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use thiserror::Error;

use crate::degree::Degree;
use crate::model::{Features, FuzzyInterpretation, InterpretationBuilder, Signature};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

fn fail<T>(line: usize, column: usize, message: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError { line, column, message: message.into() })
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter().map(|(s, t)| (line[..s].chars().count() + 1, t)).collect()
}

fn rank(keyword: &str) -> Option<u8> {
    Some(match keyword {
        "concepts" => 0,
        "roles" => 1,
        "individuals" => 2,
        "features" => 3,
        "domain" => 4,
        "ind" => 5,
        "concept" => 6,
        "role" => 7,
        _ => return None,
    })
}

fn degree(line: usize, (col, tok): (usize, &str)) -> Result<Degree, FormatError> {
    let d: Degree = match tok.parse() {
        Ok(d) => d,
        Err(e) => return fail(line, col, e.to_string()),
    };
    if d.is_zero() {
        return fail(line, col, "zero degree (omit facts with degree 0)");
    }
    Ok(d)
}

/// Parses and validates an interpretation file.
pub fn parse_interpretation(text: &str) -> Result<FuzzyInterpretation, FormatError> {
    let mut headers: [Option<Vec<String>>; 3] = [None, None, None];
    let mut features = Features::NONE;
    let mut last_rank = 0u8;
    let mut builder: Option<InterpretationBuilder> = None;
    let mut elements: HashMap<String, ()> = HashMap::new();
    let mut inds: HashSet<String> = HashSet::new();
    let mut facts: HashSet<(u8, String, String, String)> = HashSet::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let toks = tokens(raw);
        if toks.is_empty() || toks[0].1.starts_with('#') {
            continue;
        }
        let (kcol, kw) = toks[0];
        let Some(r) = rank(kw) else {
            return fail(line, kcol, format!("unknown keyword `{kw}`"));
        };
        if r < last_rank || (r <= 3 && r == last_rank && r != 0) || (r == 0 && headers[0].is_some()) {
            return fail(line, kcol, format!("`{kw}` out of order"));
        }
        last_rank = r;
        let args = &toks[1..];
        if r <= 2 {
            headers[r as usize] = Some(args.iter().map(|t| t.1.to_string()).collect());
            continue;
        }
        if r == 3 {
            for &(col, t) in args {
                match t {
                    "I" => features.inverse = true,
                    "O" => features.nominals = true,
                    _ => return fail(line, col, format!("unknown feature `{t}` (expected I or O)")),
                }
            }
            continue;
        }
        if builder.is_none() {
            let [c, ro, i] = &headers;
            let (Some(c), Some(ro), Some(i)) = (c, ro, i) else {
                return fail(line, kcol, "`concepts`, `roles` and `individuals` must come first");
            };
            match Signature::new(c.clone(), ro.clone(), i.clone(), features) {
                Ok(sig) => builder = Some(InterpretationBuilder::new(sig)),
                Err(e) => return fail(line, kcol, e.to_string()),
            }
        }
        let b = builder.as_mut().expect("created above");
        let sig = b.signature().clone();
        let arity = [0, 0, 0, 0, usize::MAX, 2, 3, 4][r as usize];
        if r != 4 && args.len() != arity {
            return fail(line, kcol, format!("`{kw}` takes {arity} arguments, found {}", args.len()));
        }
        let elem = |(col, t): (usize, &str)| -> Result<String, FormatError> {
            if elements.contains_key(t) {
                Ok(t.to_string())
            } else {
                fail(line, col, format!("unknown element `{t}`"))
            }
        };
        match r {
            4 => {
                for &(col, t) in args {
                    if elements.insert(t.to_string(), ()).is_some() {
                        return fail(line, col, format!("element `{t}` declared twice"));
                    }
                    b.element(t);
                }
            }
            5 => {
                let (col, a) = args[0];
                if sig.individual_index(a).is_none() {
                    return fail(line, col, format!("unknown individual `{a}`"));
                }
                if !inds.insert(a.to_string()) {
                    return fail(line, col, format!("individual `{a}` mapped twice"));
                }
                let x = elem(args[1])?;
                b.individual(a, x);
            }
            6 => {
                let (col, c) = args[0];
                if sig.concept_index(c).is_none() {
                    return fail(line, col, format!("unknown concept `{c}`"));
                }
                let x = elem(args[1])?;
                let d = degree(line, args[2])?;
                if !facts.insert((6, c.to_string(), x.clone(), String::new())) {
                    return fail(line, kcol, format!("duplicate fact for `{c}` at `{x}`"));
                }
                b.concept(c, x, d);
            }
            _ => {
                let (col, ro) = args[0];
                if sig.role_index(ro).is_none() {
                    return fail(line, col, format!("unknown role `{ro}`"));
                }
                let x = elem(args[1])?;
                let y = elem(args[2])?;
                let d = degree(line, args[3])?;
                if !facts.insert((7, ro.to_string(), x.clone(), y.clone())) {
                    return fail(line, kcol, format!("duplicate fact for `{ro}` from `{x}` to `{y}`"));
                }
                b.role(ro, x, y, d);
            }
        }
    }
    let Some(b) = builder else {
        return fail(last_line.max(1), 1, "missing `domain` section");
    };
    b.build().or_else(|e| fail(last_line.max(1), 1, e.to_string()))
}

/// Canonical text of an interpretation.
pub fn write_interpretation(i: &FuzzyInterpretation) -> String {
    let sig = i.signature();
    let mut s = String::new();
    let line = |kw: &str, items: &[String], s: &mut String| {
        s.push_str(kw);
        for it in items {
            s.push(' ');
            s.push_str(it);
        }
        s.push('\n');
    };
    line("concepts", sig.concepts(), &mut s);
    line("roles", sig.roles(), &mut s);
    line("individuals", sig.individuals(), &mut s);
    let f = sig.features();
    if f.inverse || f.nominals {
        let mut items = Vec::new();
        if f.inverse {
            items.push("I".to_string());
        }
        if f.nominals {
            items.push("O".to_string());
        }
        line("features", &items, &mut s);
    }
    line("domain", i.domain(), &mut s);
    for (a, name) in sig.individuals().iter().enumerate() {
        let _ = writeln!(s, "ind {name} {}", i.element_name(i.individual(a)));
    }
    for (c, name) in sig.concepts().iter().enumerate() {
        for (x, d) in i.concept(c).iter() {
            let _ = writeln!(s, "concept {name} {} {d}", i.element_name(x));
        }
    }
    for (r, name) in sig.roles().iter().enumerate() {
        for (x, y, d) in i.role(r).iter() {
            let _ = writeln!(s, "role {name} {} {} {d}", i.element_name(x), i.element_name(y));
        }
    }
    s
}
