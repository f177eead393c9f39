//! The biclosed-set expression language:
//!
//! ```text
//! empty | full | invset <word> | hat <u>:<Δ1>:<Δ2> | word-inf <prefix>;<period>
//!       | twist <w> ( <expr> ) | complement ( <expr> ) | explicit [<root>, …]
//! ```
//!
//! Words are comma-separated generator indices (or names); roots are written
//! as coefficient lists with the level last, e.g. `[1,0,2]` for `a + 2δ`.

use crate::error::{Error, Result};
use crate::system::CoxeterSystem;
use crate::words::PeriodicWord;

use super::Biclosed;

pub fn parse_biclosed(sys: &CoxeterSystem, text: &str) -> Result<Biclosed> {
    let t = text.trim();
    let split = t
        .find(|c: char| !(c.is_ascii_alphabetic() || c == '-'))
        .unwrap_or(t.len());
    let (head, rest) = (&t[..split], t[split..].trim());
    match head {
        "empty" | "full" => {
            if !rest.is_empty() {
                return Err(parse_err(format!("unexpected {rest:?} after {head}")));
            }
            Ok(if head == "empty" { Biclosed::empty() } else { Biclosed::full() })
        }
        "complement" => Ok(Biclosed::complement(parse_biclosed(sys, parenthesized(rest)?)?)),
        "twist" => {
            let open = rest
                .find('(')
                .ok_or_else(|| parse_err("twist needs `( <expr> )`".into()))?;
            let w = sys.parse_element(&rest[..open])?;
            let inner = parse_biclosed(sys, parenthesized(&rest[open..])?)?;
            Ok(Biclosed::twist(sys, &w, inner))
        }
        "invset" => Ok(Biclosed::InvSet(sys.parse_element(rest)?)),
        "hat" => {
            let parts: Vec<&str> = rest.split(':').collect();
            let [u, d1, d2] = parts[..] else {
                return Err(parse_err("hat needs `<u>:<Δ1>:<Δ2>`".into()));
            };
            let u = sys.parse_element(u)?;
            Biclosed::hat(sys, u, index_list(sys, d1)?, index_list(sys, d2)?)
        }
        "word-inf" => {
            let (p, c) = rest
                .split_once(';')
                .ok_or_else(|| parse_err("word-inf needs `<prefix>;<period>`".into()))?;
            let prefix = sys.parse_word(p)?;
            let period = sys.parse_word(c)?;
            if period.is_empty() {
                let w = sys.from_word(&prefix)?;
                if w.length() != prefix.len() {
                    return Err(Error::NotReduced { k: 0 });
                }
                return Ok(Biclosed::InvSet(w));
            }
            Ok(Biclosed::InfWord(PeriodicWord::validate(sys, &prefix, &period)?))
        }
        "explicit" => {
            let body = rest
                .strip_prefix('[')
                .and_then(|r| r.strip_suffix(']'))
                .ok_or_else(|| parse_err("explicit needs `[<root>, …]`".into()))?;
            let mut roots = Vec::new();
            let mut cur = body.trim();
            while !cur.is_empty() {
                let cur_t = cur.trim_start_matches(|c: char| c == ',' || c.is_whitespace());
                if cur_t.is_empty() {
                    break;
                }
                if !cur_t.starts_with('[') {
                    return Err(parse_err(format!("expected a root at {cur_t:?}")));
                }
                let end = cur_t
                    .find(']')
                    .ok_or_else(|| parse_err("unterminated root".into()))?;
                roots.push(sys.parse_root(&cur_t[..=end])?);
                cur = cur_t[end + 1..].trim();
            }
            Biclosed::explicit(sys, roots)
        }
        "" => Err(parse_err("empty expression".into())),
        other => Err(parse_err(format!("unknown form {other:?}"))),
    }
}

fn parse_err(msg: String) -> Error {
    Error::Parse(msg)
}

/// The body of `( … )` when the parentheses enclose the whole text.
fn parenthesized(text: &str) -> Result<&str> {
    let t = text.trim();
    if !t.starts_with('(') {
        return Err(parse_err(format!("expected `(` at {t:?}")));
    }
    let mut depth = 0;
    for (i, c) in t.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    if i + 1 != t.len() {
                        return Err(parse_err(format!("trailing text {:?}", &t[i + 1..])));
                    }
                    return Ok(&t[1..i]);
                }
            }
            _ => {}
        }
    }
    Err(parse_err("unbalanced parentheses".into()))
}

fn index_list(sys: &CoxeterSystem, text: &str) -> Result<Vec<usize>> {
    let t = text.trim();
    if t.is_empty() {
        return Ok(Vec::new());
    }
    let v = sys.parse_word(t)?;
    if let Some(&bad) = v.iter().find(|&&i| i >= sys.rank()) {
        return Err(parse_err(format!("{bad} is not a finite simple root index")));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::Root;

    fn sys(t: &str) -> CoxeterSystem {
        CoxeterSystem::from_type(t).unwrap()
    }

    #[test]
    fn forms_round_trip() {
        let a2 = sys("A~2");
        for text in [
            "empty",
            "full",
            "invset 0,1",
            "hat 0:1:",
            "hat e::",
            "word-inf 2;0,1,2",
            "twist 0,2 (hat 0,1,0::)",
            "complement (invset 2)",
            "explicit [[1,0,0],[-1,-1,1]]",
        ] {
            let b = parse_biclosed(&a2, text).unwrap();
            let again = parse_biclosed(&a2, &b.to_string()).unwrap();
            assert_eq!(b, again, "{text}");
        }
    }

    #[test]
    fn compact_spelling() {
        let a1 = sys("A~1");
        let b = parse_biclosed(&a1, "complement(empty)").unwrap();
        assert_eq!(b, Biclosed::full());
        let b = parse_biclosed(&a1, "twist 0(complement(empty))").unwrap();
        assert!(matches!(b, Biclosed::Twisted(..)));
    }

    #[test]
    fn errors() {
        let a1 = sys("A~1");
        assert!(matches!(parse_biclosed(&a1, "nonsense"), Err(Error::Parse(_))));
        assert!(matches!(parse_biclosed(&a1, "complement (empty"), Err(Error::Parse(_))));
        assert!(matches!(parse_biclosed(&a1, "word-inf ;0,0"), Err(Error::NotReduced { .. })));
        assert!(matches!(parse_biclosed(&a1, "explicit [[-1,0]]"), Err(Error::Domain(_))));
        assert!(matches!(parse_biclosed(&a1, "hat 1::"), Err(Error::Domain(_))));
        let a3 = sys("A~3");
        assert!(matches!(parse_biclosed(&a3, "hat e:0:1"), Err(Error::Validation(_))));
        assert!(parse_biclosed(&a3, "hat e:0:2").is_ok());
    }

    #[test]
    fn finite_explicit_accepts_level() {
        let a2 = sys("A2");
        let b = parse_biclosed(&a2, "explicit [[1,0],[1,1,0]]").unwrap();
        assert!(b.has(&a2, &Root::finite(vec![1, 1])));
    }
}
