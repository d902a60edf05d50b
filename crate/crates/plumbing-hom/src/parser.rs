//! Textual element grammar: `u(i,j)`, `v(i)`, `v_inv(i)`, `x(i)`, `y(i)`,
//! `z(i)`, `e(i)`, composed by juxtaposition or `*` in right-to-left
//! (application) order — the leftmost factor is applied last, matching the
//! way compositions are written throughout.

use crate::error::Error;
use crate::path::Path;
use crate::quotient::QuotientAlgebra;
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    E(usize),
    U(usize, usize),
    V(usize),
    VInv(usize),
    X(usize),
    Y(usize),
    Z(usize),
}

fn parse_token(raw: &str) -> Result<Token> {
    let err = || Error::Parse(format!("cannot parse factor {raw:?}"));
    let open = raw.find('(').ok_or_else(err)?;
    if !raw.ends_with(')') {
        return Err(err());
    }
    let name = &raw[..open];
    let args: Vec<usize> = raw[open + 1..raw.len() - 1]
        .split(',')
        .map(|s| s.trim().parse::<usize>().map_err(|_| err()))
        .collect::<Result<_>>()?;
    match (name, args.as_slice()) {
        ("e", [i]) => Ok(Token::E(*i)),
        ("u", [i, j]) => Ok(Token::U(*i, *j)),
        ("v", [i]) => Ok(Token::V(*i)),
        ("v_inv", [i]) => Ok(Token::VInv(*i)),
        ("x", [i]) => Ok(Token::X(*i)),
        ("y", [i]) => Ok(Token::Y(*i)),
        ("z", [i]) => Ok(Token::Z(*i)),
        _ => Err(err()),
    }
}

/// Expand one factor into `Ω̄`-arrow ids in application order, starting at
/// `at` (or anywhere when `at` is `None`); returns the ids and endpoints.
fn expand(
    alg: &QuotientAlgebra,
    token: &Token,
) -> Result<(Vec<usize>, usize, usize)> {
    let bar = &alg.omega_bar;
    let n = alg.quiver.rank;
    let missing = |what: String| Error::Parse(format!("no such arrow: {what}"));
    match token {
        Token::E(i) => Ok((Vec::new(), *i, *i)),
        Token::U(i, j) => {
            let id = bar
                .u_arrow(*i, *j)
                .ok_or_else(|| missing(format!("u({i},{j})")))?;
            Ok((vec![id], *i, *j))
        }
        Token::V(i) => {
            let id = bar.v_arrow(*i).ok_or_else(|| missing(format!("v({i})")))?;
            let a = &bar.arrows[id];
            Ok((vec![id], a.source, a.target))
        }
        Token::VInv(i) => {
            let id = bar
                .v_inv_arrow(*i)
                .ok_or_else(|| missing(format!("v_inv({i})")))?;
            let a = &bar.arrows[id];
            Ok((vec![id], a.source, a.target))
        }
        Token::Y(i) => {
            if *i < 1 || *i > n {
                return Err(missing(format!("y({i})")));
            }
            Ok((alg.y_path(*i).arrows.clone(), *i, *i))
        }
        Token::X(i) => {
            if !alg.is_standard_type_a() {
                return Err(Error::NotTypeA);
            }
            if *i < 1 || *i > n {
                return Err(missing(format!("x({i})")));
            }
            // x_i = U_{φ(i),i} ∘ v_{i,φ(i)}
            let mut arrows = vec![bar.v_arrow(*i).unwrap()];
            let mut at = n + 1 - i;
            while at != *i {
                let next = if at < *i { at + 1 } else { at - 1 };
                arrows.push(bar.u_arrow(at, next).unwrap());
                at = next;
            }
            Ok((arrows, *i, *i))
        }
        Token::Z(i) => {
            if !alg.is_standard_type_a() {
                return Err(Error::NotTypeA);
            }
            if *i < 1 || *i > n || n == 1 {
                return Err(missing(format!("z({i})")));
            }
            let other = if *i < n { *i + 1 } else { *i - 1 };
            Ok((
                vec![
                    bar.u_arrow(*i, other).unwrap(),
                    bar.u_arrow(other, *i).unwrap(),
                ],
                *i,
                *i,
            ))
        }
    }
}

/// Parse an expression into a single `Ω̄`-path.
pub fn parse_element(alg: &QuotientAlgebra, input: &str) -> Result<Path> {
    let raw: Vec<&str> = input
        .split(|c: char| c.is_whitespace() || c == '*')
        .filter(|s| !s.is_empty())
        .collect();
    if raw.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let tokens: Vec<Token> = raw.iter().map(|s| parse_token(s)).collect::<Result<_>>()?;
    // rightmost factor is applied first
    let mut arrows: Vec<usize> = Vec::new();
    let mut start: Option<usize> = None;
    let mut at: Option<usize> = None;
    for token in tokens.iter().rev() {
        let (ids, source, target) = expand(alg, token)?;
        if let Some(pos) = at {
            if pos != source {
                return Err(Error::NotComposable(format!(
                    "factor starting at {source} follows a path ending at {pos}"
                )));
            }
        } else {
            start = Some(source);
        }
        arrows.extend(ids);
        at = Some(target);
    }
    Path::from_arrows(&alg.omega_bar, arrows, start.unwrap())
}
