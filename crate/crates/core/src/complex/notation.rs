//! Text form of cells.
//!
//! Compact form, used when every label is a single digit: `2(13)5(46)`.
//! General form, items separated by spaces: `2 (1 3) 5 (4 6)`. The parser
//! picks the general grammar whenever the input contains whitespace.

use super::{Block, Cell, ComplexError, Label, SpaceKind, SpaceSpec};

/// Largest `n` written in the compact notation.
const COMPACT_MAX_N: usize = 9;

pub fn format_cell(cell: &Cell) -> String {
    let compact = cell.space().n() <= COMPACT_MAX_N;
    let mut items = Vec::with_capacity(cell.blocks().len());
    for block in cell.blocks() {
        let labels: Vec<String> = block.labels().map(|l| l.to_string()).collect();
        let item = match (block.is_pair(), compact) {
            (false, _) => labels[0].clone(),
            (true, true) => format!("({}{})", labels[0], labels[1]),
            (true, false) => format!("({} {})", labels[0], labels[1]),
        };
        items.push(item);
    }
    items.join(if compact { "" } else { " " })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Token {
    Open,
    Close,
    Number(Label),
}

fn parse_error(position: usize, message: impl Into<String>) -> ComplexError {
    ComplexError::Parse {
        position,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, ComplexError> {
    let general = text.chars().any(char::is_whitespace);
    let mut tokens = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some((pos, c)) = chars.next() {
        match c {
            '(' => tokens.push((pos, Token::Open)),
            ')' => tokens.push((pos, Token::Close)),
            c if c.is_whitespace() => {}
            c if c.is_ascii_digit() => {
                let mut value = c.to_digit(10).unwrap() as Label;
                if general {
                    while let Some(&(_, d)) = chars.peek() {
                        let Some(digit) = d.to_digit(10) else { break };
                        value = value
                            .checked_mul(10)
                            .and_then(|v| v.checked_add(digit as Label))
                            .ok_or_else(|| parse_error(pos, "label too large"))?;
                        chars.next();
                    }
                }
                tokens.push((pos, Token::Number(value)));
            }
            other => return Err(parse_error(pos, format!("unexpected character {other:?}"))),
        }
    }
    Ok(tokens)
}

/// Parses a cell of the given kind; `n` is the number of labels present.
///
/// Pair labels may appear in either order and are stored sorted, so
/// `format_cell(parse_cell(t))` is the canonical spelling of `t`.
pub fn parse_cell(text: &str, kind: SpaceKind) -> Result<Cell, ComplexError> {
    let tokens = tokenize(text)?;
    let mut blocks = Vec::new();
    let mut iter = tokens.into_iter();
    while let Some((pos, token)) = iter.next() {
        match token {
            Token::Number(label) => blocks.push(Block::single(label)),
            Token::Open => {
                let mut labels = Vec::new();
                loop {
                    match iter.next() {
                        Some((_, Token::Number(label))) => labels.push(label),
                        Some((_, Token::Close)) => break,
                        Some((p, Token::Open)) => return Err(parse_error(p, "nested parenthesis")),
                        None => return Err(parse_error(pos, "unclosed parenthesis")),
                    }
                }
                match labels[..] {
                    [a, b] => blocks.push(Block::pair(a, b)?),
                    _ => {
                        return Err(parse_error(
                            pos,
                            format!("a block holds one or two labels, found {}", labels.len()),
                        ))
                    }
                }
            }
            Token::Close => return Err(parse_error(pos, "unmatched ')'")),
        }
    }
    if blocks.is_empty() {
        return Err(parse_error(0, "empty cell"));
    }
    // repeated labels are reported before range problems
    let mut seen = std::collections::BTreeSet::new();
    for label in blocks.iter().flat_map(Block::labels) {
        if !seen.insert(label) {
            return Err(ComplexError::RepeatedLabel(label));
        }
    }
    let n = seen.len();
    Cell::new(SpaceSpec::new(kind, n)?, blocks)
}
