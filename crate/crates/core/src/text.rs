//! Parser for the bracketed integer-list syntax shared by PD codes and
//! matrices, e.g. `[[1,4,2,5],[3,6,4,1]]`. Whitespace is ignored and integers
//! are arbitrary precision.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::{Int, IntMatrix};

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), String> {
        match self.peek() {
            Some(x) if x == c => {
                self.pos += 1;
                Ok(())
            }
            Some(x) => Err(format!("expected '{}' at byte {}, found '{}'", c as char, self.pos, x as char)),
            None => Err(format!("expected '{}' at end of input", c as char)),
        }
    }

    fn integer(&mut self) -> Result<BigInt, String> {
        self.skip_ws();
        let start = self.pos;
        if self.bytes.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii slice");
        s.parse().map_err(|_| format!("expected an integer at byte {start}"))
    }

    /// `[` item (`,` item)* `]`, possibly empty.
    fn list<T>(&mut self, mut item: impl FnMut(&mut Self) -> Result<T, String>) -> Result<Vec<T>, String> {
        self.expect(b'[')?;
        let mut out = Vec::new();
        if self.peek() == Some(b']') {
            self.pos += 1;
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            match self.peek() {
                Some(b',') => self.pos += 1,
                Some(b']') => {
                    self.pos += 1;
                    return Ok(out);
                }
                Some(c) => return Err(format!("unexpected '{}' at byte {}", c as char, self.pos)),
                None => return Err("unterminated list".into()),
            }
        }
    }
}

/// Parses a list of integer lists.
pub fn parse_int_lists(text: &str) -> Result<Vec<Vec<BigInt>>, String> {
    let mut cur = Cursor { bytes: text.as_bytes(), pos: 0 };
    let out = cur.list(|c| c.list(Cursor::integer))?;
    if cur.peek().is_some() {
        return Err(format!("trailing input at byte {}", cur.pos));
    }
    Ok(out)
}

/// Parses a matrix written as a list of rows. `[]` is the 0x0 matrix.
pub fn parse_matrix(text: &str) -> Result<IntMatrix> {
    let rows: Vec<Vec<Int>> = parse_int_lists(text).map_err(Error::MatrixSyntax)?;
    IntMatrix::from_rows(rows).map_err(|e| Error::MatrixSyntax(e.to_string()))
}
