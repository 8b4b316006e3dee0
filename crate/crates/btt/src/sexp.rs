//! Minimal s-expression reader and printer shared by the category file
//! format and the surface language. Atoms are bare symbols or integers;
//! `;` starts a line comment.

/// Source position, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl std::fmt::Display for Pos {
    fn fmt(&self, w: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(w, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Sexp {
    Atom(String, Pos),
    List(Vec<Sexp>, Pos),
}

impl Sexp {
    pub fn pos(&self) -> Pos {
        match self {
            Sexp::Atom(_, p) | Sexp::List(_, p) => *p,
        }
    }
    pub fn atom(&self) -> Option<&str> {
        match self {
            Sexp::Atom(s, _) => Some(s),
            Sexp::List(..) => None,
        }
    }
    pub fn list(&self) -> Option<&[Sexp]> {
        match self {
            Sexp::List(items, _) => Some(items),
            Sexp::Atom(..) => None,
        }
    }
    pub fn as_usize(&self) -> Option<usize> {
        self.atom()?.parse().ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{pos}: {msg}")]
pub struct SexpError {
    pub pos: Pos,
    pub msg: String,
}

struct Reader<'a> {
    src: &'a [u8],
    at: usize,
    line: usize,
    col: usize,
}

impl<'a> Reader<'a> {
    fn pos(&self) -> Pos {
        Pos { line: self.line, col: self.col }
    }
    fn peek(&self) -> Option<u8> {
        self.src.get(self.at).copied()
    }
    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.at += 1;
        if c == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }
    fn skip_trivia(&mut self) {
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_whitespace() => {
                    self.bump();
                }
                Some(b';') => {
                    while let Some(c) = self.peek() {
                        if c == b'\n' {
                            break;
                        }
                        self.bump();
                    }
                }
                _ => break,
            }
        }
    }
    fn read(&mut self) -> Result<Sexp, SexpError> {
        self.skip_trivia();
        let pos = self.pos();
        match self.peek() {
            None => Err(SexpError { pos, msg: "unexpected end of input".into() }),
            Some(b'(') => {
                self.bump();
                let mut items = Vec::new();
                loop {
                    self.skip_trivia();
                    match self.peek() {
                        None => {
                            return Err(SexpError {
                                pos,
                                msg: "unclosed parenthesis".into(),
                            })
                        }
                        Some(b')') => {
                            self.bump();
                            return Ok(Sexp::List(items, pos));
                        }
                        Some(_) => items.push(self.read()?),
                    }
                }
            }
            Some(b')') => Err(SexpError { pos, msg: "unmatched closing parenthesis".into() }),
            Some(_) => {
                let mut word = Vec::new();
                while let Some(c) = self.peek() {
                    if c.is_ascii_whitespace() || c == b'(' || c == b')' || c == b';' {
                        break;
                    }
                    word.push(c);
                    self.bump();
                }
                match String::from_utf8(word) {
                    Ok(s) => Ok(Sexp::Atom(s, pos)),
                    Err(_) => Err(SexpError { pos, msg: "atom is not valid UTF-8".into() }),
                }
            }
        }
    }
}

/// Reads a whole source as a sequence of top-level expressions.
pub fn parse_sexps(src: &str) -> Result<Vec<Sexp>, SexpError> {
    let mut r = Reader { src: src.as_bytes(), at: 0, line: 1, col: 1 };
    let mut out = Vec::new();
    loop {
        r.skip_trivia();
        if r.peek().is_none() {
            return Ok(out);
        }
        out.push(r.read()?);
    }
}

/// Prints one expression on a single line with single spaces.
pub fn print_sexp(e: &Sexp) -> String {
    match e {
        Sexp::Atom(s, _) => s.clone(),
        Sexp::List(items, _) => {
            let inner: Vec<String> = items.iter().map(print_sexp).collect();
            format!("({})", inner.join(" "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_nested_lists_and_comments() {
        let src = "(a (b 12) ; trailing\n  c)\n(d)";
        let es = parse_sexps(src).unwrap();
        assert_eq!(es.len(), 2);
        assert_eq!(print_sexp(&es[0]), "(a (b 12) c)");
        assert_eq!(print_sexp(&es[1]), "(d)");
    }

    #[test]
    fn reports_position_of_unclosed_list() {
        let err = parse_sexps("(a (b)").unwrap_err();
        assert_eq!(err.pos, Pos { line: 1, col: 1 });
    }

    #[test]
    fn round_trips_atoms() {
        let es = parse_sexps("x-1 42 foo/bar").unwrap();
        let printed: Vec<String> = es.iter().map(print_sexp).collect();
        assert_eq!(printed.join(" "), "x-1 42 foo/bar");
    }
}
