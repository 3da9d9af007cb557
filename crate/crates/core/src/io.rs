// SPDX-License-Identifier: Apache-2.0

//! Wire formats.
//!
//! JSON is the lossless form: `{"order":n,"edges":[[u,v,sign],...]}` with
//! `u < v`, `sign` either `1` or `-1`, edges sorted lexicographically, no
//! whitespace. Equal graphs therefore serialize to identical bytes. DOT is for
//! looking at graphs: positive edges solid and labeled `+`, negative edges
//! dashed and labeled `-`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{GraphBuilder, Sign, SignedGraph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub order: u64,
    pub edges: Vec<(i64, i64, i64)>,
}

impl From<&SignedGraph> for GraphDocument {
    fn from(g: &SignedGraph) -> Self {
        GraphDocument {
            order: g.order() as u64,
            edges: g
                .edges()
                .map(|(u, v, s)| (u as i64, v as i64, s.value()))
                .collect(),
        }
    }
}

impl TryFrom<GraphDocument> for SignedGraph {
    type Error = Error;

    fn try_from(doc: GraphDocument) -> Result<SignedGraph> {
        let order = usize::try_from(doc.order).map_err(|_| Error::Document("order too large".into()))?;
        let mut builder = GraphBuilder::new(order);
        for (i, &(u, v, sign)) in doc.edges.iter().enumerate() {
            let bad = |why: &str| Error::Document(format!("edge {i} [{u},{v},{sign}]: {why}"));
            if u == v {
                return Err(bad("loop"));
            }
            if u > v {
                return Err(bad("endpoints must satisfy u < v"));
            }
            if u < 0 || v as u64 >= doc.order {
                return Err(bad("vertex index out of range"));
            }
            let sign = Sign::from_value(sign).ok_or_else(|| bad("sign must be 1 or -1"))?;
            builder
                .add_edge(u as usize, v as usize, sign)
                .map_err(|_| bad("duplicate pair"))?;
        }
        Ok(builder.build())
    }
}

pub fn to_json(g: &SignedGraph) -> String {
    serde_json::to_string(&GraphDocument::from(g)).expect("integers always serialize")
}

pub fn from_json(text: &str) -> Result<SignedGraph> {
    let doc: GraphDocument = serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))?;
    SignedGraph::try_from(doc)
}

pub fn to_dot(g: &SignedGraph) -> String {
    let mut out = String::from("graph signed {\n");
    for v in 0..g.order() {
        writeln!(out, "  v{v};").unwrap();
    }
    for (u, v, sign) in g.edges() {
        let style = match sign {
            Sign::Positive => "solid",
            Sign::Negative => "dashed",
        };
        writeln!(out, "  v{u} -- v{v} [style={style}, label=\"{sign}\"];").unwrap();
    }
    out.push_str("}\n");
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Id(String),
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Equals,
    Semi,
    Comma,
    Colon,
    UndirectedEdge,
    DirectedEdge,
}

fn tokenize(text: &str) -> std::result::Result<Vec<Token>, String> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            _ if c.is_whitespace() => i += 1,
            '{' | '}' | '[' | ']' | '=' | ';' | ',' | ':' => {
                tokens.push(match c {
                    '{' => Token::LBrace,
                    '}' => Token::RBrace,
                    '[' => Token::LBracket,
                    ']' => Token::RBracket,
                    '=' => Token::Equals,
                    ';' => Token::Semi,
                    ',' => Token::Comma,
                    _ => Token::Colon,
                });
                i += 1;
            }
            '-' if chars.get(i + 1) == Some(&'-') => {
                tokens.push(Token::UndirectedEdge);
                i += 2;
            }
            '-' if chars.get(i + 1) == Some(&'>') => {
                tokens.push(Token::DirectedEdge);
                i += 2;
            }
            '"' => {
                let mut value = String::new();
                i += 1;
                loop {
                    match chars.get(i) {
                        None => return Err("unterminated string".into()),
                        Some('"') => break,
                        Some('\\') if chars.get(i + 1) == Some(&'"') => {
                            value.push('"');
                            i += 2;
                        }
                        Some(&ch) => {
                            value.push(ch);
                            i += 1;
                        }
                    }
                }
                i += 1;
                tokens.push(Token::Id(value));
            }
            _ if c.is_ascii_alphabetic() || c == '_' || !c.is_ascii() => {
                let start = i;
                while i < chars.len()
                    && (chars[i].is_ascii_alphanumeric() || chars[i] == '_' || !chars[i].is_ascii())
                {
                    i += 1;
                }
                tokens.push(Token::Id(chars[start..i].iter().collect()));
            }
            _ if c.is_ascii_digit() || c == '.' || c == '-' => {
                let start = i;
                i += 1;
                while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                    i += 1;
                }
                let numeral: String = chars[start..i].iter().collect();
                if numeral == "-" || numeral == "." || numeral.matches('.').count() > 1 {
                    return Err(format!("bad numeral {numeral:?}"));
                }
                tokens.push(Token::Id(numeral));
            }
            _ => return Err(format!("unexpected character {c:?}")),
        }
    }
    Ok(tokens)
}

struct DotParser {
    tokens: Vec<Token>,
    pos: usize,
    directed: bool,
}

impl DotParser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Token) -> std::result::Result<(), String> {
        match self.next() {
            Some(t) if t == want => Ok(()),
            other => Err(format!("expected {want:?}, found {other:?}")),
        }
    }

    fn id(&mut self) -> std::result::Result<String, String> {
        match self.next() {
            Some(Token::Id(s)) => Ok(s),
            other => Err(format!("expected identifier, found {other:?}")),
        }
    }

    fn keyword(&self, word: &str) -> bool {
        matches!(self.peek(), Some(Token::Id(s)) if s.eq_ignore_ascii_case(word))
    }

    fn graph(&mut self) -> std::result::Result<(), String> {
        if self.keyword("strict") {
            self.pos += 1;
        }
        self.directed = if self.keyword("graph") {
            false
        } else if self.keyword("digraph") {
            true
        } else {
            return Err("expected graph or digraph".into());
        };
        self.pos += 1;
        if matches!(self.peek(), Some(Token::Id(_))) {
            self.pos += 1;
        }
        self.expect(Token::LBrace)?;
        self.stmt_list()?;
        self.expect(Token::RBrace)?;
        match self.peek() {
            None => Ok(()),
            Some(t) => Err(format!("trailing token {t:?}")),
        }
    }

    fn stmt_list(&mut self) -> std::result::Result<(), String> {
        while !matches!(self.peek(), Some(Token::RBrace) | None) {
            self.stmt()?;
            if self.peek() == Some(&Token::Semi) {
                self.pos += 1;
            }
        }
        Ok(())
    }

    fn stmt(&mut self) -> std::result::Result<(), String> {
        if self.keyword("graph") || self.keyword("node") || self.keyword("edge") {
            self.pos += 1;
            return self.attr_list();
        }
        if self.peek() == Some(&Token::LBrace) || self.keyword("subgraph") {
            self.subgraph()?;
        } else {
            self.id()?;
            if self.peek() == Some(&Token::Equals) {
                self.pos += 1;
                self.id()?;
                return Ok(());
            }
            self.port()?;
        }
        while let Some(op @ (Token::UndirectedEdge | Token::DirectedEdge)) = self.peek().cloned() {
            if (op == Token::DirectedEdge) != self.directed {
                return Err(format!("edge operator {op:?} does not match the graph kind"));
            }
            self.pos += 1;
            if self.peek() == Some(&Token::LBrace) || self.keyword("subgraph") {
                self.subgraph()?;
            } else {
                self.id()?;
                self.port()?;
            }
        }
        if self.peek() == Some(&Token::LBracket) {
            self.attr_list()?;
        }
        Ok(())
    }

    fn port(&mut self) -> std::result::Result<(), String> {
        while self.peek() == Some(&Token::Colon) {
            self.pos += 1;
            self.id()?;
        }
        Ok(())
    }

    fn subgraph(&mut self) -> std::result::Result<(), String> {
        if self.keyword("subgraph") {
            self.pos += 1;
            if matches!(self.peek(), Some(Token::Id(_))) {
                self.pos += 1;
            }
        }
        self.expect(Token::LBrace)?;
        self.stmt_list()?;
        self.expect(Token::RBrace)
    }

    fn attr_list(&mut self) -> std::result::Result<(), String> {
        self.expect(Token::LBracket)?;
        loop {
            match self.peek() {
                Some(Token::RBracket) => {
                    self.pos += 1;
                    break;
                }
                Some(Token::Id(_)) => {
                    self.id()?;
                    self.expect(Token::Equals)?;
                    self.id()?;
                    if matches!(self.peek(), Some(Token::Comma | Token::Semi)) {
                        self.pos += 1;
                    }
                }
                other => return Err(format!("unexpected {other:?} in attribute list")),
            }
        }
        if self.peek() == Some(&Token::LBracket) {
            return self.attr_list();
        }
        Ok(())
    }
}

/// Checks `text` against the DOT language grammar (graphs, subgraphs, node,
/// edge and attribute statements; no HTML labels or comments).
pub fn check_dot_grammar(text: &str) -> std::result::Result<(), String> {
    let mut parser = DotParser {
        tokens: tokenize(text)?,
        pos: 0,
        directed: false,
    };
    parser.graph()
}
