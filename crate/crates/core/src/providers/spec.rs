//! Provider construction strings.
//!
//! ```text
//! spec := word:Z<m>[*Z<m>|*Z]... | suq2 | so3 | uqsu11 | au[:<dim>]
//!       | free(<spec>,<spec>) | prod(<spec>,<spec>) | json:<path>
//!       | chars:<name> | group:<name>
//! ```

use std::sync::Arc;

use crate::error::{FusionError, Result};
use crate::fusion::FusionProvider;
use crate::providers::{
    builtin, AuRing, DirectProduct, FreeProduct, JsonRing, So3, SuQ2, UqSu11, WordGroup, WordGroupSpec,
};

/// Builds the provider named by `spec`.
pub fn parse_provider(spec: &str) -> Result<Arc<dyn FusionProvider>> {
    let mut p = Parser { text: spec, pos: 0 };
    p.skip_ws();
    let provider = p.spec()?;
    p.skip_ws();
    if p.pos < spec.len() {
        return Err(FusionError::parse(p.pos, format!("unexpected trailing input `{}`", &spec[p.pos..])));
    }
    Ok(provider)
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn rest(&self) -> &str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        match self.rest().chars().next() {
            Some(found) if found == c => {
                self.pos += c.len_utf8();
                Ok(())
            }
            Some(found) => Err(FusionError::parse(self.pos, format!("expected `{c}`, found `{found}`"))),
            None => Err(FusionError::parse(self.pos, format!("expected `{c}`, found end of input"))),
        }
    }

    fn ident(&mut self) -> &str {
        let start = self.pos;
        let len = self
            .rest()
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(self.rest().len());
        self.pos += len;
        &self.text[start..self.pos]
    }

    /// Argument text up to the next top-level `,` or `)` (or the end).
    fn argument(&mut self) -> (usize, &str) {
        let start = self.pos;
        let len = self.rest().find([',', ')']).unwrap_or(self.rest().len());
        self.pos += len;
        (start, self.text[start..self.pos].trim_end())
    }

    fn spec(&mut self) -> Result<Arc<dyn FusionProvider>> {
        self.skip_ws();
        let start = self.pos;
        let name = self.ident().to_string();
        match name.as_str() {
            "suq2" => Ok(Arc::new(SuQ2)),
            "so3" => Ok(Arc::new(So3)),
            "uqsu11" => Ok(Arc::new(UqSu11)),
            "au" => {
                if self.rest().starts_with(':') {
                    self.pos += 1;
                    let at = self.pos;
                    let digits = self.ident().to_string();
                    let d: u32 = digits
                        .parse()
                        .map_err(|_| FusionError::parse(at, format!("expected a generator dimension, found `{digits}`")))?;
                    AuRing::new(d).map(|r| Arc::new(r) as _).map_err(|e| FusionError::parse(at, e.to_string()))
                } else {
                    Ok(Arc::new(AuRing::default()))
                }
            }
            "word" | "json" | "chars" | "group" => {
                self.expect(':')?;
                let (at, arg) = self.argument();
                if arg.is_empty() {
                    return Err(FusionError::parse(at, format!("`{name}:` needs an argument")));
                }
                let arg = arg.to_string();
                match name.as_str() {
                    "word" => Ok(Arc::new(WordGroup::new(WordGroupSpec::parse(&arg, at)?))),
                    "json" => Ok(Arc::new(JsonRing::load(&arg)?)),
                    "chars" => builtin::character_ring(&arg)
                        .map(|r| Arc::new(r) as _)
                        .map_err(|e| FusionError::parse(at, e.to_string())),
                    _ => builtin::group_ring(&arg)
                        .map(|r| Arc::new(r) as _)
                        .map_err(|e| FusionError::parse(at, e.to_string())),
                }
            }
            "free" | "prod" => {
                self.expect('(')?;
                let left = self.spec()?;
                self.expect(',')?;
                let right = self.spec()?;
                self.expect(')')?;
                Ok(if name == "free" {
                    Arc::new(FreeProduct::new(left, right))
                } else {
                    Arc::new(DirectProduct::new(left, right))
                })
            }
            "" => Err(FusionError::parse(
                start,
                match self.rest().chars().next() {
                    Some(c) => format!("expected a provider name, found `{c}`"),
                    None => "expected a provider name, found end of input".to_string(),
                },
            )),
            other => Err(FusionError::parse(start, format!("unknown provider `{other}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for spec in ["suq2", "so3", "uqsu11", "au", "au:3", "word:Z2*Z2", "word:Z2*Z", "free(so3,word:Z2)", "prod(suq2,word:Z2)", "chars:S3", "group:S3"] {
            assert_eq!(parse_provider(spec).unwrap().name(), spec);
        }
        assert_eq!(parse_provider(" free( so3 , word:Z2 ) ").unwrap().name(), "free(so3,word:Z2)");
    }

    #[test]
    fn errors_have_positions() {
        let pos = |s: &str| match parse_provider(s) {
            Err(FusionError::Parse { position, .. }) => position,
            Err(other) => panic!("{s}: {other}"),
            Ok(_) => panic!("{s} parsed"),
        };
        assert_eq!(pos("free(so3,"), 9);
        assert_eq!(pos("free(so3"), 8);
        assert_eq!(pos("bogus"), 0);
        assert_eq!(pos("word:Z2*Y"), 8);
        assert_eq!(pos("suq2 x"), 5);
        assert_eq!(pos("au:1"), 3);
    }
}
