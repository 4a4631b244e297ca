//! The request language.
//!
//! ```text
//! request := (ring ";")? command (key "=" value)*
//! ```
//!
//! The key decides how its value is read: `I J a b c p` take an ideal, `M`
//! a module `A/B`, `k i construct n exp gens samples` an integer, `seq` a
//! bracketed monomial list `[x, y^2]`, and `laws modules` a comma-separated
//! word list. Every command except `verify` needs the ring.

use pairdepth_core::syntax::{self, Cursor};
use pairdepth_core::{Error, Monomial, MonomialIdeal, Result, RingContext, Subquotient};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Depth,
    Cm,
    Grade,
    Wset,
    Ass,
    Decomp,
    Dim,
    Regseq,
    Ext,
    Depthp,
    Torsion,
    Verify,
}

const COMMANDS: [(&str, Command); 12] = [
    ("depth", Command::Depth),
    ("cm", Command::Cm),
    ("grade", Command::Grade),
    ("wset", Command::Wset),
    ("ass", Command::Ass),
    ("decomp", Command::Decomp),
    ("dim", Command::Dim),
    ("regseq", Command::Regseq),
    ("ext", Command::Ext),
    ("depthp", Command::Depthp),
    ("torsion", Command::Torsion),
    ("verify", Command::Verify),
];

impl Command {
    pub fn name(self) -> &'static str {
        COMMANDS.iter().find(|(_, c)| *c == self).map(|(n, _)| *n).unwrap()
    }

    /// Keys accepted by the command.
    pub fn keys(self) -> &'static [&'static str] {
        match self {
            Command::Depth | Command::Cm | Command::Torsion => &["I", "J", "M"],
            Command::Wset => &["I", "J"],
            Command::Grade => &["a", "M"],
            Command::Ext => &["a", "M", "i"],
            Command::Depthp => &["p", "M"],
            Command::Ass => &["M"],
            Command::Decomp => &["I"],
            Command::Dim => &["M", "I"],
            Command::Regseq => &["M", "k", "seq", "a", "construct", "I", "J"],
            Command::Verify => &["n", "exp", "gens", "modules", "laws", "samples"],
        }
    }
}

impl FromStr for Command {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        COMMANDS
            .iter()
            .find(|(n, _)| *n == s)
            .map(|(_, c)| *c)
            .ok_or_else(|| {
                let all: Vec<&str> = COMMANDS.iter().map(|(n, _)| *n).collect();
                format!("unknown command {s:?}; expected one of {}", all.join("|"))
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Ideal(MonomialIdeal),
    Module(Subquotient),
    Int(i64),
    Seq(Vec<Monomial>),
    Words(Vec<String>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Ideal,
    Module,
    Int,
    Seq,
    Words,
}

fn kind_of(key: &str) -> Option<Kind> {
    Some(match key {
        "I" | "J" | "a" | "b" | "c" | "p" => Kind::Ideal,
        "M" => Kind::Module,
        "k" | "i" | "construct" | "n" | "exp" | "gens" | "samples" => Kind::Int,
        "seq" => Kind::Seq,
        "laws" | "modules" => Kind::Words,
        _ => return None,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Request {
    pub ring: Option<RingContext>,
    pub command: Command,
    /// In input order; keys are distinct.
    pub args: Vec<(String, Value)>,
}

impl Request {
    pub fn get(&self, key: &str) -> Option<&Value> {
        self.args.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn set(&mut self, key: &str, value: Value) {
        match self.args.iter_mut().find(|(k, _)| k == key) {
            Some(slot) => slot.1 = value,
            None => self.args.push((key.to_string(), value)),
        }
    }
}

pub fn parse(src: &str) -> Result<Request> {
    let (ring, body, offset) = match src.find(';') {
        Some(at) => {
            let mut rc = Cursor::new(&src[..at]);
            let ring = rc.ring()?;
            if !rc.at_end() {
                return Err(rc.error("unexpected input after the ring"));
            }
            (Some(ring), &src[at + 1..], at + 1)
        }
        None => (None, src, 0),
    };
    let mut c = Cursor::with_offset(body, offset);
    c.skip_ws();
    let at = c.pos();
    let command: Command = c.identifier()?.parse().map_err(|m: String| Error::Parse { pos: at, msg: m })?;
    if ring.is_none() && command != Command::Verify {
        return Err(Error::Parse {
            pos: at,
            msg: format!("{} needs a ring, e.g. `Q[x,y]; {} ...`", command.name(), command.name()),
        });
    }
    let mut args: Vec<(String, Value)> = Vec::new();
    while !c.at_end() {
        let at = c.pos();
        let key = c.identifier()?.to_string();
        if !command.keys().contains(&key.as_str()) {
            return Err(Error::Parse {
                pos: at,
                msg: format!("{} takes {}, not {key:?}", command.name(), command.keys().join(" ")),
            });
        }
        if args.iter().any(|(k, _)| *k == key) {
            return Err(Error::Parse {
                pos: at,
                msg: format!("{key} is given twice"),
            });
        }
        c.expect('=')?;
        let kind = kind_of(&key).expect("every accepted key has a kind");
        let value = match (kind, &ring) {
            (Kind::Int, _) => Value::Int(integer(&mut c)?),
            (Kind::Words, _) => Value::Words(words(&mut c)?),
            (Kind::Ideal, Some(r)) => Value::Ideal(c.ideal(r)?),
            (Kind::Module, Some(r)) => Value::Module(c.module(r)?),
            (Kind::Seq, Some(r)) => Value::Seq(sequence(&mut c, r)?),
            (_, None) => return Err(Error::Parse { pos: at, msg: format!("{key} needs a ring") }),
        };
        args.push((key, value));
    }
    Ok(Request { ring, command, args })
}

fn integer(c: &mut Cursor) -> Result<i64> {
    let negative = c.eat('-');
    let at = c.pos();
    let v = i64::try_from(c.number()?).map_err(|_| Error::Parse {
        pos: at,
        msg: "integer is too large".into(),
    })?;
    Ok(if negative { -v } else { v })
}

fn words(c: &mut Cursor) -> Result<Vec<String>> {
    c.skip_ws();
    let at = c.pos();
    let text = c.take_while(|ch| ch.is_ascii_alphanumeric() || matches!(ch, '-' | '_' | ','));
    if text.is_empty() {
        return Err(c.error("expected a comma-separated word list"));
    }
    let list: Vec<String> = text.split(',').map(str::to_string).collect();
    if list.iter().any(String::is_empty) {
        return Err(Error::Parse {
            pos: at,
            msg: "empty word in list".into(),
        });
    }
    Ok(list)
}

fn sequence(c: &mut Cursor, ring: &RingContext) -> Result<Vec<Monomial>> {
    c.expect('[')?;
    let mut out = vec![c.monomial(ring)?];
    while c.eat(',') {
        out.push(c.monomial(ring)?);
    }
    c.expect(']')?;
    Ok(out)
}

impl fmt::Display for Request {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = &self.ring {
            write!(f, "{}; ", syntax::print_ring(r))?;
        }
        f.write_str(self.command.name())?;
        for (key, value) in &self.args {
            write!(f, " {key}=")?;
            match value {
                Value::Int(v) => write!(f, "{v}")?,
                Value::Words(w) => f.write_str(&w.join(","))?,
                Value::Ideal(i) => f.write_str(&syntax::print_ideal(i, self.ring.as_ref().unwrap()))?,
                Value::Module(m) => f.write_str(&syntax::print_module(m, self.ring.as_ref().unwrap()))?,
                Value::Seq(s) => {
                    let ring = self.ring.as_ref().unwrap();
                    let parts: Vec<String> = s.iter().map(|m| syntax::print_monomial(m, ring)).collect();
                    write!(f, "[{}]", parts.join(", "))?
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_requests_parse() {
        let r = parse("Q[x,y]; depth I=(x,y) J=(x) M=(1)/(0)").unwrap();
        assert_eq!(r.command, Command::Depth);
        assert_eq!(r.args.len(), 3);
        assert!(parse("Q[x,y]; cm I=(x^2) J=(x) M=(1)/(0)").is_ok());
        let r = parse("F2[x,y,z]; grade a=(x,y,z) M=(1)/(x*y)").unwrap();
        assert_eq!(r.ring.unwrap().field(), pairdepth_core::Field::Prime(2));
        let r = parse("verify n=2 exp=2 laws=all").unwrap();
        assert_eq!(r.get("laws"), Some(&Value::Words(vec!["all".into()])));
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse("Q[x,y]; depth I=(x,z) J=(x) M=(1)/(0)").unwrap_err();
        assert!(matches!(e, Error::Parse { pos: 19, .. }), "{e:?}");
        let e = parse("Q[x,y]; depth I=(x^-1) J=(x) M=(1)/(0)").unwrap_err();
        assert!(matches!(e, Error::Parse { .. }));
        // B ⊄ A is reported at B
        let e = parse("Q[x,y]; depth I=(x) J=(x) M=(x)/(y)").unwrap_err();
        assert!(matches!(e, Error::Parse { pos: 32, .. }), "{e:?}");
        assert!(parse("depth I=(x)").is_err());
        assert!(parse("Q[x]; depth q=(x)").is_err());
        assert!(parse("Q[x]; depth I=(x) I=(x)").is_err());
    }

    #[test]
    fn printing_round_trips() {
        for src in [
            "Q[x,y]; depth I=(x, y) J=(x) M=(1)/(0)",
            "F7[x,y,z]; regseq M=(1)/(x*y) k=-1 seq=[x, y^2*z]",
            "verify n=2 exp=1 laws=cm-descends,upper-bound-dim",
        ] {
            let r = parse(src).unwrap();
            assert_eq!(r.to_string(), src);
            assert_eq!(parse(&r.to_string()).unwrap(), r);
        }
    }
}
