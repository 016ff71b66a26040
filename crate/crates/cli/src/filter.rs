//! Row filters: conjunctions of integer comparisons, e.g. `b=2 and e<=5`.

use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("bad filter `{text}`: {reason}")]
pub struct FilterError {
    text: String,
    reason: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Field {
    E,
    C,
    Genus,
    N,
    R,
    B,
    K,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Op {
    Eq,
    Ne,
    Le,
    Ge,
    Lt,
    Gt,
}

impl Op {
    fn holds(self, a: i64, b: i64) -> bool {
        match self {
            Op::Eq => a == b,
            Op::Ne => a != b,
            Op::Le => a <= b,
            Op::Ge => a >= b,
            Op::Lt => a < b,
            Op::Gt => a > b,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Filter(Vec<(Field, Op, i64)>);

impl Filter {
    pub fn accepts(&self, value: impl Fn(Field) -> i64) -> bool {
        self.0.iter().all(|&(f, op, v)| op.holds(value(f), v))
    }
}

impl FromStr for Filter {
    type Err = FilterError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let fail = |reason: String| FilterError {
            text: text.to_string(),
            reason,
        };
        let lowered = text.to_lowercase();
        let mut terms = Vec::new();
        for part in lowered.split(" and ").flat_map(|p| p.split("&&")) {
            let part = part.trim();
            if part.is_empty() {
                return Err(fail("empty comparison".into()));
            }
            let (at, op, width) = [("<=", Op::Le), (">=", Op::Ge), ("!=", Op::Ne), ("==", Op::Eq), ("<", Op::Lt), (">", Op::Gt), ("=", Op::Eq)]
                .iter()
                .find_map(|&(sym, op)| part.find(sym).map(|i| (i, op, sym.len())))
                .ok_or_else(|| fail(format!("no comparison operator in `{part}`")))?;
            let name = part[..at].trim();
            let field = match name {
                "e" => Field::E,
                "c" => Field::C,
                "genus" | "delta" => Field::Genus,
                "n" => Field::N,
                "r" => Field::R,
                "b" => Field::B,
                "k" => Field::K,
                other => return Err(fail(format!("unknown field `{other}`"))),
            };
            let value: i64 = part[at + width..]
                .trim()
                .parse()
                .map_err(|_| fail(format!("`{}` is not an integer", part[at + width..].trim())))?;
            terms.push((field, op, value));
        }
        Ok(Filter(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eval(f: &str, e: i64, b: i64) -> bool {
        let f: Filter = f.parse().unwrap();
        f.accepts(|field| match field {
            Field::E => e,
            Field::B => b,
            _ => 0,
        })
    }

    #[test]
    fn parses_conjunctions() {
        assert!(eval("b=2 and e<=5", 5, 2));
        assert!(!eval("b=2 and e<=5", 6, 2));
        assert!(eval("b >= 1 && e != 3", 4, 1));
        assert!(eval("B==0", 2, 0));
        assert!("".parse::<Filter>().is_err());
    }

    #[test]
    fn rejects_garbage() {
        assert!("q=2".parse::<Filter>().is_err());
        assert!("b=two".parse::<Filter>().is_err());
        assert!("b".parse::<Filter>().is_err());
        assert!("b=1 and".parse::<Filter>().is_err());
    }
}
