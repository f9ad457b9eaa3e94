use std::fmt;

use super::ast::Formula;

/// Binding levels: 0 accepts anything, 1 needs at least a conjunction,
/// 2 needs a negation, quantifier or atom.
fn write(f: &mut fmt::Formatter<'_>, formula: &Formula, level: u8) -> fmt::Result {
    let needed = match formula {
        Formula::Or(..) => 0,
        Formula::And(..) => 1,
        _ => 2,
    };
    if needed < level {
        f.write_str("(")?;
        write(f, formula, 0)?;
        return f.write_str(")");
    }
    match formula {
        Formula::ActionEq(w) => write!(f, "{w} = 0"),
        Formula::GroupEq(g) => write!(f, "{g} = 1"),
        Formula::Or(a, b) => {
            write(f, a, 0)?;
            f.write_str(" | ")?;
            write(f, b, 1)
        }
        Formula::And(a, b) => {
            write(f, a, 1)?;
            f.write_str(" & ")?;
            write(f, b, 2)
        }
        Formula::Not(a) => {
            f.write_str("~")?;
            write(f, a, 2)
        }
        Formula::ExistsX(x, a) => {
            write!(f, "exists x{x} (")?;
            write(f, a, 0)?;
            f.write_str(")")
        }
        Formula::ExistsY(y, a) => {
            write!(f, "exists y{y} (")?;
            write(f, a, 0)?;
            f.write_str(")")
        }
    }
}

/// Concrete syntax with minimal parentheses; re-parses to an equal AST.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write(f, self, 0)
    }
}

#[cfg(test)]
mod tests {
    use crate::formula::parse;
    use crate::free::ModuleTerm;

    use super::*;

    #[test]
    fn round_trips() {
        for src in [
            "x1*(y1 - 1) = 0",
            "exists x1 (x1*(1) = 0)",
            "y1 = 1 | ~(x1*(2) = 0)",
            "~(y1 = 1 | y2 = 1) & (y1 = 1 | y2 = 1 & y3 = 1)",
            "y1 = 1 | (y2 = 1 | y3 = 1)",
            "forall x2 (x1 + x2*(y1^-3) = 0 -> ~~y2 = 1)",
        ] {
            let f = parse(src, 6).unwrap();
            assert_eq!(parse(&f.to_string(), 6).unwrap(), f, "{src} printed as {f}");
        }
    }

    #[test]
    fn printed_forms() {
        assert_eq!(Formula::ActionEq(ModuleTerm::zero(3)).to_string(), "0 = 0");
        assert_eq!(
            parse("y1 = 1 | ~(x1*(2) = 0)", 4).unwrap().to_string(),
            "y1 = 1 | ~x1*(2) = 0"
        );
        assert_eq!(
            parse("(y1 = 1 | y2 = 1) & y3 = 1", 4).unwrap().to_string(),
            "(y1 = 1 | y2 = 1) & y3 = 1"
        );
    }
}
