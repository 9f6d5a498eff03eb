use std::fmt;

/// A cell of a Topsnut-matrix or a token of a TB-paw: either a number or a
/// set of numbers. Sets render as their ascending elements glued together.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Num(i64),
    Set(Vec<i64>),
}

impl Label {
    pub fn set<I: IntoIterator<Item = i64>>(items: I) -> Label {
        let mut v: Vec<i64> = items.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Label::Set(v)
    }

    pub fn as_num(&self) -> Option<i64> {
        match self {
            Label::Num(n) => Some(*n),
            Label::Set(_) => None,
        }
    }

    pub fn render(&self) -> String {
        self.to_string()
    }

    /// Applies `f` to the number, or to every element of the set.
    pub fn map(&self, f: impl Fn(i64) -> i64) -> Label {
        match self {
            Label::Num(n) => Label::Num(f(*n)),
            Label::Set(s) => Label::set(s.iter().map(|&x| f(x))),
        }
    }
}

impl From<i64> for Label {
    fn from(n: i64) -> Self {
        Label::Num(n)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Num(n) => write!(f, "{n}"),
            Label::Set(s) => {
                for x in s {
                    write!(f, "{x}")?;
                }
                Ok(())
            }
        }
    }
}

pub fn render_all(tokens: &[Label]) -> String {
    tokens.iter().map(|t| t.to_string()).collect()
}
