//! Outcome of a single named check inside a verification report.

/// Result of one check. Failures carry the lexicographically smallest witness found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Check<W> {
    Pass,
    /// Holds without a search; the string says why.
    Implied(&'static str),
    /// Not evaluated because a prerequisite failed.
    Skipped(&'static str),
    Fail(W),
}

impl<W> Check<W> {
    pub fn from_witness(witness: Option<W>) -> Self {
        match witness {
            None => Check::Pass,
            Some(w) => Check::Fail(w),
        }
    }

    /// `Pass` and `Implied` count as holding; `Skipped` does not.
    pub fn holds(&self) -> bool {
        matches!(self, Check::Pass | Check::Implied(_))
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, Check::Fail(_))
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Check::Fail(w) => Some(w),
            _ => None,
        }
    }

    pub fn status(&self) -> &'static str {
        match self {
            Check::Pass => "pass",
            Check::Implied(_) => "implied",
            Check::Skipped(_) => "skipped",
            Check::Fail(_) => "fail",
        }
    }

    pub fn note(&self) -> Option<&'static str> {
        match self {
            Check::Implied(s) | Check::Skipped(s) => Some(s),
            _ => None,
        }
    }
}
