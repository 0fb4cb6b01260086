use serde::Serialize;

/// A zeta value consumed while evaluating a formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ZetaNode {
    /// `ζ(n)` at an even integer.
    Even(u32),
    /// `ζ(n)` at an odd integer.
    Odd(u32),
    /// Hurwitz `ζ(s, num/den)`.
    Hurwitz { s: u32, num: u32, den: u32 },
}

impl ZetaNode {
    pub fn is_odd(&self) -> bool {
        matches!(self, ZetaNode::Odd(_))
    }
}
