use std::fmt;
use std::str::FromStr;

use crate::ScalarError;

/// One of the twelve formal parameters. `S..` is the formal conjugate of `T..`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum ParamVar {
    T11,
    T12,
    T21,
    T22,
    T31,
    T32,
    S11,
    S12,
    S21,
    S22,
    S31,
    S32,
}

const NAMES: [&str; 12] = [
    "t11", "t12", "t21", "t22", "t31", "t32", "s11", "s12", "s21", "s22", "s31", "s32",
];

impl ParamVar {
    pub const ALL: [ParamVar; 12] = [
        ParamVar::T11,
        ParamVar::T12,
        ParamVar::T21,
        ParamVar::T22,
        ParamVar::T31,
        ParamVar::T32,
        ParamVar::S11,
        ParamVar::S12,
        ParamVar::S21,
        ParamVar::S22,
        ParamVar::S31,
        ParamVar::S32,
    ];

    pub const HOLOMORPHIC: [ParamVar; 6] = [
        ParamVar::T11,
        ParamVar::T12,
        ParamVar::T21,
        ParamVar::T22,
        ParamVar::T31,
        ParamVar::T32,
    ];

    pub const ANTIHOLOMORPHIC: [ParamVar; 6] = [
        ParamVar::S11,
        ParamVar::S12,
        ParamVar::S21,
        ParamVar::S22,
        ParamVar::S31,
        ParamVar::S32,
    ];

    /// Position in `ALL`; `t` variables occupy 0..6.
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(k: usize) -> ParamVar {
        ParamVar::ALL[k]
    }

    pub fn t(i: usize, lambda: usize) -> ParamVar {
        assert!((1..=3).contains(&i) && (1..=2).contains(&lambda));
        ParamVar::from_index(2 * (i - 1) + (lambda - 1))
    }

    pub fn s(i: usize, lambda: usize) -> ParamVar {
        ParamVar::t(i, lambda).conj()
    }

    pub fn conj(self) -> ParamVar {
        ParamVar::from_index((self.index() + 6) % 12)
    }

    pub fn is_holomorphic(self) -> bool {
        self.index() < 6
    }

    pub fn name(self) -> &'static str {
        NAMES[self.index()]
    }
}

impl fmt::Display for ParamVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ParamVar {
    type Err = ScalarError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        NAMES
            .iter()
            .position(|n| *n == s)
            .map(ParamVar::from_index)
            .ok_or_else(|| ScalarError::UnknownParam(s.to_string()))
    }
}
