//! Permutations of {1, 2, 3} in one-line notation.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// `Perm3([s1, s2, s3])` sends `i` to `si`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm3([u8; 3]);

impl Perm3 {
    pub const ID: Perm3 = Perm3([1, 2, 3]);
    /// `(2 1 3)`
    pub const T2: Perm3 = Perm3([2, 1, 3]);
    /// `(3 1 2)`
    pub const T3: Perm3 = Perm3([3, 1, 2]);
    pub const T3_SQ: Perm3 = Perm3([2, 3, 1]);
    pub const T2T3: Perm3 = Perm3([3, 2, 1]);
    pub const T2T3_SQ: Perm3 = Perm3([1, 3, 2]);

    /// Even permutations first, then odd ones.
    pub const ALL: [Perm3; 6] = [
        Perm3::ID,
        Perm3::T3,
        Perm3::T3_SQ,
        Perm3::T2,
        Perm3::T2T3,
        Perm3::T2T3_SQ,
    ];

    pub const EVEN: [Perm3; 3] = [Perm3::ID, Perm3::T3, Perm3::T3_SQ];
    pub const ODD: [Perm3; 3] = [Perm3::T2, Perm3::T2T3, Perm3::T2T3_SQ];

    pub fn new(images: [u8; 3]) -> Result<Self, Error> {
        let mut sorted = images;
        sorted.sort_unstable();
        if sorted != [1, 2, 3] {
            return Err(Error::Parse(format!("{images:?} is not a permutation of 1, 2, 3")));
        }
        Ok(Perm3(images))
    }

    pub fn images(self) -> [u8; 3] {
        self.0
    }

    /// `σ(i)` for `i` in 1..=3.
    pub fn apply(self, i: usize) -> usize {
        self.0[i - 1] as usize
    }

    pub fn inverse(self) -> Perm3 {
        let mut out = [0u8; 3];
        for i in 1..=3 {
            out[self.apply(i) - 1] = i as u8;
        }
        Perm3(out)
    }

    pub fn is_even(self) -> bool {
        let inversions = (0..3)
            .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
            .filter(|&(i, j)| self.0[i] > self.0[j])
            .count();
        inversions % 2 == 0
    }

    /// Word in the generators `t2`, `t3`.
    pub fn name(self) -> &'static str {
        match self.0 {
            [1, 2, 3] => "id",
            [2, 1, 3] => "t2",
            [3, 1, 2] => "t3",
            [2, 3, 1] => "t3^2",
            [3, 2, 1] => "t2t3",
            [1, 3, 2] => "t2t3^2",
            _ => unreachable!("Perm3 invariant"),
        }
    }

    pub fn one_line(self) -> String {
        format!("({} {} {})", self.0[0], self.0[1], self.0[2])
    }
}

/// `(σ * τ)(i) = σ(τ(i))`.
impl Mul for Perm3 {
    type Output = Perm3;

    fn mul(self, rhs: Perm3) -> Perm3 {
        Perm3([1, 2, 3].map(|i| self.0[rhs.apply(i) - 1]))
    }
}

impl fmt::Display for Perm3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for Perm3 {
    type Err = Error;

    /// Accepts generator words (`id`, `t2`, `t3^2`, `t2t3`, also with `τ` or
    /// `tau`) and one-line notation such as `(2 1 3)` or `213`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s
            .trim()
            .replace("tau", "t")
            .replace(['τ', '_'], "t")
            .chars()
            .filter(|c| !c.is_whitespace() && *c != ',')
            .collect();
        if let Some(p) = Perm3::ALL.iter().find(|p| p.name() == compact) {
            return Ok(*p);
        }
        let digits = compact.trim_start_matches('(').trim_end_matches(')');
        if digits.len() == 3 && digits.chars().all(|c| c.is_ascii_digit()) {
            let d: Vec<u8> = digits.bytes().map(|b| b - b'0').collect();
            return Perm3::new([d[0], d[1], d[2]]);
        }
        Err(Error::Parse(format!("unknown permutation `{s}`")))
    }
}

impl Serialize for Perm3 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for Perm3 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_have_expected_orders() {
        assert_eq!(Perm3::T2 * Perm3::T2, Perm3::ID);
        assert_eq!(Perm3::T3 * Perm3::T3 * Perm3::T3, Perm3::ID);
        assert_eq!(Perm3::T3 * Perm3::T3, Perm3::T3_SQ);
        assert_eq!(Perm3::T2 * Perm3::T3, Perm3::T2T3);
        assert_eq!(Perm3::T2 * Perm3::T3_SQ, Perm3::T2T3_SQ);
    }

    #[test]
    fn generators_span_the_group() {
        let mut seen = vec![Perm3::ID];
        let mut i = 0;
        while i < seen.len() {
            for g in [Perm3::T2, Perm3::T3] {
                let p = seen[i] * g;
                if !seen.contains(&p) {
                    seen.push(p);
                }
            }
            i += 1;
        }
        assert_eq!(seen.len(), 6);
    }

    #[test]
    fn parity_split() {
        assert!(Perm3::EVEN.iter().all(|p| p.is_even()));
        assert!(Perm3::ODD.iter().all(|p| !p.is_even()));
    }

    #[test]
    fn inverse_and_parse() {
        for p in Perm3::ALL {
            assert_eq!(p * p.inverse(), Perm3::ID);
            assert_eq!(p.name().parse::<Perm3>().unwrap(), p);
            assert_eq!(p.one_line().parse::<Perm3>().unwrap(), p);
        }
        assert_eq!("τ2τ3^2".parse::<Perm3>().unwrap(), Perm3::T2T3_SQ);
        assert_eq!("tau3".parse::<Perm3>().unwrap(), Perm3::T3);
        assert!("(1 1 2)".parse::<Perm3>().is_err());
        assert!("t4".parse::<Perm3>().is_err());
    }
}
