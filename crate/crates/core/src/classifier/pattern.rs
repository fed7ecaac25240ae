//! The 3/5/3 black-white array of a parameter vector.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::engine::ParameterVector;
use crate::error::{Error, Result};

/// Slot order: `b2 b0 b1 | d4 d2 d0 d1 d3 | a2 a0 a1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slot {
    B2,
    B0,
    B1,
    D4,
    D2,
    D0,
    D1,
    D3,
    A2,
    A0,
    A1,
}

impl Slot {
    pub const ALL: [Slot; 11] =
        [Slot::B2, Slot::B0, Slot::B1, Slot::D4, Slot::D2, Slot::D0, Slot::D1, Slot::D3, Slot::A2, Slot::A0, Slot::A1];

    /// Slots that may be flipped to white; `a0` and `b0` stay black.
    pub const FLIPPABLE: [Slot; 9] =
        [Slot::B2, Slot::B1, Slot::D4, Slot::D2, Slot::D0, Slot::D1, Slot::D3, Slot::A2, Slot::A1];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Slot::B2 => "b2",
            Slot::B0 => "b0",
            Slot::B1 => "b1",
            Slot::D4 => "d4",
            Slot::D2 => "d2",
            Slot::D0 => "d0",
            Slot::D1 => "d1",
            Slot::D3 => "d3",
            Slot::A2 => "a2",
            Slot::A0 => "a0",
            Slot::A1 => "a1",
        }
    }
}

const ROW1: std::ops::Range<usize> = 0..3;
const ROW2: std::ops::Range<usize> = 3..8;
const ROW3: std::ops::Range<usize> = 8..11;

/// `true` is black (nonzero), `false` is white (zero).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZeroPattern {
    cells: [bool; 11],
}

impl ZeroPattern {
    pub fn new(cells: [bool; 11]) -> ZeroPattern {
        ZeroPattern { cells }
    }

    pub fn all_black() -> ZeroPattern {
        ZeroPattern { cells: [true; 11] }
    }

    pub fn cells(&self) -> &[bool; 11] {
        &self.cells
    }

    pub fn get(&self, slot: Slot) -> bool {
        self.cells[slot.index()]
    }

    pub fn set(&mut self, slot: Slot, black: bool) {
        self.cells[slot.index()] = black;
    }

    pub fn whites(&self) -> usize {
        self.cells.iter().filter(|c| !**c).count()
    }

    fn blacks_in(&self, row: std::ops::Range<usize>) -> usize {
        self.cells[row].iter().filter(|c| **c).count()
    }

    /// Reverse every row: the `q <-> 1/q` exchange.
    pub fn mirror(&self) -> ZeroPattern {
        let mut cells = self.cells;
        cells[ROW1].reverse();
        cells[ROW2].reverse();
        cells[ROW3].reverse();
        ZeroPattern { cells }
    }

    /// Swap the first and third rows: `x <-> h` duality. Needs two blacks in
    /// the first row.
    pub fn dual(&self) -> Option<ZeroPattern> {
        if self.blacks_in(ROW1) < 2 {
            return None;
        }
        let mut cells = self.cells;
        for i in 0..3 {
            cells.swap(ROW1.start + i, ROW3.start + i);
        }
        Some(ZeroPattern { cells })
    }

    /// Flip `slot` to white plus the forced `d3`/`d4` whitening.
    pub fn flip(&self, slot: Slot) -> ZeroPattern {
        let mut out = *self;
        out.set(slot, false);
        match slot {
            Slot::A1 | Slot::B1 => out.set(Slot::D3, false),
            Slot::A2 | Slot::B2 => out.set(Slot::D4, false),
            _ => {}
        }
        out
    }

    /// `d3` black exactly when `a1`, `b1` are, and likewise `d4` with `a2`, `b2`.
    /// Rule 1 gives one direction; the other follows from `d3 = a1 b1 / q`
    /// and `d4 = q a2 b2`.
    pub fn realizable(&self) -> bool {
        use Slot::*;
        self.get(D3) == (self.get(A1) && self.get(B1)) && self.get(D4) == (self.get(A2) && self.get(B2))
    }

    /// `BBB|BBBBW|BBW`.
    pub fn to_code(&self) -> String {
        let row = |r: std::ops::Range<usize>| -> String {
            self.cells[r].iter().map(|&b| if b { 'B' } else { 'W' }).collect()
        };
        format!("{}|{}|{}", row(ROW1), row(ROW2), row(ROW3))
    }
}

impl fmt::Display for ZeroPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_code())
    }
}

impl fmt::Debug for ZeroPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ZeroPattern({})", self.to_code())
    }
}

impl FromStr for ZeroPattern {
    type Err = Error;

    /// Accepts `|` or `/` as row separators.
    fn from_str(s: &str) -> Result<ZeroPattern> {
        let rows: Vec<&str> = s.split(['|', '/']).collect();
        if rows.len() != 3 || rows[0].len() != 3 || rows[1].len() != 5 || rows[2].len() != 3 {
            return Err(Error::Parse(format!("pattern {s:?} is not a 3/5/3 array")));
        }
        let mut cells = [false; 11];
        for (i, ch) in rows.concat().chars().enumerate() {
            cells[i] = match ch {
                'B' | 'b' => true,
                'W' | 'w' => false,
                _ => return Err(Error::Parse(format!("pattern {s:?}: unexpected {ch:?}"))),
            };
        }
        Ok(ZeroPattern { cells })
    }
}

impl Serialize for ZeroPattern {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_code())
    }
}

impl<'de> Deserialize<'de> for ZeroPattern {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Numbers of the violated rules among 1 to 5, ascending.
pub fn validate(p: &ZeroPattern) -> Vec<u8> {
    use Slot::*;
    let mut out = Vec::new();
    let rule1 = (p.get(D3) && !(p.get(A1) && p.get(B1))) || (p.get(D4) && !(p.get(A2) && p.get(B2)));
    if rule1 {
        out.push(1);
    }
    if !(p.get(A0) && p.get(B0)) {
        out.push(2);
    }
    let row2 = &p.cells[ROW2];
    let first = row2.iter().position(|&b| b);
    let last = row2.iter().rposition(|&b| b);
    if let (Some(f), Some(l)) = (first, last) {
        if row2[f..=l].iter().any(|&b| !b) {
            out.push(3);
        }
    }
    if p.blacks_in(ROW3) < 2 {
        out.push(4);
    }
    if p.blacks_in(ROW2) < 2 {
        out.push(5);
    }
    out
}

/// Exact zero tests on the 11 coefficients; `a0`, `b0` count as black.
pub fn pattern_of(pv: &ParameterVector) -> Result<ZeroPattern> {
    let [_, a1, a2] = pv.a();
    let [_, b1, b2] = pv.b();
    let [d0, d1, d2, d3, d4] = pv.d();
    let nz = |v: &crate::exact::Rational| !v.is_zero();
    let p = ZeroPattern::new([nz(b2), true, nz(b1), nz(d4), nz(d2), nz(d0), nz(d1), nz(d3), nz(a2), true, nz(a1)]);
    let violated = validate(&p);
    if violated.is_empty() {
        Ok(p)
    } else {
        Err(Error::RuleViolation(violated))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, Rational};

    fn p(s: &str) -> ZeroPattern {
        s.parse().unwrap()
    }

    #[test]
    fn code_round_trip() {
        let x = p("BBB/BBBBW/BBW");
        assert_eq!(x.to_code(), "BBB|BBBBW|BBW");
        assert_eq!(x.to_code().parse::<ZeroPattern>().unwrap(), x);
        assert!("BBB|BBBB|BBW".parse::<ZeroPattern>().is_err());
        assert!("BBB|BBBBX|BBW".parse::<ZeroPattern>().is_err());
    }

    #[test]
    fn rule_examples() {
        assert!(validate(&ZeroPattern::all_black()).is_empty());
        assert_eq!(validate(&p("BBB|BWBBB|BBB")), vec![3]);
        assert_eq!(validate(&p("BBW|BBBBB|BBB")), vec![1]);
        assert_eq!(validate(&p("BWB|BBBBB|BBB")), vec![2]);
        assert_eq!(validate(&p("WBW|WWWWW|WBW")), vec![4, 5]);
    }

    #[test]
    fn rule1_without_realizability() {
        // a1, b1 black but d3 white: allowed by the rules, impossible numerically
        let q = p("BBB|BBBBW|BBB");
        assert!(validate(&q).is_empty());
        assert!(!q.realizable());
    }

    #[test]
    fn mirror_and_dual() {
        let x = p("BBW|BBBBW|BBB");
        assert_eq!(x.mirror(), p("WBB|WBBBB|BBB"));
        assert_eq!(x.mirror().mirror(), x);
        assert_eq!(p("BBB|BBBBW|BBW").dual(), Some(x));
        assert_eq!(p("WBW|WBBWW|BBB").dual(), None);
    }

    #[test]
    fn flip_cascades() {
        assert_eq!(ZeroPattern::all_black().flip(Slot::A1), p("BBB|BBBBW|BBW"));
        assert_eq!(ZeroPattern::all_black().flip(Slot::B2), p("WBB|WBBBB|BBB"));
        assert_eq!(ZeroPattern::all_black().flip(Slot::D0), p("BBB|BBWBB|BBB"));
    }

    #[test]
    fn pattern_of_vector() {
        // d1 = d3 = 0 and a1 = 0
        let pv = ParameterVector::from_free(
            rat(1, 2),
            [Rational::zero(), Rational::zero(), Rational::one()],
            [Rational::zero(), rat(3, 1), rat(1, 3)],
            Rational::zero(),
            rat(2, 1),
        )
        .unwrap();
        assert_eq!(pattern_of(&pv).unwrap(), p("BBB|BBBWW|BBW"));
    }

    #[test]
    fn pattern_of_rejects_split_row() {
        // d2 = 0 between nonzero d4 and d0
        let pv = ParameterVector::from_free(
            rat(1, 2),
            [Rational::zero(), Rational::zero(), Rational::one()],
            [Rational::zero(), Rational::zero(), rat(1, 3)],
            rat(1, 1),
            Rational::zero(),
        )
        .unwrap();
        assert_eq!(pattern_of(&pv), Err(Error::RuleViolation(vec![3])));
    }
}
