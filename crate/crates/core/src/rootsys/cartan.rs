use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Series> {
        Some(match c.to_ascii_uppercase() {
            'A' => Series::A,
            'B' => Series::B,
            'C' => Series::C,
            'D' => Series::D,
            'E' => Series::E,
            'F' => Series::F,
            'G' => Series::G,
            _ => return None,
        })
    }

    pub fn rank_is_valid(self, rank: usize) -> bool {
        match self {
            Series::A => rank >= 1,
            Series::B | Series::C => rank >= 2,
            Series::D => rank >= 4,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        }
    }
}

/// Cartan type of one orbit of components, possibly twisted and over `q^e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CartanLabel {
    pub series: Series,
    pub rank: usize,
    pub twist_order: u8,
    pub field_power: usize,
}

impl CartanLabel {
    pub fn new(series: Series, rank: usize) -> Self {
        CartanLabel { series, rank, twist_order: 1, field_power: 1 }
    }

    pub fn twisted(series: Series, rank: usize, twist_order: u8) -> Self {
        CartanLabel { series, rank, twist_order, field_power: 1 }
    }

    pub fn over(mut self, field_power: usize) -> Self {
        self.field_power = field_power;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !self.series.rank_is_valid(self.rank) {
            return Err(Error::invalid(format!("no root system of type {}{}", self.series.letter(), self.rank)));
        }
        if self.field_power == 0 {
            return Err(Error::invalid("field power must be positive"));
        }
        let ok = match self.twist_order {
            1 => true,
            2 => matches!(
                (self.series, self.rank),
                (Series::A, 2..) | (Series::D, _) | (Series::E, 6)
            ),
            3 => (self.series, self.rank) == (Series::D, 4),
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::invalid(format!("no twist of order {} on {self}", self.twist_order)))
        }
    }

    /// Rewrites degenerate labels into their standard form.
    ///
    /// `B1`, `C1` become `A1`; `D2` splits into two `A1`; `D3` becomes `A3`;
    /// rank-zero labels vanish.
    pub fn normalized(self) -> Vec<CartanLabel> {
        let e = self.field_power;
        match (self.series, self.rank, self.twist_order) {
            (_, 0, _) => vec![],
            (Series::B | Series::C | Series::D, 1, _) => vec![CartanLabel::new(Series::A, 1).over(e)],
            (Series::D, 2, 1) => vec![CartanLabel::new(Series::A, 1).over(e); 2],
            (Series::D, 2, _) => vec![CartanLabel::new(Series::A, 1).over(2 * e)],
            (Series::D, 3, t) => vec![CartanLabel::twisted(Series::A, 3, t).over(e)],
            (Series::A, 1, _) => vec![CartanLabel::new(Series::A, 1).over(e)],
            _ => vec![self],
        }
    }
}

impl fmt::Display for CartanLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twist_order > 1 {
            write!(f, "{}", self.twist_order)?;
        }
        write!(f, "{}{}", self.series.letter(), self.rank)?;
        if self.field_power > 1 {
            write!(f, "(q^{})", self.field_power)?;
        }
        Ok(())
    }
}

impl FromStr for CartanLabel {
    type Err = Error;

    /// Parses `E8`, `2D4`, `3D4`, `C2(q^2)`, `2A3(q^2)`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::invalid(format!("cannot parse Cartan label {s:?}"));
        let s = s.trim();
        let (body, power) = match s.find('(') {
            Some(i) => {
                let inner = s[i..].strip_prefix("(q^").and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?;
                (&s[..i], inner.parse::<usize>().map_err(|_| bad())?)
            }
            None => (s, 1),
        };
        let mut chars = body.chars().peekable();
        let mut twist = 1u8;
        if let Some(c) = chars.peek().copied() {
            if c.is_ascii_digit() {
                twist = c.to_digit(10).unwrap() as u8;
                chars.next();
            }
        }
        let series = chars.next().and_then(Series::from_letter).ok_or_else(bad)?;
        let rank: usize = chars.collect::<String>().parse().map_err(|_| bad())?;
        let label = CartanLabel::twisted(series, rank, twist).over(power);
        label.validate()?;
        Ok(label)
    }
}

/// Gram matrix of the invariant form on the simple roots, Bourbaki labelling,
/// short roots of squared length 2.
pub fn gram_matrix(series: Series, rank: usize) -> Result<Vec<Vec<i64>>> {
    if !series.rank_is_valid(rank) {
        return Err(Error::invalid(format!("no root system of type {}{rank}", series.letter())));
    }
    let n = rank;
    let mut g = vec![vec![0i64; n]; n];
    let edge = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
        g[i][j] = v;
        g[j][i] = v;
    };
    match series {
        Series::A => {
            for i in 0..n {
                g[i][i] = 2;
            }
            for i in 1..n {
                edge(&mut g, i - 1, i, -1);
            }
        }
        Series::B => {
            for i in 0..n {
                g[i][i] = 4;
            }
            g[n - 1][n - 1] = 2;
            for i in 1..n {
                edge(&mut g, i - 1, i, -2);
            }
        }
        Series::C => {
            for i in 0..n {
                g[i][i] = 2;
            }
            g[n - 1][n - 1] = 4;
            for i in 1..n {
                edge(&mut g, i - 1, i, -1);
            }
            edge(&mut g, n - 2, n - 1, -2);
        }
        Series::D => {
            for i in 0..n {
                g[i][i] = 2;
            }
            for i in 1..n - 1 {
                edge(&mut g, i - 1, i, -1);
            }
            edge(&mut g, n - 3, n - 1, -1);
        }
        Series::E => {
            for i in 0..n {
                g[i][i] = 2;
            }
            for (a, b) in [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)] {
                if a <= n && b <= n {
                    edge(&mut g, a - 1, b - 1, -1);
                }
            }
        }
        Series::F => {
            g[0][0] = 4;
            g[1][1] = 4;
            g[2][2] = 2;
            g[3][3] = 2;
            edge(&mut g, 0, 1, -2);
            edge(&mut g, 1, 2, -2);
            edge(&mut g, 2, 3, -1);
        }
        Series::G => {
            g[0][0] = 2;
            g[1][1] = 6;
            edge(&mut g, 0, 1, -3);
        }
    }
    Ok(g)
}

/// Permutation of the simple roots (0-based) realizing the diagram automorphism
/// of the given order, with `perm[i]` the image of node `i`.
pub fn diagram_twist(series: Series, rank: usize, order: u8) -> Result<Vec<usize>> {
    CartanLabel::twisted(series, rank, order).validate()?;
    let n = rank;
    let mut p: Vec<usize> = (0..n).collect();
    match (series, order) {
        (_, 1) => {}
        (Series::A, 2) => p = (0..n).map(|i| n - 1 - i).collect(),
        (Series::D, 2) => p.swap(n - 2, n - 1),
        (Series::D, 3) => {
            p[0] = 2;
            p[2] = 3;
            p[3] = 0;
        }
        (Series::E, 2) => {
            p.swap(0, 5);
            p.swap(2, 4);
        }
        _ => unreachable!("validated above"),
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn label_round_trip() {
        for s in ["E8", "2D4", "3D4", "C2(q^2)", "2A3(q^2)", "A1"] {
            let l: CartanLabel = s.parse().unwrap();
            assert_eq!(l.to_string(), s);
        }
        assert!("3D5".parse::<CartanLabel>().is_err());
        assert!("2A1".parse::<CartanLabel>().is_err());
        assert!("E9".parse::<CartanLabel>().is_err());
    }

    #[test]
    fn degenerate_labels() {
        let d2 = CartanLabel::new(Series::D, 2);
        assert_eq!(d2.normalized(), vec![CartanLabel::new(Series::A, 1); 2]);
        let td2 = CartanLabel::twisted(Series::D, 2, 2);
        assert_eq!(td2.normalized(), vec![CartanLabel::new(Series::A, 1).over(2)]);
        let td3 = CartanLabel::twisted(Series::D, 3, 2).over(2);
        assert_eq!(td3.normalized()[0].to_string(), "2A3(q^2)");
        assert!(CartanLabel::new(Series::C, 0).normalized().is_empty());
    }

    #[test]
    fn gram_is_symmetric() {
        for (s, r) in [(Series::B, 3), (Series::C, 4), (Series::D, 5), (Series::E, 8), (Series::F, 4), (Series::G, 2)] {
            let g = gram_matrix(s, r).unwrap();
            for i in 0..r {
                for j in 0..r {
                    assert_eq!(g[i][j], g[j][i]);
                }
            }
        }
    }

    #[test]
    fn twists_preserve_gram() {
        for (s, r, o) in [(Series::A, 5, 2), (Series::D, 4, 3), (Series::D, 6, 2), (Series::E, 6, 2)] {
            let g = gram_matrix(s, r).unwrap();
            let p = diagram_twist(s, r, o).unwrap();
            for i in 0..r {
                for j in 0..r {
                    assert_eq!(g[p[i]][p[j]], g[i][j]);
                }
            }
        }
    }
}
