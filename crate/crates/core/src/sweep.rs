//! Parameter sweeps over `(m, d)` grids.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::logconcavity::{check_ilc, check_strong_ilc, CheckReport, SchurPoly};
use crate::matroid::{char_poly, inverse_kl_poly, kl_poly, reduced_char_poly, z_poly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Char,
    RedChar,
    Kl,
    InvKl,
    Z,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::Char, Family::RedChar, Family::Kl, Family::InvKl, Family::Z];

    pub fn name(self) -> &'static str {
        match self {
            Family::Char => "char",
            Family::RedChar => "redchar",
            Family::Kl => "kl",
            Family::InvKl => "invkl",
            Family::Z => "z",
        }
    }

    /// The polynomial of `U_{m,d}`; signed families come back unsigned.
    pub fn poly(self, m: i64, d: i64) -> Result<SchurPoly> {
        match self {
            Family::Char => Ok(char_poly(m, d)?.unsigned()),
            Family::RedChar => Ok(reduced_char_poly(m, d)?.unsigned()),
            Family::Kl => kl_poly(m, d),
            Family::InvKl => inverse_kl_poly(m, d),
            Family::Z => z_poly(m, d),
        }
    }

    /// Like [`Family::poly`] but keeping the signs of the characteristic
    /// polynomials.
    pub fn signed_poly(self, m: i64, d: i64) -> Result<SchurPoly> {
        match self {
            Family::Char => Ok(char_poly(m, d)?.signed()),
            Family::RedChar => Ok(reduced_char_poly(m, d)?.signed()),
            _ => self.poly(m, d),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?} (expected char, redchar, kl, invkl or z)")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Property {
    Ilc,
    StrongIlc,
}

impl Property {
    pub fn name(self) -> &'static str {
        match self {
            Property::Ilc => "ilc",
            Property::StrongIlc => "strong-ilc",
        }
    }

    pub fn check(self, p: &SchurPoly) -> Result<CheckReport> {
        match self {
            Property::Ilc => check_ilc(p),
            Property::StrongIlc => check_strong_ilc(p),
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ilc" => Ok(Property::Ilc),
            "strong-ilc" => Ok(Property::StrongIlc),
            _ => Err(Error::Parse(format!("unknown property {s:?} (expected ilc or strong-ilc)"))),
        }
    }
}

/// Grid `min_m <= m <= max_m`, `min_d <= d <= max_d`, optionally cut to
/// `m + d <= max_sum`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grid {
    pub min_m: i64,
    pub max_m: i64,
    pub min_d: i64,
    pub max_d: i64,
    pub max_sum: Option<i64>,
}

impl Grid {
    pub fn new(min_m: i64, max_m: i64, min_d: i64, max_d: i64) -> Self {
        Grid { min_m, max_m, min_d: min_d.max(1), max_d, max_sum: None }
    }

    /// `m >= 0`, `d >= 1`, `m + d <= n`.
    pub fn sum_at_most(n: i64) -> Self {
        Grid { min_m: 0, max_m: n - 1, min_d: 1, max_d: n, max_sum: Some(n) }
    }

    pub fn with_max_sum(mut self, n: i64) -> Self {
        self.max_sum = Some(n);
        self
    }

    pub fn cells(&self) -> Vec<(i64, i64)> {
        let mut out = Vec::new();
        for m in self.min_m.max(0)..=self.max_m {
            for d in self.min_d.max(1)..=self.max_d {
                if self.max_sum.is_none_or(|n| m + d <= n) {
                    out.push((m, d));
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellResult {
    pub m: i64,
    pub d: i64,
    pub report: CheckReport,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepReport {
    pub family: Family,
    pub property: Property,
    pub cells: Vec<CellResult>,
}

impl SweepReport {
    pub fn all_pass(&self) -> bool {
        self.cells.iter().all(|c| c.report.verdict)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CellResult> {
        self.cells.iter().filter(|c| !c.report.verdict)
    }

    pub fn cells_checked(&self) -> usize {
        self.cells.iter().map(|c| c.report.cells_checked).sum()
    }
}

/// Checks every grid cell, in parallel on the current rayon pool. The result
/// is in grid order whatever the scheduling.
pub fn sweep(family: Family, property: Property, grid: &Grid) -> Result<SweepReport> {
    let cells = grid
        .cells()
        .into_par_iter()
        .map(|(m, d)| Ok(CellResult { m, d, report: property.check(&family.poly(m, d)?)? }))
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepReport { family, property, cells })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_cells() {
        assert_eq!(Grid::sum_at_most(3).cells(), vec![(0, 1), (0, 2), (0, 3), (1, 1), (1, 2), (2, 1)]);
        assert_eq!(Grid::new(1, 2, 0, 1).cells(), vec![(1, 1), (2, 1)]);
    }

    #[test]
    fn names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("kls".parse::<Family>().is_err());
        assert_eq!("strong-ilc".parse::<Property>().unwrap(), Property::StrongIlc);
    }

    #[test]
    fn small_sweep_passes() {
        let r = sweep(Family::Kl, Property::StrongIlc, &Grid::sum_at_most(7)).unwrap();
        assert!(r.all_pass());
        assert_eq!(r.cells.len(), 28);
    }
}
