//! Builtin varieties and their class dictionaries.
//!
//! Conventions:
//!
//! * `p<d>`: rays `e_1, …, e_d, -(e_1 + … + e_d)`; `H` is the last boundary
//!   divisor. Standard coordinates `(k)` mean `kH`.
//! * `p1xp1`: rays `(1,0), (-1,0), (0,1), (0,-1)`; `A = D_2`, `B = D_4`, so
//!   `aA + bB` has polytope `[0,a] × [0,b]`. Standard coordinates `(a, b)`.
//! * `bl_p2` (the Hirzebruch surface F_1): rays `(1,0), (0,1), (-1,-1), (1,1)`;
//!   `H = D_3`, `E = D_4`, so `aH - bE` has coefficients `(0, 0, a, -b)` and
//!   polytope `{x >= 0, y >= 0, b <= x + y <= a}`. Standard coordinates `(a, b)`
//!   mean `aH - bE`.

use num_traits::Zero;

use super::classes::NSBasis;
use super::divisor::TDivisor;
use super::fan::Fan;
use crate::error::{Error, Result};
use crate::geometry::{parse_rational, polytope::combinations, Rational};

pub const BUILTIN_NAMES: [&str; 5] = ["p1", "p2", "p3", "p1xp1", "bl_p2"];

pub fn projective_space(d: usize) -> Result<Fan> {
    if !(1..=3).contains(&d) {
        return Err(Error::InvalidFan(format!("builtin projective spaces have dimension 1..=3, got {d}")));
    }
    let mut rays: Vec<Vec<i64>> = (0..d)
        .map(|i| (0..d).map(|j| i64::from(i == j)).collect())
        .collect();
    rays.push(vec![-1; d]);
    Fan::new(format!("p{d}"), d, rays, combinations(d + 1, d))
}

pub fn p1xp1() -> Fan {
    Fan::new(
        "p1xp1",
        2,
        vec![vec![1, 0], vec![-1, 0], vec![0, 1], vec![0, -1]],
        vec![vec![0, 2], vec![2, 1], vec![1, 3], vec![3, 0]],
    )
    .expect("valid builtin fan")
}

pub fn bl_p2() -> Fan {
    Fan::new(
        "bl_p2",
        2,
        vec![vec![1, 0], vec![0, 1], vec![-1, -1], vec![1, 1]],
        vec![vec![0, 3], vec![3, 1], vec![1, 2], vec![2, 0]],
    )
    .expect("valid builtin fan")
}

/// A fan together with the named generators used to write classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Variety {
    pub fan: Fan,
    pub symbols: Vec<String>,
    pub generators: Vec<TDivisor>,
}

impl Variety {
    pub fn builtin(name: &str) -> Result<Self> {
        let (fan, symbols, generators) = match name {
            "p1" | "p2" | "p3" => {
                let d: usize = name[1..].parse().expect("digit");
                let fan = projective_space(d)?;
                let mut h = vec![0; d + 1];
                h[d] = 1;
                (fan, vec!["H"], vec![TDivisor::from_ints(&h)])
            }
            "p1xp1" => (
                p1xp1(),
                vec!["A", "B"],
                vec![TDivisor::from_ints(&[0, 1, 0, 0]), TDivisor::from_ints(&[0, 0, 0, 1])],
            ),
            "bl_p2" => (
                bl_p2(),
                vec!["H", "E"],
                vec![TDivisor::from_ints(&[0, 0, 1, 0]), TDivisor::from_ints(&[0, 0, 0, 1])],
            ),
            other => {
                return Err(Error::Parse(format!(
                    "unknown builtin variety {other:?} (known: {})",
                    BUILTIN_NAMES.join(", ")
                )))
            }
        };
        Ok(Self {
            fan,
            symbols: symbols.into_iter().map(String::from).collect(),
            generators,
        })
    }

    /// A variety read from a file has no class dictionary.
    pub fn from_fan(fan: Fan) -> Self {
        Self {
            fan,
            symbols: Vec::new(),
            generators: Vec::new(),
        }
    }

    pub fn name(&self) -> &str {
        &self.fan.name
    }

    pub fn dim(&self) -> usize {
        self.fan.dim
    }

    /// `sum x_i G_i` over the dictionary generators.
    pub fn class(&self, coords: &[Rational]) -> Result<TDivisor> {
        if self.generators.is_empty() {
            return Err(Error::Parse(format!(
                "variety {} has no class dictionary; give ray coefficients",
                self.name()
            )));
        }
        if coords.len() != self.generators.len() {
            return Err(Error::Parse(format!(
                "expected {} class coordinates ({}), got {}",
                self.generators.len(),
                self.symbols.join(", "),
                coords.len()
            )));
        }
        let mut d = TDivisor::zero(self.fan.num_rays());
        for (x, g) in coords.iter().zip(&self.generators) {
            d = &d + &g.scale(x);
        }
        Ok(d)
    }

    /// Parses `"2H-1E"`, `"1/2A+B"` or a comma list `"2,-1"` of generator
    /// coefficients.
    pub fn parse_class(&self, text: &str) -> Result<TDivisor> {
        let text: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(Error::Parse("empty class".into()));
        }
        if !text.chars().any(|c| c.is_ascii_alphabetic()) {
            let coords = parse_rational_list(&text)?;
            return self.class(&coords);
        }
        let mut coords = vec![Rational::zero(); self.symbols.len()];
        let mut rest = text.as_str();
        while !rest.is_empty() {
            let end = rest[1..]
                .find(['+', '-'])
                .map_or(rest.len(), |i| i + 1);
            let term = &rest[..end];
            rest = &rest[end..];
            let split = term
                .find(|c: char| c.is_ascii_alphabetic())
                .ok_or_else(|| Error::Parse(format!("term {term:?} names no generator")))?;
            let (coef, symbol) = term.split_at(split);
            let coef = match coef {
                "" | "+" => Rational::from_integer(1.into()),
                "-" => Rational::from_integer((-1).into()),
                c => parse_rational(c)?,
            };
            let idx = self.symbols.iter().position(|s| s == symbol).ok_or_else(|| {
                Error::Parse(format!(
                    "unknown generator {symbol:?} for {} (known: {})",
                    self.name(),
                    self.symbols.join(", ")
                ))
            })?;
            coords[idx] += coef;
        }
        self.class(&coords)
    }

    /// The coordinates used by the published closed forms.
    pub fn standard_class(&self, coords: &[Rational]) -> Result<TDivisor> {
        match self.name() {
            "bl_p2" if coords.len() == 2 => self.class(&[coords[0].clone(), -coords[1].clone()]),
            "p1" | "p2" | "p3" | "p1xp1" => self.class(coords),
            "bl_p2" => Err(Error::Parse("bl_p2 classes take two coordinates (a, b)".into())),
            other => Err(Error::Parse(format!("no standard coordinates for {other}"))),
        }
    }

    /// Basis in which [`standard_class`](Self::standard_class) coordinates are
    /// class coordinates.
    pub fn standard_basis(&self) -> Result<NSBasis> {
        let rank = self.fan.num_rays() - self.fan.dim;
        let classes = (0..rank)
            .map(|i| {
                let mut e = vec![Rational::zero(); rank];
                e[i] = Rational::from_integer(1.into());
                self.standard_class(&e)
            })
            .collect::<Result<_>>()?;
        NSBasis::new(&self.fan, classes)
    }

    /// Ample, globally generated basis used for sup-norms in the bounds.
    pub fn ample_basis(&self) -> Result<NSBasis> {
        let coords: Vec<Vec<i64>> = match self.name() {
            "p1" | "p2" | "p3" => vec![vec![1]],
            "p1xp1" => vec![vec![1, 1], vec![1, 2]],
            "bl_p2" => vec![vec![2, 1], vec![3, 1]],
            other => return Err(Error::Parse(format!("no documented ample basis for {other}"))),
        };
        let classes = coords
            .iter()
            .map(|c| self.standard_class(&crate::geometry::linalg::to_rational_vec(c)))
            .collect::<Result<_>>()?;
        NSBasis::new(&self.fan, classes)
    }
}

pub fn parse_rational_list(text: &str) -> Result<Vec<Rational>> {
    text.split(',').map(parse_rational).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::rational::{int, rat};

    #[test]
    fn builtin_fans_are_valid() {
        for name in BUILTIN_NAMES {
            let v = Variety::builtin(name).unwrap();
            assert_eq!(v.name(), name);
            assert!(v.standard_basis().is_ok());
            assert!(v.ample_basis().unwrap().all_ample_and_globally_generated());
        }
        assert!(Variety::builtin("p4").is_err());
        assert!(projective_space(4).is_err());
    }

    #[test]
    fn class_parsing() {
        let bl = Variety::builtin("bl_p2").unwrap();
        let expected = TDivisor::from_ints(&[0, 0, 2, -1]);
        assert_eq!(bl.parse_class("2H-1E").unwrap(), expected);
        assert_eq!(bl.parse_class("2H-E").unwrap(), expected);
        assert_eq!(bl.parse_class("-E+2H").unwrap(), expected);
        assert_eq!(bl.parse_class("2,-1").unwrap(), expected);
        assert_eq!(bl.standard_class(&[int(2), int(1)]).unwrap(), expected);
        assert_eq!(
            bl.parse_class("1/2H").unwrap(),
            TDivisor::new(vec![int(0), int(0), rat(1, 2), int(0)])
        );
        assert!(bl.parse_class("2X").is_err());
        assert!(bl.parse_class("2").is_err());
        assert!(bl.parse_class("").is_err());

        let q = Variety::builtin("p1xp1").unwrap();
        assert_eq!(q.parse_class("1,2").unwrap(), TDivisor::from_ints(&[0, 1, 0, 2]));
        assert_eq!(q.parse_class("A+2B").unwrap(), TDivisor::from_ints(&[0, 1, 0, 2]));

        let p1 = Variety::builtin("p1").unwrap();
        assert_eq!(p1.parse_class("2").unwrap(), TDivisor::from_ints(&[0, 2]));
    }

    #[test]
    fn file_varieties_have_no_dictionary() {
        let v = Variety::from_fan(p1xp1());
        assert!(v.parse_class("1,1").is_err());
    }
}
