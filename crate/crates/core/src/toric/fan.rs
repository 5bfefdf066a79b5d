use std::collections::BTreeMap;

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::linalg::{self, Vector};
use crate::geometry::polytope::combinations;
use crate::geometry::Rational;

/// Number of sample directions used by the completeness check.
const COMPLETENESS_SAMPLES: usize = 1000;

/// A complete fan in `R^dim`, given by primitive rays and maximal cones.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fan {
    pub name: String,
    pub dim: usize,
    pub rays: Vec<Vec<i64>>,
    pub max_cones: Vec<Vec<usize>>,
}

impl Fan {
    pub fn new(
        name: impl Into<String>,
        dim: usize,
        rays: Vec<Vec<i64>>,
        mut max_cones: Vec<Vec<usize>>,
    ) -> Result<Self> {
        for cone in &mut max_cones {
            cone.sort_unstable();
            cone.dedup();
        }
        let fan = Self {
            name: name.into(),
            dim,
            rays,
            max_cones,
        };
        fan.validate()?;
        Ok(fan)
    }

    /// Parses and validates a variety file record.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: Fan = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Fan::new(raw.name, raw.dim, raw.rays, raw.max_cones)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("fan serializes")
    }

    pub fn num_rays(&self) -> usize {
        self.rays.len()
    }

    pub fn ray(&self, i: usize) -> Vector {
        linalg::to_rational_vec(&self.rays[i])
    }

    pub fn is_simplicial(&self) -> bool {
        self.max_cones.iter().all(|c| c.len() == self.dim)
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidFan(msg));
        if self.dim == 0 {
            return bad("dimension must be positive".into());
        }
        for (i, r) in self.rays.iter().enumerate() {
            if r.len() != self.dim {
                return bad(format!("ray {i} has length {}, expected {}", r.len(), self.dim));
            }
            if !linalg::is_primitive(r) {
                return bad(format!("ray {i} = {r:?} is not primitive"));
            }
        }
        for i in 0..self.rays.len() {
            for j in 0..i {
                if self.rays[i] == self.rays[j] {
                    return bad(format!("rays {j} and {i} coincide"));
                }
            }
        }
        if self.max_cones.is_empty() {
            return bad("no maximal cones".into());
        }
        for cone in &self.max_cones {
            if let Some(&i) = cone.iter().find(|&&i| i >= self.rays.len()) {
                return bad(format!("cone {cone:?} references missing ray {i}"));
            }
            let rows: Vec<Vector> = cone.iter().map(|&i| self.ray(i)).collect();
            if linalg::rank(&rows, self.dim) != self.dim {
                return bad(format!("cone {cone:?} is not full-dimensional"));
            }
        }
        if self.is_simplicial() {
            let mut walls: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
            for cone in &self.max_cones {
                for skip in 0..cone.len() {
                    let mut wall = cone.clone();
                    wall.remove(skip);
                    *walls.entry(wall).or_default() += 1;
                }
            }
            if let Some((wall, n)) = walls.iter().find(|(_, &n)| n != 2) {
                return bad(format!("wall {wall:?} lies on {n} maximal cones, expected 2"));
            }
        }
        for direction in sample_directions(self.dim, COMPLETENESS_SAMPLES) {
            if self.containing_cone(&direction).is_none() {
                return bad(format!("direction {direction:?} lies in no maximal cone"));
            }
        }
        Ok(())
    }

    /// Index of some maximal cone containing the integer direction.
    pub fn containing_cone(&self, direction: &[i64]) -> Option<usize> {
        let target = linalg::to_rational_vec(direction);
        self.max_cones.iter().position(|cone| {
            combinations(cone.len(), self.dim).into_iter().any(|subset| {
                let rays: Vec<Vector> = subset.iter().map(|&k| self.ray(cone[k])).collect();
                in_simplicial_cone(&rays, &target)
            })
        })
    }
}

fn in_simplicial_cone(rays: &[Vector], target: &[Rational]) -> bool {
    let dim = target.len();
    let equations: Vec<(Vector, Rational)> = (0..dim)
        .map(|i| (rays.iter().map(|r| r[i].clone()).collect(), target[i].clone()))
        .collect();
    linalg::solve_affine(&equations).is_some_and(|lambda| lambda.iter().all(|l| !l.is_negative()))
}

/// Deterministic nonzero integer directions: all of `[-k, k]^dim` in
/// lexicographic order for the smallest `k` giving at least `count` points,
/// truncated to `count`.
fn sample_directions(dim: usize, count: usize) -> Vec<Vec<i64>> {
    let mut k = 1i64;
    while ((2 * k + 1) as usize).pow(dim as u32) <= count && k < 64 {
        k += 1;
    }
    let mut out = Vec::with_capacity(count);
    let mut point = vec![-k; dim];
    'outer: loop {
        if point.iter().any(|&x| x != 0) {
            out.push(point.clone());
            if out.len() == count {
                break;
            }
        }
        let mut i = dim;
        loop {
            if i == 0 {
                break 'outer;
            }
            i -= 1;
            if point[i] < k {
                point[i] += 1;
                break;
            }
            point[i] = -k;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_malformed_fans() {
        assert!(Fan::new("x", 1, vec![vec![2], vec![-1]], vec![vec![0], vec![1]]).is_err());
        assert!(Fan::new("x", 1, vec![vec![1], vec![1]], vec![vec![0], vec![1]]).is_err());
        // incomplete: missing the negative half-line
        assert!(Fan::new("x", 1, vec![vec![1], vec![-1]], vec![vec![0]]).is_err());
        // P^2 with a cone missing
        let err = Fan::new(
            "x",
            2,
            vec![vec![1, 0], vec![0, 1], vec![-1, -1]],
            vec![vec![0, 1], vec![1, 2]],
        );
        assert!(matches!(err, Err(Error::InvalidFan(_))));
    }

    #[test]
    fn samples_are_deterministic_and_nonzero() {
        let a = sample_directions(2, 1000);
        assert_eq!(a.len(), 1000);
        assert_eq!(a, sample_directions(2, 1000));
        assert!(a.iter().all(|d| d.iter().any(|&x| x != 0)));
        assert_eq!(sample_directions(1, 1000).len(), 128);
    }

    #[test]
    fn json_round_trip() {
        let fan = Fan::new(
            "p2",
            2,
            vec![vec![1, 0], vec![0, 1], vec![-1, -1]],
            vec![vec![0, 1], vec![1, 2], vec![0, 2]],
        )
        .unwrap();
        assert_eq!(Fan::from_json(&fan.to_json()).unwrap(), fan);
        assert!(Fan::from_json("{\"name\": \"x\"}").is_err());
    }
}
