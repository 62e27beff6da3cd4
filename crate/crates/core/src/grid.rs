//! Evaluation grids over `(x0, r)` and their lift to points of `R^{m+1}`.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// `name=start:stop:count`, sampled at `count` evenly spaced values.
#[derive(Debug, Clone, PartialEq)]
pub struct Axis {
    pub name: String,
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl Axis {
    pub fn new(name: &str, start: f64, stop: f64, count: usize) -> Self {
        Axis { name: name.to_string(), start, stop, count }
    }

    pub fn values(&self) -> Vec<f64> {
        match self.count {
            0 => Vec::new(),
            1 => vec![self.start],
            n => (0..n).map(|i| self.start + (self.stop - self.start) * i as f64 / (n - 1) as f64).collect(),
        }
    }
}

/// Product grid over the `x0` and `r` axes, `x0` varying slowest.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    pub x0: Axis,
    pub r: Axis,
}

impl Grid {
    pub fn new(x0: (f64, f64, usize), r: (f64, f64, usize)) -> Self {
        Grid { x0: Axis::new("x0", x0.0, x0.1, x0.2), r: Axis::new("r", r.0, r.1, r.2) }
    }

    /// The one-point grid `(x0, r)`.
    pub fn at(x0: f64, r: f64) -> Self {
        Grid::new((x0, x0, 1), (r, r, 1))
    }

    /// Parses `x0,r`.
    pub fn parse_at(text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split(',').collect();
        if parts.len() != 2 {
            return Err(Error::Parse { offset: 0, message: format!("expected `x0,r`, got `{text}`") });
        }
        let x0 = number(parts[0], 0)?;
        let r = number(parts[1], parts[0].len() + 1)?;
        Ok(Grid::at(x0, r))
    }

    pub fn len(&self) -> usize {
        self.x0.count * self.r.count
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn points(&self) -> Vec<(f64, f64)> {
        let rs = self.r.values();
        self.x0.values().into_iter().flat_map(|x0| rs.iter().map(move |&r| (x0, r))).collect()
    }

    /// Largest `|r|` on the grid.
    pub fn max_r(&self) -> f64 {
        self.r.start.abs().max(self.r.stop.abs())
    }

    pub fn min_r(&self) -> f64 {
        if self.r.count == 0 {
            return f64::INFINITY;
        }
        self.r.start.min(self.r.stop)
    }
}

fn number(text: &str, offset: usize) -> Result<f64> {
    text.trim().parse::<f64>().map_err(|_| Error::Parse { offset, message: format!("bad number `{text}`") })
}

impl FromStr for Grid {
    type Err = Error;

    /// `x0=start:stop:count,r=start:stop:count` in either order; a missing
    /// axis is an error.
    fn from_str(text: &str) -> Result<Self> {
        let (mut x0, mut r) = (None, None);
        let mut offset = 0;
        for item in text.split(',') {
            let err = |message: String| Error::Parse { offset, message };
            let (name, range) = item.split_once('=').ok_or_else(|| err(format!("expected `var=start:stop:count`, got `{item}`")))?;
            let fields: Vec<&str> = range.split(':').collect();
            if fields.len() != 3 {
                return Err(err(format!("expected `start:stop:count`, got `{range}`")));
            }
            let at = offset + name.len() + 1;
            let start = number(fields[0], at)?;
            let stop = number(fields[1], at + fields[0].len() + 1)?;
            let count = fields[2]
                .trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse { offset: at, message: format!("bad count `{}`", fields[2]) })?;
            let axis = Axis::new(name.trim(), start, stop, count);
            match name.trim() {
                "x0" => x0 = Some(axis),
                "r" => r = Some(axis),
                other => return Err(Error::UnknownIdentifier { offset, name: other.to_string() }),
            }
            offset += item.len() + 1;
        }
        match (x0, r) {
            (Some(x0), Some(r)) => Ok(Grid { x0, r }),
            _ => Err(Error::Parse { offset: text.len(), message: "grid needs both `x0` and `r` axes".into() }),
        }
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = |x: &Axis| format!("{}={}:{}:{}", x.name, x.start, x.stop, x.count);
        write!(f, "{},{}", a(&self.x0), a(&self.r))
    }
}

/// `count` unit vectors in `R^m` from a seeded generator.
pub fn directions(m: usize, count: usize, seed: u64) -> Vec<Vec<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| loop {
            let v: Vec<f64> = (0..m).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let n = v.iter().map(|c| c * c).sum::<f64>().sqrt();
            if n > 0.1 {
                break v.into_iter().map(|c| c / n).collect();
            }
        })
        .collect()
}

/// The fixed direction `(1, ..., 1) / sqrt(m)`.
pub fn diagonal(m: usize) -> Vec<f64> {
    vec![1.0 / (m as f64).sqrt(); m]
}

/// Points `(x0, r u_i)` with one direction per grid point.
pub fn lift(points: &[(f64, f64)], m: usize, seed: u64) -> Vec<(f64, Vec<f64>)> {
    points
        .iter()
        .zip(directions(m, points.len(), seed))
        .map(|(&(x0, r), u)| (x0, u.into_iter().map(|c| c * r).collect()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_orders_points() {
        let g: Grid = "x0=0:1:5,r=0.2:2:5".parse().unwrap();
        assert_eq!(g.len(), 25);
        let pts = g.points();
        assert_eq!(pts[0], (0.0, 0.2));
        assert_eq!(pts[1].0, 0.0);
        assert_eq!(pts[24], (1.0, 2.0));
        assert_eq!(g.to_string().parse::<Grid>().unwrap(), g);
        let swapped: Grid = "r=0.2:2:5,x0=0:1:5".parse().unwrap();
        assert_eq!(swapped, g);
    }

    #[test]
    fn grid_errors() {
        assert!(matches!("x0=0:1".parse::<Grid>(), Err(Error::Parse { .. })));
        assert!(matches!("x0=0:1:2,y=0:1:2".parse::<Grid>(), Err(Error::UnknownIdentifier { offset: 9, .. })));
        assert!(matches!("x0=0:1:2".parse::<Grid>(), Err(Error::Parse { .. })));
        assert!(matches!("x0=0:a:2,r=1:2:2".parse::<Grid>(), Err(Error::Parse { offset: 5, .. })));
    }

    #[test]
    fn single_point_and_empty() {
        assert_eq!(Grid::parse_at("0,0.6").unwrap().points(), vec![(0.0, 0.6)]);
        assert!(Grid::parse_at("0").is_err());
        let e: Grid = "x0=0:1:0,r=1:2:3".parse().unwrap();
        assert!(e.points().is_empty());
    }

    #[test]
    fn lifted_points_have_the_right_radius() {
        for (x0, x) in lift(&[(0.5, 2.0), (0.1, 0.3)], 5, 3) {
            let r = x.iter().map(|c| c * c).sum::<f64>().sqrt();
            assert!(r == 2.0 || (r - 0.3).abs() < 1e-15 || (r - 2.0).abs() < 1e-15, "{x0} {r}");
        }
        assert_eq!(directions(3, 4, 9), directions(3, 4, 9));
    }
}
