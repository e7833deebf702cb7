//! Space-time geometry of radial birds.
//!
//! A station moving on a straight line at speed `v` has distance
//! `d(t) = sqrt(v²(t - T)² + H²)` to the user at the origin. The point
//! `(T, H)` is the head of that trajectory.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Head {
    pub t_min: f64,
    pub h_min: f64,
}

impl Head {
    pub fn new(t_min: f64, h_min: f64) -> Self {
        Head { t_min, h_min }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpaceTimePoint {
    pub s: f64,
    pub h: f64,
}

/// A station at `position` at time 0 moving in direction `direction`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InitialStation {
    pub position: [f64; 2],
    pub direction: f64,
    pub speed: f64,
}

pub fn head_from_initial(station: &InitialStation) -> Result<Head> {
    if !(station.speed > 0.0) {
        return Err(crate::error::invalid("speed", "must be > 0"));
    }
    let [x, y] = station.position;
    let norm = x.hypot(y);
    if norm == 0.0 {
        return Err(Error::ZeroPosition);
    }
    let psi = y.atan2(x);
    let xi = (station.direction - psi).rem_euclid(2.0 * std::f64::consts::PI);
    let t_min = -norm * xi.cos() / station.speed;
    let h_min = norm * xi.sin().abs();
    if h_min == 0.0 || h_min < norm * 1e-15 {
        return Err(Error::DegenerateHead { t_min });
    }
    Ok(Head { t_min, h_min })
}

pub fn bird_distance(head: &Head, t: f64, speed: f64) -> f64 {
    (speed * (t - head.t_min)).hypot(head.h_min)
}

/// Crossing point of two unit-speed birds. `None` when both heads share an
/// abscissa, since such birds are nested and never meet.
pub fn bird_intersection(a: &Head, b: &Head) -> Result<Option<SpaceTimePoint>> {
    let (t1, h1, t2, h2) = (a.t_min, a.h_min, b.t_min, b.h_min);
    if t1 == t2 {
        if h1 == h2 {
            return Err(Error::CoincidentBirds { t: t1, h: h1 });
        }
        return Ok(None);
    }
    let dt = t1 - t2;
    let dh2 = h2 * h2 - h1 * h1;
    let hh2 = 0.25 * (dt * dt + 2.0 * (h1 * h1 + h2 * h2) + dh2 * dh2 / (dt * dt));
    let s = 0.5 * (t1 + t2) - 0.5 * dh2 / dt;
    Ok(Some(SpaceTimePoint { s, h: hh2.sqrt() }))
}

/// Whether `head` lies strictly inside the open half-disc of radius
/// `center.h` centered at `(center.s, 0)`.
pub fn inside_halfball(head: &Head, center: &SpaceTimePoint) -> bool {
    let dt = head.t_min - center.s;
    dt * dt + head.h_min * head.h_min < center.h * center.h
}

/// Number of heads (skipping indices in `exclude`) strictly inside the
/// half-ball at `center`. A point on a bird has envelope rank census + 1.
pub fn halfball_census(heads: &[Head], center: &SpaceTimePoint, exclude: &[usize]) -> usize {
    heads
        .iter()
        .enumerate()
        .filter(|(i, g)| !exclude.contains(i) && inside_halfball(g, center))
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn head_examples() {
        let h = head_from_initial(&InitialStation { position: [0.0, 1.0], direction: 0.0, speed: 1.0 })
            .unwrap();
        assert!(h.t_min.abs() < 1e-15 && (h.h_min - 1.0).abs() < 1e-15);

        let psi = 4f64.atan2(3.0);
        let r = head_from_initial(&InitialStation { position: [3.0, 4.0], direction: psi, speed: 1.0 });
        assert!(matches!(r, Err(Error::DegenerateHead { .. })));

        let h = head_from_initial(&InitialStation { position: [1.0, 0.0], direction: PI / 3.0, speed: 2.0 })
            .unwrap();
        assert!((h.t_min + 0.25).abs() < 1e-15);
        assert!((h.h_min - (PI / 3.0).sin()).abs() < 1e-15);

        assert_eq!(
            head_from_initial(&InitialStation { position: [0.0, 0.0], direction: 0.0, speed: 1.0 }),
            Err(Error::ZeroPosition)
        );
    }

    #[test]
    fn head_is_minimum_of_moving_station() {
        let st = InitialStation { position: [1.0, 0.0], direction: PI / 3.0, speed: 2.0 };
        let head = head_from_initial(&st).unwrap();
        let dist = |t: f64| {
            let x = st.position[0] + st.speed * t * st.direction.cos();
            let y = st.position[1] + st.speed * t * st.direction.sin();
            x.hypot(y)
        };
        let (mut best_t, mut best) = (0.0, f64::INFINITY);
        for i in 0..=200_000 {
            let t = -1.0 + i as f64 * 1e-5;
            if dist(t) < best {
                best = dist(t);
                best_t = t;
            }
        }
        assert!((best_t - head.t_min).abs() < 2e-5);
        assert!((best - head.h_min).abs() < 1e-9);
        for &t in &[-2.0, -0.3, 0.0, 0.7, 3.0] {
            assert!((bird_distance(&head, t, st.speed) - dist(t)).abs() < 1e-12);
        }
    }

    #[test]
    fn distance_examples() {
        assert_eq!(bird_distance(&Head::new(0.0, 1.0), 0.0, 1.0), 1.0);
        assert!((bird_distance(&Head::new(0.0, 1.0), 3f64.sqrt(), 1.0) - 2.0).abs() < 1e-15);
        assert!((bird_distance(&Head::new(2.0, 0.5), 2.5, 2.0) - 1.25f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn intersection_examples() {
        let p = bird_intersection(&Head::new(-1.0, 1.0), &Head::new(1.0, 1.0)).unwrap().unwrap();
        assert!(p.s.abs() < 1e-15 && (p.h - 2f64.sqrt()).abs() < 1e-15);
        assert_eq!(bird_intersection(&Head::new(0.0, 1.0), &Head::new(0.0, 2.0)).unwrap(), None);
        assert!(bird_intersection(&Head::new(0.0, 1.0), &Head::new(0.0, 1.0)).is_err());

        let (a, b) = (Head::new(0.0, 1.0), Head::new(3.0, 1.5));
        let p = bird_intersection(&a, &b).unwrap().unwrap();
        let want = 0.25 * (9.0 + 2.0 * 3.25 + 1.25f64.powi(2) / 9.0);
        assert!((p.h * p.h - want).abs() < 1e-12);
        assert!((bird_distance(&a, p.s, 1.0) - p.h).abs() < 1e-12);
        assert!((bird_distance(&b, p.s, 1.0) - p.h).abs() < 1e-12);
        // bisection root of d_a - d_b
        let (mut lo, mut hi) = (-10.0, 10.0);
        let g = |t: f64| bird_distance(&a, t, 1.0) - bird_distance(&b, t, 1.0);
        for _ in 0..200 {
            let m = 0.5 * (lo + hi);
            if g(lo) * g(m) <= 0.0 {
                hi = m
            } else {
                lo = m
            }
        }
        assert!((lo - p.s).abs() < 1e-12);
    }

    #[test]
    fn census_examples() {
        let c = SpaceTimePoint { s: 0.0, h: 1.0 };
        assert_eq!(halfball_census(&[Head::new(0.5, 0.5)], &c, &[]), 1);
        assert_eq!(halfball_census(&[Head::new(0.0, 1.0)], &c, &[0]), 0);
        assert_eq!(halfball_census(&[Head::new(0.0, 1.0)], &c, &[]), 0);
    }
}
