use mobicov::geometry::{bird_distance, bird_intersection, halfball_census, inside_halfball, Head};
use proptest::prelude::*;

fn head() -> impl Strategy<Value = Head> {
    (-50.0..50.0f64, 0.01..20.0f64).prop_map(|(t, h)| Head::new(t, h))
}

proptest! {
    #[test]
    fn intersection_is_symmetric(a in head(), b in head()) {
        prop_assume!((a.t_min - b.t_min).abs() > 1e-3);
        let x = bird_intersection(&a, &b).unwrap().unwrap();
        let y = bird_intersection(&b, &a).unwrap().unwrap();
        prop_assert!((x.s - y.s).abs() <= 1e-9 * (1.0 + x.s.abs()));
        prop_assert!((x.h - y.h).abs() <= 1e-9 * (1.0 + x.h));
    }

    #[test]
    fn intersection_lies_on_both_birds(a in head(), b in head()) {
        prop_assume!((a.t_min - b.t_min).abs() > 1e-2);
        let x = bird_intersection(&a, &b).unwrap().unwrap();
        let (da, db) = (bird_distance(&a, x.s, 1.0), bird_distance(&b, x.s, 1.0));
        prop_assert!((da - x.h).abs() <= 1e-6 * (1.0 + x.h), "{} {} {}", da, db, x.h);
        prop_assert!((db - x.h).abs() <= 1e-6 * (1.0 + x.h));
    }

    #[test]
    fn own_heads_are_inside_the_crossing_halfball(a in head(), b in head()) {
        prop_assume!((a.t_min - b.t_min).abs() > 1e-2);
        let x = bird_intersection(&a, &b).unwrap().unwrap();
        // a bird through the crossing has its head in the closed half-ball
        for g in [a, b] {
            let dt = g.t_min - x.s;
            prop_assert!(dt * dt + g.h_min * g.h_min <= x.h * x.h * (1.0 + 1e-9));
        }
    }

    #[test]
    fn census_ignores_order(mut heads in prop::collection::vec(head(), 0..30), s in -50.0..50.0f64, h in 0.1..30.0f64) {
        let c = mobicov::geometry::SpaceTimePoint { s, h };
        let n = halfball_census(&heads, &c, &[]);
        prop_assert_eq!(n, heads.iter().filter(|g| inside_halfball(g, &c)).count());
        heads.reverse();
        prop_assert_eq!(n, halfball_census(&heads, &c, &[]));
    }
}
