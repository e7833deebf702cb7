// Stations as heads in the (time, distance) half-plane and the half-ball
// test behind epoch detection.

use mobicov::geometry::{
    bird_distance, bird_intersection, halfball_census, head_from_initial, Head, InitialStation,
};

pub fn run_example() -> mobicov::Result<()> {
    let station = InitialStation { position: [1.0, 0.0], direction: std::f64::consts::PI / 3.0, speed: 2.0 };
    let head = head_from_initial(&station)?;
    println!("head: t_min = {:.6}, h_min = {:.6}", head.t_min, head.h_min);
    for t in [-1.0, head.t_min, 0.0, 1.0] {
        println!("  distance at t = {t:+.3}: {:.6}", bird_distance(&head, t, station.speed));
    }

    let a = Head::new(0.0, 1.0);
    let b = Head::new(2.0, 1.5);
    let x = bird_intersection(&a, &b)?.expect("distinct abscissas meet");
    println!("birds cross at s = {:.6}, h = {:.6}", x.s, x.h);

    // a third head under the crossing makes it invisible from the origin
    let heads = [a, b, Head::new(1.0, 0.5), Head::new(9.0, 0.1)];
    let census = halfball_census(&heads, &x, &[0, 1]);
    println!("heads inside the half-ball: {census}");
    assert_eq!(census, 1);
    Ok(())
}

#[allow(dead_code)]
fn main() -> mobicov::Result<()> {
    run_example()
}
