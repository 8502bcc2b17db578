//! Dualize the Pappus lines, rebuild, and dualize back onto the carriers.

use pappus::dual::{round_trip, single_parameter_check};
use pappus::field::int;
use pappus::scene::{symbolic_scene, PappusScene};

fn main() -> Result<(), pappus::Error> {
    let rt = round_trip(symbolic_scene())?;
    println!("M1: {}", rt.m1.equation());
    println!("M2: {}", rt.m2.equation());
    println!(
        "returned points on L_A: {:?}",
        rt.landing.on_la.iter().map(|s| s.name()).collect::<Vec<_>>()
    );
    println!(
        "returned points on L_B: {:?}",
        rt.landing.on_lb.iter().map(|s| s.name()).collect::<Vec<_>>()
    );
    println!(
        "one parameter each: {}",
        single_parameter_check(&rt.returned_points, &rt.landing)?
    );

    let scene = PappusScene::canonical(int(3), int(5), true)?;
    let rt = round_trip(&scene)?;
    println!();
    println!("a = 3, b = 5");
    for (s, p) in &rt.returned_points {
        println!("  M*_{s:<7} {}", p.display_canonical());
    }
    Ok(())
}
