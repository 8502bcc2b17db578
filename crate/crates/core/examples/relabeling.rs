//! Relabeling the nine points keeps the nine lines.

use pappus::field::int;
use pappus::scene::{apply_relabeling, same_line_set, Labeling, PappusScene, PointLabel};
use pappus::Perm3;

fn main() -> Result<(), pappus::Error> {
    let scene = PappusScene::canonical(int(3), int(5), false)?;
    let before = scene.configuration_lines(Perm3::ID);

    for (name, lbl) in [
        ("swap A and C", Labeling::swap_a_and_c()),
        ("mixed carriers", Labeling::mixed_carriers()),
    ] {
        let relabeled = apply_relabeling(&scene, &lbl)?;
        let after = relabeled.configuration_lines(Perm3::ID);
        println!("{name}: same nine lines = {}", same_line_set(&before, &after)?);
        println!("  new L_C: {}", relabeled.pappus_line(Perm3::ID).equation());
    }

    use PointLabel::*;
    let bad = Labeling::from_arrows(&[(A1, A1), (B2, A2), (A3, A3), (B1, B1), (A2, B2), (B3, B3)])?;
    match apply_relabeling(&scene, &bad) {
        Ok(_) => println!("unexpectedly accepted"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
