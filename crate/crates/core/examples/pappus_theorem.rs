//! The six Pappus lines of the canonical scene, symbolically and at a sample.

use pappus::field::int;
use pappus::projective::det3;
use pappus::scene::{symbolic_scene, PappusScene};
use pappus::Perm3;

fn main() -> Result<(), pappus::Error> {
    let sym = symbolic_scene();
    for s in Perm3::ALL {
        let c = sym.c_points(s);
        println!("{s:>7}  L_C: {}", sym.pappus_line(s).equation());
        println!("         det(C1, C2, C3) = {}", det3(&c[0], &c[1], &c[2])?);
    }

    let scene = PappusScene::canonical(int(3), int(5), true)?;
    println!();
    println!("a = 3, b = 5");
    for s in Perm3::ALL {
        let c: Vec<String> = scene.c_points(s).iter().map(|p| p.display_canonical()).collect();
        println!("{s:>7}  {}  on  {}", c.join(" "), scene.pappus_line(s).equation());
    }
    println!("Pappus holds: {}", scene.pappus_holds()?);
    Ok(())
}
