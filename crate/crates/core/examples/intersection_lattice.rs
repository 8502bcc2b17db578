//! t-vectors of the joins and of the nine configuration lines, and the
//! incidence matrix.

use pappus::field::int;
use pappus::lattice::{build_lattice, incidence_matrix};
use pappus::scene::PappusScene;
use pappus::Perm3;

fn main() -> Result<(), pappus::Error> {
    for (a, b) in [(3, 5), (3, 3), (2, -1)] {
        let scene = PappusScene::canonical(int(a), int(b), true)?;
        let joins = build_lattice(&scene.joins())?;
        let conf = build_lattice(&scene.configuration_lines(Perm3::ID))?;
        println!(
            "a = {a}, b = {b}: joins {:?} ({} points), configuration {:?}",
            joins.t,
            joins.points.len(),
            conf.t
        );
    }
    let m = incidence_matrix(&PappusScene::canonical(int(3), int(5), true)?)?;
    println!();
    print!("{}", m.to_csv());
    println!(
        "(9_3): {}, transpose (9_3): {}",
        m.is_nk_configuration(3),
        m.transpose().is_nk_configuration(3)
    );
    Ok(())
}
