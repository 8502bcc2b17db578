//! Pappus lines through S = L_A ∩ L_B: glue conditions, cross-ratios and the
//! overlapping triples over Q(w).

use pappus::analysis::{
    c_line_cross_ratio, cross_ratio_table, glue_conditions, overlap_check, pairs_table_regularity_check, s_pairs_table,
};
use pappus::field::{int, omega_roots, Field, QuadExt};
use pappus::sampling::Sampler;
use pappus::scene::{symbolic_scene, PappusScene};
use pappus::Perm3;

fn main() -> Result<(), pappus::Error> {
    let ratios = cross_ratio_table(symbolic_scene())?;
    for g in glue_conditions() {
        println!(
            "{:>7}  glue {:<14} [B,S] = {}",
            g.sigma,
            g.poly.to_string(),
            ratios[&g.sigma]
        );
    }

    let mut sampler = Sampler::new(1);
    let (a, b) = sampler.glue_pair(Perm3::T3);
    let scene = PappusScene::canonical(a.clone(), b.clone(), true)?;
    println!();
    println!(
        "a = {a}, b = {b}: [C1, C2, C3, S] = {}",
        c_line_cross_ratio(&scene, Perm3::T3)?
    );

    let table = s_pairs_table()?;
    println!();
    for (row, b) in table.values.iter().enumerate() {
        let cells: Vec<String> = table.cells[row]
            .iter()
            .map(|c| c.iter().map(|s| s.name()).collect::<Vec<_>>().join(" & "))
            .collect();
        println!("b = {b:>4}: {}", cells.join(" | "));
    }
    println!("regular: {}", pairs_table_regularity_check(&table));

    println!();
    let w = QuadExt::omega();
    for (a, b) in [(w.clone(), w.clone()), (QuadExt::omega_conjugate(), w.clone())] {
        println!(
            "a = {a}, b = {b}: {:?}",
            overlap_check(a.clone(), b.clone())?.overlapping()
        );
    }
    for b in omega_roots() {
        let r = overlap_check(QuadExt::from_rational(int(3)), b.clone())?;
        println!("a = 3, b = {b}: {:?}", r.overlapping());
    }
    Ok(())
}
