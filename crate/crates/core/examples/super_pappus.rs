//! The super Pappus parameters and the three equivalent clauses.

use pappus::analysis::super_report;
use pappus::field::{int, rat};

fn main() -> Result<(), pappus::Error> {
    let values = [int(-1), rat(1, 2), int(2)];
    for a in &values {
        for b in &values {
            let r = super_report(a.clone(), b.clone())?;
            let a_match: Vec<String> = r.a_matching.iter().map(|(p, s)| format!("{p}={s}")).collect();
            let b_match: Vec<String> = r.b_matching.iter().map(|(p, s)| format!("{p}={s}")).collect();
            println!(
                "a = {a:>4}, b = {b:>4}: super {} | {} | {}",
                r.is_super,
                a_match.join(" "),
                b_match.join(" ")
            );
        }
    }
    let r = super_report(int(3), int(5))?;
    println!();
    println!(
        "a = 3, b = 5: super {}, pair {}, harmonic {}",
        r.is_super, r.s_pair, r.harmonic
    );
    Ok(())
}
