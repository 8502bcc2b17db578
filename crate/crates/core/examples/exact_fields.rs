//! Arithmetic in the three scalar fields.

use pappus::field::{parse_quadext, parse_ratfunc, parse_rational, Field, QuadExt};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let x = parse_rational("3/4")?;
    let y = parse_rational("-5/6")?;
    println!("({x}) + ({y}) = {}", x.try_add(&y)?);
    println!("({x}) / ({y}) = {}", x.try_div(&y)?);

    let f = parse_ratfunc("(a*b - 1) / (a - b)")?;
    let g = parse_ratfunc("a + b")?;
    let fg = f.try_mul(&g)?;
    println!("f * g = {fg}");
    let (a0, b0) = (parse_rational("2")?, parse_rational("1/3")?);
    println!("f * g at a = {a0}, b = {b0}: {}", fg.eval(&a0, &b0)?);

    let w = QuadExt::omega();
    let w2 = w.try_mul(&w)?;
    println!("w^2 = {w2}");
    println!("w^2 - w + 1 = {}", w2.try_sub(&w)?.try_add(&QuadExt::one())?);
    let z = parse_quadext("2 + 3*w")?;
    println!("1 / ({z}) = {}", z.try_inv()?);
    Ok(())
}
