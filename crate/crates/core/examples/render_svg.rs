//! Write an SVG drawing of a scene. Usage: `render_svg [a] [b] [out.svg]`.

use pappus::field::parse_rational;
use pappus::render::{render_svg, RenderOptions};
use pappus::scene::PappusScene;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let a = parse_rational(args.first().map_or("-1", String::as_str))?;
    let b = parse_rational(args.get(1).map_or("-1", String::as_str))?;
    let out = args.get(2).map_or("pappus.svg", String::as_str);

    let scene = PappusScene::canonical(a, b, true)?;
    let rendered = render_svg(&scene, &RenderOptions::default())?;
    for w in &rendered.warnings {
        eprintln!("warning: {w}");
    }
    std::fs::write(out, &rendered.svg)?;
    println!("wrote {out} using chart {:?}", rendered.chart);
    Ok(())
}
