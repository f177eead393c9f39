//! Classifies affine biclosed sets as finite, infinite-word or neither.
use coxtw::words::classify_affine;
use coxtw::{parse_biclosed, CoxeterSystem};

fn main() -> coxtw::Result<()> {
    let sys = CoxeterSystem::from_type("A~2")?;
    for expr in ["invset 0,1", "hat 0,1,0::", "twist 2 (hat 0:1:)", "complement (empty)"] {
        let b = parse_biclosed(&sys, expr)?;
        println!("{expr:24} {}", classify_affine(&sys, &b)?.to_json());
    }
    Ok(())
}
