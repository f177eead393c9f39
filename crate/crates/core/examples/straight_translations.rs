//! Powers of a dominant translation exhaust a hat set.
use coxtw::words::t_gamma_infinity;
use coxtw::CoxeterSystem;

fn main() -> coxtw::Result<()> {
    let sys = CoxeterSystem::from_type("A~2")?;
    let gamma = sys.dominant_coweight_for(&[])?;
    let (hat, word) = t_gamma_infinity(&sys, &gamma)?;
    let g: Vec<String> = gamma.iter().map(ToString::to_string).collect();
    println!("γ = ({}), t_γ^∞ = {word}, hat form {hat}", g.join(", "));
    let t = word.period_element().clone();
    let mut p = sys.identity();
    for k in 1..=4 {
        p = sys.mul(&p, &t)?;
        println!("l(t_γ^{k}) = {}", p.length());
    }
    let level = 3;
    let agree = sys.positive_roots_up_to(level).iter().all(|r| hat.contains(&sys, r) == Ok(word.contains(&sys, r)));
    println!("membership agrees with the hat form up to level {level}: {agree}");
    Ok(())
}
