//! Cross-checks the order against brute-force oracles over the standard battery.
use coxtw::selftest::selftest;
use coxtw::CoxeterSystem;

fn main() -> coxtw::Result<()> {
    for t in ["A2", "B2", "A~1", "A~2"] {
        let sys = CoxeterSystem::from_type(t)?;
        for (name, r) in selftest(&sys, 3)? {
            println!("{t:4} {name:32} {:5} checked, {} mismatches", r.checked, r.mismatches.len());
        }
    }
    Ok(())
}
