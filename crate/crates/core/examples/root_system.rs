//! Roots, inversion sets and translations of an affine Weyl group.
use coxtw::CoxeterSystem;

fn main() -> coxtw::Result<()> {
    let sys = CoxeterSystem::from_type("A~2")?;
    println!("roots of level ≤ 1:");
    for r in sys.roots_up_to(1) {
        println!("  {r}");
    }
    let w = sys.parse_element("2,0,1")?;
    println!("Φ({}) = {:?}", w.display(&sys), sys.inversion_set(&w).iter().map(ToString::to_string).collect::<Vec<_>>());
    let t = sys.translation_by_coroots(&[1, 0])?;
    println!("t_(α^∨) = {} of length {}", t.display(&sys), t.length());
    Ok(())
}
