//! Enumerates biclosed sets of finite root systems and reads off their forms.
use coxtw::closure::{classify_finite_biclosed, enumerate_biclosed, ClosureMode};
use coxtw::CoxeterSystem;

fn main() -> coxtw::Result<()> {
    for t in ["A2", "B2", "G2", "A3"] {
        let sys = CoxeterSystem::from_type(t)?;
        let pos = sys.positive_roots_up_to(0);
        let count = enumerate_biclosed(&sys, &pos, ClosureMode::TwoClosure)?.len();
        println!("{t}: {count} biclosed subsets of Φ⁺");
    }
    let a2 = CoxeterSystem::from_type("A2")?;
    let all = a2.roots_up_to(0);
    let sets = enumerate_biclosed(&a2, &all, ClosureMode::TwoClosure)?;
    println!("A2: {} biclosed subsets of Φ", sets.len());
    for s in sets.iter().take(5) {
        let f = classify_finite_biclosed(&a2, s)?;
        println!("  {:?} = Ψ⁺ for u = {}, Δ1 = {:?}, Δ2 = {:?}", s.iter().map(ToString::to_string).collect::<Vec<_>>(), f.u.display(&a2), f.d1, f.d2);
    }
    Ok(())
}
