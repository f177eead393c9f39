//! Closure checks and separability by cone arithmetic.
use coxtw::closure::{closure_check, is_separable, ClosureMode};
use coxtw::{parse_biclosed, CoxeterSystem};

fn main() -> coxtw::Result<()> {
    let sys = CoxeterSystem::from_type("A~1")?;
    let ambient = sys.positive_roots_up_to(2);
    let gamma = vec![sys.parse_root("[1,0]")?, sys.parse_root("[-1,1]")?];
    let report = closure_check(&sys, &gamma, &ambient, ClosureMode::TwoClosure)?;
    println!("{{α, δ-α}} closed in level ≤ 2: {} (witness {:?})", report.closed, report.witness);
    for expr in ["invset 1,0", "hat e::", "full"] {
        let b = parse_biclosed(&sys, expr)?;
        println!("{expr}: separable at level 3: {}", is_separable(&sys, &b, 3).separable);
    }
    Ok(())
}
