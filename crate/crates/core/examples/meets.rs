//! Meets and joins, and the meet-semilattice check.
use coxtw::order::check_meet_semilattice;
use coxtw::{parse_biclosed, CoxeterSystem, TwistedOrder};

fn main() -> coxtw::Result<()> {
    let sys = CoxeterSystem::from_type("A~2")?;
    let order = TwistedOrder::new(&sys, parse_biclosed(&sys, "hat e::")?);
    let (x, y) = (sys.parse_element("0,2")?, sys.parse_element("1,2")?);
    println!("meet = {}", order.meet(&x, &y)?.display(&sys));
    println!("join = {}", order.join(&x, &y)?.display(&sys));
    for expr in ["hat e::", "word-inf ;0,1,0,2", "full"] {
        let o = TwistedOrder::new(&sys, parse_biclosed(&sys, expr)?);
        println!("{expr}: {:?}", check_meet_semilattice(&o, 2));
    }
    Ok(())
}
