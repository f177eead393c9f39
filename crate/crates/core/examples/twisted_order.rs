//! Twisted lengths, covers, comparisons, chains and intervals.
use coxtw::{parse_biclosed, CoxeterSystem, TwistedOrder};

fn main() -> coxtw::Result<()> {
    let sys = CoxeterSystem::from_type("A~1")?;
    let order = TwistedOrder::new(&sys, parse_biclosed(&sys, "hat 0::")?);
    for w in sys.ball(3) {
        println!("l_B({}) = {}", w.display(&sys), order.tlen(&w));
    }
    let (x, y) = (sys.parse_element("1,0")?, sys.parse_element("0")?);
    println!("{} ≤_B {}: {}", x.display(&sys), y.display(&sys), order.le(&x, &y));
    let chain: Vec<String> = order.chain(&x, &y)?.iter().map(|w| w.display(&sys)).collect();
    println!("chain: {}", chain.join(" < "));
    println!("interval has {} elements", order.interval(&x, &y)?.len());
    let covers = order.covers(&sys.identity());
    println!("e is covered by {:?} and covers {:?}",
        covers.up.iter().map(|w| w.display(&sys)).collect::<Vec<_>>(),
        covers.down.iter().map(|w| w.display(&sys)).collect::<Vec<_>>());
    Ok(())
}
