//! The reference Hasse diagrams as Graphviz source.
use coxtw::figures::{emit_figure, FIGURE_NAMES};

fn main() -> coxtw::Result<()> {
    for name in FIGURE_NAMES {
        let (sys, g) = emit_figure(name)?;
        println!("// {name}: {} nodes, {} edges", g.nodes.len(), g.edges.len());
        print!("{}", g.to_dot(&sys));
    }
    Ok(())
}
