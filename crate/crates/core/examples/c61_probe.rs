//! Relation type of the cycle C_6 with one whisker per vertex, over F_32003.
//! Slow: the kernel lives in 36 variables.

use std::time::Instant;

use bei::arith::Fp32003;
use bei::bei::edge_binomials;
use bei::graphs::make_cnk;
use bei::rees::{relation_type_of, ReesSetup};

fn main() -> bei::Result<()> {
    let cap: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let g = make_cnk(6, 1)?;
    let setup: ReesSetup<Fp32003> = ReesSetup::for_edges(&edge_binomials(&g, None)?)?;
    let start = Instant::now();
    let kernel = setup.kernel()?;
    println!("kernel basis: {} elements after {:.2?}", kernel.generators().len(), start.elapsed());
    let rt = relation_type_of(&setup, cap)?;
    println!("relation type (cap {cap}): {rt}");
    println!("elapsed: {:.2?}", start.elapsed());
    Ok(())
}
