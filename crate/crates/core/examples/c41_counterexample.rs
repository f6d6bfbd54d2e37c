//! The cycle C_4 with one whisker at every vertex: its binomial edge ideal is
//! not of linear type. Prints the certificate and the relation type.

use std::time::Instant;

use bei::bei::edge_binomials;
use bei::graphs::make_cnk;
use bei::rees::{linear_type_of, ReesSetup};

fn main() -> bei::Result<()> {
    let g = make_cnk(4, 1)?;
    let setup: ReesSetup = ReesSetup::for_edges(&edge_binomials(&g, None)?)?;
    let start = Instant::now();
    let res = linear_type_of(&setup)?;
    println!("linear type: {}", res.linear_type);
    println!("relation type: {}", res.relation_type);
    println!("kernel generators: {}", res.kernel.generators().len());
    if let Some(c) = &res.certificate {
        println!("certificate of bidegree {:?}:\n  {}", c.bidegree, c.element);
    }
    println!("elapsed: {:.2?}", start.elapsed());
    Ok(())
}
