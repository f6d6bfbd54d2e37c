//! Graph families, the two input formats and the structural report.

use bei::graphs::{cycle, graph_analyze, make_cnk, parse_graph, path, trees_up_to};

fn main() -> bei::Result<()> {
    let g = parse_graph("7\n1 2\n2 3\n3 1\n3 4\n")?;
    println!("edge list -> {}", g.to_json());
    println!("report: {:?}", graph_analyze(&g));
    let back = parse_graph(&g.to_json())?;
    println!("json round trip: {}", back == g);

    println!("P_4 = {}", path(4).to_json());
    println!("C_5 = {}", cycle(5)?.to_json());
    println!("C_3 with 2 whiskers = {}", make_cnk(3, 2)?.to_json());
    for n in 1..=8 {
        print!("{} ", trees_up_to(n).iter().filter(|t| t.n() == n).count());
    }
    println!("trees by vertex count");
    Ok(())
}
