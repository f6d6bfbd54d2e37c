//! Command-line front end. Verdict commands exit 0 on a true verdict and 1 on a
//! false one; every error exits 2.

use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::arith::{poly_parse, Field, Fp32003, PolyRing, Polynomial, Rational, VarBlock};
use crate::bei::{binomial_edge_ideal, colon_bridge_formula, colon_path_formula, edge_binomial, edge_binomials, EdgeBinomial};
use crate::error::{Error, Result};
use crate::graphs::{
    cycle, double_broom, make_cnk, parse_graph, path, star, tree_edge_ordering, trees_up_to, unicyclic_edge_ordering,
    Edge, EdgeOrdering, Graph, GraphJson,
};
use crate::groebner::Ideal;
use crate::ideal_ops::colon_by_poly;
use crate::rees::{linear_type_of, relation_type_of, ReesSetup};
use crate::repro::{repro_suite, Scope};
use crate::sequences::{
    eq23_containment_check, is_d_sequence, is_p_sequence, monomial_p_criterion, permutation_sample, permutation_scan,
    Property, DEFAULT_SCAN_CAP,
};

#[derive(Parser, Debug)]
#[command(name = "bei", about = "Binomial edge ideals, p-sequences and Rees algebras", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OrderKind {
    /// Edges as listed in the input file.
    Given,
    /// Level ordering of a tree rooted at a pendant vertex.
    Tree,
    /// Tree ordering of the spanning tree followed by the closing edge.
    Unicyclic,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FieldKind {
    Q,
    P32003,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PropertyArg {
    P,
    D,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ScopeArg {
    Fast,
    Full,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Formula {
    Bridge,
    Path,
    Auto,
}

#[derive(Args, Debug, Clone)]
struct Input {
    /// Graph file (JSON `{"n":..,"edges":[[i,j],..]}` or an edge list).
    #[arg(long, conflicts_with = "seq")]
    graph: Option<PathBuf>,
    /// Polynomial sequence file: one polynomial per line, optional `vars: a b c` line first.
    #[arg(long)]
    seq: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "given")]
    order: OrderKind,
    /// Root for the tree ordering (a pendant vertex).
    #[arg(long)]
    root: Option<usize>,
    #[arg(long, value_enum, default_value = "q")]
    field: FieldKind,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the edge binomials of a graph.
    Ideal(Input),
    /// Colon ideal J_G : f_e.
    Colon {
        #[command(flatten)]
        input: Input,
        /// The pair `i,j`, not an edge of the graph.
        #[arg(long)]
        edge: String,
        /// Print a closed form instead of computing.
        #[arg(long, value_enum)]
        formula: Option<Formula>,
        /// Compare the closed form with the computed colon; exit 0 if equal.
        #[arg(long)]
        check: bool,
    },
    /// Decide whether the sequence is a p-sequence.
    Pseq(Input),
    /// Decide whether the sequence is a d-sequence.
    Dseq(Input),
    /// Test every ordering (or a seeded sample) for the p or d property.
    Permscan {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "p")]
        property: PropertyArg,
        #[arg(long, default_value_t = DEFAULT_SCAN_CAP)]
        cap: usize,
        /// Test this many random orderings instead of all of them.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// gcd criterion for monomial sequences.
    Monocrit(Input),
    /// Power containment test at position `index` with exponent `power`.
    Eq23 {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        index: usize,
        #[arg(long)]
        power: u32,
    },
    /// Rees ideal (kernel of X_k -> f_k t).
    Rees(Input),
    /// Symmetric algebra ideal from first syzygies.
    Sym(Input),
    /// Decide linear type; prints a certificate otherwise.
    Lintype(Input),
    /// Relation type, up to a cap.
    Reltype {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 8)]
        cap: u32,
    },
    /// Print an edge ordering.
    Order(Input),
    /// Generate graph families.
    Gen {
        #[arg(value_enum)]
        family: Family,
        /// Family parameters, e.g. `4` for a path or `4 1` for a whiskered cycle.
        params: Vec<usize>,
        /// Edge list output instead of JSON.
        #[arg(long)]
        edges: bool,
    },
    /// Run the reproduction suite.
    Repro {
        #[arg(long, value_enum, default_value = "fast")]
        scope: ScopeArg,
        #[arg(long)]
        json: bool,
        /// Omit elapsed times so reports are byte-identical across runs.
        #[arg(long)]
        no_timing: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Family {
    Path,
    Cycle,
    Star,
    /// Cycle on n vertices with k pendants at each.
    Cnk,
    /// Two adjacent centers with k leaves each.
    Broom,
    /// All non-isomorphic trees up to n vertices.
    Trees,
}

/// Runs the command line and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Input(e.to_string())
}

fn field_of(c: &Command) -> FieldKind {
    match c {
        Command::Ideal(i) | Command::Pseq(i) | Command::Dseq(i) | Command::Monocrit(i) => i.field,
        Command::Rees(i) | Command::Sym(i) | Command::Lintype(i) | Command::Order(i) => i.field,
        Command::Colon { input, .. }
        | Command::Permscan { input, .. }
        | Command::Eq23 { input, .. }
        | Command::Reltype { input, .. } => input.field,
        Command::Gen { .. } | Command::Repro { .. } => FieldKind::Q,
    }
}

fn dispatch(c: Command, out: &mut dyn Write) -> Result<i32> {
    match field_of(&c) {
        FieldKind::Q => execute::<Rational>(c, out),
        FieldKind::P32003 => execute::<Fp32003>(c, out),
    }
}

/// Loaded input: a graph with its chosen ordering, or a bare sequence.
enum Loaded<K: Field> {
    Graph { graph: Graph, binomials: Vec<EdgeBinomial<K>> },
    Seq(Vec<Polynomial<K>>),
}

impl<K: Field> Loaded<K> {
    fn polys(&self) -> Vec<Polynomial<K>> {
        match self {
            Loaded::Graph { binomials, .. } => binomials.iter().map(|b| b.polynomial.clone()).collect(),
            Loaded::Seq(z) => z.clone(),
        }
    }

    fn rees(&self) -> Result<ReesSetup<K>> {
        match self {
            Loaded::Graph { binomials, .. } => ReesSetup::for_edges(binomials),
            Loaded::Seq(z) => ReesSetup::new(z),
        }
    }

    fn graph(&self) -> Result<&Graph> {
        match self {
            Loaded::Graph { graph, .. } => Ok(graph),
            Loaded::Seq(_) => Err(Error::Usage("this command needs --graph".into())),
        }
    }
}

fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

/// Edge order as written in the file, duplicates dropped.
fn file_edge_order(text: &str) -> Result<Vec<Edge>> {
    let mut out: Vec<Edge> = Vec::new();
    let mut push = |a: usize, b: usize| -> Result<()> {
        let e = Edge::new(a, b)?;
        if !out.contains(&e) {
            out.push(e);
        }
        Ok(())
    };
    if text.trim_start().starts_with('{') {
        let j: GraphJson = serde_json::from_str(text).map_err(|e| Error::Input(e.to_string()))?;
        for [a, b] in j.edges {
            push(a, b)?;
        }
    } else {
        for line in text.lines() {
            let nums: Vec<usize> = line
                .split('#')
                .next()
                .unwrap_or("")
                .split_whitespace()
                .filter_map(|t| t.parse().ok())
                .collect();
            if let [a, b] = nums[..] {
                push(a, b)?;
            }
        }
    }
    Ok(out)
}

fn ordering(g: &Graph, kind: OrderKind, root: Option<usize>, text: &str) -> Result<EdgeOrdering> {
    match kind {
        OrderKind::Given => Ok(EdgeOrdering::new(file_edge_order(text)?)),
        OrderKind::Tree => Ok(tree_edge_ordering(g, root)?.ordering()),
        OrderKind::Unicyclic => unicyclic_edge_ordering(g),
    }
}

/// Reads a sequence file. Without a `vars:` line the variables are the
/// identifiers in order of first appearance.
fn parse_seq<K: Field>(text: &str) -> Result<Vec<Polynomial<K>>> {
    let mut vars: Vec<String> = Vec::new();
    let mut lines = Vec::new();
    let mut declared = false;
    for raw in text.lines() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("vars:") {
            vars = rest.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()).map(String::from).collect();
            declared = true;
            continue;
        }
        lines.push(line.to_string());
    }
    if !declared {
        for l in &lines {
            let mut cur = String::new();
            for ch in l.chars().chain([' ']) {
                if ch.is_ascii_alphanumeric() || ch == '_' {
                    cur.push(ch);
                } else {
                    if cur.chars().next().is_some_and(|c| c.is_ascii_alphabetic()) && !vars.contains(&cur) {
                        vars.push(cur.clone());
                    }
                    cur.clear();
                }
            }
        }
    }
    if lines.is_empty() {
        return Err(Error::Input("sequence file has no polynomials".into()));
    }
    let ring: Arc<PolyRing> = PolyRing::new(vec![VarBlock::base("base", vars)])?;
    lines.iter().map(|l| poly_parse(&ring, l)).collect()
}

fn load<K: Field>(input: &Input) -> Result<Loaded<K>> {
    match (&input.graph, &input.seq) {
        (Some(p), _) => {
            let text = read(p)?;
            let graph = parse_graph(&text)?;
            let o = ordering(&graph, input.order, input.root, &text)?;
            let binomials = edge_binomials(&graph, Some(&o))?;
            Ok(Loaded::Graph { graph, binomials })
        }
        (None, Some(p)) => Ok(Loaded::Seq(parse_seq(&read(p)?)?)),
        (None, None) => Err(Error::Usage("give --graph or --seq".into())),
    }
}

fn print_polys<K: Field>(out: &mut dyn Write, json: bool, key: &str, ps: &[Polynomial<K>]) -> Result<()> {
    if json {
        let v = json!({ key: ps.iter().map(|p| p.to_string()).collect::<Vec<_>>() });
        writeln!(out, "{v}").map_err(io)
    } else {
        for p in ps {
            writeln!(out, "{p}").map_err(io)?;
        }
        Ok(())
    }
}

fn verdict(ok: bool) -> i32 {
    if ok {
        0
    } else {
        1
    }
}

fn parse_edge(s: &str) -> Result<Edge> {
    let parts: Vec<&str> = s.split([',', ' ']).filter(|t| !t.is_empty()).collect();
    match parts[..] {
        [a, b] => {
            let a = a.parse().map_err(|_| Error::Input(format!("bad vertex {a}")))?;
            let b = b.parse().map_err(|_| Error::Input(format!("bad vertex {b}")))?;
            Edge::new(a, b)
        }
        _ => Err(Error::Input(format!("expected `i,j`, got {s:?}"))),
    }
}

fn execute<K: Field>(c: Command, out: &mut dyn Write) -> Result<i32> {
    match c {
        Command::Ideal(input) => {
            let z = load::<K>(&input)?;
            print_polys(out, input.json, "generators", &z.polys())?;
            Ok(0)
        }
        Command::Colon { input, edge, formula, check } => {
            let z = load::<K>(&input)?;
            let g = z.graph()?;
            let e = parse_edge(&edge)?;
            let closed = |f: Formula| -> Result<Ideal<K>> {
                match f {
                    Formula::Bridge => colon_bridge_formula(g, e),
                    Formula::Path => colon_path_formula(g, e, None),
                    Formula::Auto if g.simple_paths(e.0, e.1, None).is_empty() => colon_bridge_formula(g, e),
                    Formula::Auto => colon_path_formula(g, e, None),
                }
            };
            if check {
                let j: Ideal<K> = binomial_edge_ideal(g, None)?;
                let direct = colon_by_poly(&j, &edge_binomial(j.ring(), e)?)?;
                let same = closed(formula.unwrap_or(Formula::Auto))?.equals(&direct)?;
                if input.json {
                    writeln!(out, "{}", json!({ "equal": same })).map_err(io)?;
                } else {
                    writeln!(out, "{same}").map_err(io)?;
                }
                return Ok(verdict(same));
            }
            let ideal = match formula {
                Some(f) => closed(f)?,
                None => {
                    let j: Ideal<K> = binomial_edge_ideal(g, None)?;
                    colon_by_poly(&j, &edge_binomial(j.ring(), e)?)?
                }
            };
            let gb = ideal.groebner_basis()?;
            print_polys(out, input.json, "generators", gb.elements())?;
            Ok(0)
        }
        Command::Pseq(input) => seq_verdict::<K>(&input, Property::P, out),
        Command::Dseq(input) => seq_verdict::<K>(&input, Property::D, out),
        Command::Permscan { input, property, cap, sample, seed } => {
            let z = load::<K>(&input)?.polys();
            let prop = match property {
                PropertyArg::P => Property::P,
                PropertyArg::D => Property::D,
            };
            let rep = match sample {
                Some(k) => permutation_sample(&z, prop, k, seed)?,
                None => permutation_scan(&z, prop, cap)?,
            };
            if input.json {
                writeln!(out, "{}", serde_json::to_string(&rep).expect("plain data")).map_err(io)?;
            } else {
                let good = rep.verdicts.iter().filter(|v| v.verdict).count();
                writeln!(out, "any_true: {}", rep.any_true).map_err(io)?;
                writeln!(out, "orderings: {} ({} true)", rep.verdicts.len(), good).map_err(io)?;
                for v in rep.verdicts.iter().filter(|v| v.verdict).take(10) {
                    writeln!(out, "  {:?}", v.permutation).map_err(io)?;
                }
            }
            Ok(verdict(rep.any_true))
        }
        Command::Monocrit(input) => {
            let z = load::<K>(&input)?.polys();
            let rep = monomial_p_criterion(&z)?;
            if input.json {
                writeln!(out, "{}", serde_json::to_string(&rep).expect("plain data")).map_err(io)?;
            } else {
                writeln!(out, "{}", rep.verdict).map_err(io)?;
                if let Some((c, idx)) = &rep.failing {
                    writeln!(out, "failing: {c:?} at {idx:?}").map_err(io)?;
                }
            }
            Ok(verdict(rep.verdict))
        }
        Command::Eq23 { input, index, power } => {
            let z = load::<K>(&input)?.polys();
            let rep = eq23_containment_check(&z, index, power)?;
            if input.json {
                writeln!(out, "{}", rep.to_json()).map_err(io)?;
            } else {
                writeln!(out, "{}", rep.holds).map_err(io)?;
                if let Some(w) = &rep.witness {
                    writeln!(out, "witness: {w}").map_err(io)?;
                }
            }
            Ok(verdict(rep.holds))
        }
        Command::Rees(input) => {
            let setup = load::<K>(&input)?.rees()?;
            let k = setup.kernel()?;
            print_polys(out, input.json, "kernel", k.generators())?;
            Ok(0)
        }
        Command::Sym(input) => {
            let setup = load::<K>(&input)?.rees()?;
            let s = setup.sym()?;
            print_polys(out, input.json, "sym", s.generators())?;
            Ok(0)
        }
        Command::Lintype(input) => {
            let setup = load::<K>(&input)?.rees()?;
            let res = linear_type_of(&setup)?;
            if input.json {
                writeln!(out, "{}", res.to_json()).map_err(io)?;
            } else {
                writeln!(out, "linear type: {}", res.linear_type).map_err(io)?;
                writeln!(out, "relation type: {}", res.relation_type).map_err(io)?;
                if let Some(c) = &res.certificate {
                    writeln!(out, "certificate bidegree: ({}, {})", c.bidegree.0, c.bidegree.1).map_err(io)?;
                    writeln!(out, "certificate: {}", c.element).map_err(io)?;
                }
            }
            Ok(verdict(res.linear_type))
        }
        Command::Reltype { input, cap } => {
            let setup = load::<K>(&input)?.rees()?;
            let rt = relation_type_of(&setup, cap)?;
            if input.json {
                let v = match rt {
                    crate::rees::RelationType::Exact(r) => json!({ "relation_type": r }),
                    crate::rees::RelationType::AtLeast(r) => json!({ "relation_type": format!(">={r}") }),
                };
                writeln!(out, "{v}").map_err(io)?;
            } else {
                writeln!(out, "{rt}").map_err(io)?;
            }
            Ok(0)
        }
        Command::Order(input) => {
            let z = load::<K>(&input)?;
            let edges: Vec<Edge> = match &z {
                Loaded::Graph { binomials, .. } => binomials.iter().map(|b| b.edge).collect(),
                Loaded::Seq(_) => return Err(Error::Usage("order needs --graph".into())),
            };
            if input.json {
                let v: Vec<[usize; 2]> = edges.iter().map(|e| [e.0, e.1]).collect();
                writeln!(out, "{}", json!({ "order": v })).map_err(io)?;
            } else {
                let s: Vec<String> = edges.iter().map(Edge::to_string).collect();
                writeln!(out, "{}", s.join(" ")).map_err(io)?;
            }
            Ok(0)
        }
        Command::Gen { family, params, edges } => {
            let p = |k: usize| -> Result<usize> {
                params
                    .get(k)
                    .copied()
                    .ok_or_else(|| Error::Usage(format!("{family:?} needs {} parameter(s)", k + 1)))
            };
            let graphs = match family {
                Family::Path => vec![path(p(0)?)],
                Family::Cycle => vec![cycle(p(0)?)?],
                Family::Star => vec![star(p(0)?)],
                Family::Cnk => vec![make_cnk(p(0)?, p(1)?)?],
                Family::Broom => vec![double_broom(p(0)?)],
                Family::Trees => trees_up_to(p(0)?),
            };
            for g in graphs {
                if edges {
                    writeln!(out, "{}", g.n()).map_err(io)?;
                    for e in g.edges() {
                        writeln!(out, "{} {}", e.0, e.1).map_err(io)?;
                    }
                } else {
                    writeln!(out, "{}", g.to_json()).map_err(io)?;
                }
            }
            Ok(0)
        }
        Command::Repro { scope, json, no_timing, seed } => {
            let scope = match scope {
                ScopeArg::Fast => Scope::Fast,
                ScopeArg::Full => Scope::Full,
            };
            let rep = repro_suite(scope, seed);
            if json {
                writeln!(out, "{}", rep.to_json(!no_timing)).map_err(io)?;
            } else {
                for i in &rep.items {
                    let status = match (i.pass, i.gating) {
                        (true, _) => "PASS",
                        (false, true) => "FAIL",
                        (false, false) => "INFO",
                    };
                    if no_timing {
                        writeln!(out, "[{status}] {:>2} {}: {}", i.id, i.anchor, i.computed).map_err(io)?;
                    } else {
                        writeln!(out, "[{status}] {:>2} {} ({} ms): {}", i.id, i.anchor, i.elapsed_ms, i.computed)
                            .map_err(io)?;
                    }
                }
            }
            Ok(verdict(rep.all_pass()))
        }
    }
}

fn seq_verdict<K: Field>(input: &Input, prop: Property, out: &mut dyn Write) -> Result<i32> {
    let z = load::<K>(input)?.polys();
    let rep = match prop {
        Property::P => is_p_sequence(&z)?,
        Property::D => is_d_sequence(&z)?,
    };
    if input.json {
        writeln!(out, "{}", rep.to_json()).map_err(io)?;
    } else {
        writeln!(out, "{}", rep.verdict).map_err(io)?;
        if let Some(w) = &rep.witness {
            writeln!(out, "failed: {:?} at {:?}", w.condition, w.indices).map_err(io)?;
            writeln!(out, "witness: {}", w.element).map_err(io)?;
        }
    }
    Ok(verdict(rep.verdict))
}
