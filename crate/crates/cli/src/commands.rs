use ragraph::graphs::{
    binary_graph, complete, complete_bipartite, crown, cube, cycle, empty, folded_cube,
    graph6_encode, kneser, parse_lines, paw, path, petersen, star, Graph,
};
use ragraph::group_oracle::{group_record, matrix_power_record, oracle_record, parse_group};
use ragraph::intlin::{kernel_basis_mod_p, IntMatrix};
use ragraph::products::{cartesian, disjoint_union, join, prism, pyramid, strong, tensor};
use ragraph::ra::{analyze as analyze_graph, classify_components, ra_matrix, ClassificationRecord};
use ragraph::theorems::construct_prescribed;
use ragraph::verify::{
    categorize, format_divisors, format_not_one, run_suite, to_tsv, BatchSummary, Suite,
};
use rayon::prelude::*;
use serde::Serialize;

use crate::input::{graph_arg, read_source};
use crate::{CliError, CliResult, OracleCommand, ProductOp};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Tsv,
}

impl Format {
    pub fn new(json: bool, tsv: bool) -> Self {
        match (json, tsv) {
            (true, _) => Format::Json,
            (_, true) => Format::Tsv,
            _ => Format::Text,
        }
    }
}

fn json_line<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("records serialize")
}

/// One record per connected component.
fn records(g: &Graph) -> Vec<ClassificationRecord> {
    if g.n() == 0 || g.is_connected() {
        return vec![analyze_graph(g)];
    }
    classify_components(g)
        .into_iter()
        .map(|(_, sub, c)| ClassificationRecord::new(&sub, &c))
        .collect()
}

fn status_of(r: &ClassificationRecord) -> String {
    match (&r.status[..], &r.mu) {
        ("1/k-RA", Some(k)) => format!("1/{k}-RA"),
        (s, _) => s.to_string(),
    }
}

fn join_big(v: &[num_bigint::BigInt]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn render(r: &ClassificationRecord, format: Format, axis: bool) -> String {
    let girth = r.girth.map_or("none".to_string(), |g| g.to_string());
    match format {
        Format::Json => json_line(r),
        Format::Tsv => {
            let mut line = format!(
                "{}\t{}\t{girth}\t{}\t{}\t{}\t{}\t{}\t{}",
                r.graph6,
                r.n,
                r.bipartite,
                r.connected,
                r.status,
                r.mu.as_ref().map_or(String::new(), ToString::to_string),
                join_big(&r.divisors),
                r.nullity,
            );
            if axis {
                line.push('\t');
                line.push_str(&join_big(&r.axis_multiples));
            }
            line
        }
        Format::Text => {
            let mut line = format!(
                "{}: {} n={} girth={girth} divisors={} nullity={}",
                r.graph6,
                status_of(r),
                r.n,
                format_divisors(&r.divisors),
                r.nullity
            );
            if axis {
                line.push_str(&format!(" axis={}", join_big(&r.axis_multiples)));
            }
            line
        }
    }
}

pub fn analyze(input: Option<&str>, format: Format, axis: bool) -> CliResult {
    let text = read_source(input)?;
    if format == Format::Tsv {
        let mut header = "graph6\tn\tgirth\tbipartite\tconnected\tstatus\tmu\tdivisors\tnullity".to_string();
        if axis {
            header.push_str("\taxis_multiples");
        }
        println!("{header}");
    }
    let mut failed = 0usize;
    for (line, parsed) in parse_lines(&text) {
        match parsed {
            Ok(g) => {
                for r in records(&g) {
                    println!("{}", render(&r, format, axis));
                }
            }
            Err(e) => {
                eprintln!("line {line}: {e}");
                failed += 1;
            }
        }
    }
    if failed > 0 {
        return Err(CliError::Input(format!("{failed} input line(s) failed to parse")));
    }
    Ok(())
}

fn family(name: &str, p: &[usize]) -> Result<Graph, CliError> {
    let want = |k: usize| {
        if p.len() == k {
            Ok(())
        } else {
            Err(CliError::Input(format!("{name} takes {k} parameter(s), got {}", p.len())))
        }
    };
    match name {
        "path" => want(1).and_then(|_| Ok(path(p[0])?)),
        "cycle" => want(1).and_then(|_| Ok(cycle(p[0])?)),
        "complete" => want(1).and_then(|_| Ok(complete(p[0])?)),
        "complete-bipartite" => want(2).and_then(|_| Ok(complete_bipartite(p[0], p[1])?)),
        "star" => want(1).and_then(|_| Ok(star(p[0])?)),
        "cube" => want(1).and_then(|_| Ok(cube(p[0])?)),
        "folded-cube" => want(1).and_then(|_| Ok(folded_cube(p[0])?)),
        "crown" => want(1).and_then(|_| Ok(crown(p[0])?)),
        "kneser" => want(2).and_then(|_| Ok(kneser(p[0], p[1])?)),
        "binary" => want(1).and_then(|_| Ok(binary_graph(p[0])?)),
        "empty" => want(1).map(|_| empty(p[0])),
        "petersen" => want(0).map(|_| petersen()),
        "paw" => want(0).map(|_| paw()),
        _ => Err(CliError::Input(format!(
            "unknown family {name:?}; expected path, cycle, complete, complete-bipartite, star, \
             cube, folded-cube, crown, kneser, binary, empty, petersen or paw"
        ))),
    }
}

impl From<ragraph::graphs::GraphError> for CliError {
    fn from(e: ragraph::graphs::GraphError) -> Self {
        CliError::Input(e.to_string())
    }
}

pub fn gen(name: &str, params: &[usize]) -> CliResult {
    println!("{}", graph6_encode(&family(name, params)?));
    Ok(())
}

pub fn product(op: ProductOp, a: &str, b: Option<&str>) -> CliResult {
    let ga = graph_arg(a)?;
    let unary = matches!(op, ProductOp::Pyramid | ProductOp::Prism | ProductOp::Complement);
    let g = if unary {
        if b.is_some() {
            return Err(CliError::Input(format!("{op:?} takes one graph")));
        }
        match op {
            ProductOp::Pyramid => pyramid(&ga),
            ProductOp::Prism => prism(&ga),
            _ => ga.complement(),
        }
    } else {
        let gb = graph_arg(b.ok_or_else(|| CliError::Input(format!("{op:?} takes two graphs")))?)?;
        match op {
            ProductOp::Cartesian => cartesian(&ga, &gb),
            ProductOp::Tensor => tensor(&ga, &gb),
            ProductOp::Strong => strong(&ga, &gb),
            ProductOp::Join => join(&ga, &gb),
            _ => disjoint_union(&[ga, gb]),
        }
    };
    println!("{}", graph6_encode(&g));
    Ok(())
}

pub fn construct(divisors: &[u64], nullity: usize, json: bool) -> CliResult {
    let g = construct_prescribed(divisors, nullity).map_err(|e| CliError::Input(e.to_string()))?;
    let r = analyze_graph(&g);
    println!("{}", r.graph6);
    println!("{}", if json { json_line(&r) } else { render(&r, Format::Text, false) });
    let mut want: Vec<num_bigint::BigInt> = divisors.iter().map(|&d| d.into()).collect();
    want.extend(std::iter::repeat_n(num_bigint::BigInt::from(0), nullity));
    let want = if want.is_empty() { "none".to_string() } else { format_divisors(&want) };
    let got = format_not_one(&r.divisors);
    if got != want {
        return Err(CliError::Failed(format!("constructed graph has divisors {got}, expected {want}")));
    }
    Ok(())
}

pub fn batch(file: &str, summary: &str, jobs: usize, json: bool) -> CliResult {
    if summary != "girth-category" {
        return Err(CliError::Input(format!("unknown summary {summary:?}; expected girth-category")));
    }
    if file != "-" && !std::path::Path::new(file).is_file() {
        return Err(CliError::Input(format!("{file}: no such file")));
    }
    let text = read_source(Some(file))?;
    let lines = parse_lines(&text);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Input(format!("thread pool: {e}")))?;
    let results: Vec<_> = pool.install(|| {
        lines
            .par_iter()
            .map(|(line, parsed)| match parsed {
                Ok(g) => Ok(categorize(g)),
                Err(e) => Err(format!("line {line}: {e}")),
            })
            .collect()
    });
    let mut s = BatchSummary::default();
    for r in results {
        match r {
            Ok(c) => s.add(c),
            Err(msg) => {
                eprintln!("{msg}");
                s.parse_errors += 1;
            }
        }
    }
    if json {
        println!("{}", json_line(&s));
    } else {
        print!("{}", s.to_table());
    }
    if s.parse_errors > 0 {
        return Err(CliError::Input(format!("{} input line(s) failed to parse", s.parse_errors)));
    }
    Ok(())
}

pub fn kernel(p: u64, graph: &str) -> CliResult {
    let g = graph_arg(graph)?;
    let basis = kernel_basis_mod_p(&ra_matrix(&g).to_matrix(), p)
        .map_err(|e| CliError::Input(e.to_string()))?;
    for v in &basis {
        let line: Vec<String> = v.iter().map(ToString::to_string).collect();
        println!("{}", line.join(" "));
    }
    eprintln!("kernel dimension mod {p}: {}", basis.len());
    Ok(())
}

fn parse_rows(spec: &str) -> Result<IntMatrix, CliError> {
    let rows: Vec<Vec<i64>> = spec
        .split(';')
        .map(|r| {
            r.split(',')
                .map(|t| t.trim().parse::<i64>().map_err(|e| CliError::Input(format!("{t:?}: {e}"))))
                .collect()
        })
        .collect::<Result<_, _>>()?;
    IntMatrix::from_rows(&rows).map_err(|e| CliError::Input(e.to_string()))
}

pub fn oracle(cmd: &OracleCommand) -> CliResult {
    let input = |e: ragraph::group_oracle::GroupError| CliError::Input(e.to_string());
    match cmd {
        OracleCommand::Graph { group, graph, cap } => {
            let grp = parse_group(group).map_err(input)?;
            let g = graph_arg(graph)?;
            println!("{}", json_line(&oracle_record(&grp, &g, *cap).map_err(input)?));
        }
        OracleCommand::Matrix { group, rows, cap } => {
            let grp = parse_group(group).map_err(input)?;
            let m = parse_rows(rows)?;
            println!("{}", json_line(&matrix_power_record(&grp, &m, *cap).map_err(input)?));
        }
        OracleCommand::Group { group } => {
            let grp = parse_group(group).map_err(input)?;
            println!("{}", json_line(&group_record(&grp)));
        }
    }
    Ok(())
}

pub fn verify(suite: &str, slow: bool) -> CliResult {
    let suite: Suite = suite.parse().map_err(|e: ragraph::verify::UnknownSuite| CliError::Input(e.to_string()))?;
    let rows = run_suite(suite, slow);
    print!("{}", to_tsv(&rows));
    let failed = rows.iter().filter(|r| !r.passed()).count();
    eprintln!("{} checks, {failed} failed", rows.len());
    if failed > 0 {
        return Err(CliError::Failed(format!("{failed} check(s) failed")));
    }
    Ok(())
}
