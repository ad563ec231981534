use clap::Args;
use ragraph::graphs::{complete, kneser, path, Graph};
use ragraph::products::{cartesian, fold_product, prism, tensor};
use ragraph::ra::{classify, classify_components};
use ragraph::theorems::{
    mu_cartesian, mu_cartesian_completes, mu_girth4, mu_half_ra, mu_kneser_tensor_k2,
    mu_negatively_neighborly, mu_neighborly, mu_positively_neighborly, mu_prism,
    mu_tensor_bipartite, mu_tensor_both_bipartite, mu_tensor_complete, mu_tensor_completes,
    mu_tensor_no_triangle_edges, mu_tensor_scaled, mu_unique_common_neighbor, MuPrediction,
    TheoremId,
};
use ragraph::verify::{check_prediction, to_tsv};

use crate::input::{graph_arg, usize_list};
use crate::{CliError, CliResult};

#[derive(Args)]
pub struct PredictArgs {
    /// One of the theorem ids, e.g. `tensor-completes`.
    theorem: String,
    /// graph6 strings and integers, as the theorem needs them.
    inputs: Vec<String>,
    /// Also classify the graph directly and compare.
    #[arg(long)]
    check: bool,
    /// Vertices of `U` for `neighborly`, comma separated and 0-based.
    #[arg(long)]
    part: Option<String>,
}

/// Predictions, each paired with the graph it is about.
type Job = Vec<(MuPrediction, Graph)>;

fn arity(inputs: &[String], k: usize, shape: &str) -> Result<(), CliError> {
    if inputs.len() == k {
        Ok(())
    } else {
        Err(CliError::Input(format!("expected {shape}, got {} argument(s)", inputs.len())))
    }
}

fn one_number(s: &str) -> Result<usize, CliError> {
    s.parse().map_err(|e| CliError::Input(format!("{s:?}: {e}")))
}

fn numbers(inputs: &[String]) -> Result<Vec<usize>, CliError> {
    usize_list(&inputs.join(","))
}

fn theorem_error(e: ragraph::theorems::TheoremError) -> CliError {
    CliError::Input(e.to_string())
}

fn build(t: TheoremId, inputs: &[String], part: Option<&str>) -> Result<Job, CliError> {
    use TheoremId::*;
    let job = match t {
        Neighborly => {
            arity(inputs, 1, "GRAPH6")?;
            let g = graph_arg(&inputs[0])?;
            let u = match part {
                Some(p) => usize_list(p)?,
                None => g.bipartition().map_or_else(|| (0..g.n()).collect(), |(a, _)| a),
            };
            vec![(mu_neighborly(&g, &u), g)]
        }
        HalfRa | PositivelyNeighborly | NegativelyNeighborly | Girth4 => {
            arity(inputs, 1, "GRAPH6")?;
            let g = graph_arg(&inputs[0])?;
            let p = match t {
                HalfRa => mu_half_ra(&g),
                PositivelyNeighborly => mu_positively_neighborly(&g),
                NegativelyNeighborly => mu_negatively_neighborly(&g),
                _ => mu_girth4(&g),
            };
            vec![(p, g)]
        }
        Prism => {
            arity(inputs, 1, "GRAPH6 of the base")?;
            let g = graph_arg(&inputs[0])?;
            vec![(mu_prism(&g), prism(&g))]
        }
        Cartesian | UniqueCommonNeighbor => {
            arity(inputs, 2, "GRAPH6 GRAPH6")?;
            let (a, b) = (graph_arg(&inputs[0])?, graph_arg(&inputs[1])?);
            let p = if t == Cartesian {
                mu_cartesian(&a, &b)
            } else {
                mu_unique_common_neighbor(&a, &b)
            };
            vec![(p, cartesian(&a, &b))]
        }
        TensorBipartite | TensorNoTriangleEdges => {
            arity(inputs, 2, "GRAPH6 GRAPH6")?;
            let (a, b) = (graph_arg(&inputs[0])?, graph_arg(&inputs[1])?);
            let p = if t == TensorBipartite {
                mu_tensor_bipartite(&a, &b)
            } else {
                mu_tensor_no_triangle_edges(&a, &b)
            };
            vec![(p, tensor(&a, &b))]
        }
        TensorBothBipartite => {
            arity(inputs, 2, "GRAPH6 GRAPH6")?;
            let (a, b) = (graph_arg(&inputs[0])?, graph_arg(&inputs[1])?);
            let preds = mu_tensor_both_bipartite(&a, &b);
            let comps = classify_components(&tensor(&a, &b));
            if preds.len() == 2 && comps.len() == 2 {
                preds.into_iter().zip(comps).map(|(p, (_, sub, _))| (p, sub)).collect()
            } else {
                preds.into_iter().map(|p| (p, tensor(&a, &b))).collect()
            }
        }
        TensorComplete | TensorScaled => {
            arity(inputs, 2, "GRAPH6 N")?;
            let g = graph_arg(&inputs[0])?;
            let m = one_number(&inputs[1])?;
            if t == TensorComplete {
                vec![(mu_tensor_complete(&g, m), tensor(&g, &complete(m.max(1))?))]
            } else {
                vec![(mu_tensor_scaled(&g, m), tensor(&g, &complete(m + 2)?))]
            }
        }
        CartesianCompletes | TensorCompletes => {
            let ns = numbers(inputs)?;
            let ks: Vec<Graph> = ns.iter().map(|&n| complete(n)).collect::<Result<_, _>>()?;
            if t == CartesianCompletes {
                let p = mu_cartesian_completes(&ns).map_err(theorem_error)?;
                vec![(p, fold_product(&ks, cartesian).expect("checked nonempty"))]
            } else {
                let p = mu_tensor_completes(&ns).map_err(theorem_error)?;
                vec![(p, fold_product(&ks, tensor).expect("checked nonempty"))]
            }
        }
        TensorKneserK2 => {
            let nk = numbers(inputs)?;
            if nk.len() != 2 {
                return Err(CliError::Input("expected N K".into()));
            }
            let p = mu_kneser_tensor_k2(nk[0], nk[1]).map_err(theorem_error)?;
            vec![(p, tensor(&kneser(nk[0], nk[1])?, &path(2)?))]
        }
    };
    Ok(job)
}

pub fn run(args: &PredictArgs) -> CliResult {
    let t: TheoremId = args.theorem.parse().map_err(theorem_error)?;
    let job = build(t, &args.inputs, args.part.as_deref())?;
    for (p, _) in &job {
        println!("{}", serde_json::to_string(p).expect("predictions serialize"));
        if let Some(r) = &p.reason {
            eprintln!("inapplicable: {r}");
        }
    }
    if !args.check {
        return Ok(());
    }
    let input = args.inputs.join(" ");
    let rows: Vec<_> = job
        .iter()
        .filter_map(|(p, g)| check_prediction(p, &input, &classify(g)))
        .collect();
    print!("{}", to_tsv(&rows));
    if rows.iter().any(|r| !r.passed()) {
        return Err(CliError::Failed("prediction disagrees with the classification".into()));
    }
    Ok(())
}
