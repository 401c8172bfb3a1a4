use crate::{CellFormat, Command, Format, IdealArgs, Method, Model};
use parkideal::betti::{self, Field};
use parkideal::chipfire::{self, Configuration, FiringModel, Policy};
use parkideal::monomial::skeleton_ideal;
use parkideal::tropical::{self, Arrangement, CellComplex};
use parkideal::{power, standard, Error, Exec, Graph, MonomialIdeal, Result, VertexSet};
use serde_json::{json, Value};
use std::fmt::Write;

pub fn run(command: &Command) -> Result<String> {
    let exec = Exec::default();
    match command {
        Command::Ideal { ideal, format } => {
            let (_, m) = load_ideal(ideal)?;
            Ok(match format {
                Format::Json => pretty(&m.to_json()),
                Format::Text => lines(m.generators().iter().map(ToString::to_string)),
            })
        }
        Command::Std { ideal, count, format } => {
            let (_, m) = load_ideal(ideal)?;
            if *count {
                return Ok(format!("{}\n", standard::standard_count_with(&m, exec)?));
            }
            let monomials = standard::standard_monomials_with(&m, exec)?;
            Ok(match format {
                Format::Json => pretty(&Value::from(
                    monomials.iter().map(|b| b.exponents().to_vec()).collect::<Vec<_>>(),
                )),
                Format::Text => lines(monomials.iter().map(|b| b.to_csv())),
            })
        }
        Command::Gf { graph, k, forests } => {
            let poly = match (graph, forests) {
                (_, Some(n)) => standard::inversion_polynomial_with(*n, exec)?,
                (Some(graph), None) => {
                    let m = skeleton_ideal(&Graph::load(graph)?, *k)?;
                    standard::degree_generating_function_with(&m, exec)?
                }
                (None, None) => return Err(Error::Input("give --graph or --forests".into())),
            };
            Ok(format!("{poly}\n"))
        }
        Command::Parking { graph, seq, u, n, k } => parking(graph.as_deref(), seq.as_deref(), u.as_deref(), *n, *k),
        Command::Betti {
            ideal,
            method,
            prime,
            format,
        } => betti_cmd(ideal, *method, *prime, *format, exec),
        Command::TropicalCells { n, graph, a, b, format } => {
            let (arr, g) = match (n, graph, a, b) {
                (Some(n), None, None, None) => (Arrangement::generic(*n)?, None),
                (None, Some(src), None, None) => {
                    let g = Graph::load(src)?;
                    (Arrangement::clique_cone(&g)?, Some(g))
                }
                (None, None, Some(a), Some(b)) => (
                    Arrangement::from_homogeneous(
                        tropical::parse_rational_list(a)?,
                        tropical::parse_rational_list(b)?,
                    )?,
                    None,
                ),
                _ => return Err(Error::Input("give exactly one of --n, --graph, or --a/--b".into())),
            };
            let mut complex = tropical::enumerate_cells_with(&arr, exec)?;
            if let Some(g) = &g {
                complex = complex.relabeled(g)?;
            }
            match format {
                CellFormat::Json => Ok(pretty(&complex.to_json())),
                CellFormat::Svg => tropical::render_svg(&arr, &complex),
                CellFormat::Text => Ok(cells_text(&arr, &complex)),
            }
        }
        Command::Apex { graph } => {
            let apex = tropical::clique_cone_apex(&Graph::load(graph)?)?;
            Ok(format!(
                "{}\n",
                apex.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
            ))
        }
        Command::Chipfire {
            graph,
            config,
            model,
            family,
            fire,
            seed,
        } => {
            let g = Graph::load(graph)?;
            let start = Configuration::parse(config)?;
            if let Some(set) = fire {
                let after = chipfire::fire_set(&g, &start, parse_set(set)?)?;
                return Ok(format!("{after}\n"));
            }
            let model = match (model, family) {
                (Model::Family, Some(spec)) => {
                    FiringModel::Family(spec.split(';').map(parse_set).collect::<Result<_>>()?)
                }
                (Model::Family, None) => return Err(Error::Input("--model family needs --family".into())),
                (_, Some(_)) => return Err(Error::Input("--family only applies to --model family".into())),
                (Model::Singletons, None) => FiringModel::Singletons,
                (Model::Cluster, None) => FiringModel::Cluster,
            };
            let policy = seed.map_or(Policy::LexLeast, Policy::Random);
            let (end, steps) = chipfire::stabilize_traced(&g, &start, &model, policy)?;
            let mut out = String::new();
            for (idx, step) in steps.iter().enumerate() {
                let _ = writeln!(out, "step {}: fire {} -> {}", idx + 1, step.fired, step.after);
            }
            let _ = writeln!(out, "stable: {end}");
            Ok(out)
        }
        Command::Hilbert { ideal, max_d } => {
            let g = Graph::load(&ideal.graph)?;
            let max_d = max_d.unwrap_or_else(|| power::socle_bound(&g));
            let rows = power::hilbert_comparison_with(&g, ideal.k, max_d, exec)?;
            let mut out = format!("{}\n", power::HilbertRow::tsv_header());
            out.push_str(&lines(rows.iter().map(power::HilbertRow::to_tsv)));
            Ok(out)
        }
        Command::TuCount { graph } => {
            let g = Graph::load(graph)?;
            let tu = g.tu_weighted_count_with(exec)?;
            let det = g.reduced_signless_laplacian().det();
            Ok(format!("tu\tdet\n{tu}\t{det}\n"))
        }
        Command::Survey { max_vertices } => {
            let rows = standard::inequality_survey_with(*max_vertices, exec)?;
            let mut out = format!("{}\n", standard::SurveyRow::tsv_header());
            out.push_str(&lines(rows.iter().map(standard::SurveyRow::to_tsv)));
            Ok(out)
        }
    }
}

fn load_ideal(args: &IdealArgs) -> Result<(Graph, MonomialIdeal)> {
    let g = Graph::load(&args.graph)?;
    let m = skeleton_ideal(&g, args.k)?;
    Ok((g, m))
}

fn pretty(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values serialize");
    s.push('\n');
    s
}

fn lines(items: impl Iterator<Item = String>) -> String {
    items
        .map(|mut s| {
            s.push('\n');
            s
        })
        .collect()
}

fn parse_list(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Error::Input(format!("not a nonnegative integer: {t:?}")))
        })
        .collect()
}

fn parse_set(s: &str) -> Result<VertexSet> {
    let s = s.trim().trim_start_matches('{').trim_end_matches('}');
    let vs: Vec<usize> = parse_list(s)?.into_iter().map(|v| v as usize).collect();
    VertexSet::from_slice(&vs)
}

fn parking(
    graph: Option<&str>,
    seq: Option<&str>,
    u: Option<&str>,
    n: Option<usize>,
    k: Option<usize>,
) -> Result<String> {
    if let (Some(graph), Some(seq)) = (graph, seq) {
        let ok = standard::is_g_parking(&Graph::load(graph)?, &parse_list(seq)?)?;
        return Ok(format!("{ok}\n"));
    }
    if let Some(u) = u {
        return Ok(format!("{}\n", standard::u_parking_count(&parse_list(u)?)));
    }
    if let (Some(n), Some(k)) = (n, k) {
        let u = standard::u_vector(n, k)?;
        let count = standard::u_parking_count(&u);
        let formula = standard::yan_formula(n as u32, k as u32)?;
        let u_text = u.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        return Ok(format!(
            "n\tk\tu\tu_parking\tformula\n{n}\t{k}\t{u_text}\t{count}\t{formula}\n"
        ));
    }
    Err(Error::Input("give --graph with --seq, --u, or --n with --k".into()))
}

fn betti_cmd(args: &IdealArgs, method: Method, prime: Option<u64>, format: Format, exec: Exec) -> Result<String> {
    let (g, m) = load_ideal(args)?;
    let table = match method {
        Method::Oracle => {
            let field = match prime {
                None => Field::Rational,
                Some(p) if is_prime(p) && p < 1 << 31 => Field::Prime(p),
                Some(p) => return Err(Error::Input(format!("{p} is not a prime below 2^31"))),
            };
            betti::betti_table_with(&m, field, exec)?
        }
        Method::Tropical => {
            if args.k != 1 {
                return Err(Error::Domain("the tropical construction resolves k = 1 only".into()));
            }
            let arr = Arrangement::clique_cone(&g)?;
            let complex = tropical::enumerate_cells_with(&arr, exec)?.relabeled(&g)?;
            if !tropical::verify_minimality(&complex) {
                return Err(Error::Domain("labeled complex is not minimal".into()));
            }
            tropical::betti_from_complex(&complex, &g)?
        }
        Method::Formula => return betti_formula(&g, args.k, format),
    };
    Ok(match format {
        Format::Json => pretty(&table.to_json()),
        Format::Text => table.to_string(),
    })
}

/// Totals from the closed forms: every index for complete graphs, `β_1` otherwise.
fn betti_formula(g: &Graph, k: usize, format: Format) -> Result<String> {
    if k != 1 {
        return Err(Error::Domain("closed forms are known for k = 1 only".into()));
    }
    let n = g.n() as u64;
    let complete = g.edge_count() as u64 == (n + 1) * n / 2;
    let totals: Vec<String> = if complete {
        (1..=n)
            .map(|i| betti::total_betti_formula(n, i).map(|b| b.to_string()))
            .collect::<Result<_>>()?
    } else {
        vec![betti::first_betti_graph_formula(g)?.to_string()]
    };
    Ok(match format {
        Format::Json => pretty(&json!({ "totals": totals })),
        Format::Text => lines(totals.iter().enumerate().map(|(i, t)| format!("beta_{} = {t}", i + 1))),
    })
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn cells_text(arr: &Arrangement, complex: &CellComplex) -> String {
    let mut out = format!("# {arr}\n# cells by codimension: {:?}\n", complex.counts_by_codim());
    for cell in complex.cells() {
        let _ = writeln!(out, "{}\tdim={}\t{}", cell.types, cell.dim, cell.label);
    }
    out
}
