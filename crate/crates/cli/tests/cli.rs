use serde_json::Value;
use std::io::Write;
use std::process::{Command, Output};

fn parkideal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_parkideal"))
        .args(args)
        .env_remove("PARKIDEAL_MAX_CELLS")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = parkideal(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn temp_graph(name: &str, edges: &str) -> String {
    let path = std::env::temp_dir().join(format!("parkideal-cli-{}-{name}.txt", std::process::id()));
    std::fs::File::create(&path)
        .unwrap()
        .write_all(edges.as_bytes())
        .unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn ideal_json_lists_ten_generators() {
    let json: Value = serde_json::from_str(&stdout(&[
        "ideal",
        "--graph",
        "complete:5",
        "--k",
        "1",
        "--format",
        "json",
    ]))
    .unwrap();
    assert_eq!(json["generators"].as_array().unwrap().len(), 10);
    assert_eq!(stdout(&["ideal", "-g", "complete:5", "-k", "1"]).lines().count(), 10);
}

#[test]
fn std_count_on_k4() {
    assert_eq!(stdout(&["std", "--graph", "complete:4", "--k", "1", "--count"]), "20\n");
    let listed = stdout(&["std", "--graph", "complete:4", "--k", "1"]);
    assert_eq!(listed.lines().count(), 20);
    assert!(listed.lines().all(|l| l.split(',').count() == 3));
}

#[test]
fn tropical_and_oracle_tables_agree() {
    for graph in ["complete:3", "complete:4", "complete:5"] {
        for format in ["text", "json"] {
            let oracle = stdout(&["betti", "-g", graph, "--method", "oracle", "--format", format]);
            let tropical = stdout(&["betti", "-g", graph, "--method", "tropical", "--format", format]);
            assert_eq!(oracle, tropical, "{graph} {format}");
        }
    }
    assert_eq!(
        stdout(&["betti", "-g", "complete:4"]),
        "beta_1 = 6 : S(-3)^3 + S(-4)^3\nbeta_2 = 8 : S(-5)^6 + S(-6)^2\nbeta_3 = 3 : S(-7)^3\n"
    );
    assert_eq!(
        stdout(&["betti", "-g", "complete:4", "--method", "formula"]),
        "beta_1 = 6\nbeta_2 = 8\nbeta_3 = 3\n"
    );
}

#[test]
fn clique_cone_graphs_through_apex() {
    let mut edges = String::new();
    for i in 0..5 {
        for j in i + 1..5 {
            if (i, j) != (1, 2) && (i, j) != (3, 4) {
                edges.push_str(&format!("{i} {j}\n"));
            }
        }
    }
    let g1 = temp_graph("g1", &edges);
    assert_eq!(stdout(&["apex", "-g", &g1]), "1,1,0\n");
    let oracle = stdout(&["betti", "-g", &g1, "--format", "json"]);
    assert_eq!(
        oracle,
        stdout(&["betti", "-g", &g1, "--method", "tropical", "--format", "json"])
    );

    let path = temp_graph("path", "0 1\n1 2\n2 3\n");
    let out = parkideal(&["apex", "-g", &path]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(
        parkideal(&["betti", "-g", &path, "--method", "tropical"]).status.code(),
        Some(2)
    );
}

#[test]
fn prime_field_option() {
    let q = stdout(&["betti", "-g", "complete:4", "--format", "json"]);
    assert_eq!(
        q,
        stdout(&["betti", "-g", "complete:4", "--prime", "32003", "--format", "json"])
    );
    assert_eq!(
        parkideal(&["betti", "-g", "complete:4", "--prime", "32004"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn generating_functions() {
    assert_eq!(
        stdout(&["gf", "-g", "complete:4", "-k", "1"]),
        "3q^4 + 7q^3 + 6q^2 + 3q + 1\n"
    );
    assert_eq!(stdout(&["gf", "--forests", "3"]), "q^3 + 3q^2 + 6q + 6\n");
}

#[test]
fn parking_modes() {
    assert_eq!(stdout(&["parking", "-g", "complete:4", "--seq", "1,0,2"]), "true\n");
    assert_eq!(stdout(&["parking", "-g", "complete:4", "--seq", "1,1,1"]), "false\n");
    assert_eq!(stdout(&["parking", "--u", "2,0,1"]), "20\n");
    let row = stdout(&["parking", "-n", "3", "-k", "1"]);
    assert_eq!(row.lines().nth(1), Some("3\t1\t2,0,1\t20\t20"));
}

#[test]
fn chipfire_trace_format() {
    let out = stdout(&["chipfire", "-g", "complete:4", "--config", "3,3,3"]);
    assert_eq!(
        out,
        "step 1: fire {1} -> (0,4,4)\nstep 2: fire {2} -> (1,1,5)\nstep 3: fire {3} -> (2,2,2)\nstable: (2,2,2)\n"
    );
    assert_eq!(
        stdout(&["chipfire", "-g", "complete:4", "--config", "2,2,0", "--fire", "1,2"]),
        "(0,0,2)\n"
    );
    let cluster = [
        "chipfire",
        "-g",
        "complete:4",
        "--config",
        "5,1,7",
        "--model",
        "cluster",
    ];
    let seeded = [&cluster[..], &["--seed", "11"]].concat();
    let a = stdout(&seeded);
    assert_eq!(a, stdout(&seeded));
    assert_eq!(a.lines().last(), stdout(&cluster).lines().last());
    let family = ["--model", "family", "--family", "1,2,3"];
    let fam = stdout(&[&["chipfire", "-g", "complete:4", "--config", "1,1,1"][..], &family].concat());
    assert_eq!(fam.lines().last(), Some("stable: (0,0,0)"));
    let bad = parkideal(&["chipfire", "-g", "complete:4", "--config", "2,0,0", "--fire", "1"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn tables() {
    assert_eq!(stdout(&["tu-count", "-g", "complete:4"]), "tu\tdet\n20\t20\n");
    let hilbert = stdout(&["hilbert", "-g", "complete:4", "--max-d", "5"]);
    assert_eq!(hilbert.lines().next(), Some("d\tdim_M\tdim_J\tequal"));
    assert_eq!(hilbert.lines().count(), 7);
    let survey = stdout(&["survey", "--max-vertices", "4"]);
    assert_eq!(survey.lines().next(), Some("graph\tdim\tdet\tdiff"));
    assert!(survey.lines().skip(1).all(|l| l.split('\t').count() == 4));
}

#[test]
fn tropical_cells_outputs() {
    let json: Value = serde_json::from_str(&stdout(&["tropical-cells", "-n", "3", "--format", "json"])).unwrap();
    assert_eq!(json["cells"].as_array().unwrap().len(), 17);
    let svg = stdout(&["tropical-cells", "-n", "3", "--format", "svg"]);
    assert!(svg.starts_with("<svg"));
    let explicit = stdout(&["tropical-cells", "--a", "0,0,0", "--b", "1,2,0", "--format", "json"]);
    assert_eq!(explicit, stdout(&["tropical-cells", "-n", "3", "--format", "json"]));
    assert_eq!(
        parkideal(&["tropical-cells", "-n", "4", "--format", "svg"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn exit_codes() {
    assert_eq!(parkideal(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        parkideal(&["std", "--graph", "complete:4", "--bogus"]).status.code(),
        Some(2)
    );
    assert_eq!(
        parkideal(&["std", "--graph", "complete:4", "--k", "9"]).status.code(),
        Some(2)
    );
    let loops = temp_graph("loop", "0 1\n1 1\n");
    assert_eq!(parkideal(&["ideal", "-g", &loops]).status.code(), Some(2));
    assert_eq!(
        parkideal(&["ideal", "-g", "/nonexistent/graph.txt"]).status.code(),
        Some(2)
    );
    assert_eq!(parkideal(&["tropical-cells", "-n", "11"]).status.code(), Some(3));
    let guarded = Command::new(env!("CARGO_BIN_EXE_parkideal"))
        .args(["betti", "-g", "complete:4"])
        .env("PARKIDEAL_MAX_CELLS", "5")
        .output()
        .unwrap();
    assert_eq!(guarded.status.code(), Some(3));
    assert!(parkideal(&["--help"]).status.success());
}

#[test]
fn output_is_independent_of_jobs() {
    let args = ["betti", "-g", "complete:5", "--format", "json"];
    let one = stdout(&[&["--jobs", "1"][..], &args[..]].concat());
    let many = stdout(&[&["--jobs", "4"][..], &args[..]].concat());
    assert_eq!(one, many);
    assert_eq!(one, stdout(&args));
    assert_eq!(parkideal(&["--jobs", "0", "survey"]).status.code(), Some(2));
}
