// Every example under examples/ runs as a test.

#[allow(dead_code)]
mod solve {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/solve.rs"));
}

#[test]
fn solve_runs() {
    solve::run_example().expect("solve example should run");
}

#[allow(dead_code)]
mod answer_sets {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/answer_sets.rs"));
}

#[test]
fn answer_sets_runs() {
    answer_sets::run_example().expect("answer_sets example should run");
}

#[allow(dead_code)]
mod consequences {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/consequences.rs"));
}

#[test]
fn consequences_runs() {
    consequences::run_example().expect("consequences example should run");
}

#[allow(dead_code)]
mod structures {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/structures.rs"));
}

#[test]
fn structures_runs() {
    structures::run_example().expect("structures example should run");
}

#[allow(dead_code)]
mod derivations {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/derivations.rs"));
}

#[test]
fn derivations_runs() {
    derivations::run_example().expect("derivations example should run");
}

#[allow(dead_code)]
mod attack_chain {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/attack_chain.rs"));
}

#[test]
fn attack_chain_runs() {
    attack_chain::run_example().expect("attack_chain example should run");
}

#[allow(dead_code)]
mod explain {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/explain.rs"));
}

#[test]
fn explain_runs() {
    explain::run_example().expect("explain example should run");
}

#[allow(dead_code)]
mod dot_graph {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/dot_graph.rs"));
}

#[test]
fn dot_graph_runs() {
    dot_graph::run_example().expect("dot_graph example should run");
}

#[allow(dead_code)]
mod preferences {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/preferences.rs"));
}

#[test]
fn preferences_runs() {
    preferences::run_example().expect("preferences example should run");
}

#[allow(dead_code)]
mod principles {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/principles.rs"));
}

#[test]
fn principles_runs() {
    principles::run_example().expect("principles example should run");
}

#[allow(dead_code)]
mod random_corpus {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/random_corpus.rs"));
}

#[test]
fn random_corpus_runs() {
    random_corpus::run_example().expect("random_corpus example should run");
}

#[allow(dead_code)]
mod json_report {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/json_report.rs"));
}

#[test]
fn json_report_runs() {
    json_report::run_example().expect("json_report example should run");
}
