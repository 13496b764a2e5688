//! Drive a suite from a TOML string, as the CLI does.
use amwave::cli::{run_suite, RunConfig};

const CONFIG: &str = r#"
suite = "zca"
trials = 20
seed = 2024
generators = ["su2_spin_half", "su2_spin_one"]
coupling = 0.05
"#;

fn main() {
    let cfg = RunConfig::from_toml_str(CONFIG).expect("valid config");
    let out = run_suite(&cfg).expect("runs");
    let s = &out.report.summary;
    println!("{}: {} entries, pass = {}", out.report.suite, s.entries, s.overall_pass);
}
