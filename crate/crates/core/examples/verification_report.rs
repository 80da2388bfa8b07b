//! Running a verification suite from code and writing its JSON report.

use koszul_hecke::dg::Window;
use koszul_hecke::suites::{run_suite, SuiteParams};

fn main() {
    let params = SuiteParams {
        types: vec!["A1".into(), "B2".into()],
        dim: Some(2),
        trials: Some(10),
        window: Window::bounded(-8, 8),
        ..Default::default()
    };
    let report = run_suite("all", &params, 7).expect("valid parameters");
    print!("{}", report.summary());
    let path = std::env::temp_dir().join("koszul-hecke-report.json");
    std::fs::write(&path, report.to_json()).unwrap();
    println!("report written to {}", path.display());
}
