use std::process::{Command, Output};

use cornell_eigen::airy::{airy_ai, airy_zero_k};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cornell-eigen"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn csv(out: &Output) -> (Vec<String>, Vec<Vec<String>>) {
    let text = stdout(out);
    let mut lines = text.lines();
    let header: Vec<String> = lines.next().unwrap().split(',').map(String::from).collect();
    let rows: Vec<Vec<String>> = lines
        .map(|l| l.split(',').map(String::from).collect())
        .collect();
    for r in &rows {
        assert_eq!(r.len(), header.len(), "ragged row {r:?}");
    }
    (header, rows)
}

fn column(header: &[String], name: &str) -> usize {
    header.iter().position(|h| h == name).unwrap()
}

#[test]
fn eigen_formula() {
    let out = run(&["eigen", "--method", "formula", "--n", "0", "--l", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "method,a,n,l,lambda\nformula,0,0,1,3.36125\n");
}

#[test]
fn eigen_shooting_with_coulomb() {
    let out = run(&[
        "eigen", "--method", "shooting", "--a", "1", "--n", "0", "--l", "0",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let (h, rows) = csv(&out);
    assert_eq!(rows[0][column(&h, "lambda")], "1.39788");
}

#[test]
fn usage_errors() {
    for args in [
        &["eigen", "--method", "coulomb", "--a", "0"][..],
        &["eigen", "--method", "formula", "--a", "1"],
        &["eigen", "--method", "shooting", "--a", "-1"],
        &["eigen", "--bogus"],
        &["table", "tab9"],
        &[
            "scan",
            "--a",
            "",
            "--n-max",
            "1",
            "--l-max",
            "1",
            "--methods",
            "formula,shooting",
        ],
        &["wavefunction", "--samples", "1"],
        &["--precision", "0", "eigen"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn table_one_row() {
    let out = run(&["table", "tab1"]);
    assert_eq!(out.status.code(), Some(0));
    let (h, rows) = csv(&out);
    let row = rows
        .iter()
        .find(|r| r[0] == "lambda_0l_a0" && r[3] == "5")
        .unwrap();
    assert_eq!(row[column(&h, "formula")], "6.49306");
    assert_eq!(row[column(&h, "wkb")], "6.16713");
    let numerical: f64 = row[column(&h, "numerical")].parse().unwrap();
    assert!((numerical - 6.49303).abs() <= 1.0000001e-5);
}

#[test]
fn table_three_text_layout() {
    let out = run(&["table", "tab3", "--format", "table"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let row = text.lines().find(|l| l.contains("4³S₁")).unwrap();
    let cells: Vec<&str> = row.split_whitespace().collect();
    assert_eq!(cells[2], "10.8886");
    assert_eq!(cells[3], "10.8695");
}

#[test]
fn scan_relative_errors() {
    let out = run(&[
        "scan",
        "--a",
        "0",
        "--n-max",
        "2",
        "--l-max",
        "2",
        "--methods",
        "formula,shooting",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let (h, rows) = csv(&out);
    assert_eq!(rows.len(), 9);
    let rel = column(&h, "rel_formula_shooting");
    for r in &rows {
        assert!(r[rel].parse::<f64>().unwrap() <= 5e-4);
    }
}

#[test]
fn scan_range_syntax() {
    let out = run(&[
        "scan",
        "--a",
        "1:3:1",
        "--n-max",
        "0",
        "--l-max",
        "1",
        "--methods",
        "cornell-fit,shooting",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let (h, rows) = csv(&out);
    assert_eq!(rows.len(), 6);
    let (f, s, rel) = (
        column(&h, "cornell-fit"),
        column(&h, "shooting"),
        column(&h, "rel_cornell-fit_shooting"),
    );
    for r in &rows {
        let (x, y): (f64, f64) = (r[f].parse().unwrap(), r[s].parse().unwrap());
        let printed: f64 = r[rel].parse().unwrap();
        // inputs carry 6 significant digits
        assert!((printed - ((x - y) / y).abs()).abs() <= 1e-5 + 1e-3 * printed);
    }
}

fn wavefunction(args: &[&str]) -> Vec<(f64, f64, f64)> {
    let mut full = vec!["wavefunction"];
    full.extend_from_slice(args);
    let out = run(&full);
    assert_eq!(out.status.code(), Some(0));
    let (_, rows) = csv(&out);
    rows.iter()
        .map(|r| {
            (
                r[0].parse().unwrap(),
                r[1].parse().unwrap(),
                r[2].parse().unwrap(),
            )
        })
        .collect()
}

#[test]
fn wavefunction_is_shifted_airy() {
    let samples = wavefunction(&["--n", "0", "--l", "0", "--xi-max", "6", "--samples", "121"]);
    let z = airy_zero_k(1).unwrap();
    let oracle: Vec<f64> = samples.iter().map(|s| airy_ai(s.0 + z).unwrap()).collect();
    let dot = |u: &[f64], v: &[f64]| u.iter().zip(v).map(|(a, b)| a * b).sum::<f64>();
    let r: Vec<f64> = samples.iter().map(|s| s.1).collect();
    let corr = dot(&r, &oracle) / (dot(&r, &r) * dot(&oracle, &oracle)).sqrt();
    assert!(corr >= 0.999999, "{corr}");
    let peak = r.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    assert!((peak - 1.0).abs() < 1e-12);
    assert!(samples.iter().all(|s| s.2.abs() < 1e-6));
}

#[test]
fn wavefunction_node_count() {
    let samples = wavefunction(&["--n", "2", "--xi-max", "6", "--samples", "601"]);
    let signs: Vec<f64> = samples.iter().map(|s| s.1).filter(|v| *v != 0.0).collect();
    let changes = signs.windows(2).filter(|w| w[0] * w[1] < 0.0).count();
    assert_eq!(changes, 2);
}

#[test]
fn wavefunction_origin_exponent() {
    let samples = wavefunction(&["--a", "1", "--l", "1", "--xi-max", "6", "--samples", "6001"]);
    // first decade: xi = 0.001 .. 0.01
    let (x0, r0) = (samples[1].0, samples[1].1);
    let (x1, r1) = (samples[10].0, samples[10].1);
    let slope = (r1 / r0).ln() / (x1 / x0).ln();
    assert!((slope - 2.0).abs() <= 0.01, "{slope}");
}

#[test]
fn deterministic_output() {
    let args = ["table", "tab2"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn output_file_and_config() {
    let dir = std::env::temp_dir().join(format!("cornell-eigen-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("bb.conf");
    std::fs::write(
        &cfg,
        "# bottomonium\npreset = bottomonium-table3\nmethod = cornell-fit\n",
    )
    .unwrap();
    let dest = dir.join("out.csv");
    let out = run(&[
        "eigen",
        "--config",
        cfg.to_str().unwrap(),
        "--output",
        dest.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&dest).unwrap();
    assert!(text.starts_with("method,a,n,l,lambda,energy_gev,mass_gev\n"));
    assert!(text.trim_end().ends_with(",-0.4375,9.4225"), "{text}");

    // flags override the file, and --a conflicts with a potential
    let out = run(&[
        "eigen",
        "--config",
        cfg.to_str().unwrap(),
        "--method",
        "shooting",
    ]);
    assert!(stdout(&out).starts_with("method,a,n,l,lambda,energy_gev,mass_gev\nshooting,"));
    let out = run(&["eigen", "--config", cfg.to_str().unwrap(), "--a", "1"]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn precision_flag() {
    let out = run(&["eigen", "--method", "formula", "--precision", "12"]);
    assert_eq!(
        stdout(&out),
        "method,a,n,l,lambda\nformula,0,0,0,2.33810741046\n"
    );
}
