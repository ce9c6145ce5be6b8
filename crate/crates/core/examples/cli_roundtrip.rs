// Driving the `wph` command line in-process, with files in a temp dir.

use weak_ramsey::cli;
use weak_ramsey::Result;

fn wph(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["wph"];
    argv.extend_from_slice(args);
    let code = cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8_lossy(&out).into_owned())
}

pub fn run_example() -> Result<()> {
    let dir = std::env::temp_dir().join(format!("wph-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let seq = dir.join("lex.seq");
    let col = dir.join("lex.color");

    let (code, text) = wph(&[
        "dmax",
        "--c",
        "2",
        "--a",
        "0",
        "--f",
        "const:2",
        "--witness",
        seq.to_str().unwrap(),
    ]);
    print!("[exit {code}]\n{text}");
    let (code, text) = wph(&[
        "transform",
        "to-coloring",
        "--input",
        seq.to_str().unwrap(),
        "--output",
        col.to_str().unwrap(),
    ]);
    print!("[exit {code}]\n{text}");
    let (code, text) = wph(&[
        "transform",
        "to-seq",
        "--input",
        col.to_str().unwrap(),
        "--f",
        "const:2",
    ]);
    print!("[exit {code}]\n{text}");
    let (code, text) = wph(&["bounds", "--d", "2", "--c", "2", "--m", "3"]);
    print!("[exit {code}]\n{text}");

    std::fs::remove_dir_all(&dir)?;
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
