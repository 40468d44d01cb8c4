//! Reading presentation files and driving the command-line interface from code.
//!
//! ```bash
//! cargo run --example presentation_files
//! ```

use lingrowth::cli::files::{PresentationFile, DEMOS};
use lingrowth::cli::run;
use lingrowth::Result;

fn main() -> Result<()> {
    let text = r#"{
        "field": {"Fp": 3},
        "n": 2,
        "generators": [[["1", "1"], ["0", "1"]], [["0", "0"], ["1", "0"]]],
        "names": ["u", "l"]
    }"#;
    let pres = PresentationFile::parse(text)?.to_presentation()?;
    println!("parsed {} generators over {}", pres.alphabet_size(), pres.field());
    println!("{}", serde_json::to_string(&PresentationFile::from_presentation(&pres)).expect("serializes"));

    println!("bundled: {}", DEMOS.iter().map(|(n, _)| *n).collect::<Vec<_>>().join(", "));
    for args in [
        vec!["lingrowth", "growth", "demo:e12-e21", "--format", "csv"],
        vec!["lingrowth", "reduce", "demo:unipotent", "--word", "g,g,g"],
        vec!["lingrowth", "bound", "--c", "3", "--format", "json"],
    ] {
        let (code, out) = run(args);
        print!("{out}");
        println!("(exit {code})");
    }
    Ok(())
}
