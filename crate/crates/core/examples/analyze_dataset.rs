//! The full analysis behind `rcbs analyze`, driven from the library.
//!
//! `cargo run --example analyze_dataset [path.csv|path.json]`

use std::path::PathBuf;

use rcbs::cli::{analyze, parse_csv, parse_dataset, AnalyzeOptions, DataFormat};

fn main() -> rcbs::Result<()> {
    let ds = match std::env::args().nth(1).map(PathBuf::from) {
        Some(path) => parse_dataset(&path, DataFormat::from_path(&path))?,
        None => parse_csv("re_a,im_a,re_b,im_b,weight\n3,0,1,0,1\n1,0.5,1,-0.2,2\n2,-1,0.5,0.5,1\n")?,
    };
    let report = analyze(&ds, &AnalyzeOptions::default())?;
    print!("{}", report.to_text());
    println!("\n{} bounds, {} skipped, {} violations", report.bounds.len(), report.skipped.len(), report.violations().len());
    Ok(())
}
