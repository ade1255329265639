//! Run every reproduction check and print the report. Pass `--json` for
//! the machine-readable form.

use lieq::catalog::Catalog;
use lieq::report::report_paper;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let report = report_paper(&Catalog::standard()?);
    if std::env::args().any(|a| a == "--json") {
        print!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
        println!("auto powers: {:?}", report.auto_powers);
    }
    Ok(())
}
