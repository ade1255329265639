//! Boost relations of the extended Galilei algebra recovered from
//! position and momentum operators in the small-velocity limit.

use lieq::limit::traditional_limit_report;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let report = traditional_limit_report()?;
    for line in report.lines() {
        let mark = if line.holds { "ok  " } else { "FAIL" };
        println!("{mark} {}", line.name);
    }
    println!("all hold: {}", report.all_hold());
    Ok(())
}
