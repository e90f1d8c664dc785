//! The JSON reports produced by the `nilsum` binary, built in-process.

use nilsum::driver::{cmd_remarks, cmd_suite, RemarksParams, SearchBudget, Suite, SuiteParams};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let remarks = cmd_remarks(RemarksParams::default(), SearchBudget::default())?;
    println!("{}", remarks.to_json()?);

    let smoke = cmd_suite(Suite::TheoremSmoke, SuiteParams::default())?;
    println!("{}", serde_json::to_string_pretty(&smoke.stats)?);
    Ok(())
}
