// Counter sweep over every error weight, printed as JSON lines.
//
//     cargo run --example best_case_sweep -- 17 4 100

use rsic::bench::{report_to_json, run_sweep, TrialConfig};
use rsic::{Field, RsCode};

fn main() -> rsic::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let q = args.first().copied().unwrap_or(17) as u32;
    let k = args.get(1).copied().unwrap_or(4) as usize;
    let trials = args.get(2).copied().unwrap_or(100) as usize;

    let code = RsCode::new(Field::from_order(q)?, k)?;
    let report = run_sweep(&TrialConfig::full_sweep(code, trials, 1))?;
    print!("{}", report_to_json(&report));
    Ok(())
}
