//! codim(O) = l_good(Ψ(O)) + dim T over several settings, via the CLI pipeline.
use weylbraid::cli::{verify_codim, Cli, RunConfig};
use clap::Parser;

fn main() -> weylbraid::Result<()> {
    for args in [
        vec!["verify-codim", "A5"],
        vec!["verify-codim", "2A4", "--char", "2"],
        vec!["verify-codim", "B4", "--char", "2"],
        vec!["verify-codim", "2D5", "--char", "2"],
        vec!["verify-codim", "D5"],
    ] {
        let cli = Cli::parse_from(std::iter::once("weylbraid").chain(args.iter().copied()));
        let cfg = RunConfig::from_cli(&cli)?;
        let recs = verify_codim(&cfg)?;
        let ok = recs.iter().filter(|r| r.ok).count();
        println!("{:<40} {:>3}/{:<3} orbits", args.join(" "), ok, recs.len());
    }
    Ok(())
}
