//! A small existence-and-sharpness campaign written to JSON.

use wlp_core::verify::{run_campaign, write_report, CampaignConfig};

fn main() {
    let config = CampaignConfig {
        pairs: vec![(3, 3), (4, 2), (4, 3)],
        ..Default::default()
    };
    let report = run_campaign(&config).unwrap();
    for p in &report.pairs {
        println!("({},{}) Sigma={} {:?}", p.n, p.d, p.sigma, p.totals);
    }
    let path = std::env::temp_dir().join("wlp-campaign.json");
    write_report(&report.without_timing(), &path).unwrap();
    println!("written to {}", path.display());
}
