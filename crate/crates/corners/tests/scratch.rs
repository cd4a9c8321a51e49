use corners::search::{alpha_lower_bound_search, SearchConfig};
use std::time::Instant;

#[test]
fn probe_alpha_search() {
    for (n, restarts, paper) in [
        (1usize, 20usize, true),
        (2, 20, true),
        (2, 100, false),
        (3, 20, true),
        (4, 50, true),
    ] {
        let config = SearchConfig {
            restarts,
            include_paper_seed: paper,
            ..SearchConfig::default()
        };
        let t = Instant::now();
        let r = alpha_lower_bound_search(n, &config).unwrap();
        let feasible = r
            .per_restart_history
            .len();
        println!(
            "n={n} restarts={restarts} paper={paper}: ratio={:.8} residual={:.3e} ({} restarts, {:.1?})",
            r.best_ratio,
            r.witness_normality_residual,
            feasible,
            t.elapsed()
        );
    }
}
