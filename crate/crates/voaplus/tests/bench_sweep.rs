#[test]
#[ignore]
fn sweep_timing() {
    use std::time::Instant;
    use voaplus::c2::c2_span;
    use voaplus::scalar::LatticeConfig;
    let cfg = LatticeConfig::fixed(3);
    for n in 0..=20u32 {
        let t0 = Instant::now();
        let span = c2_span(&cfg, n).unwrap();
        println!(
            "N={:2}: ambient={:4} rank={:4} quotient={} gens={:6} used={:?} ({:.2?})",
            n,
            span.ambient_dim,
            span.rank(),
            span.quotient_dim(),
            span.generator_count,
            span.saturated_after,
            t0.elapsed()
        );
    }
}
