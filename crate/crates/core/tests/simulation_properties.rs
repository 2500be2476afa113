use leosim::constellation::ConstellationSpec;
use leosim::presets;
use leosim::simulation::{self, light_rtt_lower_bound_ms, Summary};
use leosim::{ConstellationSource, Scenario};
use proptest::prelude::*;

fn scenario(planes: usize, sats: usize, src: &str, dst: &str, duration_s: f64, update_s: f64) -> Scenario {
    let spec = ConstellationSpec::shell(planes, sats, 53.0, 550.0).with_isl(true);
    let mut s = Scenario::new("props", ConstellationSource::Generated(spec), src, dst, duration_s).unwrap();
    s.update_interval_s = update_s;
    s
}

#[test]
fn granularity_coherence() {
    let fine = simulation::run(&scenario(10, 66, "Washington DC", "Frankfurt", 120.0, 1.0)).unwrap();
    let coarse = simulation::run(&scenario(10, 66, "Washington DC", "Frankfurt", 120.0, 15.0)).unwrap();
    assert_eq!(fine.samples.len(), coarse.samples.len());
    let mut shared = 0;
    for (a, b) in fine.samples.iter().zip(&coarse.samples) {
        assert_eq!(a.t_s, b.t_s);
        // Both traces route on the snapshot built at floor(t) when that
        // instant is also a multiple of 15 s.
        if (a.t_s.floor() as u64) % 15 == 0 {
            assert_eq!(a.rtt_ms, b.rtt_ms, "t = {}", a.t_s);
            assert_eq!(a.hop_count, b.hop_count);
            shared += 1;
        }
    }
    assert_eq!(shared, 16);
}

#[test]
fn seven_thousand_two_hundred_seconds_give_14400_samples() {
    let s = presets::exp1_relay(6).unwrap();
    assert_eq!((s.duration_s, s.ping_interval_ms), (7200.0, 500));
    let trace = simulation::run(&s).unwrap();
    assert_eq!(trace.samples.len(), 14_400);
    assert_eq!(trace.samples.last().unwrap().t_s, 7199.5);
}

#[test]
fn trace_carries_scenario_digest() {
    let s = scenario(6, 20, "London", "New York", 5.0, 1.0);
    assert_eq!(simulation::run(&s).unwrap().scenario_digest, s.digest());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn trace_invariants(
        planes in 4usize..14,
        sats in 12usize..40,
        pair in 0usize..4,
        update_s in 1u32..8,
        min_elev in 10.0f64..40.0,
    ) {
        let (src, dst) = [
            ("London", "New York"),
            ("Washington DC", "Frankfurt"),
            ("New York", "Seattle"),
            ("Los Angeles", "New York"),
        ][pair];
        let mut s = scenario(planes, sats, src, dst, 60.0, update_s as f64);
        s.link_params.min_elevation_deg = min_elev;
        let trace = simulation::run(&s).unwrap();

        prop_assert!(trace.samples.windows(2).all(|w| w[0].t_s < w[1].t_s));
        let bound = {
            let (a, b) = (s.station(src).unwrap().1.coord, s.station(dst).unwrap().1.coord);
            light_rtt_lower_bound_ms(&a, &b)
        };
        for sample in &trace.samples {
            match sample.rtt_ms {
                Some(rtt) => {
                    prop_assert!(rtt > 0.0 && rtt >= bound);
                    prop_assert!(sample.hop_count >= 2);
                }
                None => prop_assert_eq!(sample.hop_count, 0),
            }
        }
        prop_assert_eq!(
            trace.outage_count(),
            trace.samples.iter().filter(|x| x.rtt_ms.is_none()).count()
        );

        // Independent recomputation of the summary.
        let values: Vec<f64> = trace.reachable().collect();
        let recomputed = Summary::from_samples(&trace.samples);
        prop_assert_eq!(&recomputed, &trace.summary);
        if !values.is_empty() {
            let mean = values.iter().sum::<f64>() / values.len() as f64;
            prop_assert!((trace.summary.mean_ms.unwrap() - mean).abs() < 1e-9);
            prop_assert_eq!(trace.summary.min_ms.unwrap(), values.iter().copied().fold(f64::INFINITY, f64::min));
            prop_assert_eq!(trace.summary.max_ms.unwrap(), values.iter().copied().fold(f64::NEG_INFINITY, f64::max));
        }
    }
}
