#![no_main]

use libfuzzer_sys::fuzz_target;
use permstat::statistics::{from_augmented_ninv_zone_vector, zone_vector, PairKind};

fuzz_target!(|data: &[u8]| {
    // one signed byte per coordinate keeps the ranks small
    let v: Vec<i64> = data.iter().map(|&b| b as i8 as i64).collect();
    if let Ok(pi) = from_augmented_ninv_zone_vector(&v) {
        let back: Vec<i64> = zone_vector(&pi, PairKind::NonInversions, true)
            .into_iter()
            .map(|x| x as i64)
            .collect();
        assert_eq!(back, v);
    }
});
