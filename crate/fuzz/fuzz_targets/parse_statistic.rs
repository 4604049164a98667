#![no_main]

use libfuzzer_sys::fuzz_target;
use permstat::{Permutation, StatParams, Statistic};

// "tag;k;k2;d;variant;permutation", empty fields mean absent
fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let f: Vec<&str> = s.splitn(6, ';').collect();
    if f.len() < 6 {
        return;
    }
    let num = |x: &str| x.parse::<usize>().ok();
    let params = StatParams {
        k: num(f[1]),
        k2: num(f[2]),
        d: num(f[3]),
        variant: (!f[4].is_empty()).then(|| f[4].to_string()),
    };
    let Ok(stat) = Statistic::from_parts(f[0], &params) else { return };
    let Ok(pi) = f[5].parse::<Permutation>() else { return };
    if pi.rank() <= 64 {
        let _ = stat.evaluate(&pi);
    }
});
