#![no_main]

use libfuzzer_sys::fuzz_target;
use permstat::IntPoly;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(p) = s.parse::<IntPoly>() {
        let again: IntPoly = p.to_string().parse().expect("display reparses");
        assert_eq!(again, p);
    }
});
