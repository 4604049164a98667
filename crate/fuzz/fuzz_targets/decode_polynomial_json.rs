#![no_main]

use libfuzzer_sys::fuzz_target;
use permstat::IntPoly;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(p) = IntPoly::from_json(s) {
        assert_eq!(IntPoly::from_json(&p.to_json()).expect("json reparses"), p);
    }
});
