#![no_main]

use libfuzzer_sys::fuzz_target;
use permstat::Permutation;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(pi) = s.parse::<Permutation>() {
        // whatever parses must print back to the same permutation
        let again: Permutation = pi.to_string().parse().expect("display reparses");
        assert_eq!(again, pi);
        assert_eq!(pi.inverse().inverse(), pi);
    }
});
