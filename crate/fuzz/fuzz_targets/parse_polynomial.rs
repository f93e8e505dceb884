#![no_main]

use conicstab::text::{format_polynomial, parse_polynomial};
use conicstab::Space;
use libfuzzer_sys::fuzz_target;

// First byte picks the space, the rest is the polynomial text.
fuzz_target!(|data: &[u8]| {
    let Some((&k, rest)) = data.split_first() else {
        return;
    };
    let Ok(src) = std::str::from_utf8(rest) else {
        return;
    };
    let n = usize::from(k % 12) + 1;
    let space = if k & 0x80 == 0 { Space::Vector(n) } else { Space::sym(n) };
    if let Ok(f) = parse_polynomial(src, &space) {
        let text = format_polynomial(&f, &space);
        let again = parse_polynomial(&text, &space).expect("printed form parses");
        assert_eq!(again, f, "{text}");
    }
});
