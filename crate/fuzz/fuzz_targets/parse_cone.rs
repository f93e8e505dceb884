#![no_main]

use conicstab::text::parse_cone;
use conicstab::Space;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&k, rest)) = data.split_first() else {
        return;
    };
    let Ok(src) = std::str::from_utf8(rest) else {
        return;
    };
    let n = usize::from(k % 6) + 1;
    let space = if k & 0x80 == 0 { Space::Vector(n) } else { Space::sym(n) };
    if let Ok(cone) = parse_cone(src, &space) {
        let _ = cone.validate();
        let _ = cone.certificate(&cone.canonical_params());
    }
});
