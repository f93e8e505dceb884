#![no_main]

use conicstab::preservers::guarantee;
use conicstab::text::{parse_cone, parse_transform};
use conicstab::Space;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&k, rest)) = data.split_first() else {
        return;
    };
    let Ok(src) = std::str::from_utf8(rest) else {
        return;
    };
    let n = usize::from(k % 4) + 1;
    let space = if k & 0x80 == 0 { Space::Vector(n) } else { Space::sym(n) };
    if let Ok(spec) = parse_transform(src, &space) {
        let cone = parse_cone(if space.as_sym().is_some() { "psd" } else { "orthant" }, &space).unwrap();
        let _ = spec.name();
        let _ = guarantee(&spec, &space, &cone);
    }
});
