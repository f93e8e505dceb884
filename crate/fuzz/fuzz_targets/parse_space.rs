#![no_main]

use conicstab::Space;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(space) = s.parse::<Space>() {
            assert_eq!(space.to_string().parse::<Space>().unwrap(), space);
        }
    }
});
