#![no_main]

use conicstab::text::{
    parse_complex, parse_det_term, parse_index_list, parse_matrix, parse_real, parse_vector,
    parse_weight_matrix,
};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&k, rest)) = data.split_first() else {
        return;
    };
    let Ok(src) = std::str::from_utf8(rest) else {
        return;
    };
    match k % 7 {
        0 => {
            if let Ok(x) = parse_real(src) {
                assert!(x.is_finite());
            }
        }
        1 => {
            let _ = parse_complex(src);
        }
        2 => {
            let _ = parse_vector(src);
        }
        3 => {
            if let Ok(m) = parse_matrix(src) {
                assert!(m.iter().all(|x| x.is_finite()));
            }
        }
        4 => {
            if let Ok(w) = parse_weight_matrix(src) {
                let _ = w.to_f64();
            }
        }
        5 => {
            let _ = parse_index_list(src);
        }
        _ => {
            let _ = parse_det_term(src, usize::from(k / 7 % 4) + 1);
        }
    }
});
