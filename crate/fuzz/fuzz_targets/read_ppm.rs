#![no_main]

use hierseg::{read_ppm, write_ppm};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(img) = read_ppm(data) {
        assert_eq!(img.pixels().len(), img.width() * img.height());
        let again = read_ppm(&write_ppm(&img)).expect("re-encoded image decodes");
        assert_eq!(again, img);
    }
});
