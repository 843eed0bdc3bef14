#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(doc) = azumaya_cli::document::parse_str(text) {
            let raw = serde_json::to_string(&doc.raw).unwrap();
            azumaya_cli::document::parse_str(&raw).expect("accepted documents re-parse");
        }
    }
});
