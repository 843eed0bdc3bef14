#![no_main]

use azumaya::linalg::Field;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&selector, rest)) = data.split_first() else {
        return;
    };
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    let field = match selector % 4 {
        0 => Field::Rational,
        1 => Field::prime(2).unwrap(),
        2 => Field::prime(7).unwrap(),
        _ => Field::prime(1_000_000_007).unwrap(),
    };
    if let Ok(x) = field.parse(text) {
        let back = field.parse(&x.to_string()).expect("printed scalars re-parse");
        assert_eq!(back, x);
    }
});
