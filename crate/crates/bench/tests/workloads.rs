use supercong::Registry;
use supercong_bench::{cubed_sum_mod_p2, depressed_char_sum, half_legendre_mod_p2, sweep_passes};

#[test]
fn cubed_sum_is_four_x_squared_minus_2p() {
    // 13 = 3² + 2², so 4x² − 2p = 36 − 26 = 10.
    assert_eq!(cubed_sum_mod_p2(13, 64).unwrap(), 10);
}

#[test]
fn char_sum_within_weil_bound() {
    let s = depressed_char_sum(1009, -35, 98).unwrap();
    assert!(s * s <= 4 * 1009);
}

#[test]
fn legendre_at_one_is_one() {
    assert_eq!(half_legendre_mod_p2(1009, 1).unwrap(), 1);
}

#[test]
fn sweep_workload_passes() {
    let reg = Registry::new();
    assert_eq!(sweep_passes(&reg, &["eq-1.3"], 5, 100, 1).unwrap(), 23);
}
