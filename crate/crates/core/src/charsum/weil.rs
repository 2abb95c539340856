use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;

use super::Cubic;

static CHECKED: AtomicU64 = AtomicU64::new(0);
static VIOLATIONS: AtomicU64 = AtomicU64::new(0);
static FIRST: Mutex<Option<String>> = Mutex::new(None);

/// Process-wide tally of Weil-bound checks `S² ≤ 4p` on nonsingular cubics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeilReport {
    pub checked: u64,
    pub violations: u64,
    pub first_violation: Option<String>,
}

pub(super) fn observe(f: &Cubic, s: i64) {
    if !f.is_nonsingular() {
        return;
    }
    CHECKED.fetch_add(1, Ordering::Relaxed);
    if (s as i128) * (s as i128) > 4 * f.p() as i128 {
        VIOLATIONS.fetch_add(1, Ordering::Relaxed);
        let mut first = FIRST.lock().unwrap_or_else(|e| e.into_inner());
        first.get_or_insert_with(|| format!("{f:?}: sum {s}"));
    }
}

pub fn weil_report() -> WeilReport {
    WeilReport {
        checked: CHECKED.load(Ordering::Relaxed),
        violations: VIOLATIONS.load(Ordering::Relaxed),
        first_violation: FIRST.lock().unwrap_or_else(|e| e.into_inner()).clone(),
    }
}
