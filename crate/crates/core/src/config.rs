use crate::error::{Error, Result};

pub const DEFAULT_CAP: i64 = 8;

/// Winding cap from `QHOPF_CAP`, falling back to the default when unset.
pub fn cap_from_env() -> Result<i64> {
    match std::env::var("QHOPF_CAP") {
        Err(_) => Ok(DEFAULT_CAP),
        Ok(v) => match v.trim().parse::<i64>() {
            Ok(c) if c >= 0 => Ok(c),
            _ => Err(Error::BadCap(v)),
        },
    }
}

/// Like [`cap_from_env`] but never fails; malformed values use the default.
pub fn winding_cap() -> i64 {
    cap_from_env().unwrap_or(DEFAULT_CAP)
}

pub fn check_cap(value: i64, cap: i64) -> Result<()> {
    if value.abs() > cap {
        Err(Error::CapExceeded { value, cap })
    } else {
        Ok(())
    }
}
