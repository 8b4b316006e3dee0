//! C ABI surface for the btt kernel. Placeholder during scaffolding.

/// Returns the crate version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn btt_version() -> *const core::ffi::c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const core::ffi::c_char
}
