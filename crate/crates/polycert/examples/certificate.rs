//! Runs the full verification pipeline through the library API and
//! prints the certificate JSON, exactly as the CLI's `verify` does.
//!
//!     cargo run --release -p polycert --example certificate

use polycert::cert::{verify, VerifyOptions};

fn main() -> polycert::Result<()> {
    let cert = verify(6, &VerifyOptions::default())?;
    println!("{}", serde_json::to_string_pretty(&cert).expect("serializable"));
    assert!(cert.all_pass());
    Ok(())
}
