//! Runs every lemma verification and prints a one-line summary for each.
use sinecert::{verify_lemma, verify_h_certificates, h_lower_bounds, LEMMA_IDS, DEFAULT_PREC};
fn main() {
    let t0 = std::time::Instant::now();
    for id in LEMMA_IDS {
        let t = std::time::Instant::now();
        match verify_lemma(id, DEFAULT_PREC) {
            Ok(rep) => println!("{} [{:?}]", rep.summary(), t.elapsed()),
            Err(e) => println!("{id}: ERROR {e}"),
        }
    }
    let t = std::time::Instant::now();
    match verify_h_certificates(64, DEFAULT_PREC) {
        Ok(rep) => println!("{} [{:?}]", rep.summary(), t.elapsed()),
        Err(e) => println!("h-certificates: ERROR {e}"),
    }
    let t = std::time::Instant::now();
    match h_lower_bounds(DEFAULT_PREC) {
        Ok(rep) => println!("{} [{:?}]", rep.summary(), t.elapsed()),
        Err(e) => println!("h-lower-bounds: ERROR {e}"),
    }
    println!("total {:?}", t0.elapsed());
}
