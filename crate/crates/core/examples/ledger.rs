//! Prints the rebuilt erratum ledger as JSON.
fn main() {
    let ledger = antimagic::build_ledger().expect("ledger builds");
    print!("{}", ledger.to_json());
}
