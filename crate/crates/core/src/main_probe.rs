fn main() { println!("x = {}", capfirm_core::probe()); }
