fn main() { println!("{}", modespin::rug_probe()); }
