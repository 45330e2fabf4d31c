use std::time::Instant;
fn main() {
    for n in [7, 8, 9] {
        let t = Instant::now();
        let s = ramsey_core::oracle::enumerate(n).unwrap();
        println!("n={}: {} classes in {:?}", n, s.total_classes(), t.elapsed());
    }
}
