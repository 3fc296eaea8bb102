use std::time::Instant;

use semikit::caps::Caps;
use semikit::zoo::{all_modules, sweep_scalars};

fn main() {
    for s in sweep_scalars() {
        let t = Instant::now();
        let all = all_modules(&s, 8, &Caps::default()).unwrap();
        let mut by_size = [0usize; 9];
        for e in &all {
            by_size[e.module.size()] += 1;
        }
        println!("{:>16} {:?} total {} in {:?}", s.label(), by_size, all.len(), t.elapsed());
    }
}
