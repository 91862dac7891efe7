fn main() {
    let t0 = std::time::Instant::now();
    let rep = dsem::search::reproduce_theorem1(4).unwrap();
    println!("elapsed: {:?}", t0.elapsed());
    println!("pairs: {} refuted: {} consistent: {} undecided: {} total_types: {}",
        rep.pairs.len(), rep.refuted, rep.consistent, rep.undecided, rep.total_types);
    for f in &rep.flags { println!("FLAG: {f}"); }
    for e in &rep.pairs {
        if let dsem::search::Verdict::Consistent { combos } = &e.verdict {
            println!("C {}|{} combos={}", e.pair.0, e.pair.1, combos.len());
        }
        if let dsem::search::Verdict::Undecided { explored } = &e.verdict {
            println!("U {}|{} explored={explored}", e.pair.0, e.pair.1);
        }
    }
}
