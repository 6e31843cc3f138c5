// Temporary debugging tool for cobordism records.

use legfront::cobordism::{check_relations, movie, parse_record, render_record, total_tb};

const REC: &str = "\
front v1
events: b1 x1 b1 x2 x3 x3 d2 d1
trace {
  R1a @ 5,4
  R1a @ 7,5
}
birth @14
birth @6
trace {
  R1a @ 16,1
  R1a @ 11,3
}
saddle @18,19
birth @11
birth @3
saddle @4,5
birth @13
trace {
  R1a @ 11,2
  R1b @ 29,2
}
";

fn main() {
    let rec = parse_record(REC).unwrap();
    println!("{}", render_record(&rec));
    let frames = movie(&rec).unwrap();
    for (i, f) in frames.iter().enumerate() {
        let t = f.trace().unwrap();
        println!(
            "frame {i}: tb={} comps={} flipped={:?} word={}",
            total_tb(f).unwrap(),
            t.component_count,
            f.flipped,
            f.word()
        );
    }
    let rep = check_relations(&rec).unwrap();
    println!("{}", rep.render());
}
