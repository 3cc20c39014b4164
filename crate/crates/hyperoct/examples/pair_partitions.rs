//! Symmetric pair partitions: the non-crossing hat companion, cycles and
//! semi-cycles, and the projection to plain matchings.
//!
//! Run with `cargo run --example pair_partitions`.

use hyperoct::pairpart::{
    cycle_count, decompose, enumerate, fiber_identity, hat, noncrossing_with_same_left_legs,
    visit_matchings, Matching, SymPairPartition,
};

fn main() {
    // a partition of [±10] with two positive cycles and one negative cycle
    let p = SymPairPartition::from_blocks(
        10,
        &[
            vec![-1, 3],
            vec![-3, 1],
            vec![-2, 4],
            vec![-4, 2],
            vec![-6, 5],
            vec![-5, 6],
            vec![8, 10],
            vec![7, 9],
            vec![-9, -7],
            vec![-10, -8],
        ],
    )
    .unwrap();
    println!("partition blocks: {:?}", p.blocks());
    let h = hat(&p);
    println!("hat matching    : {:?}", h.pairs());
    let d = decompose(&p);
    for c in &d.cycles {
        println!(
            "  {} cycle of length {} on {:?}",
            if c.negative { "negative" } else { "positive" },
            c.length,
            c.support
        );
    }
    let st = d.stats();
    println!("stats: c = {}, c- = {}, l_c = {}, l_sc = {}", st.c, st.c_minus, st.l_c, st.l_sc);

    // semi-cycles appear once singletons enter
    let p = SymPairPartition::from_blocks(
        9,
        &[
            vec![-6, -2],
            vec![2, 6],
            vec![-9, -3],
            vec![3, 9],
            vec![-4, 1],
            vec![-1, 4],
            vec![5],
            vec![-5],
            vec![7],
            vec![-7],
            vec![8],
            vec![-8],
        ],
    )
    .unwrap();
    let d = decompose(&p);
    println!("\nsemi-cycles of the second partition:");
    for s in &d.semi_cycles {
        println!("  length {}, free ends {:?}", s.length, s.parts);
    }

    // counting
    for n in 1..=4 {
        println!(
            "perfect symmetric pair partitions of [±{}]: {}",
            2 * n,
            enumerate(2 * n, true, None).len()
        );
    }

    // the 2^n-to-1 projection onto plain matchings and its weight identity
    let m = Matching::from_pairs(4, &[(1, 3), (2, 4)]);
    println!(
        "\nplain matching {:?}: hat {:?}, cycles {}",
        m.pairs(),
        noncrossing_with_same_left_legs(&m).pairs(),
        cycle_count(&m)
    );
    let mut all_ok = true;
    visit_matchings(6, &mut |m| all_ok &= fiber_identity(m));
    println!("fiber identity over all matchings of [6]: {all_ok}");
}
