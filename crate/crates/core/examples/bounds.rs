//! Moore bounds, the improved bound and the bound table.
//!
//! cargo run --example bounds

use mixed_moore::bounds::{
    improved_bound, layer_counts, moore_bound, moore_bound_closed_form, moore_table,
};
use mixed_moore::DegreePair;

fn main() {
    let dp = DegreePair::new(1, 1).unwrap();
    for k in 1..=6 {
        println!(
            "{}  closed form {:.3}",
            improved_bound(dp, k),
            moore_bound_closed_form(dp, k).unwrap()
        );
    }

    let layers = layer_counts(DegreePair::new(2, 2).unwrap(), 3);
    for (i, l) in layers.layers.iter().enumerate() {
        println!(
            "layer {i}: {} by edges + {} by arcs = {}",
            l.edge_children, l.arc_children, l.total
        );
    }
    println!("M(2,2,3) = {}", moore_bound(layers.degrees, 3));

    print!("{}", moore_table(5, 5).to_text());
}
