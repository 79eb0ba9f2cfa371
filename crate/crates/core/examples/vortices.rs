//! Societies, rho-vortices and vortical decompositions.
//!
//! Run with `cargo run --example vortices`.

use clustercol::generators::{cycle, path};
use clustercol::io::write_society;
use clustercol::structure::{find_vortical_decomposition, is_rho_vortex, validate_vortical, vortex_linkage, vortical_adhesion, Society};

fn main() -> clustercol::Result<()> {
    let c4 = Society::on_graph(&cycle(4), vec![0, 1, 2, 3])?;
    println!("C4 along its own cycle: linkage {}", vortex_linkage(&c4)?);
    for rho in 0..=2 {
        println!("  {rho}-vortex: {}", is_rho_vortex(&c4, rho)?);
    }
    if let Some(bags) = find_vortical_decomposition(&c4, 2)? {
        assert!(validate_vortical(&c4, &bags)?);
        print!("  decomposition with adhesion {}:\n{}", vortical_adhesion(&c4, &bags)?, write_society(&c4, Some(&bags)));
    }

    // A path hanging off its two ends needs no adhesion at all.
    let p = Society::on_graph(&path(5), vec![0, 4])?;
    let bags = find_vortical_decomposition(&p, 1)?.expect("paths are 1-vortical");
    println!("path(5) with ends in order: bags {bags:?}, adhesion {}", vortical_adhesion(&p, &bags)?);
    Ok(())
}
