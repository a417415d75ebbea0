// Exhaustive nearest-codeword search next to the algebraic decoder.

use rsic::oracle::{brute_min_distance, brute_nearest};
use rsic::{Decoder, Fe, Field, RsCode, Word};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let code = RsCode::new(Field::prime(7)?.with_alpha(Fe(5))?, 2)?;
    println!("minimum distance by enumeration: {}", brute_min_distance(&code)?);

    for received in ["421632", "025606", "265146", "111222"] {
        let u = Word::from_digits(code.field(), received)?;
        let nearest = brute_nearest(&code, &u)?;
        let decoded = match Decoder::Interp.decode(&code, &u) {
            Ok(out) => out.codeword.to_string(),
            Err(e) => e.to_string(),
        };
        println!("{u}: nearest {} at {}{}, decoder: {decoded}",
            nearest.nearest, nearest.distance,
            if nearest.unique { "" } else { " (tie)" });
    }
    Ok(())
}
