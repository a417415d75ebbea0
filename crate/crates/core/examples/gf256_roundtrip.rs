// RS(255, 223) over GF(256): correct up to 16 errors, refuse 17.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rsic::bench::random_error_pattern;
use rsic::{Decoder, Fe, Field, RsCode, Word};

fn main() -> rsic::Result<()> {
    let code = RsCode::new(Field::gf256(), 223)?;
    let f = code.field();
    let mut rng = ChaCha8Rng::seed_from_u64(255);
    let msg: Vec<Fe> = (0..code.k()).map(|_| Fe(rng.gen_range(0..256))).collect();
    let sent = code.encode(&msg)?;

    for t in [0, 1, 8, 16, 17] {
        let mut received = sent.clone().into_symbols();
        for (pos, v) in random_error_pattern(&mut rng, code.n(), f.order(), t) {
            received[pos] = f.add(received[pos], v);
        }
        match Decoder::Interp.decode(&code, &Word::new(received)) {
            Ok(out) => println!("t = {t:>2}: corrected {} symbols, message intact: {}",
                out.t, code.message_of(&out.codeword)? == msg),
            Err(e) => println!("t = {t:>2}: {e}"),
        }
    }
    Ok(())
}
