// The three decoders on the same corrupted words, with their counters.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rsic::bench::random_error_pattern;
use rsic::{Decoder, Field, RsCode, Word};

fn main() -> rsic::Result<()> {
    let code = RsCode::new(Field::prime(17)?, 4)?;
    let f = code.field();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    println!("q = 17, k = 4, tau = {}", code.tau());
    println!("{:>2}  {:<17} {:>5} {:>5} {:>6}", "t", "decoder", "rank", "det", "muls");

    for t in 0..=code.tau() {
        let sent = code.encode(&[rsic::Fe(3), rsic::Fe(1), rsic::Fe(4), rsic::Fe(1)])?;
        let mut received = sent.clone().into_symbols();
        for (pos, v) in random_error_pattern(&mut rng, code.n(), f.order(), t) {
            received[pos] = f.add(received[pos], v);
        }
        let received = Word::new(received);
        for d in Decoder::ALL {
            let before = rsic::gf::mul_count();
            let (result, trace) = d.decode_traced(&code, &received);
            let muls = rsic::gf::mul_count() - before;
            let ok = matches!(&result, Ok(out) if out.codeword == sent);
            println!("{t:>2}  {:<17} {:>5} {:>5} {:>6}  {}",
                d.name(), trace.rank_checks, trace.det_checks, muls,
                if ok { "ok" } else { "FAILED" });
        }
    }
    Ok(())
}
