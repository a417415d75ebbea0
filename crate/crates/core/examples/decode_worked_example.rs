// Step-by-step interpolation decoding of two received words.

use rsic::interp::{detect_t, recover_codeword};
use rsic::{ErrorCount, Fe, Field, RsCode, Word};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let code = RsCode::new(Field::prime(7)?.with_alpha(Fe(5))?, 2)?;
    let f = code.field();

    for received in ["421632", "025606", "342650"] {
        let u = Word::from_digits(f, received)?;
        let s = code.syndromes(&u)?;
        let f_u = code.interpolate(&u)?;
        println!("u = {u}");
        println!("  syndromes  {:?}", s.values().iter().map(|x| x.0).collect::<Vec<_>>());
        println!("  f_u        {f_u}");

        let (count, checks) = detect_t(&code, &s);
        let t = match count {
            ErrorCount::Found(0) => {
                println!("  no errors ({checks} rank check)\n");
                continue;
            }
            ErrorCount::Found(t) => t,
            ErrorCount::TooManyErrors => {
                println!("  uncorrectable\n");
                continue;
            }
        };
        let locator = rsic::decode::solve_locator(&code, &s, t)?;
        let rec = recover_codeword(&code, &u, &locator)?;
        println!("  t = {t} after {checks} rank checks");
        println!("  locator    {locator}");
        println!("  lambda f_u {}", locator.mul(&f_u, f));
        println!("  g_c        {}", rec.g_c);
        println!("  codeword   {}\n", code.evaluate(&rec.g_c));
    }
    Ok(())
}
