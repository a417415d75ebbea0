// The length-6 code over F_7: generator, parity-check matrix and block encoding.

use rsic::{Fe, Field, RsCode};

fn print_matrix(name: &str, m: &rsic::Matrix) {
    println!("{name}:");
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(|x| x.0.to_string()).collect();
        println!("  {}", row.join(" "));
    }
}

fn main() -> rsic::Result<()> {
    let code = RsCode::new(Field::prime(7)?.with_alpha(Fe(5))?, 2)?;
    println!("n = {}, k = {}, d = {}, tau = {}", code.n(), code.k(), code.min_distance(), code.tau());
    print_matrix("G", &code.generator_matrix());
    print_matrix("H", &code.parity_check_matrix());

    let info = [1, 1, 0, 2, 5, 6];
    for block in info.chunks(2) {
        let msg: Vec<Fe> = block.iter().map(|&x| Fe(x)).collect();
        let cw = code.encode(&msg)?;
        println!("{block:?} -> {cw}  syndromes zero: {}", code.syndromes(&cw)?.is_zero());
    }
    Ok(())
}
