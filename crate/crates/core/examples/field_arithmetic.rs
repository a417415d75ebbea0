// Arithmetic in F_7 and GF(256).

use rsic::{Fe, Field};

fn main() -> rsic::Result<()> {
    let f7 = Field::prime(7)?.with_alpha(Fe(5))?;
    println!("F_7, alpha = {}", f7.alpha().0);
    println!("3 * 5 = {}", f7.mul(Fe(3), Fe(5)).0);
    println!("1 / 3 = {}", f7.inv(Fe(3))?.0);
    let powers: Vec<u32> = (0..6).map(|i| f7.alpha_pow(i).0).collect();
    println!("powers of alpha: {powers:?}");
    println!("dlog 4 = {}", f7.dlog(Fe(4))?);

    let gf = Field::gf256();
    let (a, b) = (Fe(0x53), Fe(0xCA));
    println!();
    println!("GF(256), alpha = {:#04x}", gf.alpha().0);
    println!("{:#04x} + {:#04x} = {:#04x}", a.0, b.0, gf.add(a, b).0);
    println!("{:#04x} * {:#04x} = {:#04x}", a.0, b.0, gf.mul(a, b).0);
    println!("{:#04x}^-1 = {:#04x}", a.0, gf.inv(a)?.0);
    println!("primitive elements below 10: {:?}",
        (2..10).filter(|&x| gf.is_primitive(Fe(x))).collect::<Vec<_>>());
    Ok(())
}
