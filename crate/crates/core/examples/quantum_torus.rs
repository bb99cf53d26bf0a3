//! Weyl-ordered products, the star involution and Ore fractions on a
//! two-generator torus with `{Z, A} = 1`.

use shearq::qring::{
    Coefficient, OreElement, QDenominator, Ring, SkewForm, TorusElement, TorusMonomial,
};

fn main() {
    let f = SkewForm::from_rows(&[vec![0, -1], vec![1, 0]]).unwrap();
    let names = vec!["A".to_string(), "Z".to_string()];
    let ea = TorusElement::monomial(&[2, 0]);
    let ez = TorusElement::monomial(&[0, 2]);

    let az = f.mul(&ea, &ez);
    let za = f.mul(&ez, &ea);
    println!("e^A e^Z = {}", az.fmt_with(&names));
    println!("e^Z e^A = {}", za.fmt_with(&names));

    let x = ea.add(&ez.scale(&Coefficient::q_pow(1)));
    println!("x   = {}", x.fmt_with(&names));
    println!("x^* = {}", x.star().fmt_with(&names));

    // (1 + q e^Z)^{-1} times itself is 1
    let d = QDenominator::binomial(TorusMonomial::new(vec![0, 2]), Coefficient::q_pow(1)).unwrap();
    let frac = OreElement::fraction(d.to_torus(), vec![d.clone()]);
    let one: OreElement = TorusElement::one(2).into();
    println!("D D^-1 - 1 is zero: {}", frac.add(&one.neg()).is_zero(&f));
}
