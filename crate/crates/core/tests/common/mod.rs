#![allow(dead_code)]
use hypdesc_core::arith::{Elem, Rational, Tower};
use hypdesc_core::binforms::{BinaryForm, Mat2, NormalForm, Shape};

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// a + b√d with rational a, b.
pub fn qd(t: &Tower, a: Rational, b: Rational) -> Elem {
    let base = t.base();
    Elem::from_parts(t, &Elem::from_rational(&base, a), &Elem::from_rational(&base, b))
}

pub fn el(t: &Tower, a: i64, b: i64) -> Elem {
    qd(t, q(a, 1), q(b, 1))
}

/// Coefficients listed from x^N down to z^N.
pub fn form_desc(t: &Tower, c: &[(i64, i64)]) -> BinaryForm {
    let mut v: Vec<Elem> = c.iter().map(|&(a, b)| el(t, a, b)).collect();
    v.reverse();
    BinaryForm::new(v)
}

pub fn rat_form_desc(c: &[Rational]) -> BinaryForm {
    let t = Tower::rationals();
    let mut v: Vec<Rational> = c.to_vec();
    v.reverse();
    BinaryForm::from_rationals(&t, v)
}

pub fn sqrt5() -> Tower {
    Tower::quadratic(5).unwrap()
}

/// A genus 3 octavic over ℚ(√5) with an extra involution.
pub fn genus3_input() -> BinaryForm {
    form_desc(
        &sqrt5(),
        &[
            (43640, 20456),
            (-56716, -17772),
            (3584, 28984),
            (-95522, 25862),
            (-136740, 67320),
            (-193217, 84995),
            (-167611, 75097),
            (-86676, 38764),
            (-17762, 7942),
        ],
    )
}

/// A genus 4 form over ℚ(√5) with an automorphism of order 3.
pub fn genus4_input() -> BinaryForm {
    form_desc(
        &sqrt5(),
        &[
            (291100, 138076),
            (-370816, -120728),
            (208878, 243042),
            (-760529, 48987),
            (-751581, 515947),
            (-1880505, 754227),
            (-2713183, 1243617),
            (-3287139, 1462433),
            (-2777109, 1243263),
            (-1398734, 625402),
            (-278722, 124654),
        ],
    )
}

/// Traceless matrix with the fixed points of the extra automorphisms of both ℚ(√5) examples.
pub fn n0() -> Mat2 {
    let t = sqrt5();
    let k = q(1, 40);
    Mat2::new(
        qd(&t, q(-35, 40), q(19, 40)),
        qd(&t, q(-30, 40), q(14, 40)),
        Elem::one(&t),
        qd(&t, q(35, 1) * &k, q(-19, 1) * &k),
    )
}

/// The order-3 automorphism N0 + (e/3)√−3 of the genus 4 example, e = (35 − 11√5)/40.
pub fn genus4_automorphism() -> Mat2 {
    let t = Tower::from_discs(&[5.into(), (-3).into()]).unwrap();
    let e = qd(&sqrt5(), q(35, 40), q(-11, 40));
    let s3 = Elem::generator(&t);
    let shift = &(e.lift(&t) * &s3) * &q(1, 3);
    let n = n0().lift(&t);
    Mat2::new(&n.a + &shift, n.b.clone(), n.c.clone(), &n.d + &shift)
}

pub fn sqrt2() -> Tower {
    Tower::quadratic(2).unwrap()
}

/// The degree-12 normal form over ℚ(√2), a_0..a_6.
pub fn obstructed12_normal_form() -> NormalForm {
    let t = sqrt2();
    let a6 = el(&t, 7, 1);
    let a5 = el(&t, 3, -2);
    let a4 = el(&t, 1, 1);
    let a3 = el(&t, 0, 12);
    let a2 = &el(&t, 1, -1) * &q(-3, 1);
    let a1 = &el(&t, 3, 2) * &q(-9, 1);
    let a0 = &el(&t, 7, -1) * &q(-27, 1);
    NormalForm::new(Shape::CcForm, 2, vec![a0, a1, a2, a3, a4, a5, a6])
}

/// The octavic a4 x^8 + … + a0 z^8 over ℚ(√2).
pub fn octavic_obstructed_normal_form() -> NormalForm {
    let t = sqrt2();
    let a4 = el(&t, 7, 1);
    let a3 = el(&t, 3, -2);
    let a2 = el(&t, 0, 12);
    let a1 = &el(&t, 3, 2) * &q(-3, 1);
    let a0 = &el(&t, 7, -1) * &q(-9, 1);
    NormalForm::new(Shape::CcForm, 2, vec![a0, a1, a2, a3, a4])
}

pub fn sqrt3() -> Tower {
    Tower::quadratic(3).unwrap()
}

/// The partial descent octavic over ℚ(√3) in the d1 = 3, d2 = 13 variant.
pub fn octavic_descends_normal_form() -> NormalForm {
    let t = sqrt3();
    let a4 = qd(&t, q(17745, 5184), q(10309, 5184));
    let a3 = qd(&t, q(13, 144), q(0, 1));
    let a2 = el(&t, 1, 0);
    let a1 = el(&t, 1, 0);
    let a0 = el(&t, 420, -244);
    NormalForm::new(Shape::CcForm, 2, vec![a0, a1, a2, a3, a4])
}

pub fn octavic_rational_model() -> BinaryForm {
    let c: Vec<Rational> = [19, 320, 1542, 6576, 12006, 19728, 13878, 8640, 1539].iter().map(|&v| q(v, 1)).collect();
    rat_form_desc(&c)
}

/// The degree-12 variant over ℚ(√2): the octavic's coefficients on x^{3i} z^{12−3i}.
pub fn conic12_normal_form() -> NormalForm {
    let nf = octavic_obstructed_normal_form();
    NormalForm::new(Shape::CcForm, 3, nf.a.clone())
}

/// The involution of the genus 3 example, the representative −40·N0.
pub fn genus3_involution() -> Mat2 {
    let t = sqrt5();
    n0().scale(&Elem::from_int(&t, -40))
}
