//! Published piecewise formulas for the two toric surfaces.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::geometry::rational::{int, pow, rat};
use crate::geometry::Rational;

/// Pieces of `s(a, b)` on `P^1 × P^1` for `0 < a <= b`.
pub fn p1p1_piece(piece: usize, a: &Rational, b: &Rational) -> Rational {
    match piece {
        1 => a / (b * b),
        2 => (pow(&(b - a * int(2)), 3) + int(3) * pow(a, 3)) / (int(3) * a * a * b * b),
        _ => panic!("P1xP1 formula has two pieces"),
    }
}

/// Piece index used at `(a, b)` with `0 < a <= b`; the lower piece wins at a
/// breakpoint.
fn p1p1_piece_index(a: &Rational, b: &Rational) -> usize {
    if a * int(2) <= *b {
        1
    } else {
        2
    }
}

/// `s(a, b)` on `P^1 × P^1`, extended to `a > b` by the factor swap.
pub fn closed_form_p1p1(a: &Rational, b: &Rational) -> Result<Rational> {
    if !a.is_positive() || !b.is_positive() {
        return Err(Error::Precondition("P1xP1 formula needs a, b > 0".into()));
    }
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    Ok(p1p1_piece(p1p1_piece_index(a, b), a, b))
}

/// Pieces of `s(aH - bE)` on the blow-up of `P^2` at a point.
pub fn blp2_piece(piece: usize, a: &Rational, b: &Rational) -> Rational {
    let two = int(2);
    let three = int(3);
    let six = int(6);
    let amb = a - b;
    let amb2 = &amb * &amb;
    match piece {
        1 => &amb / (a * b),
        2 => {
            let t1 = (b * &two - a) / (&two * a * &amb);
            let t2 = (b * &three - a) * (a * &two - b * &three) / (&six * b * &amb2);
            let t3 = pow(&(a * &two - b * &three), 2) / (&two * a * &amb2);
            t1 + t2 + t3
        }
        3 => {
            let num = pow(b, 3) + pow(&(a - b * &two), 3);
            a.recip() - num / (&six * a * b * &amb2)
        }
        4 => {
            let a2b = a - b * &two;
            let a3b = a - b * &three;
            let num = b * b + &a2b * &a2b + &a3b * &a2b + &a3b * &a3b;
            a.recip() - num / (&six * a * &amb2)
        }
        _ => panic!("blow-up formula has four pieces"),
    }
}

/// The breakpoints `a / b` between consecutive pieces.
pub fn blp2_breakpoints() -> [Rational; 3] {
    [rat(3, 2), int(2), int(3)]
}

fn blp2_piece_index(a: &Rational, b: &Rational) -> usize {
    let ratio = a / b;
    blp2_breakpoints()
        .iter()
        .position(|t| ratio <= *t)
        .map_or(4, |i| i + 1)
}

/// `s(aH - bE)` on the ample cone `0 < b < a`.
pub fn closed_form_blp2(a: &Rational, b: &Rational) -> Result<Rational> {
    if !(b.is_positive() && b < a) {
        return Err(Error::Precondition(
            "blow-up formula is stated on the ample cone 0 < b < a".into(),
        ));
    }
    Ok(blp2_piece(blp2_piece_index(a, b), a, b))
}

/// If `(a, b)` sits on a breakpoint, the two adjacent piece values.
pub fn blp2_adjacent_pieces(a: &Rational, b: &Rational) -> Option<(usize, Rational, Rational)> {
    let ratio = a / b;
    let i = blp2_breakpoints().iter().position(|t| ratio == *t)?;
    Some((i + 1, blp2_piece(i + 1, a, b), blp2_piece(i + 2, a, b)))
}

/// If `(a, b)` with `a <= b` sits on `b = 2a`, both piece values.
pub fn p1p1_adjacent_pieces(a: &Rational, b: &Rational) -> Option<(Rational, Rational)> {
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    (a * int(2) == *b).then(|| (p1p1_piece(1, a, b), p1p1_piece(2, a, b)))
}

/// Value predicted at a breakpoint: `1/(4a)` on `P^1 × P^1`; `1/(3b)`,
/// `5/(12b)`, `11/(36b)` on the blow-up.
pub fn breakpoint_value_blp2(breakpoint: usize, b: &Rational) -> Rational {
    let c = match breakpoint {
        1 => rat(1, 3),
        2 => rat(5, 12),
        3 => rat(11, 36),
        _ => Rational::zero(),
    };
    c / b
}

pub fn breakpoint_value_p1p1(a: &Rational) -> Rational {
    Rational::one() / (a * int(4))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p1p1_values() {
        assert_eq!(closed_form_p1p1(&int(1), &int(2)).unwrap(), rat(1, 4));
        assert_eq!(closed_form_p1p1(&int(1), &int(1)).unwrap(), rat(2, 3));
        assert_eq!(closed_form_p1p1(&int(2), &int(3)).unwrap(), rat(23, 108));
        assert_eq!(closed_form_p1p1(&int(3), &int(2)).unwrap(), rat(23, 108));
        assert!(closed_form_p1p1(&int(0), &int(2)).is_err());
    }

    #[test]
    fn blp2_values() {
        assert_eq!(closed_form_blp2(&int(2), &int(1)).unwrap(), rat(5, 12));
        assert_eq!(closed_form_blp2(&int(3), &int(1)).unwrap(), rat(11, 36));
        assert_eq!(closed_form_blp2(&int(5), &int(1)).unwrap(), rat(19, 120));
        assert!(closed_form_blp2(&int(1), &int(1)).is_err());
        assert!(closed_form_blp2(&int(1), &int(0)).is_err());
        assert!(closed_form_blp2(&int(1), &int(2)).is_err());
    }

    #[test]
    fn pieces_meet_at_breakpoints() {
        for b in [int(1), int(2), rat(3, 2), rat(5, 7)] {
            for (i, t) in blp2_breakpoints().iter().enumerate() {
                let a = t * &b;
                let (k, left, right) = blp2_adjacent_pieces(&a, &b).unwrap();
                assert_eq!(k, i + 1);
                assert_eq!(left, right);
                assert_eq!(left, breakpoint_value_blp2(k, &b));
            }
            let (l, r) = p1p1_adjacent_pieces(&b, &(&b * int(2))).unwrap();
            assert_eq!(l, r);
            assert_eq!(l, breakpoint_value_p1p1(&b));
        }
        assert!(blp2_adjacent_pieces(&int(5), &int(2)).is_none());
    }
}
