use crate::arith::{hecke_m, RationalFunction};

use super::AnalysisError;

type Rf = RationalFunction;

/// Solves `r^4/l - m/r^2 + m^2 (1/r + r) = r^3` for `l`.
pub fn forced_l_with(m: &Rf) -> Result<Rf, AnalysisError> {
    let r = Rf::r();
    let rinv = r.inv().expect("r is nonzero");
    let r3 = r.pow(3).expect("positive power");
    let r4 = r.pow(4).expect("positive power");
    // r^4 / l = r^3 + m / r^2 - m^2 (1/r + r)
    let rhs = &r3 + &(m * &rinv * &rinv) - &(m * m * &(&rinv + &r));
    if rhs.is_zero() {
        return Err(AnalysisError::NoSolution);
    }
    Ok(r4.checked_div(&rhs).expect("nonzero divisor"))
}

pub fn forced_l() -> Rf {
    forced_l_with(&hecke_m()).expect("the right side is r")
}

/// Left side of the equation at a given `l`.
pub fn forced_l_lhs(l: &Rf, m: &Rf) -> Rf {
    let r = Rf::r();
    let rinv = r.inv().expect("r is nonzero");
    let r4 = r.pow(4).expect("positive power");
    r4.checked_div(l).expect("l is nonzero") - m * &rinv * &rinv + m * m * &(&rinv + &r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    #[test]
    fn yields_r_cubed() {
        let l = forced_l();
        assert_eq!(l, "r^3".parse().unwrap());
        assert_eq!(l.eval(&int(2)).unwrap(), int(8));
        assert_eq!(forced_l_lhs(&l, &hecke_m()), "r^3".parse().unwrap());
    }

    #[test]
    fn opposite_convention_differs() {
        let wrong = -hecke_m();
        assert_ne!(forced_l_with(&wrong).unwrap(), "r^3".parse().unwrap());
    }
}
