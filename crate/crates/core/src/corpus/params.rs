use serde::Serialize;

use crate::arith::RationalFunction;

use super::CorpusError;

/// Parameters `(l, m, r)` in the conventions used throughout this crate.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct CohenWalesParams {
    pub l: RationalFunction,
    pub m: RationalFunction,
    pub r: RationalFunction,
}

/// Converts the Cohen-Wales parameters `t` and `r_cw` into `l = 1/(t r_cw^3)`,
/// `m = r_cw - 1/r_cw` and `r = 1/r_cw`.
pub fn param_convert(
    t: &RationalFunction,
    r_cw: &RationalFunction,
) -> Result<CohenWalesParams, CorpusError> {
    if t.is_zero() {
        return Err(CorpusError::ZeroParameter("t"));
    }
    if r_cw.is_zero() {
        return Err(CorpusError::ZeroParameter("r_cw"));
    }
    let r = r_cw.inv().expect("nonzero");
    let cube = r_cw * r_cw * r_cw;
    let l = (t * &cube).inv().expect("product of nonzero values");
    let m = r_cw - &r;
    Ok(CohenWalesParams { l, m, r })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::hecke_m;

    fn rf(s: &str) -> RationalFunction {
        s.parse().unwrap()
    }

    #[test]
    fn numeric_conversion() {
        let p = param_convert(&rf("1"), &rf("1/2")).unwrap();
        assert_eq!(p.l, rf("8"));
        assert_eq!(p.m, rf("-3/2"));
        assert_eq!(p.r, rf("2"));
    }

    #[test]
    fn symbolic_conversion() {
        let p = param_convert(&rf("r^3"), &rf("1/r")).unwrap();
        assert_eq!(p.l, rf("1"));
        assert_eq!(p.r, rf("r"));
        assert_eq!(p.m, hecke_m());
        assert_eq!(param_convert(&rf("1"), &rf("1/r")).unwrap().l, rf("r^3"));
    }

    #[test]
    fn zero_inputs() {
        assert_eq!(
            param_convert(&rf("0"), &rf("r")),
            Err(CorpusError::ZeroParameter("t"))
        );
        assert_eq!(
            param_convert(&rf("r"), &rf("0")),
            Err(CorpusError::ZeroParameter("r_cw"))
        );
    }
}
