//! Exact values in reports: rationals always print as `num/den`.

use std::fmt::Display;

use num_integer::Integer;
use num_rational::Ratio;
use serde::Serializer;

pub fn ratio_string<T: Clone + Integer + Display>(r: &Ratio<T>) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn serialize_ratio<T, S>(r: &Ratio<T>, s: S) -> Result<S::Ok, S::Error>
where
    T: Clone + Integer + Display,
    S: Serializer,
{
    s.serialize_str(&ratio_string(r))
}

pub fn serialize_ratios<T, S>(rs: &[Ratio<T>], s: S) -> Result<S::Ok, S::Error>
where
    T: Clone + Integer + Display,
    S: Serializer,
{
    s.collect_seq(rs.iter().map(ratio_string))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn always_has_denominator() {
        assert_eq!(ratio_string(&Ratio::new(4u64, 2)), "2/1");
        assert_eq!(ratio_string(&Ratio::new(3u64, 6)), "1/2");
    }
}
