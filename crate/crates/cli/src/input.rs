//! Parsers for command-line values. Rationals are `p/q` strings throughout.

use alcove_charge::alcove::Alcove;
use alcove_charge::braid::BraidWord;
use alcove_charge::kmodel::{KClass, KModel};
use alcove_charge::root_system::RootSystem;
use alcove_charge::scalar::Scalar;
use alcove_charge::weight::Weight;
use alcove_charge::Q;

use crate::Failure;

fn strip(s: &str) -> &str {
    s.trim().trim_start_matches('[').trim_end_matches(']')
}

pub fn rational(s: &str) -> Result<Q, Failure> {
    Q::parse_exact(s.trim()).ok_or_else(|| Failure::Usage(format!("bad rational {s:?}")))
}

/// `1/2,-1/3` or `[1/2,-1/3]`.
pub fn weight(s: &str, rs: &RootSystem) -> Result<Weight<Q>, Failure> {
    let w = Weight::parse_list(strip(s))?;
    w.check_rank(rs.rank())?;
    Ok(w)
}

/// Floor vector, `0,-1,0` or `[0,-1,0]`.
pub fn alcove(s: &str) -> Result<Alcove, Failure> {
    Ok(Alcove::parse(strip(s))?)
}

/// JSON list of `[generator, sign]` pairs.
pub fn word(s: &str, rs: &RootSystem) -> Result<BraidWord, Failure> {
    let w: BraidWord = serde_json::from_str(s).map_err(|e| Failure::Usage(format!("bad word {s:?}: {e}")))?;
    w.validate(rs)?;
    Ok(w)
}

/// Integer coefficients in the model basis.
pub fn class(s: &str, model: &KModel) -> Result<KClass, Failure> {
    let coeffs = strip(s)
        .split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| Failure::Usage(format!("bad class {s:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    let c = KClass::new(coeffs);
    model.check_class(&c)?;
    Ok(c)
}

/// `LAMBDA:MU`.
pub fn waypoint(s: &str, rs: &RootSystem) -> Result<(Weight<Q>, Weight<Q>), Failure> {
    let (l, m) = s
        .split_once(':')
        .ok_or_else(|| Failure::Usage(format!("waypoint {s:?} should be LAMBDA:MU")))?;
    Ok((weight(l, rs)?, weight(m, rs)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_values() {
        let a2 = RootSystem::from_name("A2").unwrap();
        assert_eq!(weight("[1/2, -1]", &a2).unwrap().to_strings(), ["1/2", "-1"]);
        assert!(weight("1/2", &a2).is_err());
        assert_eq!(alcove("[0,-1,0]").unwrap().floors(), &[0, -1, 0]);
        assert_eq!(word("[[0,1],[2,-1]]", &a2).unwrap().len(), 2);
        assert!(word("[[3,1]]", &a2).is_err());
        let m = KModel::kleinian(&a2).unwrap();
        assert_eq!(class("1,0,-2", &m).unwrap().coeffs, vec![1, 0, -2]);
        assert!(class("1,0", &m).is_err());
        let (l, u) = waypoint("1/3,0:1,1", &a2).unwrap();
        assert_eq!((l.to_strings(), u.to_strings()), (vec!["1/3".to_string(), "0".into()], vec!["1".to_string(), "1".into()]));
        assert!(rational("x").is_err());
    }
}
