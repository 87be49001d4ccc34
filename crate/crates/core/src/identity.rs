//! Identity schemes for the five varieties and their instantiation.

use alloc::vec;
use alloc::vec::Vec;

use crate::coords::{decide_equal, Context};
use crate::error::Result;
use crate::term::{BiTerm, Variety};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Scheme {
    /// `m(x)x* = x` and `m(xy*) = m(x)`.
    A1n,
    /// `m(xy⁺) = m(x)`: the maximum ignores a trailing projection.
    M2,
    /// `m(x)m(y) = m(x)⁺m(xy)`.
    LeftStrong,
    /// `m(x)m(y) = m(xy)m(y)*`.
    RightStrong,
    /// `m(x)m(y) = m(xy)`.
    Perfect,
    /// The birestriction monoid axioms.
    BirestrictionAxioms,
}

impl Scheme {
    pub const ALL: [Scheme; 6] =
        [Scheme::A1n, Scheme::M2, Scheme::LeftStrong, Scheme::RightStrong, Scheme::Perfect, Scheme::BirestrictionAxioms];

    pub fn name(self) -> &'static str {
        match self {
            Scheme::A1n => "a1n",
            Scheme::M2 => "m2",
            Scheme::LeftStrong => "left_s",
            Scheme::RightStrong => "right_s",
            Scheme::Perfect => "perf",
            Scheme::BirestrictionAxioms => "birestriction-axioms",
        }
    }

    pub fn from_name(name: &str) -> Option<Scheme> {
        Scheme::ALL.into_iter().find(|s| s.name().eq_ignore_ascii_case(name))
    }

    /// Number of variables the scheme needs in a substitution.
    pub fn arity(self) -> usize {
        match self {
            Scheme::A1n | Scheme::M2 | Scheme::LeftStrong | Scheme::RightStrong | Scheme::Perfect => 2,
            Scheme::BirestrictionAxioms => 3,
        }
    }

    /// Whether the scheme is valid in the free object of `variety`.
    pub fn holds_in(self, variety: Variety) -> bool {
        match self {
            Scheme::A1n | Scheme::M2 | Scheme::BirestrictionAxioms => true,
            Scheme::LeftStrong => variety.is_left_strong(),
            Scheme::RightStrong => variety.is_right_strong(),
            Scheme::Perfect => variety == Variety::P,
        }
    }

    /// Both sides of every identity in the scheme, instantiated.
    ///
    /// Panics if `sub` has fewer than [`Scheme::arity`] terms.
    pub fn instances(self, sub: &[BiTerm]) -> Vec<(BiTerm, BiTerm)> {
        assert!(sub.len() >= self.arity(), "substitution must cover {} variables", self.arity());
        let x = || sub[0].clone();
        let y = || sub[1].clone();
        let mx = || BiTerm::max(x());
        let my = || BiTerm::max(y());
        let mxy = || BiTerm::max(BiTerm::mul(x(), y()));
        let m = BiTerm::mul;
        let st = BiTerm::star;
        let pl = BiTerm::plus;
        match self {
            Scheme::A1n => vec![(m(mx(), st(x())), x()), (BiTerm::max(m(x(), st(y()))), mx())],
            Scheme::M2 => vec![(BiTerm::max(m(x(), pl(y()))), mx())],
            Scheme::LeftStrong => vec![(m(mx(), my()), m(pl(mx()), mxy()))],
            Scheme::RightStrong => vec![(m(mx(), my()), m(mxy(), st(my())))],
            Scheme::Perfect => vec![(m(mx(), my()), mxy())],
            Scheme::BirestrictionAxioms => {
                let z = || sub[2].clone();
                vec![
                    (m(x(), st(x())), x()),
                    (m(st(x()), st(y())), m(st(y()), st(x()))),
                    (st(m(x(), st(y()))), m(st(x()), st(y()))),
                    (m(st(x()), y()), m(y(), st(m(x(), y())))),
                    (m(pl(x()), x()), x()),
                    (m(pl(x()), pl(y())), m(pl(y()), pl(x()))),
                    (pl(m(pl(x()), y())), m(pl(x()), pl(y()))),
                    (m(x(), pl(y())), m(pl(m(x(), y())), x())),
                    (st(pl(x())), pl(x())),
                    (pl(st(x())), st(x())),
                    (m(m(x(), y()), z()), m(x(), m(y(), z()))),
                    (m(BiTerm::One, x()), x()),
                    (m(x(), BiTerm::One), x()),
                ]
            }
        }
    }
}

/// Instantiates both sides of every identity in `scheme` and decides them.
pub fn check_identity(scheme: Scheme, sub: &[BiTerm], ctx: &Context) -> Result<bool> {
    for (l, r) in scheme.instances(sub) {
        if !decide_equal(&l, &r, ctx)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_term;
    use crate::word::Alphabet;

    fn sub(texts: &[&str]) -> Vec<BiTerm> {
        let a = Alphabet::parse("x,y").unwrap();
        texts.iter().map(|s| parse_term(s, &a).unwrap()).collect()
    }

    #[test]
    fn names_round_trip() {
        for s in Scheme::ALL {
            assert_eq!(Scheme::from_name(s.name()), Some(s));
        }
    }

    #[test]
    fn generic_schemes_hold_everywhere() {
        let s = sub(&["x y^*", "y x", "x^+"]);
        for v in Variety::ALL {
            let ctx = Context::new(v);
            for scheme in [Scheme::A1n, Scheme::M2, Scheme::BirestrictionAxioms] {
                assert!(check_identity(scheme, &s, &ctx).unwrap(), "{} in {v}", scheme.name());
            }
        }
    }

    #[test]
    fn strong_schemes_separate_varieties() {
        let s = sub(&["x", "y", "x y"]);
        let holds = |sc, v| check_identity(sc, &s, &Context::new(v)).unwrap();
        assert!(holds(Scheme::LeftStrong, Variety::Ls));
        assert!(holds(Scheme::LeftStrong, Variety::S));
        assert!(!holds(Scheme::LeftStrong, Variety::Free));
        assert!(!holds(Scheme::LeftStrong, Variety::Rs));
        assert!(holds(Scheme::RightStrong, Variety::Rs));
        assert!(!holds(Scheme::RightStrong, Variety::Free));
        assert!(holds(Scheme::Perfect, Variety::P));
        assert!(!holds(Scheme::Perfect, Variety::S));
        for v in Variety::ALL {
            for sc in Scheme::ALL {
                if sc.holds_in(v) {
                    assert!(holds(sc, v), "{} in {v}", sc.name());
                }
            }
        }
    }
}
