//! Group specifications: `atom ("x" atom)*` with atoms `C(n)`, `D(n)`,
//! `S(n)`, `Q8` and `M(p,m)`.

use std::fmt;

use latdeg::group::is_prime;
use latdeg::Group;
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Atom {
    Cyclic(u64),
    Dihedral(u64),
    Symmetric(u64),
    Quaternion,
    Modular(u64, u64),
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Cyclic(n) => write!(f, "C({n})"),
            Atom::Dihedral(n) => write!(f, "D({n})"),
            Atom::Symmetric(n) => write!(f, "S({n})"),
            Atom::Quaternion => write!(f, "Q8"),
            Atom::Modular(p, m) => write!(f, "M({p},{m})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub factors: Vec<Atom>,
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" x ")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SpecError {
    /// `position` is a 1-based character column.
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("parameter out of domain: {0}")]
    Domain(String),
}

fn syntax(position: usize, message: impl Into<String>) -> SpecError {
    SpecError::Syntax {
        position: position + 1,
        message: message.into(),
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn new(text: &str) -> Parser {
        Parser { chars: text.chars().collect(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, want: char) -> Result<(), SpecError> {
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => Err(syntax(self.pos, format!("expected `{want}`, found `{c}`"))),
            None => Err(syntax(self.pos, format!("expected `{want}`, found end of input"))),
        }
    }

    fn int(&mut self) -> Result<u64, SpecError> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(syntax(start, "expected an integer"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits
            .parse()
            .map_err(|_| SpecError::Domain(format!("integer {digits} is too large")))
    }

    fn one_param(&mut self) -> Result<u64, SpecError> {
        self.expect('(')?;
        let n = self.int()?;
        self.expect(')')?;
        Ok(n)
    }

    fn atom(&mut self) -> Result<Atom, SpecError> {
        let at = {
            self.skip_ws();
            self.pos
        };
        let Some(c) = self.peek() else {
            return Err(syntax(at, "expected a group atom, found end of input"));
        };
        self.pos += 1;
        let atom = match c.to_ascii_uppercase() {
            'C' => Atom::Cyclic(self.one_param()?),
            'D' => Atom::Dihedral(self.one_param()?),
            'S' => Atom::Symmetric(self.one_param()?),
            'Q' => {
                let n = self.int()?;
                if n != 8 {
                    return Err(syntax(at, format!("unknown atom Q{n}; only Q8 is defined")));
                }
                Atom::Quaternion
            }
            'M' => {
                self.expect('(')?;
                let p = self.int()?;
                self.expect(',')?;
                let m = self.int()?;
                self.expect(')')?;
                Atom::Modular(p, m)
            }
            other => return Err(syntax(at, format!("unknown group family `{other}`"))),
        };
        check_domain(&atom)?;
        Ok(atom)
    }
}

fn check_domain(atom: &Atom) -> Result<(), SpecError> {
    match *atom {
        Atom::Cyclic(0) | Atom::Dihedral(0) | Atom::Symmetric(0) => {
            Err(SpecError::Domain(format!("{atom}: parameter must be at least 1")))
        }
        Atom::Modular(p, _) if !is_prime(p) => {
            Err(SpecError::Domain(format!("{atom}: {p} is not prime")))
        }
        Atom::Modular(_, m) if m < 3 => {
            Err(SpecError::Domain(format!("{atom}: m must be at least 3")))
        }
        _ => Ok(()),
    }
}

pub fn parse_group_spec(text: &str) -> Result<GroupSpec, SpecError> {
    let mut p = Parser::new(text);
    let mut factors = vec![p.atom()?];
    loop {
        match p.peek() {
            None => break,
            Some('x' | 'X') => {
                p.pos += 1;
                factors.push(p.atom()?);
            }
            Some(c) => return Err(syntax(p.pos, format!("expected `x` or end of input, found `{c}`"))),
        }
    }
    Ok(GroupSpec { factors })
}

/// A single spec, or a range `A(i)..A(j)` over a one-parameter family.
pub fn parse_spec_or_range(text: &str) -> Result<Vec<GroupSpec>, SpecError> {
    let Some((lo, hi)) = text.split_once("..") else {
        return Ok(vec![parse_group_spec(text)?]);
    };
    let (a, b) = (parse_group_spec(lo)?, parse_group_spec(hi)?);
    let position = lo.chars().count() + 1;
    let (Some(a), Some(b)) = (single(&a), single(&b)) else {
        return Err(syntax(position - 1, "range ends must be single atoms"));
    };
    let make: fn(u64) -> Atom = match (a, b) {
        (Atom::Cyclic(_), Atom::Cyclic(_)) => Atom::Cyclic,
        (Atom::Dihedral(_), Atom::Dihedral(_)) => Atom::Dihedral,
        (Atom::Symmetric(_), Atom::Symmetric(_)) => Atom::Symmetric,
        _ => return Err(syntax(position - 1, "range ends must be C, D or S atoms of the same family")),
    };
    let (i, j) = (param(a), param(b));
    if i > j {
        return Err(syntax(position - 1, format!("empty range {i}..{j}")));
    }
    Ok((i..=j).map(|n| GroupSpec { factors: vec![make(n)] }).collect())
}

fn single(s: &GroupSpec) -> Option<&Atom> {
    match &s.factors[..] {
        [a] => Some(a),
        _ => None,
    }
}

fn param(a: &Atom) -> u64 {
    match *a {
        Atom::Cyclic(n) | Atom::Dihedral(n) | Atom::Symmetric(n) => n,
        _ => unreachable!(),
    }
}

fn usize_param(n: u64) -> latdeg::Result<usize> {
    usize::try_from(n).map_err(|_| latdeg::Error::OrderCapExceeded {
        order: n as u128,
        cap: latdeg::group::order_cap(),
    })
}

impl Atom {
    pub fn build(&self) -> latdeg::Result<Group> {
        match *self {
            Atom::Cyclic(n) => Group::cyclic(usize_param(n)?),
            Atom::Dihedral(n) => Group::dihedral(usize_param(n)?),
            Atom::Symmetric(n) => Group::symmetric(usize_param(n)?),
            Atom::Quaternion => Group::quaternion(),
            Atom::Modular(p, m) => {
                let m = u32::try_from(m).map_err(|_| latdeg::Error::OrderCapExceeded {
                    order: u128::MAX,
                    cap: latdeg::group::order_cap(),
                })?;
                Group::modular(p, m)
            }
        }
    }
}

impl GroupSpec {
    /// Builds the product left to right; the order cap applies to each step.
    pub fn build(&self) -> latdeg::Result<Group> {
        let mut g = self.factors[0].build()?;
        for a in &self.factors[1..] {
            g = Group::direct_product(&g, &a.build()?)?;
        }
        Ok(g)
    }
}

/// Every family atom of order at most `max`: cyclic, dihedral, symmetric,
/// `Q8`, then modular groups, each family in increasing parameter order.
pub fn atoms_up_to(max: u64) -> Vec<GroupSpec> {
    let mut atoms: Vec<Atom> = (1..=max).map(Atom::Cyclic).collect();
    atoms.extend((1..=max / 2).map(Atom::Dihedral));
    let mut fact = 1u64;
    for n in 1..=20u64 {
        fact *= n;
        if fact > max {
            break;
        }
        atoms.push(Atom::Symmetric(n));
    }
    if max >= 8 {
        atoms.push(Atom::Quaternion);
    }
    for p in (2..=max).filter(|&p| is_prime(p)) {
        let mut m = 3u32;
        while p.checked_pow(m).is_some_and(|o| o <= max) {
            atoms.push(Atom::Modular(p, m as u64));
            m += 1;
        }
    }
    atoms.into_iter().map(|a| GroupSpec { factors: vec![a] }).collect()
}
