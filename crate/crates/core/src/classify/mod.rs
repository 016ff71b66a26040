//! Classification of semigroups with `0 <= b <= 2(r - 1)`, and the explicit
//! lists for `b = 1` and `b = 2`.

mod families;

use std::fmt;
use std::str::FromStr;

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;
use thiserror::Error;

use crate::check::{Check, Checks};
use crate::decomp::decompose;
use crate::report::Profile;
use crate::semigroup::NumericalSemigroup;
use crate::typeseq::{b_by_definition, type_sequence, TypeSequence};
use families::{recognize, stated_type_sequence, Colon, Shape};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("unknown family id `{0}`")]
    UnknownFamily(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

/// A parametric or sporadic value-set family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `r = 1`.
    Gorenstein,
    /// `{0, e, ..., pe, (p + 1)e ->}`.
    MaxLength,
    /// `{0, e, ..., pe, c ->}` with `pe + 2 < c < (p + 1)e`.
    SkeletonOnly,
    /// `{0, e, ..., pe, pe + 2 ->}`, `e > 2`.
    SkeletonPlusTwo,
    /// `{0, e, 2e - 1, 2e, 3e - 1 ->}`, `e > 3`.
    TwoEMinusOne,
    /// `{0, e, y, 2e ->}`, `2y < 3e`, `e > 3`.
    SingleBelowTwoE,
    MidOne,
    MidTwo,
    MidThree,
    Twice1a,
    Twice1b,
    Twice1c,
    Twice2a,
    Twice2b,
    Twice2c,
    Twice2d,
    Twice3a,
    Twice3b,
    /// `{0, 4, 7, 8, 11 ->}`.
    B1Sporadic1,
    /// `{0, 4, 5, 8 ->}`.
    B1Sporadic2,
    /// `{0, e, ..., pe, (p + 1)e - 1 ->}`, `e >= 3`.
    B1Arith,
    /// One of the nine listed `b = 2` value sets, numbered from 1.
    B2Sporadic(u8),
    /// `{0, e, ..., pe, (p + 1)e - 2 ->}`, `e >= 4`.
    B2Arith,
}

const B2_IDS: [&str; 9] = [
    "cor3.8/1", "cor3.8/2", "cor3.8/3", "cor3.8/4", "cor3.8/5", "cor3.8/6", "cor3.8/7", "cor3.8/8", "cor3.8/9",
];

impl Family {
    /// Theorem families in canonical order.
    pub const THEOREM_FAMILIES: [Family; 18] = [
        Family::Gorenstein,
        Family::MaxLength,
        Family::SkeletonOnly,
        Family::SkeletonPlusTwo,
        Family::TwoEMinusOne,
        Family::SingleBelowTwoE,
        Family::MidOne,
        Family::MidTwo,
        Family::MidThree,
        Family::Twice1a,
        Family::Twice1b,
        Family::Twice1c,
        Family::Twice2a,
        Family::Twice2b,
        Family::Twice2c,
        Family::Twice2d,
        Family::Twice3a,
        Family::Twice3b,
    ];

    pub fn b_one() -> Vec<Family> {
        vec![Family::B1Sporadic1, Family::B1Sporadic2, Family::B1Arith]
    }

    pub fn b_two() -> Vec<Family> {
        let mut v: Vec<Family> = (1..=9).map(Family::B2Sporadic).collect();
        v.push(Family::B2Arith);
        v
    }

    pub fn all() -> Vec<Family> {
        let mut v = Self::THEOREM_FAMILIES.to_vec();
        v.extend(Self::b_one());
        v.extend(Self::b_two());
        v
    }

    pub fn as_str(&self) -> &'static str {
        use Family::*;
        match self {
            Gorenstein => "thm3.1/gorenstein",
            MaxLength => "thm3.1/max-length",
            SkeletonOnly => "thm3.2",
            SkeletonPlusTwo => "thm3.3/1",
            TwoEMinusOne => "thm3.3/2f-arith",
            SingleBelowTwoE => "thm3.3/2f-y",
            MidOne => "thm3.4/1",
            MidTwo => "thm3.4/2",
            MidThree => "thm3.4/3",
            Twice1a => "thm3.5/1a",
            Twice1b => "thm3.5/1b",
            Twice1c => "thm3.5/1c",
            Twice2a => "thm3.5/2a",
            Twice2b => "thm3.5/2b",
            Twice2c => "thm3.5/2c",
            Twice2d => "thm3.5/2d",
            Twice3a => "thm3.5/3a",
            Twice3b => "thm3.5/3b",
            B1Sporadic1 => "cor3.7/1",
            B1Sporadic2 => "cor3.7/2",
            B1Arith => "cor3.7/arith",
            B2Sporadic(i) => B2_IDS[*i as usize - 1],
            B2Arith => "cor3.8/arith",
        }
    }

    /// Theorem id, the part of the family id before any `/`.
    pub fn theorem(&self) -> &'static str {
        self.as_str().split('/').next().unwrap_or("")
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for Family {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = ClassifyError;

    /// Accepts the canonical id and loose spellings such as `Thm3.5_1a`.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let squash = |t: &str| t.trim().to_lowercase().replace('_', "/").replace('-', "");
        let wanted = squash(text);
        Family::all()
            .into_iter()
            .find(|f| squash(f.as_str()) == wanted)
            .ok_or_else(|| ClassifyError::UnknownFamily(text.to_string()))
    }
}

/// A family that `S` belongs to, with the parameters it was matched on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyMatch {
    pub family: Family,
    pub e: u32,
    pub c: u32,
    pub p: u32,
    pub h: u32,
    /// Tower starts.
    pub ys: Vec<u32>,
    /// Which sub-case of a split description matched.
    pub branch: Option<&'static str>,
}

impl FamilyMatch {
    fn write_fields<M: SerializeMap>(&self, map: &mut M) -> Result<(), M::Error> {
        map.serialize_entry("label", self.family.as_str())?;
        map.serialize_entry("e", &self.e)?;
        map.serialize_entry("c", &self.c)?;
        map.serialize_entry("p", &self.p)?;
        map.serialize_entry("h", &self.h)?;
        map.serialize_entry("ys", &self.ys)?;
        if let Some(b) = self.branch {
            map.serialize_entry("branch", b)?;
        }
        Ok(())
    }
}

impl Serialize for FamilyMatch {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let mut map = ser.serialize_map(None)?;
        self.write_fields(&mut map)?;
        map.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassificationLabel {
    Family(FamilyMatch),
    /// `q` is the least integer with `b <= q(r - 1)`.
    Unclassified { b: i64, r: u32, q: i64 },
}

impl ClassificationLabel {
    pub fn id(&self) -> &'static str {
        match self {
            ClassificationLabel::Family(m) => m.family.as_str(),
            ClassificationLabel::Unclassified { .. } => "unclassified",
        }
    }

    pub fn is_classified(&self) -> bool {
        matches!(self, ClassificationLabel::Family(_))
    }
}

impl Serialize for ClassificationLabel {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let mut map = ser.serialize_map(None)?;
        match self {
            ClassificationLabel::Family(m) => m.write_fields(&mut map)?,
            ClassificationLabel::Unclassified { b, r, q } => {
                map.serialize_entry("label", "unclassified")?;
                map.serialize_entry("b", b)?;
                map.serialize_entry("r", r)?;
                map.serialize_entry("q", q)?;
            }
        }
        map.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub label: ClassificationLabel,
    pub matches: Vec<FamilyMatch>,
    pub b: i64,
    pub r: u32,
}

impl Classification {
    pub fn has(&self, f: Family) -> bool {
        self.matches.iter().any(|m| m.family == f)
    }

    /// `b <= 2(r - 1)`.
    pub fn in_range(&self) -> bool {
        self.b <= 2 * (self.r as i64 - 1)
    }
}

/// Least `q` with `b <= q(r - 1)`; 0 when `r = 1`.
pub fn q_of(b: i64, r: u32) -> i64 {
    let r1 = r as i64 - 1;
    if r1 <= 0 {
        0
    } else {
        (b + r1 - 1).div_euclid(r1)
    }
}

fn matches_among(s: &NumericalSemigroup, families: &[Family]) -> Vec<FamilyMatch> {
    let sh = Shape::new(s);
    let col = Colon::new(s);
    let mut ys = None;
    families
        .iter()
        .filter_map(|&f| {
            let branch = recognize(f, &sh, &col)?;
            Some(FamilyMatch {
                family: f,
                e: sh.e,
                c: sh.c,
                p: sh.p,
                h: sh.h,
                ys: ys.get_or_insert_with(|| decompose(s).ys).clone(),
                branch,
            })
        })
        .collect()
}

/// Every theorem family `S` fits, and the first of them in theorem order as
/// the label; `Unclassified` with `q` when none fits.
pub fn classify(s: &NumericalSemigroup) -> Classification {
    let matches = matches_among(s, &Family::THEOREM_FAMILIES);
    let (b, r) = (b_by_definition(s), s.type_r());
    let label = match matches.first() {
        Some(m) => ClassificationLabel::Family(m.clone()),
        None => ClassificationLabel::Unclassified { b, r, q: q_of(b, r) },
    };
    Classification { label, matches, b, r }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorollaryMatch {
    pub family: FamilyMatch,
    pub stated_ts: TypeSequence,
    /// Whether the stated type sequence equals the computed one.
    pub verified: bool,
}

/// For `b = 1` or `b = 2`, the listed family `S` belongs to.
pub fn classify_b1_b2(s: &NumericalSemigroup) -> Option<CorollaryMatch> {
    let list = match b_by_definition(s) {
        1 => Family::b_one(),
        2 => Family::b_two(),
        _ => return None,
    };
    let m = matches_among(s, &list).into_iter().next()?;
    let stated = stated_type_sequence(m.family, &Shape::new(s)).expect("listed family");
    let verified = type_sequence(s).entries() == stated;
    Some(CorollaryMatch {
        family: m,
        stated_ts: TypeSequence::new(stated),
        verified,
    })
}

/// Every instance of `family` with `e <= e_max` and `c <= c_max`, sorted.
pub fn generate_family(family_id: &str, e_max: u32, c_max: u32) -> Result<Vec<NumericalSemigroup>, ClassifyError> {
    let f: Family = family_id.parse()?;
    Ok(instances(f, e_max, c_max))
}

pub fn instances(f: Family, e_max: u32, c_max: u32) -> Vec<NumericalSemigroup> {
    families::generate(f, e_max, c_max)
}

/// Conductor choice for the `r = e - 1` tower family with `p = 2q`,
/// `l = q - 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TowerVariant {
    /// `c = pe + p`, giving `b = q(r - 1)`.
    Exact,
    /// A conductor above `pe + p`, giving `(q - 1)(r - 1) < b < q(r - 1)`.
    Above(u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerExample {
    pub semigroup: NumericalSemigroup,
    pub r: u32,
    pub b: i64,
}

/// `{0, e, ..., pe, c ->} ∪ {y, y + e, ..., y + le}` with `p = 2q`,
/// `l = q - 2`, `e > p`, for `q >= 3`. The claimed `r` and range of `b` are
/// checked before returning.
pub fn example36_family(q: u32, e: u32, y: u32, variant: TowerVariant) -> Result<TowerExample, ClassifyError> {
    let bad = |m: String| Err(ClassifyError::InvalidParameters(m));
    if q < 3 {
        return bad(format!("q = {q} must be at least 3"));
    }
    let (p, l) = (2 * q, q - 2);
    if e <= p {
        return bad(format!("e = {e} must exceed p = {p}"));
    }
    let c = match variant {
        TowerVariant::Exact => p * e + p,
        TowerVariant::Above(c) if c > p * e + p && c <= (p + 1) * e => c,
        TowerVariant::Above(c) => return bad(format!("c = {c} must lie in ({}, {}]", p * e + p, (p + 1) * e)),
    };
    if y % e == 0 || y + l * e >= c || c > y + (l + 1) * e {
        return bad(format!("y = {y} does not give a tower of length {} below c = {c}", l + 1));
    }
    let mut elems: Vec<u32> = (0..=p).map(|j| j * e).collect();
    elems.extend((0..=l).map(|j| y + j * e));
    elems.sort_unstable();
    let s = NumericalSemigroup::from_elements_below(&elems, c)
        .map_err(|err| ClassifyError::InvalidParameters(err.to_string()))?;
    let r = type_sequence(&s).r();
    let b = type_sequence(&s).deficiency();
    let (q, r1) = (q as i64, r as i64 - 1);
    let holds = r == e - 1
        && match variant {
            TowerVariant::Exact => b == q * r1,
            TowerVariant::Above(_) => (q - 1) * r1 < b && b < q * r1,
        };
    if !holds {
        return bad(format!("claimed r and b fail on {s:?}: r = {r}, b = {b}"));
    }
    Ok(TowerExample { semigroup: s, r, b })
}

/// Per-semigroup checks for every classification statement.
pub fn classification_suite(s: &NumericalSemigroup) -> Vec<Check> {
    theorem_checks(&Profile::new(s.clone()))
}

pub(crate) fn theorem_checks(pr: &Profile) -> Vec<Check> {
    let s = &pr.semigroup;
    let rep = &pr.report;
    let cls = classify(s);
    let ts = pr.ts.entries();
    let n = ts.len();
    let (e, c, r, k, b) = (rep.e as i64, rep.c as i64, rep.r as i64, rep.k as i64, rep.b);
    let pp = (c - 1) / e;
    let last = ts[n - 1] as i64;
    let head_all = |v: i64| ts[..n - 1].iter().all(|&x| x as i64 == v);
    let any = |fs: &[Family]| fs.iter().any(|&f| cls.has(f));
    let mut ck = Checks::default();

    // b = 0
    let pat = any(&[Family::Gorenstein, Family::MaxLength]);
    let constant = ts.iter().all(|&x| x as i64 == r);
    ck.iff("thm3.1/1-2", b == 0, pat);
    ck.iff("thm3.1/1-3", b == 0, constant);
    ck.imp("thm3.1/gorenstein-ts", cls.has(Family::Gorenstein), ts.iter().all(|&x| x == 1));

    // 0 < b < r - 1
    let in32 = 0 < b && b < r - 1;
    let ts32 = head_all(e - 1) && last > 1 && last < e - 1;
    ck.iff("thm3.2/1-2", in32, cls.has(Family::SkeletonOnly));
    ck.iff("thm3.2/1-3", in32, ts32);
    if in32 {
        ck.claim("thm3.2/b<e-2", b < e - 2);
        ck.claim("thm3.2/r=e-1", r == e - 1);
        ck.claim("thm3.2/rn=e-1-b", last == e - 1 - b);
        ck.claim("thm3.2/k=1", k == 1);
        ck.claim("thm3.2/c=(p+1)e-b", c == (pp + 1) * e - b);
    }

    // b = r - 1
    let eq33 = b == r - 1 && b > 0;
    ck.imp("thm3.3/r", eq33, r == e - 1 || r == e - 2);
    let a1 = eq33 && r == e - 1;
    ck.iff("thm3.3/1:a-b", a1, cls.has(Family::SkeletonPlusTwo));
    ck.iff("thm3.3/1:a-c", a1, e > 2 && n >= 2 && head_all(e - 1) && last == 1);
    ck.iff("thm3.3/1:a-d", a1, eq33 && k == 1);
    let a2 = eq33 && r == e - 2;
    let g = e > 3
        && (ts.iter().map(|&x| x as i64).eq([e - 2, e - 2, 1, e - 2])
            || (n == 3 && ts[0] as i64 == e - 2 && (ts[1] + ts[2]) as i64 == e - 1));
    ck.iff("thm3.3/2:e-f", a2, any(&[Family::TwoEMinusOne, Family::SingleBelowTwoE]));
    ck.iff("thm3.3/2:e-g", a2, g);
    ck.iff("thm3.3/2:e-h", a2, eq33 && k == 2);

    // r - 1 < b < 2(r - 1)
    let in34 = r - 1 < b && b < 2 * (r - 1);
    ck.iff("thm3.4/iff", in34, any(&[Family::MidOne, Family::MidTwo, Family::MidThree]));
    ck.imp("thm3.4/k=2", in34, k == 2);
    ck.imp("thm3.4/1:r=e-1", cls.has(Family::MidOne), r == e - 1);
    ck.imp("thm3.4/1:b>=r+1", cls.has(Family::MidOne), b >= r + 1);
    ck.imp("thm3.4/2:r=e-2", cls.has(Family::MidTwo), r == e - 2);
    ck.imp("thm3.4/3:r=e-2", cls.has(Family::MidThree), r == e - 2);

    // b = 2(r - 1) > 0
    use Family::*;
    let in35 = b == 2 * (r - 1) && b > 0;
    let case1 = any(&[Twice1a, Twice1b, Twice1c]);
    let case2 = any(&[Twice2a, Twice2b, Twice2c, Twice2d]);
    let case3 = any(&[Twice3a, Twice3b]);
    ck.iff("thm3.5/iff", in35, case1 || case2 || case3);
    ck.imp("thm3.5/1:r,k", case1, r == e - 1 && k == 2);
    ck.imp("thm3.5/2:r,k", case2, r == e - 2 && k == 2);
    ck.imp("thm3.5/3:r,k", case3, r == e - 3 && k == 3);

    for (thm, bv, list) in [("cor3.7", 1, Family::b_one()), ("cor3.8", 2, Family::b_two())] {
        let found = matches_among(s, &list);
        ck.iff(&format!("{thm}/iff"), b == bv, !found.is_empty());
        let sh = Shape::new(s);
        for m in &found {
            let stated = stated_type_sequence(m.family, &sh).expect("listed family");
            ck.claim(&format!("{thm}/ts:{}", m.family), ts == stated.as_slice());
        }
        if b == bv {
            let cor = classify_b1_b2(s);
            ck.claim(&format!("{thm}/agrees-with-classify"), cls.label.is_classified() && cor.is_some_and(|c| c.verified));
        }
    }
    ck.into_vec()
}
