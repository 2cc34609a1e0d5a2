//! Expands the parametric classical table fixture at a concrete rank.

use cusplevi::rootsys::LeviType;
use std::collections::BTreeMap;

/// A type as a sorted list of component names and torus multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Ty {
    pub comps: Vec<String>,
    pub torus: BTreeMap<usize, usize>,
}

impl std::fmt::Display for Ty {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = self.comps.clone();
        parts.extend(self.torus.iter().map(|(k, p)| format!("Phi{k}^{p}")));
        if parts.is_empty() {
            parts.push("1".into());
        }
        write!(f, "{}", parts.join("."))
    }
}

impl Ty {
    pub fn of(t: &LeviType) -> Ty {
        let mut comps: Vec<String> = t.components.iter().map(ToString::to_string).collect();
        comps.sort();
        Ty { comps, torus: t.torus.factors.clone() }
    }
}

/// One class with its multiset of `(L, C_L(s))` pairs.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Block {
    pub class: Ty,
    pub pairs: Vec<(Ty, Ty)>,
}

fn label(twist: u8, series: char, rank: i64, power: usize) -> String {
    let mut s = String::new();
    if twist > 1 {
        s.push_str(&twist.to_string());
    }
    s.push(series);
    s.push_str(&rank.to_string());
    if power > 1 {
        s.push_str(&format!("(q^{power})"));
    }
    s
}

/// Low-rank coincidences: B1 = C1 = A1, D2 = A1A1, ²D2 = A1(q²), D3 = A3.
fn normalize(twist: u8, series: char, rank: i64, power: usize) -> Vec<String> {
    match (series, rank, twist) {
        (_, 0, _) => vec![],
        ('B' | 'C', 1, _) => vec![label(1, 'A', 1, power)],
        ('D', 1, _) => panic!("D1 does not occur in the fixture"),
        ('D', 2, 1) => vec![label(1, 'A', 1, power); 2],
        ('D', 2, _) => vec![label(1, 'A', 1, 2 * power)],
        ('D', 3, t) => vec![label(t, 'A', 3, power)],
        _ => vec![label(twist, series, rank, power)],
    }
}

struct Expr<'a> {
    s: &'a [u8],
    i: usize,
    vars: &'a BTreeMap<char, i64>,
}

impl Expr<'_> {
    fn eval(src: &str, vars: &BTreeMap<char, i64>) -> Option<i64> {
        let mut p = Expr { s: src.as_bytes(), i: 0, vars };
        let v = p.sum()?;
        (p.i == p.s.len()).then_some(v)
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.i).copied()
    }

    fn sum(&mut self) -> Option<i64> {
        let mut v = self.product()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.i += 1;
            let r = self.product()?;
            v = if c == b'+' { v + r } else { v - r };
        }
        Some(v)
    }

    fn product(&mut self) -> Option<i64> {
        let mut v = self.atom()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            self.i += 1;
            let r = self.atom()?;
            if c == b'*' {
                v *= r;
            } else {
                // Inexact division means the parameter choice is invalid.
                if r == 0 || v % r != 0 {
                    return None;
                }
                v /= r;
            }
        }
        Some(v)
    }

    fn atom(&mut self) -> Option<i64> {
        let c = self.peek()?;
        if c == b'(' {
            self.i += 1;
            let v = self.sum()?;
            assert_eq!(self.peek(), Some(b')'), "unbalanced parentheses");
            self.i += 1;
            return Some(v);
        }
        if c.is_ascii_digit() {
            let start = self.i;
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.i += 1;
            }
            return std::str::from_utf8(&self.s[start..self.i]).unwrap().parse().ok();
        }
        self.i += 1;
        Some(*self.vars.get(&(c as char)).unwrap_or_else(|| panic!("unknown variable {}", c as char)))
    }
}

/// Value of `[expr]` or a bare integer.
fn bracket(s: &str, vars: &BTreeMap<char, i64>) -> Option<i64> {
    match s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
        Some(inner) => Expr::eval(inner, vars),
        None => s.parse().ok(),
    }
}

/// Parses a factor list; `None` if some rank or exponent is negative or fractional.
fn parse_type(src: &str, vars: &BTreeMap<char, i64>) -> Option<Ty> {
    let mut comps = Vec::new();
    let mut torus = BTreeMap::new();
    for tok in src.split_whitespace() {
        let (body, mult) = match tok.rfind("^[") {
            Some(i) if !tok[..i].starts_with("Phi") => (&tok[..i], bracket(&tok[i + 1..], vars)?),
            _ => (tok, 1),
        };
        if let Some(rest) = body.strip_prefix("Phi") {
            let (k, p) = match rest.split_once('^') {
                Some((k, p)) => (k, bracket(p, vars)?),
                None => (rest, 1),
            };
            if p < 0 {
                return None;
            }
            if p > 0 {
                *torus.entry(k.parse::<usize>().unwrap()).or_insert(0) += p as usize;
            }
            continue;
        }
        let mut chars = body;
        let mut twist = 1u8;
        if chars.starts_with(|c: char| c.is_ascii_digit()) {
            twist = chars[..1].parse().unwrap();
            chars = &chars[1..];
        }
        let series = chars.chars().next().unwrap();
        chars = &chars[1..];
        let (rank_src, power) = match chars.find("(q^") {
            Some(i) => (&chars[..i], chars[i + 3..chars.len() - 1].parse::<usize>().unwrap()),
            None => (chars, 1),
        };
        let rank = bracket(rank_src, vars)?;
        if rank < 0 || mult < 0 {
            return None;
        }
        for _ in 0..mult {
            comps.extend(normalize(twist, series, rank, power));
        }
    }
    comps.sort();
    Some(Ty { comps, torus })
}

fn in_set(name: &str, x: i64) -> bool {
    if x < 0 {
        return false;
    }
    let tri = |x: i64| (0..=x).any(|k| k * (k + 1) / 2 == x);
    let sq = |x: i64, m: i64| x != 1 && (0..=x).any(|k| (2 * k + m) * (2 * k + m) == x);
    let scaled = |c: i64, f: &dyn Fn(i64) -> bool| x % c == 0 && f(x / c);
    match name {
        "T" => tri(x),
        "2T" => scaled(2, &tri),
        "4T" => scaled(4, &tri),
        "S0" => sq(x, 0),
        "S1" => sq(x, 1),
        "S2" => sq(x, 2),
        "2S0" => scaled(2, &|y| sq(y, 0)),
        "2S1" => scaled(2, &|y| sq(y, 1)),
        _ => panic!("unknown set {name}"),
    }
}

fn conditions_hold(conds: &str, vars: &BTreeMap<char, i64>) -> Option<bool> {
    for c in conds.split(',').map(str::trim).filter(|c| !c.is_empty()) {
        let ok = if let Some((lhs, set)) = c.split_once(" in ") {
            in_set(set.trim(), Expr::eval(lhs.trim(), vars)?)
        } else if let Some((a, b)) = c.split_once("<=") {
            Expr::eval(a.trim(), vars)? <= Expr::eval(b.trim(), vars)?
        } else {
            panic!("bad condition {c}")
        };
        if !ok {
            return Some(false);
        }
    }
    Some(true)
}

struct RawBlock {
    group: String,
    class: String,
    range: String,
    orbits: usize,
    merge: String,
    rows: Vec<[String; 3]>,
}

fn parse_fixture(text: &str) -> Vec<RawBlock> {
    let mut out: Vec<RawBlock> = Vec::new();
    for line in text.lines() {
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let cols: Vec<String> = line.split('|').map(|c| c.trim().to_string()).collect();
        if let Some(group) = cols[0].strip_prefix('@') {
            out.push(RawBlock {
                group: group.trim().into(),
                class: cols[1].clone(),
                range: cols[2].clone(),
                orbits: cols[4].parse().unwrap(),
                merge: cols[5].clone(),
                rows: vec![],
            });
        } else {
            out.last_mut().unwrap().rows.push([cols[0].clone(), cols[1].clone(), cols[2].clone()]);
        }
    }
    out
}

/// Records of one row at fixed `n, e`, ranging over `m, d`.
fn expand_row(row: &[String; 3], vars: &BTreeMap<char, i64>, n: i64) -> Vec<(Ty, Ty)> {
    let uses = |c: char| row.iter().any(|s| s.contains(c));
    let ms: Vec<i64> = if uses('m') { (0..=n).collect() } else { vec![0] };
    let ds: Vec<i64> = if uses('d') { (0..=n).collect() } else { vec![0] };
    let mut out = Vec::new();
    for &m in &ms {
        for &d in &ds {
            let mut v = vars.clone();
            v.insert('m', m);
            v.insert('d', d);
            if conditions_hold(&row[2], &v) != Some(true) {
                continue;
            }
            if let (Some(l), Some(c)) = (parse_type(&row[0], &v), parse_type(&row[1], &v)) {
                out.push((l, c));
            }
        }
    }
    out
}

/// Class, orbit count and pair multiplicities of one merged block.
type Slot = (Ty, usize, BTreeMap<(Ty, Ty), usize>);

/// Expected blocks of the group (`B`, `C`, `D`, `2D`) at rank `n`.
pub fn expected_blocks(fixture: &str, group: &str, n: i64) -> Vec<Block> {
    let mut merged: BTreeMap<String, Slot> = BTreeMap::new();
    let mut order = 0usize;
    for raw in parse_fixture(fixture).iter().filter(|b| b.group == group) {
        let es: Vec<Option<i64>> = if raw.range == "-" {
            vec![None]
        } else if raw.range == "even" {
            if n % 2 == 0 { vec![None] } else { vec![] }
        } else {
            let r = raw.range.strip_prefix("e=").unwrap();
            let (lo, hi) = r.split_once("..").unwrap();
            let nv = BTreeMap::from([('n', n)]);
            let lo = Expr::eval(lo, &nv).unwrap();
            // Upper bounds such as n/2 round down.
            let hi = match hi.split_once('/') {
                Some((a, b)) => Expr::eval(a, &nv).unwrap() / b.parse::<i64>().unwrap(),
                None => Expr::eval(hi, &nv).unwrap(),
            };
            (lo..=hi).map(Some).collect()
        };
        for e in es {
            let mut vars = BTreeMap::from([('n', n)]);
            if let Some(e) = e {
                vars.insert('e', e);
            }
            let class = parse_type(&raw.class, &vars).expect("class type");
            let mut counts: BTreeMap<(Ty, Ty), usize> = BTreeMap::new();
            for row in &raw.rows {
                for p in expand_row(row, &vars, n) {
                    *counts.entry(p).or_insert(0) += 1;
                }
            }
            let key = if raw.merge.is_empty() {
                order += 1;
                format!("#{order}")
            } else {
                let (tag, expr) = raw.merge.split_once(':').unwrap();
                format!("{tag}:{}", bracket(expr, &vars).unwrap())
            };
            let slot = merged.entry(key).or_insert_with(|| (class.clone(), raw.orbits, BTreeMap::new()));
            assert_eq!(slot.0, class, "merged blocks must describe the same class");
            for (p, c) in counts {
                let e = slot.2.entry(p).or_insert(0);
                *e = (*e).max(c);
            }
        }
    }
    let mut out = Vec::new();
    for (_, (class, orbits, counts)) in merged {
        let mut pairs: Vec<(Ty, Ty)> = counts.into_iter().flat_map(|(p, c)| std::iter::repeat_n(p, c)).collect();
        pairs.sort();
        for _ in 0..orbits {
            out.push(Block { class: class.clone(), pairs: pairs.clone() });
        }
    }
    out.sort();
    out
}
