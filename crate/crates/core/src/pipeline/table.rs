use super::{jordan_cuspidal_levis, CuspidalLeviRecord};
use crate::error::{Error, Result};
use crate::rootsys::{diagram_twist, recognize_type, CartanLabel, LeviType, RootDatum, Series};
use crate::semisimple::{component_group_orbits, isolated_classes, Characteristic, IsolatedRep, QClass, TwistedClassRep};

/// One concrete row of a classical table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub group: String,
    pub class: String,
    pub p_condition: String,
    pub levi: String,
    pub centralizer: String,
    pub conditions: String,
}

const SEP: &str = " | ";

impl TableRow {
    fn render(&self) -> String {
        [&self.group, &self.class, &self.p_condition, &self.levi, &self.centralizer, &self.conditions]
            .map(String::as_str)
            .join(SEP)
    }

    fn parse(line: &str) -> Result<Self> {
        let cols: Vec<&str> = line.split(SEP).collect();
        let [group, class, p, levi, cent, cond] = cols[..] else {
            return Err(Error::invalid(format!("expected 6 columns in table row {line:?}")));
        };
        Ok(TableRow {
            group: group.into(),
            class: class.into(),
            p_condition: p.into(),
            levi: levi.into(),
            centralizer: cent.into(),
            conditions: cond.into(),
        })
    }
}

/// All records for one twisted class `(s, w)`.
#[derive(Clone, Debug)]
pub struct TableBlock {
    pub group: CartanLabel,
    pub rep: IsolatedRep,
    pub class_rep: TwistedClassRep,
    /// Recognized type of `C°(s)` under `wφ`.
    pub class: LeviType,
    pub records: Vec<CuspidalLeviRecord>,
}

impl TableBlock {
    /// `(levi, centralizer)` pairs, sorted.
    pub fn pairs(&self) -> Vec<(String, String)> {
        let mut v: Vec<(String, String)> =
            self.records.iter().map(|r| (r.levi.to_string(), r.centralizer.to_string())).collect();
        v.sort();
        v
    }

    pub fn rows(&self) -> Vec<TableRow> {
        let p_condition = match self.rep.coefficient {
            1 => "-".to_string(),
            n => format!("p∤{n}"),
        };
        let w: Vec<String> = self.class_rep.w.word().iter().map(|i| (i + 1).to_string()).collect();
        self.records
            .iter()
            .map(|r| {
                let j: Vec<String> = r.j_nodes().iter().map(ToString::to_string).collect();
                TableRow {
                    group: self.group.to_string(),
                    class: self.class.to_string(),
                    p_condition: p_condition.clone(),
                    levi: r.levi.to_string(),
                    centralizer: r.centralizer.to_string(),
                    conditions: format!("node {} w=<{}> J=<{}>", self.rep.node, w.join(","), j.join(",")),
                }
            })
            .collect()
    }
}

/// Every twisted isolated class of the given group with its records.
pub fn classical_table(series: Series, rank: usize, twist: u8, p: Characteristic, q: QClass) -> Result<Vec<TableBlock>> {
    let group = CartanLabel::twisted(series, rank, twist);
    group.validate()?;
    let d = RootDatum::build(series, rank)?;
    let diagram = diagram_twist(series, rank, twist)?;
    let filter = (twist > 1).then_some(diagram.as_slice());
    let mut blocks = Vec::new();
    for rep in isolated_classes(&d, p, filter) {
        for class_rep in component_group_orbits(&d, &rep, &diagram, q)? {
            let class = recognize_type(&d, &rep.centralizer(&d), &class_rep.twisted)?;
            let records = jordan_cuspidal_levis(&d, &class_rep, false)?;
            blocks.push(TableBlock { group, rep: rep.clone(), class_rep, class, records });
        }
    }
    Ok(blocks)
}

/// Text form of a table, one row per line.
pub fn render_table(rows: &[TableRow]) -> String {
    rows.iter().map(|r| r.render() + "\n").collect()
}

/// Inverse of [`render_table`].
pub fn parse_table(text: &str) -> Result<Vec<TableRow>> {
    text.lines().map(TableRow::parse).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let blocks = classical_table(Series::B, 3, 1, Characteristic::Odd, QClass::MinusOne).unwrap();
        let rows: Vec<TableRow> = blocks.iter().flat_map(TableBlock::rows).collect();
        let text = render_table(&rows);
        assert_eq!(parse_table(&text).unwrap(), rows);
        assert_eq!(render_table(&parse_table(&text).unwrap()), text);
    }

    #[test]
    fn c2_in_characteristic_two() {
        let blocks = classical_table(Series::C, 2, 1, Characteristic::Prime(2), QClass::MinusOne).unwrap();
        assert_eq!(blocks.len(), 1);
        let pairs = blocks[0].pairs();
        assert_eq!(
            pairs,
            vec![("C2".to_string(), "C2".to_string()), ("Phi1^2".to_string(), "Phi1^2".to_string())]
        );
    }
}
