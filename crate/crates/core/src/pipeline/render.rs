use super::CuspidalLeviRecord;
use crate::rootsys::WeylElement;
use serde::Serialize;

/// JSON shape of one record.
#[derive(Clone, Debug, Serialize)]
pub struct RecordJson {
    pub levi: String,
    pub centralizer: String,
    pub torus: String,
    pub centralizer_torus: String,
    pub j_nodes: Vec<usize>,
    pub cusp_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub standard_subset: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub standard_z_word: Option<Vec<usize>>,
}

impl From<&CuspidalLeviRecord> for RecordJson {
    fn from(r: &CuspidalLeviRecord) -> Self {
        RecordJson {
            levi: r.levi.to_string(),
            centralizer: r.centralizer.to_string(),
            torus: r.levi.torus.compact(),
            centralizer_torus: r.centralizer.torus.compact(),
            j_nodes: r.j_nodes(),
            cusp_count: r.cusp_count,
            standard_subset: r.standard_form.as_ref().map(|f| f.subset.iter().map(|i| i + 1).collect()),
            standard_z_word: r.standard_form.as_ref().map(|f| f.z.word().iter().map(|i| i + 1).collect()),
        }
    }
}

#[derive(Serialize)]
struct Envelope<'a> {
    schema: u32,
    group: &'a str,
    s: &'a str,
    w_word: Vec<usize>,
    records: Vec<RecordJson>,
}

/// Newline-terminated JSON document for a record list; word letters are 1-based.
pub fn render_records_json(group: &str, s: &str, w: &WeylElement, records: &[CuspidalLeviRecord]) -> String {
    let env = Envelope {
        schema: 1,
        group,
        s,
        w_word: w.word().iter().map(|i| i + 1).collect(),
        records: records.iter().map(RecordJson::from).collect(),
    };
    let mut out = serde_json::to_string(&env).expect("records serialize");
    out.push('\n');
    out
}

/// One line per record: `levi | centralizer | J | count`.
pub fn render_records_text(records: &[CuspidalLeviRecord]) -> String {
    let mut out = String::new();
    for r in records {
        let nodes: Vec<String> = r.j_nodes().iter().map(ToString::to_string).collect();
        out.push_str(&format!("{} | {} | J=<{}> | {}", r.levi, r.centralizer, nodes.join(","), r.cusp_count));
        if let Some(f) = &r.standard_form {
            let i: Vec<String> = f.subset.iter().map(|i| (i + 1).to_string()).collect();
            let z: Vec<String> = f.z.word().iter().map(|i| (i + 1).to_string()).collect();
            out.push_str(&format!(" | I=<{}> z=<{}>", i.join(","), z.join(",")));
        }
        out.push('\n');
    }
    out
}
