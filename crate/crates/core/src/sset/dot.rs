use std::fmt::Write;

use super::TruncSimplicialSet;

impl TruncSimplicialSet {
    /// The 1-skeleton in DOT: vertices, nondegenerate edges `d_1 -> d_0`,
    /// marked edges drawn bold.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        writeln!(out, "digraph {} {{", dot_id(name)).unwrap();
        for (v, label) in self.labels(0).iter().enumerate() {
            writeln!(out, "  v{v} [label={}];", dot_id(label)).unwrap();
        }
        if self.truncation() >= 1 {
            for e in self.nondegenerate(1) {
                let style = if self.is_marked(e) { ", style=bold" } else { "" };
                writeln!(out, "  v{} -> v{} [label={}{style}];", self.face(1, e, 1), self.face(1, e, 0), dot_id(self.label(1, e))).unwrap();
            }
        }
        out.push_str("}\n");
        out
    }
}

pub(crate) fn dot_id(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}
