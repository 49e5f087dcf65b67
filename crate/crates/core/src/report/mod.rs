//! Product tables, canonical JSON documents and text renderers.

mod document;
mod render;
mod tables;

pub use document::{
    canonical_json, cmd_alt2, cmd_diagrams, cmd_dim, cmd_euler, cmd_hodge, cmd_nilfilt, cmd_stratum, cmd_sym2, cmd_table1,
    cmd_table2, cmd_tensor, diagram_doc, parse_rep, rep_doc, DiagramDoc, DiagramsDoc, RepDoc, RepTerm, Report,
    ReportDocument, RowDoc, TermDoc,
};
pub use render::render_table;
pub use tables::{
    column_to_graded, delta_pm_hyper, generic_theta_hyper, generic_theta_packages, package_entries, table1, table2,
    PackageEntry, TableColumn, TableDoc, GENERIC_GROUP, TABLE2_LABELS,
};
