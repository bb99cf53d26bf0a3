//! Loads a graph in the JSON file format, prints its skew form and faces,
//! and shows the edge-count validation error.

use shearq::fatgraph::FatGraph;

const PVI: &str = r#"{"edges":["X","Y","Z"],"vertices":[["X","Y","Z"]],
  "pending":{"X":{"param":"omega_0"},"Y":{"param":"omega_2"},"Z":{"param":"omega_1"}},
  "meta":{"g":0,"s":1,"r":3}}"#;

fn main() {
    let g = FatGraph::from_json(PVI).unwrap();
    println!("skew form rows: {:?}", g.skew_form().rows());
    for c in g.center_elements() {
        println!("face center: {:?}", c.to_vec());
    }
    let bad = PVI.replace("\"r\":3", "\"r\":4");
    println!("{}", FatGraph::from_json(&bad).unwrap_err());
}
