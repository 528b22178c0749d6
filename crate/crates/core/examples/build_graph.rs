//! Build a 2-graph from a JSON document, validate it, and print it back.

use kgraph::GraphDocument;

const FLIP: &str = r#"{
  "k": 2,
  "vertices": ["v"],
  "edges": [
    {"id": "b0", "color": 1, "range": "v", "source": "v"},
    {"id": "b1", "color": 1, "range": "v", "source": "v"},
    {"id": "r", "color": 2, "range": "v", "source": "v"}
  ],
  "squares": [
    {"pair": ["b0", "r"], "image": ["r", "b1"]},
    {"pair": ["b1", "r"], "image": ["r", "b0"]}
  ]
}"#;

fn main() -> kgraph::Result<()> {
    let doc = GraphDocument::from_json(FLIP)?;
    println!("validation: {}", doc.validate());

    let g = doc.build()?;
    println!("rank {}, {} vertices", g.rank(), g.vertex_count());

    // dropping a square leaves a two-colored path without a partner
    let mut broken = doc.clone();
    broken.squares.pop();
    println!("without the last square:\n{}", broken.validate());

    println!("{}", GraphDocument::from_graph(&g, Some("flip")).to_json());
    Ok(())
}
