//! Reading and writing the JSON graph format, including general rational
//! vertex colors and the errors reported for malformed input.

use nevgraph::{root_function, ColoredGraph};

fn main() -> nevgraph::Result<()> {
    let src = r#"{
        "vertices": [
            {"id": 1, "color": "z"},
            {"id": 2, "color": {"num": "z*w - 2", "den": "w"}},
            {"id": 3, "color": "w"}
        ],
        "edges": [[1, 2], [2, 3]],
        "root": 1
    }"#;
    let g = ColoredGraph::from_json_str(src)?;
    println!("parsed:  {}", g.to_json_string());
    println!("f_G:     {}", root_function(&g)?);

    for bad in [
        r#"{"vertices":[{"id":1,"color":"q"}],"edges":[],"root":1}"#,
        r#"{"vertices":[{"id":1,"color":0.25}],"edges":[],"root":1}"#,
        r#"{"vertices":[{"id":1,"color":"z"}],"edges":[[1,1]],"root":1}"#,
    ] {
        println!("rejected: {}", ColoredGraph::from_json_str(bad).unwrap_err());
    }
    Ok(())
}
