//! The six-vertex, seven-edge worked example used throughout the tests.

use crate::cliquegraph::{parse_graph, ColoredGraph};

pub const EXAMPLE_GRAPH: &str = "\
# three colors of two vertices; {a,d,e} is the only multicolored triangle
colors 3
vertex a 1
vertex b 1
vertex c 2
vertex d 2
vertex e 3
vertex f 3
edge a c
edge a d
edge a e
edge b c
edge b e
edge c f
edge d e
";

pub fn example_graph() -> ColoredGraph {
    parse_graph(EXAMPLE_GRAPH).expect("fixture is valid")
}
