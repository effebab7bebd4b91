use std::fs;

use spiderlc::{make_pineapple, make_spider, Error, Graph, Result, WeightMap};

/// What a graph argument names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Spider(Vec<usize>),
    Pineapple(usize, Vec<usize>),
    File(String),
}

impl Instance {
    /// `spider 3,2,2,1`, `pineapple 6 3,2,2,1`, or a path to a JSON or
    /// edge-list file.
    pub fn parse(words: &[String]) -> Result<Instance> {
        let words: Vec<&str> = words.iter().flat_map(|w| w.split_whitespace()).collect();
        match words.as_slice() {
            ["spider"] => Ok(Instance::Spider(Vec::new())),
            ["spider", lambda] => Ok(Instance::Spider(parse_list(lambda)?)),
            ["pineapple", n] => Ok(Instance::Pineapple(parse_usize(n)?, Vec::new())),
            ["pineapple", n, lambda] => {
                Ok(Instance::Pineapple(parse_usize(n)?, parse_list(lambda)?))
            }
            [path] => Ok(Instance::File(path.to_string())),
            _ => Err(Error::Parse(format!(
                "cannot read graph spec {:?}",
                words.join(" ")
            ))),
        }
    }

    pub fn graph(&self) -> Result<Graph> {
        match self {
            Instance::Spider(lambda) => make_spider(lambda),
            Instance::Pineapple(n, lambda) => make_pineapple(*n, lambda),
            Instance::File(path) => {
                let text =
                    fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
                parse_graph_text(&text)
            }
        }
    }
}

/// JSON when the text starts with `{`, an edge list otherwise.
pub fn parse_graph_text(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with('{') {
        Graph::from_json(text)
    } else {
        Graph::from_edge_list(text)
    }
}

pub fn parse_usize(s: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("expected a nonnegative integer, got {s:?}")))
}

/// `3,2,2,1`; the empty string is the empty list.
pub fn parse_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(parse_usize)
        .collect()
}

pub fn parse_weights(s: &str, g: &Graph) -> Result<WeightMap> {
    let alpha = WeightMap(parse_list(s)?);
    alpha.check_domain(g)?;
    Ok(alpha)
}
