//! One entry point for computing `chi_td`, either through the class-specific
//! solvers or the exact search.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::classes::{
    chi_td_chain, chi_td_cograph, chi_td_split_with, recognize_chain, recognize_cograph, recognize_split,
};
use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::exact::{chi_td_exact_with, Budget};
use crate::graph::Graph;
use crate::tree::classify_tree_unchecked;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Class solver when a recognizer accepts, exact search otherwise.
    Auto,
    Exact,
    /// Class solver only; fails on graphs outside every supported class.
    Class,
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Method::Auto),
            "exact" => Ok(Method::Exact),
            "class" => Ok(Method::Class),
            _ => Err(Error::Precondition(format!("unknown method {s:?}"))),
        }
    }
}

/// Class whose solver produced the value; `General` means none applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SolvedClass {
    Cograph,
    Chain,
    Split,
    Tree,
    General,
}

impl fmt::Display for SolvedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SolvedClass::Cograph => "cograph",
            SolvedClass::Chain => "chain",
            SolvedClass::Split => "split",
            SolvedClass::Tree => "tree",
            SolvedClass::General => "general",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Solution {
    pub chi_td: usize,
    /// Class the graph was recognized as, whichever method computed the value.
    pub class: SolvedClass,
    pub method: &'static str,
    pub coloring: Coloring,
}

/// First class accepting `g`, trying cograph, chain, split, tree in turn.
pub fn detect_class(g: &Graph) -> SolvedClass {
    if g.is_isolate_free() && recognize_cograph(g).is_ok() {
        SolvedClass::Cograph
    } else if recognize_chain(g).is_ok() {
        SolvedClass::Chain
    } else if g.n() >= 2 && g.is_connected() && recognize_split(g).is_ok() {
        SolvedClass::Split
    } else if g.n() >= 2 && g.is_tree() {
        SolvedClass::Tree
    } else {
        SolvedClass::General
    }
}

pub fn solve(g: &Graph, method: Method, budget: Budget) -> Result<Solution> {
    g.require_isolate_free()?;
    let class = detect_class(g);
    if method == Method::Exact || (method == Method::Auto && class == SolvedClass::General) {
        let r = chi_td_exact_with(g, budget)?;
        return Ok(Solution {
            chi_td: r.value,
            class,
            method: "exact",
            coloring: r.witness,
        });
    }
    let (chi_td, coloring, method) = match class {
        SolvedClass::Cograph => {
            let s = chi_td_cograph(g)?;
            (s.value, s.coloring, "cograph")
        }
        SolvedClass::Chain => {
            let s = chi_td_chain(g)?;
            (s.value, s.coloring, "chain")
        }
        SolvedClass::Split => {
            let s = chi_td_split_with(g, budget)?;
            (s.value, s.coloring, "split")
        }
        SolvedClass::Tree => {
            let c = classify_tree_unchecked(g)?;
            (c.chi_td, c.coloring, "tree")
        }
        SolvedClass::General => {
            return Err(Error::wrong_class(
                "cograph, chain graph, connected split graph or tree",
                "no class recognizer accepted the graph",
            ))
        }
    };
    Ok(Solution {
        chi_td,
        class,
        method,
        coloring,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::is_td_coloring;

    #[test]
    fn detection_precedence() {
        assert_eq!(detect_class(&Graph::complete_bipartite(2, 3)), SolvedClass::Cograph);
        assert_eq!(detect_class(&Graph::path(4)), SolvedClass::Chain);
        assert_eq!(detect_class(&Graph::path(5)), SolvedClass::Tree);
        assert_eq!(detect_class(&Graph::path(11)), SolvedClass::Tree);
        assert_eq!(detect_class(&Graph::cycle(5)), SolvedClass::General);
        let bull = Graph::new(5, [(0, 1), (1, 2), (0, 2), (1, 3), (2, 4)]).unwrap();
        assert_eq!(detect_class(&bull), SolvedClass::Split);
    }

    #[test]
    fn auto_and_exact_agree() {
        let bull = Graph::new(5, [(0, 1), (1, 2), (0, 2), (1, 3), (2, 4)]).unwrap();
        for g in [
            Graph::path(11),
            Graph::complete_bipartite(2, 3),
            Graph::path(4),
            Graph::cycle(5),
            bull,
        ] {
            let auto = solve(&g, Method::Auto, Budget::UNLIMITED).unwrap();
            let exact = solve(&g, Method::Exact, Budget::UNLIMITED).unwrap();
            assert_eq!(auto.chi_td, exact.chi_td);
            assert!(is_td_coloring(&g, &auto.coloring));
        }
        assert_eq!(
            solve(&Graph::path(11), Method::Auto, Budget::UNLIMITED).unwrap().chi_td,
            7
        );
    }

    #[test]
    fn class_method_needs_a_class() {
        assert!(matches!(
            solve(&Graph::cycle(5), Method::Class, Budget::UNLIMITED),
            Err(Error::WrongClass { .. })
        ));
    }
}
