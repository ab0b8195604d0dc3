//! Test-only oracles that share no code with the library's search paths:
//! a small DPLL SAT solver for CNF verdicts and a segment-intersection
//! check on emitted SVG coordinates.

#![allow(dead_code)]

use shiftchain_core::cnf::Literal;
use shiftchain_core::CnfFormula;

/// Returns a satisfying assignment (`assignment[i]` is variable `i + 1`) or
/// `None` if the formula is unsatisfiable.
pub fn dpll(f: &CnfFormula) -> Option<Vec<bool>> {
    let mut values: Vec<Option<bool>> = vec![None; f.num_vars];
    if solve(&f.clauses, &mut values) {
        Some(values.into_iter().map(|v| v.unwrap_or(false)).collect())
    } else {
        None
    }
}

fn value(values: &[Option<bool>], lit: Literal) -> Option<bool> {
    values[lit.unsigned_abs() as usize - 1].map(|v| v == (lit > 0))
}

fn solve(clauses: &[Vec<Literal>], values: &mut Vec<Option<bool>>) -> bool {
    let mut trail = Vec::new();
    let ok = propagate(clauses, values, &mut trail) && {
        match pick_branch(clauses, values) {
            None => true,
            Some(lit) => [lit, -lit].into_iter().any(|choice| {
                values[choice.unsigned_abs() as usize - 1] = Some(choice > 0);
                let found = solve(clauses, values);
                if !found {
                    values[choice.unsigned_abs() as usize - 1] = None;
                }
                found
            }),
        }
    };
    if !ok {
        for var in trail {
            values[var] = None;
        }
    }
    ok
}

/// Unit propagation to a fixpoint; false on a conflict. Records the
/// variables it assigns in `trail`.
fn propagate(
    clauses: &[Vec<Literal>],
    values: &mut [Option<bool>],
    trail: &mut Vec<usize>,
) -> bool {
    loop {
        let mut changed = false;
        for clause in clauses {
            let mut unassigned = None;
            let mut open = 0;
            let mut satisfied = false;
            for &lit in clause {
                match value(values, lit) {
                    Some(true) => {
                        satisfied = true;
                        break;
                    }
                    Some(false) => {}
                    None => {
                        open += 1;
                        unassigned = Some(lit);
                    }
                }
            }
            if satisfied {
                continue;
            }
            match (open, unassigned) {
                (0, _) => return false,
                (1, Some(lit)) => {
                    let var = lit.unsigned_abs() as usize - 1;
                    values[var] = Some(lit > 0);
                    trail.push(var);
                    changed = true;
                }
                _ => {}
            }
        }
        if !changed {
            return true;
        }
    }
}

/// First unassigned literal of a shortest open clause.
fn pick_branch(clauses: &[Vec<Literal>], values: &[Option<bool>]) -> Option<Literal> {
    clauses
        .iter()
        .filter(|c| !c.iter().any(|&l| value(values, l) == Some(true)))
        .min_by_key(|c| c.iter().filter(|&&l| value(values, l).is_none()).count())
        .and_then(|c| c.iter().copied().find(|&l| value(values, l).is_none()))
}

pub type Point = (f64, f64);

/// Polylines of an SVG document, keyed by their `data-edge` index.
pub fn polylines(svg: &str) -> Vec<Vec<Point>> {
    let doc = roxmltree::Document::parse(svg).expect("well-formed SVG");
    doc.descendants()
        .filter(|n| n.has_tag_name("polyline"))
        .map(|n| {
            n.attribute("points")
                .expect("points attribute")
                .split(' ')
                .map(|pair| {
                    let (x, y) = pair.split_once(',').expect("x,y pair");
                    (x.parse().unwrap(), y.parse().unwrap())
                })
                .collect()
        })
        .collect()
}

fn orientation(a: Point, b: Point, c: Point) -> f64 {
    (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)
}

/// Segments intersect at a single point interior to both.
pub fn segments_cross(p: (Point, Point), q: (Point, Point)) -> bool {
    let d1 = orientation(q.0, q.1, p.0);
    let d2 = orientation(q.0, q.1, p.1);
    let d3 = orientation(p.0, p.1, q.0);
    let d4 = orientation(p.0, p.1, q.1);
    d1 * d2 < 0.0 && d3 * d4 < 0.0
}

pub fn polylines_properly_cross(a: &[Point], b: &[Point]) -> bool {
    a.windows(2).any(|s| {
        b.windows(2)
            .any(|t| segments_cross((s[0], s[1]), (t[0], t[1])))
    })
}

/// Two polylines over the same rows switch sides: one is strictly left of
/// the other on some row and strictly right on another. By continuity they
/// then meet, either in a proper crossing or at a shared point.
pub fn polylines_switch_sides(a: &[Point], b: &[Point]) -> bool {
    let left = a.iter().zip(b).any(|(p, q)| p.0 < q.0);
    let right = a.iter().zip(b).any(|(p, q)| p.0 > q.0);
    left && right
}
