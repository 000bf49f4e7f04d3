//! Graphs built from the generators ε (counit), Δ (coproduct) and ∗ (join).
//!
//! A graph lists its vertices in a fixed order; that order is the vertex
//! order used by the differential, by the Hopf coproduct and by evaluation.

use std::collections::HashMap;
use std::fmt;

use crate::algebra::{FreeElement, Graded};

use super::PropError;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Gen {
    Counit,
    Coproduct,
    Join,
}

impl Gen {
    pub fn arity(self) -> usize {
        match self {
            Gen::Join => 2,
            _ => 1,
        }
    }

    pub fn coarity(self) -> usize {
        match self {
            Gen::Counit => 0,
            Gen::Coproduct => 2,
            Gen::Join => 1,
        }
    }

    pub fn degree(self) -> i64 {
        (self == Gen::Join) as i64
    }

    fn name(self) -> &'static str {
        match self {
            Gen::Counit => "counit",
            Gen::Coproduct => "coproduct",
            Gen::Join => "join",
        }
    }
}

/// Where a wire starts: an external input or an output port of a vertex.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Source {
    Input(usize),
    Port(usize, usize),
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PropGraph {
    inputs: usize,
    vertices: Vec<Gen>,
    vin: Vec<Vec<Source>>,
    outputs: Vec<Source>,
}

impl Graded for PropGraph {
    fn degree(&self) -> i64 {
        self.vertices.iter().map(|g| g.degree()).sum()
    }
}

impl PropGraph {
    /// Checks that every wire is used exactly once and that there are no cycles.
    pub fn new(inputs: usize, vertices: Vec<(Gen, Vec<Source>)>, outputs: Vec<Source>) -> Result<PropGraph, PropError> {
        let (vertices, vin): (Vec<Gen>, Vec<Vec<Source>>) = vertices.into_iter().unzip();
        let g = PropGraph { inputs, vertices, vin, outputs };
        g.validate()?;
        Ok(g)
    }

    fn validate(&self) -> Result<(), PropError> {
        let mut uses: HashMap<Source, usize> = HashMap::new();
        for (v, (gen, ins)) in self.vertices.iter().zip(&self.vin).enumerate() {
            if ins.len() != gen.arity() {
                return Err(PropError::Arity(format!("vertex {v} ({}) has {} inputs", gen.name(), ins.len())));
            }
            for s in ins {
                *uses.entry(*s).or_default() += 1;
            }
        }
        for s in &self.outputs {
            *uses.entry(*s).or_default() += 1;
        }
        let mut all: Vec<Source> = (0..self.inputs).map(Source::Input).collect();
        for (v, gen) in self.vertices.iter().enumerate() {
            all.extend((0..gen.coarity()).map(|k| Source::Port(v, k)));
        }
        for s in &all {
            match uses.remove(s).unwrap_or(0) {
                1 => {}
                n => return Err(PropError::Arity(format!("wire {s:?} is used {n} times"))),
            }
        }
        if let Some(s) = uses.keys().next() {
            return Err(PropError::Arity(format!("wire {s:?} does not exist")));
        }
        self.topological_order().map(|_| ())
    }

    pub fn identity(m: usize) -> PropGraph {
        PropGraph { inputs: m, vertices: vec![], vin: vec![], outputs: (0..m).map(Source::Input).collect() }
    }

    pub fn generator(g: Gen) -> PropGraph {
        let ins = (0..g.arity()).map(Source::Input).collect();
        let outs = (0..g.coarity()).map(|k| Source::Port(0, k)).collect();
        PropGraph { inputs: g.arity(), vertices: vec![g], vin: vec![ins], outputs: outs }
    }

    pub fn counit() -> PropGraph {
        Self::generator(Gen::Counit)
    }

    pub fn coproduct() -> PropGraph {
        Self::generator(Gen::Coproduct)
    }

    pub fn join() -> PropGraph {
        Self::generator(Gen::Join)
    }

    pub fn inputs(&self) -> usize {
        self.inputs
    }

    pub fn outputs(&self) -> &[Source] {
        &self.outputs
    }

    pub fn vertices(&self) -> &[Gen] {
        &self.vertices
    }

    pub fn vertex_inputs(&self, v: usize) -> &[Source] {
        &self.vin[v]
    }

    /// (inputs, outputs)
    pub fn biarity(&self) -> (usize, usize) {
        (self.inputs, self.outputs.len())
    }

    /// Join vertices in vertex order.
    pub fn joins(&self) -> Vec<usize> {
        (0..self.vertices.len()).filter(|&v| self.vertices[v] == Gen::Join).collect()
    }

    /// Vertices in an order compatible with the edges, smallest index first.
    pub fn topological_order(&self) -> Result<Vec<usize>, PropError> {
        let n = self.vertices.len();
        let mut pending: Vec<usize> =
            self.vin.iter().map(|ins| ins.iter().filter(|s| matches!(s, Source::Port(..))).count()).collect();
        let mut consumers: Vec<Vec<usize>> = vec![vec![]; n];
        for (v, ins) in self.vin.iter().enumerate() {
            for s in ins {
                if let Source::Port(u, _) = s {
                    if *u >= n {
                        return Err(PropError::Arity(format!("vertex {u} does not exist")));
                    }
                    consumers[*u].push(v);
                }
            }
        }
        let mut ready: std::collections::BTreeSet<usize> = (0..n).filter(|&v| pending[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = ready.pop_first() {
            order.push(v);
            for &w in &consumers[v] {
                pending[w] -= 1;
                if pending[w] == 0 {
                    ready.insert(w);
                }
            }
        }
        if order.len() < n {
            return Err(PropError::Cycle);
        }
        Ok(order)
    }

    fn shifted(&self, inputs: &[Source], offset: usize) -> impl Fn(&Source) -> Source + '_ {
        let inputs = inputs.to_vec();
        move |s| match s {
            Source::Input(i) => inputs[*i],
            Source::Port(v, k) => Source::Port(v + offset, *k),
        }
    }

    /// `outer ∘ inner`; vertex order lists `outer` first.
    pub fn compose(outer: &PropGraph, inner: &PropGraph) -> Result<PropGraph, PropError> {
        if outer.inputs != inner.outputs.len() {
            return Err(PropError::Arity(format!(
                "cannot feed {} outputs into {} inputs",
                inner.outputs.len(),
                outer.inputs
            )));
        }
        let k = outer.vertices.len();
        let inner_src: Vec<Source> = (0..inner.inputs).map(Source::Input).collect();
        let fi = inner.shifted(&inner_src, k);
        let feeds: Vec<Source> = inner.outputs.iter().map(&fi).collect();
        let fo = outer.shifted(&feeds, 0);
        let mut vertices = outer.vertices.clone();
        vertices.extend(&inner.vertices);
        let mut vin: Vec<Vec<Source>> = outer.vin.iter().map(|ins| ins.iter().map(&fo).collect()).collect();
        vin.extend(inner.vin.iter().map(|ins| ins.iter().map(&fi).collect::<Vec<_>>()));
        let outputs = outer.outputs.iter().map(&fo).collect();
        let g = PropGraph { inputs: inner.inputs, vertices, vin, outputs };
        g.validate()?;
        Ok(g)
    }

    /// Side by side; inputs and outputs of `g` come first.
    pub fn disjoint_union(g: &PropGraph, h: &PropGraph) -> PropGraph {
        let k = g.vertices.len();
        let h_src: Vec<Source> = (0..h.inputs).map(|i| Source::Input(g.inputs + i)).collect();
        let fh = h.shifted(&h_src, k);
        let mut vertices = g.vertices.clone();
        vertices.extend(&h.vertices);
        let mut vin = g.vin.clone();
        vin.extend(h.vin.iter().map(|ins| ins.iter().map(&fh).collect::<Vec<_>>()));
        let mut outputs = g.outputs.clone();
        outputs.extend(h.outputs.iter().map(&fh));
        PropGraph { inputs: g.inputs + h.inputs, vertices, vin, outputs }
    }

    /// Feeds output `j` of `inner` into input `i` of `outer`. The free inputs
    /// are those of `outer` before `i`, then all of `inner`, then the rest of
    /// `outer`; the outputs are those of `inner` before `j`, then `outer`,
    /// then the rest of `inner`.
    pub fn graft(outer: &PropGraph, i: usize, inner: &PropGraph, j: usize) -> Result<PropGraph, PropError> {
        if i >= outer.inputs || j >= inner.outputs.len() {
            return Err(PropError::Arity(format!("no input {i} or output {j} to graft")));
        }
        let k = outer.vertices.len();
        let m = inner.inputs;
        let inner_src: Vec<Source> = (0..m).map(|a| Source::Input(i + a)).collect();
        let fi = inner.shifted(&inner_src, k);
        let outer_src: Vec<Source> = (0..outer.inputs)
            .map(|a| match a.cmp(&i) {
                std::cmp::Ordering::Less => Source::Input(a),
                std::cmp::Ordering::Equal => fi(&inner.outputs[j]),
                std::cmp::Ordering::Greater => Source::Input(a + m - 1),
            })
            .collect();
        let fo = outer.shifted(&outer_src, 0);
        let mut vertices = outer.vertices.clone();
        vertices.extend(&inner.vertices);
        let mut vin: Vec<Vec<Source>> = outer.vin.iter().map(|ins| ins.iter().map(&fo).collect()).collect();
        vin.extend(inner.vin.iter().map(|ins| ins.iter().map(&fi).collect::<Vec<_>>()));
        let mut outputs: Vec<Source> = inner.outputs[..j].iter().map(&fi).collect();
        outputs.extend(outer.outputs.iter().map(&fo));
        outputs.extend(inner.outputs[j + 1..].iter().map(&fi));
        let g = PropGraph { inputs: outer.inputs + m - 1, vertices, vin, outputs };
        g.validate()?;
        Ok(g)
    }

    /// Appends a vertex fed by the outputs at positions `picks`; its outputs
    /// take the place of the first pick.
    pub fn extend(&self, gen: Gen, picks: &[usize]) -> Result<PropGraph, PropError> {
        if picks.len() != gen.arity() || picks.iter().any(|&p| p >= self.outputs.len()) || (picks.len() == 2 && picks[0] == picks[1]) {
            return Err(PropError::Arity(format!("cannot feed outputs {picks:?} into {}", gen.name())));
        }
        let v = self.vertices.len();
        let mut g = self.clone();
        g.vertices.push(gen);
        g.vin.push(picks.iter().map(|&p| self.outputs[p]).collect());
        let first = picks[0];
        let mut outputs = Vec::new();
        for (i, s) in self.outputs.iter().enumerate() {
            if i == first {
                outputs.extend((0..gen.coarity()).map(|k| Source::Port(v, k)));
            } else if !picks.contains(&i) {
                outputs.push(*s);
            }
        }
        g.outputs = outputs;
        Ok(g)
    }

    /// Every graph obtained from `identity(m)`, `m ≤ max_inputs`, by appending
    /// at most `max_vertices` vertices, with at most `max_degree` joins and
    /// `max_outputs` outputs along the way.
    pub fn enumerate(max_inputs: usize, max_vertices: usize, max_degree: i64, max_outputs: usize) -> Vec<PropGraph> {
        let mut all = std::collections::BTreeSet::new();
        let mut layer: Vec<PropGraph> = (1..=max_inputs).map(PropGraph::identity).collect();
        all.extend(layer.iter().cloned());
        for _ in 0..max_vertices {
            let mut next = std::collections::BTreeSet::new();
            for g in &layer {
                let k = g.outputs.len();
                for gen in [Gen::Counit, Gen::Coproduct, Gen::Join] {
                    if g.degree() + gen.degree() > max_degree || k + gen.coarity() > max_outputs + gen.arity() {
                        continue;
                    }
                    let picks: Vec<Vec<usize>> = if gen.arity() == 1 {
                        (0..k).map(|a| vec![a]).collect()
                    } else {
                        (0..k).flat_map(|a| (0..k).filter(move |&b| b != a).map(move |b| vec![a, b])).collect()
                    };
                    for p in picks {
                        let h = g.extend(gen, &p).expect("valid picks");
                        if !all.contains(&h) {
                            next.insert(h);
                        }
                    }
                }
            }
            all.extend(next.iter().cloned());
            layer = next.into_iter().collect();
        }
        all.into_iter().collect()
    }

    /// The same graph with vertex `order[t]` moved to position `t`.
    pub fn reorder(&self, order: &[usize]) -> Result<PropGraph, PropError> {
        let n = self.vertices.len();
        let mut pos = vec![usize::MAX; n];
        for (t, &v) in order.iter().enumerate() {
            if v >= n || pos[v] != usize::MAX {
                return Err(PropError::Arity("vertex order is not a permutation".into()));
            }
            pos[v] = t;
        }
        if order.len() != n {
            return Err(PropError::Arity("vertex order is not a permutation".into()));
        }
        let f = |s: &Source| match s {
            Source::Port(v, k) => Source::Port(pos[*v], *k),
            s => *s,
        };
        Ok(PropGraph {
            inputs: self.inputs,
            vertices: order.iter().map(|&v| self.vertices[v]).collect(),
            vin: order.iter().map(|&v| self.vin[v].iter().map(f).collect()).collect(),
            outputs: self.outputs.iter().map(f).collect(),
        })
    }

    /// Replaces join vertex `v` by a counit on its other input, routing input
    /// `keep` to where the join's output went. `keep = 0` gives id⊗ε, `keep = 1` gives ε⊗id.
    pub fn collapse_join(&self, v: usize, keep: usize) -> PropGraph {
        assert_eq!(self.vertices[v], Gen::Join, "vertex {v} is not a join");
        let kept = self.vin[v][keep];
        let dropped = self.vin[v][1 - keep];
        let mut g = self.clone();
        g.vertices[v] = Gen::Counit;
        g.vin[v] = vec![dropped];
        let fix = |s: &mut Source| {
            if *s == Source::Port(v, 0) {
                *s = kept;
            }
        };
        g.vin.iter_mut().flatten().for_each(fix);
        g.outputs.iter_mut().for_each(fix);
        g
    }

    /// Derivation extending ∂∗ = (ε⊗id) − (id⊗ε), with the sign of the joins
    /// preceding the one being differentiated.
    pub fn boundary(&self) -> FreeElement<PropGraph> {
        let mut out = FreeElement::zero();
        for (t, v) in self.joins().into_iter().enumerate() {
            let s = if t % 2 == 0 { 1 } else { -1 };
            out.add_term(self.collapse_join(v, 1), s);
            out.add_term(self.collapse_join(v, 0), -s);
        }
        out
    }

    /// Textual form `(graph M (name gen src…)… (out src…))`; sources are
    /// `inK` or `name:K` (`name` alone means port 0).
    pub fn to_sexpr(&self) -> String {
        let src = |s: &Source| match s {
            Source::Input(i) => format!("in{i}"),
            Source::Port(v, 0) => format!("v{v}"),
            Source::Port(v, k) => format!("v{v}:{k}"),
        };
        let mut s = format!("(graph {}", self.inputs);
        for (v, (g, ins)) in self.vertices.iter().zip(&self.vin).enumerate() {
            s += &format!(" (v{v} {}", g.name());
            for i in ins {
                s += " ";
                s += &src(i);
            }
            s += ")";
        }
        s += " (out";
        for o in &self.outputs {
            s += " ";
            s += &src(o);
        }
        s + "))"
    }

    pub fn from_sexpr(text: &str) -> Result<PropGraph, PropError> {
        let tree = parse_sexpr(text)?;
        let bad = |m: &str| PropError::Syntax(m.to_string());
        let items = match &tree {
            Sexpr::List(items) => items,
            _ => return Err(bad("expected (graph …)")),
        };
        if items.first().and_then(Sexpr::atom) != Some("graph") {
            return Err(bad("expected (graph …)"));
        }
        let inputs: usize =
            items.get(1).and_then(Sexpr::atom).and_then(|a| a.parse().ok()).ok_or_else(|| bad("missing input count"))?;
        let mut names: HashMap<&str, usize> = HashMap::new();
        let mut specs: Vec<(Gen, Vec<&str>)> = Vec::new();
        let mut outs: Option<Vec<&str>> = None;
        for item in &items[2..] {
            let parts: Vec<&str> = match item {
                Sexpr::List(p) => p.iter().map(|x| x.atom().ok_or_else(|| bad("nested list in a vertex"))).collect::<Result<_, _>>()?,
                _ => return Err(bad("expected a vertex or (out …)")),
            };
            if parts.first() == Some(&"out") {
                outs = Some(parts[1..].to_vec());
                continue;
            }
            if parts.len() < 2 {
                return Err(bad("vertex needs a name and a generator"));
            }
            let gen = match parts[1] {
                "counit" => Gen::Counit,
                "coproduct" => Gen::Coproduct,
                "join" => Gen::Join,
                other => return Err(PropError::Syntax(format!("unknown generator '{other}'"))),
            };
            if names.insert(parts[0], specs.len()).is_some() {
                return Err(PropError::Syntax(format!("duplicate vertex '{}'", parts[0])));
            }
            specs.push((gen, parts[2..].to_vec()));
        }
        let resolve = |s: &str| -> Result<Source, PropError> {
            if let Some(i) = s.strip_prefix("in").and_then(|r| r.parse().ok()) {
                return Ok(Source::Input(i));
            }
            let (name, port) = match s.split_once(':') {
                Some((n, k)) => (n, k.parse().map_err(|_| PropError::Syntax(format!("bad port in '{s}'")))?),
                None => (s, 0),
            };
            let v = *names.get(name).ok_or_else(|| PropError::Syntax(format!("unknown vertex '{name}'")))?;
            Ok(Source::Port(v, port))
        };
        let vertices = specs
            .iter()
            .map(|(g, ins)| Ok((*g, ins.iter().map(|s| resolve(s)).collect::<Result<Vec<_>, PropError>>()?)))
            .collect::<Result<Vec<_>, PropError>>()?;
        let outputs =
            outs.ok_or_else(|| bad("missing (out …)"))?.iter().map(|s| resolve(s)).collect::<Result<Vec<_>, _>>()?;
        PropGraph::new(inputs, vertices, outputs)
    }
}

impl fmt::Debug for PropGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_sexpr())
    }
}

enum Sexpr<'a> {
    Atom(&'a str),
    List(Vec<Sexpr<'a>>),
}

impl<'a> Sexpr<'a> {
    fn atom(&self) -> Option<&'a str> {
        match self {
            Sexpr::Atom(a) => Some(a),
            Sexpr::List(_) => None,
        }
    }
}

fn parse_sexpr(text: &str) -> Result<Sexpr<'_>, PropError> {
    let mut stack: Vec<Vec<Sexpr>> = vec![vec![]];
    let mut start: Option<usize> = None;
    fn flush<'a>(text: &'a str, stack: &mut [Vec<Sexpr<'a>>], start: &mut Option<usize>, end: usize) {
        if let Some(s) = start.take() {
            stack.last_mut().unwrap().push(Sexpr::Atom(&text[s..end]));
        }
    }
    for (i, ch) in text.char_indices() {
        match ch {
            '(' => {
                flush(text, &mut stack, &mut start, i);
                stack.push(vec![]);
            }
            ')' => {
                flush(text, &mut stack, &mut start, i);
                let done = stack.pop().unwrap();
                stack.last_mut().ok_or_else(|| PropError::Syntax(format!("unbalanced ')' at byte {i}")))?.push(Sexpr::List(done));
                if stack.is_empty() {
                    return Err(PropError::Syntax(format!("unbalanced ')' at byte {i}")));
                }
            }
            c if c.is_whitespace() => flush(text, &mut stack, &mut start, i),
            _ => {
                start.get_or_insert(i);
            }
        }
    }
    flush(text, &mut stack, &mut start, text.len());
    if stack.len() != 1 {
        return Err(PropError::Syntax("unbalanced '('".into()));
    }
    let mut top = stack.pop().unwrap();
    if top.len() != 1 {
        return Err(PropError::Syntax("expected exactly one expression".into()));
    }
    Ok(top.pop().unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sexpr_round_trip() {
        let g = PropGraph::from_sexpr("(graph 2 (a join in0 in1) (b coproduct a) (out b:0 b:1))").unwrap();
        assert_eq!(g.biarity(), (2, 2));
        assert_eq!(g.degree(), 1);
        assert_eq!(PropGraph::from_sexpr(&g.to_sexpr()).unwrap(), g);
    }

    #[test]
    fn rejects_cycles_and_reuse() {
        let cyc = PropGraph::from_sexpr("(graph 1 (a join in0 b) (b coproduct a) (out b:1))");
        assert_eq!(cyc.unwrap_err(), PropError::Cycle);
        let reuse = PropGraph::from_sexpr("(graph 1 (a coproduct in0) (out a:0 a:0))");
        assert!(matches!(reuse, Err(PropError::Arity(_))));
        assert!(matches!(PropGraph::from_sexpr("(graph 1 (out in0)"), Err(PropError::Syntax(_))));
    }

    #[test]
    fn union_and_composition() {
        let ee = PropGraph::disjoint_union(&PropGraph::counit(), &PropGraph::counit());
        assert_eq!(ee.biarity(), (2, 0));
        let left_counit = PropGraph::compose(
            &PropGraph::disjoint_union(&PropGraph::identity(1), &PropGraph::counit()),
            &PropGraph::coproduct(),
        )
        .unwrap();
        assert_eq!(left_counit.biarity(), (1, 1));
        let grafted = PropGraph::graft(&PropGraph::join(), 0, &PropGraph::coproduct(), 0).unwrap();
        assert_eq!((grafted.biarity(), grafted.degree()), ((2, 2), 1));
        assert!(PropGraph::compose(&PropGraph::join(), &PropGraph::coproduct()).is_ok());
        assert!(PropGraph::compose(&PropGraph::coproduct(), &PropGraph::coproduct()).is_err());
    }

    #[test]
    fn boundary_of_generators() {
        assert!(PropGraph::counit().boundary().is_zero());
        assert!(PropGraph::coproduct().boundary().is_zero());
        assert_eq!(PropGraph::join().boundary().len(), 2);
    }
}
