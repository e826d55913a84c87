//! Interaction-graph model for a brand community.
//!
//! Users become nodes; follows and comments become directed edges whose
//! weight counts interactions. Edges point in the direction information
//! spreads: if `b` follows `a` or comments on `a`'s post, the edge runs
//! `a -> b`. A reply links the parent commenter to the replier, not the
//! post author.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};

/// Opaque, non-empty user identifier.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UserId(String);

impl UserId {
    pub fn new(id: impl Into<String>) -> Result<Self> {
        let id = id.into();
        if id.is_empty() {
            return Err(Error::EmptyUserId);
        }
        Ok(UserId(id))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for UserId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::str::FromStr for UserId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        UserId::new(s)
    }
}

/// Sentiment bucket: the model distinguishes negative from non-negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Polarity {
    NonNegative,
    Negative,
}

impl Polarity {
    pub fn sign(self) -> f64 {
        match self {
            Polarity::NonNegative => 1.0,
            Polarity::Negative => -1.0,
        }
    }

    /// Accepts `+1`, `1`, or `-1`.
    pub fn parse(s: &str) -> Option<Polarity> {
        match s.trim() {
            "+1" | "1" => Some(Polarity::NonNegative),
            "-1" => Some(Polarity::Negative),
            _ => None,
        }
    }

    pub fn as_csv(&self) -> &'static str {
        match self {
            Polarity::NonNegative => "1",
            Polarity::Negative => "-1",
        }
    }
}

/// A brand-related post.
#[derive(Debug, Clone, PartialEq)]
pub struct Post {
    pub post_id: String,
    pub author: UserId,
    pub polarity: Polarity,
    pub likes: u64,
    pub favorites: u64,
    pub text: Option<String>,
}

/// A comment on a post, possibly a reply to another comment on the same post.
#[derive(Debug, Clone, PartialEq)]
pub struct Comment {
    pub comment_id: String,
    pub post_id: String,
    pub author: UserId,
    pub parent_comment_id: Option<String>,
    pub polarity: Option<Polarity>,
    pub text: Option<String>,
}

/// `follower` follows `followee`; the induced edge runs followee -> follower.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FollowRelation {
    pub follower: UserId,
    pub followee: UserId,
}

/// Directed graph with positive integer edge weights (interaction counts).
///
/// Node handles are `usize` indices into an id table that is sorted
/// ascending, so graphs built from the same records compare equal no
/// matter the record order.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedDigraph {
    ids: Vec<UserId>,
    verified: Vec<bool>,
    out: Vec<Vec<(usize, u64)>>,
    inn: Vec<Vec<(usize, u64)>>,
    edge_count: usize,
}

impl WeightedDigraph {
    /// Canonical constructor from a node set and a (source, target) -> weight map.
    /// Weights of zero and self-loops are rejected by debug assertion; callers
    /// only produce counted interactions.
    pub fn from_parts(nodes: BTreeSet<UserId>, edges: BTreeMap<(UserId, UserId), u64>) -> Self {
        let ids: Vec<UserId> = nodes.into_iter().collect();
        let index: HashMap<&UserId, usize> =
            ids.iter().enumerate().map(|(i, id)| (id, i)).collect();
        let n = ids.len();
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        let mut edge_count = 0;
        for ((s, t), w) in &edges {
            debug_assert!(*w >= 1, "edge weights are positive");
            debug_assert!(s != t, "no self-loops");
            let si = index[s];
            let ti = index[t];
            out[si].push((ti, *w));
            inn[ti].push((si, *w));
            edge_count += 1;
        }
        // BTreeMap iteration already sorts out-lists by target; in-lists need it.
        for l in &mut inn {
            l.sort_unstable();
        }
        WeightedDigraph {
            verified: vec![false; n],
            ids,
            out,
            inn,
            edge_count,
        }
    }

    pub fn node_count(&self) -> usize {
        self.ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn ids(&self) -> &[UserId] {
        &self.ids
    }

    pub fn id(&self, node: usize) -> &UserId {
        &self.ids[node]
    }

    pub fn index_of(&self, id: &UserId) -> Option<usize> {
        self.ids.binary_search(id).ok()
    }

    pub fn out_edges(&self, node: usize) -> &[(usize, u64)] {
        &self.out[node]
    }

    pub fn in_edges(&self, node: usize) -> &[(usize, u64)] {
        &self.inn[node]
    }

    pub fn out_degree(&self, node: usize) -> usize {
        self.out[node].len()
    }

    pub fn in_degree(&self, node: usize) -> usize {
        self.inn[node].len()
    }

    /// Sum of original weights on edges leaving `node`.
    pub fn out_weight(&self, node: usize) -> u64 {
        self.out[node].iter().map(|&(_, w)| w).sum()
    }

    /// Sum of original weights on edges entering `node`.
    pub fn in_weight(&self, node: usize) -> u64 {
        self.inn[node].iter().map(|&(_, w)| w).sum()
    }

    /// All edges in (source, target) order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(s, l)| l.iter().map(move |&(t, w)| (s, t, w)))
    }

    pub fn max_weight(&self) -> Option<u64> {
        self.edges().map(|(_, _, w)| w).max()
    }

    pub fn total_weight(&self) -> u64 {
        self.edges().map(|(_, _, w)| w).sum()
    }

    pub fn is_verified(&self, node: usize) -> bool {
        self.verified[node]
    }

    /// Mark the listed users verified; unknown ids are ignored.
    pub fn set_verified(&mut self, users: &HashSet<UserId>) {
        for (i, id) in self.ids.iter().enumerate() {
            self.verified[i] = users.contains(id);
        }
    }

    pub fn verified_set(&self) -> HashSet<UserId> {
        self.ids
            .iter()
            .zip(&self.verified)
            .filter(|&(_, &v)| v)
            .map(|(id, _)| id.clone())
            .collect()
    }
}

/// Inverted edge weights: heavier interaction means shorter distance.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceWeights {
    ids: Vec<UserId>,
    out: Vec<Vec<(usize, u64)>>,
    w_max: u64,
}

impl DistanceWeights {
    pub fn node_count(&self) -> usize {
        self.ids.len()
    }

    pub fn ids(&self) -> &[UserId] {
        &self.ids
    }

    pub fn out_edges(&self, node: usize) -> &[(usize, u64)] {
        &self.out[node]
    }

    pub fn distance(&self, source: usize, target: usize) -> Option<u64> {
        self.out[source]
            .iter()
            .find(|&&(t, _)| t == target)
            .map(|&(_, d)| d)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(s, l)| l.iter().map(move |&(t, d)| (s, t, d)))
    }

    pub fn max_original_weight(&self) -> u64 {
        self.w_max
    }
}

/// Build the weighted interaction graph from raw records.
///
/// Nodes are every post author, every comment author, and both endpoints of
/// any follow touching an author. Each qualifying interaction adds 1 to its
/// edge: a follow `(f follows a)` to `a -> f`, a top-level comment by `c` on
/// `a`'s post to `a -> c`, and a reply by `c` to a comment written by `k` to
/// `k -> c`. Self-interactions add nothing; duplicate follow pairs count once.
pub fn build_graph(
    posts: &[Post],
    comments: &[Comment],
    follows: &[FollowRelation],
) -> Result<WeightedDigraph> {
    let mut post_author: HashMap<&str, &UserId> = HashMap::new();
    for p in posts {
        if post_author.insert(&p.post_id, &p.author).is_some() {
            return Err(Error::DuplicateId {
                kind: "post",
                id: p.post_id.clone(),
            });
        }
    }
    let mut comment_by_id: HashMap<&str, &Comment> = HashMap::new();
    for c in comments {
        if comment_by_id.insert(&c.comment_id, c).is_some() {
            return Err(Error::DuplicateId {
                kind: "comment",
                id: c.comment_id.clone(),
            });
        }
    }
    for c in comments {
        if !post_author.contains_key(c.post_id.as_str()) {
            return Err(Error::DanglingPost {
                comment_id: c.comment_id.clone(),
                post_id: c.post_id.clone(),
            });
        }
        if let Some(parent_id) = &c.parent_comment_id {
            match comment_by_id.get(parent_id.as_str()) {
                Some(parent) if parent.post_id == c.post_id => {}
                _ => {
                    return Err(Error::DanglingParent {
                        comment_id: c.comment_id.clone(),
                        parent_id: parent_id.clone(),
                        post_id: c.post_id.clone(),
                    });
                }
            }
        }
    }

    let mut authors: BTreeSet<&UserId> = posts.iter().map(|p| &p.author).collect();
    authors.extend(comments.iter().map(|c| &c.author));

    let mut nodes: BTreeSet<UserId> = authors.iter().map(|&a| a.clone()).collect();
    let mut weights: BTreeMap<(UserId, UserId), u64> = BTreeMap::new();
    let add = |src: &UserId, tgt: &UserId, weights: &mut BTreeMap<(UserId, UserId), u64>| {
        *weights.entry((src.clone(), tgt.clone())).or_insert(0) += 1;
    };

    // Follows: set semantics, kept only when touching an author.
    let mut follow_pairs: BTreeSet<(&UserId, &UserId)> = BTreeSet::new();
    for f in follows {
        if f.follower == f.followee {
            continue;
        }
        if authors.contains(&f.follower) || authors.contains(&f.followee) {
            follow_pairs.insert((&f.followee, &f.follower));
        }
    }
    for (src, tgt) in follow_pairs {
        nodes.insert(src.clone());
        nodes.insert(tgt.clone());
        add(src, tgt, &mut weights);
    }

    // Comments: one interaction each.
    for c in comments {
        match &c.parent_comment_id {
            None => {
                let author = post_author[c.post_id.as_str()];
                if *author != c.author {
                    add(author, &c.author, &mut weights);
                }
            }
            Some(parent_id) => {
                let parent = comment_by_id[parent_id.as_str()];
                if parent.author != c.author {
                    add(&parent.author, &c.author, &mut weights);
                }
            }
        }
    }

    Ok(WeightedDigraph::from_parts(nodes, weights))
}

/// Noise-reduce a graph: repeatedly delete nodes that only receive
/// (in-degree > 0, out-degree 0), drop edges lighter than `min_weight`,
/// and delete isolated nodes, until nothing changes.
pub fn prune(g: &WeightedDigraph, min_weight: u64) -> WeightedDigraph {
    let n = g.node_count();
    let mut alive = vec![true; n];
    let mut edges: BTreeMap<(usize, usize), u64> = g.edges().map(|(s, t, w)| ((s, t), w)).collect();

    loop {
        let mut changed = false;

        let mut out_deg = vec![0usize; n];
        let mut in_deg = vec![0usize; n];
        for &(s, t) in edges.keys() {
            out_deg[s] += 1;
            in_deg[t] += 1;
        }
        // Rule 1: receivers that never send.
        for v in 0..n {
            if alive[v] && out_deg[v] == 0 && in_deg[v] > 0 {
                alive[v] = false;
                changed = true;
            }
        }
        edges.retain(|&(s, t), _| alive[s] && alive[t]);

        // Rule 2: light edges.
        let before = edges.len();
        edges.retain(|_, &mut w| w >= min_weight);
        if edges.len() != before {
            changed = true;
        }

        // Rule 3: isolated nodes.
        let mut touched = vec![false; n];
        for &(s, t) in edges.keys() {
            touched[s] = true;
            touched[t] = true;
        }
        for v in 0..n {
            if alive[v] && !touched[v] {
                alive[v] = false;
                changed = true;
            }
        }

        if !changed {
            break;
        }
    }

    let nodes: BTreeSet<UserId> = (0..n)
        .filter(|&v| alive[v])
        .map(|v| g.id(v).clone())
        .collect();
    let edge_map: BTreeMap<(UserId, UserId), u64> = edges
        .into_iter()
        .map(|((s, t), w)| ((g.id(s).clone(), g.id(t).clone()), w))
        .collect();
    let mut pruned = WeightedDigraph::from_parts(nodes, edge_map);
    pruned.set_verified(&g.verified_set());
    pruned
}

/// Turn interaction weights into distances: `w' = w_max + 1 - w`, so the
/// strongest tie has distance 1.
pub fn invert_weights(g: &WeightedDigraph) -> Result<DistanceWeights> {
    let w_max = g.max_weight().ok_or(Error::NoEdges)?;
    let out = (0..g.node_count())
        .map(|u| {
            g.out_edges(u)
                .iter()
                .map(|&(t, w)| (t, w_max + 1 - w))
                .collect()
        })
        .collect();
    Ok(DistanceWeights {
        ids: g.ids().to_vec(),
        out,
        w_max,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uid(s: &str) -> UserId {
        UserId::new(s).unwrap()
    }

    fn post(id: &str, author: &str) -> Post {
        Post {
            post_id: id.to_string(),
            author: uid(author),
            polarity: Polarity::NonNegative,
            likes: 0,
            favorites: 0,
            text: None,
        }
    }

    fn comment(id: &str, post_id: &str, author: &str, parent: Option<&str>) -> Comment {
        Comment {
            comment_id: id.to_string(),
            post_id: post_id.to_string(),
            author: uid(author),
            parent_comment_id: parent.map(|s| s.to_string()),
            polarity: None,
            text: None,
        }
    }

    fn follow(follower: &str, followee: &str) -> FollowRelation {
        FollowRelation {
            follower: uid(follower),
            followee: uid(followee),
        }
    }

    fn weight(g: &WeightedDigraph, s: &str, t: &str) -> Option<u64> {
        let si = g.index_of(&uid(s))?;
        let ti = g.index_of(&uid(t))?;
        g.out_edges(si).iter().find(|&&(x, _)| x == ti).map(|&(_, w)| w)
    }

    #[test]
    fn single_comment_creates_unit_edge() {
        let g = build_graph(
            &[post("p1", "A")],
            &[comment("c1", "p1", "B", None)],
            &[],
        )
        .unwrap();
        assert_eq!(g.node_count(), 2);
        assert_eq!(weight(&g, "A", "B"), Some(1));
    }

    #[test]
    fn self_comment_adds_no_edge() {
        let g = build_graph(
            &[post("p1", "A")],
            &[comment("c1", "p1", "A", None)],
            &[],
        )
        .unwrap();
        assert_eq!(g.node_count(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn repeat_comments_and_follow_accumulate() {
        let g = build_graph(
            &[post("p1", "A")],
            &[
                comment("c1", "p1", "B", None),
                comment("c2", "p1", "B", None),
            ],
            &[follow("B", "A")],
        )
        .unwrap();
        assert_eq!(weight(&g, "A", "B"), Some(3));
    }

    #[test]
    fn reply_links_commenters_not_post_author() {
        let g = build_graph(
            &[post("p1", "A")],
            &[
                comment("c1", "p1", "B", None),
                comment("c2", "p1", "C", Some("c1")),
            ],
            &[],
        )
        .unwrap();
        assert_eq!(weight(&g, "B", "C"), Some(1));
        assert_eq!(weight(&g, "A", "C"), None);
        assert_eq!(weight(&g, "A", "B"), Some(1));
    }

    #[test]
    fn duplicate_follow_counts_once() {
        let g = build_graph(&[post("p1", "A")], &[], &[follow("B", "A"), follow("B", "A")]).unwrap();
        assert_eq!(weight(&g, "A", "B"), Some(1));
    }

    #[test]
    fn follow_between_non_authors_is_ignored() {
        let g = build_graph(&[post("p1", "A")], &[], &[follow("X", "Y")]).unwrap();
        assert_eq!(g.node_count(), 1);
        assert!(g.index_of(&uid("X")).is_none());
    }

    #[test]
    fn dangling_post_reference_is_an_error() {
        let err = build_graph(&[post("p1", "A")], &[comment("c1", "p9", "B", None)], &[]);
        assert!(matches!(err, Err(Error::DanglingPost { .. })));
    }

    #[test]
    fn parent_on_other_post_is_an_error() {
        let err = build_graph(
            &[post("p1", "A"), post("p2", "A")],
            &[
                comment("c1", "p1", "B", None),
                comment("c2", "p2", "C", Some("c1")),
            ],
            &[],
        );
        assert!(matches!(err, Err(Error::DanglingParent { .. })));
    }

    #[test]
    fn build_is_order_insensitive() {
        let posts = [post("p1", "A"), post("p2", "B")];
        let comments = [
            comment("c1", "p1", "B", None),
            comment("c2", "p1", "C", None),
            comment("c3", "p2", "A", None),
        ];
        let follows = [follow("C", "A"), follow("A", "B")];
        let g1 = build_graph(&posts, &comments, &follows).unwrap();

        let posts2 = [post("p2", "B"), post("p1", "A")];
        let comments2 = [
            comment("c3", "p2", "A", None),
            comment("c1", "p1", "B", None),
            comment("c2", "p1", "C", None),
        ];
        let follows2 = [follow("A", "B"), follow("C", "A")];
        let g2 = build_graph(&posts2, &comments2, &follows2).unwrap();
        assert_eq!(g1, g2);
    }

    #[test]
    fn total_weight_counts_qualifying_interactions() {
        // 3 comments (one self, excluded) + 2 follows (one duplicate, counted once).
        let g = build_graph(
            &[post("p1", "A")],
            &[
                comment("c1", "p1", "B", None),
                comment("c2", "p1", "A", None),
                comment("c3", "p1", "C", None),
            ],
            &[follow("B", "A"), follow("B", "A"), follow("C", "A")],
        )
        .unwrap();
        assert_eq!(g.total_weight(), 4);
    }

    #[test]
    fn prune_identity_when_no_rule_fires() {
        // 2-cycle: both nodes have out-degree >= 1.
        let mut edges = BTreeMap::new();
        edges.insert((uid("A"), uid("B")), 1);
        edges.insert((uid("B"), uid("A")), 1);
        let g = WeightedDigraph::from_parts([uid("A"), uid("B")].into(), edges);
        let p = prune(&g, 1);
        assert_eq!(p, g);
    }

    #[test]
    fn prune_removes_sink_leaves_of_a_star() {
        let mut edges = BTreeMap::new();
        edges.insert((uid("c"), uid("x1")), 5);
        edges.insert((uid("c"), uid("x2")), 5);
        let g = WeightedDigraph::from_parts([uid("c"), uid("x1"), uid("x2")].into(), edges);
        let p = prune(&g, 1);
        assert!(p.index_of(&uid("x1")).is_none());
        assert!(p.index_of(&uid("x2")).is_none());
        // With its leaves gone the centre is isolated and goes too.
        assert!(p.is_empty());
    }

    #[test]
    fn prune_runs_to_fixpoint_on_branching_chain() {
        // A -> B (w=1), A -> C (w=2): every node here either only receives or,
        // once the receivers are gone, is isolated, so the fixpoint is empty.
        let mut edges = BTreeMap::new();
        edges.insert((uid("A"), uid("B")), 1);
        edges.insert((uid("A"), uid("C")), 2);
        let g = WeightedDigraph::from_parts([uid("A"), uid("B"), uid("C")].into(), edges);
        let p = prune(&g, 2);
        assert!(p.is_empty());
    }

    #[test]
    fn prune_drops_light_edges_inside_a_cycle() {
        // Two 2-cycles sharing A; the B cycle is light and disappears.
        let mut edges = BTreeMap::new();
        edges.insert((uid("A"), uid("B")), 1);
        edges.insert((uid("B"), uid("A")), 1);
        edges.insert((uid("A"), uid("C")), 3);
        edges.insert((uid("C"), uid("A")), 2);
        let g = WeightedDigraph::from_parts([uid("A"), uid("B"), uid("C")].into(), edges);
        let p = prune(&g, 2);
        assert_eq!(p.node_count(), 2);
        assert_eq!(weight(&p, "A", "C"), Some(3));
        assert_eq!(weight(&p, "C", "A"), Some(2));
        assert!(p.index_of(&uid("B")).is_none());
    }

    #[test]
    fn prune_invariants_hold() {
        let mut edges = BTreeMap::new();
        for (s, t, w) in [
            ("A", "B", 1u64),
            ("B", "A", 2),
            ("B", "C", 3),
            ("C", "B", 2),
            ("C", "D", 1),
            ("D", "E", 4),
            ("E", "D", 4),
            ("A", "E", 2),
            ("E", "A", 1),
        ] {
            edges.insert((uid(s), uid(t)), w);
        }
        let nodes: BTreeSet<UserId> = ["A", "B", "C", "D", "E", "Z"].iter().map(|s| uid(s)).collect();
        let g = WeightedDigraph::from_parts(nodes, edges);
        let p = prune(&g, 2);
        for v in 0..p.node_count() {
            assert!(
                !(p.out_degree(v) == 0 && p.in_degree(v) > 0),
                "sink survived: {}",
                p.id(v)
            );
            assert!(p.out_degree(v) + p.in_degree(v) > 0, "isolated node survived");
        }
        assert!(p.edges().all(|(_, _, w)| w >= 2));
    }

    #[test]
    fn invert_maps_heavy_to_short() {
        let mut edges = BTreeMap::new();
        edges.insert((uid("A"), uid("B")), 1);
        edges.insert((uid("B"), uid("C")), 2);
        edges.insert((uid("C"), uid("A")), 3);
        let g = WeightedDigraph::from_parts([uid("A"), uid("B"), uid("C")].into(), edges);
        let d = invert_weights(&g).unwrap();
        let mut dists: Vec<u64> = d.edges().map(|(_, _, w)| w).collect();
        dists.sort_unstable();
        assert_eq!(dists, vec![1, 2, 3]);
        assert_eq!(d.distance(g.index_of(&uid("A")).unwrap(), g.index_of(&uid("B")).unwrap()), Some(3));
    }

    #[test]
    fn invert_uniform_weights_gives_unit_distances() {
        let mut edges = BTreeMap::new();
        edges.insert((uid("A"), uid("B")), 7);
        edges.insert((uid("B"), uid("A")), 7);
        let g = WeightedDigraph::from_parts([uid("A"), uid("B")].into(), edges);
        let d = invert_weights(&g).unwrap();
        assert!(d.edges().all(|(_, _, w)| w == 1));
    }

    #[test]
    fn invert_weights_example_pair() {
        let mut edges = BTreeMap::new();
        edges.insert((uid("A"), uid("B")), 5);
        edges.insert((uid("B"), uid("A")), 2);
        let g = WeightedDigraph::from_parts([uid("A"), uid("B")].into(), edges);
        let d = invert_weights(&g).unwrap();
        let a = g.index_of(&uid("A")).unwrap();
        let b = g.index_of(&uid("B")).unwrap();
        assert_eq!(d.distance(a, b), Some(1));
        assert_eq!(d.distance(b, a), Some(4));
    }

    #[test]
    fn invert_empty_graph_errors() {
        let g = WeightedDigraph::from_parts(BTreeSet::new(), BTreeMap::new());
        assert!(matches!(invert_weights(&g), Err(Error::NoEdges)));
    }

    #[test]
    fn inversion_is_an_involution_on_the_weight_multiset() {
        let weights = [1u64, 2, 2, 5, 9];
        let w_max = 9;
        let twice: Vec<u64> = weights
            .iter()
            .map(|w| w_max + 1 - (w_max + 1 - w))
            .collect();
        assert_eq!(twice, weights);
    }
}
