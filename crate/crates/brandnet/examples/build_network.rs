//! Building the weighted interaction graph from raw records.
//!
//! A handful of posts, comments, and follows become a directed graph whose
//! edges point the way information flows and whose weights count
//! interactions. The example then denoises the graph and inverts the
//! weights into distances.
//!
//! Run with: `cargo run -p brandnet --example build_network`

use brandnet::graph::{
    build_graph, invert_weights, prune, Comment, FollowRelation, Polarity, Post, UserId,
};

fn uid(s: &str) -> UserId {
    UserId::new(s).unwrap()
}

fn main() {
    // alice and bob run a small brand community; carol and dave engage a
    // lot, eve drops a single comment and is never heard from again.
    let posts = vec![
        post("p1", "alice", Polarity::NonNegative, 12, 4),
        post("p2", "alice", Polarity::NonNegative, 5, 1),
        post("p3", "bob", Polarity::NonNegative, 8, 2),
        post("p4", "carol", Polarity::NonNegative, 2, 0),
    ];
    let comments = vec![
        comment("c1", "p1", "carol", None),
        comment("c2", "p1", "dave", None),
        comment("c3", "p1", "dave", Some("c1")), // reply: carol -> dave link
        comment("c4", "p2", "carol", None),
        comment("c5", "p3", "alice", None),
        comment("c6", "p3", "eve", None),
        comment("c7", "p4", "alice", None),
        comment("c8", "p1", "alice", None), // self-comment, contributes nothing
    ];
    let follows = vec![
        follow("carol", "alice"),
        follow("dave", "alice"),
        follow("alice", "bob"),
        follow("bob", "alice"),
        follow("alice", "carol"),
        follow("eve", "alice"),
    ];

    let graph = build_graph(&posts, &comments, &follows).unwrap();
    println!("raw graph: {} nodes, {} edges", graph.node_count(), graph.edge_count());
    for (s, t, w) in graph.edges() {
        println!("  {} -> {}  weight {}", graph.id(s), graph.id(t), w);
    }

    // Drop pure receivers, weight-1 edges, and orphans.
    let pruned = prune(&graph, 2);
    println!(
        "\npruned (min weight 2): {} nodes, {} edges",
        pruned.node_count(),
        pruned.edge_count()
    );
    for (s, t, w) in pruned.edges() {
        println!("  {} -> {}  weight {}", pruned.id(s), pruned.id(t), w);
    }

    // Strong ties become short distances.
    let distances = invert_weights(&pruned).unwrap();
    println!("\ninverted distances (w' = w_max + 1 - w):");
    for (s, t, d) in distances.edges() {
        println!("  {} -> {}  distance {}", pruned.id(s), pruned.id(t), d);
    }
}

fn post(id: &str, author: &str, polarity: Polarity, likes: u64, favorites: u64) -> Post {
    Post {
        post_id: id.to_string(),
        author: uid(author),
        polarity,
        likes,
        favorites,
        text: None,
    }
}

fn comment(id: &str, post: &str, author: &str, parent: Option<&str>) -> Comment {
    Comment {
        comment_id: id.to_string(),
        post_id: post.to_string(),
        author: uid(author),
        parent_comment_id: parent.map(str::to_string),
        polarity: Some(Polarity::NonNegative),
        text: None,
    }
}

fn follow(follower: &str, followee: &str) -> FollowRelation {
    FollowRelation {
        follower: uid(follower),
        followee: uid(followee),
    }
}
