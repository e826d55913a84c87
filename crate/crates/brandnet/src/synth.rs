//! Seeded synthetic brand-community generator.
//!
//! The backbone is a preferential-attachment follow network, so follower
//! counts are heavy-tailed and hubs attach to low-degree users. On top of
//! it, a configurable set of planted influencers receives elevated
//! follower counts, loyal commenters, and high-support brand posts, while
//! a core of mutually engaged regulars keeps the community connected and
//! the long tail of lurkers interacts once and disappears during pruning.
//! The same seed always yields byte-identical record sets.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Comment, FollowRelation, Polarity, Post, UserId};

/// Knobs for the generator; `seed` fully determines the output.
#[derive(Debug, Clone)]
pub struct SyntheticSpec {
    pub node_count: usize,
    /// Preferential-attachment follow edges per joining node.
    pub attach_edges: usize,
    pub planted_count: usize,
    /// Loyal commenters recruited per planted influencer.
    pub planted_engagement: usize,
    /// Probability that a background lurker publishes a brand post.
    pub brand_post_rate: f64,
    pub seed: u64,
}

impl SyntheticSpec {
    /// The reference community used across tests and docs:
    /// 2000 users, 20 planted influencers.
    pub fn reference() -> Self {
        SyntheticSpec {
            node_count: 2000,
            attach_edges: 3,
            planted_count: 20,
            planted_engagement: 25,
            brand_post_rate: 0.3,
            seed: 42,
        }
    }

    /// A smaller fixture for fast pipeline tests.
    pub fn small(seed: u64) -> Self {
        SyntheticSpec {
            node_count: 200,
            attach_edges: 3,
            planted_count: 5,
            planted_engagement: 12,
            brand_post_rate: 0.3,
            seed,
        }
    }
}

/// Everything the generator produces.
#[derive(Debug, Clone)]
pub struct SyntheticCommunity {
    pub posts: Vec<Post>,
    pub comments: Vec<Comment>,
    pub follows: Vec<FollowRelation>,
    pub planted: Vec<UserId>,
    /// All users with their verified flag (planted influencers are verified).
    pub users: Vec<(UserId, bool)>,
}

const ACTIVE_FRACTION: f64 = 0.40;

const POSITIVE_PHRASES: &[&str] = &[
    "great phone, love the camera",
    "excellent build, totally worth it",
    "fast and reliable, happy with it",
    "best purchase this year, recommend it",
    "solid battery, amazing screen",
    "smooth performance, good value",
];

const NEGATIVE_PHRASES: &[&str] = &[
    "terrible battery, want a refund",
    "screen broke, awful quality",
    "slow and laggy, regret buying",
    "worst support, defective unit",
    "overpriced garbage, waste of money",
];

struct Builder {
    rng: ChaCha8Rng,
    user_ids: Vec<UserId>,
    posts: Vec<Post>,
    comments: Vec<Comment>,
    follows: std::collections::BTreeSet<(usize, usize)>,
    posts_by_user: Vec<Vec<usize>>,
    comments_by_post: Vec<Vec<usize>>,
    next_comment: usize,
}

impl Builder {
    fn new(spec: &SyntheticSpec) -> Self {
        let user_ids = (0..spec.node_count)
            .map(|i| UserId::new(format!("u{i:05}")).expect("generated ids are non-empty"))
            .collect();
        Builder {
            rng: ChaCha8Rng::seed_from_u64(spec.seed),
            user_ids,
            posts: Vec::new(),
            comments: Vec::new(),
            follows: std::collections::BTreeSet::new(),
            posts_by_user: vec![Vec::new(); spec.node_count],
            comments_by_post: Vec::new(),
            next_comment: 0,
        }
    }

    fn phrase(&mut self, polarity: Polarity) -> String {
        let pool = match polarity {
            Polarity::NonNegative => POSITIVE_PHRASES,
            Polarity::Negative => NEGATIVE_PHRASES,
        };
        pool[self.rng.gen_range(0..pool.len())].to_string()
    }

    fn add_post(&mut self, author: usize, polarity: Polarity, likes: u64, favorites: u64) -> usize {
        let idx = self.posts.len();
        let text = self.phrase(polarity);
        self.posts.push(Post {
            post_id: format!("p{idx:05}"),
            author: self.user_ids[author].clone(),
            polarity,
            likes,
            favorites,
            text: Some(text),
        });
        self.posts_by_user[author].push(idx);
        self.comments_by_post.push(Vec::new());
        idx
    }

    /// Add a comment; 30% omit the polarity column and let the lexicon
    /// classify the text instead.
    fn add_comment(&mut self, post: usize, author: usize, polarity: Polarity, parent: Option<usize>) {
        if self.posts[post].author == self.user_ids[author] {
            return; // self-comments are blocked downstream anyway
        }
        let idx = self.next_comment;
        self.next_comment += 1;
        let explicit = self.rng.gen_bool(0.7);
        let text = self.phrase(polarity);
        self.comments.push(Comment {
            comment_id: format!("c{idx:06}"),
            post_id: self.posts[post].post_id.clone(),
            author: self.user_ids[author].clone(),
            parent_comment_id: parent.map(|p| self.comments[p].comment_id.clone()),
            polarity: explicit.then_some(polarity),
            text: Some(text),
        });
        self.comments_by_post[post].push(self.comments.len() - 1);
    }

    fn add_follow(&mut self, follower: usize, followee: usize) {
        if follower != followee {
            self.follows.insert((follower, followee));
        }
    }

    /// Follow plus a supportive comment on one of `followee`'s posts, which
    /// lifts the followee -> follower edge weight to at least 2.
    fn engage(&mut self, follower: usize, followee: usize) {
        self.add_follow(follower, followee);
        if let Some(&post) = pick(&mut self.rng, &self.posts_by_user[followee]) {
            self.add_comment(post, follower, Polarity::NonNegative, None);
        }
    }
}

fn pick<'a, T>(rng: &mut ChaCha8Rng, slice: &'a [T]) -> Option<&'a T> {
    if slice.is_empty() {
        None
    } else {
        Some(&slice[rng.gen_range(0..slice.len())])
    }
}

fn sample_distinct(rng: &mut ChaCha8Rng, pool: &[usize], k: usize) -> Vec<usize> {
    let mut chosen: Vec<usize> = pool.choose_multiple(rng, k.min(pool.len())).copied().collect();
    chosen.sort_unstable();
    chosen
}

/// Generate a community. See the module docs for the construction recipe.
pub fn generate_synthetic(spec: &SyntheticSpec) -> Result<SyntheticCommunity> {
    if spec.node_count == 0 {
        return Err(Error::Config("node_count must be positive".into()));
    }
    if spec.planted_count >= spec.node_count {
        return Err(Error::Config(
            "planted_count must be smaller than node_count".into(),
        ));
    }
    if !(0.0..=1.0).contains(&spec.brand_post_rate) {
        return Err(Error::Config("brand_post_rate must lie in [0, 1]".into()));
    }

    let n = spec.node_count;
    let mut b = Builder::new(spec);

    // Roles.
    let all: Vec<usize> = (0..n).collect();
    let planted = sample_distinct(&mut b.rng, &all, spec.planted_count);
    let is_planted: Vec<bool> = {
        let mut v = vec![false; n];
        for &p in &planted {
            v[p] = true;
        }
        v
    };
    let mut actives = Vec::new();
    for u in 0..n {
        if !is_planted[u] && b.rng.gen_bool(ACTIVE_FRACTION) {
            actives.push(u);
        }
    }
    let lurkers: Vec<usize> = (0..n)
        .filter(|&u| !is_planted[u] && !actives.binary_search(&u).is_ok())
        .collect();

    // Posts. Planted influencers publish heavily supported brand posts.
    for &p in &planted {
        let count = 4 + b.rng.gen_range(0..3);
        for _ in 0..count {
            let polarity = if b.rng.gen_bool(0.95) {
                Polarity::NonNegative
            } else {
                Polarity::Negative
            };
            let likes = b.rng.gen_range(30..60);
            let favorites = b.rng.gen_range(10..25);
            b.add_post(p, polarity, likes, favorites);
        }
    }
    for &a in &actives {
        let count = 1 + usize::from(b.rng.gen_bool(0.5));
        for _ in 0..count {
            let polarity = if b.rng.gen_bool(0.85) {
                Polarity::NonNegative
            } else {
                Polarity::Negative
            };
            let likes = b.rng.gen_range(0..5);
            let favorites = b.rng.gen_range(0..3);
            b.add_post(a, polarity, likes, favorites);
        }
    }
    for &l in &lurkers {
        if b.rng.gen_bool(spec.brand_post_rate) {
            let polarity = if b.rng.gen_bool(0.85) {
                Polarity::NonNegative
            } else {
                Polarity::Negative
            };
            let likes = b.rng.gen_range(0..4);
            b.add_post(l, polarity, likes, 0);
        }
    }

    // Preferential-attachment follow backbone: each joining user follows
    // `attach_edges` earlier users, favoring the already popular.
    let mut pool: Vec<usize> = vec![0];
    for joiner in 1..n {
        let mut targets = std::collections::BTreeSet::new();
        let want = spec.attach_edges.min(joiner);
        let mut attempts = 0;
        while targets.len() < want && attempts < 20 * want {
            let t = pool[b.rng.gen_range(0..pool.len())];
            attempts += 1;
            if t != joiner {
                targets.insert(t);
            }
        }
        for &t in &targets {
            b.add_follow(joiner, t);
            pool.push(t);
        }
        pool.push(joiner);
    }

    // Planted boost: extra one-shot followers from anywhere.
    for &p in &planted {
        let extra = 2 * spec.planted_engagement;
        let followers = sample_distinct(&mut b.rng, &all, extra);
        for f in followers {
            b.add_follow(f, p);
        }
    }

    // Loyal fans: mutual engagement between each planted influencer and a
    // sample of regulars, which keeps both sides alive through pruning.
    for &p in &planted {
        let fans = sample_distinct(&mut b.rng, &actives, spec.planted_engagement);
        for f in fans {
            b.engage(f, p);
            if b.rng.gen_bool(0.5) {
                if let Some(&post) = pick(&mut b.rng, &b.posts_by_user[p].clone()) {
                    b.add_comment(post, f, Polarity::NonNegative, None);
                }
            }
            b.engage(p, f);
        }
    }

    // Planted influencers also engage each other.
    for &p in &planted {
        let others: Vec<usize> = planted.iter().copied().filter(|&q| q != p).collect();
        for q in sample_distinct(&mut b.rng, &others, 2) {
            b.engage(p, q);
        }
    }

    // Mutually engaged regulars form the connected core.
    for i in 0..actives.len() {
        let a = actives[i];
        let partners = 1 + b.rng.gen_range(0..3);
        for _ in 0..partners {
            let c = actives[b.rng.gen_range(0..actives.len())];
            if a != c {
                b.engage(a, c);
                b.engage(c, a);
            }
        }
    }

    // Lurker drive-bys: a comment or two, sometimes a reply, rarely repeated.
    let planted_posts: Vec<usize> = planted
        .iter()
        .flat_map(|&p| b.posts_by_user[p].clone())
        .collect();
    let post_count = b.posts.len();
    for &l in &lurkers {
        let hits = b.rng.gen_range(0..3);
        for _ in 0..hits {
            let post = if b.rng.gen_bool(0.5) && !planted_posts.is_empty() {
                planted_posts[b.rng.gen_range(0..planted_posts.len())]
            } else {
                b.rng.gen_range(0..post_count)
            };
            let polarity = if b.rng.gen_bool(0.85) {
                Polarity::NonNegative
            } else {
                Polarity::Negative
            };
            let parent = if b.rng.gen_bool(0.15) {
                pick(&mut b.rng, &b.comments_by_post[post].clone()).copied()
            } else {
                None
            };
            b.add_comment(post, l, polarity, parent);
        }
    }

    let follows = b
        .follows
        .iter()
        .map(|&(follower, followee)| FollowRelation {
            follower: b.user_ids[follower].clone(),
            followee: b.user_ids[followee].clone(),
        })
        .collect();
    let users = b
        .user_ids
        .iter()
        .enumerate()
        .map(|(i, id)| (id.clone(), is_planted[i]))
        .collect();
    let planted_ids = planted.iter().map(|&p| b.user_ids[p].clone()).collect();

    Ok(SyntheticCommunity {
        posts: b.posts,
        comments: b.comments,
        follows,
        planted: planted_ids,
        users,
    })
}
