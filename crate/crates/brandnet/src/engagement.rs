//! Brand-engagement scoring: comment polarity (dictionary fallback),
//! per-post support rate, and the per-user brand score.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{Comment, Polarity, Post, UserId};

/// Word list mapping lowercase terms to a sentiment sign.
#[derive(Debug, Clone)]
pub struct SentimentLexicon {
    entries: HashMap<String, Polarity>,
}

impl SentimentLexicon {
    /// Terms are lowercased; empty or duplicate terms are rejected.
    pub fn new(entries: impl IntoIterator<Item = (String, Polarity)>) -> Result<Self> {
        let mut map = HashMap::new();
        for (term, polarity) in entries {
            let term = term.trim().to_lowercase();
            if term.is_empty() || map.insert(term.clone(), polarity).is_some() {
                return Err(Error::InvalidLexiconTerm(term));
            }
        }
        Ok(SentimentLexicon { entries: map })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn sign_of(&self, term: &str) -> Option<Polarity> {
        self.entries.get(term).copied()
    }

    /// The demonstration lexicon shipped with the crate.
    pub fn builtin() -> Self {
        let raw = include_str!("../assets/lexicon.csv");
        let mut entries = Vec::new();
        for line in raw.lines().skip(1) {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let (term, sign) = line.split_once(',').expect("builtin lexicon is well-formed");
            let polarity = Polarity::parse(sign).expect("builtin lexicon polarity");
            entries.push((term.to_string(), polarity));
        }
        SentimentLexicon::new(entries).expect("builtin lexicon is valid")
    }
}

/// Classify text by summing the signs of matched lexicon terms
/// (whole word, case-insensitive). A negative sum is negative;
/// everything else, including empty text, is non-negative.
pub fn classify_polarity(text: &str, lexicon: &SentimentLexicon) -> Polarity {
    let mut sum = 0i64;
    for token in text
        .split(|c: char| !c.is_alphanumeric())
        .filter(|t| !t.is_empty())
    {
        let token = token.to_lowercase();
        if let Some(p) = lexicon.sign_of(&token) {
            sum += p.sign() as i64;
        }
    }
    if sum < 0 {
        Polarity::Negative
    } else {
        Polarity::NonNegative
    }
}

/// A comment's polarity: the recorded value wins, the lexicon is the fallback.
pub fn resolve_polarity(comment: &Comment, lexicon: &SentimentLexicon) -> Polarity {
    comment
        .polarity
        .unwrap_or_else(|| classify_polarity(comment.text.as_deref().unwrap_or(""), lexicon))
}

/// Reaction tallies and support rate for one post.
#[derive(Debug, Clone, PartialEq)]
pub struct PostSupport {
    pub post_id: String,
    pub n_pos_com: u64,
    pub n_neg_com: u64,
    pub n_favorite: u64,
    pub n_like: u64,
    /// Positive reactions over total reactions, 0 for an unread post.
    pub support: f64,
}

/// Tally a post's reactions. Comments must belong to the post and carry a
/// resolved polarity (an unresolved comment falls into the non-negative
/// bucket). Replies count toward their post like any other comment.
pub fn support_rate(post: &Post, comments: &[&Comment]) -> PostSupport {
    let mut n_pos_com = 0;
    let mut n_neg_com = 0;
    for c in comments {
        debug_assert_eq!(c.post_id, post.post_id, "comment belongs to the post");
        match c.polarity.unwrap_or(Polarity::NonNegative) {
            Polarity::NonNegative => n_pos_com += 1,
            Polarity::Negative => n_neg_com += 1,
        }
    }
    let n_com = n_pos_com + n_neg_com;
    let n_pos = n_pos_com + post.favorites + post.likes;
    let n_total = n_com + post.favorites + post.likes;
    let support = if n_total == 0 {
        0.0
    } else {
        n_pos as f64 / n_total as f64
    };
    PostSupport {
        post_id: post.post_id.clone(),
        n_pos_com,
        n_neg_com,
        n_favorite: post.favorites,
        n_like: post.likes,
        support,
    }
}

/// Brand score over one user's posts: the signed sum of polarity x support.
pub fn brand_score(posts: &[(Polarity, f64)]) -> f64 {
    posts.iter().map(|(p, s)| p.sign() * s).sum()
}

/// Per-node brand scores over a fixed node population, index-aligned with it.
#[derive(Debug, Clone)]
pub struct BrandScores {
    ids: Vec<UserId>,
    pub score: Vec<f64>,
}

impl BrandScores {
    pub fn ids(&self) -> &[UserId] {
        &self.ids
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    #[cfg(test)]
    pub(crate) fn fixture(ids: Vec<UserId>, score: Vec<f64>) -> Self {
        assert_eq!(ids.len(), score.len());
        BrandScores { ids, score }
    }
}

/// Score every node in `population`: resolve comment polarities, compute a
/// support rate per post, and sum polarity x support over each author's posts.
/// Users without posts score 0.
pub fn brand_scores(
    population: &[UserId],
    posts: &[Post],
    comments: &[Comment],
    lexicon: &SentimentLexicon,
) -> BrandScores {
    let mut by_post: HashMap<&str, Vec<Comment>> = HashMap::new();
    for c in comments {
        let mut resolved = c.clone();
        resolved.polarity = Some(resolve_polarity(c, lexicon));
        by_post.entry(c.post_id.as_str()).or_default().push(resolved);
    }

    let index: HashMap<&UserId, usize> = population
        .iter()
        .enumerate()
        .map(|(i, id)| (id, i))
        .collect();
    let mut score = vec![0.0; population.len()];
    for post in posts {
        let Some(&author) = index.get(&post.author) else {
            continue;
        };
        let owned = by_post.get(post.post_id.as_str());
        let refs: Vec<&Comment> = owned.map(|v| v.iter().collect()).unwrap_or_default();
        let support = support_rate(post, &refs);
        score[author] += post.polarity.sign() * support.support;
    }
    BrandScores {
        ids: population.to_vec(),
        score,
    }
}
