//! Dataset CSV ingestion and artifact emission.
//!
//! Dataset schemas (headers required, UTF-8, comma-separated):
//!
//! - `posts.csv`:    `post_id,author_id,polarity,likes,favorites,text`
//! - `comments.csv`: `comment_id,post_id,author_id,parent_comment_id,polarity,text`
//! - `follows.csv`:  `follower_id,followee_id`
//! - `users.csv`:    `user_id,verified` (optional file, verified in {0,1})
//! - `lexicon.csv`:  `term,polarity`
//!
//! Emitted dataset files re-ingest losslessly.

use std::collections::HashSet;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use crate::engagement::SentimentLexicon;
use crate::error::{Error, Result};
use crate::evaluation::CoverageCurve;
use crate::graph::{Comment, FollowRelation, Polarity, Post, UserId};
use crate::netstats::NetworkSummary;
use crate::potential::RankingResult;

pub const POSTS_HEADER: &[&str] = &["post_id", "author_id", "polarity", "likes", "favorites", "text"];
pub const COMMENTS_HEADER: &[&str] = &[
    "comment_id",
    "post_id",
    "author_id",
    "parent_comment_id",
    "polarity",
    "text",
];
pub const FOLLOWS_HEADER: &[&str] = &["follower_id", "followee_id"];
pub const USERS_HEADER: &[&str] = &["user_id", "verified"];
pub const LEXICON_HEADER: &[&str] = &["term", "polarity"];

/// Validated record collections read from disk.
#[derive(Debug, Clone)]
pub struct Dataset {
    pub posts: Vec<Post>,
    pub comments: Vec<Comment>,
    pub follows: Vec<FollowRelation>,
    pub verified: Option<HashSet<UserId>>,
    pub warnings: Vec<String>,
}

struct RowReader {
    file: PathBuf,
    reader: csv::Reader<File>,
}

impl RowReader {
    fn open(path: &Path, header: &[&str]) -> Result<Self> {
        if !path.is_file() {
            return Err(Error::MissingInput(path.to_path_buf()));
        }
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(true)
            .flexible(false)
            .from_path(path)?;
        let got: Vec<String> = reader
            .headers()
            .map_err(|_| bad_header(path, header))?
            .iter()
            .map(|s| s.trim().to_string())
            .collect();
        if got != header {
            return Err(bad_header(path, header));
        }
        Ok(RowReader {
            file: path.to_path_buf(),
            reader,
        })
    }

    fn rows(&mut self) -> csv::StringRecordsIter<'_, File> {
        self.reader.records()
    }
}

fn bad_header(path: &Path, expected: &[&str]) -> Error {
    Error::BadHeader {
        file: path.to_path_buf(),
        expected: expected.join(","),
    }
}

fn bad_row(file: &Path, line: u64, column: &str, message: impl Into<String>) -> Error {
    Error::BadRow {
        file: file.to_path_buf(),
        line,
        column: column.to_string(),
        message: message.into(),
    }
}

fn record_line(record: &csv::StringRecord) -> u64 {
    record.position().map(|p| p.line()).unwrap_or(0)
}

fn parse_user(file: &Path, line: u64, column: &str, raw: &str) -> Result<UserId> {
    UserId::new(raw).map_err(|_| bad_row(file, line, column, "empty user id"))
}

fn parse_count(file: &Path, line: u64, column: &str, raw: &str) -> Result<u64> {
    raw.trim()
        .parse::<u64>()
        .map_err(|_| bad_row(file, line, column, format!("expected a non-negative count, got `{raw}`")))
}

fn parse_polarity(file: &Path, line: u64, column: &str, raw: &str) -> Result<Polarity> {
    Polarity::parse(raw)
        .ok_or_else(|| bad_row(file, line, column, format!("polarity must be +1 or -1, got `{raw}`")))
}

fn optional(raw: &str) -> Option<String> {
    if raw.is_empty() {
        None
    } else {
        Some(raw.to_string())
    }
}

pub fn read_posts(path: &Path) -> Result<Vec<Post>> {
    let mut reader = RowReader::open(path, POSTS_HEADER)?;
    let file = reader.file.clone();
    let mut posts = Vec::new();
    for record in reader.rows() {
        let record = record?;
        let line = record_line(&record);
        posts.push(Post {
            post_id: non_empty(&file, line, "post_id", &record[0])?,
            author: parse_user(&file, line, "author_id", &record[1])?,
            polarity: parse_polarity(&file, line, "polarity", &record[2])?,
            likes: parse_count(&file, line, "likes", &record[3])?,
            favorites: parse_count(&file, line, "favorites", &record[4])?,
            text: optional(&record[5]),
        });
    }
    Ok(posts)
}

fn non_empty(file: &Path, line: u64, column: &str, raw: &str) -> Result<String> {
    if raw.is_empty() {
        Err(bad_row(file, line, column, "value must not be empty"))
    } else {
        Ok(raw.to_string())
    }
}

pub fn read_comments(path: &Path) -> Result<Vec<Comment>> {
    let mut reader = RowReader::open(path, COMMENTS_HEADER)?;
    let file = reader.file.clone();
    let mut comments = Vec::new();
    for record in reader.rows() {
        let record = record?;
        let line = record_line(&record);
        let polarity = match record[4].trim() {
            "" => None,
            raw => Some(parse_polarity(&file, line, "polarity", raw)?),
        };
        comments.push(Comment {
            comment_id: non_empty(&file, line, "comment_id", &record[0])?,
            post_id: non_empty(&file, line, "post_id", &record[1])?,
            author: parse_user(&file, line, "author_id", &record[2])?,
            parent_comment_id: optional(&record[3]),
            polarity,
            text: optional(&record[5]),
        });
    }
    Ok(comments)
}

/// Reads follows; duplicate pairs are dropped with a warning.
pub fn read_follows(path: &Path) -> Result<(Vec<FollowRelation>, Vec<String>)> {
    let mut reader = RowReader::open(path, FOLLOWS_HEADER)?;
    let file = reader.file.clone();
    let mut follows = Vec::new();
    let mut seen: HashSet<(UserId, UserId)> = HashSet::new();
    let mut warnings = Vec::new();
    for record in reader.rows() {
        let record = record?;
        let line = record_line(&record);
        let follower = parse_user(&file, line, "follower_id", &record[0])?;
        let followee = parse_user(&file, line, "followee_id", &record[1])?;
        if follower == followee {
            return Err(bad_row(
                &file,
                line,
                "followee_id",
                "a user cannot follow themselves",
            ));
        }
        if seen.insert((follower.clone(), followee.clone())) {
            follows.push(FollowRelation { follower, followee });
        } else {
            warnings.push(format!(
                "{}:{line}: duplicate follow {follower} -> {followee} ignored",
                file.display()
            ));
        }
    }
    Ok((follows, warnings))
}

pub fn read_users(path: &Path) -> Result<HashSet<UserId>> {
    let mut reader = RowReader::open(path, USERS_HEADER)?;
    let file = reader.file.clone();
    let mut verified = HashSet::new();
    for record in reader.rows() {
        let record = record?;
        let line = record_line(&record);
        let user = parse_user(&file, line, "user_id", &record[0])?;
        match record[1].trim() {
            "1" => {
                verified.insert(user);
            }
            "0" => {}
            raw => {
                return Err(bad_row(
                    &file,
                    line,
                    "verified",
                    format!("verified must be 0 or 1, got `{raw}`"),
                ));
            }
        }
    }
    Ok(verified)
}

pub fn read_lexicon(path: &Path) -> Result<SentimentLexicon> {
    let mut reader = RowReader::open(path, LEXICON_HEADER)?;
    let file = reader.file.clone();
    let mut entries = Vec::new();
    for record in reader.rows() {
        let record = record?;
        let line = record_line(&record);
        let term = non_empty(&file, line, "term", &record[0])?;
        let polarity = parse_polarity(&file, line, "polarity", &record[1])?;
        entries.push((term, polarity));
    }
    SentimentLexicon::new(entries)
}

/// Read the whole dataset. `users` and `lexicon` are optional; without a
/// lexicon the built-in demonstration lexicon is used by callers.
pub fn ingest(
    posts: &Path,
    comments: &Path,
    follows: &Path,
    users: Option<&Path>,
) -> Result<Dataset> {
    let posts = read_posts(posts)?;
    let comments = read_comments(comments)?;
    let (follows, warnings) = read_follows(follows)?;
    let verified = users.map(read_users).transpose()?;
    Ok(Dataset {
        posts,
        comments,
        follows,
        verified,
        warnings,
    })
}

fn writer(path: &Path) -> Result<csv::Writer<File>> {
    Ok(csv::Writer::from_path(path)?)
}

pub fn write_posts(path: &Path, posts: &[Post]) -> Result<()> {
    let mut w = writer(path)?;
    w.write_record(POSTS_HEADER)?;
    for p in posts {
        w.write_record([
            p.post_id.as_str(),
            p.author.as_str(),
            p.polarity.as_csv(),
            &p.likes.to_string(),
            &p.favorites.to_string(),
            p.text.as_deref().unwrap_or(""),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_comments(path: &Path, comments: &[Comment]) -> Result<()> {
    let mut w = writer(path)?;
    w.write_record(COMMENTS_HEADER)?;
    for c in comments {
        w.write_record([
            c.comment_id.as_str(),
            c.post_id.as_str(),
            c.author.as_str(),
            c.parent_comment_id.as_deref().unwrap_or(""),
            c.polarity.map(|p| p.as_csv()).unwrap_or(""),
            c.text.as_deref().unwrap_or(""),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_follows(path: &Path, follows: &[FollowRelation]) -> Result<()> {
    let mut w = writer(path)?;
    w.write_record(FOLLOWS_HEADER)?;
    for f in follows {
        w.write_record([f.follower.as_str(), f.followee.as_str()])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_users(path: &Path, users: &[(UserId, bool)]) -> Result<()> {
    let mut w = writer(path)?;
    w.write_record(USERS_HEADER)?;
    for (id, verified) in users {
        w.write_record([id.as_str(), if *verified { "1" } else { "0" }])?;
    }
    w.flush()?;
    Ok(())
}

/// `ranking.csv`: `rank,user_id,phi,score_network,score_brand,value_indv`.
pub fn write_ranking(path: &Path, ranking: &RankingResult) -> Result<()> {
    let mut w = writer(path)?;
    w.write_record(["rank", "user_id", "phi", "score_network", "score_brand", "value_indv"])?;
    for (i, e) in ranking.entries.iter().enumerate() {
        w.write_record([
            (i + 1).to_string(),
            e.user.to_string(),
            e.phi.to_string(),
            e.score_network.to_string(),
            e.score_brand.to_string(),
            e.value.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// `baseline.csv`: `rank,user_id,score,method`, one block per method.
pub fn write_baseline(path: &Path, rankings: &[crate::baselines::BaselineRanking]) -> Result<()> {
    let mut w = writer(path)?;
    w.write_record(["rank", "user_id", "score", "method"])?;
    for ranking in rankings {
        for (i, (user, score)) in ranking.entries.iter().enumerate() {
            w.write_record([
                (i + 1).to_string(),
                user.to_string(),
                score.to_string(),
                ranking.method.to_string(),
            ])?;
        }
    }
    w.flush()?;
    Ok(())
}

/// `scores.csv`: `user_id,score_network,score_brand,value_indv` for every node.
pub fn write_scores(
    path: &Path,
    ids: &[UserId],
    network: &[f64],
    brand: &[f64],
    values: &[f64],
) -> Result<()> {
    let mut w = writer(path)?;
    w.write_record(["user_id", "score_network", "score_brand", "value_indv"])?;
    for (i, id) in ids.iter().enumerate() {
        w.write_record([
            id.to_string(),
            network[i].to_string(),
            brand[i].to_string(),
            values[i].to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// `comparison.csv`: `method,n_percent,coverage`.
pub fn write_comparison(path: &Path, curves: &[CoverageCurve]) -> Result<()> {
    let mut w = writer(path)?;
    w.write_record(["method", "n_percent", "coverage"])?;
    for curve in curves {
        for &(pct, coverage) in &curve.points {
            w.write_record([curve.method.as_str(), &pct.to_string(), &coverage.to_string()])?;
        }
    }
    w.flush()?;
    Ok(())
}

/// `verified.csv`: `method,verified_count,total`.
pub fn write_verified(path: &Path, rows: &[(String, usize, usize)]) -> Result<()> {
    let mut w = writer(path)?;
    w.write_record(["method", "verified_count", "total"])?;
    for (method, count, total) in rows {
        w.write_record([method.as_str(), &count.to_string(), &total.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

/// `ccdf.csv`: `kind,x,ccdf` for the in- and out-degree distributions.
pub fn write_ccdf(
    path: &Path,
    in_points: &[(u64, f64)],
    out_points: &[(u64, f64)],
) -> Result<()> {
    let mut w = writer(path)?;
    w.write_record(["kind", "x", "ccdf"])?;
    for &(x, p) in in_points {
        w.write_record(["in", &x.to_string(), &p.to_string()])?;
    }
    for &(x, p) in out_points {
        w.write_record(["out", &x.to_string(), &p.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_stats_json(path: &Path, summary: &NetworkSummary) -> Result<()> {
    let mut f = BufWriter::new(File::create(path)?);
    serde_json::to_writer_pretty(&mut f, summary)?;
    f.write_all(b"\n")?;
    f.flush()?;
    Ok(())
}

pub fn write_json<T: serde::Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut f = BufWriter::new(File::create(path)?);
    serde_json::to_writer_pretty(&mut f, value)?;
    f.write_all(b"\n")?;
    f.flush()?;
    Ok(())
}

/// Parse a `key = value` config file: one pair per line, `#` comments and
/// blank lines ignored.
pub fn parse_config_file(path: &Path) -> Result<Vec<(String, String)>> {
    let raw = std::fs::read_to_string(path)
        .map_err(|_| Error::MissingInput(path.to_path_buf()))?;
    let mut pairs = Vec::new();
    for (lineno, line) in raw.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(Error::Config(format!(
                "{}:{}: expected `key = value`, got `{line}`",
                path.display(),
                lineno + 1
            )));
        };
        pairs.push((key.trim().to_string(), value.trim().to_string()));
    }
    Ok(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn write_tmp(dir: &tempfile::TempDir, name: &str, contents: &str) -> PathBuf {
        let path = dir.path().join(name);
        let mut f = File::create(&path).unwrap();
        f.write_all(contents.as_bytes()).unwrap();
        path
    }

    #[test]
    fn empty_comments_file_with_header_is_fine() {
        let dir = tempfile::tempdir().unwrap();
        let path = write_tmp(
            &dir,
            "comments.csv",
            "comment_id,post_id,author_id,parent_comment_id,polarity,text\n",
        );
        assert!(read_comments(&path).unwrap().is_empty());
    }

    #[test]
    fn missing_header_is_a_hard_error() {
        let dir = tempfile::tempdir().unwrap();
        let path = write_tmp(&dir, "posts.csv", "id,author\np1,a\n");
        assert!(matches!(read_posts(&path), Err(Error::BadHeader { .. })));
    }

    #[test]
    fn out_of_domain_polarity_is_a_row_error() {
        let dir = tempfile::tempdir().unwrap();
        let path = write_tmp(
            &dir,
            "posts.csv",
            "post_id,author_id,polarity,likes,favorites,text\np1,a,2,0,0,\n",
        );
        let err = read_posts(&path).unwrap_err();
        match err {
            Error::BadRow { line, column, .. } => {
                assert_eq!(line, 2);
                assert_eq!(column, "polarity");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn duplicate_follows_warn_and_count_once() {
        let dir = tempfile::tempdir().unwrap();
        let path = write_tmp(
            &dir,
            "follows.csv",
            "follower_id,followee_id\nb,a\nb,a\nc,a\n",
        );
        let (follows, warnings) = read_follows(&path).unwrap();
        assert_eq!(follows.len(), 2);
        assert_eq!(warnings.len(), 1);
        assert!(warnings[0].contains("duplicate follow"));
    }

    #[test]
    fn self_follow_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = write_tmp(&dir, "follows.csv", "follower_id,followee_id\na,a\n");
        assert!(matches!(read_follows(&path), Err(Error::BadRow { .. })));
    }

    #[test]
    fn dataset_round_trips_through_disk() {
        let dir = tempfile::tempdir().unwrap();
        let posts = vec![Post {
            post_id: "p1".into(),
            author: UserId::new("alice").unwrap(),
            polarity: Polarity::Negative,
            likes: 3,
            favorites: 0,
            text: Some("battery died, want a refund".into()),
        }];
        let comments = vec![Comment {
            comment_id: "c1".into(),
            post_id: "p1".into(),
            author: UserId::new("bob").unwrap(),
            parent_comment_id: None,
            polarity: Some(Polarity::NonNegative),
            text: None,
        }];
        let follows = vec![FollowRelation {
            follower: UserId::new("bob").unwrap(),
            followee: UserId::new("alice").unwrap(),
        }];
        let p = dir.path().join("posts.csv");
        let c = dir.path().join("comments.csv");
        let f = dir.path().join("follows.csv");
        write_posts(&p, &posts).unwrap();
        write_comments(&c, &comments).unwrap();
        write_follows(&f, &follows).unwrap();
        let ds = ingest(&p, &c, &f, None).unwrap();
        assert_eq!(ds.posts, posts);
        assert_eq!(ds.comments, comments);
        assert_eq!(ds.follows, follows);
        assert!(ds.warnings.is_empty());
    }

    #[test]
    fn users_file_reads_verified_set() {
        let dir = tempfile::tempdir().unwrap();
        let path = write_tmp(&dir, "users.csv", "user_id,verified\na,1\nb,0\nc,1\n");
        let verified = read_users(&path).unwrap();
        assert_eq!(verified.len(), 2);
        assert!(verified.contains(&UserId::new("a").unwrap()));
        let bad = write_tmp(&dir, "bad.csv", "user_id,verified\na,yes\n");
        assert!(matches!(read_users(&bad), Err(Error::BadRow { .. })));
    }

    #[test]
    fn config_file_parses_key_value_pairs() {
        let dir = tempfile::tempdir().unwrap();
        let path = write_tmp(
            &dir,
            "run.conf",
            "# comment\nprune_min_weight = 3\n\ntop_percent=5\n",
        );
        let pairs = parse_config_file(&path).unwrap();
        assert_eq!(
            pairs,
            vec![
                ("prune_min_weight".to_string(), "3".to_string()),
                ("top_percent".to_string(), "5".to_string())
            ]
        );
        let bad = write_tmp(&dir, "bad.conf", "no equals sign\n");
        assert!(matches!(parse_config_file(&bad), Err(Error::Config(_))));
    }

    #[test]
    fn lexicon_file_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = write_tmp(&dir, "lexicon.csv", "term,polarity\ngood,1\nbad,-1\n");
        let lex = read_lexicon(&path).unwrap();
        assert_eq!(lex.sign_of("good"), Some(Polarity::NonNegative));
        assert_eq!(lex.sign_of("bad"), Some(Polarity::Negative));
    }
}
