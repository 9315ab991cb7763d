//! Core engine for mining contribution skills from archived repository activity.
//!
//! The pipeline has four stages, each backed by one module here:
//!
//! - [`ingest`] produces an [`archive::ActivityArchive`] from a hosting
//!   platform's REST/GraphQL endpoints or from recorded response fixtures.
//! - [`distributions`] builds the population percentile baselines that
//!   percentile-based signals compare against.
//! - [`signals`] evaluates every boolean signal for one user, with
//!   machine-checkable evidence attached to each result.
//! - [`rating`] aggregates signal outcomes into 0-5 skill levels and
//!   assembles per-user reports; [`evaluation`] compares those reports
//!   against self-assessed skill levels.
//!
//! [`exclusion`] strips third-party library code (package-manager
//! installation folders) from all line counting.

pub mod archive;
pub mod distributions;
pub mod evaluation;
pub mod exclusion;
pub mod ingest;
pub mod rating;
pub mod signals;
pub mod timefmt;

pub use archive::{ActivityArchive, ArchiveBuilder, ArchiveError};
pub use distributions::{DistributionSet, DistributionTable, MetricId};
pub use exclusion::{ExclusionRuleSet, Language, LanguageMap};
pub use rating::{rate, Skill, SkillRating, SkillReport};
pub use signals::{SignalCode, SignalId, SignalResult};
