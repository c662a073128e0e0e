use thiserror::Error;

/// Everything that ends a command before it produces a report. All of
/// these exit with status 2; failed checks are reports, not errors.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    /// Flags parse but describe an invalid instance.
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Lattice(#[from] lozenge_lattice::Error),
    #[error(transparent)]
    Regions(#[from] lozenge_regions::Error),
    #[error(transparent)]
    Count(#[from] lozenge_count::Error),
    #[error(transparent)]
    Formula(#[from] lozenge_formulas::Error),
    #[error(transparent)]
    Condensation(#[from] lozenge_condensation::Error),
    #[error(transparent)]
    Correlation(#[from] lozenge_correlations::Error),
}
