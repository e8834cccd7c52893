# Configuration settings for gammalab
# This file contains every default the library and the command line rely on

class Config:
    """
    Configuration class that holds all gammalab defaults.

    These settings control how the Stirling series is truncated, how far
    arguments are shifted before the series is used, and how many digits the
    exact oracles carry. Nothing here is read from the environment: the
    command line flags are the only way to override a value.
    """

    # Truncation settings
    # SERIES_CAP is the largest number of series terms ever summed.
    # The default series is built with one extra term so the first omitted
    # term is always available as the error estimate.
    SERIES_CAP = 30
    DEFAULT_TERMS = "auto"  # "auto" = smallest-term rule, otherwise an integer

    # Argument reduction
    # Arguments with Re z below this are shifted up with Gamma(z+1) = z Gamma(z)
    SHIFT_THRESHOLD = 8.0
    # Largest accepted threshold (one complex log is summed per shift step)
    MAX_SHIFT_THRESHOLD = 10000.0

    # Exact oracle settings
    ORACLE_DIGITS = 40  # Decimal digits for sqrt(pi), sqrt(2 pi) and deviations
    PI_DIGITS = 80      # digits of the rational pi constant

    # Logging
    # Logs go to stderr only so that table and CSV output stays reproducible
    LOG_LEVEL = "WARNING"
    LOG_FORMAT = "%(asctime)s %(levelname)s [%(name)s] %(message)s"
