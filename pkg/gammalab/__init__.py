"""
gammalab: log Gamma and Gamma through Stirling's series.

Every series coefficient is generated exactly from the recursion for the
coefficients of the expansion, and the results are checked against exact
identities of the gamma function.
"""

# Import the command-line toolkit and our shared CLI plumbing
import click  # Command groups, options and parameter types

from .cli import GammaLabGroup, configure_logging  # Exit-code mapping and stderr logging

__version__ = "1.0.0"


def create_cli() -> click.Group:
    """
    Factory that builds the gammalab command group.

    Each feature package keeps its commands in its own commands.py; they are
    imported and registered here, after logging is set up.
    """

    # The root group maps click's own exit codes onto 0 / 1 / 2
    @click.group(cls=GammaLabGroup)
    @click.version_option(version=__version__, prog_name="gammalab")
    @click.option("-v", "--verbose", count=True, help="More logging on stderr (-v info, -vv debug).")
    def cli(verbose):
        """Stirling-series evaluation of log Gamma and Gamma with exact verification."""
        # Logs go to stderr so stdout carries only the table or CSV
        configure_logging(verbose)

    # Import and register the Bernoulli command
    # This prints the exact c_j and B_j table
    from .bernoulli.commands import bernoulli_cmd
    cli.add_command(bernoulli_cmd)

    # Import and register the series coefficient command
    from .stirling.commands import coeffs_cmd
    cli.add_command(coeffs_cmd)

    # Import and register the evaluation commands
    # eval handles one complex argument, table a real grid
    from .gamma.commands import eval_cmd, table_cmd
    cli.add_command(eval_cmd)
    cli.add_command(table_cmd)

    # Import and register the verification commands
    # These compare the series against exact integer and half-integer values
    from .verify.commands import cestimate_cmd, error_profile_cmd
    cli.add_command(cestimate_cmd)
    cli.add_command(error_profile_cmd)

    return cli
