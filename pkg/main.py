"""Main CLI entry point for the k-cactus toolkit."""

import sys

import click

from src.commands.bound import bound_command
from src.commands.classify import classify_command
from src.commands.common import EXIT_USAGE
from src.commands.decompose import decompose_command
from src.commands.enumerate_graphs import enumerate_command
from src.commands.generate import generate_command
from src.commands.history import history_command
from src.commands.verify import verify_command


class CactusGroup(click.Group):
    """Command group whose usage errors exit with status 1."""

    def main(self, args=None, prog_name=None, complete_var=None, standalone_mode=True, **extra):
        try:
            return super().main(
                args=args,
                prog_name=prog_name,
                complete_var=complete_var,
                standalone_mode=False,
                **extra
            )
        except click.exceptions.Abort:
            click.echo("Aborted!", err=True)
            sys.exit(EXIT_USAGE)
        except click.ClickException as e:
            e.show()
            sys.exit(EXIT_USAGE)


@click.group(cls=CactusGroup)
def cli():
    """k-cactus recognition, bounds, extremal graphs and verification."""
    pass


cli.add_command(classify_command)
cli.add_command(decompose_command)
cli.add_command(bound_command)
cli.add_command(generate_command)
cli.add_command(enumerate_command)
cli.add_command(verify_command)
cli.add_command(history_command)


if __name__ == '__main__':
    cli()
