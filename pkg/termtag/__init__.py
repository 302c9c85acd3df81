import click

from termtag.config import Config
from termtag.log import configure_logging

__version__ = '0.1.0'


def create_cli():
    @click.group(context_settings={'help_option_names': ['-h', '--help']})
    @click.version_option(__version__, prog_name='termtag')
    @click.option('--log-level', default=Config.LOG_LEVEL, show_default=True,
                  type=click.Choice(['DEBUG', 'INFO', 'WARNING', 'ERROR'], case_sensitive=False),
                  help='Verbosity of the diagnostic stream.')
    def cli(log_level):
        """Terminology-constrained MT corpus toolkit."""
        configure_logging(log_level)

    # Register commands
    from termtag.commands.annotate import annotate_command, strip_command
    from termtag.commands.bpe import bpe_apply_command, bpe_learn_command, bpe_undo_command
    from termtag.commands.evaluate import evaluate_command
    from termtag.commands.select import select_command, stats_command
    from termtag.commands.tokenize import tokenize_command

    for command in (annotate_command, strip_command, select_command, stats_command,
                    bpe_learn_command, bpe_apply_command, bpe_undo_command,
                    evaluate_command, tokenize_command):
        cli.add_command(command)

    return cli
