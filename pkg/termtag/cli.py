"""Process entry point: run one subcommand and turn the outcome into an exit status."""
import click

from termtag import create_cli


def run(argv=None):
    """Run the termtag command line and return its exit status"""
    cli = create_cli()
    try:
        result = cli.main(args=argv, prog_name='termtag', standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.Abort:
        click.echo('Aborted!', err=True)
        return 1
    return result if isinstance(result, int) else 0
