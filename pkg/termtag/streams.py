"""File and stream helpers shared by the commands.

A path of ``-`` stands for stdin or stdout. File outputs go to temporary
files next to their destination and replace it only when the command
succeeds, so a failing command never leaves partial files behind.
"""
import os
import tempfile
import unicodedata
from contextlib import ExitStack, contextmanager, suppress

import click

STDIO = '-'


def normalize(text):
    """NFC-normalize a line of input text"""
    return unicodedata.normalize('NFC', text)


def open_input(path):
    """Open a UTF-8 text input, ``-`` meaning stdin"""
    return click.open_file(path, 'r', encoding='utf-8')


def read_lines(stream):
    """Yield lines without their line terminator, NFC-normalized"""
    for line in stream:
        yield normalize(line.rstrip('\n').rstrip('\r'))


def _staging_file(path):
    directory = os.path.dirname(os.path.abspath(path))
    return tempfile.NamedTemporaryFile('w', encoding='utf-8', newline='\n', dir=directory,
                                       prefix=f'.{os.path.basename(path)}.', delete=False)


@contextmanager
def open_outputs(*paths):
    """Open several UTF-8 outputs that are all published or all discarded"""
    staged = []
    try:
        with ExitStack() as stack:
            sinks = []
            for path in paths:
                if path == STDIO:
                    sinks.append(stack.enter_context(click.open_file(STDIO, 'w',
                                                                     encoding='utf-8')))
                    continue
                sink = stack.enter_context(_staging_file(path))
                staged.append((sink.name, path))
                sinks.append(sink)
            yield sinks
    except BaseException:
        for staging, _ in staged:
            with suppress(FileNotFoundError):
                os.unlink(staging)
        raise
    for staging, path in staged:
        os.replace(staging, path)


def write_lines(sink, lines):
    count = 0
    for line in lines:
        sink.write(line)
        sink.write('\n')
        count += 1
    return count
