"""Run configuration validation and the error boundary for commands."""
from dataclasses import dataclass, field, fields as dataclass_fields
from functools import wraps

import click
from marshmallow import Schema, ValidationError, fields, post_load, validate

from termtag.config import Config
from termtag.errors import ConfigError, TermtagError
from termtag.matching import CasingPolicy, PolicyKind
from termtag.models.record import Mode
from termtag.tokenization.rules import SchemeKind

COMMANDS = ('annotate', 'strip', 'select', 'stats', 'bpe-learn', 'bpe-apply', 'bpe-undo',
            'evaluate', 'tokenize')


@dataclass(frozen=True)
class RunConfig:
    command: str
    mode: str = Mode.TADA.value
    policy: str = PolicyKind.TRAIN_REFERENCE_MATCH.value
    rate: float = Config.ANNOTATION_RATE
    seed: int = Config.SEED
    casing: str = Config.CASING
    scheme: str = SchemeKind.WHITESPACE.value
    lowercase: bool = False
    lang: str = 'en'
    workers: int = Config.WORKERS
    batch_size: int = Config.BATCH_SIZE
    window_sizes: tuple = field(default_factory=lambda: tuple(Config.WINDOW_SIZES))
    term_weight: float = Config.TERM_WEIGHT
    num_merges: int = Config.NUM_MERGES
    min_frequency: int = Config.MIN_FREQUENCY
    end_of_word_marker: str = ''
    factor: int = 1
    paths: dict = field(default_factory=dict)


def _choices(enum):
    return [member.value for member in enum]


class RunConfigSchema(Schema):
    command = fields.String(required=True, validate=validate.OneOf(COMMANDS))
    mode = fields.String(validate=validate.OneOf([Mode.TADA.value, Mode.MASK.value]))
    policy = fields.String(validate=validate.OneOf(_choices(PolicyKind)))
    rate = fields.Float(validate=validate.Range(min=0, max=1))
    seed = fields.Integer()
    casing = fields.String(validate=validate.OneOf(_choices(CasingPolicy)))
    scheme = fields.String(validate=validate.OneOf(_choices(SchemeKind)))
    lowercase = fields.Boolean()
    lang = fields.String(validate=validate.Length(min=1))
    workers = fields.Integer(validate=validate.Range(min=1))
    batch_size = fields.Integer(validate=validate.Range(min=1))
    window_sizes = fields.List(fields.Integer(validate=validate.Range(min=1)),
                               validate=validate.Length(min=1))
    term_weight = fields.Float(validate=validate.Range(min=1))
    num_merges = fields.Integer(validate=validate.Range(min=1))
    min_frequency = fields.Integer(validate=validate.Range(min=1))
    end_of_word_marker = fields.String()
    factor = fields.Integer(validate=validate.Range(min=1))
    paths = fields.Dict(keys=fields.String(), values=fields.Raw(allow_none=True))

    @post_load
    def make_config(self, data, **kwargs):
        if 'window_sizes' in data:
            data['window_sizes'] = tuple(data['window_sizes'])
        return RunConfig(**data)


_RUN_CONFIG_FIELDS = frozenset(item.name for item in dataclass_fields(RunConfig))


def load_run_config(command, **options):
    """Validate command options into a RunConfig; paths are kept as given"""
    data = {'command': command, 'paths': {}}
    for key, value in options.items():
        if value is None:
            continue
        if key in _RUN_CONFIG_FIELDS:
            data[key] = list(value) if isinstance(value, tuple) else value
        else:
            data['paths'][key] = value
    try:
        return RunConfigSchema().load(data)
    except ValidationError as e:
        raise ConfigError(_format_errors(e.messages)) from e


def _format_errors(messages):
    parts = []
    for name, problems in sorted(messages.items()):
        if isinstance(problems, dict):
            problems = [message for nested in problems.values() for message in nested]
        parts.append(f"--{name.replace('_', '-')}: {' '.join(map(str, problems))}")
    return 'invalid options: ' + '; '.join(parts)


def handle_errors(f):
    """Decorator turning termtag errors into a clean exit with the error's status"""
    @wraps(f)
    def decorated_function(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except TermtagError as e:
            exception = click.ClickException(e.message)
            exception.exit_code = e.exit_code
            raise exception from e
        except OSError as e:
            raise click.ClickException(f'{e.strerror or e}: {e.filename}') from e

    return decorated_function
