import logging
import sys

LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s %(message)s'

_handler = None


def configure_logging(level='INFO', stream=None):
    """Send termtag logs to the diagnostic stream, one event per line"""
    global _handler
    logger = logging.getLogger('termtag')
    if _handler is not None:
        logger.removeHandler(_handler)
    _handler = logging.StreamHandler(stream or sys.stderr)
    _handler.setFormatter(logging.Formatter(LOG_FORMAT))
    logger.addHandler(_handler)
    logger.setLevel(level.upper() if isinstance(level, str) else level)
    return logger


def kv(**fields):
    """Render fields as key=value pairs for a log line"""
    return ' '.join(f'{key}={value}' for key, value in fields.items())
