"""Exception hierarchy shared by every termtag module.

Each error carries the message shown on the diagnostic stream and the process
exit status the command line reports for it.
"""


class TermtagError(Exception):
    exit_code = 1

    def __init__(self, message, exit_code=None):
        super().__init__(message)
        self.message = message
        if exit_code is not None:
            self.exit_code = exit_code

    def __str__(self):
        return self.message


class ConfigError(TermtagError):
    """Invalid flag values or environment configuration"""
    exit_code = 2


class TerminologyFormatError(TermtagError):
    """Malformed or empty terminology file"""


class CorpusFormatError(TermtagError):
    """Misaligned or malformed corpus files"""


class RecordFormatError(TermtagError):
    """Sidecar and annotated text that do not agree"""


class AnnotationError(TermtagError):
    """Invalid constraints or broken tag structure"""


class ReservedSymbolError(AnnotationError):
    """A tag or mask symbol appears as an ordinary corpus token"""


class MatcherError(TermtagError):
    pass


class BPEError(TermtagError):
    pass


class MetricError(TermtagError):
    pass
