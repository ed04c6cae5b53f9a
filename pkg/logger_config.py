import logging

from configuration import loggingFormat, loggingLevel

ROOT = 'cliffhc'


def get_logger(module=None):
    """Logger for one module, a child of the shared 'cliffhc' logger that owns the handler."""
    root = logging.getLogger(ROOT)

    # Only add a new handler if the logger doesn't have any
    if not root.handlers:
        stream_handler = logging.StreamHandler()
        stream_handler.setFormatter(logging.Formatter(loggingFormat))
        root.addHandler(stream_handler)
        root.setLevel(getattr(logging, loggingLevel.upper()))

    return root.getChild(module) if module else root


def set_level(level):
    logging.getLogger(ROOT).setLevel(getattr(logging, level.upper()))
