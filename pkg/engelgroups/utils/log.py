import logging
import sys
from typing import List, Optional, Union

LOG_FORMAT = "{asctime}:{name}:{levelname}: {message}"
LOG_FORMATTER = logging.Formatter(LOG_FORMAT, style="{")
STDOUT_NAME = "stdout_stream_handler"
STDERR_NAME = "stderr_stream_handler"
LOGFILE_HANDLE_NAME = "logfile_file_handler"
PACKAGE_NAME = __name__.split(".")[0]


class _ExcludeWarningsFilter(logging.Filter):
    def filter(self, record):  # noqa
        """Keep warnings and errors off stdout; they go to stderr."""
        return record.levelno < logging.WARNING


def verbose(logfile: Optional[str] = None, override: bool = False) -> None:
    """Turn on progress messages of the verification suites.

    Suites report tested counts, switches from exhaustive to sampled mode
    and inconclusive verdicts through the package loggers.

    Parameters
    ----------
    logfile : str, optional
        Path of a file that receives a copy of every package log record.
    override : bool
        ``True`` silences the package instead, which is what the package
        ``__init__`` does on import. Default is ``False``.
    """
    if not isinstance(override, bool):
        raise ValueError("override argument must be a boolean!")
    _set_verbose(not override)
    for logger in _package_loggers():
        handlers = [h.name for h in logger.handlers]
        if logfile is None:
            if LOGFILE_HANDLE_NAME in handlers:
                handler = next(h for h in logger.handlers if h.name == LOGFILE_HANDLE_NAME)
                logger.removeHandler(handler)
        elif LOGFILE_HANDLE_NAME not in handlers:
            _set_logfile(logger, logfile)

        # a file handler per logger already records everything once
        logger.propagate = not isinstance(logfile, str)


def set_level(level: Union[int, str]) -> None:
    """Set the threshold of every package logger (e.g. ``"WARNING"`` for quiet runs)."""
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
        if not isinstance(level, int):
            raise ValueError(f"Unknown log level {level!r}")
    for logger in _package_loggers():
        logger.setLevel(level)


def _get_all_loggers() -> List[logging.Logger]:
    """Get all loggers"""
    loggers = [logging.getLogger()]  # get the root logger
    return loggers + [logging.getLogger(name) for name in logging.root.manager.loggerDict]


def _package_loggers() -> List[logging.Logger]:
    return [lg for lg in _get_all_loggers() if lg.name.split(".")[0] == PACKAGE_NAME]


def _init_logger(name: str) -> logging.Logger:
    """Initialize a module logger with stdout (INFO) and stderr (WARNING) handlers.

    Parameters
    ----------
    name : str
        Logger name, normally the module ``__name__``

    Returns
    -------
    logging.Logger
    """
    logger = logging.getLogger(name)
    logger.setLevel(logging.INFO)
    if {h.name for h in logger.handlers} >= {STDOUT_NAME, STDERR_NAME}:
        return logger

    stream_handler = logging.StreamHandler(sys.stdout)
    stream_handler.setLevel(logging.INFO)
    stream_handler.set_name(STDOUT_NAME)
    stream_handler.setFormatter(LOG_FORMATTER)
    stream_handler.addFilter(_ExcludeWarningsFilter())
    logger.addHandler(stream_handler)

    err_stream_handler = logging.StreamHandler(sys.stderr)
    err_stream_handler.setLevel(logging.WARNING)
    err_stream_handler.set_name(STDERR_NAME)
    err_stream_handler.setFormatter(LOG_FORMATTER)
    logger.addHandler(err_stream_handler)
    return logger


def _set_verbose(verbose: bool) -> None:
    if not verbose:
        logging.disable(logging.WARNING)
    else:
        logging.disable(logging.NOTSET)


def _set_logfile(logger: logging.Logger, logfile: Optional[str] = None) -> logging.Logger:
    """Adds log file handler to logger"""
    if not logfile:
        raise ValueError("Please provide logfile path")
    file_handler = logging.FileHandler(logfile)
    file_handler.set_name(LOGFILE_HANDLE_NAME)
    file_handler.setFormatter(LOG_FORMATTER)
    logger.addHandler(file_handler)
    return logger
