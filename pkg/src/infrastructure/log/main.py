import logging
import sys
from collections.abc import Sequence
from pathlib import Path

import structlog
from structlog.processors import (
    CallsiteParameter,
    CallsiteParameterAdder,
)

from src.configs import LoggerConfig

from .processors import get_render_processor

_SHARED_PROCESSORS = (
    structlog.stdlib.add_log_level,
    structlog.stdlib.add_logger_name,
    structlog.stdlib.ExtraAdder(),
    structlog.dev.set_exc_info,
    structlog.processors.TimeStamper(fmt="%Y-%m-%d %H:%M:%S.%f", utc=True),
    structlog.contextvars.merge_contextvars,
    structlog.processors.format_exc_info,
    CallsiteParameterAdder(
        (
            CallsiteParameter.MODULE,
            CallsiteParameter.FUNC_NAME,
            CallsiteParameter.LINENO,
        ),
    ),
)


def _formatter(render_json: bool, colors: bool) -> logging.Formatter:
    return structlog.stdlib.ProcessorFormatter(
        foreign_pre_chain=_SHARED_PROCESSORS,  # type: ignore
        processors=(
            structlog.stdlib.ProcessorFormatter.remove_processors_meta,
            get_render_processor(render_json_logs=render_json, colors=colors),
        ),
    )


def _resolve_log_file(path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    return path / "turan.log" if path.is_dir() else path


def _handlers(cfg: LoggerConfig) -> Sequence[logging.Handler]:
    # stdout is reserved for edge lists and JSON reports
    console = logging.StreamHandler(sys.stderr)
    console.set_name("default")
    console.setFormatter(_formatter(cfg.RENDER_JSON_LOGS, colors=sys.stderr.isatty()))
    handlers: list[logging.Handler] = [console]

    if cfg.FILE_PATH:
        file_handler = logging.FileHandler(_resolve_log_file(cfg.FILE_PATH))
        file_handler.set_name("file")
        file_handler.setFormatter(_formatter(cfg.RENDER_JSON_LOGS, colors=False))
        handlers.append(file_handler)

    for handler in handlers:
        handler.setLevel(cfg.LEVEL)
    return handlers


def configure_logging(cfg: LoggerConfig) -> None:
    logging.basicConfig(handlers=list(_handlers(cfg)), level=cfg.LEVEL, force=True)
    structlog.configure(
        processors=(
            *_SHARED_PROCESSORS,
            structlog.processors.StackInfoRenderer(),
            structlog.stdlib.PositionalArgumentsFormatter(),
            structlog.processors.UnicodeDecoder(),
            structlog.stdlib.ProcessorFormatter.wrap_for_formatter,
        ),
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,  # type: ignore
        cache_logger_on_first_use=True,
    )


def bind_run_context(**values: object) -> None:
    """Attach command-level fields (command, seed) to every subsequent log event."""
    structlog.contextvars.clear_contextvars()
    structlog.contextvars.bind_contextvars(**values)
