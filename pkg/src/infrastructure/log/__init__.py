from .main import bind_run_context, configure_logging
from .processors import serialize_to_json

__all__ = ("bind_run_context", "configure_logging", "serialize_to_json")
