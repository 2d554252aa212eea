import functools
import inspect
import json
import logging
import sys
import time
import uuid
from typing import Any, Callable, Dict, Optional, Union

DEFAULT_FORMAT = '%(asctime)s [%(levelname)s] [%(name)s] [%(job_id)s] %(message)s'
JOB_FORMAT = '%(asctime)s [%(levelname)s] [JOB] [%(job_id)s] [%(command)s] %(message)s'


def _short_id() -> str:
    return uuid.uuid4().hex[:8]


class _JobIdDefault(logging.Filter):
    """Records from third-party code carry no job id; give them one."""

    def filter(self, record: logging.LogRecord) -> bool:
        if not hasattr(record, 'job_id'):
            record.job_id = 'N/A'
        if not hasattr(record, 'command'):
            record.command = '-'
        return True


class ExtliftLogger:

    def __init__(self, app_name: str = "extlift", log_level: int = logging.WARNING):
        self.root_logger = logging.getLogger(app_name)
        self.root_logger.setLevel(log_level)
        self.root_logger.propagate = False

        # stdout carries reports only
        if not self.root_logger.handlers:
            console_handler = logging.StreamHandler(sys.stderr)
            console_handler.setFormatter(logging.Formatter(DEFAULT_FORMAT))
            console_handler.addFilter(_JobIdDefault())
            self.root_logger.addHandler(console_handler)

        self.job_logger = self._create_job_logger(app_name)
        self._component_loggers: Dict[str, logging.Logger] = {}
        self.job_id: Optional[str] = None

    def _create_job_logger(self, app_name: str) -> logging.Logger:
        return logging.getLogger(f"{app_name}.jobs")

    def set_level(self, level: Union[int, str]) -> None:
        if isinstance(level, str):
            level = logging.getLevelName(level.upper())
        self.root_logger.setLevel(level)

    def new_job(self) -> str:
        self.job_id = _short_id()
        return self.job_id

    def get_component_logger(self, component_name: str) -> logging.Logger:
        if component_name not in self._component_loggers:
            logger = logging.getLogger(f"{self.root_logger.name}.{component_name}")
            self._component_loggers[component_name] = logger
        return self._component_loggers[component_name]

    def log_job(self,
                command: str,
                details: Dict[str, Any],
                job_id: Optional[str] = None,
                level: int = logging.INFO) -> None:
        extra = {
            'job_id': job_id or self.job_id or 'N/A',
            'command': command,
        }
        self.job_logger.log(level, f"{command}: {json.dumps(details, sort_keys=True, default=str)}", extra=extra)

    def log(self, level: int, message: str, job_id: Optional[str] = None, **kwargs) -> None:
        extra = {'job_id': job_id or self.job_id or 'N/A'}
        self.root_logger.log(level, message, extra=extra, **kwargs)

    def info(self, message: str, job_id: Optional[str] = None, **kwargs) -> None:
        self.log(logging.INFO, message, job_id, **kwargs)

    def error(self, message: str, job_id: Optional[str] = None, **kwargs) -> None:
        self.log(logging.ERROR, message, job_id, **kwargs)

    def warning(self, message: str, job_id: Optional[str] = None, **kwargs) -> None:
        self.log(logging.WARNING, message, job_id, **kwargs)

    def debug(self, message: str, job_id: Optional[str] = None, **kwargs) -> None:
        self.log(logging.DEBUG, message, job_id, **kwargs)


def _short(value: Any) -> str:
    text = repr(value)
    return text if len(text) <= 120 else text[:117] + "..."


def log_method_call(logger: Optional[Union[ExtliftLogger, logging.Logger]] = None,
                    level: int = logging.DEBUG):
    """Log CALL START/END/ERROR around a service method with a short call id and the duration."""

    def decorator(func: Callable) -> Callable:
        signature = inspect.signature(func)

        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            target = logger
            if target is None:
                if args and hasattr(args[0], '__class__'):
                    target = extlift_logger.get_component_logger(args[0].__class__.__name__.lower())
                else:
                    target = extlift_logger.root_logger
            log_obj = target.root_logger if isinstance(target, ExtliftLogger) else target
            extra = {'job_id': extlift_logger.job_id or 'N/A'}

            call_id = _short_id()
            bound = signature.bind(*args, **kwargs)
            bound.apply_defaults()
            safe_args = {k: _short(v) for k, v in bound.arguments.items() if k != 'self'}

            log_obj.log(level, f"CALL {func.__qualname__} START [id={call_id}] args={safe_args}", extra=extra)
            started = time.perf_counter()
            try:
                result = func(*args, **kwargs)
            except Exception as exc:
                elapsed = time.perf_counter() - started
                log_obj.log(logging.ERROR,
                            f"CALL {func.__qualname__} ERROR [id={call_id}] duration={elapsed:.4f}s exception={exc}",
                            extra=extra)
                raise
            elapsed = time.perf_counter() - started
            log_obj.log(level,
                        f"CALL {func.__qualname__} END [id={call_id}] duration={elapsed:.4f}s result={_short(result)}",
                        extra=extra)
            return result

        return wrapper

    return decorator


extlift_logger = ExtliftLogger()
