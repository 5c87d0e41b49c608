import logging
from contextvars import ContextVar

current_instance: ContextVar[str] = ContextVar(
    "current_instance", default="indcomplex"
)


def logfilter(record: logging.LogRecord) -> bool:
    """Prefix the record with the instance being computed."""
    builder = []
    builder.append(current_instance.get())
    builder.append(str(record.msg))
    record.msg = " ".join(builder)
    return True


logger = logging.getLogger("indcomplex")
logger.addFilter(logfilter)
console_handler = logging.StreamHandler()
formatter = logging.Formatter("%(asctime)s [%(levelname)s] %(message)s", "%H:%M:%S")
console_handler.setFormatter(formatter)
logger.addHandler(console_handler)
