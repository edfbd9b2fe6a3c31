"""
log contains logger initialization operations.
"""
import sys
from loguru import logger


LIB = "py_qpp"

# stdout carries reports and series dumps; log records go to stderr
logger.configure(
    handlers=[
        {"sink": sys.stderr, "serialize": True},
    ]
)

logger.disable(LIB)


def enable(level: str = "DEBUG") -> None:
    """
    enable turns on the library's log records at the given level.

    Args:
        level (str, optional): The minimum level emitted. Defaults to "DEBUG".
    """
    logger.configure(
        handlers=[
            {"sink": sys.stderr, "serialize": True, "level": level},
        ]
    )
    logger.enable(LIB)
