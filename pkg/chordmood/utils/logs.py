# utils/logs.py
import logging

# Configure the root logger
logging.basicConfig(
    level=logging.WARNING, format="%(asctime)s - %(name)s - %(levelname)s - %(message)s"
)

# Create a global logger instance
logger = logging.getLogger("chordmood")


def set_verbosity(verbosity: int) -> None:
    """
    Raises the package log level: 0 keeps WARNING, 1 gives INFO, 2 or more gives DEBUG.
    """
    if verbosity >= 2:
        logger.setLevel(logging.DEBUG)
    elif verbosity == 1:
        logger.setLevel(logging.INFO)
    else:
        logger.setLevel(logging.WARNING)
