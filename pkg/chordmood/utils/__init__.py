from .apply import apply_in_order
from .config import Settings, load_settings
from .logs import logger, set_verbosity
