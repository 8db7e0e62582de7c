from loguru import logger

from .version import REPORT_VERSION, __version__

# Library code stays quiet unless the CLI (or the caller) enables it.
logger.disable("halmos_kit")

__all__ = ["REPORT_VERSION", "__version__"]
