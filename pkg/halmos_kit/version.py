__version__ = "0.1.0"

REPORT_VERSION = "halmos-kit/1"
