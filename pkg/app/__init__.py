# app package

# Initialize logging configuration
from core.logging_config import setup_logging
setup_logging()
