"""Application configuration."""
import os

# Search bounds
AMBIENT_BOUND = int(os.getenv("WILDCOVER_AMBIENT_BOUND", 30))
CLOSURE_BOUND = int(os.getenv("WILDCOVER_CLOSURE_BOUND", 1000000))
ORDER_BOUND_EXPONENT = int(os.getenv("WILDCOVER_ORDER_BOUND_EXPONENT", 3))

# Fields with at most this many elements multiply through log/antilog tables
TABLE_LIMIT = int(os.getenv("WILDCOVER_TABLE_LIMIT", 16384))

# Logging
LOG_LEVEL = os.getenv("WILDCOVER_LOG_LEVEL", "WARNING").upper()
LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
