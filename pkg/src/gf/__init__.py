"""Exact finite field arithmetic over galois FieldArrays."""
from src.core.logging import ensure_logging

# every library module imports this package; default to filtered stderr logging
ensure_logging()
