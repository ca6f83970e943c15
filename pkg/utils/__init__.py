"""
Logging setup and record serialisation.
"""

from .logging import setup_logging
from .records import read_records, write_records

__all__ = ['setup_logging', 'read_records', 'write_records']
