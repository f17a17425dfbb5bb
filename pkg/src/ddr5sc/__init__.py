"""Modeling and validation toolkit for single sub-channel (32-bit) DDR5 modules."""

__version__ = "0.1.0"

from .config import DieSpec, MemoryConfig, MemoryStandard  # noqa: F401
from .spd import ModuleClass, SpdChannelBusWidth  # noqa: F401
