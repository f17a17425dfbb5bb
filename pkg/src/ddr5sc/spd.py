"""Codec for the SPD memory-channel-bus-width descriptor byte (offset 0xEB).

The descriptor packs three fields into one byte:

    bits 7-5   number of sub-channels per DIMM (1 / 2 / 4 / 8)
    bits 4-3   bus extension per sub-channel, i.e. ECC width in bits
    bits 2-0   primary bus width per sub-channel (8 / 16 / 32 / 64 bits)

Reserved codes are hard errors, never a fabricated width: downstream
consumers (platform training simulation) must not see an invented value.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import ToolkitError

BYTE235_OFFSET = 235  # 0xEB
MIN_IMAGE_BYTES = BYTE235_OFFSET + 1

SUB_CHANNEL_COUNTS = {0b000: 1, 0b001: 2, 0b010: 4, 0b011: 8}
# Code 0b11 is reserved. The 0/4/8-bit values are provisional: only the
# field's meaning (ECC extension width per sub-channel) is certain.
BUS_EXTENSION_BITS = {0b00: 0, 0b01: 4, 0b10: 8}
# Linear width ladder, anchored at 0b010 -> 32. A dedicated test asserts the
# whole ladder so a standards discrepancy surfaces as a single failure.
PRIMARY_WIDTH_BITS = {0b000: 8, 0b001: 16, 0b010: 32, 0b011: 64}

_SUB_CHANNEL_CODES = {v: k for k, v in SUB_CHANNEL_COUNTS.items()}
_BUS_EXTENSION_CODES = {v: k for k, v in BUS_EXTENSION_BITS.items()}
_PRIMARY_WIDTH_CODES = {v: k for k, v in PRIMARY_WIDTH_BITS.items()}


class SpdError(ToolkitError):
    """Base for SPD decode failures."""


class ReservedCodeError(SpdError):
    """A bit field holds a code the descriptor layout reserves."""

    def __init__(self, field: str, code: int, nbits: int):
        self.field = field
        self.code = code
        super().__init__(
            f"reserved {field} code 0b{code:0{nbits}b} in bus-width descriptor"
        )


class ImageTooShortError(SpdError):
    def __init__(self, length: int):
        self.length = length
        super().__init__(
            f"SPD image is {length} bytes; offset 0xEB needs at least {MIN_IMAGE_BYTES}"
        )


class ModuleClass(Enum):
    SINGLE_SC = "SingleSC"
    STANDARD_DUAL_SC = "StandardDualSC"
    MULTI_SC = "MultiSC"
    NON_STANDARD_WIDTH = "NonStandardWidth"


def _field(byte: int, shift: int, nbits: int) -> int:
    return (byte >> shift) & ((1 << nbits) - 1)


@dataclass(frozen=True)
class SpdChannelBusWidth:
    """Decoded content of the bus-width descriptor byte."""

    sub_channel_count: int
    bus_extension_bits: int
    primary_bus_width_bits: int

    def __post_init__(self):
        if self.sub_channel_count not in _SUB_CHANNEL_CODES:
            raise ValueError(f"unrepresentable sub-channel count {self.sub_channel_count}")
        if self.bus_extension_bits not in _BUS_EXTENSION_CODES:
            raise ValueError(f"unrepresentable bus extension width {self.bus_extension_bits}")
        if self.primary_bus_width_bits not in _PRIMARY_WIDTH_CODES:
            raise ValueError(f"unrepresentable primary bus width {self.primary_bus_width_bits}")


def decode_byte235(raw: int) -> SpdChannelBusWidth:
    """Decode one descriptor byte, rejecting reserved codes.

    Raises ReservedCodeError naming the first offending field in bit order
    (sub-channel count, bus extension, primary width).
    """
    if not 0 <= raw <= 0xFF:
        raise ValueError(f"descriptor byte out of range: {raw}")
    sc_code = _field(raw, 5, 3)
    ext_code = _field(raw, 3, 2)
    width_code = _field(raw, 0, 3)
    if sc_code not in SUB_CHANNEL_COUNTS:
        raise ReservedCodeError("sub_channel_count", sc_code, 3)
    if ext_code not in BUS_EXTENSION_BITS:
        raise ReservedCodeError("bus_extension", ext_code, 2)
    if width_code not in PRIMARY_WIDTH_BITS:
        raise ReservedCodeError("primary_bus_width", width_code, 3)
    return SpdChannelBusWidth(
        sub_channel_count=SUB_CHANNEL_COUNTS[sc_code],
        bus_extension_bits=BUS_EXTENSION_BITS[ext_code],
        primary_bus_width_bits=PRIMARY_WIDTH_BITS[width_code],
    )


def encode_byte235(desc: SpdChannelBusWidth) -> int:
    """Inverse of decode_byte235; total for every constructible descriptor."""
    return (
        (_SUB_CHANNEL_CODES[desc.sub_channel_count] << 5)
        | (_BUS_EXTENSION_CODES[desc.bus_extension_bits] << 3)
        | _PRIMARY_WIDTH_CODES[desc.primary_bus_width_bits]
    )


def classify_module(desc: SpdChannelBusWidth) -> ModuleClass:
    """Classify a module purely from (sub-channel count, primary width)."""
    if desc.sub_channel_count > 2:
        return ModuleClass.MULTI_SC
    if desc.primary_bus_width_bits != 32:
        return ModuleClass.NON_STANDARD_WIDTH
    if desc.sub_channel_count == 1:
        return ModuleClass.SINGLE_SC
    return ModuleClass.STANDARD_DUAL_SC


def extract_byte235(image: bytes) -> int:
    """Return the bus-width descriptor byte from a raw SPD EEPROM dump."""
    if len(image) < MIN_IMAGE_BYTES:
        raise ImageTooShortError(len(image))
    return image[BYTE235_OFFSET]


def all_valid_descriptors() -> list[SpdChannelBusWidth]:
    """Every descriptor expressible without touching a reserved code."""
    return [
        SpdChannelBusWidth(sc, ext, width)
        for sc in SUB_CHANNEL_COUNTS.values()
        for ext in BUS_EXTENSION_BITS.values()
        for width in PRIMARY_WIDTH_BITS.values()
    ]
