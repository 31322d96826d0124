"""Single-byte teleop wire protocol, version 1.

One byte is one command; there is no framing, no checksum and no state.
The table below is normative: byte values are part of the public contract
and the teleop panel imports a generated copy of it.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Union

from .robot import LegId

WIRE_VERSION = 1


class JogDirection(Enum):
    UP = "Up"
    DOWN = "Down"


class Command(Enum):
    """The 26 teleop commands; each enum value is its wire byte."""

    FORWARD = "F"
    BACKWARD = "B"
    LEFT = "L"
    RIGHT = "R"
    FORWARD_LEFT = "G"
    FORWARD_RIGHT = "H"
    BACKWARD_LEFT = "I"
    BACKWARD_RIGHT = "J"
    PAIR_FRONT = "1"
    PAIR_MIDDLE = "2"
    PAIR_REAR = "3"
    LF_UP = "a"
    LF_DOWN = "b"
    LM_UP = "c"
    LM_DOWN = "d"
    LR_UP = "e"
    LR_DOWN = "f"
    RF_UP = "g"
    RF_DOWN = "h"
    RM_UP = "i"
    RM_DOWN = "j"
    RR_UP = "k"
    RR_DOWN = "l"
    PRIME_SET_A = "P"
    PRIME_SET_B = "Q"
    STOP = "S"

    @property
    def wire_byte(self) -> int:
        return ord(self.value)

    @property
    def jog_leg(self) -> Union[LegId, None]:
        if self.name.endswith(("_UP", "_DOWN")) and not self.name.startswith("PAIR"):
            return LegId[self.name.rsplit("_", 1)[0]]
        return None

    @property
    def jog_direction(self) -> Union[JogDirection, None]:
        if self.jog_leg is None:
            return None
        return JogDirection.UP if self.name.endswith("_UP") else JogDirection.DOWN

    @property
    def pair(self) -> Union[int, None]:
        return {"PAIR_FRONT": 1, "PAIR_MIDDLE": 2, "PAIR_REAR": 3}.get(self.name)


@dataclass(frozen=True)
class UnknownByte:
    """Decoder event for a byte outside the wire table; the stream continues."""

    value: int


class UnknownByteError(ValueError):
    def __init__(self, value: int):
        super().__init__(f"unmapped wire byte 0x{value:02x}")
        self.value = value


_BYTE_TO_COMMAND = {cmd.wire_byte: cmd for cmd in Command}
assert len(_BYTE_TO_COMMAND) == 26


def encode(cmd: Command) -> int:
    """Wire byte for a command (total over all 26)."""
    return cmd.wire_byte


def decode(byte: int) -> Command:
    """Inverse of encode; raises UnknownByteError for unmapped bytes."""
    try:
        return _BYTE_TO_COMMAND[byte]
    except KeyError:
        raise UnknownByteError(byte) from None


def decode_stream(data: Iterable[int]) -> list[Union[Command, UnknownByte]]:
    """Per-byte decode of a stream: one event per input byte, in order."""
    events: list[Union[Command, UnknownByte]] = []
    for byte in data:
        cmd = _BYTE_TO_COMMAND.get(byte)
        events.append(cmd if cmd is not None else UnknownByte(byte))
    return events


def wire_table() -> list[tuple[str, str]]:
    """(byte, command name) rows of the normative v1 table."""
    return [(cmd.value, cmd.name) for cmd in Command]
