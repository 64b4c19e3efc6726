"""MSB-first bit writer/reader shared by the structure bitmap and index list."""

from .errors import TruncatedError


class BitWriter:
    """Accumulates bits MSB-first; the final byte is zero-padded."""

    def __init__(self):
        self._buf = bytearray()
        self._acc = 0
        self._nacc = 0  # bits currently in _acc (0..7)

    def write_bits(self, value: int, width: int) -> None:
        if width < 0 or (width == 0 and value):
            raise ValueError("bad width")
        if value < 0 or value >> width:
            raise ValueError(f"value {value} does not fit in {width} bits")
        for i in range(width - 1, -1, -1):
            self._acc = (self._acc << 1) | ((value >> i) & 1)
            self._nacc += 1
            if self._nacc == 8:
                self._buf.append(self._acc)
                self._acc = 0
                self._nacc = 0

    @property
    def bit_length(self) -> int:
        return len(self._buf) * 8 + self._nacc

    def getvalue(self) -> bytes:
        """Bytes written so far, last byte zero-padded. The writer stays usable."""
        out = bytearray(self._buf)
        if self._nacc:
            out.append(self._acc << (8 - self._nacc))
        return bytes(out)


class BitReader:
    """Reads bits MSB-first from a byte buffer."""

    def __init__(self, data: bytes, offset_bytes: int = 0):
        self._data = data
        self._pos = offset_bytes * 8  # absolute bit cursor

    @property
    def bits_read(self) -> int:
        return self._pos

    @property
    def bits_remaining(self) -> int:
        return len(self._data) * 8 - self._pos

    def read_bit(self) -> int:
        if self._pos >= len(self._data) * 8:
            raise TruncatedError("bit stream exhausted")
        byte = self._data[self._pos >> 3]
        bit = (byte >> (7 - (self._pos & 7))) & 1
        self._pos += 1
        return bit

    def read_bits(self, width: int) -> int:
        value = 0
        for _ in range(width):
            value = (value << 1) | self.read_bit()
        return value
