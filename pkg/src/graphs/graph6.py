"""
graph6 encoding and decoding.

Layout: N(n) followed by the upper triangle of the adjacency matrix read
column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed six bits per
byte, each byte offset by 63. N(n) is one byte for n <= 62 and '~' plus three
bytes for n <= 258047.
"""
from pathlib import Path
from typing import Iterator, List, Union

from config.logging_config import get_logger
from src.errors import GraphFormatError
from src.graphs.graph import Graph

logger = get_logger(__name__)

HEADER = b">>graph6<<"
MAX_ORDER = 258047


def _size_bytes(n: int) -> bytes:
    if n < 0 or n > MAX_ORDER:
        raise GraphFormatError(f"graph6 supports orders 0..{MAX_ORDER}, got {n}")
    if n <= 62:
        return bytes([n + 63])
    return bytes([126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])


def encode_graph6(g: Graph, header: bool = False) -> bytes:
    """graph6 bytes of an unweighted graph (no trailing newline)."""
    if g.is_weighted:
        raise GraphFormatError("graph6 cannot represent edge weights")
    n = g.order
    bits: List[int] = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i + 1, j + 1) else 0)
    bits.extend([0] * (-len(bits) % 6))
    body = bytearray()
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = (value << 1) | b
        body.append(value + 63)
    return (HEADER if header else b"") + _size_bytes(n) + bytes(body)


def parse_graph6(data: Union[bytes, str]) -> Graph:
    """Decode one graph6 record; errors name the offending byte offset."""
    if isinstance(data, str):
        data = data.encode("ascii", errors="replace")
    data = data.rstrip(b"\r\n")
    start = 0
    if data.startswith(HEADER):
        start = len(HEADER)
    if start >= len(data):
        raise GraphFormatError("empty graph6 record", offset=start)
    for pos in range(start, len(data)):
        if not 63 <= data[pos] <= 126:
            raise GraphFormatError(f"byte {data[pos]!r} outside the printable range 63..126", offset=pos)

    pos = start
    if data[pos] != 126:
        n = data[pos] - 63
        pos += 1
    else:
        if pos + 1 < len(data) and data[pos + 1] == 126:
            raise GraphFormatError("orders above 258047 are not supported", offset=pos + 1)
        if pos + 4 > len(data):
            raise GraphFormatError("truncated length header", offset=len(data))
        n = 0
        for k in range(1, 4):
            n = (n << 6) | (data[pos + k] - 63)
        if n <= 62:
            raise GraphFormatError(f"non-canonical long length header for order {n}", offset=pos)
        pos += 4

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < nbytes:
        raise GraphFormatError(
            f"truncated adjacency data: order {n} needs {nbytes} bytes, found {len(body)}",
            offset=len(data),
        )
    if len(body) > nbytes:
        raise GraphFormatError("trailing bytes after adjacency data", offset=pos + nbytes)

    edges = []
    i, j = 0, 1
    for k in range(nbits):
        byte = body[k // 6] - 63
        if (byte >> (5 - k % 6)) & 1:
            edges.append((i + 1, j + 1))
        i += 1
        if i == j:
            i, j = 0, j + 1
    pad = nbytes * 6 - nbits
    if pad and (body[-1] - 63) & ((1 << pad) - 1):
        raise GraphFormatError("nonzero padding bits", offset=len(data) - 1)
    return Graph(n, edges)


def read_graph6_file(path: Union[str, Path]) -> Iterator[Graph]:
    """Stream graphs from a graph6 file, one record per non-blank line."""
    path = Path(path)
    logger.info(f"Reading graph6 records from {path}")
    count = 0
    with path.open("rb") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                yield parse_graph6(line)
            except GraphFormatError as exc:
                raise GraphFormatError(f"{path}:{line_no}: {exc}")
            count += 1
    logger.info(f"Read {count} graphs from {path}")
