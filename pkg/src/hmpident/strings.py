"""Canonical enumeration of binary strings.

Strings over {0, 1} are ordered shortest first, lexicographically within each
length, with the empty string first.  For a fixed length this coincides with
numeric order of the string read as a base-2 integer, which is what the
index-based table layout relies on.
"""
from __future__ import annotations

from .errors import AlphabetError

ALPHABET = "01"


def check_binary(v: str):
    """Raise AlphabetError if v contains a character outside {0, 1}."""
    if not set(v) <= {"0", "1"}:
        raise AlphabetError(f"not a binary string: {v!r}")


def string_index(v: str) -> int:
    """Index of v among the 2^len(v) strings of its length."""
    return int(v, 2) if v else 0


def strings_of_length(length: int) -> list[str]:
    if length == 0:
        return [""]
    return [format(i, f"0{length}b") for i in range(2 ** length)]


def strings_up_to(max_len: int) -> list[str]:
    """All 2^(max_len+1) - 1 strings of length <= max_len, canonical order."""
    out = []
    for length in range(max_len + 1):
        out.extend(strings_of_length(length))
    return out
