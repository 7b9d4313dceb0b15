#!/usr/bin/env python3
"""Regenerate src/langsteer/data/byte_level_map.json.

Byte-level subword vocabularies store each raw byte as a printable character:
printable ASCII and most of Latin-1 map to themselves, every remaining byte
value is assigned the next codepoint at or above U+0100. The file stores the
char used for each byte value 0..255, in order.
"""

import json
import sys
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src" / "langsteer" / "data" / "byte_level_map.json"


def build():
    keep = (
        list(range(ord("!"), ord("~") + 1))
        + list(range(0xA1, 0xAC + 1))
        + list(range(0xAE, 0xFF + 1))
    )
    chars = {}
    n = 0
    for b in range(256):
        if b in keep:
            chars[b] = chr(b)
        else:
            chars[b] = chr(0x100 + n)
            n += 1
    return [chars[b] for b in range(256)]


def main():
    byte_to_char = build()
    assert len(set(byte_to_char)) == 256
    OUT.write_text(
        json.dumps({"byte_to_char": byte_to_char}, ensure_ascii=False) + "\n",
        encoding="utf-8",
    )
    print(f"wrote {OUT}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
