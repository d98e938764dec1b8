#!/usr/bin/env python3
"""Regenerate the frozen Unicode property tables under src/generated/.

Run from the repository root after a Python upgrade if the bundled
Unicode data needs refreshing:

    python3 tools/gen_unicode_tables.py
"""
import sys
import unicodedata
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "src" / "generated"

MAX_CP = 0x110000


def category_ranges(prefixes):
    ranges = []
    start = None
    for cp in range(MAX_CP):
        if 0xD800 <= cp <= 0xDFFF:
            member = False
        else:
            member = unicodedata.category(chr(cp))[0] in prefixes
        if member and start is None:
            start = cp
        elif not member and start is not None:
            ranges.append((start, cp - 1))
            start = None
    if start is not None:
        ranges.append((start, MAX_CP - 1))
    return ranges


def write_ranges(name, ranges, fname):
    lines = [f"// Generated by tools/gen_unicode_tables.py (Unicode {unicodedata.unidata_version}). Do not edit."]
    lines.append(f"inline constexpr CodepointRange {name}[] = {{")
    for lo, hi in ranges:
        lines.append(f"    {{0x{lo:05X}, 0x{hi:05X}}},")
    lines.append("};")
    (OUT / fname).write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"{fname}: {len(ranges)} ranges")


def write_fold():
    pairs = []
    for cp in range(MAX_CP):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        low = chr(cp).lower()
        if len(low) == 1 and ord(low) != cp:
            pairs.append((cp, ord(low)))
    lines = [f"// Generated by tools/gen_unicode_tables.py (Unicode {unicodedata.unidata_version}). Do not edit."]
    lines.append("inline constexpr FoldPair kFoldPairs[] = {")
    for cp, low in pairs:
        lines.append(f"    {{0x{cp:05X}, 0x{low:05X}}},")
    lines.append("};")
    (OUT / "unicode_fold.inc").write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"unicode_fold.inc: {len(pairs)} pairs")


CHARSETS = [
    ("windows-1250", "cp1250"), ("windows-1251", "cp1251"),
    ("windows-1252", "cp1252"), ("windows-1253", "cp1253"),
    ("windows-1254", "cp1254"), ("windows-1255", "cp1255"),
    ("windows-1256", "cp1256"), ("windows-874", "cp874"),
    ("iso-8859-2", "iso8859-2"), ("iso-8859-5", "iso8859-5"),
    ("iso-8859-6", "iso8859-6"), ("iso-8859-7", "iso8859-7"),
    ("iso-8859-8", "iso8859-8"), ("iso-8859-9", "iso8859-9"),
    ("iso-8859-15", "iso8859-15"), ("koi8-r", "koi8-r"),
    ("tis-620", "tis-620"),
]


def write_charsets():
    lines = [f"// Generated by tools/gen_unicode_tables.py. High halves (0x80-0xFF) of single-byte charsets."]
    names = []
    for cs, codec in CHARSETS:
        ident = cs.replace("-", "_")
        entries = []
        for b in range(0x80, 0x100):
            try:
                ch = bytes([b]).decode(codec)
                entries.append(ord(ch))
            except UnicodeDecodeError:
                entries.append(0xFFFD)
        rows = [", ".join(f"0x{v:04X}" for v in entries[i:i + 8]) for i in range(0, 128, 8)]
        lines.append(f"inline constexpr char16_t kHigh_{ident}[128] = {{")
        for r in rows:
            lines.append(f"    {r},")
        lines.append("};")
        names.append((cs, ident))
    lines.append("inline constexpr SingleByteCharset kSingleByteCharsets[] = {")
    for cs, ident in names:
        lines.append(f"    {{\"{cs}\", kHigh_{ident}}},")
    lines.append("};")
    (OUT / "charset_tables.inc").write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"charset_tables.inc: {len(names)} charsets")


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    write_ranges("kLetterRanges", category_ranges({"L"}), "unicode_letters.inc")
    write_ranges("kMarkRanges", category_ranges({"M"}), "unicode_marks.inc")
    write_fold()
    write_charsets()
    return 0


if __name__ == "__main__":
    sys.exit(main())
