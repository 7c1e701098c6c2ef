"""Regenerate ``src/textspot/_script_table.py``.

Script values come from the Scripts.txt bundled with fontTools; the decimal
digit (Nd) ranges come from ``unicodedata2``, restricted to codepoints that
are assigned in the fontTools UCD so both sources describe the same version.

    pip install fonttools unicodedata2
    python tools/gen_script_table.py
"""
from __future__ import annotations

import re
from pathlib import Path

import unicodedata2
from fontTools import unicodedata as ftu
from fontTools.unicodedata import Scripts

OUT = Path(__file__).resolve().parents[1] / "src" / "textspot" / "_script_table.py"

SCRIPT_TO_CLASS = {
    "Latn": "LATIN",
    "Arab": "ARABIC",
    "Beng": "BENGALI",
    "Hang": "HANGUL",
    "Hani": "CJK",
    "Hira": "HIRAGANA",
    "Kana": "KATAKANA",
}


def _ucd_version() -> str:
    header = Path(Scripts.__file__).read_text(encoding="utf-8")[:2000]
    m = re.search(r"Scripts-(\d+\.\d+\.\d+)\.txt", header)
    if m is None:
        raise SystemExit("cannot find Scripts.txt version in fontTools")
    return m.group(1)


def _class_of(cp: int) -> str | None:
    ch = chr(cp)
    script = ftu.script(ch)
    if script != "Zzzz" and unicodedata2.category(ch) == "Nd":
        return "DIGIT"
    return SCRIPT_TO_CLASS.get(script)


def build_runs() -> list[tuple[int, int, str]]:
    runs: list[tuple[int, int, str]] = []
    current = None
    start = 0
    for cp in range(0x110000):
        cls = _class_of(cp)
        if cls != current:
            if current is not None:
                runs.append((start, cp - 1, current))
            current, start = cls, cp
    if current is not None:
        runs.append((start, 0x10FFFF, current))
    return runs


def main() -> None:
    version = _ucd_version()
    runs = build_runs()
    lines = [
        "# Generated by tools/gen_script_table.py; do not edit.",
        f"# Unicode {version}: Script property (Scripts.txt) plus General_Category=Nd.",
        "# Codepoints not covered by a range classify as SYMBOL.",
        "",
        f'UNICODE_VERSION = "{version}"',
        "",
        "# (first, last, class name), sorted and non-overlapping",
        "RANGES = (",
    ]
    lines += [f'    (0x{a:04X}, 0x{b:04X}, "{c}"),' for a, b, c in runs]
    lines.append(")")
    OUT.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {len(runs)} ranges (Unicode {version}) to {OUT}")


if __name__ == "__main__":
    main()
