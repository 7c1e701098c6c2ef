import struct

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from textspot.errors import (
    BadMagic,
    DuplicateSymbol,
    EmptyAlphabet,
    FormatError,
    MalformedLine,
    TruncatedPayload,
    UnknownScript,
    UnsupportedVersion,
    ValidationError,
)
from textspot.model_io import (
    Alphabet,
    WordAnnotation,
    parse_annotation,
    read_alphabet,
    read_annotations,
    read_tensor,
    write_alphabet,
    write_annotations,
    write_tensor,
)
from textspot.script_id import ScriptClass


def raw_tensor(dims, values, magic=b"E2ET", version=1, dtype=1):
    head = magic + bytes([version, dtype, len(dims)]) + bytes(10)
    return head + struct.pack(f"<{len(dims)}I", *dims) + struct.pack(f"<{len(values)}f", *values)


def test_read_tensor_from_hand_built_bytes(tmp_path):
    p = tmp_path / "t.e2et"
    p.write_bytes(raw_tensor([2, 3], [0, 1, 2, 3, 4, 5]))
    t = read_tensor(p)
    assert t.shape == (2, 3)
    assert t.dtype == np.float64
    assert t.tolist() == [[0, 1, 2], [3, 4, 5]]


def test_single_value_file_size(tmp_path):
    # 17-byte header, one 4-byte dim, one 4-byte value
    p = tmp_path / "t.e2et"
    write_tensor(np.zeros(1), p)
    assert p.stat().st_size == 17 + 4 + 4
    assert p.read_bytes() == raw_tensor([1], [0.0])


def test_header_declares_ndim(tmp_path):
    p = tmp_path / "t.e2et"
    write_tensor(np.zeros((7, 4, 4)), p)
    blob = p.read_bytes()
    assert blob[:4] == b"E2ET" and blob[4] == 1 and blob[5] == 1 and blob[6] == 3
    assert blob[7:17] == bytes(10)
    assert struct.unpack_from("<3I", blob, 17) == (7, 4, 4)
    assert len(blob) == 17 + 12 + 4 * 7 * 16


@pytest.mark.parametrize("bad", [np.float64(1.0), np.zeros((0, 3)), np.zeros([1] * 9)])
def test_write_rejects_invalid_dims(tmp_path, bad):
    with pytest.raises(ValidationError):
        write_tensor(bad, tmp_path / "t.e2et")


def test_truncated_payload(tmp_path):
    p = tmp_path / "t.e2et"
    p.write_bytes(raw_tensor([2, 3], [0, 1, 2, 3, 4]))
    with pytest.raises(TruncatedPayload):
        read_tensor(p)


def test_truncated_dims(tmp_path):
    p = tmp_path / "t.e2et"
    p.write_bytes(raw_tensor([2, 3], [])[:19])
    with pytest.raises(TruncatedPayload):
        read_tensor(p)


def test_bad_magic_and_version(tmp_path):
    p = tmp_path / "t.e2et"
    p.write_bytes(raw_tensor([1], [0], magic=b"NOPE"))
    with pytest.raises(BadMagic):
        read_tensor(p)
    p.write_bytes(b"E2")
    with pytest.raises(BadMagic):
        read_tensor(p)
    p.write_bytes(raw_tensor([1], [0], version=2))
    with pytest.raises(UnsupportedVersion):
        read_tensor(p)
    p.write_bytes(raw_tensor([1], [0], dtype=2))
    with pytest.raises(UnsupportedVersion):
        read_tensor(p)


def test_trailing_bytes_rejected(tmp_path):
    p = tmp_path / "t.e2et"
    p.write_bytes(raw_tensor([1], [0]) + b"\0")
    with pytest.raises(FormatError):
        read_tensor(p)


def test_errors_map_to_exit_classes():
    assert issubclass(TruncatedPayload, FormatError)
    assert issubclass(DuplicateSymbol, FormatError)
    assert issubclass(ValidationError, ValueError)


@settings(max_examples=50, deadline=None)
@given(arrays(np.float32, st.lists(st.integers(1, 4), min_size=1, max_size=4).map(tuple),
              elements=st.floats(-1e6, 1e6, width=32)))
def test_tensor_round_trip(tmp_path_factory, arr):
    p = tmp_path_factory.mktemp("rt") / "t.e2et"
    write_tensor(arr, p)
    back = read_tensor(p)
    assert back.shape == arr.shape
    assert np.array_equal(back.astype(np.float32), arr)
    q = p.with_name("u.e2et")
    write_tensor(back, q)
    assert q.read_bytes() == p.read_bytes()


def test_float64_payload_rounds_to_float32(tmp_path):
    p = tmp_path / "t.e2et"
    x = np.array([0.1, 1 / 3])
    write_tensor(x, p)
    assert np.array_equal(read_tensor(p), x.astype(np.float32).astype(np.float64))


# -- alphabets ----------------------------------------------------------------

def test_read_alphabet(tmp_path):
    p = tmp_path / "a.alpha"
    p.write_text("<blank>\na\nb\n", encoding="utf-8")
    a = read_alphabet(p)
    assert len(a) == 3
    assert a.index("a") == 1 and a.index("b") == 2
    assert a.decode([2, 1]) == "ba"


def test_duplicate_symbol(tmp_path):
    p = tmp_path / "a.alpha"
    p.write_text("<blank>\na\na\n", encoding="utf-8")
    with pytest.raises(DuplicateSymbol):
        read_alphabet(p)


def test_empty_alphabet(tmp_path):
    p = tmp_path / "a.alpha"
    p.write_text("<blank>\n", encoding="utf-8")
    with pytest.raises(EmptyAlphabet):
        read_alphabet(p)


def test_multi_codepoint_symbol_rejected(tmp_path):
    p = tmp_path / "a.alpha"
    p.write_text("<blank>\nab\n", encoding="utf-8")
    with pytest.raises(MalformedLine):
        read_alphabet(p)


def test_maximum_alphabet_size(tmp_path):
    symbols = [chr(0x4E00 + i) for i in range(7500)]
    p = tmp_path / "a.alpha"
    p.write_text("\n".join(["<blank>"] + symbols) + "\n", encoding="utf-8")
    assert len(read_alphabet(p)) == 7501
    with pytest.raises(ValidationError):
        Alphabet.from_symbols(symbols + ["x"])


def test_alphabet_round_trip_is_bijection(tmp_path):
    a = Alphabet.from_symbols("zyx,ع")
    p = tmp_path / "a.alpha"
    write_alphabet(a, p)
    b = read_alphabet(p)
    assert b == a
    for i in range(1, len(b)):
        assert b.index(b.symbols[i]) == i


# -- annotations ----------------------------------------------------------------

def test_parse_basic_line():
    a = parse_annotation("0,0,10,0,10,5,0,5,Latin,Hello")
    assert a.quad == ((0, 0), (10, 0), (10, 5), (0, 5))
    assert a.script is ScriptClass.LATIN
    assert a.transcription == "Hello"
    assert not a.dont_care


def test_dont_care_line():
    a = parse_annotation("0,0,1,0,1,1,0,1,None,###")
    assert a.dont_care and a.script is None


def test_transcription_keeps_commas():
    assert parse_annotation("0,0,1,0,1,1,0,1,Latin,a,b").transcription == "a,b"


@pytest.mark.parametrize("token,cls", [
    ("Arabic", ScriptClass.ARABIC), ("Chinese", ScriptClass.CJK), ("Japanese", ScriptClass.CJK),
    ("Korean", ScriptClass.HANGUL), ("Bangla", ScriptClass.BENGALI), ("Symbols", ScriptClass.SYMBOL),
    ("Mixed", None), ("Unknown", None), ("KATAKANA", ScriptClass.KATAKANA),
])
def test_script_aliases(token, cls):
    assert parse_annotation(f"0,0,1,0,1,1,0,1,{token},x").script is cls


def test_counter_clockwise_quad_is_reordered():
    a = parse_annotation("0,0,0,5,10,5,10,0,Latin,Hi")
    assert a.quad == ((0, 0), (10, 0), (10, 5), (0, 5))


def test_malformed_lines_carry_position(tmp_path):
    p = tmp_path / "gt.txt"
    p.write_text("0,0,1,0,1,1,0,1,Latin,ok\n0,0,1,0,x,1,0,1,Latin,bad\n", encoding="utf-8")
    with pytest.raises(MalformedLine) as info:
        read_annotations(p)
    assert info.value.lineno == 2
    assert "gt.txt" in str(info.value)


def test_too_few_fields_and_unknown_script():
    with pytest.raises(MalformedLine):
        parse_annotation("0,0,1,0,1,1,0,1,Latin")
    with pytest.raises(UnknownScript):
        parse_annotation("0,0,1,0,1,1,0,1,Klingon,x")


def test_non_convex_rejected_unless_dont_care():
    line = "0,0,10,0,2,2,0,10,Latin,x"
    with pytest.raises(MalformedLine):
        parse_annotation(line)
    assert parse_annotation(line.replace(",x", ",###")).dont_care
    assert parse_annotation(line, strict=False).transcription == "x"


def test_every_line_yields_a_record(tmp_path):
    p = tmp_path / "gt.txt"
    p.write_text("﻿0,0,1,0,1,1,0,1,Latin,a\r\n0,0,1,0,1,1,0,1,Latin,\n0,0,1,0,1,1,0,1,None,###\n",
                 encoding="utf-8")
    anns = read_annotations(p)
    assert [a.transcription for a in anns] == ["a", "", "###"]


def test_annotation_file_round_trip(tmp_path):
    anns = [
        WordAnnotation.make(((0.5, 1), (10.25, 1), (10.25, 6), (0.5, 6)), "Hi, there", ScriptClass.LATIN),
        WordAnnotation.make(((3, 3), (4, 3), (4, 4), (3, 4)), "###"),
        WordAnnotation.make(((1 / 3, 0), (2, 0), (2, 1), (1 / 3, 1)), "سلام",
                            ScriptClass.ARABIC),
    ]
    p = tmp_path / "gt.txt"
    write_annotations(anns, p)
    assert read_annotations(p) == anns
