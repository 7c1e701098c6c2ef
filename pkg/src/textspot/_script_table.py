# Generated by tools/gen_script_table.py; do not edit.
# Unicode 17.0.0: Script property (Scripts.txt) plus General_Category=Nd.
# Codepoints not covered by a range classify as SYMBOL.

UNICODE_VERSION = "17.0.0"

# (first, last, class name), sorted and non-overlapping
RANGES = (
    (0x0030, 0x0039, "DIGIT"),
    (0x0041, 0x005A, "LATIN"),
    (0x0061, 0x007A, "LATIN"),
    (0x00AA, 0x00AA, "LATIN"),
    (0x00BA, 0x00BA, "LATIN"),
    (0x00C0, 0x00D6, "LATIN"),
    (0x00D8, 0x00F6, "LATIN"),
    (0x00F8, 0x02B8, "LATIN"),
    (0x02E0, 0x02E4, "LATIN"),
    (0x0600, 0x0604, "ARABIC"),
    (0x0606, 0x060B, "ARABIC"),
    (0x060D, 0x061A, "ARABIC"),
    (0x061C, 0x061E, "ARABIC"),
    (0x0620, 0x063F, "ARABIC"),
    (0x0641, 0x064A, "ARABIC"),
    (0x0656, 0x065F, "ARABIC"),
    (0x0660, 0x0669, "DIGIT"),
    (0x066A, 0x066F, "ARABIC"),
    (0x0671, 0x06DC, "ARABIC"),
    (0x06DE, 0x06EF, "ARABIC"),
    (0x06F0, 0x06F9, "DIGIT"),
    (0x06FA, 0x06FF, "ARABIC"),
    (0x0750, 0x077F, "ARABIC"),
    (0x07C0, 0x07C9, "DIGIT"),
    (0x0870, 0x0891, "ARABIC"),
    (0x0897, 0x08E1, "ARABIC"),
    (0x08E3, 0x08FF, "ARABIC"),
    (0x0966, 0x096F, "DIGIT"),
    (0x0980, 0x0983, "BENGALI"),
    (0x0985, 0x098C, "BENGALI"),
    (0x098F, 0x0990, "BENGALI"),
    (0x0993, 0x09A8, "BENGALI"),
    (0x09AA, 0x09B0, "BENGALI"),
    (0x09B2, 0x09B2, "BENGALI"),
    (0x09B6, 0x09B9, "BENGALI"),
    (0x09BC, 0x09C4, "BENGALI"),
    (0x09C7, 0x09C8, "BENGALI"),
    (0x09CB, 0x09CE, "BENGALI"),
    (0x09D7, 0x09D7, "BENGALI"),
    (0x09DC, 0x09DD, "BENGALI"),
    (0x09DF, 0x09E3, "BENGALI"),
    (0x09E6, 0x09EF, "DIGIT"),
    (0x09F0, 0x09FE, "BENGALI"),
    (0x0A66, 0x0A6F, "DIGIT"),
    (0x0AE6, 0x0AEF, "DIGIT"),
    (0x0B66, 0x0B6F, "DIGIT"),
    (0x0BE6, 0x0BEF, "DIGIT"),
    (0x0C66, 0x0C6F, "DIGIT"),
    (0x0CE6, 0x0CEF, "DIGIT"),
    (0x0D66, 0x0D6F, "DIGIT"),
    (0x0DE6, 0x0DEF, "DIGIT"),
    (0x0E50, 0x0E59, "DIGIT"),
    (0x0ED0, 0x0ED9, "DIGIT"),
    (0x0F20, 0x0F29, "DIGIT"),
    (0x1040, 0x1049, "DIGIT"),
    (0x1090, 0x1099, "DIGIT"),
    (0x1100, 0x11FF, "HANGUL"),
    (0x17E0, 0x17E9, "DIGIT"),
    (0x1810, 0x1819, "DIGIT"),
    (0x1946, 0x194F, "DIGIT"),
    (0x19D0, 0x19D9, "DIGIT"),
    (0x1A80, 0x1A89, "DIGIT"),
    (0x1A90, 0x1A99, "DIGIT"),
    (0x1B50, 0x1B59, "DIGIT"),
    (0x1BB0, 0x1BB9, "DIGIT"),
    (0x1C40, 0x1C49, "DIGIT"),
    (0x1C50, 0x1C59, "DIGIT"),
    (0x1D00, 0x1D25, "LATIN"),
    (0x1D2C, 0x1D5C, "LATIN"),
    (0x1D62, 0x1D65, "LATIN"),
    (0x1D6B, 0x1D77, "LATIN"),
    (0x1D79, 0x1DBE, "LATIN"),
    (0x1E00, 0x1EFF, "LATIN"),
    (0x2071, 0x2071, "LATIN"),
    (0x207F, 0x207F, "LATIN"),
    (0x2090, 0x209C, "LATIN"),
    (0x212A, 0x212B, "LATIN"),
    (0x2132, 0x2132, "LATIN"),
    (0x214E, 0x214E, "LATIN"),
    (0x2160, 0x2188, "LATIN"),
    (0x2C60, 0x2C7F, "LATIN"),
    (0x2E80, 0x2E99, "CJK"),
    (0x2E9B, 0x2EF3, "CJK"),
    (0x2F00, 0x2FD5, "CJK"),
    (0x3005, 0x3005, "CJK"),
    (0x3007, 0x3007, "CJK"),
    (0x3021, 0x3029, "CJK"),
    (0x302E, 0x302F, "HANGUL"),
    (0x3038, 0x303B, "CJK"),
    (0x3041, 0x3096, "HIRAGANA"),
    (0x309D, 0x309F, "HIRAGANA"),
    (0x30A1, 0x30FA, "KATAKANA"),
    (0x30FD, 0x30FF, "KATAKANA"),
    (0x3131, 0x318E, "HANGUL"),
    (0x31F0, 0x31FF, "KATAKANA"),
    (0x3200, 0x321E, "HANGUL"),
    (0x3260, 0x327E, "HANGUL"),
    (0x32D0, 0x32FE, "KATAKANA"),
    (0x3300, 0x3357, "KATAKANA"),
    (0x3400, 0x4DBF, "CJK"),
    (0x4E00, 0x9FFF, "CJK"),
    (0xA620, 0xA629, "DIGIT"),
    (0xA722, 0xA787, "LATIN"),
    (0xA78B, 0xA7DC, "LATIN"),
    (0xA7F1, 0xA7FF, "LATIN"),
    (0xA8D0, 0xA8D9, "DIGIT"),
    (0xA900, 0xA909, "DIGIT"),
    (0xA960, 0xA97C, "HANGUL"),
    (0xA9D0, 0xA9D9, "DIGIT"),
    (0xA9F0, 0xA9F9, "DIGIT"),
    (0xAA50, 0xAA59, "DIGIT"),
    (0xAB30, 0xAB5A, "LATIN"),
    (0xAB5C, 0xAB64, "LATIN"),
    (0xAB66, 0xAB69, "LATIN"),
    (0xABF0, 0xABF9, "DIGIT"),
    (0xAC00, 0xD7A3, "HANGUL"),
    (0xD7B0, 0xD7C6, "HANGUL"),
    (0xD7CB, 0xD7FB, "HANGUL"),
    (0xF900, 0xFA6D, "CJK"),
    (0xFA70, 0xFAD9, "CJK"),
    (0xFB00, 0xFB06, "LATIN"),
    (0xFB50, 0xFD3D, "ARABIC"),
    (0xFD40, 0xFDCF, "ARABIC"),
    (0xFDF0, 0xFDFF, "ARABIC"),
    (0xFE70, 0xFE74, "ARABIC"),
    (0xFE76, 0xFEFC, "ARABIC"),
    (0xFF10, 0xFF19, "DIGIT"),
    (0xFF21, 0xFF3A, "LATIN"),
    (0xFF41, 0xFF5A, "LATIN"),
    (0xFF66, 0xFF6F, "KATAKANA"),
    (0xFF71, 0xFF9D, "KATAKANA"),
    (0xFFA0, 0xFFBE, "HANGUL"),
    (0xFFC2, 0xFFC7, "HANGUL"),
    (0xFFCA, 0xFFCF, "HANGUL"),
    (0xFFD2, 0xFFD7, "HANGUL"),
    (0xFFDA, 0xFFDC, "HANGUL"),
    (0x104A0, 0x104A9, "DIGIT"),
    (0x10780, 0x10785, "LATIN"),
    (0x10787, 0x107B0, "LATIN"),
    (0x107B2, 0x107BA, "LATIN"),
    (0x10D30, 0x10D39, "DIGIT"),
    (0x10D40, 0x10D49, "DIGIT"),
    (0x10E60, 0x10E7E, "ARABIC"),
    (0x10EC2, 0x10EC7, "ARABIC"),
    (0x10ED0, 0x10ED8, "ARABIC"),
    (0x10EFA, 0x10EFF, "ARABIC"),
    (0x11066, 0x1106F, "DIGIT"),
    (0x110F0, 0x110F9, "DIGIT"),
    (0x11136, 0x1113F, "DIGIT"),
    (0x111D0, 0x111D9, "DIGIT"),
    (0x112F0, 0x112F9, "DIGIT"),
    (0x11450, 0x11459, "DIGIT"),
    (0x114D0, 0x114D9, "DIGIT"),
    (0x11650, 0x11659, "DIGIT"),
    (0x116C0, 0x116C9, "DIGIT"),
    (0x116D0, 0x116E3, "DIGIT"),
    (0x11730, 0x11739, "DIGIT"),
    (0x118E0, 0x118E9, "DIGIT"),
    (0x11950, 0x11959, "DIGIT"),
    (0x11BF0, 0x11BF9, "DIGIT"),
    (0x11C50, 0x11C59, "DIGIT"),
    (0x11D50, 0x11D59, "DIGIT"),
    (0x11DA0, 0x11DA9, "DIGIT"),
    (0x11DE0, 0x11DE9, "DIGIT"),
    (0x11F50, 0x11F59, "DIGIT"),
    (0x16130, 0x16139, "DIGIT"),
    (0x16A60, 0x16A69, "DIGIT"),
    (0x16AC0, 0x16AC9, "DIGIT"),
    (0x16B50, 0x16B59, "DIGIT"),
    (0x16D70, 0x16D79, "DIGIT"),
    (0x16FE2, 0x16FE3, "CJK"),
    (0x16FF0, 0x16FF6, "CJK"),
    (0x1AFF0, 0x1AFF3, "KATAKANA"),
    (0x1AFF5, 0x1AFFB, "KATAKANA"),
    (0x1AFFD, 0x1AFFE, "KATAKANA"),
    (0x1B000, 0x1B000, "KATAKANA"),
    (0x1B001, 0x1B11F, "HIRAGANA"),
    (0x1B120, 0x1B122, "KATAKANA"),
    (0x1B132, 0x1B132, "HIRAGANA"),
    (0x1B150, 0x1B152, "HIRAGANA"),
    (0x1B155, 0x1B155, "KATAKANA"),
    (0x1B164, 0x1B167, "KATAKANA"),
    (0x1CCF0, 0x1CCF9, "DIGIT"),
    (0x1D7CE, 0x1D7FF, "DIGIT"),
    (0x1DF00, 0x1DF1E, "LATIN"),
    (0x1DF25, 0x1DF2A, "LATIN"),
    (0x1E140, 0x1E149, "DIGIT"),
    (0x1E2F0, 0x1E2F9, "DIGIT"),
    (0x1E4F0, 0x1E4F9, "DIGIT"),
    (0x1E5F1, 0x1E5FA, "DIGIT"),
    (0x1E950, 0x1E959, "DIGIT"),
    (0x1EE00, 0x1EE03, "ARABIC"),
    (0x1EE05, 0x1EE1F, "ARABIC"),
    (0x1EE21, 0x1EE22, "ARABIC"),
    (0x1EE24, 0x1EE24, "ARABIC"),
    (0x1EE27, 0x1EE27, "ARABIC"),
    (0x1EE29, 0x1EE32, "ARABIC"),
    (0x1EE34, 0x1EE37, "ARABIC"),
    (0x1EE39, 0x1EE39, "ARABIC"),
    (0x1EE3B, 0x1EE3B, "ARABIC"),
    (0x1EE42, 0x1EE42, "ARABIC"),
    (0x1EE47, 0x1EE47, "ARABIC"),
    (0x1EE49, 0x1EE49, "ARABIC"),
    (0x1EE4B, 0x1EE4B, "ARABIC"),
    (0x1EE4D, 0x1EE4F, "ARABIC"),
    (0x1EE51, 0x1EE52, "ARABIC"),
    (0x1EE54, 0x1EE54, "ARABIC"),
    (0x1EE57, 0x1EE57, "ARABIC"),
    (0x1EE59, 0x1EE59, "ARABIC"),
    (0x1EE5B, 0x1EE5B, "ARABIC"),
    (0x1EE5D, 0x1EE5D, "ARABIC"),
    (0x1EE5F, 0x1EE5F, "ARABIC"),
    (0x1EE61, 0x1EE62, "ARABIC"),
    (0x1EE64, 0x1EE64, "ARABIC"),
    (0x1EE67, 0x1EE6A, "ARABIC"),
    (0x1EE6C, 0x1EE72, "ARABIC"),
    (0x1EE74, 0x1EE77, "ARABIC"),
    (0x1EE79, 0x1EE7C, "ARABIC"),
    (0x1EE7E, 0x1EE7E, "ARABIC"),
    (0x1EE80, 0x1EE89, "ARABIC"),
    (0x1EE8B, 0x1EE9B, "ARABIC"),
    (0x1EEA1, 0x1EEA3, "ARABIC"),
    (0x1EEA5, 0x1EEA9, "ARABIC"),
    (0x1EEAB, 0x1EEBB, "ARABIC"),
    (0x1EEF0, 0x1EEF1, "ARABIC"),
    (0x1F200, 0x1F200, "HIRAGANA"),
    (0x1FBF0, 0x1FBF9, "DIGIT"),
    (0x20000, 0x2A6DF, "CJK"),
    (0x2A700, 0x2B81D, "CJK"),
    (0x2B820, 0x2CEAD, "CJK"),
    (0x2CEB0, 0x2EBE0, "CJK"),
    (0x2EBF0, 0x2EE5D, "CJK"),
    (0x2F800, 0x2FA1D, "CJK"),
    (0x30000, 0x3134A, "CJK"),
    (0x31350, 0x33479, "CJK"),
)
