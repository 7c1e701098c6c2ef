"""End-to-end, localization, script-identification and OCR metrics."""
from __future__ import annotations

import enum
import unicodedata
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .geometry import region_iou
from .script_id import ScriptClass, word_script


class TranscriptionMode(str, enum.Enum):
    EXACT = "exact"
    ED1 = "ed1"
    IGNORE = "ignore"
    SCRIPT = "script"  # joint localization + script identification


@dataclass(frozen=True)
class MatchConfig:
    iou_threshold: float = 0.5
    min_gt_length: int = 0
    mode: TranscriptionMode = TranscriptionMode.EXACT
    case_sensitive: bool = True

    def __post_init__(self):
        if not 0.0 < self.iou_threshold <= 1.0:
            raise ValueError(f"iou_threshold must be in (0, 1], got {self.iou_threshold}")
        object.__setattr__(self, "mode", TranscriptionMode(self.mode))


@dataclass
class EvalReport:
    matched: int = 0
    num_gt: int = 0
    num_pred: int = 0

    @property
    def recall(self) -> float:
        return self.matched / self.num_gt if self.num_gt else 0.0

    @property
    def precision(self) -> float:
        return self.matched / self.num_pred if self.num_pred else 0.0

    @property
    def f1(self) -> float:
        p, r = self.precision, self.recall
        return 2 * p * r / (p + r) if p + r > 0 else 0.0

    def __add__(self, other: "EvalReport") -> "EvalReport":
        return EvalReport(self.matched + other.matched, self.num_gt + other.num_gt,
                          self.num_pred + other.num_pred)


@dataclass
class Matching:
    pairs: list = field(default_factory=list)  # (gt index, pred index, iou, passed)
    report: EvalReport = field(default_factory=EvalReport)


def normalize_text(s: str, case_sensitive: bool = True) -> str:
    s = unicodedata.normalize("NFC", s)
    return s if case_sensitive else s.casefold()


def edit_distance(a: str, b: str) -> int:
    """Levenshtein distance over NFC-normalised codepoints."""
    a = unicodedata.normalize("NFC", a)
    b = unicodedata.normalize("NFC", b)
    if len(a) < len(b):
        a, b = b, a
    prev = list(range(len(b) + 1))
    for i, ca in enumerate(a, start=1):
        cur = [i]
        for j, cb in enumerate(b, start=1):
            cur.append(min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (ca != cb)))
        prev = cur
    return prev[-1]


def _passes(gt_text: str, pred_text: str, cfg: MatchConfig) -> bool:
    mode = cfg.mode
    if mode is TranscriptionMode.IGNORE:
        return True
    if mode is TranscriptionMode.SCRIPT:
        if not gt_text or not pred_text:
            return False
        return word_script(gt_text) == word_script(pred_text)
    g = normalize_text(gt_text, cfg.case_sensitive)
    p = normalize_text(pred_text, cfg.case_sensitive)
    if mode is TranscriptionMode.EXACT:
        return g == p
    return edit_distance(g, p) <= 1


def match_detections(gts: Sequence, preds: Sequence, cfg: MatchConfig | None = None) -> Matching:
    """Greedy one-to-one matching of predictions to ground truth in one image.

    Pairs above the IoU threshold are assigned by descending IoU (index
    tie-break); a pair is a hit when its transcriptions pass ``cfg.mode``.
    Don't-care ground truth (including words shorter than
    ``cfg.min_gt_length``) is not counted, nor are predictions whose best
    overlapping ground truth is don't-care.
    """
    cfg = cfg or MatchConfig()
    care = [not g.dont_care and len(g.transcription) >= cfg.min_gt_length for g in gts]
    ious = [[region_iou(g.quad, p.quad) for p in preds] for g in gts]

    counted_pred = []
    for j in range(len(preds)):
        best, best_i = 0.0, -1
        for i in range(len(gts)):
            if ious[i][j] > best:
                best, best_i = ious[i][j], i
        counted_pred.append(best_i < 0 or care[best_i])

    cands = [
        (-ious[i][j], i, j)
        for i in range(len(gts)) if care[i]
        for j in range(len(preds)) if counted_pred[j] and ious[i][j] > cfg.iou_threshold
    ]
    cands.sort()
    used_g, used_p = set(), set()
    result = Matching()
    for neg_iou, i, j in cands:
        if i in used_g or j in used_p:
            continue
        used_g.add(i)
        used_p.add(j)
        ok = _passes(gts[i].transcription, preds[j].transcription, cfg)
        result.pairs.append((i, j, -neg_iou, ok))
    result.report = EvalReport(
        matched=sum(1 for *_, ok in result.pairs if ok),
        num_gt=sum(care),
        num_pred=sum(counted_pred),
    )
    return result


def joint_loc_script(gts: Sequence, preds: Sequence, cfg: MatchConfig | None = None) -> EvalReport:
    """Localization plus majority-vote script of the predicted transcription."""
    cfg = cfg or MatchConfig()
    cfg = MatchConfig(cfg.iou_threshold, cfg.min_gt_length, TranscriptionMode.SCRIPT, cfg.case_sensitive)
    return match_detections(gts, preds, cfg).report


def evaluate_corpus(images: Iterable[tuple[Sequence, Sequence]], cfg: MatchConfig | None = None) -> EvalReport:
    total = EvalReport()
    for gts, preds in images:
        total = total + match_detections(gts, preds, cfg).report
    return total


@dataclass
class OcrRow:
    name: str
    words: int
    chars: int
    accuracy: float | None
    edits_per_char: float | None


def ocr_report(pairs: Sequence[tuple[str, str]], scripts: Sequence[ScriptClass] | None = None,
               case_sensitive: bool = True) -> list[OcrRow]:
    """Per-script recognition accuracy and edits / len(GT), with a Total row.

    ``scripts`` defaults to the majority-vote script of each GT word.
    Script rows with no words carry ``None`` metrics.
    """
    if scripts is None:
        scripts = [word_script(g) for g, _ in pairs]
    groups: dict[ScriptClass, list[tuple[str, str]]] = {c: [] for c in ScriptClass}
    for (g, r), s in zip(pairs, scripts):
        groups[s].append((g, r))

    def row(name, items):
        chars = sum(len(g) for g, _ in items)
        if not items:
            return OcrRow(name, 0, 0, None, None)
        hits = sum(normalize_text(g, case_sensitive) == normalize_text(r, case_sensitive) for g, r in items)
        edits = sum(edit_distance(normalize_text(g, case_sensitive), normalize_text(r, case_sensitive))
                    for g, r in items)
        return OcrRow(name, len(items), chars, hits / len(items), edits / chars if chars else None)

    rows = [row(c.name, groups[c]) for c in ScriptClass]
    rows.append(row("Total", list(pairs)))
    return rows


def format_ocr_report(rows: Sequence[OcrRow]) -> str:
    def f(v):
        return "NA" if v is None else f"{v:.3f}"

    lines = ["Script\tAcc\tEdits/len(GT)\tCharacters\tWords"]
    lines += [f"{r.name}\t{f(r.accuracy)}\t{f(r.edits_per_char)}\t{r.chars}\t{r.words}" for r in rows]
    return "\n".join(lines) + "\n"
