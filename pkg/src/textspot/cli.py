"""Command-line entry point.

Exit codes: 0 success, 1 validation or tolerance failure, 2 usage, I/O or
format error. Reports are TSV on stdout (or ``--out``).
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path


from . import __version__
from .ctc import ctc_loss, greedy_decode
from .errors import FormatError, TextSpotError, ValidationError
from .evaluation import (
    MatchConfig,
    TranscriptionMode,
    evaluate_corpus,
    format_ocr_report,
    match_detections,
    ocr_report,
)
from .geometry import DEFAULT_SCALE, DEFAULT_THRESHOLD, GeometryMap, OrientedBox, quad_angle, quad_iou, threshold_and_decode
from .losses import DEMO_LR, DEMO_SEED, DEMO_STEPS, GRADCHECK_TOLERANCE, demo_target, fit_maps_demo, gradcheck_suite
from .model_io import read_alphabet, read_annotations, read_tensor, write_alphabet, write_annotations, write_tensor
from .nms import DEFAULT_FINAL_IOU, DEFAULT_MERGE_IOU, NmsConfig, run_nms
from .pipeline import DirectoryLogits, OracleLogits, PipelineConfig, spot
from .roi import OCR_HEIGHT, sample_quad
from .script_id import CLASS_ABBREVS, WORD_ROWS, format_matrix, image_cooccurrence, script_confusion, word_cooccurrence
from .synthgen import SceneSpec, generate_scene, wordlist_alphabet

MODES = {"exact": "exact", "ed1": "ed1", "ignore": "ignore", "script": "script"}
BOX_HEADER = "score\tangle\tx1\ty1\tx2\ty2\tx3\ty3\tx4\ty4"


class ToleranceFailure(Exception):
    pass


def _emit(text: str, out) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)


def _format_boxes(boxes) -> str:
    lines = [BOX_HEADER]
    for b in boxes:
        coords = "\t".join(repr(float(v)) for p in b.quad for v in p)
        lines.append(f"{b.score!r}\t{b.angle!r}\t{coords}")
    return "\n".join(lines) + "\n"


def _read_boxes(path) -> list[OrientedBox]:
    try:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise FormatError(f"{path}: {exc}") from exc
    if not lines or lines[0] != BOX_HEADER:
        raise FormatError(f"{path}: missing box TSV header")
    boxes = []
    for n, line in enumerate(lines[1:], start=2):
        try:
            v = [float(x) for x in line.split("\t")]
        except ValueError:
            raise FormatError(f"{path}:{n}: non-numeric field") from None
        if len(v) != 10:
            raise FormatError(f"{path}:{n}: expected 10 fields")
        quad = tuple((v[i], v[i + 1]) for i in range(2, 10, 2))
        boxes.append(OrientedBox(quad, quad_angle(quad), v[0], n - 2))
    return boxes


def _annotation_files(path) -> dict[str, Path]:
    p = Path(path)
    if p.is_file():
        return {p.name: p}
    if not p.is_dir():
        raise FormatError(f"{path}: no such file or directory")
    return {f.name: f for f in sorted(p.glob("*.txt"))}


def _paired_corpus(gt_dir, pred_dir):
    gts = _annotation_files(gt_dir)
    preds = _annotation_files(pred_dir)
    if Path(gt_dir).is_file() and Path(pred_dir).is_file():
        return [(read_annotations(gt_dir), read_annotations(pred_dir))]
    out = []
    for name in sorted(set(gts) | set(preds)):
        g = read_annotations(gts[name]) if name in gts else []
        p = read_annotations(preds[name], strict=False) if name in preds else []
        out.append((g, p))
    return out


def _match_config(args, mode=None) -> MatchConfig:
    return MatchConfig(args.iou, args.min_len, mode or args.mode, not args.ignore_case)


# -- subcommands ---------------------------------------------------------------

def cmd_decode(args):
    gmap = GeometryMap(read_tensor(args.geomap))
    _emit(_format_boxes(threshold_and_decode(gmap, args.threshold, args.scale)), args.out)


def cmd_nms(args):
    boxes = _read_boxes(args.boxes)
    _emit(_format_boxes(run_nms(boxes, NmsConfig(args.merge_iou, args.final_iou))), args.out)


def cmd_crop(args):
    image = read_tensor(args.image)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    k = 0
    for ann in read_annotations(args.gt):
        if ann.dont_care:
            continue
        write_tensor(sample_quad(image, ann.quad, args.height), out / f"crop_{k:04d}.e2et")
        k += 1
    print(f"wrote {k} crops to {out}")


def cmd_ctc_decode(args):
    text = greedy_decode(read_tensor(args.logits), read_alphabet(args.alphabet))
    _emit(text + "\n", args.out)


def cmd_ctc_loss(args):
    alphabet = read_alphabet(args.alphabet)
    missing = [c for c in args.label if c not in alphabet]
    if missing:
        raise ValidationError(f"label characters not in alphabet: {''.join(missing)!r}")
    value, _ = ctc_loss(read_tensor(args.logits), alphabet.encode(args.label))
    _emit(f"loss\n{value!r}\n", args.out)


def cmd_script_stats(args):
    corpus = [read_annotations(f) for f in _annotation_files(args.dir).values()]
    img = image_cooccurrence(corpus, args.include_dont_care)
    words = word_cooccurrence(corpus, args.include_dont_care)
    text = (
        "# image-level script co-occurrence\n"
        + format_matrix(img, CLASS_ABBREVS, CLASS_ABBREVS)
        + "\n# word-level script co-occurrence\n"
        + format_matrix(words, WORD_ROWS, CLASS_ABBREVS)
    )
    _emit(text, args.out)


def cmd_eval_e2e(args):
    corpus = _paired_corpus(args.gt, args.pred)
    r = evaluate_corpus(corpus, _match_config(args))
    text = (
        "mode\trecall\tprecision\tf1\tmatched\tnum_gt\tnum_pred\n"
        f"{args.mode}\t{r.recall:.6f}\t{r.precision:.6f}\t{r.f1:.6f}\t{r.matched}\t{r.num_gt}\t{r.num_pred}\n"
    )
    _emit(text, args.out)


def cmd_eval_ocr(args):
    pairs = []
    cfg = _match_config(args, TranscriptionMode.IGNORE)
    for gts, preds in _paired_corpus(args.gt, args.pred):
        hit = {i: j for i, j, _, _ in match_detections(gts, preds, cfg).pairs}
        for i, g in enumerate(gts):
            if g.dont_care or not g.transcription:
                continue
            pairs.append((g.transcription, preds[hit[i]].transcription if i in hit else ""))
    text = format_ocr_report(ocr_report(pairs, case_sensitive=not args.ignore_case))
    if args.confusion:
        m = script_confusion([g for g, _ in pairs], [r for _, r in pairs])
        text += "\n# script confusion (GT rows, recognized columns)\n" + format_matrix(m, CLASS_ABBREVS, CLASS_ABBREVS)
    _emit(text, args.out)


def cmd_synth(args):
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    write_alphabet(wordlist_alphabet(), out / "alphabet.alpha")
    for seed in range(args.seed, args.seed + args.scenes):
        d = out if args.scenes == 1 else out / f"scene_{seed:06d}"
        d.mkdir(parents=True, exist_ok=True)
        scene = generate_scene(SceneSpec(
            width=args.width, height=args.height, words=args.words, seed=seed,
            vertical_probability=args.vertical, scale=args.scale,
        ))
        write_tensor(scene.image, d / "image.e2et")
        write_annotations(scene.annotations, d / "gt.txt")
        write_tensor(scene.geomap.channels, d / "geomap.e2et")
        print(f"{d}\t{len(scene.annotations)} words\t{scene.placement_failures} placement failures")


def cmd_gradcheck(args):
    errors = gradcheck_suite(args.points, args.seed, args.h)
    lines = ["loss\tmax_rel_error\ttolerance\tstatus"]
    failed = False
    for name, err in errors.items():
        tol = GRADCHECK_TOLERANCE[name]
        ok = err <= tol
        failed |= not ok
        lines.append(f"{name}\t{err:.3e}\t{tol:.0e}\t{'pass' if ok else 'FAIL'}")
    _emit("\n".join(lines) + "\n", args.out)
    if failed:
        raise ToleranceFailure("gradient check above tolerance")


def cmd_fit_demo(args):
    if args.geomap:
        gmap = GeometryMap(read_tensor(args.geomap))
        gt_quads = [a.quad for a in read_annotations(args.gt) if not a.dont_care] if args.gt else []
        scale = args.scale
    else:
        gmap, gt_quads = demo_target(args.angle)
        scale = 1.0
    result = fit_maps_demo(gmap, args.steps, args.lr, seed=args.seed, scale=scale)
    lines = ["step\tloss"]
    if result.losses:
        lines.append(f"0\t{result.losses[0]:.6g}")
        lines.append(f"{args.steps}\t{result.losses[-1]:.6g}")
        lines.append(f"reduction\t{1.0 - result.losses[-1] / result.losses[0]:.6f}")
    lines += ["", "box\tscore\tbest_gt_iou"]
    for k, b in enumerate(result.boxes):
        best = max((quad_iou(b.quad, q) for q in gt_quads), default=float("nan"))
        lines.append(f"{k}\t{b.score:.4f}\t{best:.4f}")
    _emit("\n".join(lines) + "\n", args.out)


def cmd_spot(args):
    alphabet = read_alphabet(args.alphabet)
    image = read_tensor(args.image)
    gmap = GeometryMap(read_tensor(args.geomap))
    if args.logits_dir:
        provider = DirectoryLogits(args.logits_dir)
    else:
        provider = OracleLogits(read_annotations(args.oracle_gt), alphabet)
    cfg = PipelineConfig(args.threshold, NmsConfig(args.merge_iou, args.final_iou), args.height, args.scale)
    preds = spot(image, gmap, provider, alphabet, cfg)
    if args.out:
        Path(args.out).parent.mkdir(parents=True, exist_ok=True)
        write_annotations(preds, args.out)
    else:
        from .model_io import format_annotation
        sys.stdout.write("".join(format_annotation(a) + "\n" for a in preds))


# -- parser --------------------------------------------------------------------

def _add_detection_flags(p):
    p.add_argument("--threshold", type=float, default=DEFAULT_THRESHOLD)
    p.add_argument("--scale", type=float, default=DEFAULT_SCALE, help="image pixels per grid pixel")


def _add_nms_flags(p):
    p.add_argument("--merge-iou", type=float, default=DEFAULT_MERGE_IOU)
    p.add_argument("--final-iou", type=float, default=DEFAULT_FINAL_IOU)


def _add_match_flags(p):
    p.add_argument("--gt", required=True, help="GT annotation file or directory")
    p.add_argument("--pred", required=True, help="prediction annotation file or directory")
    p.add_argument("--iou", type=float, default=0.5)
    p.add_argument("--min-len", type=int, default=0)
    p.add_argument("--ignore-case", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="textspot", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("decode", help="threshold and decode a geometry map into boxes")
    p.add_argument("--geomap", required=True)
    _add_detection_flags(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("nms", help="locality-aware NMS over a box TSV")
    p.add_argument("--boxes", required=True)
    _add_nms_flags(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_nms)

    p = sub.add_parser("crop", help="crop annotated words from an image tensor")
    p.add_argument("--image", required=True)
    p.add_argument("--gt", required=True)
    p.add_argument("--height", type=int, default=OCR_HEIGHT)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_crop)

    p = sub.add_parser("ctc-decode", help="greedy-decode a logit matrix")
    p.add_argument("--logits", required=True)
    p.add_argument("--alphabet", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_ctc_decode)

    p = sub.add_parser("ctc-loss", help="CTC loss of a label under a logit matrix")
    p.add_argument("--logits", required=True)
    p.add_argument("--alphabet", required=True)
    p.add_argument("--label", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_ctc_loss)

    p = sub.add_parser("script-stats", help="script co-occurrence matrices of an annotation directory")
    p.add_argument("dir")
    p.add_argument("--include-dont-care", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_script_stats)

    p = sub.add_parser("eval-e2e", help="end-to-end / localization / script evaluation")
    _add_match_flags(p)
    p.add_argument("--mode", choices=sorted(MODES), default="exact")
    p.add_argument("--out")
    p.set_defaults(func=cmd_eval_e2e)

    p = sub.add_parser("eval-ocr", help="per-script recognition accuracy")
    _add_match_flags(p)
    p.add_argument("--confusion", action="store_true", help="also print the script confusion matrix")
    p.add_argument("--out")
    p.set_defaults(func=cmd_eval_ocr)

    p = sub.add_parser("synth", help="generate synthetic scenes")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--words", type=int, default=5)
    p.add_argument("--scenes", type=int, default=1)
    p.add_argument("--width", type=int, default=256)
    p.add_argument("--height", type=int, default=256)
    p.add_argument("--vertical", type=float, default=0.0, help="probability of vertical words")
    p.add_argument("--scale", type=float, default=DEFAULT_SCALE)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("gradcheck", help="finite-difference check of every loss gradient")
    p.add_argument("--points", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--h", type=float, default=1e-6)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gradcheck)

    p = sub.add_parser("fit-demo", help="fit prediction maps to a target by gradient descent")
    p.add_argument("--geomap", help="target map; defaults to a built-in 2-word 64x64 target")
    p.add_argument("--gt", help="annotations for reporting IoU when --geomap is given")
    p.add_argument("--angle", type=float, default=0.5, help="angle of the second built-in word")
    p.add_argument("--steps", type=int, default=DEMO_STEPS)
    p.add_argument("--lr", type=float, default=DEMO_LR)
    p.add_argument("--seed", type=int, default=DEMO_SEED)
    p.add_argument("--scale", type=float, default=DEFAULT_SCALE)
    p.add_argument("--out")
    p.set_defaults(func=cmd_fit_demo)

    p = sub.add_parser("spot", help="run decode, NMS, crop, recognition and script ID")
    p.add_argument("--image", required=True)
    p.add_argument("--geomap", required=True)
    p.add_argument("--alphabet", required=True)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--logits-dir", help="directory of roi_NNNN.e2et logit matrices")
    src.add_argument("--oracle-gt", help="test mode: forced logits from these GT annotations")
    _add_detection_flags(p)
    _add_nms_flags(p)
    p.add_argument("--height", type=int, default=OCR_HEIGHT)
    p.add_argument("--out")
    p.set_defaults(func=cmd_spot)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except ToleranceFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValidationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except TextSpotError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
