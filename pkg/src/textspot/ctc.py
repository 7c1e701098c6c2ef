"""Connectionist temporal classification: loss, gradient and greedy decoding.

Logit matrices are ``(T, K)`` pre-softmax scores; class 0 is the blank.
"""
from __future__ import annotations

import itertools
import math
from typing import Sequence

import numpy as np

from .errors import InfeasibleLength, TooLarge, ValidationError
from .model_io import Alphabet

BLANK = 0
BRUTE_FORCE_LIMIT = 10**6


def _check_logits(logits) -> np.ndarray:
    x = np.asarray(logits, dtype=np.float64)
    if x.ndim != 2 or x.shape[0] < 1 or x.shape[1] < 2:
        raise ValidationError(f"logits must be (T>=1, K>=2), got {x.shape}")
    if not np.all(np.isfinite(x)):
        raise ValidationError("logits contain non-finite values")
    return x


def _check_label(label: Sequence[int], num_classes: int) -> list[int]:
    lab = [int(i) for i in label]
    for i in lab:
        if not 1 <= i < num_classes:
            raise ValidationError(f"label index {i} outside 1..{num_classes - 1}")
    return lab


def log_softmax(x: np.ndarray) -> np.ndarray:
    m = x.max(axis=-1, keepdims=True)
    z = x - m
    return z - np.log(np.exp(z).sum(axis=-1, keepdims=True))


def min_frames(label: Sequence[int]) -> int:
    """Frames needed to emit ``label``: one per symbol plus a blank between repeats."""
    return len(label) + sum(1 for a, b in zip(label, label[1:]) if a == b)


def ctc_loss(logits, label: Sequence[int]) -> tuple[float, np.ndarray]:
    """Negative log-likelihood of ``label`` and its gradient w.r.t. the logits."""
    x = _check_logits(logits)
    T, K = x.shape
    lab = _check_label(label, K)
    if min_frames(lab) > T:
        raise InfeasibleLength(f"label needs {min_frames(lab)} frames, only {T} available")

    lp = log_softmax(x)
    ext = np.zeros(2 * len(lab) + 1, dtype=np.int64)
    ext[1::2] = lab
    S = len(ext)
    # s -> s-2 transition allowed onto a symbol that differs from the one two back
    skip = np.zeros(S, dtype=bool)
    skip[3::2] = ext[3::2] != ext[1:-2:2]

    emit = lp[:, ext]  # (T, S)
    alpha = np.full((T, S), -np.inf)
    alpha[0, 0] = emit[0, 0]
    if S > 1:
        alpha[0, 1] = emit[0, 1]
    for t in range(1, T):
        prev = alpha[t - 1]
        acc = prev.copy()
        acc[1:] = np.logaddexp(acc[1:], prev[:-1])
        acc[2:] = np.where(skip[2:], np.logaddexp(acc[2:], prev[:-2]), acc[2:])
        alpha[t] = emit[t] + acc

    # beta excludes the emission at its own frame
    beta = np.full((T, S), -np.inf)
    beta[T - 1, S - 1] = 0.0
    if S > 1:
        beta[T - 1, S - 2] = 0.0
    for t in range(T - 2, -1, -1):
        nxt = beta[t + 1] + emit[t + 1]
        acc = nxt.copy()
        acc[:-1] = np.logaddexp(acc[:-1], nxt[1:])
        acc[:-2] = np.where(skip[2:], np.logaddexp(acc[:-2], nxt[2:]), acc[:-2])
        beta[t] = acc

    log_p = np.logaddexp(alpha[T - 1, S - 1], alpha[T - 1, S - 2]) if S > 1 else alpha[T - 1, 0]
    occupancy = np.zeros((T, K))
    post = np.exp(alpha + beta - log_p)
    np.add.at(occupancy, (slice(None), ext), post)
    grad = np.exp(lp) - occupancy
    return float(-log_p) + 0.0, grad


def ctc_brute_force(logits, label: Sequence[int]) -> float:
    """Reference loss by enumerating all K**T paths. Returns ``inf`` when no path fits."""
    x = _check_logits(logits)
    T, K = x.shape
    lab = tuple(_check_label(label, K))
    if K**T > BRUTE_FORCE_LIMIT:
        raise TooLarge(f"{K}**{T} paths exceeds {BRUTE_FORCE_LIMIT}")
    lp = log_softmax(x)
    terms = []
    for path in itertools.product(range(K), repeat=T):
        if collapse(path) == lab:
            terms.append(sum(lp[t, k] for t, k in enumerate(path)))
    if not terms:
        return math.inf
    m = max(terms)
    return -(m + math.log(sum(math.exp(v - m) for v in terms)))


def collapse(path: Sequence[int]) -> tuple[int, ...]:
    """Merge consecutive repeats, then drop blanks."""
    out = []
    prev = None
    for k in path:
        if k != prev and k != BLANK:
            out.append(k)
        prev = k
    return tuple(out)


def greedy_path(logits) -> np.ndarray:
    return np.argmax(_check_logits(logits), axis=1)


def greedy_decode(logits, alphabet: Alphabet) -> str:
    """Best-path decoding: per-frame argmax (lowest index on ties), collapsed."""
    x = _check_logits(logits)
    if x.shape[1] != len(alphabet):
        raise ValidationError(f"logit width {x.shape[1]} does not match alphabet size {len(alphabet)}")
    return alphabet.decode(collapse(greedy_path(x).tolist()))
