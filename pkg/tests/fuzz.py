"""Random inputs for the parser: raw bytes, token soup and mutated corpus programs."""
from __future__ import annotations

import random
import time
from pathlib import Path

from compass_grid.dsl import check

MAX_BYTES = 64 * 1024
CORPUS = Path(__file__).parent / "corpus"

_TOKENS = [
    "point", "line", "circle", "intersect", "midpoint", "transfer", "perp", "copy_angle",
    "grid", "role", "left", "right", "forward", "backward", "lattice", "figure", "auxiliary",
    "A", "B", "c1", "x_1", "(", ")", ",", "=", "[", "]", "/", "+", "-", "0", "1", "2", "17",
    "99999999999", "\n", " ", "#", "@", "\t", "é", "\x00",
]


def _bytes(rng: random.Random) -> bytes:
    n = rng.choice([0, 1, 8, 64, 512, 4096, rng.randint(0, MAX_BYTES)])
    return rng.randbytes(n)


def _soup(rng: random.Random) -> str:
    n = rng.choice([1, 10, 100, 2000, rng.randint(0, 12000)])
    out = " ".join(rng.choice(_TOKENS) for _ in range(n))
    return out[:MAX_BYTES]


def _mutant(rng: random.Random, programs: list[str]) -> str:
    s = list(rng.choice(programs))
    for _ in range(rng.randint(1, 8)):
        op = rng.random()
        pos = rng.randint(0, len(s))
        if op < 0.4 and s:
            del s[min(pos, len(s) - 1)]
        elif op < 0.8:
            s.insert(pos, rng.choice("(),=[]/+-#\n 0123456789abcxyz"))
        else:
            s[pos:pos] = list(rng.choice(_TOKENS))
    text = "".join(s)
    if rng.random() < 0.05:
        text = (text + "\n") * (MAX_BYTES // max(len(text) + 1, 1))
    return text[:MAX_BYTES]


def fuzz_inputs(n: int, seed: int = 0):
    rng = random.Random(seed)
    programs = [p.read_text() for p in sorted(CORPUS.glob("*.csl"))]
    for k in range(n):
        r = k % 3
        if r == 0:
            yield _bytes(rng)
        elif r == 1:
            yield _soup(rng)
        else:
            yield _mutant(rng, programs)


def run_fuzz(n: int, seed: int = 0, per_input_limit: float = 2.0) -> tuple[list[str], float]:
    """Feed ``n`` inputs to the checker; return (problems, slowest seconds)."""
    problems: list[str] = []
    slowest = 0.0
    for k, src in enumerate(fuzz_inputs(n, seed)):
        t0 = time.perf_counter()
        try:
            diags = check(src)
        except Exception as exc:  # any exception is a crash
            problems.append(f"input {k}: {type(exc).__name__}: {exc}")
            continue
        dt = time.perf_counter() - t0
        slowest = max(slowest, dt)
        if dt > per_input_limit:
            problems.append(f"input {k}: took {dt:.2f}s")
        text = src.decode("utf-8", errors="replace") if isinstance(src, bytes) else src
        nlines = text.count("\n") + 1
        for d in diags:
            if not (1 <= d.span.line <= nlines and d.span.col >= 1):
                problems.append(f"input {k}: span {d.span} outside source")
                break
    return problems, slowest
