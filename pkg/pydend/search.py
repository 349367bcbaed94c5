import itertools
import logging
import typing as t

import numpy as np
import typing_extensions as te

from .exception import ConfigException, GateException
from .laws.report import TLawReport
from .scalg import LinearOperator, SCAlgebra, TensorElement, check_aybe, check_rota_baxter, rb_from_tensor


logger = logging.getLogger(__name__)

DEFAULT_MAX_CANDIDATES = 20000

TOperatorHit = te.TypedDict(
    "TOperatorHit",
    {
        "matrix": t.List[int],
        "transcript": TLawReport,
    },
)

TTensorHit = te.TypedDict(
    "TTensorHit",
    {
        "summands": t.List[t.List[t.List[int]]],
        "operator": t.Optional[t.List[int]],
        "rota_baxter": str,
        "transcript": TLawReport,
    },
)

TSearchResult = te.TypedDict(
    "TSearchResult",
    {
        "kind": str,
        "p": int,
        "dim": int,
        "mode": str,
        "seed": t.Optional[int],
        "candidates": int,
        "examined": int,
        "solutions": t.List[t.Any],
    },
)


def _candidates(
    p: int, length: int, max_candidates: int, random_count: t.Optional[int], seed: int
) -> t.Tuple[str, int, t.Iterable[t.Tuple[int, ...]]]:
    """
    Coordinate tuples in F_p^length, exhaustively in lexicographic order when the space
    is small enough, otherwise `random_count` seeded draws without duplicates.
    """
    total = p**length
    if total <= max_candidates:
        return "exhaustive", total, itertools.product(range(p), repeat=length)
    if random_count is None:
        raise ConfigException(
            f"Search space has {total} candidates, above the cap of {max_candidates}; pass a random sample size"
        )
    rng = np.random.default_rng(seed)
    seen: t.Dict[t.Tuple[int, ...], None] = {}
    draws = 0
    while len(seen) < min(random_count, total) and draws < 20 * random_count:
        seen.setdefault(tuple(int(v) for v in rng.integers(0, p, size=length)), None)
        draws += 1
    return "random", total, list(seen)


def search_rota_baxter(
    algebra: SCAlgebra,
    max_candidates: int = DEFAULT_MAX_CANDIDATES,
    random_count: t.Optional[int] = None,
    seed: int = 0,
) -> TSearchResult:
    """
    Every linear map on the algebra passing the Rota-Baxter gate, with its transcript.
    """
    n, p = algebra.dim, algebra.p
    if n == 0:
        return _empty("rota-baxter", algebra)
    mode, total, pool = _candidates(p, n * n, max_candidates, random_count, seed)
    solutions: t.List[TOperatorHit] = []
    examined = 0
    for entries in pool:
        examined += 1
        beta = LinearOperator.from_row_major(algebra.field, n, entries)
        report = check_rota_baxter(algebra, beta)
        if report.passed():
            solutions.append({"matrix": list(entries), "transcript": report.to_dict()})
        if examined % 1000 == 0:
            logger.debug("Rota-Baxter search: %d examined, %d found", examined, len(solutions))
    logger.info("Rota-Baxter search over %d candidate(s) found %d operator(s)", examined, len(solutions))
    return {
        "kind": "rota-baxter",
        "p": p,
        "dim": n,
        "mode": mode,
        "seed": seed if mode == "random" else None,
        "candidates": total,
        "examined": examined,
        "solutions": solutions,
    }


def search_aybe(
    algebra: SCAlgebra,
    max_candidates: int = DEFAULT_MAX_CANDIDATES,
    random_count: t.Optional[int] = None,
    seed: int = 0,
) -> TSearchResult:
    """
    Single-summand tensors u ⊗ v solving the associative Yang-Baxter equation. Each hit
    also carries the verdict of its operator a -> u·a·v at the Rota-Baxter gate.
    """
    n, p = algebra.dim, algebra.p
    if n == 0:
        return _empty("aybe", algebra)
    mode, total, pool = _candidates(p, 2 * n, max_candidates, random_count, seed)
    solutions: t.List[TTensorHit] = []
    examined = 0
    for coords in pool:
        examined += 1
        r = TensorElement(algebra, [(coords[:n], coords[n:])])
        report = check_aybe(algebra, r)
        if not report.passed():
            continue
        hit: TTensorHit = {
            "summands": [[list(coords[:n]), list(coords[n:])]],
            "operator": None,
            "rota_baxter": "fail",
            "transcript": report.to_dict(),
        }
        try:
            hit["operator"] = rb_from_tensor(algebra, r).row_major()
            hit["rota_baxter"] = "pass"
        except GateException as e:
            logger.warning("AYBE solution %s: %s", hit["summands"], e)
        solutions.append(hit)
    logger.info("AYBE search over %d candidate(s) found %d solution(s)", examined, len(solutions))
    return {
        "kind": "aybe",
        "p": p,
        "dim": n,
        "mode": mode,
        "seed": seed if mode == "random" else None,
        "candidates": total,
        "examined": examined,
        "solutions": solutions,
    }


def _empty(kind: str, algebra: SCAlgebra) -> TSearchResult:
    return {
        "kind": kind,
        "p": algebra.p,
        "dim": 0,
        "mode": "exhaustive",
        "seed": None,
        "candidates": 0,
        "examined": 0,
        "solutions": [],
    }
