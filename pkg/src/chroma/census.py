"""Batch classification and validator sweep over graph6 corpora.

One census run classifies every graph in a corpus (chromatic index,
class, criticality, overfullness), then puts each edge-critical member
through the full validator battery: adjacency and degree checks, fan and
path structures under many sampled colorings, the five-vertex path
canonicalizer, parity accounting, and the critical-implies-overfull
implication.  The output is one JSON record per graph plus a summary,
with any violation serialized as a standalone witness file.

Determinism is a design requirement: per-edge sampling seeds are derived
by hashing (run seed, graph6 string, edge), records are sorted by their
graph6 string before emission, and wall-clock timings live in one
isolated field so reports can be compared byte for byte without them.
Graphs are independent, so a run can fan out across processes; the
``CHROMA_THREADS`` environment variable caps the pool.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from pathlib import Path
from time import perf_counter
from typing import Iterable

from . import fans, kpath5, oracle, overfull
from .fans import INAPPLICABLE, VIOLATION, Verdict
from .graph import Graph, iter_graph6_lines, parse_graph6, to_graph6

__all__ = [
    "CensusConfig",
    "CensusReport",
    "GraphExamination",
    "SUITES",
    "examine_graph",
    "run_census",
]

# Validator suites in the order they are tallied and run.
SUITES = (
    "val",
    "multifan",
    "fan-linkage",
    "kierstead4",
    "kierstead5",
    "degree-dichotomy",
    "fork",
    "short-kite",
    "kite",
    "parity",
)

_CSV_COLUMNS = (
    "graph6",
    "n",
    "max_degree",
    "min_degree",
    "edge_count",
    "chi_prime",
    "class",
    "is_critical",
    "is_overfull",
    "excess",
    "hypothesis",
    "hypothesis_margin",
    "theorem1",
    "violations",
    "dead_ends",
)


@dataclass(frozen=True)
class CensusConfig:
    """Run parameters; the defaults finish a full n <= 8 sweep in minutes."""

    seed: int = 0
    samples: int = 100
    timeout_ms: int = 10_000
    witness_dir: str | None = None


@dataclass(frozen=True)
class GraphExamination:
    """One graph's record plus any witnesses it produced."""

    record: dict
    witnesses: list[dict]


@dataclass(frozen=True)
class CensusReport:
    """Sorted per-graph records, their witnesses, and run-level bookkeeping."""

    records: list[dict]
    witnesses: list[dict]
    summary: dict
    metadata: dict

    @property
    def has_findings(self) -> bool:
        """True when any violation, dead end, or counterexample surfaced."""
        return bool(
            self.summary["violations"]
            or self.summary["dead_ends"]
            or self.summary["implication"]["counterexample"]
        )

    def to_json_lines(self, include_timings: bool = True) -> str:
        """One compact JSON line per record, then the summary object.

        With ``include_timings=False`` the per-record timing field is
        dropped, which makes reports from identical (corpus, config,
        seed) runs byte-identical.
        """
        lines = []
        for record in self.records:
            if not include_timings:
                record = {k: v for k, v in record.items() if k != "timings"}
            lines.append(json.dumps(record, separators=(",", ":")))
        lines.append(
            json.dumps(
                {"summary": self.summary, "metadata": self.metadata},
                separators=(",", ":"),
            )
        )
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        """Flat per-graph table with one row per record."""
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(_CSV_COLUMNS)
        for r in self.records:
            ov = r.get("overfull") or {}
            writer.writerow(
                [
                    r["graph6"],
                    r["n"],
                    r["max_degree"],
                    r["min_degree"],
                    r["edge_count"],
                    r.get("chi_prime", ""),
                    r.get("class", ""),
                    r.get("is_critical", ""),
                    ov.get("is_overfull", ""),
                    ov.get("excess", ""),
                    ov.get("hypothesis", ""),
                    ov.get("hypothesis_margin", ""),
                    (r.get("theorem1") or {}).get("status", ""),
                    sum(t["violations"] for t in r["lemmas"].values()),
                    sum(t.get("dead_ends", 0) for t in r["lemmas"].values()),
                ]
            )
        return buf.getvalue()


def _new_tally(suite: str) -> dict:
    tally = {"checked": 0, "ok": 0, "inapplicable": 0, "violations": 0}
    if suite == "kierstead5":
        tally["dead_ends"] = 0
    return tally


_STATUS_KEY = {
    fans.OK: "ok",
    fans.INAPPLICABLE: "inapplicable",
    fans.VIOLATION: "violations",
    kpath5.CANONICAL: "ok",
    kpath5.DEAD_END: "dead_ends",
}


def _bump(tally: dict, status: str) -> None:
    tally["checked"] += 1
    tally[_STATUS_KEY[status]] += 1


def _witness(
    g6: str,
    edge: tuple[int, int] | None,
    coloring,
    lemma: str,
    detail: str,
) -> dict:
    return {
        "graph6": g6,
        "edge": list(edge) if edge is not None else None,
        "coloring": coloring.to_json_obj() if coloring is not None else None,
        "lemma": lemma,
        "detail": detail,
    }


def _edge_seed(seed: int, g6: str, e: tuple[int, int]) -> int:
    """Stable per-(graph, edge) sampling seed, independent of run order."""
    digest = hashlib.sha256(f"{seed}|{g6}|{e[0]},{e[1]}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def _coloring_suites(
    g6: str,
    e: tuple[int, int],
    c,
    tallies: dict,
    witnesses: list[dict],
) -> None:
    """All per-coloring validators on one sampled coloring of g minus e."""
    for center in e:
        fan = fans.grow_multifan(c, center)
        verdict = fans.validate_multifan(c, fan)
        _bump(tallies["multifan"], verdict.status)
        if verdict.status == VIOLATION:
            witnesses.append(_witness(g6, e, c, "multifan", verdict.detail))
        if c.is_elementary(fan.vertices):
            decomposition = fans.alpha_decompose(c, fan)
            linkage = fans.validate_fan_linkage(c, fan, decomposition)
        else:
            linkage = Verdict(INAPPLICABLE, "fan is not elementary")
        _bump(tallies["fan-linkage"], linkage.status)
        if linkage.status == VIOLATION:
            witnesses.append(_witness(g6, e, c, "fan-linkage", linkage.detail))
    for path in fans.kierstead_paths(c, 4):
        verdict = fans.validate_kierstead4(c, path)
        _bump(tallies["kierstead4"], verdict.status)
        if verdict.status == VIOLATION:
            witnesses.append(
                _witness(
                    g6, e, c, "kierstead4", f"path {path.vertices}: {verdict.detail}"
                )
            )
    for path in fans.kierstead_paths(c, 5):
        result = kpath5.canonicalize_k5_path(c, path)
        _bump(tallies["kierstead5"], result.status)
        if result.status in (kpath5.VIOLATION, kpath5.DEAD_END):
            witnesses.append(
                _witness(
                    g6, e, c, "kierstead5", f"path {path.vertices}: {result.detail}"
                )
            )
    verdict = fans.check_fork_exclusion(c)
    _bump(tallies["fork"], verdict.status)
    if verdict.status == VIOLATION:
        witnesses.append(_witness(g6, e, c, "fork", verdict.detail))
    for kind, validate in (
        ("short-kite", fans.validate_shortkite),
        ("kite", fans.validate_kite),
    ):
        for embedding in fans.find_forklike(c, kind):
            verdict = validate(c, embedding)
            _bump(tallies[kind], verdict.status)
            if verdict.status == VIOLATION:
                witnesses.append(
                    _witness(
                        g6, e, c, kind, f"{embedding.role_map}: {verdict.detail}"
                    )
                )


def _critical_suites(
    g: Graph,
    g6: str,
    config: CensusConfig,
    tallies: dict,
    witnesses: list[dict],
) -> None:
    """Edge-by-edge validator sweep; only called on certified hosts."""
    per_edge: dict[tuple[int, int], list] = {}
    for e in g.edges:
        per_edge[e] = oracle.sample_colorings(
            g,
            e,
            config.samples,
            _edge_seed(config.seed, g6, e),
            timeout_ms=config.timeout_ms,
        )
    for e in g.edges:
        x, y = e
        for p, q in ((x, y), (y, x)):
            verdict = fans.check_val(g, p, q)
            _bump(tallies["val"], verdict.status)
            if verdict.status == VIOLATION:
                witnesses.append(_witness(g6, (p, q), None, "val", verdict.detail))
        for c in per_edge[e]:
            _coloring_suites(g6, e, c, tallies, witnesses)
    for a in range(g.n):
        verdict = fans.check_degree_dichotomy(g, a, colorings=per_edge)
        _bump(tallies["degree-dichotomy"], verdict.status)
        if verdict.status == VIOLATION:
            witnesses.append(
                _witness(g6, None, None, "degree-dichotomy", f"anchor {a}: {verdict.detail}")
            )


def examine_graph(line: str, config: CensusConfig = CensusConfig()) -> GraphExamination:
    """Classify one graph6 line and run every applicable validator.

    Oracle budget expiry does not abort the run; the record keeps the
    fields computed so far plus an ``error`` note.  Edgeless graphs get
    the conventional chromatic index 0 and skip every coloring-based
    check.
    """
    g = parse_graph6(line)
    g6 = to_graph6(g)
    t_start = perf_counter()
    tallies = {suite: _new_tally(suite) for suite in SUITES}
    record: dict = {
        "graph6": g6,
        "n": g.n,
        "max_degree": g.max_degree,
        "min_degree": g.min_degree,
        "edge_count": g.m,
    }
    witnesses: list[dict] = []
    error = None
    classify_ms = 0.0
    chi = None
    critical = False
    try:
        if g.m:
            t0 = perf_counter()
            chi = oracle.chromatic_index(g, timeout_ms=config.timeout_ms)
            critical = oracle.is_delta_critical(
                g, chi=chi, timeout_ms=config.timeout_ms
            )
            classify_ms = (perf_counter() - t0) * 1000
            record["chi_prime"] = chi.chi_prime
            record["class"] = chi.classification
            record["is_critical"] = critical
            verdict = overfull.parity_check(chi.witness)
            _bump(tallies["parity"], verdict.status)
            if verdict.status == VIOLATION:
                witnesses.append(
                    _witness(g6, None, chi.witness, "parity", verdict.detail)
                )
        else:
            record["chi_prime"] = 0
            record["class"] = "class1"
            record["is_critical"] = False
        if g.n:
            ov = overfull.is_overfull(g)
            record["overfull"] = {
                "is_overfull": ov.is_overfull,
                "excess": ov.excess,
                "hypothesis": ov.hypothesis,
                "hypothesis_margin": str(ov.hypothesis_margin),
            }
            implication = overfull.verify_overfull_implication(
                g, chi=chi, critical=critical, timeout_ms=config.timeout_ms
            )
            record["theorem1"] = {
                "status": implication.status,
                "detail": implication.detail,
            }
            if implication.status == overfull.COUNTEREXAMPLE:
                witnesses.append(
                    _witness(g6, None, None, "theorem1", implication.detail)
                )
        else:
            record["overfull"] = None
            record["theorem1"] = {"status": INAPPLICABLE, "detail": "empty graph"}
        if critical:
            _critical_suites(g, g6, config, tallies, witnesses)
    except oracle.OracleTimeout as exc:
        error = f"oracle budget exceeded: {exc}"
    record["lemmas"] = tallies
    if error is not None:
        record["error"] = error
    record["timings"] = {
        "classify_ms": round(classify_ms, 3),
        "total_ms": round((perf_counter() - t_start) * 1000, 3),
    }
    return GraphExamination(record, witnesses)


def _corpus_lines(corpus: str | Iterable[str]) -> list[str]:
    if isinstance(corpus, str):
        return list(iter_graph6_lines(corpus))
    out: list[str] = []
    for raw in corpus:
        out.extend(iter_graph6_lines(str(raw)))
    return out


def _worker_count(jobs: int) -> int:
    env = os.environ.get("CHROMA_THREADS")
    cap = int(env) if env else (os.cpu_count() or 1)
    if cap < 1:
        raise ValueError(f"CHROMA_THREADS must be positive, got {cap}")
    return max(1, min(cap, jobs))


def _summarize(records: list[dict]) -> dict:
    summary = {
        "graphs": len(records),
        "class1": 0,
        "class2": 0,
        "critical": 0,
        "overfull": 0,
        "implication": {
            "holds": 0,
            "counterexample": 0,
            "inapplicable": 0,
            "undecided": 0,
        },
        "violations": 0,
        "dead_ends": 0,
        "errors": 0,
    }
    for r in records:
        cls = r.get("class")
        if cls in ("class1", "class2"):
            summary[cls] += 1
        if r.get("is_critical"):
            summary["critical"] += 1
        ov = r.get("overfull")
        if ov and ov["is_overfull"]:
            summary["overfull"] += 1
        th = r.get("theorem1")
        if th:
            summary["implication"][th["status"]] += 1
        for tally in r["lemmas"].values():
            summary["violations"] += tally["violations"]
            summary["dead_ends"] += tally.get("dead_ends", 0)
        if "error" in r:
            summary["errors"] += 1
    return summary


def run_census(
    corpus: str | Iterable[str], config: CensusConfig | None = None
) -> CensusReport:
    """Examine every graph6 line of a corpus and aggregate the report.

    ``corpus`` is raw text or an iterable of lines; blanks, comments, and
    format headers are skipped.  Records come back sorted by graph6
    string, so the report does not depend on input or execution order.
    When the config names a witness directory, every witness is written
    there as an individually replayable JSON file.

    Unparseable corpus lines raise ValueError.  Per-graph oracle expiry
    only annotates that graph's record; the run continues.
    """
    config = config or CensusConfig()
    if config.samples < 1:
        raise ValueError(f"need at least one sample per edge, got {config.samples}")
    if config.timeout_ms <= 0:
        raise ValueError(f"timeout must be positive, got {config.timeout_ms}")
    lines = _corpus_lines(corpus)
    corpus_hash = hashlib.sha256("\n".join(lines).encode()).hexdigest()
    workers = _worker_count(len(lines))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(partial(examine_graph, config=config), lines))
    else:
        results = [examine_graph(line, config) for line in lines]
    results.sort(key=lambda ex: ex.record["graph6"])
    records = [ex.record for ex in results]
    witnesses = [w for ex in results for w in ex.witnesses]
    report = CensusReport(
        records=records,
        witnesses=witnesses,
        summary=_summarize(records),
        metadata={
            "seed": config.seed,
            "samples": config.samples,
            "timeout_ms": config.timeout_ms,
            "corpus_hash": corpus_hash,
        },
    )
    if config.witness_dir is not None and witnesses:
        outdir = Path(config.witness_dir)
        outdir.mkdir(parents=True, exist_ok=True)
        for i, w in enumerate(witnesses):
            path = outdir / f"witness-{i:05d}.json"
            path.write_text(json.dumps(w, indent=2) + "\n")
    return report
