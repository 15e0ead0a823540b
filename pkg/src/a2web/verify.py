"""Exhaustive small-case checks behind ``a2web verify``."""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

from .bijection import all_inputs, phi_inverse, phi_trace
from .flow import flow_from_pair, is_admissible, pair_from_flow, uses_legal_templates
from .m_diagrams import circle_depth_at
from .rs_perm import format_matching, format_permutation, is_321_avoiding, is_noncrossing_matching, psi, rs, temperley_lieb
from .tableaux import (
    brute_force_standard_count,
    count_standard_hook,
    decompose,
    enumerate_semistandard,
    format_tableau,
    web_type,
)
from .web_algebra import closure, verify_relations, word_product
from .web_core import _arc_crossing, canonical_form, faces, internal_face_sizes, is_nonelliptic, prediagram_arcs, trivalize_with_provenance


@dataclass
class CheckResult:
    name: str
    params: str
    passed: bool
    counterexample: str = ""
    seconds: float = 0.0
    cases: int = 0


@dataclass
class VerifyReport:
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            line = f"{status} {c.name} [{c.params}] cases={c.cases} {c.seconds:.2f}s"
            if not c.passed:
                line += f" counterexample: {c.counterexample}"
            out.append(line)
        return out


def web_parameters(max_n: int, max_k: int) -> list[tuple[int, int]]:
    return [(n, k) for n in range(1, max_n + 1) for k in range(0, min(max_k, 3 * n // 2) + 1)]


def check_bijection(max_n: int, max_k: int) -> CheckResult:
    """Distinct canonical webs, all nonelliptic, and a left inverse."""
    cases = 0
    for n, k in web_parameters(max_n, max_k):
        seen: dict[str, str] = {}
        for t in all_inputs(n, k):
            cases += 1
            w = phi_trace(t, k).web
            key = canonical_form(w)
            text = format_tableau(t)
            if key in seen:
                return CheckResult("A1", "", False, f"n={n} k={k}: {seen[key]} and {text} share a web", cases=cases)
            seen[key] = text
            if not is_nonelliptic(w):
                return CheckResult("A1", "", False, f"n={n} k={k}: web of {text} is elliptic", cases=cases)
            if phi_inverse(w, n, k) != t:
                return CheckResult("A1", "", False, f"n={n} k={k}: {text} does not round-trip", cases=cases)
    return CheckResult("A1", "", True, cases=cases)


def check_nonelliptic_faces(max_n: int, max_k: int) -> CheckResult:
    cases = 0
    for n, k in web_parameters(max_n, max_k):
        for t in all_inputs(n, k):
            cases += 1
            sizes = internal_face_sizes(phi_trace(t, k).web)
            if any(s < 6 or s % 2 for s in sizes):
                return CheckResult("A5", "", False, f"n={n} k={k}: {format_tableau(t)} has faces {sizes}", cases=cases)
    return CheckResult("A5", "", True, cases=cases)


def _perms_321(ell: int):
    return (p for p in permutations(range(1, ell + 1)) if is_321_avoiding(p))


def check_psi_rs(max_ell: int) -> CheckResult:
    cases = 0
    for ell in range(1, max_ell + 1):
        for p in _perms_321(ell):
            cases += 1
            if psi(p) != rs(p):
                return CheckResult("A2", "", False, format_permutation(p), cases=cases)
    return CheckResult("A2", "", True, cases=cases)


def noncrossing_matchings(points: tuple[int, ...]) -> list[tuple[tuple[int, int], ...]]:
    """All noncrossing perfect matchings of points on a circle, listed directly."""
    if not points:
        return [()]
    out = []
    first = points[0]
    for idx in range(1, len(points), 2):
        inside, outside = points[1:idx], points[idx + 1:]
        for a in noncrossing_matchings(inside):
            for b in noncrossing_matchings(outside):
                out.append(((first, points[idx]),) + a + b)
    return out


def check_temperley_lieb(max_ell: int) -> CheckResult:
    cases = 0
    for ell in range(1, max_ell + 1):
        image = {}
        for p in _perms_321(ell):
            cases += 1
            m = temperley_lieb(p)
            if not is_noncrossing_matching(m, ell):
                return CheckResult("A3", "", False, f"{format_permutation(p)} -> {format_matching(m)}", cases=cases)
            if m in image:
                return CheckResult("A3", "", False, f"{image[m]} and {format_permutation(p)} collide", cases=cases)
            image[m] = format_permutation(p)
        expected = len(noncrossing_matchings(tuple(range(2 * ell))))
        if len(image) != expected:
            return CheckResult("A3", "", False, f"l={ell}: image {len(image)} != {expected}", cases=cases)
    return CheckResult("A3", "", True, cases=cases)


def depth_mismatches(trace) -> list[tuple]:
    """Compare path depth with circle depth on both sides of every arc segment.

    Only bottom arcs are present when the top boundary is empty. Returns the
    offending ``(curve, segment, path depths, circle depths)`` tuples.
    """
    pre = trace.prediagram
    configs = trace.m_minus.configs
    arcs = prediagram_arcs(pre, trace.m_plus.configs, configs)
    triv = trivalize_with_provenance(pre)
    fs = faces(triv.web)
    bad = []
    for e, prov in enumerate(triv.provenance):
        if prov[0] != "seg":
            continue
        _, c, idx = prov
        curve = pre.curves[c]
        a = arcs[c]
        xs = [Fraction(curve.start[1])]
        for x in curve.crossings:
            other = next(c2 for c2, _ in pre.crossings[x] if c2 != c)
            xs.append(_arc_crossing(a, arcs[other]))
        xs.append(Fraction(curve.end[1]))
        mid = (xs[idx] + xs[idx + 1]) / 2
        inner = circle_depth_at(trace.m_minus, mid, a.h2(mid)) + 1
        path = sorted((fs.depth[fs.face_of[2 * e]], fs.depth[fs.face_of[2 * e + 1]]))
        if path != [inner - 1, inner]:
            bad.append((c, idx, tuple(path), (inner - 1, inner)))
    return bad


def check_depths(max_n: int) -> CheckResult:
    cases = 0
    for n in range(1, max_n + 1):
        for t in all_inputs(n, 0):
            cases += 1
            bad = depth_mismatches(phi_trace(t, 0))
            if bad:
                return CheckResult("A4", "", False, f"{format_tableau(t)}: {bad[0]}", cases=cases)
    return CheckResult("A4", "", True, cases=cases)


def check_relations(max_k: int) -> CheckResult:
    cases = 0
    failures = []
    for k in range(2, max_k + 1):
        for r in verify_relations(k):
            cases += 1
            if not r.passed:
                failures.append(f"k={k} {r.name}: {r.instance}")
    return CheckResult("A6", "", not failures, "; ".join(failures[:6]) + (" ..." if len(failures) > 6 else ""), cases=cases)


def check_dimensions(max_k: int) -> CheckResult:
    cases = 0
    for k in range(1, max_k + 1):
        cases += 1
        got = len(closure(k))
        want = len(enumerate_semistandard((3,) * k, web_type(k, k)))
        if got != want:
            return CheckResult("A7", "", False, f"k={k}: closure {got} != {want}", cases=cases)
    return CheckResult("A7", "", True, cases=cases)


def check_flow(max_n: int, max_k: int) -> CheckResult:
    cases = 0
    for n, k in web_parameters(max_n, max_k):
        for t in all_inputs(n, k):
            cases += 1
            pair = decompose(t, k)
            d = flow_from_pair(pair)
            if not (is_admissible(d) and uses_legal_templates(d) and pair_from_flow(d, n, k) == pair):
                return CheckResult("A8", "", False, f"n={n} k={k}: {format_tableau(t)}", cases=cases)
    return CheckResult("A8", "", True, cases=cases)


def _partitions(total: int, largest: int | None = None):
    if total == 0:
        yield ()
        return
    for part in range(min(total, largest or total), 0, -1):
        for rest in _partitions(total - part, part):
            yield (part,) + rest


def check_hooks(max_size: int) -> CheckResult:
    cases = 0
    for size in range(1, max_size + 1):
        for shape in _partitions(size):
            cases += 1
            if count_standard_hook(shape) != brute_force_standard_count(shape):
                return CheckResult("A9", "", False, f"shape {shape}", cases=cases)
    return CheckResult("A9", "", True, cases=cases)


def check_confluence(max_k: int, max_len: int = 6, words_per_length: int = 2, orders: int = 100, seed: int = 0) -> CheckResult:
    rng = random.Random(seed)
    cases = 0
    for k in range(2, max_k + 1):
        for length in range(1, max_len + 1):
            for _ in range(words_per_length):
                word = [f"f{rng.randint(1, k - 1)}" for _ in range(length)]
                first = word_product(word, k, random.Random(0))
                for trial in range(1, orders):
                    cases += 1
                    if word_product(word, k, random.Random(trial)) != first:
                        return CheckResult("A10", "", False, f"k={k} word={','.join(word)} order seed {trial}", cases=cases)
    return CheckResult("A10", "", True, cases=cases)


def _run(job):
    name, func, args, params = job
    start = time.perf_counter()
    result = func(*args)
    result.name = name
    result.params = params
    result.seconds = time.perf_counter() - start
    return result


def plan(max_n: int = 3, max_k: int = 4, max_ell: int = 6) -> list[tuple]:
    """Checks to run within the bounds; a zero bound drops the checks that use it."""
    jobs = []
    if max_n > 0:
        jobs.append(("A1", check_bijection, (max_n, max_k), f"n<={max_n} k<={max_k}"))
        jobs.append(("A4", check_depths, (max_n,), f"n<={max_n}"))
        jobs.append(("A5", check_nonelliptic_faces, (max_n, max_k), f"n<={max_n} k<={max_k}"))
        jobs.append(("A8", check_flow, (max_n, max_k), f"n<={max_n} k<={max_k}"))
    if max_ell > 0:
        jobs.append(("A2", check_psi_rs, (max_ell,), f"l<={max_ell}"))
        jobs.append(("A3", check_temperley_lieb, (max_ell,), f"l<={max_ell}"))
        hook = max(8, max_ell)
        jobs.append(("A9", check_hooks, (hook,), f"|shape|<={hook}"))
    if max_k > 0:
        kk = min(max_k, 5)
        jobs.append(("A6", check_relations, (kk,), f"k<={kk}"))
        k7 = min(max_k, max_n if max_n > 0 else max_k, 4)
        if k7 > 0:
            jobs.append(("A7", check_dimensions, (k7,), f"n=k<={k7}"))
        k10 = min(max_k, 4)
        jobs.append(("A10", check_confluence, (k10,), f"k<={k10}"))
    return jobs


def run_verify(max_n: int = 3, max_k: int = 4, max_ell: int = 6, jobs: int = 1) -> VerifyReport:
    work = plan(max_n, max_k, max_ell)
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run, work))
    else:
        results = [_run(job) for job in work]
    order = {f"A{i}": i for i in range(1, 11)}
    return VerifyReport(sorted(results, key=lambda r: order[r.name]))
