"""Verification sweeps over desk-scale families.

Each suite checks one identity exhaustively over a bounded family, or
on a seeded random sample, and reports counterexamples instead of
raising.  The command line front end exposes these as subcommands of
``verify``; the test suite calls them directly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from .compositions import compositions_up_to
from .crystal import crystal_graph, raising, rectify, rectify_step
from .diagrams import (Diagram, composition_diagram, is_southwest,
                       rothe_diagram, weight)
from .labeling import (component_demazure_data, demazure_expansion,
                       is_vexillary_diagram, membership,
                       quasi_yamanouchi_diagrams, yamanouchi_diagrams)
from .moves import generate_kd, kohnert_polynomial
from .perms import all_permutations, contains_2143, lehmer_code
from .polynomials import (IntPolynomial, demazure_character,
                          fundamental_slide, schubert_polynomial)
from .tableaux import TableauCrystal, demazure_subset, ssyt_raise


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, message: str) -> None:
        self.failures.append(message)

    def summary(self, max_dumped: int = 5) -> str:
        status = "PASS" if self.ok else "FAIL"
        line = f"{status} {self.name}: {self.checked} cases checked"
        if self.failures:
            line += f", {len(self.failures)} failures"
            for item in self.failures[:max_dumped]:
                line += f"\n  counterexample: {item}"
            if len(self.failures) > max_dumped:
                line += f"\n  ... and {len(self.failures) - max_dumped} more"
        return line


def southwest_in_box(cols: int, rows: int,
                     max_cells: int | None = None) -> list[Diagram]:
    """All southwest diagrams inside the given box, smallest first."""
    grid = [(c, r) for c in range(1, cols + 1) for r in range(1, rows + 1)]
    top = len(grid) if max_cells is None else min(max_cells, len(grid))
    found = []
    for k in range(top + 1):
        for cells in combinations(grid, k):
            d = Diagram(frozenset(cells))
            if is_southwest(d):
                found.append(d)
    return found


def random_diagram(rng: random.Random, cols: int, rows: int) -> Diagram:
    cells = [(c, r) for c in range(1, cols + 1) for r in range(1, rows + 1)
             if rng.random() < 0.4]
    return Diagram(frozenset(cells))


def _run_cases(cases, worker, jobs: int):
    """Map a picklable worker over cases, optionally with a process pool."""
    if jobs > 1:
        from multiprocessing import Pool
        with Pool(jobs) as pool:
            results = pool.map(worker, cases, chunksize=8)
    else:
        results = [worker(case) for case in cases]
    return results


def _kohnert_vs_pi_case(a) -> str | None:
    actual = kohnert_polynomial(composition_diagram(a), n=len(a))
    expected = demazure_character(a)
    if actual.matches(expected):
        return None
    return f"a={a}: closure gives {actual!r}, operators give {expected!r}"


def verify_kohnert_vs_pi(max_parts: int = 4, max_size: int = 6,
                         jobs: int = 1) -> SuiteResult:
    """Generating polynomial of KD(D(a)) against the Demazure character."""
    result = SuiteResult("kohnert-vs-pi")
    cases = list(compositions_up_to(max_size, max_parts))
    for failure in _run_cases(cases, _kohnert_vs_pi_case, jobs):
        result.checked += 1
        if failure is not None:
            result.fail(failure)
    return result


def _schubert_case(w) -> str | None:
    actual = kohnert_polynomial(rothe_diagram(w))
    expected = schubert_polynomial(w)
    if actual.matches(expected):
        return None
    return f"w={w}: closure gives {actual!r}, operators give {expected!r}"


def verify_schubert(n: int = 4, jobs: int = 1) -> SuiteResult:
    """Kohnert rule on Rothe diagrams against divided differences."""
    result = SuiteResult("schubert")
    cases = list(all_permutations(n))
    for failure in _run_cases(cases, _schubert_case, jobs):
        result.checked += 1
        if failure is not None:
            result.fail(failure)
    return result


def verify_closure(box: tuple[int, int] = (4, 4),
                   max_cells: int = 6) -> SuiteResult:
    """Raising operators never leave the closure of a southwest diagram."""
    cols, rows = box
    result = SuiteResult("closure")
    for d in southwest_in_box(cols, rows, max_cells):
        kset = generate_kd(d)
        result.checked += 1
        for t in kset.members:
            for i in range(1, rows):
                u = raising(t, i)
                if u is not None and u not in kset.member_set:
                    result.fail(f"D={d.sorted_cells}, member {t.sorted_cells}"
                                f", raising {i} escapes to {u.sorted_cells}")
    return result


def verify_commute(samples: int = 1000, box: tuple[int, int] = (5, 5),
                   seed: int = 2023) -> SuiteResult:
    """Raising commutes with single rectification steps, on random input."""
    cols, rows = box
    rng = random.Random(seed)
    result = SuiteResult("commute")
    for _ in range(samples):
        t = random_diagram(rng, cols, rows)
        result.checked += 1
        for r in range(1, rows):
            for c in range(1, cols):
                left = raising(rectify_step(t, c), r)
                lifted = raising(t, r)
                right = None if lifted is None else rectify_step(lifted, c)
                if (lifted is None) != (left is None) or left != right:
                    result.fail(f"T={t.sorted_cells}, r={r}, c={c}")
    return result


def _column_weight_candidates(d: Diagram, cols: int, rows: int):
    """All diagrams in the box whose column weights match d's."""
    per_column = []
    for c in range(1, cols + 1):
        size = len(d.col(c))
        per_column.append([frozenset((c, r) for r in pick)
                           for pick in combinations(range(1, rows + 1), size)])
    def rec(idx, acc):
        if idx == len(per_column):
            yield Diagram(frozenset(acc))
            return
        for choice in per_column[idx]:
            yield from rec(idx + 1, acc | choice)
    yield from rec(0, frozenset())


def verify_membership(box: tuple[int, int] = (3, 3),
                      t_rows: int = 4) -> SuiteResult:
    """Labeling membership test against breadth-first search membership."""
    cols, rows = box
    result = SuiteResult("membership")
    for d in southwest_in_box(cols, rows):
        member_set = generate_kd(d).member_set
        for t in _column_weight_candidates(d, cols, t_rows):
            result.checked += 1
            labelled = membership(t, d)
            searched = t in member_set
            if labelled != searched:
                result.fail(f"D={d.sorted_cells}, T={t.sorted_cells}: "
                            f"labeling says {labelled}, search says {searched}")
    return result


def component_isomorphic(component, crystal: TableauCrystal, n: int) -> str | None:
    """Check one crystal component against a tableau crystal.

    Starting from the unique highest weights, lowering edges are walked
    in parallel colour by colour; the forced matching must be a
    weight-preserving bijection under which raising also corresponds.
    Returns None on success, else a description of the first mismatch.
    """
    lowering: dict[tuple[Diagram, int], Diagram] = {}
    tops = []
    for t in component:
        raised = False
        for i in range(1, n):
            u = raising(t, i)
            if u is None:
                continue
            raised = True
            if (u, i) in lowering:
                return f"raising {i} not injective at {u.sorted_cells}"
            lowering[(u, i)] = t
        if not raised:
            tops.append(t)
    if len(tops) != 1:
        return f"{len(tops)} highest weight members"
    if len(component) != len(crystal.elements):
        return f"sizes differ: {len(component)} vs {len(crystal.elements)}"
    lmap = crystal.lowering_map()
    match = {tops[0]: crystal.highest}
    queue = [tops[0]]
    while queue:
        x = queue.pop()
        y = match[x]
        if weight(x, n) != y.weight(n):
            return f"weights differ at {x.sorted_cells}"
        for i in range(1, n):
            x2 = lowering.get((x, i))
            y2 = lmap[y].get(i)
            if (x2 is None) != (y2 is None):
                return f"lowering {i} defined on one side only at {x.sorted_cells}"
            if x2 is None:
                continue
            if x2 in match:
                if match[x2] != y2:
                    return f"matching conflict at {x2.sorted_cells}"
            else:
                match[x2] = y2
                queue.append(x2)
    if len(match) != len(component) or set(match.values()) != crystal.element_set:
        return "lowering walk does not cover both sides"
    for x, y in match.items():
        for i in range(1, n):
            xr = raising(x, i)
            yr = ssyt_raise(y, i)
            if (xr is None) != (yr is None) or \
                    (xr is not None and match[xr] != yr):
                return f"raising {i} not intertwined at {x.sorted_cells}"
    return None


def verify_components(box: tuple[int, int] = (3, 3)) -> SuiteResult:
    """Every crystal component matches its Demazure crystal."""
    cols, rows = box
    result = SuiteResult("components")
    for d in southwest_in_box(cols, rows):
        graph = crystal_graph(generate_kd(d))
        for comp in graph.components:
            result.checked += 1
            try:
                lam, w, a = component_demazure_data(comp, d)
            except (AssertionError, ValueError) as exc:
                result.fail(f"D={d.sorted_cells}: {exc}")
                continue
            n = len(a)
            for t in comp:
                for i in range(1, n):
                    lifted = raising(t, i)
                    left = raising(rectify(t), i)
                    right = None if lifted is None else rectify(lifted)
                    if (lifted is None) != (left is None) or left != right:
                        result.fail(f"D={d.sorted_cells}: rectify does not "
                                    f"intertwine raising {i} at {t.sorted_cells}")
            problem = component_isomorphic(comp, demazure_subset(lam, w, n), n)
            if problem is not None:
                result.fail(f"D={d.sorted_cells}, a={a}: {problem}")
    return result


def verify_yamanouchi(box: tuple[int, int] = (3, 3)) -> SuiteResult:
    """One Yamanouchi member per component; their keys sum to the polynomial."""
    cols, rows = box
    result = SuiteResult("yamanouchi")
    for d in southwest_in_box(cols, rows):
        result.checked += 1
        graph = crystal_graph(generate_kd(d))
        yams = yamanouchi_diagrams(d)
        if len(yams) != len(graph.components):
            result.fail(f"D={d.sorted_cells}: {len(yams)} Yamanouchi members, "
                        f"{len(graph.components)} components")
            continue
        for comp in graph.components:
            if sum(1 for y in yams if y in comp) != 1:
                result.fail(f"D={d.sorted_cells}: component without exactly "
                            f"one Yamanouchi member")
        n = d.max_row
        total = sum((demazure_character(weight(y, n), n) for y in yams),
                    start=IntPolynomial.zero(n))
        if not total.matches(kohnert_polynomial(d, n)):
            result.fail(f"D={d.sorted_cells}: key sum differs from polynomial")
    return result


def verify_slide(box: tuple[int, int] = (3, 3)) -> SuiteResult:
    """Quasi-Yamanouchi members give the fundamental slide expansion."""
    cols, rows = box
    result = SuiteResult("slide")
    for d in southwest_in_box(cols, rows):
        result.checked += 1
        n = d.max_row
        qys = quasi_yamanouchi_diagrams(d)
        expected = kohnert_polynomial(d, n)
        total = sum((fundamental_slide(weight(t, n), n) for t in qys),
                    start=IntPolynomial.zero(n))
        if not total.matches(expected):
            result.fail(f"D={d.sorted_cells}: slide sum differs from polynomial")
        qy_set = set(qys)
        for y in yamanouchi_diagrams(d):
            if y not in qy_set:
                result.fail(f"D={d.sorted_cells}: Yamanouchi member "
                            f"{y.sorted_cells} is not quasi-Yamanouchi")
    return result


def verify_vexillary(box: tuple[int, int] = (3, 3), n: int = 4) -> SuiteResult:
    """Single-term key expansions, row chains, and 2143 avoidance."""
    cols, rows = box
    result = SuiteResult("vexillary")
    for d in southwest_in_box(cols, rows):
        result.checked += 1
        single = len(demazure_expansion(d)) == 1
        chain = is_vexillary_diagram(d)
        if single != chain:
            result.fail(f"D={d.sorted_cells}: single-term={single}, "
                        f"row chain={chain}")
    for w in all_permutations(n):
        result.checked += 1
        avoiding = not contains_2143(w)
        if is_vexillary_diagram(rothe_diagram(w)) != avoiding:
            result.fail(f"w={w}: Rothe row-chain test disagrees with 2143")
        if avoiding and not schubert_polynomial(w).matches(
                demazure_character(lehmer_code(w))):
            result.fail(f"w={w}: Schubert differs from key of Lehmer code")
    return result


SUITES = ("kohnert-vs-pi", "schubert", "closure", "commute", "membership",
          "components", "yamanouchi", "slide", "vexillary")


def run_suite(name: str, *, max_parts: int = 4, max_size: int = 6,
              n: int | None = None, box: tuple[int, int] | None = None,
              max_cells: int = 6, t_rows: int = 4, samples: int = 1000,
              seed: int = 2023, jobs: int = 1) -> SuiteResult:
    """Run one named suite with explicit or default bounds."""
    if name == "kohnert-vs-pi":
        return verify_kohnert_vs_pi(max_parts, max_size, jobs)
    if name == "schubert":
        return verify_schubert(4 if n is None else n, jobs)
    if name == "closure":
        return verify_closure(box or (4, 4), max_cells)
    if name == "commute":
        return verify_commute(samples, box or (5, 5), seed)
    if name == "membership":
        return verify_membership(box or (3, 3), t_rows)
    if name == "components":
        return verify_components(box or (3, 3))
    if name == "yamanouchi":
        return verify_yamanouchi(box or (3, 3))
    if name == "slide":
        return verify_slide(box or (3, 3))
    if name == "vexillary":
        return verify_vexillary(box or (3, 3), 4 if n is None else n)
    raise ValueError(f"unknown suite {name!r}")
