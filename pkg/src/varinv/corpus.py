"""Regression corpus: worked examples shipped as fixture files.

Each case is a JSON file next to its ``.ps``/``.cert`` inputs under
``fixtures/corpus``.  Expectations live in the fixtures, not in code, so a
reviewer can diff them against their sources directly; every check carries
a ``source`` classification (worked-example / hand-derived / definition).
The runner executes every check of a case and reports one line per case,
deterministically ordered by id.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Sequence

from .certfile import load_certificate, verify_certificate
from .groebner import Ideal, MonomialOrder, ideal_equal, ideal_member, ideal_sum
from .invariants import compare_invariants, elementary_ideal, quasi_singular
from .polyring import RationalPoint, evaluate, gradient
from .textio import SystemFile, parse_polynomial, read_system
from .zerodim import ZeroCount


def fixture_root():
    return resources.files(__package__) / "fixtures" / "corpus"


@dataclass(frozen=True)
class CheckResult:
    kind: str
    ok: bool
    detail: str


@dataclass(frozen=True)
class CaseResult:
    case_id: str
    ok: bool
    checks: tuple[CheckResult, ...]

    def summary(self) -> str:
        if self.ok:
            notes = "; ".join(c.detail for c in self.checks if c.detail)
            tail = f" ({notes})" if notes else ""
            return f"{self.case_id}: pass, {len(self.checks)} checks{tail}"
        failed = next(c for c in self.checks if not c.ok)
        return f"{self.case_id}: FAIL [{failed.kind}] {failed.detail}"


@dataclass(frozen=True)
class CorpusCase:
    case_id: str
    title: str
    checks: tuple[dict, ...]

    def run(self) -> CaseResult:
        results = []
        for check in self.checks:
            results.append(_run_check(check))
        return CaseResult(self.case_id, all(r.ok for r in results), tuple(results))


def load_cases() -> list[CorpusCase]:
    cases = []
    for entry in fixture_root().iterdir():
        if entry.name.endswith(".json"):
            data = json.loads(entry.read_text(encoding="utf-8"))
            cases.append(
                CorpusCase(data["id"], data.get("title", ""), tuple(data["checks"]))
            )
    cases.sort(key=lambda c: c.case_id)
    return cases


def find_case(case_id: str) -> CorpusCase:
    for case in load_cases():
        if case.case_id == case_id:
            return case
    known = ", ".join(c.case_id for c in load_cases())
    raise KeyError(f"unknown case id {case_id!r}; known: {known}")


def run_all() -> list[CaseResult]:
    return [case.run() for case in load_cases()]


def _load_system(name: str) -> SystemFile:
    with resources.as_file(fixture_root() / name) as path:
        return read_system(path)


def _order_from(spec: dict | None, ring) -> MonomialOrder | None:
    if spec is None:
        return None
    return MonomialOrder(spec["kind"], ring, tuple(spec.get("priority", ())))


def _expected_count(expect) -> ZeroCount:
    if expect == "empty":
        return ZeroCount.empty()
    if expect == "infinite":
        return ZeroCount.infinite()
    return ZeroCount.finite(int(expect))


def _run_check(check: dict) -> CheckResult:
    kind = check["kind"]
    if kind == "count":
        return _check_count(check)
    if kind == "elementary":
        return _check_elementary(check)
    if kind == "compare":
        return _check_compare(check)
    if kind == "gradient_basis":
        return _check_gradient_basis(check)
    if kind == "containment":
        return _check_containment(check)
    if kind == "cert":
        return _check_cert(check)
    return CheckResult(kind, False, f"unknown check kind {kind!r}")


def _check_count(check: dict) -> CheckResult:
    system = _load_system(check["system"])
    poly = system.get(check["poly"])
    report = quasi_singular(poly)
    want = _expected_count(check["expect"])
    if report.count != want:
        return CheckResult("count", False, f"{check['poly']}: expected {want}, got {report.count}")
    if "point" in check:
        point = RationalPoint(tuple(Fraction(c) for c in check["point"]))
        if point not in report.rational_points:
            return CheckResult("count", False, f"expected rational point {point} not reported")
        if any(evaluate(g, point) != 0 for g in report.gradient):
            return CheckResult("count", False, f"point {point} fails evaluation check")
        return CheckResult("count", True, f"{check['poly']}: {report.count} at {point}")
    return CheckResult("count", True, f"{check['poly']}: {report.count}")


def _check_elementary(check: dict) -> CheckResult:
    system = _load_system(check["system"])
    ring = system.vars
    polys = [system.get(n) for n in check["polys"]]
    modulo = Ideal(ring, [system.get(n) for n in check["modulo"]])
    order = _order_from(check.get("order"), ring)
    computed = ideal_sum(elementary_ideal(polys, check["k"]), modulo)
    expected = Ideal(ring, [parse_polynomial(s, ring) for s in check["expected"]])
    if ideal_equal(computed, expected, order):
        return CheckResult("elementary", True, f"E_{check['k']}+R as expected")
    got = ", ".join(str(g) for g in computed.groebner_basis(order))
    return CheckResult("elementary", False, f"E_{check['k']}+R differs; computed basis: {got}")


def _check_compare(check: dict) -> CheckResult:
    system = _load_system(check["system"])
    ring = system.vars
    left = [system.get(n) for n in check["left"]]
    right = [system.get(n) for n in check["right"]]
    modulo = Ideal(ring, [system.get(n) for n in check["modulo"]])
    verdict = compare_invariants(left, right, modulo, check["k"])
    got = "indistinguishable" if verdict.equal else "distinguishable"
    if got != check["expect"]:
        return CheckResult("compare", False, f"expected {check['expect']}, got {got}")
    return CheckResult("compare", True, f"k={check['k']}: {got}")


def _check_gradient_basis(check: dict) -> CheckResult:
    system = _load_system(check["system"])
    ring = system.vars
    poly = system.get(check["poly"])
    order = _order_from(check.get("order"), ring)
    computed = Ideal(ring, list(gradient(poly)))
    expected = Ideal(ring, [parse_polynomial(s, ring) for s in check["expected"]])
    if ideal_equal(computed, expected, order):
        return CheckResult("gradient_basis", True, f"gradient ideal of {check['poly']} as expected")
    got = ", ".join(str(g) for g in computed.groebner_basis(order))
    return CheckResult("gradient_basis", False, f"gradient ideal differs; computed basis: {got}")


def _check_containment(check: dict) -> CheckResult:
    system = _load_system(check["system"])
    poly = system.get(check["poly"])
    locus = Ideal(system.vars, [system.get(n) for n in check["locus"]])
    for g in gradient(poly):
        if not ideal_member(g, locus):
            return CheckResult("containment", False, f"gradient component {g} not in the locus ideal")
    return CheckResult(
        "containment", True,
        "all gradient components lie in the locus ideal; reverse containment: unverified",
    )


def _check_cert(check: dict) -> CheckResult:
    with resources.as_file(fixture_root() / check["cert"]) as path:
        cert = load_certificate(path)
    report = verify_certificate(cert)
    expect = check["expect"]
    if expect == "valid":
        if report.valid:
            return CheckResult("cert", True, f"{check['cert']}: valid")
        return CheckResult("cert", False, f"{check['cert']}: expected valid, failed at step {report.failed_at}")
    wanted = expect["invalid_at"]
    if report.valid:
        return CheckResult("cert", False, f"{check['cert']}: expected failure at step {wanted}, got valid")
    if report.failed_at != wanted:
        return CheckResult(
            "cert", False,
            f"{check['cert']}: expected failure at step {wanted}, failed at {report.failed_at}",
        )
    return CheckResult("cert", True, f"{check['cert']}: invalid at step {wanted} as expected")
