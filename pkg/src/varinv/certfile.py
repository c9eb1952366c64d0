"""Machine-checkable isomorphism certificates: the ``.cert`` file format,
its parser, and the replaying verifier.

File layout (``#`` starts a comment)::

    start:
    vars: x, y, z
    p = x - y*z - z^2
    step introduce u = x^2
    step rewrite rels: x - y*z - z^2; u - (y*z + z^2)^2
    step cancel x
    step rename u -> x
    end:
    vars: x, y, z
    q = x - (y*z + z^2)^2

Step polynomials are parsed lazily against the variable set current at
replay time, so a malformed or ill-typed step fails during verification
with a per-step reason rather than at load time.  Verification replays the
chain from the start block; the certificate is valid iff every step's
precondition holds and the final presentation equals the end block (same
variable names, equal relator ideals).  Reports render deterministically,
byte for byte.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .groebner import Ideal, default_order
from .polyring import VarSet, change_ring
from .presentations import (
    Presentation,
    RewriteMismatchError,
    StepError,
    cancel,
    introduce,
    presentations_equal,
    rename,
    rewrite,
    substituted_relator_count,
)
from .textio import ParseError, parse_polynomial, render


class CertificateSyntaxError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class IntroduceStep:
    var: str
    defining_source: str
    line: int

    def describe(self) -> str:
        return f"introduce {self.var} = {self.defining_source}"


@dataclass(frozen=True)
class CancelStep:
    var: str
    line: int

    def describe(self) -> str:
        return f"cancel {self.var}"


@dataclass(frozen=True)
class RenameStep:
    pairs: tuple[tuple[str, str], ...]
    line: int

    def describe(self) -> str:
        return "rename " + ", ".join(f"{a} -> {b}" for a, b in self.pairs)


@dataclass(frozen=True)
class RewriteStep:
    relator_sources: tuple[str, ...]
    line: int

    def describe(self) -> str:
        return f"rewrite {len(self.relator_sources)} relators"


CertStep = IntroduceStep | CancelStep | RenameStep | RewriteStep


@dataclass(frozen=True)
class Certificate:
    start: Presentation
    steps: tuple[CertStep, ...]
    end: Presentation
    name: str = "<certificate>"


@dataclass(frozen=True)
class StepResult:
    index: int  # 1-based; 0 marks the final end-block comparison
    description: str
    ok: bool
    detail: str = ""
    diagnostics: tuple[str, ...] = ()


@dataclass(frozen=True)
class CertificateReport:
    certificate: str
    start: Presentation
    results: tuple[StepResult, ...]
    valid: bool
    failed_at: int | None  # step index, or 0 for the end check

    def render(self) -> str:
        lines = [
            f"certificate: {self.certificate}",
            f"start: vars {self.start.vars}; relators: {len(self.start.relators)}",
        ]
        for r in self.results:
            label = f"step {r.index}" if r.index else "end check"
            status = "OK" if r.ok else "FAIL"
            suffix = f" ({r.detail})" if r.detail else ""
            head = f"{label}: {r.description}: " if r.description else f"{label}: "
            lines.append(f"{head}{status}{suffix}")
            lines.extend(f"  {d}" for d in r.diagnostics)
        if self.valid:
            lines.append("verdict: valid")
        elif self.failed_at:
            lines.append(f"verdict: invalid (step {self.failed_at})")
        else:
            lines.append("verdict: invalid (end check)")
        return "\n".join(lines) + "\n"


_IDENT = r"[A-Za-z][A-Za-z0-9_]*"
_INTRODUCE_RE = re.compile(rf"introduce\s+({_IDENT})\s*=\s*(.+)\Z")
_CANCEL_RE = re.compile(rf"cancel\s+({_IDENT})\s*\Z")
_RENAME_RE = re.compile(r"rename\s+(.+)\Z")
_RENAME_PAIR_RE = re.compile(rf"({_IDENT})\s*->\s*({_IDENT})\s*\Z")
_REWRITE_RE = re.compile(r"rewrite\s+rels:\s*(.+)\Z")


def _parse_block(lines: list[tuple[int, str]], what: str) -> Presentation:
    if not lines:
        raise CertificateSyntaxError(f"empty {what} block", 1)
    lineno, header = lines[0]
    if not header.startswith("vars:"):
        raise CertificateSyntaxError(f"{what} block must begin with 'vars:'", lineno)
    names = tuple(s.strip() for s in header[len("vars:"):].split(","))
    try:
        ring = VarSet(names)
    except ValueError as exc:
        raise CertificateSyntaxError(str(exc), lineno) from None
    relators = []
    for lineno, line in lines[1:]:
        if "=" not in line:
            raise CertificateSyntaxError("expected 'name = <polynomial>'", lineno)
        _, rhs = line.split("=", 1)
        try:
            relators.append(parse_polynomial(rhs, ring))
        except ParseError as exc:
            raise CertificateSyntaxError(exc.message, lineno) from None
    return Presentation(ring, tuple(relators))


def parse_certificate(text: str, name: str = "<certificate>") -> Certificate:
    start_lines: list[tuple[int, str]] = []
    end_lines: list[tuple[int, str]] = []
    steps: list[CertStep] = []
    section = None
    for lineno, raw in enumerate(text.split("\n"), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line == "start:":
            section = "start"
            continue
        if line == "end:":
            section = "end"
            continue
        if line.startswith("step "):
            section = "steps"
            steps.append(_parse_step(line[len("step "):].strip(), lineno))
            continue
        if section == "start":
            start_lines.append((lineno, line))
        elif section == "end":
            end_lines.append((lineno, line))
        else:
            raise CertificateSyntaxError(f"unexpected line {line!r}", lineno)
    start = _parse_block(start_lines, "start")
    end = _parse_block(end_lines, "end")
    return Certificate(start, tuple(steps), end, name)


def _parse_step(body: str, lineno: int) -> CertStep:
    m = _INTRODUCE_RE.match(body)
    if m:
        return IntroduceStep(m.group(1), m.group(2).strip(), lineno)
    m = _CANCEL_RE.match(body)
    if m:
        return CancelStep(m.group(1), lineno)
    m = _RENAME_RE.match(body)
    if m:
        pairs = []
        for piece in m.group(1).split(","):
            pm = _RENAME_PAIR_RE.match(piece.strip())
            if not pm:
                raise CertificateSyntaxError(
                    f"malformed rename pair {piece.strip()!r}", lineno
                )
            pairs.append((pm.group(1), pm.group(2)))
        return RenameStep(tuple(pairs), lineno)
    m = _REWRITE_RE.match(body)
    if m:
        sources = tuple(s.strip() for s in m.group(1).split(";") if s.strip())
        if not sources:
            raise CertificateSyntaxError("rewrite step lists no relators", lineno)
        return RewriteStep(sources, lineno)
    raise CertificateSyntaxError(f"unknown step {body!r}", lineno)


def load_certificate(path: str | Path) -> Certificate:
    path = Path(path)
    return parse_certificate(path.read_text(encoding="utf-8"), path.name)


def _apply_step(step: CertStep, current: Presentation) -> tuple[Presentation, str]:
    """Apply one step; returns (next presentation, detail note)."""
    if isinstance(step, IntroduceStep):
        defining = parse_polynomial(step.defining_source, current.vars)
        return introduce(current, step.var, defining), ""
    if isinstance(step, CancelStep):
        touched = substituted_relator_count(current, step.var)
        after = cancel(current, step.var)
        plural = "relator" if touched == 1 else "relators"
        return after, f"substituted into {touched} remaining {plural}"
    if isinstance(step, RenameStep):
        return rename(current, dict(step.pairs)), ""
    relators = [parse_polynomial(src, current.vars) for src in step.relator_sources]
    return rewrite(current, relators), ""


def verify_certificate(cert: Certificate) -> CertificateReport:
    """Replay the chain; valid iff every step succeeds and the final
    presentation matches the end block."""
    current = cert.start
    results: list[StepResult] = []
    for index, step in enumerate(cert.steps, 1):
        try:
            current, detail = _apply_step(step, current)
        except RewriteMismatchError as exc:
            diags = _basis_diagnostics(exc.current_basis, exc.proposed_basis)
            results.append(StepResult(index, step.describe(), False, str(exc), diags))
            return CertificateReport(cert.name, cert.start, tuple(results), False, index)
        except (StepError, ParseError, ValueError) as exc:
            message = exc.message if isinstance(exc, ParseError) else str(exc)
            results.append(StepResult(index, step.describe(), False, message))
            return CertificateReport(cert.name, cert.start, tuple(results), False, index)
        results.append(StepResult(index, step.describe(), True, detail))
    end_desc = f"vars {cert.end.vars}; relators: {len(cert.end.relators)}"
    if presentations_equal(current, cert.end):
        results.append(StepResult(0, end_desc, True))
        return CertificateReport(cert.name, cert.start, tuple(results), True, None)
    if set(current.vars.names) != set(cert.end.vars.names):
        detail = f"final variables ({current.vars}) differ from end block"
        results.append(StepResult(0, end_desc, False, detail))
    else:
        order = default_order(current.vars)
        final_basis = current.relator_ideal().groebner_basis(order)
        end_ideal = Ideal(
            current.vars, [change_ring(r, current.vars) for r in cert.end.relators]
        )
        diags = _basis_diagnostics(final_basis, end_ideal.groebner_basis(order))
        results.append(StepResult(0, end_desc, False, "relator ideals differ", diags))
    return CertificateReport(cert.name, cert.start, tuple(results), False, 0)


def _basis_diagnostics(current_basis, proposed_basis) -> tuple[str, ...]:
    lines = ["current relator ideal, reduced basis:"]
    lines.extend(f"  {render(g)}" for g in current_basis or ())
    if not current_basis:
        lines.append("  0")
    lines.append("proposed relator ideal, reduced basis:")
    lines.extend(f"  {render(g)}" for g in proposed_basis or ())
    if not proposed_basis:
        lines.append("  0")
    return tuple(lines)
