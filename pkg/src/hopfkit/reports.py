"""Witness-carrying results and itemized verification reports.

The toolkit is a verifier: a bare ``False`` is useless, so predicate-style
operations return a :class:`Witnessed` (truthy wrapper with the failing
indices) and axiom checkers return a :class:`ValidityReport` listing every
violated axiom instance.  Theorem-level pipelines return a
:class:`ClaimLedger` whose claims are marked verified / refuted /
unsupported on the concrete instance.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Witnessed:
    """Boolean with an attached witness for the failing case."""

    ok: bool
    witness: object = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class Violation:
    check: str
    where: tuple
    detail: str = ""

    def render(self) -> str:
        loc = ",".join(str(x) for x in self.where)
        msg = f"{self.check}[{loc}]" if self.where else self.check
        return f"{msg}: {self.detail}" if self.detail else msg


@dataclass(frozen=True)
class ValidityReport:
    subject: str
    violations: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def merged(self, other: "ValidityReport") -> "ValidityReport":
        return ValidityReport(self.subject, self.violations + other.violations)

    def summary(self) -> str:
        if self.ok:
            return f"{self.subject}: valid"
        lines = [f"{self.subject}: {len(self.violations)} violation(s)"]
        lines += [f"  - {v.render()}" for v in self.violations]
        return "\n".join(lines)


VERIFIED = "verified"
REFUTED = "refuted"
UNSUPPORTED = "unsupported"


@dataclass(frozen=True)
class Claim:
    name: str
    status: str
    detail: str = ""


@dataclass(frozen=True)
class ClaimLedger:
    subject: str
    claims: tuple = ()

    @property
    def ok(self) -> bool:
        return all(c.status != REFUTED for c in self.claims)

    def __bool__(self) -> bool:
        return self.ok

    def claim(self, name: str):
        for c in self.claims:
            if c.name == name:
                return c
        return None

    def summary(self) -> str:
        lines = [f"{self.subject}:"]
        lines += [f"  [{c.status}] {c.name}" + (f" ({c.detail})" if c.detail else "")
                  for c in self.claims]
        return "\n".join(lines)


class LedgerBuilder:
    """Mutable accumulator used while a pipeline runs."""

    def __init__(self, subject: str):
        self.subject = subject
        self._claims: list[Claim] = []

    def add(self, name: str, ok: bool, detail: str = ""):
        self._claims.append(Claim(name, VERIFIED if ok else REFUTED, detail))

    def verified(self, name: str, detail: str = ""):
        self._claims.append(Claim(name, VERIFIED, detail))

    def refuted(self, name: str, detail: str = ""):
        self._claims.append(Claim(name, REFUTED, detail))

    def unsupported(self, name: str, detail: str = ""):
        self._claims.append(Claim(name, UNSUPPORTED, detail))

    def build(self) -> ClaimLedger:
        return ClaimLedger(self.subject, tuple(self._claims))
