"""Structured validation reports.

Checkers accumulate every violated axiom instance instead of stopping at
the first, so a report is useful both for tests (assert ok) and for the
command line (print what broke and where).
"""

from __future__ import annotations


class Violation:
    """One broken axiom instance: rule name, location, human detail."""

    __slots__ = ("rule", "where", "detail")

    def __init__(self, rule: str, where=None, detail: str = ""):
        self.rule = rule
        self.where = where
        self.detail = detail

    def __repr__(self):
        loc = f" at {self.where}" if self.where is not None else ""
        msg = f": {self.detail}" if self.detail else ""
        return f"[{self.rule}{loc}{msg}]"

    def __str__(self):
        loc = f" at {self.where}" if self.where is not None else ""
        msg = f": {self.detail}" if self.detail else ""
        return f"{self.rule}{loc}{msg}"


class ValidationReport:
    """Outcome of checking a structure against its axioms."""

    def __init__(self, subject: str):
        self.subject = subject
        self.violations: list[Violation] = []
        self.checked = 0

    def record(self, rule: str, where=None, detail: str = ""):
        self.violations.append(Violation(rule, where, detail))

    def tick(self, n: int = 1):
        self.checked += n

    @property
    def ok(self) -> bool:
        return not self.violations

    def merge(self, other: "ValidationReport"):
        self.violations.extend(other.violations)
        self.checked += other.checked

    def raise_if_failed(self, exc_type):
        if not self.ok:
            raise exc_type(self.summary())

    def summary(self) -> str:
        head = f"{self.subject}: {self.checked} identities checked, {len(self.violations)} violated"
        if self.ok:
            return head
        shown = "\n".join(f"  {v}" for v in self.violations[:25])
        more = "" if len(self.violations) <= 25 else f"\n  ... {len(self.violations) - 25} more"
        return f"{head}\n{shown}{more}"

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "checked": self.checked,
            "ok": self.ok,
            "violations": [
                {"rule": v.rule, "where": repr(v.where), "detail": v.detail}
                for v in self.violations
            ],
        }

    def __repr__(self):
        state = "ok" if self.ok else f"{len(self.violations)} violations"
        return f"<ValidationReport {self.subject}: {state}>"
