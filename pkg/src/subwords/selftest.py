"""Randomized differential check of the library against the brute-force oracles."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .indexes import iota, zeta
from .signature import compose, signature_of_word
from .slp import expand, slp_indexes
from .testkit import gen_slp, gen_word, iota_bruteforce, zeta_bruteforce


@dataclass
class SelftestReport:
    cases: int = 0
    checks: int = 0
    counterexample: Optional[str] = None
    suites: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.counterexample is None

    def lines(self):
        for name, n in self.suites.items():
            yield f"{name}: {n} checks"
        if self.ok:
            yield f"OK: {self.checks} checks over {self.cases} cases"
        else:
            yield f"MISMATCH: {self.counterexample}"

    def as_dict(self):
        return {
            "ok": self.ok,
            "cases": self.cases,
            "checks": self.checks,
            "suites": self.suites,
            "counterexample": self.counterexample,
        }


def run_selftest(seed=0, cases=2000, max_len=10, alphabet_size=3) -> SelftestReport:
    report = SelftestReport()
    rng = np.random.default_rng(seed)

    def check(suite, ok, detail):
        report.suites[suite] = report.suites.get(suite, 0) + 1
        report.checks += 1
        if not ok and report.counterexample is None:
            report.counterexample = f"[{suite}] {detail}"
        return ok

    for case in range(cases):
        report.cases += 1
        u = gen_word(rng.integers(1 << 62), max_len, alphabet_size)
        text = u.text.decode("latin-1")
        got, want = iota(u), iota_bruteforce(u)
        if not check("iota", got == want, f"iota({text!r}) = {got}, oracle {want}"):
            break
        got, want = zeta(u), zeta_bruteforce(u)
        if not check("zeta", got == want, f"zeta({text!r}) = {got}, oracle {want}"):
            break
        if len(u) >= 2:
            cut = int(rng.integers(1, len(u)))
            left, right = u.text[:cut], u.text[cut:]
            composed = compose(signature_of_word(left), signature_of_word(right))
            direct = signature_of_word(u.text)
            if not check(
                "signature",
                composed == direct,
                f"compose at cut {cut} of {text!r}: {composed} != {direct}",
            ):
                break
        if case % 10 == 0:
            slp = gen_slp(rng.integers(1 << 62), 12, alphabet_size, max_length=4 * max_len + 4)
            word = expand(slp, 1 << 20)
            got = tuple(slp_indexes(slp))
            want = (iota(word), zeta(word))
            if not check(
                "slp", got == want, f"slp {slp.to_bytes()!r}: {got}, expanded {want}"
            ):
                break
    return report
