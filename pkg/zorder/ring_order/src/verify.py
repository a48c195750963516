"""Verification campaign: theorem-based results against the brute-force oracle over a range of moduli.

For each n the campaign compares the lattice verdicts, every pairwise join and meet (up to the pair
cap) and the covering projections of every generalized projection. Per-n work is independent and
can be fanned out to worker processes; results are always merged in ascending n.
"""

from __future__ import annotations

import functools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import pandas as pd
import pandera.pandas as pa

from zorder.common.zorder.src import zorder_logging as logging
from zorder.common.zorder.src.campaign import Campaign
from zorder.common.zorder.src.config import get_cap
from zorder.common.zorder.src.utils.json_utils import dumps
from zorder.ring_order.src import oracle, structure
from zorder.ring_order.src.errors import CapExceededError, InvalidModulusError
from zorder.ring_order.src.poset import element_sets, make_context
from zorder.ring_order.src.render import with_schema

VERIFY_ROW_SCHEMA = pa.DataFrameSchema(
    {
        "n": pa.Column(int, pa.Check.ge(1), unique=True),
        "is_lattice_theorem": pa.Column(bool),
        "is_lattice_oracle": pa.Column(bool),
        "agree": pa.Column(bool),
        "failing_n1": pa.Column(object, nullable=True),
        "witness": pa.Column(object, nullable=True),
        "gp_count": pa.Column(int, pa.Check.ge(1)),
        "p_count": pa.Column(int, pa.Check.ge(1)),
        "n_count": pa.Column(int, pa.Check.ge(1)),
        "u_count": pa.Column(int, pa.Check.ge(1)),
        "pair_checked": pa.Column(bool),
        "pair_disagreements": pa.Column(int, pa.Check.ge(0)),
        "projection_disagreements": pa.Column(int, pa.Check.ge(0)),
    },
    strict=True,
    ordered=True,
)

NULLABLE_COLUMNS = ["failing_n1", "witness"]


@dataclass
class VerifyReport:
    lo: int
    hi: int
    per_n: list[dict[str, Any]] = field(default_factory=list)

    @property
    def summary(self) -> dict[str, int]:
        lattices = sum(1 for row in self.per_n if row["is_lattice_theorem"])
        return {
            "lattices": lattices,
            "non_lattices": len(self.per_n) - lattices,
            "disagreements": sum(1 for row in self.per_n if not row["agree"]),
        }

    def to_payload(self) -> dict[str, Any]:
        return with_schema({"range": [self.lo, self.hi], "per_n": self.per_n, "summary": self.summary})


def _pair_disagreements(ctx) -> int:
    joins = oracle.brute_join_table(ctx)
    meets = oracle.brute_meet_table(ctx)
    wrong = 0
    for a in range(ctx.n):
        for b in range(ctx.n):
            j = structure.join(ctx, a, b)
            m = structure.meet(ctx, a, b)
            wrong += (j.value if j.exists else oracle.ABSENT) != joins[a, b]
            wrong += (m.value if m.exists else oracle.ABSENT) != meets[a, b]
    return int(wrong)


def _projection_disagreements(ctx, gp: tuple[int, ...]) -> int:
    wrong = 0
    for a in gp:
        lower, upper = oracle.brute_covering_projections(ctx, a)
        upper_formula = structure.upper_covering_projection(ctx, a)
        wrong += upper_formula != upper or structure.upper_covering_via_power(ctx, a) != upper_formula
        wrong += structure.lower_covering_projection(ctx, a) != lower
    return int(wrong)


def verify_modulus(n: int, pair_cap: int, oracle_cap: int) -> dict[str, Any]:
    """All checks for one modulus, as one report row."""
    ctx = make_context(n)
    theorem = structure.is_lattice(ctx)
    brute = oracle.brute_is_lattice(ctx, cap=oracle_cap)
    sets = element_sets(ctx)

    pair_checked = n <= pair_cap
    pair_wrong = _pair_disagreements(ctx) if pair_checked else 0
    projection_wrong = _projection_disagreements(ctx, sets.gp)

    agree = theorem.verdict == brute.is_lattice and pair_wrong == 0 and projection_wrong == 0
    if not agree:
        logging.get_zorder_logger(__name__).error(
            "Z_%d: theorem %s, oracle %s, %d pair and %d projection disagreements",
            n,
            theorem.verdict,
            brute.is_lattice,
            pair_wrong,
            projection_wrong,
        )

    return {
        "n": n,
        "is_lattice_theorem": theorem.verdict,
        "is_lattice_oracle": brute.is_lattice,
        "agree": agree,
        "failing_n1": theorem.failing_n1,
        "witness": list(brute.witness) if brute.witness else None,
        "gp_count": len(sets.gp),
        "p_count": len(sets.p),
        "n_count": len(sets.n),
        "u_count": len(sets.u),
        "pair_checked": pair_checked,
        "pair_disagreements": pair_wrong,
        "projection_disagreements": projection_wrong,
    }


class VerifyCampaign(Campaign[dict[str, Any], VerifyReport]):
    """Cross-check campaign over [lo, hi].

    Attributes:
        lo, hi: Inclusive range of moduli
        jobs: Number of worker processes (1 runs in-process)
        out: Optional path of the JSON report
        pair_cap: Largest n for the pairwise join/meet comparison
        oracle_cap: Largest n accepted for the brute-force lattice check
    """

    def __init__(
        self,
        lo: int,
        hi: int,
        jobs: int = 1,
        out: str | Path | None = None,
        pair_cap: int | None = None,
        oracle_cap: int | None = None,
        fail_on_disagreement: bool = False,
    ) -> None:
        super().__init__(fail_on_disagreement=fail_on_disagreement)
        if not 1 <= lo <= hi:
            raise InvalidModulusError(f"Invalid range [{lo}, {hi}]")

        self.oracle_cap = oracle_cap if oracle_cap is not None else get_cap("oracle_lattice")
        if hi > self.oracle_cap:
            raise CapExceededError("oracle_lattice", self.oracle_cap, hi)

        self.lo = lo
        self.hi = hi
        self.jobs = max(1, jobs)
        self.out = Path(out) if out is not None else None
        self.pair_cap = pair_cap if pair_cap is not None else get_cap("pair_check")

    def extract(self) -> list[dict[str, Any]]:
        """Run verify_modulus for every n; executor.map keeps the ascending order of n."""
        task = functools.partial(verify_modulus, pair_cap=self.pair_cap, oracle_cap=self.oracle_cap)
        moduli = range(self.lo, self.hi + 1)
        logging.get_zorder_logger(__name__).info(
            "Verifying Z_n for n in [%d, %d] with %d job(s)", self.lo, self.hi, self.jobs
        )

        if self.jobs == 1:
            return [task(n) for n in moduli]

        with ProcessPoolExecutor(max_workers=self.jobs) as executor:
            return list(executor.map(task, moduli))

    def transform(self, records: list[dict[str, Any]]) -> pd.DataFrame:
        """Records to a DataFrame sorted by n and validated against VERIFY_ROW_SCHEMA."""
        df = pd.DataFrame.from_records(records, columns=list(VERIFY_ROW_SCHEMA.columns))
        for col in NULLABLE_COLUMNS:
            df[col] = pd.Series([r[col] for r in records], dtype=object)

        df = df.sort_values("n", kind="stable").reset_index(drop=True)
        return VERIFY_ROW_SCHEMA.validate(df)

    def load(self, df: pd.DataFrame) -> tuple[VerifyReport, int]:
        """Build the report and write it to self.out (if set)."""
        report = VerifyReport(lo=self.lo, hi=self.hi, per_n=[self._row(rec) for rec in df.to_dict(orient="records")])

        if self.out is not None:
            self.out.parent.mkdir(parents=True, exist_ok=True)
            self.out.write_text(dumps(report.to_payload()) + "\n", encoding="utf-8")
            logging.get_zorder_logger(__name__).info("Verify report written to %s", self.out)

        return report, report.summary["disagreements"]

    @staticmethod
    def _row(record: dict[str, Any]) -> dict[str, Any]:
        """Plain Python values (pandas hands back numpy scalars)."""
        return {key: value.item() if hasattr(value, "item") else value for key, value in record.items()}
