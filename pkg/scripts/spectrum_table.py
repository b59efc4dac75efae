"""Print the closed-form paint cost spectrum for a grid of (k, n).

With --oracle, small trees are also solved by brute force and compared.
"""
import argparse
import time
from dataclasses import dataclass

from symspec import build_perfect_tree, spectrum_closed
from symspec.errors import BudgetExceeded
from symspec.oracle import OracleBudget, spectrum_oracle


@dataclass(frozen=True)
class TableConfig:
    k_max: int = 6
    n_max: int = 6
    oracle: bool = False
    oracle_vertex_cap: int = 15
    jobs: int = 1


def main(cfg: TableConfig) -> None:
    print(f"{'k':>3} {'n':>3} {'fix':>10} {'fdist':>6} {'ratio':>14}  spectrum")
    for k in range(2, cfg.k_max + 1):
        for n in range(1, cfg.n_max + 1):
            s = spectrum_closed(k, n)
            line = f"{k:>3} {n:>3} {s.fix:>10} {s.fdist:>6} {str(s.ratio):>14}  {s.format()}"
            if cfg.oracle and (k ** (n + 1) - 1) // (k - 1) <= cfg.oracle_vertex_cap:
                start = time.perf_counter()
                try:
                    agree = spectrum_oracle(build_perfect_tree(k, n), OracleBudget(), cfg.jobs) == s
                    line += f"  oracle={'agree' if agree else 'DISAGREE'} ({time.perf_counter() - start:.2f}s)"
                except BudgetExceeded as exc:
                    line += f"  oracle=budget (lower bound {exc.lower_bound})"
            print(line)


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k-max", type=int, default=6)
    ap.add_argument("--n-max", type=int, default=6)
    ap.add_argument("--oracle", action="store_true")
    ap.add_argument("--jobs", type=int, default=1)
    a = ap.parse_args()
    main(TableConfig(a.k_max, a.n_max, a.oracle, jobs=a.jobs))
