"""Check every coloring construction against its target paint cost."""
import argparse
import time
from dataclasses import dataclass

from symspec import build_perfect_tree, is_distinguishing
from symspec.colorings import frugal_coloring, k_distinguishing_coloring, middle_coloring
from symspec.errors import BudgetExceeded
from symspec.spectrum import fix_closed, rho_closed


@dataclass(frozen=True)
class VerifyConfig:
    k_max: int = 6
    n_max: int = 6
    max_vertices: int = 10**6


def targets(k, n):
    fix = fix_closed(k, n)
    middle = rho_closed(k, n, k + 1) if k + 1 <= fix + 1 else fix
    return {"dist": (k_distinguishing_coloring, k**n - 1), "middle": (middle_coloring, middle), "frugal": (frugal_coloring, fix)}


def main(cfg: VerifyConfig) -> int:
    bad = 0
    for k in range(2, cfg.k_max + 1):
        for n in range(1, cfg.n_max + 1):
            try:
                tree = build_perfect_tree(k, n, cfg.max_vertices)
            except BudgetExceeded:
                print(f"T_{k}^{n}: skipped (vertex budget)")
                continue
            start = time.perf_counter()
            cells = []
            for name, (build, cost) in targets(k, n).items():
                c = build(k, n)
                ok = is_distinguishing(tree, c) and c.paint_cost == cost
                bad += not ok
                cells.append(f"{name}={c.paint_cost}{'' if ok else '!'}")
            print(f"T_{k}^{n}: {' '.join(cells)} ({time.perf_counter() - start:.2f}s)")
    print("all constructions verified" if not bad else f"{bad} failures")
    return 1 if bad else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k-max", type=int, default=6)
    ap.add_argument("--n-max", type=int, default=6)
    a = ap.parse_args()
    raise SystemExit(main(VerifyConfig(a.k_max, a.n_max)))
