"""Twist every dually hemimorphic structure on the small corpus and compare
the two readings of DSN3 (weak versus strong middle arrow).

    python3 scripts/dsh_suite.py [--limit N]
"""
import argparse
import time
from collections import Counter
from dataclasses import dataclass

from twistalg import catalog
from twistalg.catequiv import find_isomorphism
from twistalg.twist import center, quotient_dsh, vk_dsh
from twistalg.varieties import check_dsn, check_heyting, enumerate_dsh


@dataclass
class DshConfig:
    limit: int | None = None


def run(cfg: DshConfig):
    tally = Counter()
    first_literal_failure = None
    t = time.perf_counter()
    for h in catalog.corpus_sh():
        heyting = check_heyting(h).passed
        for d in enumerate_dsh(h):
            if cfg.limit is not None and tally["total"] >= cfg.limit:
                break
            tally["total"] += 1
            a = vk_dsh(d).algebra
            tally["dsn"] += check_dsn(a).passed
            literal = check_dsn(a, strict_dsn3=True)
            if not literal.passed:
                tally["literal DSN3 fails"] += 1
                tally["literal fails on Heyting base"] += heyting
                if first_literal_failure is None:
                    first_literal_failure = (d.name, literal.witness("DSN3"))
            tally["center is 1'"] += center(a) == a.op("prime")[a.one]
            tally["quotient iso"] += find_isomorphism(quotient_dsh(a).algebra, d) is not None
    for k, v in tally.items():
        print(f"{k:<32}{v}")
    if first_literal_failure:
        print("first literal failure:", first_literal_failure)
    print(f"{time.perf_counter() - t:.1f}s")
    return tally


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--limit", type=int)
    run(DshConfig(p.parse_args().limit))


if __name__ == "__main__":
    main()
