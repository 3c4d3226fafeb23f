"""Count semi-Heyting structures, Heyting ones, i-filters and isomorphism
classes on each small lattice.

    python3 scripts/corpus_counts.py [--max-size 4] [--json out.json]
"""
import argparse
import json
import time
from dataclasses import asdict, dataclass, field

from twistalg import catalog
from twistalg.catequiv import find_isomorphism
from twistalg.filters import enumerate_ifilters
from twistalg.finlat import chain
from twistalg.varieties import check_heyting, enumerate_semi_heyting


@dataclass
class CountConfig:
    max_size: int = 4
    lattices: list[str] = field(default_factory=lambda: ["chain1", "chain2", "chain3", "chain4", "diamond"])


@dataclass
class LatticeCounts:
    lattice: str
    size: int
    semi_heyting: int
    heyting: int
    iso_classes: int
    ifilters: int
    seconds: float


def iso_classes(algs):
    reps = []
    for a in algs:
        if not any(find_isomorphism(a, r) is not None for r in reps):
            reps.append(a)
    return len(reps)


def lattice_by_name(name):
    lats = catalog.corpus_lattices()
    if name in lats:
        return lats[name]
    if name.startswith("chain"):
        return chain(int(name[5:]))
    return {"m3": catalog.m3, "n5": catalog.n5}[name]()


def run(cfg: CountConfig) -> list[LatticeCounts]:
    rows = []
    for name in cfg.lattices:
        lat = lattice_by_name(name)
        t = time.perf_counter()
        algs = list(enumerate_semi_heyting(lat, max_size=cfg.max_size))
        rows.append(LatticeCounts(
            lattice=name,
            size=len(lat),
            semi_heyting=len(algs),
            heyting=sum(check_heyting(a).passed for a in algs),
            iso_classes=iso_classes(algs),
            ifilters=sum(len(enumerate_ifilters(a)) for a in algs),
            seconds=round(time.perf_counter() - t, 3),
        ))
    return rows


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-size", type=int, default=4)
    p.add_argument("--lattice", action="append", help="chainN, diamond, m3 or n5 (repeatable)")
    p.add_argument("--json")
    args = p.parse_args()
    cfg = CountConfig(max_size=args.max_size)
    if args.lattice:
        cfg.lattices = args.lattice
    rows = run(cfg)
    print(f"{'lattice':<9}{'n':>3}{'SH':>7}{'H':>4}{'iso':>6}{'i-filt':>8}{'sec':>8}")
    for r in rows:
        print(f"{r.lattice:<9}{r.size:>3}{r.semi_heyting:>7}{r.heyting:>4}{r.iso_classes:>6}{r.ifilters:>8}{r.seconds:>8.3f}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump({"config": asdict(cfg), "rows": [asdict(r) for r in rows]}, fh, indent=2)


if __name__ == "__main__":
    main()
