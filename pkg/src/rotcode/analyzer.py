"""Oligo quality metrics: homopolymer runs and GC content.

A homopolymer is a maximal run of one nucleotide of length >= 4 (three
repeats are tolerated). Runs are measured inside each oligo only.
"""

import csv
import itertools
import json
import os
from dataclasses import asdict, dataclass, field

HOMOPOLYMER_MIN = 4
GC_LOW = (3, 10)   # gc < 30 %
GC_HIGH = (6, 10)  # gc > 60 %
GC_BINS = 20


def runs(oligo):
    """All maximal runs as ``(start, length)``, covering the whole oligo."""
    out = []
    pos = 0
    for _, group in itertools.groupby(oligo):
        n = sum(1 for _ in group)
        out.append((pos, n))
        pos += n
    return out


def homopolymer_runs(oligo, min_len=HOMOPOLYMER_MIN):
    return [(s, n) for s, n in runs(oligo) if n >= min_len]


def gc_count(oligo):
    return oligo.count("G") + oligo.count("C")


def gc_fraction(oligo):
    return gc_count(oligo) / len(oligo) if oligo else 0.0


def gc_bin(oligo):
    """Histogram bin (5 % wide) computed in integers so 30 %, 60 % land exactly."""
    return min(GC_BINS * gc_count(oligo) // len(oligo), GC_BINS - 1)


def gc_problematic(oligo):
    g, n = gc_count(oligo), len(oligo)
    return GC_LOW[1] * g < GC_LOW[0] * n or GC_HIGH[1] * g > GC_HIGH[0] * n


@dataclass
class HomopolymerStats:
    n_homopolymers: int = 0
    avg_len: float = 0.0
    max_len: int = 0
    per_oligo_avg: list = field(default_factory=list)  # (oligo index, mean run length)
    per_oligo_runs: list = field(default_factory=list)  # qualifying run count per oligo

    @property
    def clean_oligo_fraction(self):
        n = len(self.per_oligo_runs)
        return sum(1 for r in self.per_oligo_runs if r == 0) / n if n else 0.0


def homopolymer_stats(pool):
    oligos = list(getattr(pool, "oligos", pool))
    lengths = []
    per_oligo_avg = []
    per_oligo_runs = []
    for i, oligo in enumerate(oligos):
        hp = [n for _, n in homopolymer_runs(oligo)]
        per_oligo_runs.append(len(hp))
        if hp:
            per_oligo_avg.append((i, sum(hp) / len(hp)))
        lengths += hp
    if not lengths:
        return HomopolymerStats(per_oligo_runs=per_oligo_runs)
    return HomopolymerStats(
        n_homopolymers=len(lengths),
        avg_len=sum(lengths) / len(lengths),
        max_len=max(lengths),
        per_oligo_avg=per_oligo_avg,
        per_oligo_runs=per_oligo_runs,
    )


@dataclass
class GcReport:
    per_oligo_gc: list = field(default_factory=list)
    histogram: list = field(default_factory=lambda: [0] * GC_BINS)
    problematic_fraction: float = 0.0
    n_above: int = 0
    n_below: int = 0

    @property
    def mean_gc(self):
        return sum(self.per_oligo_gc) / len(self.per_oligo_gc) if self.per_oligo_gc else 0.0


def gc_report(pool):
    oligos = list(getattr(pool, "oligos", pool))
    report = GcReport()
    for oligo in oligos:
        report.per_oligo_gc.append(gc_fraction(oligo))
        report.histogram[gc_bin(oligo)] += 1
        g, n = gc_count(oligo), len(oligo)
        if GC_LOW[1] * g < GC_LOW[0] * n:
            report.n_below += 1
        elif GC_HIGH[1] * g > GC_HIGH[0] * n:
            report.n_above += 1
    if oligos:
        report.problematic_fraction = (report.n_above + report.n_below) / len(oligos)
    return report


@dataclass
class QualityReport:
    n_oligos: int
    n_homopolymers: int
    avg_homopolymer_len: float
    max_homopolymer_len: int
    clean_oligo_fraction: float
    mean_gc: float
    gc_problematic_fraction: float
    gc_above_fraction: float
    gc_below_fraction: float
    gc_histogram: list
    max_per_oligo_avg_homopolymer_len: float
    # sidecar data, not part of the JSON document
    per_oligo: list = field(default_factory=list, repr=False)

    def to_dict(self):
        d = asdict(self)
        del d["per_oligo"]
        return d

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def analyze(pool):
    oligos = list(getattr(pool, "oligos", pool))
    hp = homopolymer_stats(oligos)
    gc = gc_report(oligos)
    n = len(oligos)
    avg_by_index = dict(hp.per_oligo_avg)
    per_oligo = [
        (i, gc.per_oligo_gc[i], hp.per_oligo_runs[i], avg_by_index.get(i, 0.0))
        for i in range(n)
    ]
    return QualityReport(
        n_oligos=n,
        n_homopolymers=hp.n_homopolymers,
        avg_homopolymer_len=hp.avg_len,
        max_homopolymer_len=hp.max_len,
        clean_oligo_fraction=hp.clean_oligo_fraction,
        mean_gc=gc.mean_gc,
        gc_problematic_fraction=gc.problematic_fraction,
        gc_above_fraction=gc.n_above / n if n else 0.0,
        gc_below_fraction=gc.n_below / n if n else 0.0,
        gc_histogram=gc.histogram,
        max_per_oligo_avg_homopolymer_len=max(avg_by_index.values(), default=0.0),
        per_oligo=per_oligo,
    )


COMPARED_FIELDS = (
    "n_homopolymers",
    "avg_homopolymer_len",
    "max_homopolymer_len",
    "gc_problematic_fraction",
)


def compare_reports(a, b):
    """Signed change from ``a`` to ``b`` (``b - a``) of the headline metrics."""
    return {f"delta_{name}": getattr(b, name) - getattr(a, name) for name in COMPARED_FIELDS}


def write_csv_sidecars(report, directory):
    """Write ``gc_histogram.csv`` and ``homopolymer_per_oligo.csv`` into ``directory``."""
    os.makedirs(directory, exist_ok=True)
    hist_path = os.path.join(directory, "gc_histogram.csv")
    with open(hist_path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["gc_low", "gc_high", "count"])
        for b, count in enumerate(report.gc_histogram):
            w.writerow([f"{b * 5 / 100:.2f}", f"{(b + 1) * 5 / 100:.2f}", count])
    per_oligo_path = os.path.join(directory, "homopolymer_per_oligo.csv")
    with open(per_oligo_path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["index", "gc", "n_runs", "avg_run_len"])
        for i, gc, n_runs, avg in report.per_oligo:
            w.writerow([i, f"{gc:.6f}", n_runs, f"{avg:.6f}"])
    return hist_path, per_oligo_path
