"""Report emission for corpus runs: a delimited results table plus
summary figures rendered to files.

The figures are charts about the checks (pass counts per group, computed
vs captioned contact framings, audit invariant ranks); no attempt is
made to draw the diagrams themselves.
"""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .corpus import CheckResult, captioned_tb_values, corpus_report_rows

plt.rcParams["figure.figsize"] = (7.0, 4.0)
plt.rcParams["font.size"] = 9
plt.rcParams["axes.spines.top"] = False
plt.rcParams["axes.spines.right"] = False

PASS_COLOR = "#2e7d52"
FAIL_COLOR = "#b03a38"


def write_results_tsv(results: list[CheckResult], path: str) -> None:
    with open(path, "w") as fh:
        fh.write("group\tcheck\tstatus\tdetails\n")
        for group, name, status, details in corpus_report_rows(results):
            fh.write(f"{group}\t{name}\t{status}\t{details}\n")


def plot_group_summary(results: list[CheckResult], path: str) -> None:
    groups: dict[str, list[bool]] = {}
    for r in results:
        groups.setdefault(r.group, []).append(r.passed)
    names = list(groups)
    passed = [sum(v) for v in groups.values()]
    failed = [len(v) - sum(v) for v in groups.values()]

    fig, ax = plt.subplots()
    ax.bar(names, passed, color=PASS_COLOR, label="pass")
    ax.bar(names, failed, bottom=passed, color=FAIL_COLOR, label="fail")
    ax.set_ylabel("checks")
    ax.set_title("corpus checks by group")
    ax.legend(frameon=False)
    plt.setp(ax.get_xticklabels(), rotation=30, ha="right")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_tb_captions(path: str) -> None:
    rows = captioned_tb_values()
    names = [name.replace("-front", "").replace("front", "") for name, _, _ in rows]
    computed = [c for _, c, _ in rows]
    captioned = [w for _, _, w in rows]

    fig, ax = plt.subplots()
    x = range(len(rows))
    ax.bar([i - 0.2 for i in x], computed, width=0.4, color="#38608c", label="computed")
    ax.bar([i + 0.2 for i in x], captioned, width=0.4, color="#c8a03c", label="captioned")
    ax.axhline(0, color="black", linewidth=0.8)
    ax.set_xticks(list(x))
    ax.set_xticklabels(names, rotation=20, ha="right")
    ax.set_ylabel("tb")
    ax.set_title("Thurston-Bennequin numbers vs figure captions")
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_corpus_report(results: list[CheckResult], directory: str) -> list[str]:
    """Write results.tsv and the summary figures; returns written paths."""
    os.makedirs(directory, exist_ok=True)
    paths = []
    tsv = os.path.join(directory, "results.tsv")
    write_results_tsv(results, tsv)
    paths.append(tsv)
    summary = os.path.join(directory, "checks-by-group.png")
    plot_group_summary(results, summary)
    paths.append(summary)
    tb_fig = os.path.join(directory, "tb-captions.png")
    plot_tb_captions(tb_fig)
    paths.append(tb_fig)
    return paths


def write_audit_report(audit, directory: str, name: str = "audit") -> list[str]:
    """Delimited audit snapshots plus a rank-over-moves figure."""
    os.makedirs(directory, exist_ok=True)
    tsv = os.path.join(directory, f"{name}.tsv")
    rows = []
    with open(tsv, "w") as fh:
        fh.write("move\tdescription\tok\tH1\tH2\tboundary_H1\tpi1_abelianized\n")
        for record in audit.records:
            snap = record.after or record.before
            fmt = lambda g: "-" if g is None else str(g)
            fh.write(
                f"{record.index}\t{record.description}\t{'ok' if record.ok else record.error}"
                f"\t{fmt(snap.h1)}\t{fmt(snap.h2)}\t{fmt(snap.boundary_h1)}"
                f"\t{snap.abelianized_pi1}\n"
            )
            rank = None if snap.h1 is None else snap.h1.free_rank + len(snap.h1.torsion)
            rows.append((record.index, rank))
    paths = [tsv]

    fig, ax = plt.subplots()
    xs = [i for i, r in rows if r is not None]
    ys = [r for _, r in rows if r is not None]
    if xs:
        ax.step(xs, ys, where="post", color="#38608c")
        ax.set_xlabel("move index")
        ax.set_ylabel("H1 generator count")
        ax.set_title("interior first homology along the script")
    png = os.path.join(directory, f"{name}.png")
    fig.tight_layout()
    fig.savefig(png, dpi=150)
    plt.close(fig)
    paths.append(png)
    return paths
