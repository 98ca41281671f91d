"""Figure rendering for the CLI report paths.

Figures are written to files next to the delimited output; matplotlib is
imported lazily with the Agg backend so library use never touches it.
"""

from __future__ import annotations

from .partitions import format_partition


def _pyplot():
    import matplotlib

    matplotlib.use("Agg", force=True)
    import matplotlib.pyplot as plt

    return plt


def plot_expansion(terms, title: str, path: str) -> None:
    """Bar chart of expansion coefficients, one bar per partition."""
    plt = _pyplot()
    labels = [format_partition(lam) for lam, _ in terms]
    values = [c for _, c in terms]
    fig, ax = plt.subplots(figsize=(max(4.0, 0.5 * len(terms) + 1.5), 3.2))
    ax.bar(range(len(values)), values, color="#39668c")
    ax.set_xticks(range(len(labels)))
    ax.set_xticklabels(labels, rotation=60, ha="right", fontsize=7)
    ax.set_ylabel("coefficient")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_series(values, title: str, path: str) -> None:
    """Marker plot of integer series coefficients against the exponent."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(5.0, 3.2))
    ax.plot(range(len(values)), values, marker="o", color="#39668c")
    ax.set_xlabel("d")
    ax.set_ylabel("coefficient of q^d")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_report(target: str, checked: int, failure_count: int, path: str) -> None:
    """Two-bar summary of a verification sweep."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(4.0, 3.2))
    ax.bar([0, 1], [checked - failure_count, failure_count], color=["#2e7d32", "#c62828"])
    ax.set_xticks([0, 1])
    ax.set_xticklabels(["passed", "failed"])
    ax.set_ylabel("checks")
    ax.set_title(f"verify {target}")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
