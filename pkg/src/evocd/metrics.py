"""Clustering-agreement metrics against a ground-truth partition.

NMI normalizes mutual information by the mean of the two label
entropies; AMI subtracts the exact expected mutual information under
the permutation (hypergeometric) null and normalizes by the larger
entropy.  All logarithms are natural.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

from .errors import ContractViolation
from .objectives import canonicalize


@dataclass(frozen=True)
class ContingencyTable:
    counts: np.ndarray   # (n1, n2) co-membership counts
    row_sums: np.ndarray
    col_sums: np.ndarray
    total: int


def contingency(p, q) -> ContingencyTable:
    p = canonicalize(np.asarray(p))
    q = canonicalize(np.asarray(q))
    if p.shape != q.shape:
        raise ContractViolation("partitions have different node counts")
    n1 = int(p.max()) + 1
    n2 = int(q.max()) + 1
    counts = np.bincount(p * n2 + q, minlength=n1 * n2).reshape(n1, n2)
    return ContingencyTable(counts=counts,
                            row_sums=counts.sum(axis=1),
                            col_sums=counts.sum(axis=0),
                            total=int(counts.sum()))


def _entropy(sums: np.ndarray, n: int) -> float:
    pr = sums[sums > 0] / n
    return float(-np.sum(pr * np.log(pr)))


def _mutual_information(table: ContingencyTable) -> float:
    n = table.total
    m = table.counts
    nz = m > 0
    outer = np.outer(table.row_sums, table.col_sums)
    terms = (m[nz] / n) * np.log(m[nz] * n / outer[nz])
    return float(terms.sum())


def nmi(p, q) -> float:
    """Normalized mutual information in [0, 1]; 0*log(0) is taken as 0.

    Two identical single-cluster partitions (both entropies zero) score 1
    by convention.
    """
    table = contingency(p, q)
    hu = _entropy(table.row_sums, table.total)
    hv = _entropy(table.col_sums, table.total)
    if hu == 0.0 and hv == 0.0:
        return 1.0
    mi = _mutual_information(table)
    if mi <= 0.0:
        return 0.0
    return 2.0 * mi / (hu + hv)


def expected_mutual_information(table: ContingencyTable) -> float:
    """Exact E[MI] under the permutation null, via the hypergeometric
    distribution of each cell given the marginals."""
    n = table.total
    a = table.row_sums.astype(np.int64)
    b = table.col_sums.astype(np.int64)
    lg = gammaln(np.arange(2 * n + 2))  # lg[k] = log((k-1)!)
    emi = 0.0
    for ai in a:
        for bj in b:
            lo = max(1, ai + bj - n)
            hi = min(ai, bj)
            if hi < lo:
                continue
            nij = np.arange(lo, hi + 1)
            log_term = np.log(n * nij / (ai * bj))
            log_prob = (lg[ai + 1] + lg[bj + 1] + lg[n - ai + 1] + lg[n - bj + 1]
                        - lg[n + 1] - lg[nij + 1] - lg[ai - nij + 1]
                        - lg[bj - nij + 1] - lg[n - ai - bj + nij + 1])
            emi += float(np.sum((nij / n) * log_term * np.exp(log_prob)))
    return emi


def ami(p, q) -> float:
    """Adjusted mutual information, max-entropy normalization; <= 1."""
    table = contingency(p, q)
    hu = _entropy(table.row_sums, table.total)
    hv = _entropy(table.col_sums, table.total)
    if hu == 0.0 and hv == 0.0:
        return 1.0
    mi = _mutual_information(table)
    emi = expected_mutual_information(table)
    denom = max(hu, hv) - emi
    if abs(denom) < 1e-15:
        return 0.0
    return (mi - emi) / denom


def entropy_report(p, q) -> dict:
    table = contingency(p, q)
    return {
        "H_u": _entropy(table.row_sums, table.total),
        "H_v": _entropy(table.col_sums, table.total),
        "mi": _mutual_information(table),
        "emi": expected_mutual_information(table),
    }


def harmonic_quality(ami_score: float, nmi_score: float) -> float:
    """Harmonic mean of AMI and NMI; negative AMI is clamped to 0 first."""
    a = max(0.0, ami_score)
    b = max(0.0, nmi_score)
    if a + b == 0.0:
        return 0.0
    return 2.0 * a * b / (a + b)
