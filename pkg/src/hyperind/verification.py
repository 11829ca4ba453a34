"""Exact conjecture checking, construction comparison, and numeric
verification of the entropy proof chain on quasi-bipartite instances.

The headline inequality ind(G) <= ind(H(r,d))^(n/rd) is checked as the
integer comparison ind(G)^(rd) <= ind(H(r,d))^n; floating point is used only
for reported entropies and slack, never for verdicts.  All probabilities are
exact rationals with denominator ind(G); the only rounding site is the final
base-2 logarithm, so every float inequality is checked at a small tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, log2
from typing import Iterable

from .constructions import build_complete_r_partite, build_hrd, \
    build_transversal_design_3
from .core import Hypergraph, QuasiBipartition, mask_of, quasi_bipartition, \
    vertices_of
from .counting import count_auto, count_brute, independent_set_masks, \
    ind_hrd_formula
from .errors import CapacityError, InvalidArgumentError

ENTROPY_CAP = 24
PROOF_EPS = 1e-9


# ---------------------------------------------------------------------------
# Conjecture checking


@dataclass(frozen=True)
class ConjectureVerdict:
    """Outcome of the exact check ind(G)^(rd) <= ind(H(r,d))^n."""

    holds: bool
    equality: bool
    r: int
    d: int
    n: int
    ind_g: int
    lhs: int  # ind(G)^(rd)
    rhs: int  # ind(H(r,d))^n
    slack_bits: float  # (log2 rhs - log2 lhs) / (r*d), per-block, >= 0 iff holds


def infer_uniform_regular(g: Hypergraph) -> tuple[int, int]:
    """The (r, d) of a uniform regular hypergraph, with named offenders on
    failure.  Requires r >= 2 and d >= 1."""
    if not g.edges:
        raise InvalidArgumentError("hypergraph has no edges (degree d = 0 is rejected)")
    r = len(g.edges[0])
    for e in g.edges:
        if len(e) != r:
            raise InvalidArgumentError(
                f"not uniform: edge {e} has size {len(e)}, expected {r}")
    if r < 2:
        raise InvalidArgumentError("uniformity r must be >= 2")
    degs = g.degrees()
    d = degs[0] if g.n else 0
    for v, dv in enumerate(degs):
        if dv != d:
            raise InvalidArgumentError(
                f"not regular: vertex {v} has degree {dv}, vertex 0 has degree {d}")
    if d < 1:
        raise InvalidArgumentError("degree d must be >= 1")
    return r, d


def check_conjecture(g: Hypergraph, method: str = "auto") -> ConjectureVerdict:
    """Exact verdict on whether g respects the extremal bound of H(r,d)."""
    r, d = infer_uniform_regular(g)
    if method == "brute":
        ind_g = count_brute(g)
    elif method == "branch":
        from .counting import count_branch
        ind_g = count_branch(g)
    else:
        ind_g = count_auto(g)
    lhs = ind_g ** (r * d)
    rhs = ind_hrd_formula(r, d) ** g.n
    slack = (log2(rhs) - log2(lhs)) / (r * d)
    return ConjectureVerdict(holds=lhs <= rhs, equality=lhs == rhs,
                             r=r, d=d, n=g.n, ind_g=ind_g,
                             lhs=lhs, rhs=rhs, slack_bits=slack)


def is_union_of_kdd(g: Hypergraph, d: int) -> bool:
    """True iff g is a disjoint union of complete bipartite graphs K_{d,d}
    (the known equality cases for r = 2)."""
    if g.uniformity() != 2:
        return False
    for comp in g.component_masks():
        verts = vertices_of(comp)
        if len(verts) != 2 * d:
            return False
        sub = g.restrict(verts)
        if sub.num_edges != d * d or sub.regularity() != d:
            return False
        if quasi_bipartition(sub) is None:
            return False
    return True


# ---------------------------------------------------------------------------
# Construction comparison


@dataclass(frozen=True)
class ComparisonReport:
    """Exact per-block comparison of H(r,d) against a rival construction at a
    common vertex count L = lcm of the block sizes."""

    kind: str  # "complete-r-partite" or "transversal-design-3"
    r: int
    d: int
    rival_n: int
    ind_hrd: int
    ind_rival: int
    L: int
    hrd_power: int  # ind(H(r,d))^(L/(r d))
    rival_power: int  # ind(rival)^(L/rival_n)
    winner: str  # "hrd", "rival", or "tie"


def _compare(kind: str, r: int, d: int, rival: Hypergraph) -> ComparisonReport:
    ind_h = ind_hrd_formula(r, d)
    ind_r = count_brute(rival)
    block_h = r * d
    block_r = rival.n
    L = block_h * block_r // gcd(block_h, block_r)
    hp = ind_h ** (L // block_h)
    rp = ind_r ** (L // block_r)
    winner = "hrd" if hp > rp else ("rival" if rp > hp else "tie")
    return ComparisonReport(kind=kind, r=r, d=d, rival_n=block_r,
                            ind_hrd=ind_h, ind_rival=ind_r, L=L,
                            hrd_power=hp, rival_power=rp, winner=winner)


def compare_constructions(r: int, t: int | None = None,
                          m: int | None = None) -> ComparisonReport:
    """Compare disjoint unions of H(r,d) against the rival family.

    With t set: the complete r-partite r-graph with parts of size t, so
    d = t^(r-1).  With m set: the cyclic 3-partite transversal design of
    order m (requires r = 3), so d = m.
    """
    if (t is None) == (m is None):
        raise InvalidArgumentError("specify exactly one of t (complete) or m (transversal)")
    if t is not None:
        if r < 2 or t < 1:
            raise InvalidArgumentError(f"need r >= 2 and t >= 1, got r={r}, t={t}")
        d = t ** (r - 1)
        return _compare("complete-r-partite", r, d, build_complete_r_partite(r, t))
    if r != 3:
        raise InvalidArgumentError("transversal designs are implemented for r = 3 only")
    if m < 1:
        raise InvalidArgumentError(f"need m >= 1, got m={m}")
    return _compare("transversal-design-3", 3, m, build_transversal_design_3(m))


# ---------------------------------------------------------------------------
# Exact distributions and entropy


@dataclass(frozen=True)
class SubsetDistribution:
    """Exact probability table over the configurations of a vertex subset.

    Configurations are bitmasks within `domain`; each weight is an integer
    numerator over the common denominator `total`.
    """

    domain: int
    weights: dict[int, int] = field(hash=False)
    total: int

    def probability(self, config: Iterable[int] | int) -> Fraction:
        cmask = config if isinstance(config, int) else mask_of(config)
        return Fraction(self.weights.get(cmask, 0), self.total)

    def support(self) -> list[frozenset[int]]:
        return [frozenset(vertices_of(c)) for c in sorted(self.weights)]


def joint_distribution(g: Hypergraph,
                       cap: int | None = None) -> SubsetDistribution:
    """Uniform distribution over the independent sets of g, as exact rationals
    with denominator ind(g)."""
    cap = ENTROPY_CAP if cap is None else cap
    if g.n > cap:
        raise CapacityError(
            f"joint_distribution capped at n <= {cap}, got n = {g.n}")
    masks = independent_set_masks(g, cap=cap)
    return SubsetDistribution(domain=(1 << g.n) - 1,
                              weights={m: 1 for m in masks},
                              total=len(masks))


def marginal(dist: SubsetDistribution,
             s: Iterable[int] | int) -> SubsetDistribution:
    """Project the distribution onto the coordinates in s (exact)."""
    smask = s if isinstance(s, int) else mask_of(s)
    if smask & ~dist.domain:
        raise InvalidArgumentError("marginal coordinates outside the domain")
    weights: dict[int, int] = {}
    for config, w in dist.weights.items():
        proj = config & smask
        weights[proj] = weights.get(proj, 0) + w
    return SubsetDistribution(domain=smask, weights=weights, total=dist.total)


def entropy(dist: SubsetDistribution) -> float:
    """Shannon entropy in bits: log2(total) - (1/total) * sum w*log2(w)."""
    acc = 0.0
    for w in dist.weights.values():
        if w > 1:
            acc += w * log2(w)
    return log2(dist.total) - acc / dist.total


def conditional_entropy(dist: SubsetDistribution,
                        target: Iterable[int] | int,
                        given: Iterable[int] | int) -> float:
    """H(target | given) = H(target u given) - H(given), in bits."""
    tmask = target if isinstance(target, int) else mask_of(target)
    gmask = given if isinstance(given, int) else mask_of(given)
    if (tmask | gmask) & ~dist.domain:
        raise InvalidArgumentError("coordinates outside the domain")
    return entropy(marginal(dist, tmask | gmask)) - entropy(marginal(dist, gmask))


def _binary_entropy(w1: int, w0: int) -> float:
    total = w1 + w0
    acc = 0.0
    for w in (w1, w0):
        if 0 < w < total:
            acc -= (w / total) * log2(w / total)
    return acc


# ---------------------------------------------------------------------------
# Proof-step verification


@dataclass(frozen=True)
class ProofStep:
    name: str
    lhs: float
    rhs: float
    passed: bool

    @property
    def margin(self) -> float:
        return self.rhs - self.lhs


@dataclass(frozen=True)
class ProofStepReport:
    n: int
    r: int
    d: int
    ind_g: int
    log2_ind: float
    hrd_bound_bits: float  # (n/rd) * log2 ind(H(r,d))
    steps: tuple[ProofStep, ...]
    findings: tuple[str, ...]

    @property
    def all_passed(self) -> bool:
        return all(s.passed for s in self.steps)


def verify_proof_steps(g: Hypergraph, eps: float = PROOF_EPS,
                       cap: int | None = None) -> ProofStepReport:
    """Numerically check every inequality in the entropy argument bounding
    ind(G) for a d-regular quasi-bipartite r-graph G.

    Steps, in the order the argument chains them:

    1. cover validity (exact): the link spans {V(L(a)) : a in A} cover each
       B-vertex exactly d times;
    2. Shearer: H(X_B) <= (1/d) sum_a H(X_{V(L(a))});
    3. subadditivity: H(X_A | X_B) <= sum_a H(X_a | X_B), plus the equality
       H(X_a | X_B) = H(X_a | X_{V(L(a))}) (two-sided; a violation beyond eps
       is reported as a finding, not a failure);
    4. per-configuration bound: lambda(I) in {1, 2} and
       H(X_a | X_{V(L(a))} = I) <= log2 lambda(I);
    5. Jensen: sum_I p(I) log2(lambda(I)^d / p(I)) <= log2 sum_I lambda(I)^d;
    6. counting bound (exact): sum_I lambda(I)^d
       <= 2^|V(L(a))| + (2^d - 1) ind(L(a));
    7. link bound (exact): ind(L(a)) <= (2^(r-1) - 1)^d;
    8. final: H(X) <= (n/rd) log2 ind(H(r,d)).
    """
    r, d = infer_uniform_regular(g)
    cert = quasi_bipartition(g)
    if cert is None:
        raise InvalidArgumentError(
            "hypergraph is not quasi-bipartite (recognizer found no certificate)")
    cap = ENTROPY_CAP if cap is None else cap
    if g.n > cap:
        raise CapacityError(f"verify_proof_steps capped at n <= {cap}")

    dist = joint_distribution(g, cap=cap)
    a_side = sorted(cert.a_side)
    b_mask = mask_of(cert.b_side)
    a_mask = mask_of(cert.a_side)
    ind_g = dist.total
    h_x = entropy(dist)

    links = {a: g.link(a) for a in a_side}
    span_masks = {a: mask_of(links[a].span) for a in a_side}
    steps: list[ProofStep] = []
    findings: list[str] = []

    # (1) exact d-cover of B by the link spans
    cover = {b: 0 for b in cert.b_side}
    for a in a_side:
        for b in links[a].span:
            cover[b] += 1
    counts = sorted(cover.values()) or [d]
    steps.append(ProofStep("cover-validity", float(counts[0]), float(counts[-1]),
                           counts[0] == d and counts[-1] == d))

    # (2) Shearer over the d-cover
    h_b = entropy(marginal(dist, b_mask))
    shearer_rhs = sum(entropy(marginal(dist, span_masks[a])) for a in a_side) / d
    steps.append(ProofStep("shearer", h_b, shearer_rhs, h_b <= shearer_rhs + eps))

    # (3) subadditivity of H(X_A | X_B) and the conditioning reduction
    h_a_given_b = conditional_entropy(dist, a_mask, b_mask)
    sub_rhs = sum(conditional_entropy(dist, 1 << a, b_mask) for a in a_side)
    steps.append(ProofStep("subadditivity", h_a_given_b, sub_rhs,
                           h_a_given_b <= sub_rhs + eps))
    worst_eq = 0.0
    for a in a_side:
        diff = abs(conditional_entropy(dist, 1 << a, b_mask)
                   - conditional_entropy(dist, 1 << a, span_masks[a]))
        worst_eq = max(worst_eq, diff)
        if diff > eps:
            findings.append(
                f"conditioning reduction differs by {diff:.3e} bits at vertex {a}")
    steps.append(ProofStep("conditioning-reduction", worst_eq, 0.0, True))

    # per-a data for steps (4)-(7)
    lambda_pass = True
    worst_lambda_margin = 0.0
    worst_jensen = (0.0, 0.0)
    count_bound_pass = True
    worst_count = (0, 0)
    link_bound_pass = True
    worst_link = (0, 0)
    for a in a_side:
        smask = span_masks[a]
        abit = 1 << a
        marg = marginal(dist, smask)
        with_a: dict[int, int] = {}
        for full, w in dist.weights.items():
            if full & abit:
                c = full & smask
                with_a[c] = with_a.get(c, 0) + w
        lambdas: dict[int, int] = {}
        for config, w_total in marg.weights.items():
            lam = 2 if g.is_independent(config | abit) else 1
            lambdas[config] = lam
            # (4) conditional entropy of X_a given the exact configuration
            w1 = with_a.get(config, 0)
            h_cond = _binary_entropy(w1, w_total - w1)
            margin = h_cond - log2(lam)
            if margin > worst_lambda_margin:
                worst_lambda_margin = margin
            if margin > eps or lam not in (1, 2):
                lambda_pass = False
        # (5) Jensen
        lam_sum = sum(lam ** d for lam in lambdas.values())
        jensen_lhs = sum(
            (w / marg.total) * (d * log2(lambdas[c]) - log2(w / marg.total))
            for c, w in marg.weights.items())
        jensen_rhs = log2(lam_sum)
        if jensen_lhs - jensen_rhs > worst_jensen[0] - worst_jensen[1]:
            worst_jensen = (jensen_lhs, jensen_rhs)
        # (6) exact counting bound
        span_size = smask.bit_count()
        link_graph = links[a].graph.restrict(links[a].span)
        ind_link = count_brute(link_graph)
        bound6 = 2 ** span_size + (2 ** d - 1) * ind_link
        if lam_sum > bound6:
            count_bound_pass = False
        if lam_sum - bound6 > worst_count[0] - worst_count[1]:
            worst_count = (lam_sum, bound6)
        # (7) exact link bound
        bound7 = (2 ** (r - 1) - 1) ** d
        if ind_link > bound7:
            link_bound_pass = False
        if ind_link - bound7 > worst_link[0] - worst_link[1]:
            worst_link = (ind_link, bound7)

    steps.append(ProofStep("lambda-bound", worst_lambda_margin, 0.0,
                           lambda_pass and worst_lambda_margin <= eps))
    steps.append(ProofStep("jensen", worst_jensen[0], worst_jensen[1],
                           worst_jensen[0] <= worst_jensen[1] + eps))
    steps.append(ProofStep("counting-bound", float(worst_count[0]),
                           float(worst_count[1]), count_bound_pass))
    steps.append(ProofStep("link-bound", float(worst_link[0]),
                           float(worst_link[1]), link_bound_pass))

    # (8) final bound
    hrd_bound = (g.n / (r * d)) * log2(ind_hrd_formula(r, d))
    steps.append(ProofStep("final-bound", h_x, hrd_bound, h_x <= hrd_bound + eps))

    return ProofStepReport(n=g.n, r=r, d=d, ind_g=ind_g, log2_ind=h_x,
                           hrd_bound_bits=hrd_bound, steps=tuple(steps),
                           findings=tuple(findings))
