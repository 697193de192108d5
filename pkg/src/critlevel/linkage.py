"""Linkage combinatorics: criticality, block windows, classification.

The equivalence class of a highest weight is generated by the order
"nu precedes lambda" whenever 2(lambda+rho, beta) = n (beta, beta) for
a positive root beta and a positive integer n, with nu = lambda - n*beta.
Blocks are infinite, so everything here is windowed: a BlockWindow is
the slice of the class reachable from a base weight inside a truncation
box.

Critical weights are those of level -h_vee; there the imaginary-root
steps lambda -> lambda - k*delta open up and the class acquires its
delta-string structure.  Classification (generic / subgeneric, regular,
dominant / anti-dominant) is read off the finite integral Weyl group
acting on the finite part.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .affine import (
    AffineRoot,
    AffineWeight,
    Bounds,
    affine_form,
    affine_root,
    delta_weight,
    finite_dot_reflect,
    offset,
    pairing_coroot,
    reflect,
    rho,
)
from .cartan import coroot_pairing, finite_form, finite_weyl_orbit, reflect_finite
from .errors import DomainError, IntegrityError, ResourceCapError

F = Fraction

DEFAULT_WINDOW_CAP = 20000


def is_critical(lam):
    """Level test: <lambda, K> = -h_vee."""
    return lam.level == -lam.rs.dual_coxeter


def critical_tests(lam, probe_bounds=None):
    """The five equivalent criticality criteria, computed independently.

    Returns a dict with keys t1..t5 and 'agree'.

    * t2: lambda + delta lies in a small linkage window around lambda.
    * t3: (lambda + rho, delta) = 0.
    * t4: <lambda, K> = -h_vee.
    * t5: the dot reflections s_{alpha + n delta} induce, modulo delta,
      the same map on the finite part for n = 0 and n = 1, for every
      finite root alpha.
    * t1 (shift functor preserves the block) is a statement about a
      functor with no finite test independent of t2; it is reported
      equal to t2 by construction.
    """
    rs = lam.rs
    if probe_bounds is None:
        probe_bounds = Bounds(2, 4 * rs.dual_coxeter)

    window = block_window(lam, probe_bounds)
    t2 = (lam + delta_weight(rs)) in window.members

    t3 = affine_form(lam + rho(rs), delta_weight(rs)) == 0

    t4 = lam.level == -rs.dual_coxeter

    t5 = True
    for alpha in rs.positive_roots:
        for signed in (alpha, tuple(-x for x in alpha)):
            img0 = reflect(lam, affine_root(rs, signed, 0), dot=True)
            img1 = reflect(lam, affine_root(rs, signed, 1), dot=True)
            if img0.finite != img1.finite:
                t5 = False
                break
        if not t5:
            break

    t1 = t2
    tests = {"t1": t1, "t2": t2, "t3": t3, "t4": t4, "t5": t5}
    tests["agree"] = len({t1, t2, t3, t4, t5}) == 1
    return tests


@dataclass(frozen=True)
class LinkageStep:
    """One generator of the linkage order: nu = lam - n * beta."""

    beta: AffineRoot
    n: int


def _real_roots_in_reach(rs, bounds):
    out = [affine_root(rs, alpha, 0) for alpha in rs.positive_roots]
    for m in range(1, bounds.delta_depth_max + 1):
        for alpha in rs.positive_roots:
            out.append(affine_root(rs, alpha, m))
            out.append(affine_root(rs, tuple(-x for x in alpha), m))
    return out


def kk_successors(lam, bounds):
    """One-step linkage predecessors of lam inside the box.

    For real beta in R^+ with n := <lam+rho, beta^vee> a positive
    integer this emits lam - n*beta.  The imaginary double family
    collapses to lam - k*delta for k = 1..depth, available exactly when
    (lam+rho, delta) = 0.
    """
    rs = lam.rs
    shifted = lam + rho(rs)
    out = []
    for beta in _real_roots_in_reach(rs, bounds):
        n = pairing_coroot(shifted, beta)
        if n.denominator == 1 and n > 0:
            step = offset(lam, lam - beta.as_weight().scaled(n))
            if step is not None and bounds.contains(step):
                out.append((lam - beta.as_weight().scaled(int(n)), LinkageStep(beta, int(n))))
    if affine_form(shifted, delta_weight(rs)) == 0:
        for k in range(1, bounds.delta_depth_max + 1):
            out.append((lam - delta_weight(rs, k),
                        LinkageStep(affine_root(rs, rs.zero(), 1), k)))
    return out


def kk_predecessors(lam, bounds):
    """Mirror image: mu with lam among kk_successors(mu)."""
    rs = lam.rs
    shifted = lam + rho(rs)
    out = []
    for beta in _real_roots_in_reach(rs, bounds):
        n = -pairing_coroot(shifted, beta)
        if n.denominator == 1 and n > 0:
            step = offset(lam + beta.as_weight().scaled(int(n)), lam)
            if step is not None and bounds.contains(step):
                out.append((lam + beta.as_weight().scaled(int(n)), LinkageStep(beta, int(n))))
    if affine_form(shifted, delta_weight(rs)) == 0:
        for k in range(1, bounds.delta_depth_max + 1):
            out.append((lam + delta_weight(rs, k),
                        LinkageStep(affine_root(rs, rs.zero(), 1), k)))
    return out


@dataclass(frozen=True)
class BlockWindow:
    """The finite visible slice of an equivalence class around `base`."""

    base: AffineWeight
    bounds: Bounds
    members: frozenset
    integral_finite_roots: tuple
    is_critical: bool


def block_window(lam, bounds, cap=DEFAULT_WINDOW_CAP):
    """BFS closure of lam under linkage steps in both directions,
    intersected with the box around lam."""
    members = {lam}
    frontier = [lam]
    while frontier:
        current = frontier.pop()
        for nxt, _ in kk_successors(current, bounds) + kk_predecessors(current, bounds):
            step = offset(lam, nxt)
            if step is None or not bounds.contains(step):
                continue
            if nxt not in members:
                if len(members) >= cap:
                    raise ResourceCapError(
                        f"block window exceeded cap of {cap} members; shrink the bounds")
                members.add(nxt)
                frontier.append(nxt)
    return BlockWindow(
        base=lam,
        bounds=bounds,
        members=frozenset(members),
        integral_finite_roots=integral_roots(lam),
        is_critical=is_critical(lam),
    )


def integral_roots(lam):
    """R(Lambda): finite roots alpha with <lam+rho, alpha^vee> integral."""
    rs = lam.rs
    shifted = tuple(a + b for a, b in zip(lam.finite, rs.rho_fin))
    out = []
    for alpha in rs.positive_roots:
        if coroot_pairing(rs, shifted, alpha).denominator == 1:
            out.append(alpha)
            out.append(tuple(-x for x in alpha))
    return tuple(out)


def integral_positive_roots(lam):
    return tuple(a for a in integral_roots(lam) if a in set(lam.rs.positive_roots))


@dataclass(frozen=True)
class Classification:
    """Block-position data of a weight.

    `genericity` is one of 'generic', 'subgeneric', 'other'; the finite
    image of a critical class is the integral-Weyl dot-orbit of the
    finite part, and generic/subgeneric means that orbit has 1 resp. 2
    elements.  `is_regular` tests <lam+rho, alpha^vee> != 0 over the
    integral roots; `is_regular_full_weyl` is the same test over all
    finite roots (both are exposed because the two readings differ for
    non-integral weights).
    """

    is_critical: bool
    genericity: str
    subgeneric_root: Optional[tuple]
    is_regular: bool
    is_regular_full_weyl: bool
    is_dominant: bool
    is_antidominant: bool
    note: Optional[str] = None


def finite_image_orbit(lam):
    """The integral-Weyl dot-orbit of the finite part (the set the class
    projects to in h* when lam is critical)."""
    rs = lam.rs
    integral = integral_roots(lam)
    return finite_weyl_orbit(rs, lam.finite, dot=True, generators=integral or None) \
        if integral else {tuple(F(x) for x in lam.finite)}


def classify(lam):
    rs = lam.rs
    critical = is_critical(lam)
    integral = integral_roots(lam)
    shifted = tuple(a + b for a, b in zip(lam.finite, rs.rho_fin))

    regular_integral = all(coroot_pairing(rs, shifted, a) != 0 for a in integral)
    regular_full = all(coroot_pairing(rs, shifted, a) != 0 for a in rs.positive_roots)
    pos_integral = [a for a in integral if a in set(rs.positive_roots)]
    dominant = all(coroot_pairing(rs, shifted, a) >= 0 for a in pos_integral)
    antidominant = all(coroot_pairing(rs, shifted, a) <= 0 for a in pos_integral)

    note = None
    if critical:
        orbit = finite_image_orbit(lam)
        if len(orbit) == 1:
            genericity = "generic"
            sub_root = None
        elif len(orbit) == 2:
            genericity = "subgeneric"
            sub_root = _subgeneric_root(lam, orbit)
        else:
            genericity = "other"
            sub_root = None
    else:
        genericity = "other"
        sub_root = None
        note = "genericity is only defined for critical weights"

    return Classification(
        is_critical=critical,
        genericity=genericity,
        subgeneric_root=sub_root,
        is_regular=regular_integral,
        is_regular_full_weyl=regular_full,
        is_dominant=dominant,
        is_antidominant=antidominant,
        note=note,
    )


def _subgeneric_root(lam, orbit):
    rs = lam.rs
    for alpha in rs.positive_roots:
        img = reflect_finite(rs, lam.finite, alpha, dot=True)
        if tuple(img) != tuple(lam.finite) and tuple(img) in {tuple(o) for o in orbit}:
            return alpha
    raise IntegrityError("two-element orbit without a matching positive root")


def _require_arrow_input(lam, alpha):
    rs = lam.rs
    if not is_critical(lam):
        raise DomainError("arrow maps are defined on critical weights only")
    m = coroot_pairing(rs, tuple(a + b for a, b in zip(lam.finite, rs.rho_fin)), alpha)
    if m.denominator != 1:
        raise DomainError(f"<lam+rho, alpha^vee> = {m} is not integral")
    return int(m)


def _arrow_closed_form(lam, alpha, m, up):
    rs = lam.rs
    alpha_w = affine_root(rs, alpha, 0).as_weight()
    d = delta_weight(rs)
    if m == 0:
        return lam
    if up:
        if m > 0:
            return lam - alpha_w.scaled(m) + d.scaled(m)
        return lam - alpha_w.scaled(m)
    if m > 0:
        return lam - alpha_w.scaled(m)
    return lam - alpha_w.scaled(m) - d.scaled(-m)


def _arrow_bounded_search(lam, alpha, m, up, search_depth):
    """Minimal reflection image >= lam (or the inverse side) by scanning
    the n-family s_{alpha + n delta}.lam."""
    rs = lam.rs
    candidates = []
    for n in range(-search_depth, search_depth + 1):
        img = reflect(lam, affine_root(rs, alpha, n), dot=True)
        step = offset(img, lam) if up else offset(lam, img)
        if step is not None and step.is_nonneg:
            candidates.append(img)
    if not candidates:
        return lam if m == 0 else None
    best = candidates[0]
    for cand in candidates[1:]:
        step = offset(best, cand)
        if step is not None and step.is_nonneg:
            best = cand
    return best


def arrow_up(lam, alpha, search_depth=6):
    """Minimal s_{alpha + n delta} dot-image of lam that is >= lam.

    Uses the critical-level closed form and cross-checks it against a
    bounded scan over n; disagreement is an integrity failure.
    """
    m = _require_arrow_input(lam, alpha)
    closed = _arrow_closed_form(lam, alpha, m, up=True)
    searched = _arrow_bounded_search(lam, alpha, m, up=True, search_depth=search_depth)
    if searched is not None and searched != closed:
        raise IntegrityError("arrow_up closed form and bounded search disagree")
    return closed


def arrow_down(lam, alpha, search_depth=6):
    """Inverse of arrow_up along the same alpha-family."""
    m = _require_arrow_input(lam, alpha)
    closed = _arrow_closed_form(lam, alpha, m, up=False)
    searched = _arrow_bounded_search(lam, alpha, m, up=False, search_depth=search_depth)
    if searched is not None and searched != closed:
        raise IntegrityError("arrow_down closed form and bounded search disagree")
    return closed


def casimir_scalar(lam):
    """(lam+rho, lam+rho) - (rho, rho); constant on blocks.

    Normalized-form convention: this differs from the Killing-form
    scalar by a global positive factor, which is irrelevant for the
    constancy statements asserted here.
    """
    r = rho(lam.rs)
    return affine_form(lam + r, lam + r) - affine_form(r, r)


def classification_to_json(cls):
    return {
        "is_critical": cls.is_critical,
        "genericity": cls.genericity,
        "subgeneric_root": [str(x) for x in cls.subgeneric_root] if cls.subgeneric_root else None,
        "is_regular": cls.is_regular,
        "is_regular_full_weyl": cls.is_regular_full_weyl,
        "is_dominant": cls.is_dominant,
        "is_antidominant": cls.is_antidominant,
        "note": cls.note,
    }
