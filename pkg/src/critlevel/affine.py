"""The affine weight space h*_fin + C.Lambda0 + C.delta.

An affine weight is stored as (finite part, level, delta coefficient)
where the level is the pairing with the central element K and the delta
coefficient is the pairing with the grading operator D.  The invariant
form extends the finite one by (Lambda0, delta) = 1 and
(Lambda0, Lambda0) = (delta, delta) = 0, and is Weyl-invariant.

Weight differences that lie in the affine root lattice are handled as
``WeightOffset``: integer coordinate vectors over the affine simple
roots (alpha_0 = delta - theta, alpha_1, ..., alpha_l).  The partial
order nu <= lambda means lambda - nu has nonnegative such coordinates.
"""

from dataclasses import dataclass
from fractions import Fraction

from .cartan import FiniteRootSystem, coroot_pairing, finite_form, reflect_finite
from .errors import DomainError

F = Fraction


def _fracs(values):
    return tuple(F(v) for v in values)


@dataclass(frozen=True)
class AffineWeight:
    """Element of the affine dual Cartan space, exact rational coordinates."""

    rs: FiniteRootSystem
    finite: tuple      # fundamental-weight coordinates of the h* part
    level: Fraction    # pairing with K (coefficient of Lambda0)
    delta: Fraction    # pairing with D (coefficient of delta)

    def __add__(self, other):
        _same_rs(self, other)
        return AffineWeight(self.rs,
                            tuple(a + b for a, b in zip(self.finite, other.finite)),
                            self.level + other.level, self.delta + other.delta)

    def __sub__(self, other):
        _same_rs(self, other)
        return AffineWeight(self.rs,
                            tuple(a - b for a, b in zip(self.finite, other.finite)),
                            self.level - other.level, self.delta - other.delta)

    def __neg__(self):
        return AffineWeight(self.rs, tuple(-a for a in self.finite), -self.level, -self.delta)

    def scaled(self, c):
        c = F(c)
        return AffineWeight(self.rs, tuple(c * a for a in self.finite),
                            c * self.level, c * self.delta)

    def add_delta(self, n):
        return AffineWeight(self.rs, self.finite, self.level, self.delta + F(n))


def affine_weight(rs, finite, level=0, delta=0):
    """Normalizing constructor; coordinates become exact Fractions."""
    finite = _fracs(finite)
    if len(finite) != rs.rank:
        raise DomainError(
            f"finite part has {len(finite)} coordinates, expected {rs.rank} for {rs.type_label}")
    return AffineWeight(rs, finite, F(level), F(delta))


def lambda0(rs):
    return affine_weight(rs, [0] * rs.rank, level=1)


def delta_weight(rs, n=1):
    return affine_weight(rs, [0] * rs.rank, delta=n)


def rho(rs):
    """rho = rho_fin + h_vee * Lambda0; delta coefficient fixed to 0.

    Pairs to 1 with every affine simple coroot, including
    alpha_0 = delta - theta.
    """
    return affine_weight(rs, rs.rho_fin, level=rs.dual_coxeter, delta=0)


def _same_rs(a, b):
    if a.rs != b.rs:
        raise DomainError(f"root system mismatch: {a.rs.type_label} vs {b.rs.type_label}")


@dataclass(frozen=True)
class AffineRoot:
    """Root alpha + n*delta; real iff the finite part is nonzero."""

    rs: FiniteRootSystem
    finite: tuple   # fundamental coordinates; all zero for imaginary roots
    n: int

    def __post_init__(self):
        if all(x == 0 for x in self.finite) and self.n == 0:
            raise DomainError("(0, 0) is not a root")

    @property
    def is_real(self):
        return any(x != 0 for x in self.finite)

    @property
    def is_imaginary(self):
        return not self.is_real

    @property
    def is_positive(self):
        if self.n != 0:
            return self.n > 0
        coords = self.rs.simple_coords(self.finite)
        return all(c >= 0 for c in coords)

    def as_weight(self):
        return AffineWeight(self.rs, self.finite, F(0), F(self.n))


def affine_root(rs, finite, n=0):
    finite = _fracs(finite)
    if any(x != 0 for x in finite) and not rs.is_root(finite):
        raise DomainError(f"finite part {finite!r} is neither 0 nor a root of {rs.type_label}")
    return AffineRoot(rs, finite, int(n))


def real_positive_roots(rs, max_delta):
    """All real positive affine roots alpha + n*delta with 0 <= n <= max_delta."""
    out = [affine_root(rs, alpha, 0) for alpha in rs.positive_roots]
    for n in range(1, max_delta + 1):
        for alpha in rs.positive_roots:
            out.append(affine_root(rs, alpha, n))
            out.append(affine_root(rs, tuple(-x for x in alpha), n))
    return out


def affine_form(lam, mu):
    """(lam, mu) = (finite parts) + level(lam)*delta(mu) + level(mu)*delta(lam)."""
    _same_rs(lam, mu)
    return (finite_form(lam.rs, lam.finite, mu.finite)
            + lam.level * mu.delta + mu.level * lam.delta)


def pairing_coroot(lam, beta):
    """<lam, beta^vee> for a real root beta = alpha + n*delta.

    Equals <lam_fin, alpha^vee> + n * (2/(alpha,alpha)) * level(lam);
    agrees with 2 (lam, beta) / (beta, beta).
    """
    if isinstance(beta, AffineRoot):
        if not beta.is_real:
            raise DomainError("coroot undefined for imaginary roots")
        rs = beta.rs
        base = coroot_pairing(rs, lam.finite, beta.finite)
        sq = finite_form(rs, beta.finite, beta.finite)
        return base + F(beta.n) * 2 / sq * lam.level
    raise DomainError(f"expected an AffineRoot, got {type(beta).__name__}")


def reflect(lam, beta, dot=False):
    """Reflection in the real root beta; dot mode conjugates by +rho."""
    if not isinstance(beta, AffineRoot) or not beta.is_real:
        raise DomainError("reflections only exist for real roots")
    if dot:
        r = rho(lam.rs)
        return reflect(lam + r, beta, dot=False) - r
    return lam - beta.as_weight().scaled(pairing_coroot(lam, beta))


@dataclass(frozen=True)
class WeightOffset:
    """Coordinates of a root-lattice element over the affine simple roots.

    coords[0] is the alpha_0 = delta - theta coordinate (the delta depth);
    coords[1:] sit over the finite simple roots.
    """

    rs: FiniteRootSystem
    coords: tuple   # integers, length rank + 1

    @property
    def delta_depth(self):
        return self.coords[0]

    @property
    def finite_height(self):
        return sum(abs(c) for c in self.coords[1:])

    @property
    def is_nonneg(self):
        return all(c >= 0 for c in self.coords)

    def __add__(self, other):
        return WeightOffset(self.rs, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        return WeightOffset(self.rs, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def scaled(self, k):
        return WeightOffset(self.rs, tuple(int(k) * c for c in self.coords))

    def as_weight(self):
        """The offset as an affine weight (level 0)."""
        rs = self.rs
        c0 = self.coords[0]
        theta = rs.highest_root
        fin = [F(0)] * rs.rank
        for i, alpha in enumerate(rs.simple_roots):
            for j in range(rs.rank):
                fin[j] += self.coords[i + 1] * alpha[j]
        fin = [f - c0 * t for f, t in zip(fin, theta)]
        return AffineWeight(rs, tuple(fin), F(0), F(c0))


def zero_offset(rs):
    return WeightOffset(rs, tuple([0] * (rs.rank + 1)))


def weight_offset(rs, coords):
    coords = tuple(int(c) for c in coords)
    if len(coords) != rs.rank + 1:
        raise DomainError(f"offset needs {rs.rank + 1} coordinates, got {len(coords)}")
    return WeightOffset(rs, coords)


def offset(lam, nu):
    """Affine simple-root coordinates of lam - nu, or None when the
    difference is not in the affine root lattice (used as a filter)."""
    _same_rs(lam, nu)
    diff = lam - nu
    if diff.level != 0:
        return None
    c0 = diff.delta
    if c0.denominator != 1:
        return None
    rs = lam.rs
    theta = rs.highest_root
    shifted = tuple(f + c0 * t for f, t in zip(diff.finite, theta))
    coords = rs.simple_coords(shifted)
    if any(c.denominator != 1 for c in coords):
        return None
    return WeightOffset(rs, (int(c0),) + tuple(int(c) for c in coords))


def leq(nu, lam):
    """Partial order: nu <= lam iff lam - nu is a nonnegative integer
    combination of the affine simple roots."""
    off = offset(lam, nu)
    return off is not None and off.is_nonneg


@dataclass(frozen=True)
class Bounds:
    """Truncation box: |delta depth| and finite height of offsets."""

    delta_depth_max: int
    finite_height_max: int

    def __post_init__(self):
        if self.delta_depth_max < 0 or self.finite_height_max < 0:
            raise DomainError("bounds must be nonnegative")

    def contains(self, off):
        return (abs(off.delta_depth) <= self.delta_depth_max
                and off.finite_height <= self.finite_height_max)

    def intersect(self, other):
        return Bounds(min(self.delta_depth_max, other.delta_depth_max),
                      min(self.finite_height_max, other.finite_height_max))


def default_bounds(rs):
    """Windows are always finite truncations; these are the defaults."""
    return Bounds(6, 8 * rs.dual_coxeter)


def weight_to_json(lam):
    """{"finite": ["p/q", ...], "level": "p/q", "delta": "p/q"}."""
    return {
        "finite": [str(x) for x in lam.finite],
        "level": str(lam.level),
        "delta": str(lam.delta),
    }


def weight_from_json(rs, data):
    try:
        return affine_weight(rs, [F(x) for x in data["finite"]],
                             F(data["level"]), F(data["delta"]))
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"malformed weight JSON: {exc}") from exc


def finite_dot_reflect(lam, alpha):
    """Dot reflection by a finite root applied to a full affine weight.

    Finite reflections leave level and delta coefficient untouched, so
    this is the finite dot-action on the finite part.
    """
    img = reflect_finite(lam.rs, lam.finite, alpha, dot=True)
    return AffineWeight(lam.rs, tuple(img), lam.level, lam.delta)
