"""Finite simple root systems with the normalized invariant form.

Conventions used across the library:

* A finite weight is a tuple of ``Fraction`` in the fundamental-weight
  basis, so coordinate ``i`` equals the coroot pairing with the i-th
  simple root.  Simple roots are stored in the same basis (they are the
  columns of the Cartan matrix).
* The invariant bilinear form is normalized so that the highest root
  theta has squared length 2.  For the simply-laced types supported
  here every root then has (alpha, alpha) = 2 and the Gram matrix of
  the fundamental weights is the inverse Cartan matrix.

Only simply-laced systems are tabulated: A_n for n >= 1 and D_n for
n >= 4.  A1 and A2 are the ones everything downstream depends on.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError

ROOT_TABLE_VERSION = 1

Weight = tuple  # tuple of Fraction, fundamental-weight coordinates


def _fracs(values):
    return tuple(Fraction(v) for v in values)


def _mat_inverse(mat):
    """Exact inverse of a square integer/rational matrix via Gauss-Jordan."""
    n = len(mat)
    aug = [[Fraction(mat[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def _cartan_matrix(family, rank):
    a = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        a[i][i] = 2
    if family == "A":
        for i in range(rank - 1):
            a[i][i + 1] = a[i + 1][i] = -1
    elif family == "D":
        for i in range(rank - 3):
            a[i][i + 1] = a[i + 1][i] = -1
        # the fork: node rank-3 connects to both rank-2 and rank-1
        a[rank - 3][rank - 2] = a[rank - 2][rank - 3] = -1
        a[rank - 3][rank - 1] = a[rank - 1][rank - 3] = -1
    else:
        raise DomainError(f"unsupported family {family!r}")
    return tuple(tuple(row) for row in a)


@dataclass(frozen=True)
class FiniteRootSystem:
    """Tabulated data of a finite simple root system.

    Two instances compare equal iff they carry the same type label; the
    remaining fields are canonical functions of the label.
    """

    type_label: str
    rank: int
    cartan_matrix: tuple            # rows a[i][j] = <alpha_j, alpha_i^vee>
    simple_roots: tuple             # fundamental coordinates (Cartan columns)
    positive_roots: tuple           # fundamental coordinates, sorted by height
    highest_root: Weight
    form_gram: tuple                # Gram of fundamental weights = inverse Cartan
    dual_coxeter: int
    rho_fin: Weight                 # (1, ..., 1)
    _root_set: frozenset = field(repr=False, compare=False, default=frozenset())

    def __eq__(self, other):
        return isinstance(other, FiniteRootSystem) and self.type_label == other.type_label

    def __hash__(self):
        return hash(self.type_label)

    def zero(self):
        return _fracs([0] * self.rank)

    def is_root(self, weight):
        return tuple(Fraction(x) for x in weight) in self._root_set

    def simple_coords(self, weight):
        """Coordinates of a weight over the simple roots (exact rationals)."""
        self._check_len(weight)
        inv = self.form_gram  # inverse Cartan, columns give simple-root coords
        return tuple(sum(inv[i][j] * Fraction(weight[j]) for j in range(self.rank))
                     for i in range(self.rank))

    def _check_len(self, weight):
        if len(weight) != self.rank:
            raise DomainError(
                f"weight has {len(weight)} coordinates, expected {self.rank} for {self.type_label}")


SUPPORTED_TYPES = "A1, A2, A3, ... (any A_n) and D4, D5, ... (any D_n)"


def _parse_label(type_label):
    label = str(type_label).strip().upper()
    family, digits = label[:1], label[1:]
    if family not in ("A", "D") or not digits.isdigit():
        raise DomainError(f"unsupported type {type_label!r}; supported: {SUPPORTED_TYPES}")
    rank = int(digits)
    if family == "A" and rank >= 1:
        return family, rank, f"A{rank}"
    if family == "D" and rank >= 4:
        return family, rank, f"D{rank}"
    raise DomainError(f"unsupported type {type_label!r}; supported: {SUPPORTED_TYPES}")


def _close_positive_roots(cartan, rank):
    """All positive roots in simple-root coordinates, by Weyl-group closure."""
    simples = [tuple(int(i == j) for j in range(rank)) for i in range(rank)]

    def pairing(coords, i):
        # <beta, alpha_i^vee> = sum_j c_j a[i][j]
        return sum(c * cartan[i][j] for j, c in enumerate(coords))

    seen = set(simples)
    frontier = list(simples)
    while frontier:
        beta = frontier.pop()
        for i in range(rank):
            p = pairing(beta, i)
            img = list(beta)
            img[i] -= p
            img = tuple(img)
            if img not in seen:
                seen.add(img)
                frontier.append(img)
    pos = [b for b in seen if all(c >= 0 for c in b) and any(c > 0 for c in b)]
    pos.sort(key=lambda b: (sum(b), b))
    return pos


@lru_cache(maxsize=None)
def build_finite_root_system(type_label):
    """Build the tabulated root-system data for a supported type label."""
    family, rank, label = _parse_label(type_label)
    cartan = _cartan_matrix(family, rank)
    gram = _mat_inverse(cartan)

    pos_simple = _close_positive_roots(cartan, rank)

    def to_fund(coords):
        # fundamental coordinate i of sum_j c_j alpha_j is sum_j c_j a[i][j]
        return _fracs([sum(c * cartan[i][j] for j, c in enumerate(coords)) for i in range(rank)])

    positive = tuple(to_fund(c) for c in pos_simple)
    highest = positive[-1]  # maximal height
    simples = tuple(to_fund(tuple(int(i == j) for j in range(rank))) for i in range(rank))
    rho = _fracs([1] * rank)
    h_check = 1 + int(sum(pos_simple[-1]))  # 1 + height(theta) in the simply-laced case

    roots = frozenset(positive) | frozenset(tuple(-x for x in w) for w in positive)
    return FiniteRootSystem(
        type_label=label,
        rank=rank,
        cartan_matrix=cartan,
        simple_roots=simples,
        positive_roots=positive,
        highest_root=highest,
        form_gram=gram,
        dual_coxeter=h_check,
        rho_fin=rho,
        _root_set=roots,
    )


def finite_form(rs, mu, nu):
    """Normalized invariant form (mu, nu) on h*, exact rational."""
    rs._check_len(mu)
    rs._check_len(nu)
    g = rs.form_gram
    return sum(Fraction(mu[i]) * g[i][j] * Fraction(nu[j])
               for i in range(rs.rank) for j in range(rs.rank))


def coroot_pairing(rs, mu, alpha):
    """<mu, alpha^vee> = 2 (mu, alpha) / (alpha, alpha) for a root alpha."""
    if not rs.is_root(alpha):
        raise DomainError(f"{alpha!r} is not a root of {rs.type_label}")
    return 2 * finite_form(rs, mu, alpha) / finite_form(rs, alpha, alpha)


def reflect_finite(rs, mu, alpha, dot=False):
    """Reflection s_alpha on h*, linear or dot (w.mu = w(mu + rho) - rho)."""
    if dot:
        shifted = tuple(Fraction(m) + r for m, r in zip(mu, rs.rho_fin))
        img = reflect_finite(rs, shifted, alpha, dot=False)
        return tuple(x - r for x, r in zip(img, rs.rho_fin))
    p = coroot_pairing(rs, mu, alpha)
    return tuple(Fraction(m) - p * Fraction(a) for m, a in zip(mu, alpha))


def finite_weyl_orbit(rs, mu, dot=False, generators=None):
    """Orbit of mu under the group generated by s_alpha, alpha in `generators`.

    Defaults to the full finite Weyl group (simple reflections suffice).
    Passing a subset of roots gives the orbit under the subgroup they
    generate, which is how integral Weyl groups W(Lambda) are handled.
    """
    gens = tuple(generators) if generators is not None else rs.simple_roots
    start = _fracs(mu)
    seen = {start}
    frontier = [start]
    while frontier:
        w = frontier.pop()
        for alpha in gens:
            img = reflect_finite(rs, w, alpha, dot=dot)
            if img not in seen:
                seen.add(img)
                frontier.append(img)
    return seen


def root_system_to_json(rs):
    """JSON-friendly export: {type, cartan_matrix, positive_roots, gram}."""
    return {
        "table_version": ROOT_TABLE_VERSION,
        "type": rs.type_label,
        "cartan_matrix": [list(row) for row in rs.cartan_matrix],
        "positive_roots": [[str(x) for x in root] for root in rs.positive_roots],
        "gram": [[str(x) for x in row] for row in rs.form_gram],
    }
