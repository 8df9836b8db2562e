"""The path of representations t -> rho_t of the free group <A, B>.

Words in the generators are strings over ``"AaBb"`` where the lower-case
letter is the inverse (``"aaB"`` is A^-2 B).  The boundary subgroup is
generated by the four peripheral words DELTA1..DELTA4, and the two curves
preserved by the order-four symmetry are XI = DELTA1 DELTA3 and
ETA = DELTA2 DELTA4.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .complexalg import (
    INF,
    AntiMobiusMap,
    MobiusMap,
    fixed_points,
    mobius_from_triples,
    anti_conjugate,
)

_INVERSE = {"A": "a", "a": "A", "B": "b", "b": "B"}


@dataclass(frozen=True)
class GroupWord:
    """A freely reduced word in A, B and their inverses."""

    letters: str = ""

    def __post_init__(self):
        bad = set(self.letters) - set(_INVERSE)
        if bad:
            raise ValueError(f"letters outside AaBb: {sorted(bad)}")
        object.__setattr__(self, "letters", reduce_word(self.letters))

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        return GroupWord(self.letters + other.letters)

    def inverse(self) -> "GroupWord":
        return GroupWord("".join(_INVERSE[c] for c in reversed(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return self.letters or "1"


def reduce_word(letters: str) -> str:
    out: list[str] = []
    for c in letters:
        if out and out[-1] == _INVERSE[c]:
            out.pop()
        else:
            out.append(c)
    return "".join(out)


DELTA1 = GroupWord("aaB")
DELTA2 = GroupWord("bba")
DELTA3 = GroupWord("AbA")
DELTA4 = GroupWord("aBBAA")
DELTAS = (DELTA1, DELTA2, DELTA3, DELTA4)
XI = DELTA1 * DELTA3
ETA = DELTA2 * DELTA4


@dataclass(frozen=True)
class RepPoint:
    t: float
    gen_a: MobiusMap
    gen_b: MobiusMap
    _gens: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        gens = {
            "A": self.gen_a,
            "a": self.gen_a.inverse(),
            "B": self.gen_b,
            "b": self.gen_b.inverse(),
        }
        object.__setattr__(self, "_gens", gens)

    def generator(self, letter: str) -> MobiusMap:
        return self._gens[letter]

    def psi(self) -> AntiMobiusMap:
        """The symmetry z -> i t / conj(z)."""
        return psi_map(self.t)


def psi_map(t: float) -> AntiMobiusMap:
    return AntiMobiusMap(MobiusMap(0, 1j * t, 1, 0))


def gen_a_matrix(t: float) -> MobiusMap:
    s = 1 / (t * (t - 1j))
    return MobiusMap(s * t * t, s * t * t, s * (1 + 2j * t), s * t * t)


def gen_b_matrix(t: float) -> MobiusMap:
    s = -1j / (t + 1j)
    return MobiusMap(s * 1j * t, s * (-1 + 2j * t), s, s * 1j * t)


def rep_at(t: float) -> RepPoint:
    if not t > 0:
        raise ValueError(f"parameter t must be positive, got {t}")
    return RepPoint(t, gen_a_matrix(t), gen_b_matrix(t))


def triple_generators(t: float) -> tuple[MobiusMap, MobiusMap]:
    """The generators rebuilt from their defining point triples."""
    a = mobius_from_triples((-1, 1j * t, 0), (0, -1j * t, 1))
    b = mobius_from_triples((-1, -1j * t, INF), (1, INF, 1j * t))
    return a, b


def evaluate_word(rep: RepPoint, w: GroupWord | str) -> MobiusMap:
    """Left-to-right product of generator matrices (the SL(2, C) lift)."""
    letters = w.letters if isinstance(w, GroupWord) else reduce_word(w)
    m = MobiusMap.identity()
    for c in letters:
        m = m @ rep.generator(c)
    return m


def f_delta12(t: float) -> complex:
    """Closed form of tr rho_t(delta1 delta2)."""
    t2 = t * t
    q = (1 + t2) ** 3
    re = 2 * t2 * (t2 * t2 - 22 * t2 - 7) / q
    im = (t2 - 1) * (5 * t2 + 1) ** 2 / (t * q)
    return complex(re, im)


def f_delta12_derivative_im(t: float) -> float:
    t2 = t * t
    return -(1 + 5 * t2) * (5 * t2**3 - 35 * t2**2 + 7 * t2 - 1) / (t2 * (1 + t2) ** 4)


def sign_resolved_trace(m: MobiusMap) -> complex:
    """Trace of the determinant-1 lift with Re >= 0 (ties: Im >= 0)."""
    tr = m.normalized().trace()
    if tr.real < 0 or (tr.real == 0 and tr.imag < 0):
        tr = -tr
    return tr


SYMMETRY_CHECKS = (
    "psi A psi^-1 = B",
    "psi B psi^-1 = A^-1",
    "psi d1 psi^-1 = A^2 d4^-1 A^-2",
    "psi d2 psi^-1 = A^2 d1^-1 A^-2",
    "psi d3 psi^-1 = A^2 d1 d3 d4 A^-2",
    "psi d4 psi^-1 = A^2 d1 d2 d4 A^-2",
)


def symmetry_report(t: float, rep: RepPoint | None = None, tol: float = 1e-9) -> dict[str, bool]:
    """Check the six conjugation identities of the symmetry psi_t, up to sign.

    ``rep`` may be supplied to test a perturbed set of generators.
    """
    rep = rep_at(t) if rep is None else rep
    psi = psi_map(t)
    a2 = GroupWord("AA")
    a2i = a2.inverse()
    d1, d2, d3, d4 = DELTAS
    pairs = [
        (rep.gen_a, rep.gen_b),
        (rep.gen_b, rep.gen_a.inverse()),
        (evaluate_word(rep, d1), evaluate_word(rep, a2 * d4.inverse() * a2i)),
        (evaluate_word(rep, d2), evaluate_word(rep, a2 * d1.inverse() * a2i)),
        (evaluate_word(rep, d3), evaluate_word(rep, a2 * d1 * d3 * d4 * a2i)),
        (evaluate_word(rep, d4), evaluate_word(rep, a2 * d1 * d2 * d4 * a2i)),
    ]
    return {
        name: anti_conjugate(psi, lhs).equals_up_to_sign(rhs, tol)
        for name, (lhs, rhs) in zip(SYMMETRY_CHECKS, pairs)
    }


def reduced_words(max_len: int):
    """All freely reduced words of length <= max_len, shortest first."""
    yield GroupWord("")
    frontier = [""]
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for c in "AaBb":
                if w and w[-1] == _INVERSE[c]:
                    continue
                nxt.append(w + c)
        for w in nxt:
            yield GroupWord(w)
        frontier = nxt


def _sphere_array(z: np.ndarray) -> np.ndarray:
    inf = np.isinf(z)
    zz = np.where(inf, 0, z)
    r2 = np.abs(zz) ** 2
    out = np.stack([2 * zz.real / (1 + r2), 2 * zz.imag / (1 + r2), (r2 - 1) / (1 + r2)], axis=1)
    out[inf] = (0.0, 0.0, 1.0)
    return out


def _sort_points(z: np.ndarray) -> np.ndarray:
    inf = np.isinf(z)
    finite = z[~inf]
    order = np.lexsort((finite.imag, finite.real))
    return np.concatenate([finite[order], z[inf][:1].repeat(int(inf.any()))])


def _apply_array(m: MobiusMap, z: np.ndarray) -> np.ndarray:
    inf = np.isinf(z)
    zz = np.where(inf, 0, z)
    with np.errstate(divide="ignore", invalid="ignore"):
        num = m.a * zz + m.b
        den = m.c * zz + m.d
        out = num / den
    out = np.where(den == 0, INF, out)
    at_inf = INF if m.c == 0 else m.a / m.c
    return np.where(inf, at_inf, out)


def _keys(z: np.ndarray, resolution: float) -> list[tuple[int, int, int]]:
    grid = np.round(_sphere_array(z) / resolution).astype(np.int64)
    return [tuple(k) for k in grid.tolist()]


def limit_orbit(rep: RepPoint, depth: int, resolution: float = 1e-6) -> np.ndarray:
    """Orbit of the fixed points of rho_t(XI) under reduced words of length <= depth.

    Points are deduplicated on the unit sphere at ``resolution`` and returned
    sorted (finite points lexicographically by (re, im), then infinity).
    Non-reduced words only revisit points already found, so the orbit is
    grown one generator at a time from the newest shell of points.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    seen: set[tuple[int, int, int]] = set()

    def fresh(z: np.ndarray) -> np.ndarray:
        keep = []
        for i, k in enumerate(_keys(z, resolution)):
            if k not in seen:
                seen.add(k)
                keep.append(i)
        return z[keep]

    gens = [rep.generator(c) for c in "AaBb"]
    frontier = fresh(np.array(fixed_points(evaluate_word(rep, XI)), dtype=complex))
    shells = [frontier]
    for _ in range(depth):
        if frontier.size == 0:
            break
        frontier = fresh(np.concatenate([_apply_array(g, frontier) for g in gens]))
        shells.append(frontier)
    return _sort_points(np.concatenate(shells))


def orbit_symmetry_defect(t: float, depth: int, resolution: float = 1e-6) -> float:
    """Largest chordal distance from psi_t(p), p in the depth-``depth`` orbit, to the
    depth-``depth + 3`` orbit.

    psi_t carries the seed pair to its image under rho_t(B^-2 A), a word of
    length three, and maps words of length n to words of length n; so the
    image of the sample lies in the sample three levels deeper.
    """
    rep = rep_at(t)
    pts = limit_orbit(rep, depth, resolution)
    deeper = limit_orbit(rep, depth + 3, resolution)
    psi = psi_map(t)
    images = np.array([psi(complex(z)) for z in pts])
    target = _sphere_array(deeper)
    worst = 0.0
    for xyz in _sphere_array(images):
        # chordal distance = half the Euclidean distance on the unit sphere
        worst = max(worst, 0.5 * float(np.min(np.linalg.norm(target - xyz, axis=1))))
    return worst
