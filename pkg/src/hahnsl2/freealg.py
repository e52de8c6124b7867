"""Free noncommutative polynomials and degree-bounded ideal membership.

Words are plain strings over a declared alphabet of single-character
generator names; the empty word is the unit.  Ideal membership in a
two-sided ideal is decided positively only: the search enumerates products
left*generator*right of bounded degree and row-reduces their coefficient
vectors, so a returned certificate is an exact, replayable linear
combination, while "not found up to the bound" proves nothing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iter_product
from typing import Optional

from .linalg import vec_sub_scaled

Word = str


class FreePoly:
    """Finite rational combination of words over a fixed alphabet."""

    __slots__ = ("alphabet", "terms")

    def __init__(self, alphabet, terms: dict[Word, Fraction] | None = None):
        alphabet = tuple(alphabet)
        for s in alphabet:
            if len(s) != 1:
                raise ValueError("generator names must be single characters")
        self.alphabet = alphabet
        cleaned: dict[Word, Fraction] = {}
        if terms:
            allowed = set(alphabet)
            for w, c in terms.items():
                if not set(w) <= allowed:
                    raise ValueError(f"word {w!r} uses symbols outside the alphabet")
                c = Fraction(c)
                if c:
                    cleaned[w] = c
        self.terms = cleaned

    @staticmethod
    def _raw(alphabet: tuple[str, ...], terms: dict[Word, Fraction]) -> "FreePoly":
        p = FreePoly.__new__(FreePoly)
        p.alphabet = alphabet
        p.terms = terms
        return p

    @staticmethod
    def zero(alphabet) -> "FreePoly":
        return FreePoly(alphabet)

    @staticmethod
    def one(alphabet) -> "FreePoly":
        return FreePoly(alphabet, {"": Fraction(1)})

    @staticmethod
    def gen(alphabet, name: str) -> "FreePoly":
        if name not in alphabet:
            raise ValueError(f"{name!r} is not in the alphabet")
        return FreePoly(alphabet, {name: Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Max word length among terms (0 for the zero polynomial)."""
        return max((len(w) for w in self.terms), default=0)

    def _check_alphabet(self, other: "FreePoly") -> None:
        if self.alphabet != other.alphabet:
            raise ValueError("alphabet mismatch")

    def __eq__(self, other) -> bool:
        if not isinstance(other, FreePoly):
            return NotImplemented
        return self.alphabet == other.alphabet and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.alphabet, frozenset(self.terms.items())))

    def __add__(self, other: "FreePoly") -> "FreePoly":
        self._check_alphabet(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            n = out.get(w, 0) + c
            if n:
                out[w] = n
            else:
                del out[w]
        return FreePoly._raw(self.alphabet, out)

    def __neg__(self) -> "FreePoly":
        return FreePoly._raw(self.alphabet, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "FreePoly") -> "FreePoly":
        return self + (-other)

    def scale(self, c) -> "FreePoly":
        c = Fraction(c)
        if not c:
            return FreePoly._raw(self.alphabet, {})
        return FreePoly._raw(self.alphabet, {w: c * x for w, x in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, FreePoly):
            return fmultiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int) -> "FreePoly":
        if n < 0:
            raise ValueError("negative power")
        acc = FreePoly.one(self.alphabet)
        for _ in range(n):
            acc = fmultiply(acc, self)
        return acc

    def __repr__(self) -> str:
        return f"FreePoly({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=lambda w: (len(w), w)):
            c = self.terms[w]
            body = w if w else "1"
            sign = "-" if c < 0 else "+"
            c = abs(c)
            parts.append((sign, body if c == 1 and w else f"{c}*{body}" if w else str(c)))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def fmultiply(a: FreePoly, b: FreePoly) -> FreePoly:
    """Concatenation-bilinear product."""
    a._check_alphabet(b)
    out: dict[Word, Fraction] = {}
    for w1, c1 in a.terms.items():
        for w2, c2 in b.terms.items():
            w = w1 + w2
            n = out.get(w, 0) + c1 * c2
            if n:
                out[w] = n
            else:
                del out[w]
    return FreePoly._raw(a.alphabet, out)


def fcommutator(a: FreePoly, b: FreePoly) -> FreePoly:
    return fmultiply(a, b) - fmultiply(b, a)


def substitute(p: FreePoly, images: dict, one):
    """Apply the homomorphic extension of generator -> image to p.

    ``one`` is the unit of the target algebra; targets only need +, * and
    scalar multiplication by Fraction.
    """
    missing = [g for g in p.alphabet if g not in images]
    if missing:
        raise KeyError(f"missing images for generators {missing}")
    acc = None
    for w, c in sorted(p.terms.items(), key=lambda t: (len(t[0]), t[0])):
        val = one
        for s in w:
            val = val * images[s]
        val = val * c
        acc = val if acc is None else acc + val
    if acc is None:
        return one * 0
    return acc


# ---------------------------------------------------------------------------
# ideal membership
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MembershipCertificate:
    """Expression of a target as sum of coeff * left * generator * right.

    ``triples`` entries are (coefficient, left word, generator index,
    right word); replaying them through fmultiply must reproduce the target
    exactly, which ``replay`` recomputes from scratch.
    """

    alphabet: tuple[str, ...]
    generators: tuple[FreePoly, ...]
    triples: tuple[tuple[Fraction, Word, int, Word], ...]

    def replay(self) -> FreePoly:
        acc = FreePoly.zero(self.alphabet)
        for coeff, left, gi, right in self.triples:
            lw = FreePoly(self.alphabet, {left: Fraction(1)})
            rw = FreePoly(self.alphabet, {right: Fraction(1)})
            acc = acc + fmultiply(fmultiply(lw, self.generators[gi]), rw).scale(coeff)
        return acc

    def as_json_dict(self) -> dict:
        return {
            "alphabet": "".join(self.alphabet),
            "terms": [
                {
                    "coefficient": str(coeff),
                    "left": left,
                    "generator": gi,
                    "right": right,
                }
                for coeff, left, gi, right in self.triples
            ],
        }


def _words_of_length(alphabet: tuple[str, ...], length: int) -> list[Word]:
    return ["".join(t) for t in iter_product(alphabet, repeat=length)]


def ideal_membership(
    target: FreePoly,
    generators: list[FreePoly],
    degree_bound: Optional[int] = None,
) -> Optional[MembershipCertificate]:
    """Search for a membership certificate with all products of bounded degree.

    Candidates left*g*right are enumerated by total degree, then by generator
    index, then length-lexicographically in (left, right), and their
    coefficient vectors are inserted into an augmented echelon basis; the
    search stops as soon as the running reduction of the target hits zero.
    Returns None when the bound is exhausted (which proves nothing).  The
    bound defaults to degree(target) + 4.
    """
    if not generators:
        raise ValueError("no ideal generators given")
    for g in generators:
        target._check_alphabet(g)
    if degree_bound is None:
        degree_bound = target.degree() + 4
    if degree_bound < target.degree():
        raise ValueError("degree bound is smaller than the degree of the target")
    if target.is_zero():
        return MembershipCertificate(target.alphabet, tuple(generators), ())

    alphabet = target.alphabet
    word_index: dict[Word, int] = {}

    def vec_of(p: FreePoly) -> dict[int, Fraction]:
        v = {}
        for w, c in p.terms.items():
            idx = word_index.setdefault(w, len(word_index))
            v[idx] = c
        return v

    n_words_cap = sum(len(alphabet) ** l for l in range(degree_bound + 1))
    hist_base = n_words_cap  # candidate-history coordinates live above words

    # rows: fully reduced vectors over word coords + history coords
    pivots: list[int] = []
    rows: list[dict[int, Fraction]] = []

    def reduce_vec(v: dict[int, Fraction]) -> dict[int, Fraction]:
        out = dict(v)
        for p, row in zip(pivots, rows):
            c = out.get(p)
            if c:
                out = vec_sub_scaled(out, row, c)
        return {i: c for i, c in out.items() if c}

    def insert(v: dict[int, Fraction]) -> bool:
        red = reduce_vec(v)
        word_part = [i for i in red if i < hist_base]
        if not word_part:
            return False  # candidate is linearly dependent on earlier ones
        p = min(word_part)
        inv = red[p]
        row = {i: c / inv for i, c in red.items()}
        for other in rows:
            c = other.get(p)
            if c:
                upd = vec_sub_scaled(other, row, c)
                other.clear()
                other.update(upd)
        k = 0
        while k < len(pivots) and pivots[k] < p:
            k += 1
        pivots.insert(k, p)
        rows.insert(k, row)
        return True

    candidates: list[tuple[Word, int, Word]] = []
    residual = vec_of(target)  # running reduction of the target

    def absorb_new_row() -> bool:
        # keep reducing the running target residual until no pivot survives;
        # membership holds exactly when its word part is empty
        nonlocal residual
        changed = True
        while changed:
            changed = False
            for p, row in zip(pivots, rows):
                c = residual.get(p)
                if c:
                    residual = vec_sub_scaled(residual, row, c)
                    changed = True
        return not any(i < hist_base and c for i, c in residual.items())

    gen_degrees = [g.degree() for g in generators]
    min_total = min(gen_degrees)
    for total in range(min_total, degree_bound + 1):
        for gi, g in enumerate(generators):
            side = total - gen_degrees[gi]
            if side < 0:
                continue
            for lu in range(side + 1):
                for u in _words_of_length(alphabet, lu):
                    for v in _words_of_length(alphabet, side - lu):
                        prod = {u + w + v: c for w, c in g.terms.items()}
                        vec = vec_of(FreePoly._raw(alphabet, dict(prod)))
                        hidx = hist_base + len(candidates)
                        vec[hidx] = Fraction(1)
                        candidates.append((u, gi, v))
                        if insert(vec) and absorb_new_row():
                            combo = {
                                i - hist_base: -c
                                for i, c in residual.items()
                                if i >= hist_base and c
                            }
                            triples = tuple(
                                (combo[t], candidates[t][0], candidates[t][1], candidates[t][2])
                                for t in sorted(combo)
                            )
                            cert = MembershipCertificate(alphabet, tuple(generators), triples)
                            assert cert.replay() == target
                            return cert
    return None
