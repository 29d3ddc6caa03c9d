"""Free inverse monoid elements as Munn trees, and evaluation of words.

Words are ASCII strings: a lowercase letter is a generator and the matching
uppercase letter its formal inverse.  A Munn tree is stored as the set of its
vertices (reduced words, prefix closed, containing the empty word) together
with its endpoint.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Mapping, Union

from .core import FiniteInvSemigroup
from .errors import InputError


def _check_word(word: str) -> str:
    if not isinstance(word, str) or not all(c.isascii() and c.isalpha() for c in word):
        raise InputError(f"bad word {word!r}: use ASCII letters, uppercase for inverses")
    return word


def inverse_word(word: str) -> str:
    return word[::-1].swapcase()


def free_reduce(word: str) -> str:
    out: list[str] = []
    for c in _check_word(word):
        if out and out[-1] == c.swapcase():
            out.pop()
        else:
            out.append(c)
    return "".join(out)


def _translate(base: str, word: str) -> str:
    return free_reduce(base + word)


@dataclass(frozen=True)
class MunnTree:
    vertices: frozenset[str]
    end: str

    def __post_init__(self) -> None:
        if "" not in self.vertices or self.end not in self.vertices:
            raise InputError("a Munn tree contains the empty word and its endpoint")
        for v in self.vertices:
            if v and (free_reduce(v) != v or v[:-1] not in self.vertices):
                raise InputError(f"vertex {v!r} breaks the tree structure")

    @property
    def edges(self) -> frozenset[tuple[str, str, str]]:
        """(source, label, target) with lowercase labels, oriented along the generator."""
        out = set()
        for v in self.vertices:
            if v:
                u, c = v[:-1], v[-1]
                out.add((u, c, v) if c.islower() else (v, c.lower(), u))
        return frozenset(out)

    @property
    def is_idempotent(self) -> bool:
        return self.end == ""

    def __mul__(self, other: "MunnTree") -> "MunnTree":
        return munn_mul(self, other)

    def inverse(self) -> "MunnTree":
        return munn_inv(self)

    def __str__(self) -> str:
        return to_word(self)


def word_to_munn(word: str) -> MunnTree:
    v = ""
    seen = {v}
    for c in _check_word(word):
        v = _translate(v, c)
        seen.add(v)
    return MunnTree(frozenset(seen), v)


def munn_mul(x: MunnTree, y: MunnTree) -> MunnTree:
    verts = set(x.vertices)
    verts.update(_translate(x.end, v) for v in y.vertices)
    return MunnTree(frozenset(verts), _translate(x.end, y.end))


def munn_inv(x: MunnTree) -> MunnTree:
    back = inverse_word(x.end)
    return MunnTree(frozenset(_translate(back, v) for v in x.vertices), back)


def munn_product(trees: Iterable[MunnTree]) -> MunnTree:
    out = word_to_munn("")
    for t in trees:
        out = munn_mul(out, t)
    return out


def munn_natural_leq(x: MunnTree, y: MunnTree) -> bool:
    return x.end == y.end and y.vertices <= x.vertices


def to_word(x: MunnTree) -> str:
    """A word whose Munn tree is x: walk every edge out and back, then go to the end."""
    children: dict[str, list[str]] = {}
    for v in x.vertices:
        if v:
            children.setdefault(v[:-1], []).append(v)
    out: list[str] = []

    def walk(v: str) -> None:
        for child in sorted(children.get(v, ())):
            c = child[-1]
            out.append(c)
            walk(child)
            out.append(c.swapcase())

    walk("")
    return "".join(out) + x.end


Word = Union[str, MunnTree]


def evaluate(word: Word, assignment: Mapping[str, int], M: FiniteInvSemigroup) -> int:
    """Image of a word under the homomorphism sending each generator to assignment[g]."""
    w = to_word(word) if isinstance(word, MunnTree) else _check_word(word)
    if not w:
        if M.identity is None:
            raise InputError("the empty word needs a monoid")
        return M.identity
    out = None
    for c in w:
        g = c.lower()
        if g not in assignment:
            raise InputError(f"no image assigned to generator {g!r}")
        x = M.check_element(assignment[g])
        if c.isupper():
            x = int(M.inv[x])
        out = x if out is None else int(M.mul[out, x])
    return out


# -- presentations -------------------------------------------------------


@dataclass(frozen=True)
class Presentation:
    alphabet: str
    relations: tuple[tuple[str, str], ...] = ()

    @classmethod
    def parse(cls, text: str, alphabet: str | None = None) -> "Presentation":
        """``"ab=ba, aaa=a"``; the alphabet defaults to the letters used."""
        rels = []
        for part in filter(None, (p.strip() for p in text.split(","))):
            if part.count("=") != 1:
                raise InputError(f"bad relation {part!r}")
            lhs, rhs = (_check_word(w.strip()) for w in part.split("="))
            rels.append((lhs, rhs))
        letters = alphabet or "".join(sorted({c.lower() for l, r in rels for c in l + r}))
        return cls(letters, tuple(rels))

    def satisfied_by(self, assignment: Mapping[str, int], M: FiniteInvSemigroup) -> bool:
        return all(evaluate(l, assignment, M) == evaluate(r, assignment, M) for l, r in self.relations)


def q_of_relations(P: Presentation) -> list[MunnTree]:
    """l^-1 r and l r^-1 for every relation (l, r)."""
    out = []
    for l, r in P.relations:
        out.append(word_to_munn(inverse_word(l) + r))
        out.append(word_to_munn(l + inverse_word(r)))
    return out


def reduced_words(alphabet: str, maxlen: int) -> list[str]:
    letters = alphabet + alphabet.upper()
    out = [""]
    frontier = [""]
    for _ in range(maxlen):
        frontier = [w + c for w in frontier for c in letters if not (w and w[-1] == c.swapcase())]
        out.extend(frontier)
    return out


@dataclass(frozen=True)
class MembershipResult:
    status: str  # "yes" or "inconclusive"
    certificate: tuple[tuple[str, str], ...] = field(default=())  # (conjugator w, q): w^-1 q w

    @property
    def yes(self) -> bool:
        return self.status == "yes"

    def certificate_word(self) -> str:
        return "".join(inverse_word(w) + q + w for w, q in self.certificate)


def bounded_N_membership(P: Presentation, x: Word, maxlen: int) -> MembershipResult:
    """Semi-decide x in N(P), the normal closure of Q(R) in FIM(X).

    "yes" means x lies below a product of at most ``maxlen`` conjugates
    w^-1 q w (q in Q(R) or its inverses, |w| <= maxlen, w reduced); inserting
    idempotents only moves down the natural order, so that exhibits x as a
    product of conjugates and idempotents.  Never answers "no".
    """
    target = x if isinstance(x, MunnTree) else word_to_munn(x)
    if target.is_idempotent:
        return MembershipResult("yes")
    qs: list[str] = []
    for l, r in P.relations:
        for q in (inverse_word(l) + r, l + inverse_word(r)):
            qs.extend([q, inverse_word(q)])
    conj: dict[MunnTree, tuple[str, str]] = {}
    for w, q in product(reduced_words(P.alphabet, maxlen), qs):
        t = word_to_munn(inverse_word(w) + q + w)
        conj.setdefault(t, (w, q))
    verts = target.vertices
    # partial products whose trees stay inside the target's tree
    level: dict[MunnTree, tuple[tuple[str, str], ...]] = {word_to_munn(""): ()}
    seen = set(level)
    for _ in range(maxlen):
        nxt: dict[MunnTree, tuple[tuple[str, str], ...]] = {}
        for p, cert in level.items():
            for c, wq in conj.items():
                if not all(_translate(p.end, v) in verts for v in c.vertices):
                    continue
                pc = munn_mul(p, c)
                if pc.end == target.end:
                    assert munn_natural_leq(target, pc)
                    return MembershipResult("yes", cert + (wq,))
                if pc not in seen:
                    seen.add(pc)
                    nxt[pc] = cert + (wq,)
        level = nxt
        if not level:
            break
    return MembershipResult("inconclusive")
