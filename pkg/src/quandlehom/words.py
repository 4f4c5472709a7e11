"""Words in the structure group of a linear Alexander quandle.

The structure group is generated by one letter per quandle element, subject
to e_a e_b = e_b e_{a <| b}.  For the quandle t*a + (1-t)*b on Z/n with m
orbits, every group element is pinned down exactly by the pair

    (v, a)  =  (signed letter count per orbit, weight),

where the weight w is the twisted sum w(e_x) = x, w(gh) = t^deg(h) w(g) + w(h).
PackedElement stores that pair; the pair multiplies inside Z^m x| Z/n, and
``canonical_word`` / ``rewrite_trace`` convert back to a unique word per
element, which is what makes the representation usable as a normal form.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    LengthMismatchError,
    NotInImageError,
    WordSyntaxError,
)
from .intlinalg import multiplicative_order
from .quandle import LinearAlexanderParams


@lru_cache(maxsize=None)
def _geom(t, k, n):
    """1 + t + ... + t^(k-1) mod n, extended to all integers k.

    The extension is fixed by the recurrence q(k+1) = q(k) + t^k, which for
    negative k gives q(-j) = -t^(-j) * q(j).  It is exactly the coefficient
    in w(e_x^k) = q(k) * x.
    """
    if n == 1:
        return 0
    if k < 0:
        return -pow(t, k, n) * _geom(t, -k, n) % n
    if k == 0:
        return 0
    if k % 2:
        return (_geom(t, k - 1, n) + pow(t, k - 1, n)) % n
    half = _geom(t, k // 2, n)
    return half * (1 + pow(t, k // 2, n)) % n


# (n, t, exp) -> (t^exp mod n, geometric sum q(exp)); hot path of word_eval
_LETTER_CONSTS: dict[tuple[int, int, int], tuple[int, int]] = {}


def _letter_consts(n, t, exp):
    key = (n, t, exp)
    cached = _LETTER_CONSTS.get(key)
    if cached is None:
        cached = (pow(t, exp, n), _geom(t, exp, n))
        _LETTER_CONSTS[key] = cached
    return cached


@dataclass(frozen=True)
class Word:
    """Product of signed generators, stored run-length as (color, exponent).

    Colors lie in 0..n-1 and exponents are nonzero; adjacent letters of the
    same color are legal but not merged automatically.  The empty tuple is
    the group identity.
    """

    params: LinearAlexanderParams
    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        n = self.params.n
        letters = tuple((int(c), int(e)) for c, e in self.letters)
        for c, e in letters:
            if not 0 <= c < n:
                raise WordSyntaxError(f"color {c} outside 0..{n - 1}")
            if e == 0:
                raise WordSyntaxError("letter exponents must be nonzero")
        object.__setattr__(self, "letters", letters)

    def __mul__(self, other):
        if self.params != other.params:
            raise ValueError("words from different quandles")
        return Word(self.params, self.letters + other.letters)

    def inverse(self):
        return Word(
            self.params, tuple((c, -e) for c, e in reversed(self.letters))
        )

    def unit_length(self):
        return sum(abs(e) for _, e in self.letters)

    def __str__(self):
        return format_word(self)


_TOKEN = re.compile(r"e(\d+)(?:\^(-?\d+))?\Z")


def parse_word(text, params):
    """Parse whitespace-separated tokens e<color> or e<color>^<exp>."""
    letters = []
    for token in text.split():
        match = _TOKEN.match(token)
        if match is None:
            raise WordSyntaxError(f"bad token {token!r}")
        color = int(match.group(1))
        exp = int(match.group(2)) if match.group(2) is not None else 1
        if color >= params.n:
            raise WordSyntaxError(f"color {color} outside 0..{params.n - 1}")
        if exp == 0:
            raise WordSyntaxError(f"zero exponent in {token!r}")
        letters.append((color, exp))
    return Word(params, tuple(letters))


def format_word(word):
    return " ".join(
        f"e{c}" if e == 1 else f"e{c}^{e}" for c, e in word.letters
    )


@dataclass(frozen=True)
class PackedElement:
    """Pair (v, a): per-orbit signed letter counts plus the weight.

    The product rule is (v, a)(w, b) = (v + w, t^|w| a + b) with |w| the sum
    of the entries of w; this matches concatenation of words, and the pair
    determines the group element completely.
    """

    params: LinearAlexanderParams
    v: tuple[int, ...]
    a: int

    def __post_init__(self):
        m = self.params.num_orbits
        v = tuple(int(x) for x in self.v)
        if len(v) != m:
            raise LengthMismatchError(f"vector has {len(v)} entries, expected {m}")
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "a", self.a % self.params.n)

    @property
    def degree(self):
        return sum(self.v)

    @classmethod
    def identity(cls, params):
        return cls(params, (0,) * params.num_orbits, 0)

    def __mul__(self, other):
        if self.params != other.params:
            raise ValueError("elements from different quandles")
        n, t = self.params.n, self.params.t
        return PackedElement(
            self.params,
            tuple(x + y for x, y in zip(self.v, other.v)),
            (pow(t, other.degree, n) * self.a + other.a) % n,
        )

    def inverse(self):
        n, t = self.params.n, self.params.t
        return PackedElement(
            self.params,
            tuple(-x for x in self.v),
            -pow(t, -self.degree, n) * self.a % n,
        )


@dataclass(frozen=True)
class SemidirectZ:
    """Element (k, a) of Z x| Z/n with (k, a)(m, b) = (k + m, t^m a + b)."""

    params: LinearAlexanderParams
    k: int
    a: int

    def __post_init__(self):
        object.__setattr__(self, "a", self.a % self.params.n)

    @classmethod
    def identity(cls, params):
        return cls(params, 0, 0)

    def __mul__(self, other):
        if self.params != other.params:
            raise ValueError("elements from different quandles")
        n, t = self.params.n, self.params.t
        return SemidirectZ(
            self.params, self.k + other.k, (pow(t, other.k, n) * self.a + other.a) % n
        )

    def inverse(self):
        n, t = self.params.n, self.params.t
        return SemidirectZ(self.params, -self.k, -pow(t, -self.k, n) * self.a % n)

    def conjugate_by(self, other):
        """other^-1 * self * other = (k, t^m a + (1 - t^k) b)."""
        n, t = self.params.n, self.params.t
        return SemidirectZ(
            self.params,
            self.k,
            (pow(t, other.k, n) * self.a + (1 - pow(t, self.k, n)) * other.a) % n,
        )


def word_eval(word):
    """Fold a word into its PackedElement.

    Per letter e_x^e: the orbit coordinate x mod m gains e, and the weight
    folds as a |-> t^e a + q(e) x.  Concatenation of words corresponds to
    multiplication of the results.
    """
    params = word.params
    n, t, m = params.n, params.t, params.num_orbits
    v = [0] * m
    a = 0
    for color, exp in word.letters:
        tp, q = _letter_consts(n, t, exp)
        v[color % m] += exp
        a = (tp * a + q * color) % n
    return PackedElement(params, tuple(v), a)


def degree_weight(word):
    """The pair (degree, weight) of a word, as an element of Z x| Z/n."""
    packed = word_eval(word)
    return SemidirectZ(word.params, packed.degree, packed.a)


def base_weight(params, v):
    """Weight of e_{m-1}^{v_{m-1}} ... e_1^{v_1} e_0^{v_0 - 1} e_0.

    This is the polynomial sum_{r>=1} q(v_r) * t^(v_0 + ... + v_{r-1}) * r;
    the weight of the full canonical word is this value plus the trailing
    color.
    """
    m = params.num_orbits
    if len(v) != m:
        raise LengthMismatchError(f"vector has {len(v)} entries, expected {m}")
    n, t = params.n, params.t
    total = 0
    acc = v[0]
    for r in range(1, m):
        total = (total + _geom(t, v[r], n) * pow(t, acc, n) * r) % n
        acc += v[r]
    return total


def canonical_word(packed):
    """Unique word e_{m-1}^{v_{m-1}} ... e_1^{v_1} e_0^{v_0-1} e_d for a packed pair.

    The trailing color d = a - base_weight(v) must be a multiple of m (the
    image of 1-t); otherwise the pair is not realized by any group element
    and NotInImageError is raised.  When d == 0 the trailing letter merges
    into the e_0 block, so the identity becomes the empty word.
    """
    params = packed.params
    n, m = params.n, params.num_orbits
    v = packed.v
    d = (packed.a - base_weight(params, v)) % n
    if d % m:
        raise NotInImageError(
            f"weight {packed.a} is not reachable from abelianization {v}"
        )
    letters = []
    for r in range(m - 1, 0, -1):
        if v[r]:
            letters.append((r, v[r]))
    head = v[0] - 1
    if d == 0:
        head += 1
        if head:
            letters.append((0, head))
    else:
        if head:
            letters.append((0, head))
        letters.append((d, 1))
    return Word(params, tuple(letters))


def act(x, word):
    """Right action of a word on a quandle element: t^deg x + (1-t) * weight."""
    params = word.params
    n, t = params.n, params.t
    packed = word_eval(word)
    return (pow(t, packed.degree, n) * x + (1 - t) * packed.a) % n


def central_power_degree(params):
    """Smallest d >= 1 with e_x^d central for every color x.

    A power e_x^d commutes with everything iff it acts trivially on the
    quandle, which for the twist t happens exactly when t^d == 1 mod n, so
    d is the multiplicative order of t.
    """
    return multiplicative_order(params.t, params.n)


def section(params, k, a):
    """The word e_0^(k-1) e_a, a set-theoretic section of degree_weight."""
    a = a % params.n
    letters = []
    if k != 1:
        letters.append((0, k - 1))
    letters.append((a, 1))
    return Word(params, tuple(letters))


def generator(params, x, exp=1):
    """Single-letter word e_x^exp."""
    return Word(params, ((x % params.n, exp),))


@dataclass(frozen=True)
class RewriteStep:
    """One rewriting move: the rule applied and the word after the move."""

    rule: str
    word: Word
    note: str = ""


def _translate(params, x, b, f):
    # x acted on by e_b^f: t^f x + (1 - t^f) b
    n = params.n
    tf = pow(params.t, f, n)
    return (tf * x + (1 - tf) * b) % n


def _token(color, exp=1):
    return f"e{color}" if exp == 1 else f"e{color}^{exp}"


def rewrite_trace(word):
    """Rewrite a word into its canonical form, logging every move.

    The strategy mirrors the normal-form construction: (1) sort letters
    into descending-orbit blocks by braidings, (2) clear negative exponents
    by inserting central powers e_r^(-d*xi) on the left, (3) sweep the
    two-letter shift relation e_x e_y = e_{x-(1-t)g} e_{y+(1-t)tg} left to
    right until every non-final letter is its orbit representative, then
    (4) cancel the central insertions into the blocks.  Every intermediate
    word evaluates to the same PackedElement as the input.

    Returns (canonical word, tuple of RewriteStep).
    """
    params = word.params
    target = canonical_word(word_eval(word))
    if word.letters == target.letters:
        return target, ()
    n, t = params.n, params.t
    m = params.num_orbits
    d = central_power_degree(params)

    steps = []
    body = [[c, e] for c, e in word.letters]
    prefix = {}  # orbit representative -> accumulated central exponent (< 0)

    def snapshot(rule, note):
        # central prefix letters stay distinct from the body so that the
        # insertion and cancellation steps are visible in the trace
        letters = [(r, prefix[r]) for r in sorted(prefix) if prefix[r]]
        merged = []
        for c, e in body:
            if e == 0:
                continue
            if merged and merged[-1][0] == c:
                total = merged[-1][1] + e
                if total:
                    merged[-1] = (c, total)
                else:
                    merged.pop()
            else:
                merged.append((c, e))
        steps.append(
            RewriteStep(rule, Word(params, tuple(letters + merged)), note)
        )

    # 1. braid into blocks: orbit m-1 leftmost, orbit 0 rightmost
    swapped = True
    while swapped:
        swapped = False
        for i in range(len(body) - 1):
            (x, e), (b, f) = body[i], body[i + 1]
            if x % m < b % m:
                body[i], body[i + 1] = [b, f], [_translate(params, x, b, f), e]
                snapshot("braid", f"{_token(x, e)} moves right past {_token(b, f)}")
                swapped = True

    # 2. clear negative exponents with central powers e_r^d
    for pair in body:
        c, e = pair
        if e < 0:
            xi = (-e + d - 1) // d
            r = c % m
            prefix[r] = prefix.get(r, 0) - xi * d
            pair[1] = e + xi * d
            snapshot(
                "central-power",
                f"insert {_token(r, -xi * d)} on the left, "
                f"raise {_token(c, e)} to {_token(c, pair[1])}",
            )
    body = [pair for pair in body if pair[1]]

    # the final sweep needs an orbit-0 letter at the right end
    if not any(c % m == 0 for c, _ in body):
        prefix[0] = prefix.get(0, 0) - d
        body.append([0, d])
        snapshot(
            "central-power",
            f"insert the central pair {_token(0, -d)} ... {_token(0, d)}",
        )

    # 3. shift every non-final letter to its orbit representative
    units = []
    for c, e in body:
        units.extend([c, 1] for _ in range(e))
    body = units
    for i in range(len(body) - 1):
        x = body[i][0]
        r = x % m
        if x != r:
            y = body[i + 1][0]
            body[i][0] = r
            body[i + 1][0] = (y + t * (x - r)) % n
            snapshot(
                "relation",
                f"shift {_token(x)} {_token(y)} to {_token(r)} {_token(body[i + 1][0])}",
            )

    # 4. cancel the central prefix into the blocks
    merged = []
    for c, e in body:
        if merged and merged[-1][0] == c:
            merged[-1][1] += e
        else:
            merged.append([c, e])
    body = merged
    for r in sorted(prefix, reverse=True):
        cr = prefix.pop(r)
        if cr == 0:
            continue
        slot = None
        for idx, (c, _) in enumerate(body):
            if c == r:
                slot = idx
                break
        if slot is None:
            # the block emptied out; re-insert at its sorted position
            slot = 0
            while slot < len(body) and body[slot][0] % m > r:
                slot += 1
            body.insert(slot, [r, cr])
        else:
            body[slot][1] += cr
            if body[slot][1] == 0:
                del body[slot]
        snapshot("central-power", f"cancel {_token(r, cr)} into its block")

    final = Word(params, tuple((c, e) for c, e in body if e))
    if final.letters != target.letters:
        raise AssertionError(
            f"rewriting produced {final} but the canonical word is {target}"
        )
    return final, tuple(steps)
