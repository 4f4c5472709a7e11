"""Verification suites: algebraic identities, normal-form laws, oracle equality.

Each check function sweeps one family of properties for a fixed quandle
(or for random matrices) and reports how many individual comparisons ran
and which ones failed.  The CLI ``verify`` subcommand and the acceptance
tests are both thin wrappers around these functions.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from .cocycle import (
    cocycle_image_basis,
    degree_zero_cocycle,
    extension_cocycle,
    kernel_lattice_basis,
)
from .homology import boundary_matrices, h2_chain_complex, h2_closed_form, h2_eisermann
from .intlinalg import IntMatrix, multiplicative_order, smith_normal_form
from .quandle import (
    LinearAlexanderParams,
    build_alexander,
    build_takasaki,
    find_violation,
    is_connected,
    orbit_count,
    orbits,
)
from .words import (
    PackedElement,
    SemidirectZ,
    Word,
    act,
    canonical_word,
    central_power_degree,
    degree_weight,
    generator,
    rewrite_trace,
    section,
    word_eval,
)

MAX_RECORDED_FAILURES = 8


@dataclass
class CheckResult:
    """Outcome of one check family: comparison count and failure messages."""

    name: str
    context: dict
    checks: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.failures

    def expect(self, ok, describe):
        self.checks += 1
        if not ok and len(self.failures) < MAX_RECORDED_FAILURES:
            self.failures.append(describe() if callable(describe) else describe)


def _units(n):
    return [t for t in range(n) if math.gcd(t, n) == 1]


def unit_pairs(n_max, n_min=1):
    """All (n, t) with n_min <= n <= n_max and t a unit mod n, sorted."""
    return [
        LinearAlexanderParams(n, t)
        for n in range(n_min, n_max + 1)
        for t in _units(n)
    ]


def _random_word(params, rng, max_len):
    length = rng.randint(0, max_len)
    return Word(
        params,
        tuple((rng.randrange(params.n), rng.choice((1, -1))) for _ in range(length)),
    )


def check_quandle_structure(params):
    """Axioms, orbit partition versus cosets, connectivity criterion."""
    result = CheckResult("quandle-structure", {"n": params.n, "t": params.t})
    n, t = params.n, params.t
    quandle = build_alexander(params)
    result.expect(find_violation(quandle.table) is None, "constructor table fails axioms")
    m = orbit_count(params)
    blocks = orbits(quandle)
    result.expect(len(blocks) == m, f"orbit count {len(blocks)} != gcd {m}")
    expected = [sorted(range(r, n, m)) for r in range(m)]
    result.expect(blocks == expected, f"orbits {blocks} are not the cosets of {m}Z/{n}")
    result.expect(
        is_connected(quandle) == (m == 1),
        "connectivity disagrees with gcd(n, 1-t) == 1",
    )
    if t == (n - 1) % n:
        result.expect(
            quandle == build_takasaki(n), "twist -1 table differs from the dihedral table"
        )
    return result


def check_word_laws(params, rng, samples=200):
    """Group laws of the packed representation on random words.

    Covers multiplicativity, the twisted weight law, injectivity of colors,
    the conjugation rule e_x g = g e_{x.g}, centrality of kernel elements,
    the central-element characterization, surjectivity of degree_weight,
    and the conjugation behavior of the section.
    """
    result = CheckResult("word-laws", {"n": params.n, "t": params.t})
    n, t = params.n, params.t

    packed_gens = [word_eval(generator(params, x)) for x in range(n)]
    result.expect(
        len(set(packed_gens)) == n, "color map x -> e_x is not injective"
    )

    for k in range(-5, 6):
        for a in range(n):
            f = degree_weight(section(params, k, a))
            result.expect(
                (f.k, f.a) == (k, a),
                lambda k=k, a=a, f=f: f"degree_weight(section({k},{a})) = {(f.k, f.a)}",
            )

    for _ in range(samples):
        w1 = _random_word(params, rng, 8)
        w2 = _random_word(params, rng, 8)
        p1, p2, p12 = word_eval(w1), word_eval(w2), word_eval(w1 * w2)
        result.expect(
            p12 == p1 * p2,
            lambda w1=w1, w2=w2: f"eval not multiplicative on {w1} | {w2}",
        )
        result.expect(
            p12.a == (pow(t, p2.degree, n) * p1.a + p2.a) % n,
            lambda w1=w1, w2=w2: f"weight law fails on {w1} | {w2}",
        )

        g = w1
        pg = p1
        x = rng.randrange(n)
        lhs = word_eval(generator(params, x) * g)
        rhs = word_eval(g * generator(params, act(x, g)))
        result.expect(lhs == rhs, lambda g=g, x=x: f"conjugation rule fails on e{x}, {g}")

        # action formula versus letter-by-letter translation
        y = x
        for c, e in g.letters:
            te = pow(t, e, n)
            y = (te * y + (1 - te) * c) % n
        result.expect(
            act(x, g) == y, lambda g=g, x=x: f"action formula fails on {x}, {g}"
        )

        # central-element characterization
        central = pow(t, pg.degree, n) == 1 % n and (1 - t) * pg.a % n == 0
        fixes_all = all(act(z, g) == z for z in range(n))
        result.expect(
            central == fixes_all,
            lambda g=g: f"centrality criterion disagrees with the action on {g}",
        )
        if central:
            for z in range(n):
                result.expect(
                    word_eval(generator(params, z) * g)
                    == word_eval(g * generator(params, z)),
                    lambda g=g, z=z: f"central word {g} fails to commute with e{z}",
                )

        # section conjugation in degree 1
        alpha = SemidirectZ(params, 1, rng.randrange(n))
        gamma = SemidirectZ(params, rng.randint(-3, 4), rng.randrange(n))
        lhs = word_eval(
            section(params, gamma.k, gamma.a).inverse()
            * section(params, alpha.k, alpha.a)
            * section(params, gamma.k, gamma.a)
        )
        conj = alpha.conjugate_by(gamma)
        rhs = word_eval(section(params, conj.k, conj.a))
        result.expect(
            lhs == rhs,
            lambda alpha=alpha, gamma=gamma: f"section conjugation fails on {alpha}, {gamma}",
        )

    # kernel elements are central: build words with zero degree and weight
    for kv in kernel_lattice_basis(params):
        g = canonical_word(PackedElement(params, kv.v, 0))
        for z in range(n):
            result.expect(
                word_eval(generator(params, z) * g)
                == word_eval(g * generator(params, z)),
                lambda g=g, z=z: f"kernel word {g} fails to commute with e{z}",
            )
    return result


def check_weight_action_exhaustive(params, max_len=4):
    """Weight law on every factorization and action on every word of length <= max_len."""
    result = CheckResult(
        "weight-action-exhaustive", {"n": params.n, "t": params.t, "max_len": max_len}
    )
    n, t = params.n, params.t
    alphabet = [(c, e) for c in range(n) for e in (1, -1)]

    def walk(letters):
        w = Word(params, letters)
        pw = word_eval(w)
        for cut in range(len(letters) + 1):
            p1 = word_eval(Word(params, letters[:cut]))
            p2 = word_eval(Word(params, letters[cut:]))
            result.expect(
                pw.a == (pow(t, p2.degree, n) * p1.a + p2.a) % n,
                lambda w=w, cut=cut: f"weight law fails on {w} cut at {cut}",
            )
        for x in range(n):
            y = x
            for c, e in letters:
                te = pow(t, e, n)
                y = (te * y + (1 - te) * c) % n
            result.expect(
                act(x, w) == y, lambda w=w, x=x: f"action formula fails on {x}, {w}"
            )
        if len(letters) < max_len:
            for letter in alphabet:
                walk(letters + (letter,))

    walk(())
    return result


def check_central_power(params):
    """The central power degree equals the order of t, and is minimal."""
    result = CheckResult("central-power", {"n": params.n, "t": params.t})
    n = params.n
    d = central_power_degree(params)
    result.expect(
        d == multiplicative_order(params.t, n),
        f"central power degree {d} != order of t",
    )
    for x in range(n):
        power = generator(params, x, d)
        for y in range(n):
            result.expect(
                act(y, power) == y, f"e{x}^{d} does not fix {y}"
            )
            result.expect(
                word_eval(power * generator(params, y))
                == word_eval(generator(params, y) * power),
                f"e{x}^{d} does not commute with e{y}",
            )
    for smaller in range(1, d):
        witness = any(
            act(y, generator(params, x, smaller)) != y
            for x in range(n)
            for y in range(n)
        )
        result.expect(witness, f"e_x^{smaller} is already central for every x")
    return result


def check_rewriting(params, rng, samples=100, max_len=12):
    """Canonical-word round trips and trace validity on random words."""
    result = CheckResult("rewriting", {"n": params.n, "t": params.t})
    for _ in range(samples):
        w = _random_word(params, rng, max_len)
        packed = word_eval(w)
        cw = canonical_word(packed)
        result.expect(
            word_eval(cw) == packed, lambda w=w: f"canonical word of {w} evaluates differently"
        )
        result.expect(
            canonical_word(word_eval(cw)).letters == cw.letters,
            lambda w=w: f"canonical word of {w} is not a fixed point",
        )
        final, steps = rewrite_trace(w)
        result.expect(
            final.letters == cw.letters,
            lambda w=w: f"rewriting of {w} disagrees with the canonical word",
        )
        for step in steps:
            result.expect(
                word_eval(step.word) == packed,
                lambda w=w, step=step: f"step {step.rule} broke the value of {w}",
            )
        if canonical_word(packed).letters == w.letters:
            result.expect(
                steps == (), lambda w=w: f"canonical input {w} produced a nonempty trace"
            )
    return result


class _CocycleTable:
    """Memoized cocycle values as raw tuples, for the exhaustive identity sweeps."""

    def __init__(self, params):
        self.params = params
        self._cache = {}

    def __call__(self, k, a, m, b):
        key = (k, a, m, b)
        value = self._cache.get(key)
        if value is None:
            value = extension_cocycle(
                SemidirectZ(self.params, k, a), SemidirectZ(self.params, m, b)
            ).v
            self._cache[key] = value
        return value


def check_cocycle_identities(params, degree_span=2):
    """Exhaustive identity suite for the extension cocycle.

    Sweeps the group 2-cocycle identity, both normalizations, twist
    invariance, reduction to degree one, braided symmetry, the closed
    four-letter form, the degree-zero braiding, the commutator form's
    bi-additivity / antisymmetry / vanishing, and the two-letter shift
    relation, over every argument (degrees within the span, all weights).
    """
    result = CheckResult(
        "cocycle-identities",
        {"n": params.n, "t": params.t, "degree_span": degree_span},
    )
    n, t = params.n, params.t
    params_m = params.num_orbits
    phi = _CocycleTable(params)
    degrees = range(-degree_span, degree_span + 1)
    zero = (0,) * params_m

    # group 2-cocycle identity
    for k in degrees:
        for mm in degrees:
            for p in degrees:
                for a in range(n):
                    for b in range(n):
                        for c in range(n):
                            bc = phi(mm, b, p, c)
                            ab_c = phi(k + mm, (pow(t, mm, n) * a + b) % n, p, c)
                            a_bc = phi(k, a, mm + p, (pow(t, p, n) * b + c) % n)
                            ab = phi(k, a, mm, b)
                            ok = all(
                                bc[i] - ab_c[i] + a_bc[i] - ab[i] == 0
                                for i in range(params_m)
                            )
                            result.expect(
                                ok,
                                lambda k=k, a=a, mm=mm, b=b, p=p, c=c: (
                                    f"cocycle identity fails at ({k},{a}),({mm},{b}),({p},{c})"
                                ),
                            )

    for k in degrees:
        for mm in degrees:
            for a in range(n):
                result.expect(
                    phi(k, a, mm, 0) == zero, f"phi(({k},{a}),({mm},0)) != 0"
                )
                result.expect(
                    phi(k, 0, mm, a) == zero, f"phi(({k},0),({mm},{a})) != 0"
                )
            for a in range(n):
                for b in range(n):
                    value = phi(k, a, mm, b)
                    result.expect(
                        value == phi(k, t * a % n, mm, t * b % n),
                        f"twist invariance fails at ({k},{a}),({mm},{b})",
                    )
                    result.expect(
                        value == phi(1, a, mm, b),
                        f"left degree reduction fails at ({k},{a}),({mm},{b})",
                    )
                    result.expect(
                        value == phi(k, a, 1, pow(t, 1 - mm, n) * b % n),
                        f"right degree reduction fails at ({k},{a}),({mm},{b})",
                    )
                    result.expect(
                        value
                        == phi(
                            mm,
                            pow(t, 1 - k, n) * b % n,
                            k,
                            (pow(t, mm, n) * a + (1 - t) * b) % n,
                        ),
                        f"braided symmetry fails at ({k},{a}),({mm},{b})",
                    )
                    # closed four-letter form of the cocycle word
                    tk = pow(t, -k, n)
                    tb = pow(t, 1 - mm, n) * b
                    closed = word_eval(
                        Word(
                            params,
                            (
                                (0, -1),
                                (tk * a % n, 1),
                                (tk * tb % n, 1),
                                (tk * (t * a + tb) % n, -1),
                            ),
                        )
                    )
                    result.expect(
                        closed.v == value and closed.a == 0,
                        f"closed cocycle form fails at ({k},{a}),({mm},{b})",
                    )

    def lam_of(u, w):
        return tuple(x - y for x, y in zip(phi(0, w, 0, u), phi(0, u, 0, w)))

    # degree-zero braiding, commutator form, and the two-letter shift
    for a in range(n):
        for b in range(n):
            p0 = phi(0, a, 0, b)
            result.expect(
                p0 == phi(0, t * b % n, 0, (a + (1 - t) * b) % n),
                f"degree-zero braiding fails at ({a},{b})",
            )
            lam = lam_of(a, b)
            result.expect(lam == zero, f"commutator form is nonzero at ({a},{b})")
            result.expect(
                lam == phi(0, (1 - t) * b % n, 0, a),
                f"commutator/cocycle link fails at ({a},{b})",
            )
            result.expect(
                phi(0, a, 0, (1 - t) * b % n)
                == tuple(-x for x in phi(0, (1 - t) * a % n, 0, t * b % n)),
                f"twisted transposition identity fails at ({a},{b})",
            )
            # factorization e_a e_b = e_0 e_{ta+b} * phi((1,a),(1,b))
            left = word_eval(generator(params, a) * generator(params, b))
            base = word_eval(generator(params, 0) * generator(params, (t * a + b) % n))
            correction = phi(1, a, 1, b)
            result.expect(
                left.v == tuple(x + y for x, y in zip(base.v, correction))
                and left.a == base.a,
                f"factorization through e_0 fails at ({a},{b})",
            )
            for c in range(n):
                pairwise = tuple(x + y for x, y in zip(lam_of(a, b), lam_of(a, c)))
                result.expect(
                    lam_of(a, (b + c) % n) == pairwise,
                    f"commutator form not additive on the right at ({a},{b},{c})",
                )
                pairwise = tuple(x + y for x, y in zip(lam_of(a, c), lam_of(b, c)))
                result.expect(
                    lam_of((a + b) % n, c) == pairwise,
                    f"commutator form not additive on the left at ({a},{b},{c})",
                )
                shifted = word_eval(
                    generator(params, (a - (1 - t) * c) % n)
                    * generator(params, (b + (1 - t) * t * c) % n)
                )
                plain = word_eval(generator(params, a) * generator(params, b))
                result.expect(
                    shifted == plain,
                    f"two-letter shift relation fails at ({a},{b},{c})",
                )
    return result


def check_kernel_generation(params):
    """The cocycle values span exactly the degree-and-weight-zero lattice."""
    result = CheckResult("kernel-generation", {"n": params.n, "t": params.t})
    spanned = [list(kv.v) for kv in cocycle_image_basis(params)]
    lattice = [list(kv.v) for kv in kernel_lattice_basis(params)]
    result.expect(
        spanned == lattice,
        f"cocycle image lattice {spanned} != kernel lattice {lattice}",
    )
    return result


def check_h2_oracles(params):
    """The three homology routes agree; structural sanity of the answer."""
    result = CheckResult("h2-oracles", {"n": params.n, "t": params.t})
    m = orbit_count(params)
    quandle = build_alexander(params)
    formula = h2_closed_form(params)
    eisermann = h2_eisermann(params)
    chain = h2_chain_complex(quandle)
    result.expect(
        formula == eisermann,
        f"formula {formula} != pullback {eisermann}",
    )
    result.expect(
        formula == chain,
        f"formula {formula} != chain complex {chain}",
    )
    result.expect(
        chain.rank == m * (m - 1),
        f"free rank {chain.rank} != m(m-1) = {m * (m - 1)}",
    )
    if m == 1:
        result.expect(
            chain == h2_closed_form(params) and chain.rank == 0 and not chain.torsion,
            "connected quandle has nontrivial homology",
        )
    pair = boundary_matrices(quandle)
    result.expect((pair.d2 @ pair.d3).is_zero(), "d2 @ d3 != 0")
    return result


def check_smith_random(rng, samples=100, max_dim=12, entry_bound=9):
    """Random-matrix properties of the Smith form: chain and recomposition."""
    result = CheckResult(
        "smith-normal-form",
        {"samples": samples, "max_dim": max_dim, "entry_bound": entry_bound},
    )
    for _ in range(samples):
        rows = rng.randint(1, max_dim)
        cols = rng.randint(1, max_dim)
        matrix = IntMatrix(
            [
                [rng.randint(-entry_bound, entry_bound) for _ in range(cols)]
                for _ in range(rows)
            ]
        )
        snf = smith_normal_form(matrix, transforms=True)
        diag = snf.d.diagonal()
        result.expect(
            all(e >= 0 for e in diag), lambda m=matrix: f"negative diagonal for {m}"
        )
        chain_ok = True
        for i in range(1, len(diag)):
            if diag[i - 1] == 0:
                chain_ok = chain_ok and diag[i] == 0
            else:
                chain_ok = chain_ok and diag[i] % diag[i - 1] == 0
        result.expect(chain_ok, lambda m=matrix: f"divisibility chain broken for {m}")
        off_diag_zero = all(
            snf.d.data[i][j] == 0
            for i in range(rows)
            for j in range(cols)
            if i != j
        )
        result.expect(off_diag_zero, lambda m=matrix: f"result not diagonal for {m}")
        result.expect(
            snf.u @ matrix @ snf.v == snf.d,
            lambda m=matrix: f"u @ m @ v != d for {m}",
        )
        result.expect(
            snf.v @ snf.v_inv == IntMatrix.identity(cols),
            lambda m=matrix: f"v_inv is wrong for {m}",
        )
    return result


def run_verification(n_max, seed=2024, word_samples=150, rewrite_samples=60):
    """Full suite over every quandle with modulus up to n_max, plus matrix checks.

    Results are ordered by (n, t) with the global matrix check last; the
    expensive exhaustive sweeps are capped at the moduli they are specified
    for (weight/action at n <= 6, cocycle identities at n <= 8).
    """
    results = []
    for params in unit_pairs(n_max):
        rng = random.Random(seed * 1000003 + params.n * 101 + params.t)
        results.append(check_quandle_structure(params))
        results.append(check_word_laws(params, rng, word_samples))
        if params.n <= 6:
            results.append(check_weight_action_exhaustive(params))
        results.append(check_central_power(params))
        results.append(check_rewriting(params, rng, rewrite_samples))
        if params.n <= 8:
            results.append(check_cocycle_identities(params))
        results.append(check_kernel_generation(params))
        results.append(check_h2_oracles(params))
    results.append(check_smith_random(random.Random(seed)))
    return results
