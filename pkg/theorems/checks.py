import logging
import operator
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from complexes.complex import is_standard_sphere, vertex_link
from complexes.structure import is_neighbourly, neighbourliness, structure_report
from complexes.vectors import f_vector, g_vector
from flips.exceptions import MoveError
from flips.moves import apply_move, g_delta
from flips.search import CERTIFICATE, stellated_reduction
from homology.betti import betti, orientable
from homology.fields import F2, F3, Q
from sigmamu.mu import mu_vector
from sigmamu.sigma import sigma_vector
from tightness.service import morse_report, tight_direct, tight_mu

from .exceptions import HypothesisError, UnknownTheoremError
from .membership import CLASS_K, CLASS_W, YES, class_membership

logger = logging.getLogger(__name__)

RELATIONS = {"<": operator.lt, "<=": operator.le, "=": operator.eq, ">=": operator.ge}

COMPUTED = "computed"
ASSERTED = "caller-asserted"


@dataclass(frozen=True)
class Claim:
    label: str
    lhs: object
    rhs: object
    relation: str

    @property
    def holds(self):
        return RELATIONS[self.relation](self.lhs, self.rhs)

    @property
    def equality(self):
        return self.lhs == self.rhs

    def as_dict(self):
        return {"label": self.label, "lhs": self.lhs, "rhs": self.rhs,
                "relation": self.relation, "holds": self.holds}


@dataclass(frozen=True)
class TheoremCheck:
    theorem: str
    hypotheses_satisfied: bool
    hypotheses: dict = field(default_factory=dict)
    claims: tuple = ()

    @property
    def holds(self):
        return self.hypotheses_satisfied and all(c.holds for c in self.claims)

    @property
    def violated(self):
        return self.hypotheses_satisfied and not all(c.holds for c in self.claims)

    def failures(self):
        return [c for c in self.claims if not c.holds]

    def as_dict(self):
        return {
            "theorem": self.theorem,
            "hypotheses_satisfied": self.hypotheses_satisfied,
            "hypotheses": self.hypotheses,
            "holds": self.holds,
            "claims": [c.as_dict() for c in self.claims],
        }


class Hypotheses:
    """Collects named hypotheses with where each verdict came from."""

    def __init__(self):
        self.record = {}

    def check(self, name, value, source=COMPUTED):
        self.record[name] = {"value": bool(value), "source": source}
        return bool(value)

    @property
    def satisfied(self):
        return all(h["value"] for h in self.record.values())

    def unmet(self, theorem):
        return TheoremCheck(theorem, False, self.record, ())

    def done(self, theorem, claims):
        return TheoremCheck(theorem, True, self.record, tuple(claims))


THEOREMS = {}


def theorem(name):
    def register(func):
        THEOREMS[name] = func
        return func

    return register


def verify(M, theorem_id, field=Q, params=None):
    """Check hypotheses, then evaluate every claim of a named result exactly."""
    name = theorem_id.upper()
    if name not in THEOREMS:
        raise UnknownTheoremError(f"unknown theorem {theorem_id!r}; known: {', '.join(sorted(THEOREMS))}")
    return THEOREMS[name](M, field, dict(params or {}))


def _require_complex(M, name):
    if M is None:
        raise HypothesisError(f"{name} needs a complex")
    return M


def _require_k(params, name):
    if params.get("k") is None:
        raise HypothesisError(f"{name} needs the parameter k")
    return int(params["k"])


def _alternating(values, l, start=0):
    return sum((-1) ** (l - i) * values[i] for i in range(start, l + 1))


def _manifold(hyp, M, params):
    report = structure_report(M)
    hyp.check("closed pseudomanifold", report.closed and report.pseudomanifold)
    claims = params.get("claims") or {}
    if "manifold" in claims:
        hyp.check(f"manifold ({claims['manifold']})", True, ASSERTED)
    return report


def _membership(hyp, M, k, klass, params):
    verdict = params.get("membership")
    if verdict is None or verdict.klass != klass or verdict.k != k:
        verdict = class_membership(
            M, k, klass, params.get("budget"), params.get("witnesses"), workers=params.get("workers", 1)
        )
    hyp.check(f"{klass.upper()}_{k}(d) membership", verdict.verdict == YES, "certificates")
    return verdict


def _sigma(S, field, params):
    return sigma_vector(S, field, params.get("cap"), params.get("workers", 1))


def _mu(M, field, params):
    return mu_vector(M, field, params.get("cap"), params.get("workers", 1))


@theorem("P19")
def check_sigma_g_relations(S, field, params):
    S = _require_complex(S, "P19")
    k = _require_k(params, "P19")
    d, m = S.dim, S.num_vertices
    hyp = Hypotheses()
    hyp.check("k >= 1", k >= 1)
    hyp.check("d >= 2k-1", d >= 2 * k - 1)
    certificate = params.get("certificate")
    if certificate is not None:
        hyp.check(
            "k-stellated (certificate)",
            certificate.end == S and certificate.witnesses_stellated(k),
            "certificate",
        )
    elif hyp.satisfied:
        reduction = stellated_reduction(S, k, params.get("budget"))
        hyp.check("k-stellated (reduction search)", reduction.verdict == CERTIFICATE)
    if not hyp.satisfied:
        return hyp.unmet("P19")
    sigma = _sigma(S, field, params)
    g = g_vector(S)

    def bound(l):
        inner = sum((Fraction((-1) ** (l + 1 - i) * g[i], comb(d + 2, i)) for i in range(l + 2)), Fraction(0))
        return Fraction(m + 1, d + 3) * inner

    claims = [Claim(f"(a) sigma_{i}", sigma[i], 0, "=") for i in range(k, d - k)]
    claims += [Claim(f"(b) l={l}", _alternating(sigma, l), bound(l), "<=") for l in range(0, k - 1)]
    claims += [Claim(f"(c) l={l}", _alternating(sigma, l), bound(l), "=") for l in range(k - 1, d - k)]
    return hyp.done("P19", claims)


def _two_neighbourly_w(hyp, M, k, params):
    hyp.check("2-neighbourly", is_neighbourly(M, 2))
    if hyp.satisfied:
        _membership(hyp, M, k, CLASS_W, params)


@theorem("P20")
def check_mu_g_relations(M, field, params):
    M = _require_complex(M, "P20")
    k = _require_k(params, "P20")
    d = M.dim
    hyp = Hypotheses()
    hyp.check("d >= 2k >= 2", d >= 2 * k >= 2)
    if hyp.satisfied:
        _two_neighbourly_w(hyp, M, k, params)
    if not hyp.satisfied:
        return hyp.unmet("P20")
    mu = _mu(M, field, params)
    g = g_vector(M)
    claims = [Claim(f"(a) mu_{i}", mu[i], 0, "=") for i in range(k + 1, d - k)]
    for l in range(1, d - k):
        relation = "<=" if l <= k - 1 else "="
        part = "(b)" if l <= k - 1 else "(c)"
        claims.append(Claim(f"{part} l={l}", _alternating(mu, l, 1), Fraction(g[l + 1], comb(d + 2, l + 1)), relation))
    return hyp.done("P20", claims)


@theorem("P21")
def check_lower_bound_w(M, field, params):
    M = _require_complex(M, "P21")
    k = _require_k(params, "P21")
    d = M.dim
    hyp = Hypotheses()
    hyp.check("k >= 1", k >= 1)
    if hyp.satisfied:
        _two_neighbourly_w(hyp, M, k, params)
    if not hyp.satisfied:
        return hyp.unmet("P21")
    table = betti(M, field)
    g = g_vector(M)

    def rhs(l):
        return comb(d + 2, l + 1) * _alternating(table, l, 1)

    claims = []
    if d == 2 * k:
        claims += [Claim(f"(a) l={l}", g[l + 1], rhs(l), ">=") for l in range(1, k)]
    if d >= 2 * k + 1:
        claims += [Claim(f"(b) l={l}", g[l + 1], rhs(l), ">=") for l in range(1, k + 1)]
    if d >= 2 * k + 2:
        claims += [Claim(f"(c) l={l}", g[l + 1], rhs(l), "=") for l in range(k, d - k)]
        claims += [Claim(f"(d) beta_{i}", table[i], 0, "=") for i in range(k + 1, d - k)]
    return hyp.done("P21", claims)


@theorem("P23")
def check_lower_bound_manifold(M, field, params):
    M = _require_complex(M, "P23")
    d = M.dim
    hyp = Hypotheses()
    report = _manifold(hyp, M, params)
    hyp.check("connected", report.connected)
    hyp.check("d >= 3", d >= 3)
    if not hyp.satisfied:
        return hyp.unmet("P23")
    f = f_vector(M)
    b1 = betti(M, F2)[1]
    claims = [
        Claim(f"(a) f_{j}", f[j], comb(d + 1, j) * f[0] + j * comb(d + 2, j + 1) * (b1 - 1), ">=")
        for j in range(1, d)
    ]
    claims.append(Claim(f"(a) f_{d}", f[d], d * f[0] + (d - 1) * (d + 2) * (b1 - 1), ">="))
    claims.append(Claim("(b)", comb(f[0] - d - 1, 2), comb(d + 2, 2) * b1, ">="))
    return hyp.done("P23", claims)


def p24_screen(k, d, m):
    """Integrality and vertex bound forced on a non-standard member of W*_k(d)."""
    beta = Fraction(comb(m + k - d - 2, k + 1), comb(d + 2, k + 1))
    return beta, beta.denominator == 1 and beta > 0, m >= 2 * d + 4 - k


@theorem("P24")
def check_homology_type(M, field, params):
    hyp = Hypotheses()
    if M is None:
        k, d, m = _require_k(params, "P24"), params.get("dim"), params.get("vertices")
        if d is None or m is None:
            raise HypothesisError("P24 arithmetic needs k, dim and vertices")
        d, m = int(d), int(m)
    else:
        k = _require_k(params, "P24")
        d, m = M.dim, M.num_vertices
    hyp.check("k >= 2", k >= 2)
    hyp.check("d >= 2k+2", d >= 2 * k + 2)
    if M is not None:
        hyp.check("not the standard sphere", not is_standard_sphere(M))
    if M is not None and hyp.satisfied:
        hyp.check("(k+1)-neighbourly", is_neighbourly(M, k + 1))
        if hyp.satisfied:
            _membership(hyp, M, k, CLASS_W, params)
    if not hyp.satisfied:
        return hyp.unmet("P24")
    beta, integral, enough = p24_screen(k, d, m)
    claims = [
        Claim("beta is a positive integer", beta.denominator == 1 and beta > 0, True, "="),
        Claim("m >= 2d+4-k", m, 2 * d + 4 - k, ">="),
    ]
    if M is not None:
        expected = [0] * (d + 1)
        expected[0] = expected[d] = 1
        expected[k] = expected[d - k] = beta
        for name, over in (("Q", Q), ("F2", F2), ("F3", F3)):
            table = betti(M, over)
            claims += [Claim(f"beta_{i} over {name}", table[i], expected[i], "=") for i in range(d + 1)]
    return hyp.done("P24", claims)


@theorem("P25")
def check_tightness_criterion(M, field, params):
    M = _require_complex(M, "P25")
    k = _require_k(params, "P25")
    d, n = M.dim, M.num_vertices
    hyp = Hypotheses()
    hyp.check("(k+1)-neighbourly", is_neighbourly(M, k + 1))
    report = _manifold(hyp, M, params)
    if hyp.satisfied:
        hyp.check(f"orientable over {field}", report.connected and orientable(M, field))
    if hyp.satisfied:
        _membership(hyp, M, k, CLASS_W, params)
    if not hyp.satisfied:
        return hyp.unmet("P25")
    tight = tight_mu(M, field, params.get("cap"), params.get("workers", 1)).tight
    if d != 2 * k + 1:
        return hyp.done("P25", [Claim("(a) tight", tight, True, "=")])
    required = Fraction(comb(n - k - 3, k + 1), comb(2 * k + 3, k + 1))
    beta_k = betti(M, field)[k]
    return hyp.done("P25", [
        Claim("(b) tight iff beta_k matches", tight, beta_k == required, "="),
        Claim(f"(b) beta_{k} vs required", beta_k, required, "=" if tight else "<"),
    ])


@theorem("L2.2")
def check_sigma_duality(S, field, params):
    S = _require_complex(S, "L2.2")
    d = S.dim
    hyp = Hypotheses()
    _manifold(hyp, S, params)
    hyp.check("d >= 2", d >= 2)
    if hyp.satisfied:
        table = betti(S, field)
        sphere = [1] + [0] * (d - 1) + [1]
        hyp.check("homology sphere", list(table.betti) == sphere)
    if not hyp.satisfied:
        return hyp.unmet("L2.2")
    sigma = _sigma(S, field, params)
    claims = [Claim(f"sigma_{d - 1 - i} = sigma_{i}", sigma[d - 1 - i], sigma[i], "=") for i in range(1, d - 1)]
    claims.append(Claim(f"sigma_{d - 1} = sigma_0 + 1", sigma[d - 1], sigma[0] + 1, "="))
    claims.append(Claim(f"sigma_{d} = 1", sigma[d], 1, "="))
    return hyp.done("L2.2", claims)


@theorem("T2.3")
def check_mu_duality(M, field, params):
    M = _require_complex(M, "T2.3")
    hyp = Hypotheses()
    _manifold(hyp, M, params)
    if not hyp.satisfied:
        return hyp.unmet("T2.3")
    mu = _mu(M, field, params)
    d = M.dim
    return hyp.done("T2.3", [Claim(f"mu_{d - i} = mu_{i}", mu[d - i], mu[i], "=") for i in range(d + 1)])


def link_g_sums(M):
    """sum over vertices x of g_j(lk x), j = 0..d."""
    totals = [0] * (M.dim + 1)
    for x in M.vertices:
        g = g_vector(vertex_link(M, x))
        for j in range(M.dim + 1):
            totals[j] += g[j]
    return totals


@theorem("L4")
def check_link_g_identity(M, field, params):
    M = _require_complex(M, "L4")
    hyp = Hypotheses()
    hyp.check("pure", M.is_pure())
    hyp.check("d >= 0", M.dim >= 0)
    if not hyp.satisfied:
        return hyp.unmet("L4")
    d = M.dim
    g = g_vector(M)
    sums = link_g_sums(M)
    claims = [
        Claim(f"j={j}", sums[j], (d + 2 - j) * g[j] + (j + 1) * g[j + 1], "=") for j in range(d + 1)
    ]
    return hyp.done("L4", claims)


@theorem("L9")
def check_neighbourly_vanishing(M, field, params):
    M = _require_complex(M, "L9")
    l = params.get("l")
    l = neighbourliness(M) - 1 if l is None else int(l)
    hyp = Hypotheses()
    hyp.check(f"{l + 1}-neighbourly", l >= 0 and is_neighbourly(M, l + 1))
    if not hyp.satisfied:
        return hyp.unmet("L9")
    table = betti(M, field)
    claims = [Claim(f"beta_{i}", table[i], 0, "=") for i in range(1, l)]
    if l >= 2:
        mu = _mu(M, field, params)
        claims += [Claim(f"mu_{i}", mu[i], 0, "=") for i in range(1, l)]
    return hyp.done("L9", claims)


@theorem("L10")
def check_neighbourly_tight(M, field, params):
    M = _require_complex(M, "L10")
    d = M.dim
    hyp = Hypotheses()
    hyp.check("even dimension 2k >= 2", d >= 2 and d % 2 == 0)
    k = d // 2
    hyp.check(f"{k + 1}-neighbourly", is_neighbourly(M, k + 1))
    report = _manifold(hyp, M, params)
    if hyp.satisfied:
        hyp.check(f"orientable over {field}", report.connected and orientable(M, field))
    if not hyp.satisfied:
        return hyp.unmet("L10")
    result = tight_mu(M, field, params.get("cap"), params.get("workers", 1))
    return hyp.done("L10", [Claim("tight", result.tight, True, "=")])


@theorem("EULER-K")
def check_euler_identity(M, field, params):
    M = _require_complex(M, "EULER-K")
    k = _require_k(params, "EULER-K")
    d = M.dim
    hyp = Hypotheses()
    hyp.check("even d >= 2k", d % 2 == 0 and d >= 2 * k)
    if hyp.satisfied:
        _membership(hyp, M, k, CLASS_K, params)
    if not hyp.satisfied:
        return hyp.unmet("EULER-K")
    chi = structure_report(M).euler_characteristic
    g = g_vector(M)
    return hyp.done("EULER-K", [Claim("euler", (-1) ** k * comb(d + 2, k + 1) * (chi - 2), 2 * g[k + 1], "=")])


def binomial_identity(p, q, r):
    lhs = sum((Fraction(comb(p, i), comb(p + q + r, r + i)) for i in range(p + 1)), Fraction(0))
    rhs = Fraction(p + q + r + 1, q + r + 1) / comb(q + r, r)
    return lhs, rhs


@theorem("EQ12")
def check_binomial_identity(M, field, params):
    n = int(params.get("grid", 12))
    hyp = Hypotheses()
    claims = []
    for p in range(n + 1):
        for q in range(n + 1):
            for r in range(n + 1):
                lhs, rhs = binomial_identity(p, q, r)
                claims.append(Claim(f"p={p} q={q} r={r}", lhs, rhs, "="))
    return hyp.done("EQ12", claims)


@theorem("L3")
def check_move_g_deltas(M, field, params):
    certificate = params.get("certificate")
    if certificate is None:
        raise HypothesisError("L3 needs a flip certificate")
    hyp = Hypotheses()
    current = certificate.start
    claims = []
    try:
        for step, move in enumerate(certificate.moves):
            after = apply_move(current, move)
            before_g, after_g = g_vector(current), g_vector(after)
            delta = [after_g[j] - before_g[j] for j in range(current.dim + 2)]
            claims.append(Claim(f"step {step} index {move.index}", delta, g_delta(current.dim, move.index), "="))
            current = after
    except MoveError:
        hyp.check("certificate replays", False, "certificate")
        return hyp.unmet("L3")
    hyp.check("certificate replays", True, "certificate")
    return hyp.done("L3", claims)


@theorem("P16")
def check_morse_relations(M, field, params):
    M = _require_complex(M, "P16")
    hyp = Hypotheses()
    hyp.check("2-neighbourly", is_neighbourly(M, 2))
    if not hyp.satisfied:
        return hyp.unmet("P16")
    asserted = params.get("claims") or {}
    if "manifold" in asserted:
        hyp.check(f"manifold ({asserted['manifold']})", True, ASSERTED)
    report = morse_report(M, field, params.get("cap"), params.get("workers", 1), manifold="manifold" in asserted)
    claims = [
        Claim(f"({row.part}) j={row.degree}", row.lhs, row.rhs, "=" if row.relation == "iff" else row.relation)
        for row in report.rows
    ]
    return hyp.done("P16", claims)


@theorem("P17")
def check_tight_consequences(M, field, params):
    M = _require_complex(M, "P17")
    hyp = Hypotheses()
    result = tight_mu(M, field, params.get("cap"), params.get("workers", 1))
    hyp.check(f"tight over {field}", result.tight)
    if not hyp.satisfied:
        return hyp.unmet("P17")
    claims = [Claim("2-neighbourly", is_neighbourly(M, 2), True, "=")]
    if structure_report(M).closed:
        claims.append(Claim(f"beta_{M.dim}", result.betti[M.dim], 1, "="))
    return hyp.done("P17", claims)


@theorem("P18")
def check_tightness_equivalence(M, field, params):
    M = _require_complex(M, "P18")
    hyp = Hypotheses()
    direct = tight_direct(M, field, params.get("cap"), params.get("workers", 1))
    by_mu = tight_mu(M, field, params.get("cap"), params.get("workers", 1), cross_check=False)
    return hyp.done("P18", [Claim("direct = mu criterion", direct.tight, by_mu.tight, "=")])


def _glbc_claims(M, field, rhs_left):
    d = M.dim
    table = betti(M, field)
    claims = []
    for l in range(1, (d - 1) // 2 + 1):
        claims.append(Claim(f"l={l}", rhs_left(l), comb(d + 2, l + 1) * _alternating(table, l, 1), ">="))
    return claims


@theorem("GLBC")
def check_generalised_lower_bound(M, field, params):
    M = _require_complex(M, "GLBC")
    hyp = Hypotheses()
    report = _manifold(hyp, M, params)
    hyp.check("connected", report.connected)
    if not hyp.satisfied:
        return hyp.unmet("GLBC")
    g = g_vector(M)
    return hyp.done("GLBC", _glbc_claims(M, field, lambda l: g[l + 1]))


@theorem("VERTEX-BOUND")
def check_vertex_bound(M, field, params):
    M = _require_complex(M, "VERTEX-BOUND")
    hyp = Hypotheses()
    report = _manifold(hyp, M, params)
    hyp.check("connected", report.connected)
    if not hyp.satisfied:
        return hyp.unmet("VERTEX-BOUND")
    m, d = M.num_vertices, M.dim
    return hyp.done("VERTEX-BOUND", _glbc_claims(M, field, lambda l: comb(m + l - d - 2, l + 1)))


@theorem("C1.5")
def check_w_inside_k(M, field, params):
    M = _require_complex(M, "C1.5")
    k = _require_k(params, "C1.5")
    hyp = Hypotheses()
    hyp.check("d >= 2k", M.dim >= 2 * k)
    if hyp.satisfied:
        _membership(hyp, M, k, CLASS_W, params)
    if not hyp.satisfied:
        return hyp.unmet("C1.5")
    verdict = class_membership(M, k, CLASS_K, params.get("budget"), workers=params.get("workers", 1))
    return hyp.done("C1.5", [Claim("K_k(d) membership", verdict.verdict, YES, "=")])
