"""Identity checkers, formula constructors, and existence batteries.

Each battery takes a projection-pair context plus an inverse engine for
the concrete ring instance and returns a structured verdict.  Existence
decisions always come from the engine, never from the statement being
checked, and every constructed formula is certified against the
defining equations before a verdict says it passed.  Batteries that are
only claimed for *-reducing instances return an inapplicable verdict
elsewhere instead of guessing.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .ring import (
    InvalidWitnessError,
    InverseEngine,
    ProjectionPairContext,
    verify_mp,
)

PASS = "pass"
FAIL = "fail"
NA = "na"


@dataclass(frozen=True)
class SubCheck:
    name: str
    status: str  # "pass" | "fail" | "na"


@dataclass
class TheoremVerdict:
    """Outcome of one battery on one input.

    ``passed`` means applicable with no failing sub-check; sub-checks
    marked not-applicable never count against it.  ``counterexample``
    carries the serialized inputs whenever something failed, so a
    failing trial can be replayed.  ``observations`` are informational
    booleans recorded without being asserted.
    """

    theorem: str
    applicable: bool
    passed: bool
    checks: tuple[SubCheck, ...]
    counterexample: dict | None = None
    observations: dict = field(default_factory=dict)

    def failing_checks(self) -> tuple[str, ...]:
        return tuple(c.name for c in self.checks if c.status == FAIL)


@dataclass(frozen=True)
class ExistenceEntry:
    exists: bool
    witness: object | None


@dataclass(frozen=True)
class ExistenceProfile:
    """MP-existence flags, with witnesses, for a family of named elements."""

    entries: dict

    def exists(self, name: str) -> bool:
        return self.entries[name].exists

    def witness(self, name: str):
        return self.entries[name].witness

    def flags(self) -> tuple[bool, ...]:
        return tuple(entry.exists for entry in self.entries.values())

    def all_agree(self) -> bool:
        flags = self.flags()
        return all(flags) or not any(flags)

    def all_exist(self) -> bool:
        return all(self.flags())


def existence_profile(engine: InverseEngine, named_elements: dict) -> ExistenceProfile:
    entries = {}
    for name, element in named_elements.items():
        witness = engine.mp(element)
        entries[name] = ExistenceEntry(witness is not None, witness)
    return ExistenceProfile(entries)


class _Verdict:
    """Accumulates sub-checks and builds the final TheoremVerdict."""

    def __init__(self, theorem: str, payload: dict | None = None):
        self.theorem = theorem
        self.payload = payload
        self._checks: list[SubCheck] = []
        self._observations: dict = {}

    def check(self, name: str, ok: bool) -> bool:
        self._checks.append(SubCheck(name, PASS if ok else FAIL))
        return ok

    def na(self, name: str):
        self._checks.append(SubCheck(name, NA))

    def observe(self, name: str, value):
        self._observations[name] = value

    def build(self, applicable: bool | None = None) -> TheoremVerdict:
        if applicable is None:
            applicable = any(c.status != NA for c in self._checks)
        failed = any(c.status == FAIL for c in self._checks)
        return TheoremVerdict(
            theorem=self.theorem,
            applicable=applicable,
            passed=applicable and not failed,
            checks=tuple(self._checks),
            counterexample=self.payload if failed else None,
            observations=self._observations,
        )


def _pair_payload(ctx: ProjectionPairContext, engine: InverseEngine) -> dict:
    return {"ring": engine.ring_id, "p": engine.serialize(ctx.p), "q": engine.serialize(ctx.q)}


def _element_payload(r, engine: InverseEngine) -> dict:
    return {"ring": engine.ring_id, "r": engine.serialize(r)}


def _not_applicable(theorem: str) -> TheoremVerdict:
    return TheoremVerdict(theorem=theorem, applicable=False, passed=False, checks=())


def lemma21_checks(r, engine: InverseEngine) -> TheoremVerdict:
    """Dagger interplay of r with r*r and rr*.

    When r has an MP inverse: both Gram-like products do too, their
    daggers factor through r's, and r's dagger is recovered from either
    side.  On a *-reducing instance, MP invertibility of either product
    conversely recovers that of r.
    """
    v = _Verdict("lemma21", _element_payload(r, engine))
    r_star = r.star()
    rsr = r_star * r
    rrs = r * r_star
    r_dag = engine.mp(r)
    if r_dag is None:
        for name in (
            "star_product_mp_exists",
            "product_star_mp_exists",
            "star_product_dagger_factors",
            "product_star_dagger_factors",
            "dagger_from_star_product",
            "dagger_from_product_star",
            "star_dagger_exchange",
        ):
            v.na(name)
    else:
        rsr_dag = engine.mp(rsr)
        rrs_dag = engine.mp(rrs)
        r_dag_star = r_dag.star()
        if v.check("star_product_mp_exists", rsr_dag is not None):
            v.check("star_product_dagger_factors", rsr_dag == r_dag * r_dag_star)
            v.check("dagger_from_star_product", r_dag == rsr_dag * r_star)
        else:
            v.na("star_product_dagger_factors")
            v.na("dagger_from_star_product")
        if v.check("product_star_mp_exists", rrs_dag is not None):
            v.check("product_star_dagger_factors", rrs_dag == r_dag_star * r_dag)
            v.check("dagger_from_product_star", r_dag == r_star * rrs_dag)
        else:
            v.na("product_star_dagger_factors")
            v.na("dagger_from_product_star")
        v.check("star_dagger_exchange", engine.mp(r_star) == r_dag_star)
    either_gram = engine.mp(rsr) is not None or engine.mp(rrs) is not None
    if engine.star_reducing:
        v.check("gram_membership_recovers_mp", (not either_gram) or r_dag is not None)
    else:
        v.na("gram_membership_recovers_mp")
        v.observe("gram_invertible_without_r", either_gram and r_dag is None)
    return v.build(applicable=True)


def lemma22_identities(ctx: ProjectionPairContext) -> TheoremVerdict:
    """Unconditional quadratic identities of the derived elements:
    bb* = (p-a)-(p-a)^2, b*b = d-d^2, db* = b*(p-a)."""
    v = _Verdict("lemma22")
    p_minus_a = ctx.p - ctx.a
    b, b_star, d = ctx.b, ctx.b.star(), ctx.d
    v.check("bb_star_quadratic", b * b_star == p_minus_a - p_minus_a * p_minus_a)
    v.check("b_star_b_quadratic", b_star * b == d - d * d)
    v.check("d_b_star_exchange", d * b_star == b_star * p_minus_a)
    return v.build(applicable=True)


def lemma23_identities(ctx: ProjectionPairContext, engine: InverseEngine) -> TheoremVerdict:
    """Projection and exchange identities gated on MP existence of
    p(1-q) and (1-p)q, plus the certified difference formula."""
    v = _Verdict("lemma23", _pair_payload(ctx, engine))
    p_minus_a = ctx.p - ctx.a
    b, d = ctx.b, ctx.d
    has_pqbar = engine.mp(ctx.p * ctx.q_bar) is not None
    has_pbarq = engine.mp(ctx.p_bar * ctx.q) is not None
    pa_dag = engine.mp(p_minus_a) if has_pqbar else None
    d_dag = engine.mp(d) if has_pbarq else None

    if has_pqbar and pa_dag is not None:
        v.check("range_projection_fixes_b", p_minus_a * pa_dag * b == b)
    else:
        v.na("range_projection_fixes_b")
    if has_pbarq and d_dag is not None:
        v.check("b_fixed_by_d_projection", b * d * d_dag == b)
    else:
        v.na("b_fixed_by_d_projection")
    if has_pqbar and has_pbarq and pa_dag is not None and d_dag is not None:
        v.check("b_dagger_exchange", b * d_dag == pa_dag * b)
        v.check("dagger_b_star_exchange", d_dag * b.star() == b.star() * pa_dag)
        w = diff_mp_formula(ctx, engine)
        if v.check("difference_formula_constructible", w is not None):
            v.check("difference_formula_certified", verify_mp(ctx.p - ctx.q, w).all)
        else:
            v.na("difference_formula_certified")
    else:
        for name in ("b_dagger_exchange", "dagger_b_star_exchange",
                     "difference_formula_constructible", "difference_formula_certified"):
            v.na(name)
    return v.build()


def diff_mp_formula(ctx: ProjectionPairContext, engine: InverseEngine):
    """Candidate MP inverse of p - q, namely
    (1-q) (p(1-q)p)^dag - q ((1-p)q(1-p))^dag.

    Requires p(1-q) and (1-p)q to be MP invertible (engine-decided);
    returns None when the preconditions fail.
    """
    if engine.mp(ctx.p * ctx.q_bar) is None or engine.mp(ctx.p_bar * ctx.q) is None:
        return None
    pa_dag = engine.mp(ctx.p - ctx.a)
    d_dag = engine.mp(ctx.d)
    if pa_dag is None or d_dag is None:
        return None
    return ctx.q_bar * pa_dag - ctx.q * d_dag


def eq215_formula(ctx: ProjectionPairContext, dag_p_minus_a):
    """Assemble the explicit MP inverse of 1 - pq from (p - pqp)^dag:
    [1 + b*(p-a)] (p-a)^dag (1+b) - b* - b*b + 1 - p.

    The supplied dagger is verified before use.
    """
    p_minus_a = ctx.p - ctx.a
    if not verify_mp(p_minus_a, dag_p_minus_a).all:
        raise InvalidWitnessError("dag_p_minus_a is not the MP inverse of p - pqp")
    one, b = ctx.one, ctx.b
    b_star = b.star()
    return (
        (one + b_star * p_minus_a) * dag_p_minus_a * (one + b)
        - b_star
        - b_star * b
        + one
        - ctx.p
    )


def pxp_extraction(ctx: ProjectionPairContext, dag_one_minus_pq):
    """Extract (p - pqp)^dag as the p-corner of (1 - pq)^dag.

    The supplied dagger is verified before use.
    """
    one_minus_pq = ctx.one - ctx.p * ctx.q
    if not verify_mp(one_minus_pq, dag_one_minus_pq).all:
        raise InvalidWitnessError("dag_one_minus_pq is not the MP inverse of 1 - pq")
    return ctx.p * dag_one_minus_pq * ctx.p


def anticommutator_mp_formula(ctx: ProjectionPairContext, engine: InverseEngine):
    """Candidate MP inverse of pq + qp, namely (p+q)^dag (p+q-1)^dag.

    Returns None unless both factors are MP invertible (engine-decided).
    """
    sum_dag = engine.mp(ctx.p + ctx.q)
    shift_dag = engine.mp(ctx.p + ctx.q - ctx.one)
    if sum_dag is None or shift_dag is None:
        return None
    return sum_dag * shift_dag


def thm24_battery(ctx: ProjectionPairContext, engine: InverseEngine) -> TheoremVerdict:
    """Six derived elements stand or fall together, in any instance.

    The elements are 1-pq, 1-pqp, p-pqp and their (q,p) counterparts.
    When they exist, the daggers convert into each other: the p-corner
    of (1-pqp)^dag gives (p-pqp)^dag, adding 1-p goes back, and the
    explicit formula and corner extraction round-trip through 1-pq.
    """
    p, q, one = ctx.p, ctx.q, ctx.one
    pq, qp = p * q, q * p
    profile = existence_profile(engine, {
        "1-pq": one - pq,
        "1-pqp": one - pq * p,
        "p-pqp": p - pq * p,
        "1-qp": one - qp,
        "1-qpq": one - qp * q,
        "q-qpq": q - qp * q,
    })
    v = _Verdict("thm24", _pair_payload(ctx, engine))
    v.check("existence_flags_agree", profile.all_agree())
    if profile.all_exist():
        dag_1pqp = profile.witness("1-pqp")
        dag_ppqp = profile.witness("p-pqp")
        dag_1pq = profile.witness("1-pq")
        v.check("corner_of_shifted_dagger", dag_ppqp == p * dag_1pqp)
        v.check("dagger_shift_identity", dag_1pqp == dag_ppqp + one - p)
        x = eq215_formula(ctx, dag_ppqp)
        v.check("explicit_formula_certified", verify_mp(one - pq, x).all)
        v.check("explicit_formula_unique", x == dag_1pq)
        y = pxp_extraction(ctx, dag_1pq)
        v.check("corner_extraction_certified", verify_mp(p - pq * p, y).all)
        v.check("corner_extraction_unique", y == dag_ppqp)
    else:
        for name in ("corner_of_shifted_dagger", "dagger_shift_identity",
                     "explicit_formula_certified", "explicit_formula_unique",
                     "corner_extraction_certified", "corner_extraction_unique"):
            v.na(name)
    return v.build(applicable=True)


_COR25_NAMES = ("1-pq", "1-pqp", "p-pqp", "p-pq", "p-qp",
                "1-qp", "1-qpq", "q-qpq", "q-qp", "q-pq")


def _cor25_elements(ctx: ProjectionPairContext) -> dict:
    p, q, one = ctx.p, ctx.q, ctx.one
    pq, qp = p * q, q * p
    return {
        "1-pq": one - pq,
        "1-pqp": one - pq * p,
        "p-pqp": p - pq * p,
        "p-pq": p - pq,
        "p-qp": p - qp,
        "1-qp": one - qp,
        "1-qpq": one - qp * q,
        "q-qpq": q - qp * q,
        "q-qp": q - qp,
        "q-pq": q - pq,
    }


def cor25_battery(
    ctx: ProjectionPairContext, engine: InverseEngine, ring_is_star_reducing: bool
) -> TheoremVerdict:
    """Ten equivalent existence conditions on a *-reducing instance,
    with (p-pqp)^dag = (1-pq)^dag p when they hold."""
    if not ring_is_star_reducing:
        return _not_applicable("cor25")
    profile = existence_profile(engine, _cor25_elements(ctx))
    v = _Verdict("cor25", _pair_payload(ctx, engine))
    v.check("existence_flags_agree", profile.all_agree())
    if profile.all_exist():
        v.check("dagger_projection_formula",
                profile.witness("p-pqp") == profile.witness("1-pq") * ctx.p)
    else:
        v.na("dagger_projection_formula")
    return v.build(applicable=True)


def cor26_battery(
    ctx: ProjectionPairContext, engine: InverseEngine, ring_is_star_reducing: bool
) -> TheoremVerdict:
    """The complementary-pair version of the ten conditions.

    Realized twice: by direct evaluation of the listed elements and by
    substituting (1-p, 1-q) into the cor25 machinery; the two routes
    must agree element by element and flag by flag.
    """
    if not ring_is_star_reducing:
        return _not_applicable("cor26")
    p, q = ctx.p, ctx.q
    p_bar, q_bar = ctx.p_bar, ctx.q_bar
    pq, qp = p * q, q * p
    # Listed in the order matching _COR25_NAMES under (p,q) -> (1-p, 1-q).
    direct = {
        "p+q-pq": p + q - pq,
        "p+(1-p)q(1-p)": p + p_bar * q * p_bar,
        "(1-p)q(1-p)": p_bar * q * p_bar,
        "q-pq": q - pq,
        "q-qp": q - qp,
        "p+q-qp": p + q - qp,
        "q+(1-q)p(1-q)": q + q_bar * p * q_bar,
        "(1-q)p(1-q)": q_bar * p * q_bar,
        "p-qp": p - qp,
        "p-pq": p - pq,
    }
    sub = _cor25_elements(ctx.complemented())
    v = _Verdict("cor26", _pair_payload(ctx, engine))
    v.check("substitution_route_matches_elements",
            all(direct[d] == sub[s] for d, s in zip(direct, _COR25_NAMES)))
    profile = existence_profile(engine, direct)
    sub_profile = existence_profile(engine, sub)
    v.check("substitution_route_matches_flags", profile.flags() == sub_profile.flags())
    v.check("existence_flags_agree", profile.all_agree())
    return v.build(applicable=True)


def thm27_check(ctx: ProjectionPairContext, engine: InverseEngine) -> TheoremVerdict:
    """p(1-q) and (1-p)q are both MP invertible exactly when p - q is;
    and then (p(1-q))^dag = (p-q)^dag p.  Valid in any instance."""
    v = _Verdict("thm27", _pair_payload(ctx, engine))
    pq_bar = ctx.p * ctx.q_bar
    pbar_q = ctx.p_bar * ctx.q
    diff = ctx.p - ctx.q
    dag_pq_bar = engine.mp(pq_bar)
    dag_pbar_q = engine.mp(pbar_q)
    dag_diff = engine.mp(diff)
    v.check("biconditional",
            ((dag_pq_bar is not None) and (dag_pbar_q is not None)) == (dag_diff is not None))
    if dag_diff is not None and dag_pq_bar is not None:
        v.check("difference_dagger_projection_formula", dag_pq_bar == dag_diff * ctx.p)
    else:
        v.na("difference_dagger_projection_formula")
    return v.build(applicable=True)


def cor28_battery(
    ctx: ProjectionPairContext, engine: InverseEngine, ring_is_star_reducing: bool
) -> TheoremVerdict:
    """On *-reducing instances, p(1-q), p-q and (1-p)q stand together."""
    if not ring_is_star_reducing:
        return _not_applicable("cor28")
    profile = existence_profile(engine, {
        "p(1-q)": ctx.p * ctx.q_bar,
        "p-q": ctx.p - ctx.q,
        "(1-p)q": ctx.p_bar * ctx.q,
    })
    v = _Verdict("cor28", _pair_payload(ctx, engine))
    v.check("existence_flags_agree", profile.all_agree())
    return v.build(applicable=True)


def _all_equal(values: list) -> bool:
    return all(value == values[0] for value in values[1:])


def cor29_chains(
    ctx: ProjectionPairContext, engine: InverseEngine, ring_is_star_reducing: bool
) -> TheoremVerdict:
    """Six expressions collapse to p (p-q)^dag p, and eight to the
    complementary form, once any of the equivalent conditions holds."""
    if not ring_is_star_reducing:
        return _not_applicable("cor29")
    if engine.mp(ctx.p * ctx.q_bar) is None:
        return _not_applicable("cor29")
    p, q, one = ctx.p, ctx.q, ctx.one
    p_bar, q_bar = ctx.p_bar, ctx.q_bar
    v = _Verdict("cor29", _pair_payload(ctx, engine))

    pq_bar_p = p * q_bar * p
    needed1 = {
        "1-pq": one - p * q,
        "pq_bar_p": pq_bar_p,
        "1-qp": one - q * p,
        "pq_bar": p * q_bar,
        "q_bar_p": q_bar * p,
        "p-q": p - q,
    }
    dags1 = {name: engine.mp(elem) for name, elem in needed1.items()}
    if v.check("chain1_daggers_exist", all(d is not None for d in dags1.values())):
        chain1 = [
            dags1["1-pq"] * pq_bar_p,
            p * q_bar * dags1["pq_bar_p"],
            pq_bar_p * dags1["1-qp"],
            p * dags1["pq_bar"],
            dags1["q_bar_p"] * p,
            p * dags1["p-q"] * p,
        ]
        v.check("chain1_all_equal", _all_equal(chain1))
    else:
        v.na("chain1_all_equal")

    pbar_q_pbar = p_bar * q * p_bar
    needed2 = {
        "p+(1-p)q": p + p_bar * q,
        "q+p(1-q)": q + p * q_bar,
        "pbar_q_pbar": pbar_q_pbar,
        "p+q(1-p)": p + q * p_bar,
        "q+(1-q)p": q + q_bar * p,
        "pbar_q": p_bar * q,
        "q_pbar": q * p_bar,
        "q-p": q - p,
    }
    dags2 = {name: engine.mp(elem) for name, elem in needed2.items()}
    if v.check("chain2_daggers_exist", all(d is not None for d in dags2.values())):
        chain2 = [
            dags2["p+(1-p)q"] * pbar_q_pbar,
            dags2["q+p(1-q)"] * pbar_q_pbar,
            p_bar * q * dags2["pbar_q_pbar"],
            pbar_q_pbar * dags2["p+q(1-p)"],
            pbar_q_pbar * dags2["q+(1-q)p"],
            p_bar * dags2["pbar_q"],
            dags2["q_pbar"] * p_bar,
            p_bar * dags2["q-p"] * p_bar,
        ]
        v.check("chain2_all_equal", _all_equal(chain2))
    else:
        v.na("chain2_all_equal")
    return v.build(applicable=True)


def lemma210_battery(
    ctx: ProjectionPairContext, engine: InverseEngine, ring_is_star_reducing: bool
) -> TheoremVerdict:
    """On *-reducing instances, (1-p)(1-q), 1-p-q and pq stand together."""
    if not ring_is_star_reducing:
        return _not_applicable("lemma210")
    profile = existence_profile(engine, {
        "(1-p)(1-q)": ctx.p_bar * ctx.q_bar,
        "1-p-q": ctx.one - ctx.p - ctx.q,
        "pq": ctx.p * ctx.q,
    })
    v = _Verdict("lemma210", _pair_payload(ctx, engine))
    v.check("existence_flags_agree", profile.all_agree())
    return v.build(applicable=True)


def lemma211_check(ctx: ProjectionPairContext, engine: InverseEngine) -> TheoremVerdict:
    """b - b* is Drazin invertible exactly when bb* is; the index of
    bb* is then bounded by max(1, index of (b-b*)^2).

    The unguarded bound fails at the boundary where (b-b*)^2 is
    invertible while bb* has index 1, so its truth value is recorded as
    an observation without being asserted.
    """
    v = _Verdict("lemma211", _pair_payload(ctx, engine))
    b = ctx.b
    skew = b - b.star()
    gram = b * b.star()
    skew_result = engine.drazin(skew)
    gram_result = engine.drazin(gram)
    v.check("drazin_biconditional", (skew_result is not None) == (gram_result is not None))
    if skew_result is not None and gram_result is not None:
        square_result = engine.drazin(skew * skew)
        if v.check("skew_square_drazin_exists", square_result is not None):
            gram_index = gram_result[1]
            square_index = square_result[1]
            v.check("guarded_index_bound", gram_index <= max(1, square_index))
            v.observe("literal_index_bound", gram_index <= square_index)
        else:
            v.na("guarded_index_bound")
    else:
        v.na("skew_square_drazin_exists")
        v.na("guarded_index_bound")
    return v.build(applicable=True)


def lemma212_check(r, engine: InverseEngine) -> TheoremVerdict:
    """Drazin invertibility passes from r + r^2 (or r - r^2) down to r,
    without increasing the index."""
    v = _Verdict("lemma212", _element_payload(r, engine))
    r_sq = r * r
    r_result = engine.drazin(r)
    for label, shifted in (("sum", r + r_sq), ("difference", r - r_sq)):
        shifted_result = engine.drazin(shifted)
        if shifted_result is None:
            v.na(f"{label}_route_membership")
            v.na(f"{label}_route_index_bound")
            continue
        if v.check(f"{label}_route_membership", r_result is not None):
            v.check(f"{label}_route_index_bound", r_result[1] <= shifted_result[1])
        else:
            v.na(f"{label}_route_index_bound")
    return v.build()


def thm213_check(
    ctx: ProjectionPairContext, engine: InverseEngine, ring_is_star_reducing: bool
) -> TheoremVerdict:
    """The commutator pq - qp is MP invertible exactly when pq and
    p - q both are (on *-reducing instances).  No closed form for the
    commutator's dagger is constructed; existence on both sides comes
    from the engine."""
    if not ring_is_star_reducing:
        return _not_applicable("thm213")
    v = _Verdict("thm213", _pair_payload(ctx, engine))
    pq, qp = ctx.p * ctx.q, ctx.q * ctx.p
    commutator_dag = engine.mp(pq - qp)
    pq_dag = engine.mp(pq)
    diff_dag = engine.mp(ctx.p - ctx.q)
    v.check("biconditional",
            (commutator_dag is not None) == (pq_dag is not None and diff_dag is not None))
    if diff_dag is not None:
        diff = ctx.p - ctx.q
        v.check("square_dagger_identity", engine.mp(diff * diff) == diff_dag * diff_dag)
    else:
        v.na("square_dagger_identity")
    return v.build(applicable=True)


def thm214_check(
    ctx: ProjectionPairContext, engine: InverseEngine, ring_is_star_reducing: bool
) -> TheoremVerdict:
    """The anti-commutator pq + qp is MP invertible exactly when p + q
    and pq both are (on *-reducing instances); its dagger is then the
    certified product (p+q)^dag (p+q-1)^dag."""
    if not ring_is_star_reducing:
        return _not_applicable("thm214")
    v = _Verdict("thm214", _pair_payload(ctx, engine))
    p, q, one = ctx.p, ctx.q, ctx.one
    anti = p * q + q * p
    anti_dag = engine.mp(anti)
    sum_dag = engine.mp(p + q)
    pq_dag = engine.mp(p * q)
    v.check("biconditional",
            (anti_dag is not None) == (sum_dag is not None and pq_dag is not None))
    if sum_dag is not None and pq_dag is not None:
        shift_dag = engine.mp(p + q - one)
        if v.check("shifted_sum_mp_exists", shift_dag is not None):
            w = sum_dag * shift_dag
            v.check("anticommutator_formula_certified", verify_mp(anti, w).all)
            v.check("anticommutator_formula_unique", w == anti_dag)
        else:
            v.na("anticommutator_formula_certified")
            v.na("anticommutator_formula_unique")
    else:
        for name in ("shifted_sum_mp_exists", "anticommutator_formula_certified",
                     "anticommutator_formula_unique"):
            v.na(name)
    return v.build(applicable=True)
