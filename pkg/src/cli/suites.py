"""
Verification suites behind `coalg verify`. Each suite replays one family of
exact checks on the shipped instances and on seeded random draws, and
collects the failing cases.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Dict, List, Mapping, Optional, Sequence

import numpy as np
import pandas as pd
from tqdm import tqdm

from bialgebra import (
    InfiltrationQ,
    MonoidDiag,
    characters_match_grouplikes,
    cyclic_group,
    diagonal_algebra,
    enumerate_grouplikes,
    infiltration_coproduct_closed_form,
    is_grouplike,
    monoid_grouplikes,
    polynomial_primitive,
    semilattice,
    small_monoid_zoo,
    truncated_polynomial_algebra,
)
from convolution import (
    binomial_product_identity,
    binomial_transform,
    conv_power,
    degree_upper_bound,
    eta_eps_minus_id_sequence,
    is_m_polynomial,
    polynomial_sequence,
)
from dual_filtration import (
    DualFunctional,
    character_independence_system,
    filtration_degree,
    infiltration_character_product,
    leibniz_shift_check,
    star_character,
    verify_filtration_product,
)
from global_variables import CERTIFIED, DEFAULT_SEED, BadParameter, report, stylish_stat_print
from independence import (
    ASSUMPTIONS_NOT_MET,
    check_grouplike_relation,
    check_unipotent_independence,
    grouplike_rank,
    linear_relations,
)
from monoid_series import (
    Series,
    TraceMonoid,
    character_series,
    character_series_via_mobius,
    free_abelian_character_star,
    kleene_star,
    mobius,
    verify_mobius_inverse,
)
from scalars import ZERO_DIVISOR, integers, modular, poly, rationals

from .instances import load_instance

QQ = rationals()
ZZ = integers()


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: List[Dict] = field(default_factory=list)

    def check(self, holds: bool, **context):
        self.cases += 1
        if not holds:
            self.failures.append({key: str(value) for key, value in context.items()})

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self):
        return {"cases": self.cases, "failures": self.failures, "passed": self.passed}


def _rational(rng) -> Fraction:
    return Fraction(int(rng.integers(-9, 10)), int(rng.integers(1, 6)))


def _random_functional(B, rng, max_degree: int) -> DualFunctional:
    images = {index: B.ring.from_fraction(_rational(rng)) for index in B.basis(max_degree)}
    return DualFunctional(B, B.ring, images)


def _random_polynomial(B, rng, degree: int, low: int = 0):
    x = B.gen("x")
    total = B.zero()
    for d in range(low, degree + 1):
        total = total + x**d * B.ring.from_int(int(rng.integers(1, 8)))
    return total


def infiltration_coproduct(result: SuiteResult, rng, cases: Mapping):
    QQq = poly(QQ, ["q"])
    B = InfiltrationQ(QQq, QQq.gen("q"), 8)
    x = B.gen("x")
    for m in range(9):
        result.check(B.delta(x**m) == infiltration_coproduct_closed_form(B, m), m=m)


def unipotence_closed_form(result: SuiteResult, rng, cases: Mapping):
    QQq = poly(QQ, ["q"])
    q = QQq.gen("q")
    B = InfiltrationQ(QQq, q, 8)
    x = B.gen("x")
    values = eta_eps_minus_id_sequence(x, 8)
    for n in range(1, 9):
        result.check(values[n] == -(x**n) * (-q) ** (n - 1), family=B, n=n, value=values[n])

    frobenius = load_instance("frob.json")
    values = eta_eps_minus_id_sequence(frobenius.element("xbar"), 8)
    for n in range(3, 9):
        result.check(values[n].is_zero(), family=frobenius.bialgebra, n=n, value=values[n])


def degree_bounds(result: SuiteResult, rng, cases: Mapping):
    for path, name, expected in (("z4_infiltration.json", "x", 2), ("frob.json", "xbar", 2)):
        bound = degree_upper_bound(load_instance(path).element(name), 10)
        result.check(bound.bound == expected and bound.mode == CERTIFIED, instance=path, bound=bound.to_dict())


def grouplike_relations(result: SuiteResult, rng, cases: Mapping):
    instance = load_instance("z4_infiltration.json")
    gs = instance.element_list("grouplikes")
    check = check_grouplike_relation(instance.bialgebra, gs, instance.scalar_list("coefficients"))
    transported = check.details["transported_power_sums"]["holds"]
    result.check(check.hypothesis_holds and check.conclusion_holds and transported, instance="z4_infiltration.json")

    families = []
    for ring in (modular(4), modular(6)):
        for monoid in (cyclic_group(2), cyclic_group(3), semilattice()):
            B = MonoidDiag(ring, monoid)
            families.append((B, enumerate_grouplikes(B, range(ring.modulus))))
    Z4 = modular(4)
    B = InfiltrationQ(Z4, Z4.from_int(2), 4)
    families.append((B, enumerate_grouplikes(B, range(4), max_degree=2)))
    wanted = int(cases.get("grouplike_relations", 200))
    found = 0
    for _ in range(wanted * 20):
        if found >= wanted:
            break
        B, grouplikes = families[int(rng.integers(len(families)))]
        size = min(int(rng.integers(2, 4)), len(grouplikes))
        picks = rng.choice(len(grouplikes), size=size, replace=False)
        chosen = [grouplikes[int(i)] for i in picks]
        relations = linear_relations(chosen, limit=4)
        if not relations:
            continue
        cs = relations[int(rng.integers(len(relations)))]
        check = check_grouplike_relation(B, chosen, cs, horizon=4)
        result.check(check.passed, family=B, grouplikes=[str(g) for g in chosen], coefficients=[str(c) for c in cs])
        found += 1
    result.check(found == wanted, drawn=found, wanted=wanted)


def grouplike_rank_suite(result: SuiteResult, rng, cases: Mapping):
    for ring, window in ((QQ, range(2)), (modular(5), range(5))):
        for monoid in small_monoid_zoo(4):
            B = MonoidDiag(ring, monoid)
            grouplikes = monoid_grouplikes(B, window)
            result.check(len(grouplikes) == len(monoid.elements()), family=B, found=len(grouplikes))
            result.check(all(is_grouplike(g) for g in grouplikes), family=B)
            for size in range(1, 5):
                for chosen in combinations(grouplikes, size):
                    result.check(grouplike_rank(B, list(chosen)) == size, family=B, chosen=[str(g) for g in chosen])


def _all_graphs(letters: Sequence[str]):
    pairs = list(combinations(letters, 2))
    for size in range(len(pairs) + 1):
        for chosen in combinations(pairs, size):
            yield TraceMonoid(letters, chosen)


def mobius_suite(result: SuiteResult, rng, cases: Mapping):
    free = TraceMonoid.free(["x", "y"])
    result.check(str(mobius(free, ZZ)) == "1 - x - y", monoid=free)

    complete = TraceMonoid.free_commutative(["x", "y", "z"])
    mu = mobius(complete, ZZ, 6)
    for trace in complete.traces(6):
        expected = (-1) ** len(trace) if len(set(trace)) == len(trace) else 0
        result.check(mu.coefficient(trace) == expected, monoid=complete, trace=trace)

    length = int(cases.get("mobius_length", 6))
    for M in _all_graphs(("x", "y", "z")):
        result.check(verify_mobius_inverse(M, ZZ, length), monoid=M, length=length)


def character_series_suite(result: SuiteResult, rng, cases: Mapping):
    free = TraceMonoid.free(["x", "y"])
    abelian = TraceMonoid.free_commutative(["x", "y"])
    for _ in range(int(cases.get("character_pairs", 5))):
        alpha, beta = (QQ.from_fraction(_rational(rng)) for _ in range(2))
        chi = {"x": alpha, "y": beta}
        star = kleene_star(Series(free, QQ, {("x",): alpha, ("y",): beta}, 6))
        result.check(character_series(chi, free, QQ, 6) == star, monoid=free, alpha=alpha, beta=beta)
        argument = Series(abelian, QQ, {("x",): alpha, ("y",): beta, ("x", "y"): -(alpha * beta)}, 6)
        series = character_series(chi, abelian, QQ, 6)
        result.check(
            series == kleene_star(argument)
            and series == character_series_via_mobius(chi, abelian, QQ, 6)
            and series == free_abelian_character_star(chi, abelian, QQ, 6),
            monoid=abelian,
            alpha=alpha,
            beta=beta,
        )


def character_products(result: SuiteResult, rng, cases: Mapping):
    for trial in range(int(cases.get("character_triples", 10))):
        q = Fraction(0) if trial == 0 else _rational(rng)
        alpha, beta = _rational(rng), _rational(rng)
        _, matches = infiltration_character_product(alpha, beta, q, 10)
        result.check(matches, alpha=alpha, beta=beta, q=q)

    B = polynomial_primitive(QQ, 10)
    alpha = QQ.from_fraction(_rational(rng))
    g = star_character(B, alpha)
    for n in range(6):
        result.check(conv_power(g, n) == star_character(B, alpha * n), alpha=alpha, n=n)


def filtration_degree_suite(result: SuiteResult, rng, cases: Mapping):
    families = [polynomial_primitive(QQ, 12), InfiltrationQ(QQ, QQ.from_fraction(Fraction(1, 2)), 12)]
    for _ in range(int(cases.get("filtration_pairs", 100))):
        B = families[int(rng.integers(len(families)))]
        f = _random_functional(B, rng, int(rng.integers(0, 6)))
        g = _random_functional(B, rng, int(rng.integers(0, 6)))
        result.check(verify_filtration_product(f, g), family=B, f=filtration_degree(f), g=filtration_degree(g))

    families = [polynomial_primitive(QQ, 8), InfiltrationQ(QQ, QQ.from_int(-2), 8)]
    for _ in range(int(cases.get("leibniz_triples", 100))):
        B = families[int(rng.integers(len(families)))]
        u = _random_polynomial(B, rng, int(rng.integers(1, 4)), low=1)
        f1, f2 = _random_functional(B, rng, 8), _random_functional(B, rng, 8)
        result.check(leibniz_shift_check(u, f1, f2), family=B, u=u)


def character_independence(result: SuiteResult, rng, cases: Mapping):
    B = polynomial_primitive(QQ, 12)
    system = character_independence_system(B, [{"x": 1}, {"x": 2}, {"x": 5}], 3)
    result.check(system.trivial_only, family=B, characters="1,2,5")

    B = InfiltrationQ(QQ, QQ.one(), 12)
    system = character_independence_system(B, [{"x": -1}], 1)
    witness = system.witness()
    expected = witness is not None and set(witness[0].images) == set(B.gen("x").terms)
    result.check(expected and system.witness_vanishes(), family=B, characters="-1")


def appendix(result: SuiteResult, rng, cases: Mapping):
    for _ in range(int(cases.get("binomial_windows", 50))):
        window = [int(v) for v in rng.integers(-50, 51, size=20)]
        result.check(binomial_transform(binomial_transform(window)) == window, window=window)

    for a in range(11):
        for b in range(11):
            for m in range(11):
                result.check(binomial_product_identity(a, b, m), a=a, b=b, m=m)

    for p in range(4):
        for q in range(4):
            left = polynomial_sequence([int(v) for v in rng.integers(1, 6, size=p + 1)], 12)
            right = polynomial_sequence([int(v) for v in rng.integers(1, 6, size=q + 1)], 12)
            product = [u * v for u, v in zip(left, right)]
            result.check(is_m_polynomial(product, p + q).holds, p=p, q=q)

    Z8 = modular(8)
    B = InfiltrationQ(Z8, Z8.from_int(2), 12)
    for _ in range(int(cases.get("bound_pairs", 50))):
        b, c = _random_polynomial(B, rng, 2), _random_polynomial(B, rng, 2)
        first, second = degree_upper_bound(b, 10), degree_upper_bound(c, 10)
        product, total = degree_upper_bound(b * c, 10), degree_upper_bound(b + c, 10)
        holds = None not in (first.bound, second.bound, product.bound, total.bound)
        holds = holds and product.bound <= first.bound + second.bound and total.bound <= max(first.bound, second.bound)
        holds = holds and all(bound.mode == CERTIFIED for bound in (first, second, product, total))
        result.check(holds, b=b, c=c)


def characters_vs_grouplikes(result: SuiteResult, rng, cases: Mapping):
    algebras = [diagonal_algebra(QQ, n) for n in (1, 2, 3)] + [truncated_polynomial_algebra(QQ, 2)]
    for algebra in algebras:
        result.check(characters_match_grouplikes(algebra), algebra=algebra.names)


def negative_control(result: SuiteResult, rng, cases: Mapping):
    instance = load_instance("gx.json")
    B = instance.bialgebra
    g, x = instance.element("g"), instance.element("x")
    result.check((x * g).is_zero() and not x.is_zero(), product=x * g)
    result.check(B.regularity(g).status == ZERO_DIVISOR, regularity=B.regularity(g).to_dict())
    verdict = check_unipotent_independence(B, [g], [x], 6).verdict
    result.check(verdict == ASSUMPTIONS_NOT_MET, verdict=verdict)


SUITES: Dict[str, Callable] = {
    "appendix": appendix,
    "character_independence": character_independence,
    "character_products": character_products,
    "character_series": character_series_suite,
    "characters_vs_grouplikes": characters_vs_grouplikes,
    "degree_bounds": degree_bounds,
    "filtration_degree": filtration_degree_suite,
    "grouplike_rank": grouplike_rank_suite,
    "grouplike_relations": grouplike_relations,
    "infiltration_coproduct": infiltration_coproduct,
    "mobius": mobius_suite,
    "negative_control": negative_control,
    "unipotence_closed_form": unipotence_closed_form,
}


def suite_names(selection: str) -> List[str]:
    """'all', one suite name, or a comma separated list of names."""
    if selection in (None, "all"):
        return sorted(SUITES)
    names = sorted({name.strip() for name in selection.split(",") if name.strip()})
    unknown = [name for name in names if name not in SUITES]
    if unknown or not names:
        raise BadParameter(f"unknown suites {unknown}; expected 'all' or some of {', '.join(sorted(SUITES))}")
    return names


def run_suites(
    selection: str = "all",
    seed: int = DEFAULT_SEED,
    suite_cases: Optional[Mapping] = None,
    progress: bool = False,
) -> List[SuiteResult]:
    """
    Run the selected suites in name order. Every suite draws from its own
    generator seeded with `seed`, so a suite's outcome does not depend on
    which other suites run.
    """
    results = []
    for name in tqdm(suite_names(selection), desc="suites", disable=not progress):
        result = SuiteResult(name)
        SUITES[name](result, np.random.default_rng(seed), suite_cases or {})
        results.append(result)
    return results


def summary_table(results: Sequence[SuiteResult]) -> pd.DataFrame:
    return pd.DataFrame(
        [{"suite": r.name, "cases": r.cases, "failures": len(r.failures), "passed": r.passed} for r in results],
        columns=["suite", "cases", "failures", "passed"],
    )


def print_summary(results: Sequence[SuiteResult], shown: int = 3):
    report(summary_table(results).to_string(index=False))
    failures = {}
    for result in results:
        for i, failure in enumerate(result.failures[:shown]):
            failures[f"{result.name} failure {i + 1}"] = failure
    stylish_stat_print(failures)
