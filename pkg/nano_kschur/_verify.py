"""Property suites: every identity the library relies on, swept over small ranges."""

import asyncio
import time
from dataclasses import replace
from functools import lru_cache, partial
from itertools import permutations, product
from typing import Callable, Optional

from ._catalan import (
    catalan_chl,
    catalan_series,
    catalan_t1,
    evaluate_terms,
    expand_recurrence,
    downpath_expand,
    mirror_predicates,
    mirror_removable_roots,
    restrict_trailing,
    subset_lower,
)
from ._cores import (
    brute_force_covers,
    components,
    cover_spin,
    cover_z,
    edge_sequence,
    enumerate_tableaux,
    k_skew,
    markings,
    offsets,
    southwest_row,
    strong_covers,
    to_bounded,
    to_core,
)
from ._kschur import (
    alternating_cover_sum,
    branch,
    chen_ideal,
    cvr,
    delta_k,
    downpath_straighten,
    hl_expand,
    horizontal_pieri,
    kschur,
    partial_restriction,
    restriction_difference,
    schur_expand,
    skew_linking_check,
    smt_weight_poly,
    straighten,
    straightening_admits,
    subset_lower_kschur,
    vertical_pieri,
    vsmt_weight_poly,
)
from ._rootideal import (
    addable_roots,
    all_root_ideals,
    bounce,
    is_tau_invariant,
    removable_roots,
    sl2_partner,
    uppath,
)
from ._schema import CaseFailureModel, SuiteReportModel
from ._symfunc import (
    dominance_leq,
    e_multiply,
    e_perp,
    h_multiply,
    h_perp,
    h_product,
    hall_pair_e,
    hall_pair_h,
    is_schur_positive,
    omega,
    specialize,
    straightened,
)
from ._utils import limit_async_func_call, logger
from ._vertex import chl, jing_b, jing_word
from .base import (
    Core,
    IndexedRootIdeal,
    KExpansion,
    SymFunc,
    TPoly,
    VerifyParam,
    conjugate,
    contains,
    pad,
    partitions,
    strip,
)

Check = Callable[[], Optional[str]]
Case = tuple[str, Check]


def _expect(actual, expected, what: str) -> Optional[str]:
    if actual == expected:
        return None
    return f"{what}: got {actual}, expected {expected}"


@lru_cache(maxsize=None)
def _ks(mu: tuple[int, ...], k: int) -> SymFunc:
    return kschur(mu, k)


def _ks_of(expansion: KExpansion) -> SymFunc:
    result = SymFunc()
    for mu, coeff in expansion.items():
        result = result + _ks(mu, expansion.k) * coeff
    return result


def bounded_partitions(k: int, size_max: int, ell: int, pad_to_ell: bool = True):
    """Partitions with parts at most ``k``, at most ``ell`` parts and size at most ``size_max``."""
    for n in range(size_max + 1):
        for lam in partitions(n, k, ell):
            yield pad(lam, ell) if pad_to_ell else lam


def _is_horizontal_strip(outer, inner) -> bool:
    outer, inner = strip(outer), strip(inner)
    if not contains(outer, inner):
        return False
    inner = pad(inner, len(outer))
    return all(inner[i] >= outer[i + 1] for i in range(len(outer) - 1))


def _is_vertical_strip(outer, inner) -> bool:
    return _is_horizontal_strip(conjugate(outer), conjugate(inner))


def _jacobi_trudi(gamma) -> SymFunc:
    ell = len(gamma)
    result = SymFunc()
    for sigma in permutations(range(ell)):
        inversions = sum(
            1 for i in range(ell) for j in range(i + 1, ell) if sigma[i] > sigma[j]
        )
        weight = tuple(gamma[i] + sigma[i] - i for i in range(ell))
        term = h_product(weight)
        result = result + (-term if inversions % 2 else term)
    return result


# symfunc --------------------------------------------------------------------------------
def _symfunc_cases(param: VerifyParam) -> list[Case]:
    cases = []
    small = [lam for n in range(param.size_max + 1) for lam in partitions(n)]
    for lam in small:
        s = SymFunc.schur(lam)
        cases.append((f"omega {lam}", partial(lambda s: _expect(omega(omega(s)), s, "omega^2"), s)))
        for d, e in product(range(4), repeat=2):

            def _commute(s=s, d=d, e=e):
                return _expect(
                    e_perp(d, h_perp(e, s)), h_perp(e, e_perp(d, s)), "e/h perp commute"
                ) or _expect(e_perp(d, e_perp(e, s)), e_perp(e, e_perp(d, s)), "e perp commute")

            cases.append((f"commute {lam} d={d} d'={e}", _commute))
        for d in range(1, 4):

            def _adjoint(lam=lam, d=d):
                down_e = e_perp(d, SymFunc.schur(lam))
                down_h = h_perp(d, SymFunc.schur(lam))
                for mu in partitions(sum(lam) - d):
                    want_e = 1 if _is_vertical_strip(lam, mu) else 0
                    want_h = 1 if _is_horizontal_strip(lam, mu) else 0
                    failure = _expect(down_e.coefficient(mu), TPoly((want_e,)), f"e_perp at {mu}")
                    failure = failure or _expect(
                        down_h.coefficient(mu), TPoly((want_h,)), f"h_perp at {mu}"
                    )
                    failure = failure or _expect(
                        e_multiply(d, SymFunc.schur(mu)).coefficient(lam),
                        TPoly((want_e,)),
                        f"e_{d} s_{mu}",
                    )
                    failure = failure or _expect(
                        h_multiply(d, SymFunc.schur(mu)).coefficient(lam),
                        TPoly((want_h,)),
                        f"h_{d} s_{mu}",
                    )
                    if failure:
                        return failure
                return None

            cases.append((f"adjoint {lam} d={d}", _adjoint))

        def _kostka(lam=lam):
            n = sum(lam)
            for nu in partitions(n):
                value = hall_pair_h(SymFunc.schur(lam), nu)
                if value and not dominance_leq(pad(nu, n), pad(lam, n)):
                    return f"K[{lam},{nu}] = {value} without dominance"
            return _expect(hall_pair_h(SymFunc.schur(lam), lam), TPoly((1,)), "diagonal Kostka")

        cases.append((f"kostka {lam}", _kostka))
    for ell in range(1, param.ell_max + 1):
        for gamma in product(range(-2, 5), repeat=ell):
            cases.append(
                (
                    f"jacobi-trudi {gamma}",
                    partial(lambda g: _expect(straightened(g), _jacobi_trudi(g), "straighten"), gamma),
                )
            )
    return cases


# vertexops -------------------------------------------------------------------------------
def _vertex_cases(param: VerifyParam) -> list[Case]:
    cases = []
    basis = [lam for n in range(min(param.size_max, 5) + 1) for lam in partitions(n)]
    for lam in basis:
        f = SymFunc.schur(lam)
        for m, n in product(range(-4, 5), repeat=2):
            if m >= n:
                continue

            def _commutation(f=f, m=m, n=n):
                lhs = jing_word([m, n], f)
                if n == m + 1:
                    return _expect(lhs, jing_word([m + 1, m], f) * TPoly((0, 1)), "B_m B_m+1")
                rhs = (
                    jing_word([m + 1, n - 1], f) * TPoly((0, 1))
                    + jing_word([n, m], f) * TPoly((0, 1))
                    - jing_word([n - 1, m + 1], f)
                )
                return _expect(lhs, rhs, "commutation")

            cases.append((f"commute B {m},{n} on {lam}", _commutation))
        for d, m in product(range(4), range(-3, 4)):

            def _pushdown(f=f, d=d, m=m):
                lhs = e_perp(d, jing_b(m, f))
                rhs = jing_b(m, e_perp(d, f)) + jing_b(m - 1, e_perp(d - 1, f))
                return _expect(lhs, rhs, "e_perp B_m")

            cases.append((f"e_perp B d={d} m={m} on {lam}", _pushdown))
    for n in range(param.size_max + 1):
        for mu in partitions(n):

            def _positive(mu=mu):
                value = chl(mu)
                if not is_schur_positive(value):
                    return f"chl{mu} = {value} is not Schur positive"
                return _expect(specialize(value, 1), h_product(mu), "chl at t=1")

            cases.append((f"chl positive {mu}", _positive))
    for ell in range(0, param.ell_max + 1):
        for head in product(range(-2, 4), repeat=ell):
            for last in (-1, -2):
                gamma = head + (last,)
                cases.append(
                    (
                        f"chl vanishes {gamma}",
                        partial(lambda g: _expect(chl(g), SymFunc(), "chl"), gamma),
                    )
                )
    return cases


# rootcat ---------------------------------------------------------------------------------
def _evaluator_cases(param: VerifyParam) -> list[Case]:
    cases = []
    for ell in range(1, param.ell_max + 1):
        for psi in all_root_ideals(ell):
            for gamma in product(range(-1, 4), repeat=ell):
                iri = IndexedRootIdeal(psi, gamma)

                def _agree(iri=iri):
                    reference = catalan_chl(iri)
                    return _expect(catalan_series(iri), reference, "catalan_series") or _expect(
                        catalan_t1(iri), specialize(reference, 1), "catalan_t1"
                    )

                cases.append((f"evaluators {psi.rowcounts} {gamma}", _agree))
    return cases


def _rootcat_cases(param: VerifyParam) -> list[Case]:
    cases = []
    for ell in range(1, param.ell_max + 1):
        for psi in all_root_ideals(ell):
            for gamma in product(range(0, 3), repeat=ell):
                iri = IndexedRootIdeal(psi, gamma)

                def _identities(iri=iri):
                    psi, gamma, ell = iri.psi, iri.gamma, iri.ell
                    value = catalan_chl(iri)
                    for i in range(1, ell):
                        if is_tau_invariant(psi, i):
                            partner = catalan_chl(IndexedRootIdeal(psi, sl2_partner(gamma, i)))
                            if value + partner:
                                return f"sl2 cancellation fails at i={i}"
                    for d in range(ell + 1):
                        failure = _expect(
                            subset_lower(d, range(1, ell + 1), iri), e_perp(d, value), f"e_{d} pushdown"
                        )
                        if failure:
                            return failure
                    if ell > 1 and gamma[-1] == 0:
                        failure = _expect(catalan_chl(restrict_trailing(iri)), value, "trailing zero")
                        if failure:
                            return failure
                    for root in sorted(addable_roots(psi)):
                        failure = _expect(
                            evaluate_terms(expand_recurrence(iri, root, "addable")), value, f"addable {root}"
                        )
                        if failure:
                            return failure
                    for root in sorted(removable_roots(psi)):
                        failure = _expect(
                            evaluate_terms(expand_recurrence(iri, root, "removable")),
                            value,
                            f"removable {root}",
                        )
                        if failure:
                            return failure
                    for m in range(1, ell + 1):
                        failure = _expect(evaluate_terms(downpath_expand(iri, m)), value, f"downpath {m}")
                        if failure:
                            return failure
                    return None

                cases.append((f"identities {psi.rowcounts} {gamma}", _identities))
    return cases


def _mirror_cases(param: VerifyParam) -> list[Case]:
    cases = []
    for ell in range(2, param.ell_max + 1):
        for psi in all_root_ideals(ell):
            triples = [
                (y, z, w)
                for y in range(1, ell)
                for w in range(y, ell)
                for z in range(y, w + 1)
            ]
            for gamma in product(range(0, 4), repeat=ell):
                iri = IndexedRootIdeal(psi, gamma)

                def _mirrors(iri=iri, triples=triples):
                    ell = iri.ell
                    for y, z, w in triples:
                        for rows in [None] + [range(1, m + 1) for m in range(1, ell + 1)]:
                            verdict = mirror_predicates(iri, y, z, w, rows)
                            if verdict == "NotApplicable":
                                continue
                            where = f"y={y} z={z} w={w} rows={rows and list(rows)}"
                            for d in range(len(rows) + 1 if rows is not None else 1):

                                def lowered(target, d=d, rows=rows):
                                    if rows is None:
                                        return catalan_chl(target)
                                    return subset_lower(d, rows, target)

                                value = lowered(iri)
                                if verdict == "MirrorI_zero" and value:
                                    return f"Mirror I nonzero at {where}"
                                if verdict == "MirrorII_removable_equal":
                                    for root in mirror_removable_roots(iri.psi, y, w):
                                        smaller = IndexedRootIdeal(iri.psi.without_root(root), iri.gamma)
                                        if lowered(smaller) != value:
                                            return f"Mirror II drops {root} unequal at {where}"
                    return None

                cases.append((f"mirror {psi.rowcounts} {gamma}", _mirrors))
    return cases


# cores -------------------------------------------------------------------------------------
def _core_cases(param: VerifyParam) -> list[Case]:
    cases = []
    for k in range(1, param.k_max + 1):
        for lam in bounded_partitions(k, param.size_max, param.size_max, pad_to_ell=False):

            def _bijection(lam=lam, k=k):
                kappa = to_core(lam, k)
                failure = _expect(to_bounded(kappa), lam, "to_bounded(to_core)")
                failure = failure or _expect(to_core(to_bounded(kappa), k), kappa, "to_core(to_bounded)")
                if failure:
                    return failure
                view = offsets(kappa)
                n = kappa.n
                for i in range(view.lo + n, view.hi + 1):
                    if view[i - n] != view[i] + 1:
                        return f"offset shift fails at {i}"
                bits = edge_sequence(kappa, view.lo, view.hi)
                if tuple(view.edge(i) for i in range(view.lo, view.hi + 1)) != bits:
                    return "edge sequence disagrees with offsets"
                size = sum(lam)
                for tau in strong_covers(kappa):
                    comps = components(tau, kappa)
                    if len({c.height for c in comps}) != 1:
                        return f"cover {tau.shape} has ribbons of unequal height"
                    if sum(to_bounded(tau)) + 1 != size:
                        return f"cover {tau.shape} does not lower the size by one"
                    if set(markings(tau, kappa)) != {c.head for c in comps}:
                        return f"markings of {tau.shape} are not the heads"
                return None

            cases.append((f"core k={k} {lam}", _bijection))
    return cases


def _dictionary_cases(param: VerifyParam) -> list[Case]:
    cases = []
    for k in range(3, param.k_max + 1):
        for lam in bounded_partitions(k, param.size_max, param.size_max, pad_to_ell=False):
            if not lam:
                continue

            def _dictionary(lam=lam, k=k):
                kappa = to_core(lam, k)
                brute = brute_force_covers(kappa)
                failure = _expect(set(strong_covers(kappa)), set(brute), "strong covers")
                if failure:
                    return failure
                phi = delta_k(lam, k)
                for z in range(1, len(lam) + 1):
                    expected = [tau for tau in brute if southwest_row(tau, kappa) == z]
                    tau = cover_z(kappa, z)
                    if len(expected) > 1 or tau != (expected[0] if expected else None):
                        return f"cover_{z} disagrees with brute force"
                    straight = cvr(lam, z, k)
                    if (tau is not None) != straight.is_partition:
                        return f"cover_{z} exists={tau is not None} but cvr partition={straight.is_partition}"
                    if tau is None:
                        continue
                    if to_bounded(tau) != strip(straight.weight):
                        return f"cover_{z} bounded {to_bounded(tau)} != cvr {straight.weight}"
                    marks = set(markings(tau, kappa))
                    if marks != set(uppath(phi, z)):
                        return f"markings {marks} != uppath {uppath(phi, z)}"
                    for m in marks:
                        want = straight.bounce + bounce(phi, m, z)
                        if cover_spin(tau, kappa, m) != want:
                            return f"spin of mark {m} on cover_{z} is not {want}"
                return None

            cases.append((f"dictionary k={k} {lam}", _dictionary))
    return cases


# kschur ------------------------------------------------------------------------------------
def _sweep(param: VerifyParam):
    for k in range(1, param.k_max + 1):
        for ell in range(1, param.ell_max + 1):
            for mu in bounded_partitions(k, param.size_max, ell):
                yield k, mu


def _kschur_cases(param: VerifyParam) -> list[Case]:
    cases = []
    for k, mu in _sweep(param):

        def _properties(mu=mu, k=k):
            value = _ks(mu, k)
            for d in range(4):
                failure = _expect(_ks_of(horizontal_pieri(mu, k, d)), h_perp(d, value), f"h_{d} pieri")
                failure = failure or _expect(
                    _ks_of(vertical_pieri(mu, k, d)), e_perp(d, value), f"e_{d} pieri"
                )
                if failure:
                    return failure
            ell = len(mu)
            shifted = tuple(m + 1 for m in mu)
            failure = _expect(e_perp(ell, kschur(shifted, k + 1)), value, "shift invariance")
            if failure:
                return failure
            if k >= sum(mu):
                return _expect(value, SymFunc.schur(strip(mu)), "stability")
            return None

        cases.append((f"kschur k={k} {mu}", _properties))
    return cases


def _straightening_cases(param: VerifyParam) -> list[Case]:
    cases = []
    for k in range(1, param.k_max + 1):
        for ell in range(1, param.ell_max + 1):
            for lam in bounded_partitions(k, param.size_max, ell):
                for z in range(1, ell + 1):

                    def _straighten(lam=lam, z=z, k=k):
                        mu = tuple(lam[i] - (1 if i == z - 1 else 0) for i in range(len(lam)))
                        direct = catalan_chl(IndexedRootIdeal(delta_k(mu, k), mu))
                        result = straighten(lam, z, k)
                        failure = _expect(_ks_of(result), direct, "straightening")
                        if failure:
                            return failure
                        for m in uppath(delta_k(mu, k), z):
                            if not straightening_admits(lam, z, k, range(1, m)):
                                return f"[1,{m - 1}] is not admitted"
                        straight = cvr(lam, z, k)
                        for m in range(len(lam) + 1):
                            rows = range(1, m + 1)
                            if not straightening_admits(lam, z, k, rows):
                                continue
                            for d in range(1, min(m, 2) + 1):
                                lhs = subset_lower(d, rows, IndexedRootIdeal(delta_k(mu, k), mu))
                                if straight.is_partition:
                                    nu = straight.weight
                                    rhs = subset_lower(d, rows, IndexedRootIdeal(delta_k(nu, k), nu))
                                    rhs = rhs * TPoly.monomial(1, straight.bounce)
                                else:
                                    rhs = SymFunc()
                                failure = _expect(lhs, rhs, f"lowering over [1,{m}] d={d}")
                                if failure:
                                    return failure
                        return None

                    cases.append((f"straighten k={k} {lam} z={z}", _straighten))
    return cases


def _smt_cases(param: VerifyParam) -> list[Case]:
    cases = []
    for k, mu in _sweep(param):

        def _weights(mu=mu, k=k):
            value = _ks(mu, k)
            for lam in partitions(sum(mu)):
                failure = _expect(smt_weight_poly(mu, k, lam), hall_pair_h(value, lam), f"SMT weight {lam}")
                failure = failure or _expect(
                    smt_weight_poly(mu, k, tuple(reversed(lam))),
                    hall_pair_h(value, lam),
                    f"reordered SMT weight {lam}",
                )
                failure = failure or _expect(
                    vsmt_weight_poly(mu, k, lam), hall_pair_e(value, lam), f"VSMT weight {lam}"
                )
                if failure:
                    return failure
            return None

        cases.append((f"smt k={k} {mu}", _weights))
    return cases


def _restriction_cases(param: VerifyParam) -> list[Case]:
    cases = []
    for k, mu in _sweep(param):

        def _restriction(mu=mu, k=k):
            ell = len(mu)
            for d in range(4):
                previous = subset_lower_kschur(mu, k, d, 0)
                for m in range(1, ell + 1):
                    current = subset_lower_kschur(mu, k, d, m)
                    failure = _expect(_ks_of(partial_restriction(mu, k, d, m)), current, f"B_{d},{m}")
                    failure = failure or _expect(
                        _ks_of(restriction_difference(mu, k, d, m)), current - previous, f"L_{d},{m}"
                    )
                    if failure:
                        return failure
                    previous = current
            for m in range(1, ell + 1):
                failure = _expect(
                    downpath_straighten(mu, k, m), restriction_difference(mu, k, 1, m), f"downpath {m}"
                )
                if failure:
                    return failure
            return _expect(
                partial_restriction(mu, k, 2, ell), vertical_pieri(mu, k, 2), "unrestricted"
            )

        cases.append((f"restriction k={k} {mu}", _restriction))
    return cases


def _branching_cases(param: VerifyParam) -> list[Case]:
    cases = []
    for k, mu in _sweep(param):

        def _branch(mu=mu, k=k):
            value = _ks(mu, k)
            expansion = branch(mu, k)
            if not all(c.is_nonnegative() for _, c in expansion.items()):
                return f"negative branching coefficient in {expansion}"
            failure = _expect(_ks_of(expansion), value, "branching")
            failure = failure or _expect(schur_expand(mu, k), value, "tableau Schur expansion")
            return failure or _expect(
                schur_expand(mu, k, method="branching"), value, "branching Schur expansion"
            )

        cases.append((f"branch k={k} {mu}", _branch))
    return cases


def _operator_cases(param: VerifyParam) -> list[Case]:
    cases = []
    for k, mu in _sweep(param):
        for m in range(1, 4):

            def _alternating(mu=mu, k=k, m=m):
                total = alternating_cover_sum(m, KExpansion(k, {mu: 1}), len(mu))
                return _expect(total, KExpansion(k), f"alternating sum m={m}")

            cases.append((f"operators k={k} {mu} m={m}", _alternating))
    return cases


def _chen_cases(param: VerifyParam) -> list[Case]:
    cases = []
    k = param.k_max
    for lam in bounded_partitions(k, param.size_max, param.ell_max, pad_to_ell=False):
        if not lam:
            continue

        def _chen(lam=lam):
            skew = k_skew(lam, k)
            if not skew_linking_check(skew):
                return f"k-skew diagram of {lam} is not skew-linking"
            value = catalan_chl(IndexedRootIdeal(chen_ideal(skew), lam))
            return _expect(value, _ks(lam, k), "Chen ideal")

        cases.append((f"chen k={k} {lam}", _chen))
    return cases


def _basis_cases(param: VerifyParam) -> list[Case]:
    cases = []
    for k in range(2, param.k_max + 1):
        for mu in bounded_partitions(k, param.size_max, param.ell_max):

            def _triangular(mu=mu, k=k):
                coeffs = hl_expand(_ks(mu, k), k, param.ell_max)
                key = strip(mu)
                if coeffs.get(key) != TPoly((1,)):
                    return f"diagonal coefficient {coeffs.get(key)}"
                n = sum(mu)
                for lam in coeffs:
                    if not dominance_leq(pad(key, n), pad(lam, n)):
                        return f"{lam} does not dominate {key}"
                return _expect(
                    hl_expand(chl(key), k, param.ell_max), {key: TPoly((1,))}, "chl basis"
                )

            cases.append((f"basis k={k} {mu}", _triangular))
    return cases


# Worked examples ---------------------------------------------------------------------------
def _t(exponent: int) -> TPoly:
    return TPoly.monomial(1, exponent)


def _example_cases(param: VerifyParam) -> list[Case]:
    def _schur_3321():
        expected = SymFunc(
            {
                (5, 4): _t(3),
                (4, 4, 1): _t(2),
                (5, 3, 1): _t(2),
                (4, 3, 2): _t(1),
                (4, 3, 1, 1): _t(1),
                (3, 3, 2, 1): 1,
            }
        )
        return _expect(schur_expand((3, 3, 2, 1), 4), expected, "tableaux") or _expect(
            _ks((3, 3, 2, 1), 4), expected, "catalan"
        )

    def _branch_22221():
        expected = KExpansion(
            4,
            {(3, 2, 2, 2): _t(2), (3, 3, 2, 1): _t(3), (3, 3, 1, 1, 1): _t(2), (2, 2, 2, 2, 1): 1},
        )
        return _expect(branch((2, 2, 2, 2, 1), 3), expected, "branch")

    def _partial_restriction():
        mu = (2, 2, 2, 2, 2, 2)
        expected = KExpansion(
            3,
            {
                (2, 2, 2, 2, 1, 1): _t(2) + _t(3) + _t(4),
                (3, 2, 2, 1, 1, 1): _t(4),
                (2, 2, 2, 2, 2): _t(3),
            },
        )
        enumerated = partial_restriction(mu, 3, 2, 4)
        return _expect(enumerated, expected, "restricted tableaux") or _expect(
            subset_lower_kschur(mu, 3, 2, 4), _ks_of(expected), "subset lowering"
        )

    def _straightening():
        examples = [
            ((3, 3, 3, 2, 1), 2, KExpansion(4, {(4, 2, 2, 2, 1): _t(1)})),
            ((2,) * 8 + (1,), 6, KExpansion(4, {(3, 3, 2, 2, 2, 1, 1, 1, 1): _t(4)})),
            ((2,) * 9, 6, KExpansion(4)),
            ((4, 3, 2, 2, 2, 2, 2, 2, 2), 6, KExpansion(4)),
        ]
        for lam, z, expected in examples:
            result = straighten(lam, z, 4)
            failure = _expect(result, expected, f"straighten {lam} at {z}")
            if failure:
                return failure
            mu = tuple(lam[i] - (1 if i == z - 1 else 0) for i in range(len(lam)))
            direct = catalan_chl(IndexedRootIdeal(delta_k(mu, 4), mu))
            failure = _expect(_ks_of(result), direct, f"direct evaluation of {mu}")
            if failure:
                return failure
        return None

    def _cores():
        failure = _expect(to_bounded(Core((5, 3, 2, 2, 1), 5)), (3, 2, 2, 2, 1), "to_bounded")
        failure = failure or _expect(to_core((3, 2, 2, 2, 1), 4), Core((5, 3, 2, 2, 1), 5), "to_core")
        if failure:
            return failure
        kappa = Core((6, 6, 5, 4, 4, 3, 2, 2, 1), 5)
        tau = cover_z(kappa, 6)
        failure = _expect(tau, Core((6, 6, 3, 3, 3, 1, 1, 1, 1), 5), "cover_6")
        if failure:
            return failure
        return _expect(
            sorted((m, cover_spin(tau, kappa, m)) for m in markings(tau, kappa)),
            [(3, 5), (6, 4)],
            "marks and spins",
        )

    def _hall_littlewood_1111():
        tableaux = enumerate_tableaux((4,) * 4, 4, (4,) * 3, vertical=True)
        spins = sorted(T.spin for T in tableaux)
        return _expect(spins, [0, 1, 2, 2, 3, 3, 4, 4, 5, 6], "spins") or _expect(
            schur_expand((1, 1, 1, 1), 1), chl((1, 1, 1, 1)), "Schur expansion"
        )

    return [
        ("schur expansion of 3321", _schur_3321),
        ("branching of 22221", _branch_22221),
        ("partial restriction of 222222", _partial_restriction),
        ("straightening examples", _straightening),
        ("cores and spin", _cores),
        ("modified Hall-Littlewood 1111", _hall_littlewood_1111),
    ]


# Default sweep of each suite; a missing size_max means all of Par^k_ell.
SUITE_RANGES: dict[str, dict[str, int]] = {
    "examples": {},
    "symfunc": {"size_max": 5, "ell_max": 3},
    "vertex": {"size_max": 6, "ell_max": 3},
    "evaluators": {"ell_max": 4},
    "rootcat": {"ell_max": 4},
    "mirror": {"ell_max": 5},
    "cores": {"k_max": 4, "size_max": 8},
    "dictionary": {"k_max": 4, "size_max": 6},
    "kschur": {"k_max": 3, "size_max": 7, "ell_max": 3},
    "straightening": {"k_max": 4, "size_max": 8, "ell_max": 5},
    "smt": {"k_max": 3, "size_max": 7, "ell_max": 3},
    "restriction": {"k_max": 3, "size_max": 6, "ell_max": 3},
    "branching": {"k_max": 3, "size_max": 7, "ell_max": 7},
    "operators": {"k_max": 3, "size_max": 6, "ell_max": 3},
    "chen": {"k_max": 4, "ell_max": 5},
    "basis": {"k_max": 3, "ell_max": 3},
}
_FALLBACK_RANGES = {"k_max": 3, "ell_max": 4}


def sweep_ranges(name: str, param: VerifyParam) -> VerifyParam:
    """``param`` with every range it leaves open filled in from the suite's defaults."""
    defaults = {**_FALLBACK_RANGES, **SUITE_RANGES.get(name, {})}
    k_max = param.k_max if param.k_max is not None else defaults["k_max"]
    ell_max = param.ell_max if param.ell_max is not None else defaults["ell_max"]
    size_max = param.size_max
    if size_max is None:
        size_max = defaults.get("size_max", k_max * ell_max)
    return replace(param, k_max=k_max, size_max=size_max, ell_max=ell_max)


SUITES: dict[str, Callable[[VerifyParam], list[Case]]] = {
    "examples": _example_cases,
    "symfunc": _symfunc_cases,
    "vertex": _vertex_cases,
    "evaluators": _evaluator_cases,
    "rootcat": _rootcat_cases,
    "mirror": _mirror_cases,
    "cores": _core_cases,
    "dictionary": _dictionary_cases,
    "kschur": _kschur_cases,
    "straightening": _straightening_cases,
    "smt": _smt_cases,
    "restriction": _restriction_cases,
    "branching": _branching_cases,
    "operators": _operator_cases,
    "chen": _chen_cases,
    "basis": _basis_cases,
}


def suite_names(suite: str) -> list[str]:
    if suite == "all":
        return list(SUITES)
    if suite not in SUITES:
        raise ValueError(f"Unknown suite {suite}, choose from all, {', '.join(SUITES)}")
    return [suite]


def _run_case(check: Check) -> Optional[str]:
    try:
        return check()
    except Exception as e:
        return f"{type(e).__name__}: {e}"


async def run_suite(name: str, param: VerifyParam, max_async: int = 4) -> SuiteReportModel:
    param = sweep_ranges(name, param)
    cases = SUITES[name](param)
    logger.info(f"Suite {name}: {len(cases)} cases")
    loop = asyncio.get_running_loop()
    start = time.perf_counter()

    @limit_async_func_call(max_async)
    async def _evaluate(check: Check) -> Optional[str]:
        return await loop.run_in_executor(None, _run_case, check)

    if param.stop_on_failure:
        results = []
        for _, check in cases:
            results.append(await _evaluate(check))
            if results[-1] is not None:
                break
    else:
        results = await asyncio.gather(*[_evaluate(check) for _, check in cases])
    failures = [
        CaseFailureModel(case=label, detail=detail)
        for (label, _), detail in zip(cases, results)
        if detail is not None
    ]
    report = SuiteReportModel(
        suite=name,
        cases=len(results),
        passed=len(results) - len(failures),
        failures=failures,
        params={
            "k_max": param.k_max,
            "size_max": param.size_max,
            "ell_max": param.ell_max,
        },
        seconds=round(time.perf_counter() - start, 3),
    )
    if failures:
        logger.warning(f"Suite {name}: {len(failures)} of {report.cases} cases failed")
    else:
        logger.info(f"Suite {name}: all {report.cases} cases passed in {report.seconds}s")
    return report
