"""Named verification suites: every characterization against the oracle.

Each suite returns a list of check dicts {name, passed, detail, seconds};
the CLI prints one line per check and exits nonzero if any fails.  `quick`
shrinks the bounds for fast CI runs; full bounds match the acceptance
criteria.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction
from itertools import permutations

from . import dyck, tamari, weak, young
from .conjectures import (
    YoungFibonacci,
    calibrate_ss_convention,
    ss_conjecture_check,
    yf_conjecture_check,
)
from .engine import SkewGame, TamariGame, WeakGame, verify_engine_never_loses
from .errors import OutOfTheoremScope
from .formula import (
    check_equivalence,
    compile_formula,
    compiled_size,
    enumerate_formulas,
    evaluate,
    ground_key,
    parse,
    variables,
    Const,
    Var,
)
from .lattice import WinLabel, product, random_lattice_pool
from .posets import (
    IdealGameSolver,
    check_deep_poset,
    count_eeta_ideals,
    explicit_ideal_lattice,
    from_covers,
    skew_shape,
    type_a_root_poset,
)
from .series import asymptotic_gamma, bisect_root, poly_eval_series


def _check(name, fn):
    t0 = time.time()
    try:
        detail = fn()
        passed = True
    except AssertionError as exc:
        detail = str(exc) or "assertion failed"
        passed = False
    return {
        "name": name,
        "passed": passed,
        "detail": detail,
        "seconds": round(time.time() - t0, 2),
    }


def suite_young(quick=False):
    checks = []
    size_cap = 8 if quick else 12
    pair_count = 40 if quick else 200

    def full_agreement():
        tested = 0
        for lam in young.partitions_up_to(size_cap):
            pred = young.eeta_predicate_interval((), lam)
            oracle = (
                WinLabel.EETA
                if lam == ()
                else IdealGameSolver(skew_shape(lam)).label(skew_shape(lam).full)
            )
            assert pred is oracle, f"mismatch at {lam}: {pred} vs {oracle}"
            tested += 1
        return f"{tested} partitions agree"

    checks.append(_check(f"young: predicate = oracle for all |lam| <= {size_cap}", full_agreement))

    def random_pairs():
        rng = random.Random(20240)
        agree = 0
        for _ in range(pair_count):
            mu, lam = young.random_inscope_pair(rng, max_size=16)
            pred = young.eeta_predicate_interval(mu, lam)
            poset = skew_shape(lam, mu)
            oracle = IdealGameSolver(poset).label(poset.full)
            assert pred is oracle, f"mismatch at mu={mu} lam={lam}"
            agree += 1
        return f"{agree} random in-scope pairs agree"

    checks.append(_check(f"young: {pair_count} random (mu, lam) pairs", random_pairs))

    def transpose_symmetry():
        for lam in young.partitions_up_to(8 if quick else 10):
            if lam == ():
                continue
            a = young.eeta_predicate_interval((), lam)
            b = young.eeta_predicate_interval((), young.transpose(lam))
            assert a is b, lam
        return "labels invariant under transposition"

    checks.append(_check("young: transpose symmetry", transpose_symmetry))
    return checks


def suite_rectangle(quick=False):
    checks = []
    gf_cap = 6 if quick else 8
    oracle_cap = 3 if quick else 4

    def gf_match():
        assert young.rectangle_gf_check(gf_cap, gf_cap), "GF coefficient mismatch"
        return f"all (a, b) <= ({gf_cap}, {gf_cap}) match the expansion"

    checks.append(_check(f"rectangle: GF = direct counts up to {gf_cap}", gf_match))

    def oracle_match():
        from .posets import rectangle as rect_poset

        for a in range(oracle_cap + 1):
            for b in range(oracle_cap + 1):
                direct = young.count_eeta_rectangle(a, b)
                brute = count_eeta_ideals(rect_poset(a, b))
                assert direct == brute, (a, b, direct, brute)
        return f"counts = brute force for a, b <= {oracle_cap}"

    checks.append(_check(f"rectangle: counts = oracle for a, b <= {oracle_cap}", oracle_match))
    return checks


def suite_typea(quick=False):
    checks = []
    order = 60 if quick else 400
    brute_cap = 4 if quick else 5

    def three_way():
        for n in range(1, brute_cap + 1):
            brute = count_eeta_ideals(type_a_root_poset(n))
            direct = dyck.count_avoiding(n + 1, "weird", "weird")
            series_count = dyck.type_a_eeta_count(n)
            assert brute == direct == series_count, (n, brute, direct, series_count)
        return f"oracle = path count = series for n <= {brute_cap}"

    checks.append(_check("typea: three-way count agreement", three_way))

    def growth():
        w = dyck.type_a_series(order)
        coeffs = w.assert_integral()
        n = order
        ratio = coeffs[n] / coeffs[n - 1]
        estimate = ratio / (1 - 1.5 / n)
        target = 3.13040
        rel = abs(estimate - target) / target
        assert rel < 0.01, f"growth estimate {estimate} vs {target}"
        gamma, _ = asymptotic_gamma(coeffs, 1 / float(
            bisect_root([1, -4, 4, -4], Fraction(1, 4), Fraction(2, 5), Fraction(1, 10**9))
        ), exponent_shift=1)
        grel = abs(gamma - 0.79594) / 0.79594
        assert grel < 0.05, f"gamma estimate {gamma}"
        return f"order {order}: growth {estimate:.5f} (target 3.13040), gamma {gamma:.5f} (target 0.79594)"

    checks.append(_check(f"typea: series to order {order}, growth and gamma", growth))

    def radical():
        rep = dyck.radical_report(40 if quick else 60)
        return (
            f"radical residual first nonzero: {rep['residual_first_nonzero']}; "
            f"reciprocal root {rep['reciprocal_of_root']:.5f}"
        )

    checks.append(_check("typea: radical diagnostic (informational)", radical))
    return checks


def suite_tamari(quick=False):
    checks = []
    brute_cap = 6 if quick else 8
    count_cap = 9 if quick else 12
    order = 60 if quick else 400

    def predicate_vs_brute():
        brute_memo = {}
        pred_memo = {}
        states = 0
        for n in range(1, brute_cap + 1):
            for w in tamari.all_312_avoiders(n):
                brute = tamari.solve_tam_brute(w, brute_memo) is WinLabel.EETA
                assert brute == tamari.is_eeta_tam(w, pred_memo), w
                states += 1
        return f"{states} states agree through n = {brute_cap}"

    checks.append(_check(f"tamari: predicate = brute force for n <= {brute_cap}", predicate_vs_brute))

    def counts_vs_series():
        _, f = tamari.g_f_series(count_cap)
        for n in range(1, count_cap + 1):
            assert tamari.count_eeta_tam(n) == int(f[n]), n
        return f"counts match series coefficients for n <= {count_cap}"

    checks.append(_check(f"tamari: counts = series for n <= {count_cap}", counts_vs_series))

    def quartic():
        _, f = tamari.g_f_series(60)
        q = poly_eval_series(tamari.tamari_quartic_coeffs(60), f)
        assert q.is_zero(), f"first nonzero {q.first_nonzero()}"
        return "quartic witness vanishes through order 60"

    checks.append(_check("tamari: quartic identity", quartic))

    def asymptotics():
        rho = bisect_root(
            [-4, -8, 60, -148, -20, -155, -32, 32], 2, 4, Fraction(1, 10**7)
        )
        assert abs(float(rho) - 2.90511) < 1e-4, float(rho)
        _, f = tamari.g_f_series(order)
        gamma, _ = asymptotic_gamma(f.assert_integral(), float(rho))
        grel = abs(gamma - 1.04240) / 1.04240
        assert grel < 0.05, gamma
        return f"rho {float(rho):.6f} (target 2.90511), gamma {gamma:.5f} (target 1.04240)"

    checks.append(_check("tamari: growth constants", asymptotics))
    return checks


def suite_weak(quick=False):
    checks = []
    table_cap = 7 if quick else 9

    def counts():
        got = [weak.count_eeta_sn(n) for n in range(1, table_cap + 1)]
        golden = [1, 1, 3, 7, 29, 115, 610, 3485, 22593][: table_cap]
        assert got == golden, got
        return f"|E| = {got}"

    checks.append(_check(f"weak: Eeta counts for n <= {table_cap}", counts))

    def lemma():
        for n in range(1, table_cap + 1):
            assert weak.b_lemma_check(n), n
        return f"no Eeta win contains a throwaway pattern, n <= {table_cap}"

    checks.append(_check(f"weak: pattern lemma for n <= {table_cap}", lemma))

    def counterexample():
        w = (3, 10, 9, 8, 4, 7, 2, 5, 1, 6)
        assert len(weak.descents(w)) == 5
        if quick:
            label = weak.solve_weak_interval(w)
        else:
            label = weak.solve_sn(10).label(w)
        assert label is WinLabel.EETA, label
        return "the 10-letter witness is an Eeta win with 5 descents"

    checks.append(_check("weak: many-descent Eeta witness at n = 10", counterexample))
    return checks


def suite_lemmas(quick=False):
    checks = []
    pool_size = 150 if quick else 500
    deep_count = 60 if quick else 200

    def to_eeta():
        pool, rejected = random_lattice_pool(1234, pool_size, max_mid=10)
        for lat in pool:
            eeta = lat.eeta_set()
            for x in range(lat.n):
                assert lat.ungar_moves(x) & eeta, (lat.covers, x)
        return f"{pool_size} lattices fuzzed ({rejected} rejected in sampling)"

    checks.append(_check(f"lemmas: every move set meets the Eeta set ({pool_size} lattices)", to_eeta))

    def product_law():
        pool, _ = random_lattice_pool(99, 24, max_mid=6)
        pairs = 0
        for i in range(0, 20, 2):
            l1, l2 = pool[i], pool[i + 1]
            p = product(l1, l2)
            e1, e2 = l1.eeta_set(), l2.eeta_set()
            expected = {a * l2.n + b for a in e1 for b in e2}
            assert p.eeta_set() == expected
            pairs += 1
        # triple products
        for i in range(0, 12, 3):
            l1, l2, l3 = pool[i], pool[i + 1], pool[i + 2]
            p12 = product(l1, l2)
            p = product(p12, l3)
            expected = {
                (a * l2.n + b) * l3.n + c
                for a in l1.eeta_set()
                for b in l2.eeta_set()
                for c in l3.eeta_set()
            }
            assert p.eeta_set() == expected
            pairs += 1
        return f"{pairs} products verified (m = 2 and 3)"

    checks.append(_check("lemmas: product law", product_law))

    def deep_poset():
        rng = random.Random(777)
        done = 0
        attempts = 0
        while done < deep_count and attempts < deep_count * 600:
            attempts += 1
            poset = _random_poset(rng)
            instance = _random_deep_instance(rng, poset)
            if instance is None:
                continue
            delta, lam, mu = instance
            assert check_deep_poset(poset, delta, lam, mu), (
                poset.covers,
                delta,
                lam,
                mu,
            )
            done += 1
        assert done == deep_count, f"only {done} admissible instances sampled"
        return f"{done} admissible instances hold"

    checks.append(_check(f"lemmas: depth invariance on {deep_count} instances", deep_poset))
    return checks


def _random_poset(rng):
    n = rng.randint(3, 9)
    covers = []
    for b in range(1, n):
        for a in range(b):
            if rng.random() < 0.25:
                covers.append((a, b))
    # transitive reduction of the random relation
    down = [1 << i for i in range(n)]
    for a, b in sorted(covers, key=lambda e: e[1]):
        down[b] |= down[a]
    reduced = []
    for a, b in covers:
        if not any(
            (down[z] & (1 << a)) and z != a and z != b and (down[b] & (1 << z))
            for z in range(n)
        ):
            reduced.append((a, b))
    return from_covers(n, reduced)


def _random_deep_instance(rng, poset):
    """Sample (delta, lam, mu) satisfying the depth hypotheses, or None."""
    ideals = poset.all_ideals()
    delta = ideals[rng.randrange(len(ideals))]
    if delta == 0:
        return None
    max_delta = 0
    for x in poset.max_elements(delta):
        max_delta |= 1 << x
    for x in range(poset.n):
        bit = 1 << x
        if delta & bit and not max_delta & bit:
            above = poset.up[x] & max_delta & ~bit
            if bin(above).count("1") < 2:
                return None
    inner = delta & ~max_delta
    # random sub-ideal of the inner region
    mu_candidates = [m for m in ideals if m & ~inner == 0]
    mu = mu_candidates[rng.randrange(len(mu_candidates))]
    lam_candidates = [m for m in ideals if m & delta == delta]
    lam = lam_candidates[rng.randrange(len(lam_candidates))]
    return delta, lam, mu


def suite_formula(quick=False):
    checks = []
    connectives = 2 if quick else 3

    def exhaustive():
        import itertools as it

        leaves = [Var("x"), Var("y"), Var("z"), Const(0), Const(1)]
        cache = {}
        pairs = 0
        for fm in enumerate_formulas(connectives, leaves):
            vs = sorted(variables(fm))
            for bits in it.product((0, 1), repeat=len(vs)):
                assign = dict(zip(vs, bits))
                key = ground_key(fm, assign)
                if key not in cache:
                    lat = compile_formula(fm, assign)
                    assert lat.n == compiled_size(fm, assign)
                    cache[key] = lat.label_of_top() is WinLabel.EETA
                assert cache[key] == (evaluate(fm, assign) == 1), (fm, assign)
                pairs += 1
        return f"{pairs} (formula, assignment) pairs via {len(cache)} compiled lattices"

    checks.append(
        _check(f"formula: exhaustive equivalence, <= {connectives} connectives", exhaustive)
    )

    def figure_formula():
        import itertools as it

        f = parse("(x1|(x2|~x3))&(x4|x5)")
        names = sorted(variables(f))
        for bits in it.product((0, 1), repeat=5):
            assert check_equivalence(f, dict(zip(names, bits)))
        return "all 32 assignments agree"

    checks.append(_check("formula: five-variable example over 32 assignments", figure_formula))

    def sizes():
        lat = compile_formula(parse("(0|0)"), {})
        assert lat.n == 11 and lat.label_of_top() is WinLabel.ATNISS
        lat = compile_formula(parse("~1"), {})
        assert lat.n == 2 and lat.label_of_top() is WinLabel.ATNISS
        return "disjunction adds 7 elements, negation adds 1"

    checks.append(_check("formula: size accounting", sizes))
    return checks


def suite_pidown(quick=False):
    cap = 5 if quick else 7

    def compat():
        for n in range(1, cap + 1):
            assert tamari.pi_down_compat(n), n
        return f"move sets match for all 312-avoiders, n <= {cap}"

    return [_check(f"pidown: sublattice moves = projected moves, n <= {cap}", compat)]


def suite_conjectures(quick=False):
    checks = []
    yf_cap = 10 if quick else 14
    ss_cap = 8 if quick else 10

    def yf():
        lattice = YoungFibonacci(yf_cap)
        sizes = lattice.rank_sizes()
        from .conjectures import fibonacci

        assert sizes == [fibonacci(r) for r in range(yf_cap + 1)], sizes
        lattice.validate_meets(min(yf_cap, 10))
        reports = [yf_conjecture_check(n, lattice) for n in range(2, yf_cap + 1)]
        mismatched = [r for r in reports if not r["match"]]
        return {
            "reports": reports,
            "summary": f"{len(reports)} ranks checked, {len(mismatched)} mismatches",
        }

    checks.append(_check(f"conjectures: rank counts in the two-digit lattice, n <= {yf_cap}", yf))

    def ss():
        surviving = calibrate_ss_convention(6)
        assert surviving == [(1, False, False)], surviving
        reports = [ss_conjecture_check(n) for n in range(1, ss_cap + 1)]
        mismatched = [r for r in reports if not r["match"]]
        return {
            "reports": [
                {"n": r["n"], "states": r["states"], "match": r["match"]}
                for r in reports
            ],
            "summary": f"{sum(r['states'] for r in reports)} states checked, "
            f"{len(mismatched)} ranks with mismatches",
        }

    checks.append(_check(f"conjectures: triangle-string predicate, n <= {ss_cap}", ss))
    return checks


def suite_engine(quick=False):
    checks = []

    def eeta_seed(game):
        # deepest responder-win position reachable in one move from the top
        best = None
        for _, nxt in game.legal_moves(game.start()):
            if game.is_eeta(nxt):
                if best is None or game.canonical_key(nxt) > game.canonical_key(best):
                    best = nxt
        return best

    def never_loses():
        total = 0
        total += verify_engine_never_loses(SkewGame((2, 2)))
        total += verify_engine_never_loses(SkewGame((4, 4)))
        total += verify_engine_never_loses(SkewGame((3, 3, 2)), start=eeta_seed(SkewGame((3, 3, 2))))
        game = TamariGame(6)
        total += verify_engine_never_loses(game, start=eeta_seed(game))
        wgame = WeakGame(5)
        total += verify_engine_never_loses(wgame, start=eeta_seed(wgame))
        assert total >= 20, f"only {total} positions exercised"
        return f"{total} responder-win positions defended"

    checks.append(_check("engine: responder never loses from Eeta positions", never_loses))
    return checks


SUITES = {
    "young": suite_young,
    "rectangle": suite_rectangle,
    "typea": suite_typea,
    "tamari": suite_tamari,
    "weak": suite_weak,
    "lemmas": suite_lemmas,
    "formula": suite_formula,
    "pidown": suite_pidown,
    "conjectures": suite_conjectures,
    "engine": suite_engine,
}


def run_suites(names, quick=False):
    results = []
    for name in names:
        results.extend(SUITES[name](quick=quick))
    return results
