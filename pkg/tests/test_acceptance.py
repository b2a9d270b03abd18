"""Acceptance suite: one test per criterion, one printed verdict line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the verdict
lines for passing criteria too.  All seeds are fixed constants; nothing
here is tuned per run.
"""

import random
import time

import pytest

from tgoppa import (
    CodeSpec,
    ParamSet,
    Poly,
    brute_force_dimension,
    codes_equal,
    dimension,
    inverse_linear_residue,
    is_codeword,
    make_field,
    parity_matrix,
    rank,
    run_trials,
    standard_grid,
    summarize,
    sweep,
    trials_csv_text,
    write_trials_csv,
)
from tgoppa.linalg import pack_gf2_row, rank_gf2

from conftest import random_code_spec

GRID_SEEDS = (101, 202)
TABLE_SEED = 12345
TABLE_TRIALS = 20

# Externally reported dimensions for the three reference parameter sets;
# the comparison is reported, not gated (the reference construction of the
# support and the field basis are not published).
REFERENCE_K = {
    ParamSet(2, 4, 3, 10, 3): 3,
    ParamSet(2, 6, 3, 4, 3): 45,
    ParamSet(2, 6, 5, 14, 3): 35,
}


def _verdict(num, name, ok):
    print(f"ACCEPTANCE {num} ({name}): {'PASS' if ok else 'FAIL'}")
    return ok


@pytest.fixture(scope="module")
def grid_runs():
    """20 trials per ParamSet per master seed over the standard grid."""
    t0 = time.time()
    runs = {}
    for seed in GRID_SEEDS:
        per_seed = []
        for params in standard_grid():
            records = run_trials(params, 20, seed)
            per_seed.append((params, summarize(params, records), records))
        runs[seed] = per_seed
    runs["elapsed"] = time.time() - t0
    return runs


@pytest.fixture(scope="module")
def table_runs():
    out = []
    for params in REFERENCE_K:
        records = run_trials(params, TABLE_TRIALS, TABLE_SEED)
        out.append((params, summarize(params, records), records))
    return out


@pytest.fixture(scope="module")
def oracle_corpus():
    """100 random q=2 CodeSpecs with n <= 14, eta mixed zero / nonzero."""
    rng = random.Random(20250809)
    fields = tuple(make_field(2, m) for m in (2, 3, 4))
    corpus = []
    t0 = time.time()
    for i in range(100):
        mode = "zero" if i % 2 == 0 else "nonzero"
        spec = random_code_spec(rng, fields, max_n=14, t_choices=(1, 2, 3),
                                eta_mode=mode)
        corpus.append((spec, dimension(spec), brute_force_dimension(spec)))
    return {"corpus": corpus, "elapsed": time.time() - t0}


def test_criterion_1_dimension_determinism(grid_runs):
    violations = []
    for seed in GRID_SEEDS:
        for params, report, _ in grid_runs[seed]:
            if not report.invariant:
                violations.append((seed, params, report.k_histogram))
    cross_seed = []
    by_params = {}
    for seed in GRID_SEEDS:
        for params, report, _ in grid_runs[seed]:
            by_params.setdefault(params, {})[seed] = report
    for params, reports in by_params.items():
        ks = {r.k_value for r in reports.values() if r.invariant}
        if len(ks) > 1:
            cross_seed.append((params, ks))
    print(f"  grid: {len(standard_grid())} parameter sets x 20 trials x "
          f"{len(GRID_SEEDS)} seeds, {grid_runs['elapsed']:.1f}s "
          f"(target < 300s)")
    print(f"  invariant violations: {len(violations)}; "
          f"cross-seed k mismatches: {len(cross_seed)}")
    for seed, params, hist in violations[:8]:
        print(f"    seed {seed}: {params} k histogram {hist}")
    ok = not violations and not cross_seed
    _verdict(1, "dimension determinism on the standard grid", ok)
    assert ok, (
        f"{len(violations)} of {2 * len(standard_grid())} determinism reports "
        f"are non-invariant: the dimension is NOT a function of "
        f"(q, m, t, b, u) alone under uniform (g, eta) sampling with this "
        f"construction; see the Findings section of the README for the "
        f"deviant twist characterization"
    )


def test_criterion_2_reference_parameter_sets(table_runs):
    all_invariant = True
    for params, report, _ in table_runs:
        ref = REFERENCE_K[params]
        if report.invariant:
            match = report.k_value == ref
            print(f"  {params}: invariant, k={report.k_value} "
                  f"(reference {ref}, {'match' if match else 'MISMATCH'}; "
                  f"n={report.n}, all-orbit support, canonical modulus)")
        else:
            all_invariant = False
            print(f"  {params}: INVARIANT VIOLATED, histogram "
                  f"{report.k_histogram} (reference {ref}, n={report.n})")
    _verdict(2, "reference parameter sets invariant", all_invariant)
    assert all_invariant, (
        "determinism violated on a reference parameter set; the reported "
        "reference dimension equals this artifact's modal k, but uniform "
        "eta sampling hits deviant twist values"
    )


def test_criterion_3_oracle_equivalence(oracle_corpus):
    corpus = oracle_corpus["corpus"]
    mismatches = [
        (spec, k_rank, k_brute)
        for spec, k_rank, k_brute in corpus
        if k_rank != k_brute
    ]
    print(f"  {len(corpus)} random specs, {oracle_corpus['elapsed']:.1f}s "
          f"(target < 120s)")
    ok = not mismatches and len(corpus) >= 100
    _verdict(3, "rank dimension equals brute-force dimension", ok)
    assert ok, mismatches[:3]


def test_criterion_4_worked_example_regression():
    field = make_field(2, 2)
    spec = CodeSpec(field, (0, 1, 2, 3), Poly(field, (2, 1, 1)), 1)
    pm = parity_matrix(spec)
    ok = (
        rank(pm) == 2
        and dimension(spec) == 2
        and is_codeword(spec, (1, 1, 0, 0))
        and brute_force_dimension(spec) == 2
    )
    _verdict(4, "GF(4) worked example: rank 2, k 2, (1,1,0,0) member", ok)
    assert ok


def test_criterion_5_dimension_bounds(grid_runs, table_runs, oracle_corpus):
    checked = 0
    bad = []
    for seed in GRID_SEEDS:
        for params, _, records in grid_runs[seed]:
            for r in records:
                checked += 1
                if not max(0, r.n - params.m * params.t) <= r.k <= r.n:
                    bad.append(r)
    for params, _, records in table_runs:
        for r in records:
            checked += 1
            if not max(0, r.n - params.m * params.t) <= r.k <= r.n:
                bad.append(r)
    for spec, k_rank, _ in oracle_corpus["corpus"]:
        checked += 1
        mt = spec.field.m * spec.t
        if not max(0, spec.n - mt) <= k_rank <= spec.n:
            bad.append(spec)
    print(f"  {checked} trials checked against n - mt <= k <= n")
    ok = not bad
    _verdict(5, "dimension bounds on every trial", ok)
    assert ok, bad[:3]


def test_criterion_6_classical_reduction():
    rng = random.Random(6021023)
    fields = (make_field(2, 3), make_field(2, 4), make_field(3, 2))
    bad_columns = 0
    bad_dims = 0
    for _ in range(50):
        spec = random_code_spec(rng, fields, max_n=12, t_choices=(1, 2, 3),
                                eta_mode="zero")
        pm = parity_matrix(spec)
        for i, alpha in enumerate(spec.support):
            col = tuple(pm.ext_rows[j][i] for j in range(pm.t))
            if col != inverse_linear_residue(alpha, spec.g).padded(pm.t):
                bad_columns += 1
        # classical matrix assembled straight from the residue identity
        F = spec.field
        ext = [
            inverse_linear_residue(alpha, spec.g).padded(spec.t)
            for alpha in spec.support
        ]
        base = []
        for j in range(spec.t):
            rows = [[0] * spec.n for _ in range(F.m)]
            for i in range(spec.n):
                for l, d in enumerate(F.expand(ext[i][j])):
                    rows[l][i] = d
            base.extend(rows)
        if F.q == 2:
            classical_rank = rank_gf2(pack_gf2_row(r) for r in base)
        else:
            from tgoppa.linalg import rank_modp

            classical_rank = rank_modp(base, F.q)
        if spec.n - classical_rank != dimension(spec):
            bad_dims += 1
    ok = bad_columns == 0 and bad_dims == 0
    print(f"  50 eta=0 specs: {bad_columns} column mismatches, "
          f"{bad_dims} dimension mismatches")
    _verdict(6, "eta = 0 reduces to the classical construction", ok)
    assert ok


def test_criterion_7_scaling_equivalence():
    rng = random.Random(774411)
    fields = (make_field(2, 2), make_field(2, 3), make_field(2, 4),
              make_field(3, 2))
    failures = 0
    for _ in range(50):
        spec = random_code_spec(rng, fields, max_n=9, t_choices=(1, 2, 3))
        F = spec.field
        c = rng.randrange(1, F.order)
        left = CodeSpec(F, spec.support, spec.g.scale(c), spec.eta)
        right = CodeSpec(F, spec.support, spec.g, F.mul(spec.eta, F.inv(c)))
        if not codes_equal(left, right):
            failures += 1
    ok = failures == 0
    print(f"  50 random (spec, c) pairs: {failures} inequivalent")
    _verdict(7, "scaling g by c equals scaling eta by 1/c", ok)
    assert ok


def test_criterion_8_replay_byte_identical(tmp_path):
    grid = [
        ParamSet(2, 3, 2, 1, 2),
        ParamSet(2, 4, 3, 10, 3),
        ParamSet(2, 6, 3, 4, 3),
    ]
    first = sweep(grid, 5, 31337)
    second = sweep(grid, 5, 31337)
    text1 = trials_csv_text(first.records)
    text2 = trials_csv_text(second.records)
    path1 = tmp_path / "one.csv"
    path2 = tmp_path / "two.csv"
    write_trials_csv(first.records, path1)
    write_trials_csv(second.records, path2)
    ok = text1 == text2 and path1.read_bytes() == path2.read_bytes()
    print(f"  sweep of {len(grid)} parameter sets x 5 trials replayed: "
          f"{len(text1)} bytes")
    _verdict(8, "equal (grid, trials, seed) gives byte-identical CSV", ok)
    assert ok
