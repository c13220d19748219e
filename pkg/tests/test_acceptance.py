"""Exit criteria. Each test registers one line for the PASS/FAIL summary."""

import itertools
import json
import math
import subprocess
import sys
from fractions import Fraction as Fr
from functools import reduce
from pathlib import Path

import numpy as np

from helpers import (
    random_mass,
    set_bel,
    set_betp,
    set_conjunctive,
    set_dempster,
    set_pl,
    set_yager,
    sets_close,
    to_sets,
)
from ordbelief import OrderedFrame, categorical, singleton, vacuous
from ordbelief.combine import (
    average,
    conjunctive,
    dempster,
    jaccard_delta,
    mixed,
    ordered_disjunctive,
    ordered_dubois_prade,
    yager,
)
from ordbelief.decision import conflict
from ordbelief.documents import emit_mass_document, parse_mass_document, round12
from ordbelief.exceptions import TotalConflict
from ordbelief.frame import enumerate_ops, ops_size
from ordbelief.fuzzy import FuzzyParams
from ordbelief.mass import bel, betp, pl
from ordbelief.metric import belief_distance, fuzzy_matrix, jaccard_matrix, ordered_matrix

GOLDEN = Path(__file__).parent / "golden"

# printed 7x7 matrix for three states, average ordinal distance
PRINTED = [
    [1, 0, 0, 0, 0, 0, 0],
    [0, 1, Fr(1, 6), Fr(1, 2), 0, Fr(1, 2), Fr(1, 3)],
    [0, Fr(1, 6), 1, Fr(1, 2), Fr(1, 6), Fr(1, 2), Fr(1, 3)],
    [0, Fr(1, 2), Fr(1, 2), 1, Fr(1, 12), Fr(1, 3), Fr(2, 3)],
    [0, 0, Fr(1, 6), Fr(1, 12), 1, Fr(1, 2), Fr(1, 3)],
    [0, Fr(1, 12), Fr(1, 2), Fr(1, 3), Fr(1, 2), 1, Fr(2, 3)],
    [0, Fr(1, 3), Fr(1, 3), Fr(2, 3), Fr(1, 3), Fr(2, 3), 1],
]
TYPO_CELL = (1, 5)  # (w1, w2..w3)


def test_c01_ops_size_matches_enumeration(criterion_report):
    criterion_report("C1  |oPS| = 1 + n(n+1)/2 equals enumeration length, n = 1..10")
    for n in range(1, 11):
        assert ops_size(n) == 1 + n * (n + 1) // 2 == len(enumerate_ops(n))


def test_c02_reference_matrix_with_symmetric_1_12_cell(criterion_report):
    criterion_report("C2  ordered matrix n=3 equals printed matrix (w1, w2..w3 cell: 1/12 both sides, printed 1/2)")
    E = ordered_matrix(3, "avg").entries
    for i, j in itertools.product(range(7), repeat=2):
        if (i, j) == TYPO_CELL:
            continue
        assert abs(E[i, j] - float(PRINTED[i][j])) <= 1e-12, (i, j)
    i, j = TYPO_CELL
    assert PRINTED[i][j] == Fr(1, 2) and PRINTED[j][i] == Fr(1, 12)
    assert abs(E[i, j] - 1 / 12) <= 1e-12 and abs(E[j, i] - 1 / 12) <= 1e-12
    assert np.array_equal(E, E.T)


def test_c03_reference_distance_values(criterion_report):
    criterion_report("C3  d(m_w1, m_w2) = sqrt(5/6), d(m_w1, m_w3) = 1 (ordered); plain gives 1 for both")
    f = OrderedFrame(3)
    m1, m2, m3 = (categorical(f, singleton(i)) for i in (1, 2, 3))
    D = ordered_matrix(f)
    assert abs(belief_distance(m1, m2, D) - math.sqrt(5 / 6)) <= 1e-12
    assert abs(belief_distance(m1, m3, D) - 1.0) <= 1e-12
    P = jaccard_matrix(f)
    assert abs(belief_distance(m1, m2, P) - 1.0) <= 1e-12
    assert abs(belief_distance(m1, m3, P) - 1.0) <= 1e-12


def test_c04_closure_of_every_rule(criterion_report):
    criterion_report("C4  all rules stay in oPS with total mass 1 +- 1e-9 (1000 random pairs, n <= 6)")
    rng = np.random.default_rng(20240404)
    fuzzy = jaccard_delta(FuzzyParams(0.5, 1.0))
    dempster_skipped = 0
    for _ in range(1000):
        n = int(rng.integers(1, 7))
        a = random_mass(rng, n, max_focal=5, allow_empty=rng.random() < 0.2)
        b = random_mass(rng, n, max_focal=5, allow_empty=rng.random() < 0.2)
        elems = set(enumerate_ops(n))
        outputs = [
            conjunctive(a, b), yager(a, b), ordered_disjunctive([a, b]), ordered_dubois_prade([a, b]),
            average([a, b]), mixed(a, b), mixed(a, b, fuzzy),
        ]
        try:
            outputs.append(dempster(a, b))
        except TotalConflict:
            dempster_skipped += 1
        for out in outputs:
            assert set(out) <= elems
            assert abs(math.fsum(out.values()) - 1.0) <= 1e-9
    print(f"dempster undefined (total conflict) on {dempster_skipped} of 1000 pairs")


def test_c05_bitset_oracle_equivalence(criterion_report):
    criterion_report("C5  conj/dempster/yager/bel/pl/BetP equal a 2^Omega bitset oracle (200 masses, n <= 5, 1e-12)")
    rng = np.random.default_rng(5)
    checked_dempster = 0
    for _ in range(200):
        n = int(rng.integers(1, 6))
        a, b = random_mass(rng, n, max_focal=5), random_mass(rng, n, max_focal=5)
        sa, sb = to_sets(a), to_sets(b)
        assert sets_close(to_sets(conjunctive(a, b)), set_conjunctive(sa, sb), 1e-12)
        assert sets_close(to_sets(yager(a, b)), set_yager(sa, sb, n), 1e-12)
        if set_conjunctive(sa, sb).get(frozenset(), 0.0) < 1.0 - 1e-9:
            assert sets_close(to_sets(dempster(a, b)), set_dempster(sa, sb), 1e-12)
            checked_dempster += 1
        for x in enumerate_ops(n):
            assert abs(bel(a, x) - set_bel(sa, frozenset(x))) <= 1e-12
            assert abs(pl(a, x) - set_pl(sa, frozenset(x))) <= 1e-12
        for i in range(1, n + 1):
            assert abs(betp(a, i) - set_betp(sa, i)) <= 1e-12
    assert checked_dempster > 100


def test_c06_disjunctive_fold_consistency(criterion_report):
    criterion_report("C6  s-source ordered disjunction equals iterated two-source form (s = 3, 4; n <= 4; 1e-12)")
    rng = np.random.default_rng(6)
    for s in (3, 4):
        for _ in range(100):
            n = int(rng.integers(1, 5))
            ms = [random_mass(rng, n) for _ in range(s)]
            joint = ordered_disjunctive(ms)
            folded = reduce(lambda x, y: ordered_disjunctive([x, y]), ms)
            assert np.max(np.abs(joint.to_vector() - folded.to_vector())) <= 1e-12


def test_c07_fuzzy_degeneration_and_bounds(criterion_report):
    criterion_report("C7  fuzzy matrix with alpha = 0 equals Jaccard (n <= 6); D <= fuzzy <= 1 on a 25-point grid")
    grid = list(itertools.product(np.linspace(0, 1, 5), repeat=2))
    assert len(grid) == 25
    for n in range(1, 7):
        plain = jaccard_matrix(n).entries
        for gamma in (0.0, 0.5, 1.0):
            assert np.array_equal(fuzzy_matrix(n, FuzzyParams(0.0, gamma)).entries, plain)
        for alpha, gamma in grid:
            E = fuzzy_matrix(n, FuzzyParams(alpha, gamma)).entries
            assert np.all(plain <= E + 1e-12) and np.all(E <= 1 + 1e-12)


def test_c08_ordered_matrix_is_positive_semidefinite(criterion_report):
    criterion_report("C8  min eigenvalue of ordered matrix >= -1e-9, n = 2..7")
    for n in range(2, 8):
        spectrum = np.linalg.eigvalsh(ordered_matrix(n).entries)
        print(f"n={n}: min eig {spectrum.min():.6f}, max eig {spectrum.max():.6f}")
        assert spectrum.min() >= -1e-9


def test_c09_conflict_semantics(criterion_report):
    criterion_report("C9  Conf(m,m) = 0, Conf(m, m_Omega) = 0, Conf(m_w1,m_w2) <= Conf(m_w1,m_w3)")
    f = OrderedFrame(3)
    D = ordered_matrix(f)
    rng = np.random.default_rng(9)
    for _ in range(50):
        m = random_mass(rng, 3)
        assert conflict(m, m, D) == 0
        assert abs(conflict(m, vacuous(f), D)) <= 1e-12
    m1, m2, m3 = (categorical(f, singleton(i)) for i in (1, 2, 3))
    c12, c13 = conflict(m1, m2, D), conflict(m1, m3, D)
    assert abs(c12 - math.sqrt(5 / 6)) <= 1e-12 and abs(c13 - 1.0) <= 1e-12
    assert c12 <= c13


CLI_EXAMPLES = [
    (["combine", "--rule", "odisj", "m_w1.json", "m_w3.json"], "combine_odisj_w1_w3.json"),
    (["distance", "--kind", "ordered", "m_w1.json", "m_w2.json"], "distance_ordered_w1_w2.txt"),
    (["matrix", "--kind", "ordered", "--n", "3"], "matrix_ordered_n3.csv"),
]


def _cli(argv):
    proc = subprocess.run([sys.executable, "-m", "ordbelief.cli", *argv], cwd=GOLDEN, capture_output=True, check=True)
    return proc.stdout


def test_c10_cli_golden_files_and_round_trip(criterion_report):
    criterion_report("C10 CLI examples byte-identical across runs and to golden files; 20-document round trip")
    for argv, golden in CLI_EXAMPLES:
        first, second = _cli(argv), _cli(argv)
        assert first == second
        assert first == (GOLDEN / golden).read_bytes()
    assert json.loads(_cli(CLI_EXAMPLES[0][0]))["masses"] == [{"focal": "w1..w3", "mass": 1.0}]
    assert abs(float(_cli(CLI_EXAMPLES[1][0])) - 0.912871) <= 5e-7

    rng = np.random.default_rng(10)
    for k in range(20):
        n = int(rng.integers(1, 7))
        doc = emit_mass_document(random_mass(rng, n, max_focal=6, allow_empty=k % 4 == 0))
        doc["frame"] = [f"s{k}.{i}" for i in range(n)]
        shuffled = dict(masses=list(reversed(doc["masses"])), frame=doc["frame"])
        again = emit_mass_document(parse_mass_document(json.dumps(shuffled)))
        assert again["frame"] == doc["frame"]
        assert {r["focal"]: r["mass"] for r in again["masses"]} == {
            r["focal"]: round12(r["mass"]) for r in doc["masses"]
        }
