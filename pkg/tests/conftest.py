"""Reference values shared by several test modules."""

import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

settings.register_profile("default", deadline=None)
settings.load_profile("default")

# 3-by-5 hammock and its dual: exact rows and the two reference approximations.
H35_EXACT = (0, 0, 0, 16, 178, 889, 2562, 4663, 5653, 4811, 2982, 1365, 455, 105, 15, 1)
H35_ALG_LMINUS1 = (0, 0, 0, 455, 1365, 3003, 4555, 5352, 5256, 4266, 2814, 1365, 455, 105, 15, 1)
H35_ALG_L = (0, 0, 0, 16, 1330, 2803, 4251, 5208, 5244, 4358, 2982, 1365, 455, 105, 15, 1)
H35_DUAL_EXACT = (0, 0, 0, 0, 0, 21, 194, 782, 1772, 2443, 2114, 1187, 439, 105, 15, 1)
H35_DUAL_ALG_LMINUS1 = (0, 0, 0, 0, 0, 189, 738, 1179, 1082, 449, 0, 0, 0, 105, 15, 1)
H35_DUAL_ALG_L = (0, 0, 0, 0, 0, 21, 646, 1191, 1227, 753, 200, 34, 439, 105, 15, 1)

# (w, l, max N_k, argmax); two rows with the same (w, l) are the H / H+ pair.
MAX_TABLE = [
    (2, 3, 10, 4), (2, 4, 20, 6), (2, 4, 24, 5), (2, 5, 56, 7),
    (3, 2, 16, 3), (3, 3, 84, 5), (3, 4, 450, 7), (3, 5, 2443, 9),
    (4, 2, 62, 4), (4, 2, 66, 4), (4, 3, 698, 7), (4, 4, 7700, 9), (4, 4, 8312, 9), (4, 5, 88948, 11),
    (5, 2, 244, 5), (5, 3, 5653, 8), (5, 4, 132750, 11), (5, 5, 3162650, 14),
]

# (l, w) -> {s: (N_s, E)}
E_TABLE = {
    (4, 5): {5: (438, -265128), 6: (3072, 39523), 7: (13178, 1626302), 15: (15468, 1741992), 16: (4845, 0)},
    (5, 4): {5: (36, -36095), 6: (510, 6390), 7: (3334, 450586), 16: (4816, 608704), 17: (1140, 0)},
    (5, 5): {6: (994, -901834), 7: (8983, 888337), 8: (50796, 12504244), 20: (53078, 11493942), 21: (12650, 0)},
}


@pytest.fixture(scope="session")
def h35():
    from mmnrel import brute_force_coefficients, dual, make_hammock

    net = make_hammock(3, 5)
    return net, brute_force_coefficients(net), brute_force_coefficients(dual(net))
