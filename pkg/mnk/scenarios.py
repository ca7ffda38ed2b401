"""Named monodromies for the CLI and the test suite."""

SCENARIOS = [
    {
        "id": "tribonacci",
        "name": "Tribonacci Inoue surface",
        "description": "Companion matrix of x^3 - x^2 - x - 1; one real eigenvalue > 1",
        "matrix": [[0, 0, 1], [1, 0, 1], [0, 1, 1]],
        "expected_dims": {"lee": [0, 0, 1, 1, 0], "untwisted": [1, 1, 0, 1, 1]},
    },
    {
        "id": "plastic",
        "name": "Plastic-number Inoue surface",
        "description": "Companion matrix of x^3 - x - 1",
        "matrix": [[0, 0, 1], [1, 0, 1], [0, 1, 0]],
        "expected_dims": {"lee": [0, 0, 1, 1, 0]},
    },
    {
        "id": "cat-map",
        "name": "Arnold cat map",
        "description": "Hyperbolic torus automorphism, 3-dimensional solvmanifold",
        "matrix": [[2, 1], [1, 1]],
        "expected_dims": {"lee": [0, 1, 1, 0], "untwisted": [1, 1, 1, 1]},
    },
    {
        "id": "identity3",
        "name": "Four-torus",
        "description": "Trivial monodromy on T^3",
        "matrix": [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
        "expected_dims": {"untwisted": [1, 4, 6, 4, 1], "transcendental": [0, 0, 0, 0, 0]},
    },
    {
        "id": "swap",
        "name": "Non-orientable swap",
        "description": "Coordinate swap on T^2, det -1",
        "matrix": [[0, 1], [1, 0]],
        "expected_dims": {"untwisted": [1, 2, 1, 0]},
    },
]


def get_scenarios():
    """Return all scenarios."""
    return SCENARIOS


def get_scenario_by_id(scenario_id: str):
    """Get a specific scenario by ID."""
    for scenario in SCENARIOS:
        if scenario["id"] == scenario_id:
            return scenario
    return None
