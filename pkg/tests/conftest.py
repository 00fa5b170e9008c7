import pytest

from sidon import RECIPES, generate

# Published opening of the greedy (Mian-Chowla) sequence, extended by
# the brute-force oracle in tests/oracles.py.
MIAN_CHOWLA_20 = [1, 2, 4, 8, 13, 21, 31, 45, 66, 81,
                  97, 123, 148, 182, 204, 252, 290, 361, 401, 475]


@pytest.fixture(scope="session")
def recipe_terms_2000():
    """2000 terms of each built-in recipe, generated once per session."""
    return {name: generate(recipe, 2000) for name, recipe in RECIPES.items()}
