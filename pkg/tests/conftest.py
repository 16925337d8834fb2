import pytest


def pytest_collection_modifyitems(items):
    """Run the acceptance suite after the unit tests."""
    items.sort(key=lambda item: item.path.name == "test_acceptance.py")


@pytest.fixture
def emit(capsys):
    """Print one live pass/fail line per acceptance criterion, then assert."""

    def _emit(num, ok, desc):
        line = f"[PRIMARY] criterion {num}: {'pass' if ok else 'fail'} - {desc}"
        with capsys.disabled():
            print(line, flush=True)
        assert ok, line

    return _emit
