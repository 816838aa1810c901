import os
import tempfile

import pytest


@pytest.fixture(autouse=True, scope="session")
def isolated_cache():
    """Keep CLI cache writes out of the real home directory."""
    with tempfile.TemporaryDirectory(prefix="floparr-cache-") as tmp:
        old = os.environ.get("FLOPARR_CACHE")
        os.environ["FLOPARR_CACHE"] = tmp
        yield tmp
        if old is None:
            os.environ.pop("FLOPARR_CACHE", None)
        else:
            os.environ["FLOPARR_CACHE"] = old
