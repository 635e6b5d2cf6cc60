import pytest

from consecpat import kernels


@pytest.fixture(params=kernels.available_backends())
def backend(request):
    return request.param


@pytest.fixture(autouse=True)
def _isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("CONSECPAT_CACHE_DIR", str(tmp_path / "cache"))
