import runpy
from pathlib import Path

BENCH = Path(__file__).resolve().parents[1] / "benchmarks" / "bench_kernels.py"


def test_benchmark_quick_run(capsys):
    mod = runpy.run_path(str(BENCH))
    mod["main"](["--quick", "--repeat", "1"])
    out = capsys.readouterr().out
    assert "dp_counts" in out and "overlap_mask" in out
