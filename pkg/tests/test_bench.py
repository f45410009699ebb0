import pytest

from nodal_prime import bench
from nodal_prime.bench import BenchRow, format_rows, gen_probable_prime, growth_ratios, run_bench
from nodal_prime.verify import trial_division


def test_gen_probable_prime_deterministic():
    assert gen_probable_prime(16, 1) == gen_probable_prime(16, 1)
    assert gen_probable_prime(64, 2) != gen_probable_prime(64, 3)


@pytest.mark.parametrize("seed", range(20))
def test_gen_probable_prime_is_prime(seed):
    n = gen_probable_prime(16, seed)
    assert n.bit_length() == 16
    assert trial_division(n) is None


@pytest.mark.parametrize("bits", [17, 64, 100, 256])
def test_gen_probable_prime_exact_bits(bits):
    assert gen_probable_prime(bits, 7).bit_length() == bits


def test_gen_probable_prime_rejects_small():
    with pytest.raises(ValueError):
        gen_probable_prime(8, 1)


def test_run_bench_single_row():
    rows = run_bench([256], 3, 11)
    assert len(rows) == 1 and rows[0].bits == 256 and rows[0].reps == 3
    assert rows[0].cubic_median_ms > 0 and rows[0].mr_median_ms > 0


def test_run_bench_64_bits_all_prime(monkeypatch):
    verdicts = []
    real = bench.quick_test

    def spy(n):
        v = real(n)
        verdicts.append(v)
        return v

    monkeypatch.setattr(bench, "quick_test", spy)
    run_bench([64], 3, 5)
    assert verdicts and all(v.is_probable_prime for v in verdicts)


def test_run_bench_refuses_composite_inputs(monkeypatch):
    monkeypatch.setattr(bench, "gen_probable_prime", lambda bits, seed: 2047)
    with pytest.raises(RuntimeError):
        run_bench([64], 3, 1)


def test_growth_ratios():
    def row(bits, ms):
        return BenchRow(bits, 3, ms, ms, 0.0, 1.0, 1.0, 0.0)

    rows = [row(256, 2.4), row(512, 9.4), row(1024, 42.1), row(2048, 210.6)]
    ratios = growth_ratios(rows)
    assert [(lo, hi) for lo, hi, _ in ratios] == [(256, 512), (512, 1024), (1024, 2048)]
    assert ratios[0][2] == pytest.approx(9.4 / 2.4)
    assert ratios[2][2] == pytest.approx(210.6 / 42.1)


@pytest.mark.parametrize("fmt", ["text", "csv", "markdown"])
def test_format_rows(fmt):
    rows = [BenchRow(256, 5, 2.5, 2.6, 0.1, 0.2, 0.2, 0.01)]
    text = format_rows(rows, fmt)
    lines = text.strip().splitlines()
    assert "bits" in lines[0]
    if fmt == "csv":
        assert lines[1].startswith("256,5,2.500")
    elif fmt == "markdown":
        assert lines[1].startswith("|") and lines[2].startswith("| 256 |")
    else:
        assert lines[1].split()[0] == "256"


def test_format_rows_unknown():
    with pytest.raises(ValueError):
        format_rows([], "xml")


@pytest.mark.skipif(bench._backend.kernel is None, reason="compiled kernel not built")
def test_compare_backends():
    cmp = bench.compare_backends(3, 20_001)
    assert cmp.count == 10_000
    assert cmp.kernel_s > 0 and cmp.python_s > 0
