import pytest

from helios.errors import DomainError
from helios.io import CSV_HEADER, dump_spectrum, fmt, load_spectrum, write_sweep_csv
from helios.lab import DecayProfile, ksweep, make_real_perturbation, make_spectrum


def test_fmt_round_trip():
    for x in (0.1, 1.0 / 3.0, 1e-300, 2.0**53 + 1.0):
        assert float(fmt(x)) == x


def test_spectrum_round_trip(tmp_path):
    spec = make_spectrum(DecayProfile("exponential", 0.9, 12, seed=2))
    path = tmp_path / "spec.json"
    dump_spectrum(str(path), 4.5, 1.25, spec)
    k, R, loaded = load_spectrum(str(path))
    assert k == 4.5 and R == 1.25
    assert loaded.max_degree == 12
    assert dict(loaded.items()) == dict(spec.items())


def test_load_rejects_bad_index(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"k": 4, "R": 1, "max_degree": 2, '
                    '"coefficients": [{"n": 1, "m": 2, "re": 0.0, "im": 0.0}]}\n')
    with pytest.raises(DomainError):
        load_spectrum(str(path))


def test_load_rejects_missing_field(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"R": 1, "coefficients": []}\n')
    with pytest.raises(DomainError):
        load_spectrum(str(path))


def test_load_rejects_excess_degree(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"k": 4, "R": 1, "max_degree": 61, "coefficients": []}\n')
    with pytest.raises(DomainError):
        load_spectrum(str(path))


def test_csv_format(tmp_path):
    d = make_real_perturbation(DecayProfile("exponential", 1.0, 4, seed=7))
    rows = ksweep(d, 1.0, [2.0, 4.0], 1e-3, 2, master_seed=0)
    path = tmp_path / "sweep.csv"
    with open(path, "w") as fh:
        write_sweep_csv(fh, rows)
    lines = path.read_text().splitlines()
    assert lines[0] == CSV_HEADER
    assert len(lines) == 1 + len(rows)
    first = lines[1].split(",")
    assert len(first) == len(CSV_HEADER.split(","))
    assert float(first[0]) == 2.0
    assert int(first[1]) == rows[0].N
