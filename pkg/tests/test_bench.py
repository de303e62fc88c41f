import csv
import io

import pytest

from mccolor import InvalidInputError, InvalidParameterError, gen_wheel
from mccolor.bench import CSV_COLUMNS, fit_loglog, fit_records, records_to_csv, run_algorithm, run_bench


def test_fit_recovers_power_law():
    xs = [10, 100, 1000, 10000]
    fit = fit_loglog(xs, [3 * x**0.5 for x in xs])
    assert fit.slope == pytest.approx(0.5)
    assert fit.residual == pytest.approx(0, abs=1e-9)
    with pytest.raises(InvalidInputError):
        fit_loglog([1], [1])


def test_csv_header_and_claims():
    recs = run_bench("snowflake", [2, 3, 4], "snowflake2")
    rows = list(csv.reader(io.StringIO(records_to_csv(recs))))
    assert tuple(rows[0]) == CSV_COLUMNS
    assert len(rows) == 4
    assert all(r.max_component <= r.claimed_bound for r in recs)


def test_fit_takes_worst_per_x():
    recs = run_bench("outerpath", [16, 64], "outerpath2", seeds=range(4))
    assert len(recs) == 8
    fit = fit_records(recs, "delta")
    assert fit.points == 2


def test_run_algorithm_errors():
    with pytest.raises(InvalidParameterError):
        run_algorithm(gen_wheel(5), "nope")
    with pytest.raises(InvalidInputError):
        run_bench("wheel", [], "wheel2")


def test_oracle_and_dp_agree():
    from mccolor import gen_random_mop

    g = gen_random_mop(11, 5)
    assert run_algorithm(g, "dp2").value == run_algorithm(g, "oracle").value
