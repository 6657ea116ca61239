import numpy as np
import pytest

from qdeform.convenience import plot_q_information
from qdeform.cyclers import BOUNDARY_COLOR, MultiCycler, DEFAULT_LINESTYLES
from qdeform.data_containers import Curve, VLine
from qdeform.inequalities import werner_q_information_curve
from qdeform.plot_containers import Plot


@pytest.fixture(scope='module')
def sweep():
    return werner_q_information_curve(
        np.linspace(-1/3, 1, 15), [1.000001, 2.0, 5.0],
    )


def test_plot_axis_keywords():
    plt = Plot(xlabel='p', ylabel='I', xlim=(-0.5, 1.0))
    assert plt.get_xlabel() == 'p'
    assert plt.get_ylabel() == 'I'
    assert plt.get_xlim() == (-0.5, 1.0)

    with pytest.raises(AttributeError):
        plt._no_such_thing


def test_plot_cycles_styles():
    plt = Plot()
    plt.curve([0, 1], [0, 1])
    plt.curve([0, 1], [1, 0])
    plt.curve([0, 1], [1, 1], linestyle='dashed', color='black')

    first, second, third = plt.get_lines()
    assert first.get_linestyle() == '-'
    assert second.get_linestyle() == ':'
    assert first.get_color() != second.get_color()
    assert third.get_linestyle() == '--'
    assert third.get_color() == 'black'


def test_multi_cycler():
    cycler = MultiCycler(linestyle=DEFAULT_LINESTYLES, color=['r', 'g'])
    assert [cycler.next('color') for _ in range(3)] == ['r', 'g', 'r']
    assert cycler.next('linestyle') == 'solid'
    with pytest.raises(ValueError):
        cycler.next('marker')


def test_curve_size_mismatch():
    with pytest.raises(ValueError):
        Curve([0, 1, 2], [0, 1])


def test_vline():
    plt = Plot()
    plt.add(VLine(1/3, label='boundary'))
    line, = plt.get_lines()
    np.testing.assert_allclose(line.get_xdata(), [1/3, 1/3])
    assert line.get_linestyle() == '--'


def test_plot_q_information(sweep, tmp_path):
    path = tmp_path / 'werner.png'
    plt = plot_q_information(sweep, file=str(path), title='Werner')

    lines = plt.get_lines()
    assert len(lines) == 4

    labels = [line.get_label() for line in lines[:3]]
    assert labels == [r'$q = 1$', r'$q = 2$', r'$q = 5$']

    for line, q in zip(lines, sweep.q_values):
        p, i_q = sweep.for_q(q)
        np.testing.assert_array_equal(line.get_xdata(), p)
        np.testing.assert_array_equal(line.get_ydata(), i_q)

    boundary = lines[-1]
    assert boundary.get_color() == BOUNDARY_COLOR
    assert plt.get_legend() is not None
    assert plt.get_title() == 'Werner'
    assert path.stat().st_size > 0


def test_plot_q_information_reuse(sweep):
    plt = Plot(legend=False)
    again = plot_q_information(sweep, plt=plt, boundary=False, linewidth=2)
    assert again is plt
    assert len(plt.get_lines()) == 3
    assert all(line.get_linewidth() == 2 for line in plt.get_lines())


def test_plot_legend_dict(sweep, tmp_path):
    plt = plot_q_information(sweep, legend={'loc': 'upper left'})
    plt.savefig(tmp_path / 'werner.pdf')
    assert plt.get_legend() is not None
