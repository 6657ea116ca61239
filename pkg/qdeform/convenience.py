from .cyclers import BOUNDARY_COLOR
from .plot_containers import Plot


def plot_q_information(
    sweep,
    file=None,
    plt=None,
    xlabel=r'$p$',
    ylabel=r'$I_q^T$',
    title=None,
    aratio=None,
    legend=True,
    boundary=True,
    figsize=None,
    dpi=None,
    **kw
):
    """
    plot the Werner q-information against p, one curve per q

    Parameters
    ----------
    sweep: SweepResult
        Output of werner_q_information_curve or read_sweep_csv
    file: str, optional
        Filename to write.  If not sent, the Plot is only returned
    plt: Plot instance, optional
        If sent, a new Plot is not created, the input one
        is reused
    xlabel, ylabel, title: str, optional
        Axis labels and title
    aratio: float, optional
        Axis ratio of plot, ysize/xsize
    legend: bool or dict
        Draw a legend labeling the q values
    boundary: bool
        Draw the dashed line at the separable/entangled border p = 1/3

    Additional keywords go to each Curve, e.g. linewidth

    Returns
    -------
    Plot instance
    """
    if plt is None:
        plot_kw = {}
        if aratio is not None:
            plot_kw['aratio'] = aratio

        plt = Plot(
            xlabel=xlabel,
            ylabel=ylabel,
            title=title,
            legend=legend,
            figsize=figsize,
            dpi=dpi,
            **plot_kw
        )

    for q in sweep.q_values:
        p, i_q = sweep.for_q(q)
        plt.curve(p, i_q, label=r'$q = %g$' % q, **kw)

    if boundary:
        plt.vline(sweep.boundary_p, color=BOUNDARY_COLOR, linewidth=1.0)

    if file is not None:
        plt.savefig(file)

    return plt
