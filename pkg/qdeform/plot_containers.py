from matplotlib.figure import Figure

from .constants import GOLDEN_ARATIO
from .cyclers import get_default_multi_cycler
from .data_containers import Curve, VLine


class Plot(Figure):
    """
    A plot container.  This class provides an interface to both
    the Figure and axis functionality in one; axes methods such as
    set_xlim are available directly on the Plot.

    No display is ever opened: plots are written with savefig.

    Parameters
    ----------
    aratio: float, optional
        Axis ratio of plot, ysize/xsize. Default is the
        1/(golden ratio) ~ 0.618
    legend: bool or dict
        If True, a legend is drawn when saving.  A dict is passed on to
        the matplotlib legend call.  If None or False, no legend is created
    cycler: MultiCycler, optional
        Line style and color cycle for curves, one step per curve

    Additional Keywords for the matplotlib Figure: figsize, dpi

    Additional Keywords for setting axis parameters such as
        xlabel, ylabel, title, xlim, ylim
    """
    def __init__(
        self,
        figsize=None,
        dpi=None,
        aratio=GOLDEN_ARATIO,
        legend=None,
        cycler=None,
        **axis_kw
    ):

        if figsize is None:
            width = 6.4
            figsize = [width, width*GOLDEN_ARATIO]

        super().__init__(figsize=figsize, dpi=dpi)

        self.add_subplot()
        self.axes[0].set(**axis_kw)

        if cycler is None:
            cycler = get_default_multi_cycler()
        self.cycler = cycler

        self.aratio = aratio
        self._set_legend(legend)

    def _set_legend(self, legend):
        if legend is True:
            self._legend = {}
        elif legend:
            self._legend = dict(legend)
        else:
            self._legend = None

    def add(self, *objs):
        """
        draw data containers, e.g. Curve or VLine instances
        """
        for obj in objs:
            obj._add_to_axes(self.axes[0], cycler=self.cycler)

    def curve(self, x, y, **kw):
        """
        draw a line, stepping the line style and color cycle unless they
        are given.  See Curve for keywords
        """
        self.add(Curve(x, y, **kw))

    def vline(self, x, **kw):
        """
        draw a dashed vertical line at x.  See VLine for keywords
        """
        self.add(VLine(x, **kw))

    def savefig(
        self,
        file,
        *,
        bbox_inches='tight',
        **kwargs
    ):
        """
        write the plot to a file

        Parameters
        ----------
        file: str
            Filename to write, the format follows the extension
        **kw see matplotlib savefig docs for additional keywords
        """

        if self._legend is not None:
            self.axes[0].legend(**self._legend)

        if self.aratio is not None:
            self.axes[0].set_box_aspect(self.aratio)

        super().savefig(file, bbox_inches=bbox_inches, **kwargs)

    def __getattr__(self, name):
        """
        pass on calls to the axis, e.g. set_xlim
        """
        if name.startswith('_') or name == 'axes':
            raise AttributeError(name)
        return getattr(self.axes[0], name)
