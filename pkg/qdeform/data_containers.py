"""
things that know how to draw themselves on a matplotlib axes
"""
import numpy as np


class Curve(object):
    """
    a line through (x, y), e.g. one q-information curve

    Parameters
    ----------
    x, y: array or sequence
        Same size
    label: str, optional
    linestyle, color: optional
        Left to the Plot's cycler when None
    linewidth, alpha: float, optional
    """
    def __init__(
        self,
        x, y,
        label=None,
        linestyle=None,
        linewidth=None,
        color=None,
        alpha=None,
    ):
        self.x = np.array(x, ndmin=1, dtype='f8')
        self.y = np.array(y, ndmin=1, dtype='f8')

        if self.x.size != self.y.size:
            raise ValueError(
                "x and y must be same "
                "size, got %d and %d" % (self.x.size, self.y.size)
            )

        self.label = label
        self.linestyle = linestyle
        self.linewidth = linewidth
        self.color = color
        self.alpha = alpha

    def _add_to_axes(self, ax, cycler=None):
        linestyle = self.linestyle
        color = self.color
        if cycler is not None:
            if linestyle is None:
                linestyle = cycler.next('linestyle')
            if color is None:
                color = cycler.next('color')

        ax.plot(
            self.x, self.y,
            linestyle='solid' if linestyle is None else linestyle,
            linewidth=self.linewidth,
            color=color,
            alpha=self.alpha,
            marker=None,
            label=self.label,
        )


class VLine(object):
    """
    vertical line across the axes at x, dashed by default

    Parameters
    ----------
    x: float
    ymin, ymax: float, optional
        In axes coordinates, default the full height
    """
    def __init__(self,
                 x=0,
                 ymin=0, ymax=1,
                 label=None,
                 linestyle='dashed', linewidth=None,
                 color=None,
                 alpha=None):
        self.x = x
        self.ymin = ymin
        self.ymax = ymax
        self.label = label
        self.linestyle = linestyle
        self.linewidth = linewidth
        self.color = color
        self.alpha = alpha

    def _add_to_axes(self, ax, cycler=None):
        ax.axvline(
            x=self.x,
            ymin=self.ymin,
            ymax=self.ymax,
            linestyle=self.linestyle,
            linewidth=self.linewidth,
            color=self.color,
            alpha=self.alpha,
            label=self.label,
        )
