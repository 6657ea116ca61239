"""
invertible maps between the flat indices 1..4 of a 4 x 4 density matrix and
physical labels

two-qubit:  1 <-> (1/2, 1/2)   2 <-> (1/2, -1/2)
            3 <-> (-1/2, 1/2)  4 <-> (-1/2, -1/2)

spin-3/2:   1 <-> 3/2  2 <-> 1/2  3 <-> -1/2  4 <-> -3/2

Both maps keep the flat order, so moving a matrix between them never
touches its entries; only the interpretation (two subsystems or none)
changes.
"""
from collections import namedtuple
from fractions import Fraction

from .errors import DimensionMismatch

HALF = Fraction(1, 2)

Bipartite = namedtuple('Bipartite', ['dim_a', 'dim_b'])
Single = namedtuple('Single', ['dim'])


def dims_size(dims):
    """
    total Hilbert space dimension of a Bipartite or Single tag
    """
    if isinstance(dims, Bipartite):
        return dims.dim_a * dims.dim_b
    return dims.dim


class IndexLabeling(object):
    """
    a bijection between flat indices 1..d and labels

    Parameters
    ----------
    kind: str
        Name of the labeling, e.g. 'two-qubit'
    labels: sequence
        labels[i] is the label of flat index i+1
    dims: Bipartite or Single
        The factorization this labeling expresses
    """
    def __init__(self, kind, labels, dims):
        self.kind = kind
        self._labels = tuple(labels)
        self._indices = {label: i+1 for i, label in enumerate(self._labels)}
        self.dims = dims

        if len(self._indices) != len(self._labels):
            raise ValueError('labels of %s are not unique' % kind)
        if dims_size(dims) != len(self._labels):
            raise DimensionMismatch(
                '%s has %d labels but dims %s' % (
                    kind, len(self._labels), dims,
                )
            )

    @property
    def dim(self):
        return len(self._labels)

    def label(self, index):
        """
        label of the 1-based flat index
        """
        if index < 1 or index > self.dim:
            raise IndexError(
                'index %d outside 1..%d for %s' % (index, self.dim, self.kind)
            )
        return self._labels[index-1]

    def index(self, label):
        """
        1-based flat index of the label
        """
        try:
            return self._indices[label]
        except KeyError:
            raise KeyError('no label %s in %s' % (label, self.kind))

    def format_label(self, index):
        """
        printable label of the 1-based flat index, e.g. '1/2,-1/2'
        """
        label = self.label(index)
        if isinstance(label, tuple):
            return ','.join(str(part) for part in label)
        return str(label)

    def __iter__(self):
        return iter(self._labels)

    def __eq__(self, other):
        return (
            isinstance(other, IndexLabeling)
            and self.kind == other.kind
            and self._labels == other._labels
        )

    def __hash__(self):
        return hash((self.kind, self._labels))

    def __repr__(self):
        return 'IndexLabeling(%r)' % self.kind


TWO_QUBIT = IndexLabeling(
    'two-qubit',
    [(HALF, HALF), (HALF, -HALF), (-HALF, HALF), (-HALF, -HALF)],
    Bipartite(2, 2),
)

SPIN_THREE_HALVES = IndexLabeling(
    'spin32',
    [3*HALF, HALF, -HALF, -3*HALF],
    Single(4),
)

LABELINGS = {
    'two-qubit': TWO_QUBIT,
    'spin32': SPIN_THREE_HALVES,
}


def get_labeling(name):
    """
    get a labeling by name

    Parameters
    ----------
    name: str or IndexLabeling
        'two-qubit' or 'spin32'.  A labeling is passed through.

    Returns
    -------
    IndexLabeling
    """
    if isinstance(name, IndexLabeling):
        return name

    labeling = LABELINGS.get(name, None)
    if labeling is None:
        raise ValueError(
            "no labeling '%s', choose from %s" % (name, sorted(LABELINGS))
        )
    return labeling


def labeling_for_dims(dims):
    """
    the 4-dimensional labeling matching a dims tag
    """
    for labeling in LABELINGS.values():
        if labeling.dims == dims:
            return labeling

    raise DimensionMismatch('no index labeling for dims %s' % (dims, ))
