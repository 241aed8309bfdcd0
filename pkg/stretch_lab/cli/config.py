import numpy as np

from stretch_lab.exceptions import InvariantError

QUANTITIES = (
    "height",
    "min_leaf",
    "truncated_height",
    "asymptote",
    "bracket",
    "ratio_bound",
    "transverse",
)
FORMATS = ("table", "csv", "svg")


class SweepConfig:
    """Settings of a run over a grid of ray parameters

    Parameters
    ----------
    t_min, t_max : float, optional (Default: 0.0, 4.0)
        ends of the grid, inclusive
    steps : int, optional (Default: 41)
        number of grid points; a single step evaluates at t_min only
    quantities : list of strings, optional (Default: None)
        subset of QUANTITIES to report, all of them if None
    output : string, optional (Default: None)
        output file, stdout if None
    fmt : string, optional (Default: "table")
        one of FORMATS
    """

    def __init__(
        self, t_min=0.0, t_max=4.0, steps=41, quantities=None, output=None, fmt="table"
    ):
        t_min = float(t_min)
        t_max = float(t_max)
        if not (np.isfinite(t_min) and np.isfinite(t_max)):
            raise InvariantError("t range must be finite: [%r, %r]" % (t_min, t_max))
        if t_min > t_max:
            raise InvariantError("t_min > t_max: %r > %r" % (t_min, t_max))
        if isinstance(steps, bool) or int(steps) != steps or steps < 1:
            raise InvariantError("steps must be a positive integer, got %r" % steps)
        quantities = tuple(QUANTITIES if quantities is None else quantities)
        unknown = sorted(set(quantities) - set(QUANTITIES))
        if unknown:
            raise InvariantError("unknown quantities %s" % unknown)
        if fmt not in FORMATS:
            raise InvariantError("format must be one of %s, got %r" % (FORMATS, fmt))
        if fmt == "svg" and output is None:
            raise InvariantError("svg output needs an output file")

        self.t_min = t_min
        self.t_max = t_max
        self.steps = int(steps)
        self.quantities = quantities
        self.output = output
        self.fmt = fmt

    @property
    def grid(self):
        return np.linspace(self.t_min, self.t_max, self.steps)

    def wants(self, *names):
        """True if any of the named quantities is selected"""
        return any(name in self.quantities for name in names)

    def __repr__(self):
        return (
            "SweepConfig(t_min=%r, t_max=%r, steps=%r, quantities=%r, output=%r, "
            "fmt=%r)"
            % (
                self.t_min,
                self.t_max,
                self.steps,
                list(self.quantities),
                self.output,
                self.fmt,
            )
        )
