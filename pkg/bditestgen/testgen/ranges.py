
import os
import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
import pandas as pd

from ..utils.exceptions import MissingRangeException, InvalidIntervalException


logger = logging.getLogger(__name__)

DEFAULT_RANGES_PATH = os.path.join(os.path.dirname(__file__), 'assets', 'ranges.csv')
DURATION = 'duration'
RANGE_COLUMNS = ['action', 'channel', 'parameter', 'unit', 'low', 'high', 'upper_open']


@dataclass(frozen=True)
class ParamRange:
    """ Interval of one stimulus parameter, closed or half-open at the top. """
    parameter: str
    unit: str
    low: float
    high: float
    upper_open: bool = False

    def __post_init__(self):
        if self.low > self.high or (self.upper_open and self.low == self.high):
            raise InvalidIntervalException(self.parameter, self.low, self.high)

    @property
    def degenerate(self):
        return self.low == self.high

    def contains(self, value):
        if self.upper_open:
            return self.low <= value < self.high
        return self.low <= value <= self.high

    def sample(self, rng):
        """ Draw a value uniformly from the interval.

        :param rng: random generator
        :return: sampled value
        :type rng: numpy.random.Generator
        :rtype: float
        """
        if self.degenerate:
            return float(self.low)
        value = float(rng.uniform(self.low, self.high))
        if self.upper_open and value >= self.high:
            value = float(np.nextafter(self.high, self.low))
        return value


class ParamRangeTable:
    """ Maps each abstract action, written as in a test file, to its channel and parameter ranges.

    Every action takes simulated time: it needs one `duration` range with a positive lower bound.
    """
    def __init__(self, entries):
        """

        :param entries: action text -> (channel, list of ParamRange)
        :raise: MissingRangeException, InvalidIntervalException, ValueError
        :type entries: dict
        """
        for action, (_, ranges) in entries.items():
            durations = [r for r in ranges if r.parameter == DURATION]
            if len(durations) == 0:
                raise MissingRangeException(action+' '+DURATION)
            if len(durations) > 1:
                raise ValueError('Action '+action+' has '+str(len(durations))+' duration ranges')
            if durations[0].low <= 0:
                raise InvalidIntervalException(action+' '+DURATION, durations[0].low, durations[0].high)
        self.entries = dict(entries)

    def __contains__(self, action):
        return str(action) in self.entries

    def actions(self):
        return list(self.entries.keys())

    def lookup(self, action):
        """ Return the channel and the ranges of an abstract action.

        :param action: abstract action or its text form
        :return: (channel, ranges)
        :raise: MissingRangeException
        :type action: bditestgen.testgen.abstract.AbstractAction or str
        :rtype: tuple
        """
        key = str(action)
        if key not in self.entries:
            raise MissingRangeException(key)
        return self.entries[key]

    def channel_of(self, action):
        return self.lookup(action)[0]

    def ranges_of(self, action):
        return self.lookup(action)[1]

    def in_range(self, action, parameters):
        """ Check that every declared parameter is present and within its interval. """
        for paramrange in self.ranges_of(action):
            if paramrange.parameter not in parameters:
                return False
            if not paramrange.contains(parameters[paramrange.parameter]):
                return False
        return True

    def to_dataframe(self):
        rows = []
        for action, (channel, ranges) in self.entries.items():
            for r in ranges:
                rows.append([action, channel, r.parameter, r.unit, r.low, r.high, int(r.upper_open)])
        return pd.DataFrame(rows, columns=RANGE_COLUMNS)


def load_range_table(filepath=None):
    """ Load a parameter range table from a CSV file.

    The columns are `action,channel,parameter,unit,low,high,upper_open`, one row per
    parameter. Every action needs a `duration` row with a positive
    lower bound.

    :param filepath: path of the CSV file (Default: the bundled ranges)
    :return: range table
    :raise: MissingRangeException, InvalidIntervalException, ValueError
    :type filepath: str
    :rtype: ParamRangeTable
    """
    filepath = DEFAULT_RANGES_PATH if filepath is None else filepath
    df = pd.read_csv(filepath, dtype={'action': str, 'channel': str, 'parameter': str, 'unit': str})
    missing = [column for column in RANGE_COLUMNS if column not in df.columns]
    if len(missing) > 0:
        raise ValueError('Missing columns in '+filepath+': '+', '.join(missing))

    entries = {}
    for row in df.itertuples(index=False):
        paramrange = ParamRange(row.parameter, row.unit, float(row.low), float(row.high), bool(row.upper_open))
        channel, ranges = entries.setdefault(row.action, (row.channel, []))
        if channel != row.channel:
            raise ValueError('Action '+row.action+' is mapped to two channels')
        ranges.append(paramrange)
    logger.debug('Loaded ranges of %d actions from %s', len(entries), filepath)
    return ParamRangeTable(entries)


@lru_cache(maxsize=1)
def default_range_table():
    return load_range_table(DEFAULT_RANGES_PATH)
