
import json
import logging
from dataclasses import dataclass, field
from typing import Dict, Tuple

import numpy as np

from .abstract import AbstractTest
from .ranges import default_range_table, DURATION
from ..utils.misc import textfile_generator


logger = logging.getLogger(__name__)

VOICE = 'voice'
GAZE = 'gaze'
PRESSURE = 'pressure'
LOCATION = 'location'
WAIT = 'wait'
CHANNELS = (VOICE, GAZE, PRESSURE, LOCATION, WAIT)


@dataclass(frozen=True)
class TimedStimulus:
    """ One concrete stimulus: what the simulated human does on a channel, and for how long. """
    action: str
    channel: str
    parameters: Dict[str, float] = field(default_factory=dict)
    duration: float = 0.0

    def __post_init__(self):
        if self.channel not in CHANNELS:
            raise ValueError('Unknown channel: '+str(self.channel))

    def to_dict(self):
        return {'action': self.action, 'channel': self.channel,
                'parameters': dict(self.parameters), 'duration': self.duration}

    @classmethod
    def from_dict(cls, d):
        return cls(d['action'], d['channel'], {k: float(v) for k, v in d['parameters'].items()},
                   float(d['duration']))


@dataclass(frozen=True)
class ConcreteTest:
    stimuli: Tuple[TimedStimulus, ...]
    seed: int
    test_id: str = ''

    def __len__(self):
        return len(self.stimuli)

    @property
    def channels(self):
        return [stimulus.channel for stimulus in self.stimuli]

    @property
    def actions(self):
        return [stimulus.action for stimulus in self.stimuli]

    @property
    def total_duration(self):
        return sum(stimulus.duration for stimulus in self.stimuli)


def concretize(abstract_test, ranges=None, seed=0, test_id=None):
    """ Instantiate the parameters and timing of every action of an abstract test.

    Each parameter is drawn uniformly within its range, in table order,
    from a generator seeded with `seed`.

    :param abstract_test: abstract test
    :param ranges: parameter range table (Default: the bundled ranges)
    :param seed: random seed (Default: 0)
    :param test_id: identifier of the concrete test (Default: the trace id of the abstract test)
    :return: concrete test with the same action order
    :raise: MissingRangeException
    :type abstract_test: AbstractTest
    :type ranges: bditestgen.testgen.ranges.ParamRangeTable
    :type seed: int
    :rtype: ConcreteTest
    """
    ranges = default_range_table() if ranges is None else ranges
    # look every action up before drawing, so a missing entry fails the whole test
    lookups = [ranges.lookup(action) for action in abstract_test.actions]

    rng = np.random.default_rng(seed)
    stimuli = []
    for action, (channel, paramranges) in zip(abstract_test.actions, lookups):
        parameters = {}
        duration = 0.0
        for paramrange in paramranges:
            value = paramrange.sample(rng)
            if paramrange.parameter == DURATION:
                duration = value
            else:
                parameters[paramrange.parameter] = value
        stimuli.append(TimedStimulus(str(action), channel, parameters, duration))

    test_id = abstract_test.trace_id if test_id is None else test_id
    return ConcreteTest(tuple(stimuli), int(seed), test_id)


def derive_seeds(seed, n):
    """ Sub-seeds for `n` concretizations; the first one is `seed` itself.

    :param seed: base seed
    :param n: number of seeds
    :return: list of seeds
    :type seed: int
    :type n: int
    :rtype: list
    """
    if n < 1:
        raise ValueError('n must be at least 1')
    children = np.random.SeedSequence(seed).spawn(n - 1)
    return [int(seed)] + [int(child.generate_state(1)[0]) for child in children]


def expand(abstract_test, ranges=None, n=1, seed=0):
    """ Concretize one abstract test `n` times with derived sub-seeds.

    The i-th test is identified as `<trace id>-c<i>`.

    :param abstract_test: abstract test
    :param ranges: parameter range table (Default: the bundled ranges)
    :param n: number of concretizations (Default: 1)
    :param seed: base seed (Default: 0)
    :return: concrete tests
    :type abstract_test: AbstractTest
    :type n: int
    :type seed: int
    :rtype: list
    """
    ranges = default_range_table() if ranges is None else ranges
    tests = []
    for i, subseed in enumerate(derive_seeds(seed, n)):
        test_id = abstract_test.trace_id if n == 1 else abstract_test.trace_id+'-c'+str(i)
        tests.append(concretize(abstract_test, ranges, subseed, test_id))
    logger.debug('Expanded %s into %d concrete tests', abstract_test.trace_id, n)
    return tests


def save_concrete_test(test, filepath):
    """ Write a concrete test: `#` header lines, then one JSON object per stimulus. """
    with open(filepath, 'w') as f:
        f.write('# test: '+test.test_id+'\n')
        f.write('# seed: '+str(test.seed)+'\n')
        for stimulus in test.stimuli:
            f.write(json.dumps(stimulus.to_dict(), sort_keys=True)+'\n')


def load_concrete_test(filepath):
    stimuli, seed, test_id = [], 0, ''
    with open(filepath, 'r') as f:
        for line in textfile_generator(f, linebreak=False):
            if line.startswith('# test:'):
                test_id = line[len('# test:'):].strip()
            elif line.startswith('# seed:'):
                seed = int(line[len('# seed:'):])
            elif len(line) > 0:
                stimuli.append(TimedStimulus.from_dict(json.loads(line)))
    return ConcreteTest(tuple(stimuli), seed, test_id)
