
import logging

import numpy as np

from ..testgen.abstract import AbstractTest, COMMAND_ALPHABET


logger = logging.getLogger(__name__)

MAX_LENGTH = 12


def baseline_abstract_tests(n, seed, alphabet=COMMAND_ALPHABET, max_length=MAX_LENGTH):
    """ Abstract tests sampled from the command alphabet, without the agent model.

    Lengths are uniform in 1..`max_length`; each command is drawn uniformly.

    :param n: number of tests
    :param seed: random seed
    :param alphabet: commands to draw from (Default: the ten human commands)
    :param max_length: longest test (Default: 12)
    :return: abstract tests with ids `baseline-0000`, ...
    :type n: int
    :type seed: int
    :rtype: list
    """
    if n < 1:
        raise ValueError('n must be at least 1')
    rng = np.random.default_rng(seed)
    tests = []
    for i in range(n):
        length = int(rng.integers(1, max_length + 1))
        actions = tuple(alphabet[k] for k in rng.integers(len(alphabet), size=length))
        tests.append(AbstractTest(actions, None, 'baseline-%04d' % i))
    logger.info('Sampled %d baseline tests with seed %s', n, seed)
    return tests
