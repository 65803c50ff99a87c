
import logging

import numpy as np

from .base import StrategyResult, SubsetStrategy, RANDOM
from ..scenario.vocabulary import vocabulary, LEGS_GROUP, BOREDOM_GROUP, gpl_group
from ..scenario.subsets import BeliefSubset


logger = logging.getLogger(__name__)


def sample_subset(rng, vocab=None, legs=None):
    """ Draw one subset group by group: leg count, boredom, then one gpl belief per leg.

    :param rng: random generator
    :param vocab: vocabulary (Default: the scenario vocabulary)
    :param legs: fix the leg count instead of drawing it (Default: None)
    :return: structurally valid subset
    :type rng: numpy.random.Generator
    :type legs: int
    :rtype: bditestgen.scenario.subsets.BeliefSubset
    """
    vocab = vocabulary() if vocab is None else vocab
    legs_choices = vocab.group_indices(LEGS_GROUP)
    if legs is None:
        legs_idx = legs_choices[rng.integers(len(legs_choices))]
    else:
        legs_idx = [i for i in legs_choices if vocab.legs_of(i) == legs][0]
    boredom_choices = vocab.group_indices(BOREDOM_GROUP)
    indices = [legs_idx, boredom_choices[rng.integers(len(boredom_choices))]]
    for leg in range(1, vocab.legs_of(legs_idx) + 1):
        gpl_choices = vocab.group_indices(gpl_group(leg))
        indices.append(gpl_choices[rng.integers(len(gpl_choices))])
    return BeliefSubset(tuple(indices))


def random_subsets(n, seed, vocab=None, legs=None):
    """ Sample `n` structurally valid subsets with a seeded generator.

    :param n: number of subsets
    :param seed: random seed
    :param vocab: vocabulary (Default: the scenario vocabulary)
    :param legs: fix the leg count (Default: None, drawn uniformly)
    :return: subsets
    :type n: int
    :type seed: int
    :rtype: StrategyResult
    """
    if n <= 0:
        raise ValueError('n must be positive')
    rng = np.random.default_rng(seed)
    subsets = [sample_subset(rng, vocab, legs) for _ in range(n)]
    logger.info('Sampled %d subsets with seed %s', n, seed)
    return StrategyResult(subsets, [RANDOM] * n)


class GroupedRandomStrategy(SubsetStrategy):
    name = 'random'

    def __init__(self, n, seed):
        self.n = n
        self.seed = seed

    def generate(self):
        return random_subsets(self.n, self.seed)
