
import os
from dataclasses import dataclass
from functools import lru_cache

import pandas as pd

from ..agents.beliefs import Belief
from ..agents.parser import parse_belief
from ..utils.exceptions import UnknownBeliefException


ASSET_DIR = os.path.join(os.path.dirname(__file__), 'assets')

LEGS_GROUP = 'legs'
BOREDOM_GROUP = 'boredom'
MAX_LEGS = 4


def gpl_group(leg):
    return 'gpl_leg'+str(leg)


@dataclass(frozen=True)
class SensorTriple:
    """ Gaze, pressure and location readings; 1 means the human is ready on that channel. """
    g: int
    p: int
    l: int

    def __post_init__(self):
        for value in (self.g, self.p, self.l):
            if value not in (0, 1):
                raise ValueError('Sensor channels are binary')

    @property
    def ready(self):
        return self.g == 1 and self.p == 1 and self.l == 1

    def as_tuple(self):
        return self.g, self.p, self.l

    def __str__(self):
        return '(%d,%d,%d)' % self.as_tuple()


class BeliefVocabulary:
    """ Ordered set of the controllable beliefs, partitioned into groups.

    The order defines the Q-table indexing.
    """
    def __init__(self, beliefs, groups):
        """

        :param beliefs: beliefs in index order
        :param groups: group name of each belief
        :type beliefs: list
        :type groups: list
        """
        if len(beliefs) != len(groups):
            raise ValueError('One group per belief is required')
        self.beliefs = tuple(beliefs)
        self.groups = tuple(groups)
        self._index = {}
        for idx, belief in enumerate(self.beliefs):
            if belief in self._index:
                raise ValueError('Duplicate belief: '+str(belief))
            self._index[belief] = idx

    def __len__(self):
        return len(self.beliefs)

    def __iter__(self):
        return iter(self.beliefs)

    def belief_at(self, idx):
        return self.beliefs[idx]

    def index(self, belief):
        """ Index of a belief, given as a belief or its text.

        :param belief: belief or belief text, e.g. 'gpl(1,1,1,1)'
        :return: index in the vocabulary
        :raise: UnknownBeliefException
        :type belief: Belief or str
        :rtype: int
        """
        name = belief
        if isinstance(belief, str):
            try:
                belief = parse_belief(belief.strip())
            except Exception:
                raise UnknownBeliefException(name)
        try:
            return self._index[belief]
        except KeyError:
            raise UnknownBeliefException(str(name))

    def group_of(self, idx):
        return self.groups[idx]

    def group_indices(self, group):
        return [idx for idx, g in enumerate(self.groups) if g == group]

    def group_names(self):
        return list(dict.fromkeys(self.groups))

    def group_sizes(self):
        return {group: len(self.group_indices(group)) for group in self.group_names()}

    def legs_of(self, idx):
        """ Number of legs requested by a leg-count belief. """
        return self.beliefs[idx].args[0]

    def gpl_index(self, leg, triple):
        return self._index[Belief('gpl', (leg,) + tuple(triple))]

    def triple_of(self, idx):
        """ Sensor triple of a gpl belief. """
        return SensorTriple(*self.beliefs[idx].args[1:])


def load_vocabulary(filepath):
    """ Load a belief vocabulary from a manifest CSV with columns `index`, `belief`, `group`.

    :param filepath: path of the manifest
    :return: vocabulary
    :type filepath: str
    :rtype: BeliefVocabulary
    """
    manifest = pd.read_csv(filepath).sort_values('index')
    beliefs = [parse_belief(text) for text in manifest['belief']]
    return BeliefVocabulary(beliefs, list(manifest['group']))


@lru_cache(maxsize=1)
def vocabulary():
    """ Return the 38-belief vocabulary of the table-assembly scenario.

    Order: legs_requested(1..4), bored, not_bored, then gpl(leg,g,p,l) for
    legs 1 to 4 with (g,p,l) counting from (0,0,0) to (1,1,1).

    :return: vocabulary
    :rtype: BeliefVocabulary
    """
    return load_vocabulary(os.path.join(ASSET_DIR, 'groups.csv'))
