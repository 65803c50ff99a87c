
import re
import itertools
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from .vocabulary import vocabulary, LEGS_GROUP, BOREDOM_GROUP, MAX_LEGS, gpl_group
from ..utils.exceptions import InvalidBeliefSubsetException


BELIEF_TOKEN = re.compile(r'[A-Za-z_]\w*(?:\([^)]*\))?')


@dataclass(frozen=True)
class BeliefSubset:
    """ Ordered selection of vocabulary beliefs, stored as vocabulary indices. """
    indices: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'indices', tuple(int(i) for i in self.indices))

    def beliefs(self, vocab=None):
        vocab = vocabulary() if vocab is None else vocab
        return [vocab.belief_at(i) for i in self.indices]

    def extended(self, idx):
        return BeliefSubset(self.indices + (int(idx),))

    def canonical(self):
        """ Order-independent identity, used to deduplicate subsets. """
        return tuple(sorted(self.indices))

    def __len__(self):
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)


def _legs_requested(subset, vocab):
    legs = [i for i in subset.indices if vocab.group_of(i) == LEGS_GROUP]
    return vocab.legs_of(legs[0]) if len(legs) == 1 else None


def validate_subset(subset, vocab=None):
    """ Check the structural validity of a complete subset.

    Exactly one leg-count belief legs_requested(k), exactly one of bored/not_bored,
    and exactly one gpl(i,.,.,.) for every leg i <= k and none for i > k.

    :param subset: subset to check
    :param vocab: vocabulary (Default: the scenario vocabulary)
    :raise: InvalidBeliefSubsetException
    :type subset: BeliefSubset
    :type vocab: bditestgen.scenario.vocabulary.BeliefVocabulary
    """
    vocab = vocabulary() if vocab is None else vocab
    for i in subset.indices:
        if i < 0 or i >= len(vocab):
            raise InvalidBeliefSubsetException('index '+str(i)+' out of range')
    if len(set(subset.indices)) != len(subset.indices):
        raise InvalidBeliefSubsetException('repeated belief')
    groups = [vocab.group_of(i) for i in subset.indices]
    if groups.count(LEGS_GROUP) != 1:
        raise InvalidBeliefSubsetException('expected exactly one legs_requested belief, got '
                                           + str(groups.count(LEGS_GROUP)))
    if groups.count(BOREDOM_GROUP) != 1:
        raise InvalidBeliefSubsetException('expected exactly one of bored/not_bored, got '
                                           + str(groups.count(BOREDOM_GROUP)))
    k = _legs_requested(subset, vocab)
    for leg in range(1, MAX_LEGS + 1):
        count = groups.count(gpl_group(leg))
        expected = 1 if leg <= k else 0
        if count != expected:
            raise InvalidBeliefSubsetException('expected '+str(expected)+' gpl belief(s) for leg '
                                               + str(leg)+', got '+str(count))


def is_valid(subset, vocab=None):
    try:
        validate_subset(subset, vocab)
    except InvalidBeliefSubsetException:
        return False
    return True


def next_group(subset, vocab=None):
    """ Group of the next selection when a subset is built in episode order.

    Episode order is: leg count, boredom, then one gpl group per requested leg.

    :param subset: prefix built so far
    :param vocab: vocabulary (Default: the scenario vocabulary)
    :return: group name, or None when the subset is complete
    :type subset: BeliefSubset
    :rtype: str
    """
    vocab = vocabulary() if vocab is None else vocab
    position = len(subset)
    if position == 0:
        return LEGS_GROUP
    if position == 1:
        return BOREDOM_GROUP
    k = vocab.legs_of(subset.indices[0])
    leg = position - 1
    return gpl_group(leg) if leg <= k else None


def is_prefix_legal(subset, vocab=None):
    """ Whether every belief of the subset sits at a legal episode position. """
    vocab = vocabulary() if vocab is None else vocab
    prefix = BeliefSubset(())
    for idx in subset.indices:
        group = next_group(prefix, vocab)
        if group is None or vocab.group_of(idx) != group:
            return False
        prefix = prefix.extended(idx)
    return True


def is_complete(subset, vocab=None):
    return len(subset) > 0 and next_group(subset, vocab) is None


def legal_mask(subset, vocab=None):
    """ Boolean mask of the beliefs that may extend the subset.

    :param subset: prefix built in episode order
    :param vocab: vocabulary (Default: the scenario vocabulary)
    :return: mask over the vocabulary; all False when the subset is complete
    :type subset: BeliefSubset
    :rtype: numpy.ndarray
    """
    vocab = vocabulary() if vocab is None else vocab
    mask = np.zeros(len(vocab), dtype=bool)
    group = next_group(subset, vocab)
    if group is not None:
        mask[vocab.group_indices(group)] = True
    return mask


def count_valid_subsets(max_legs=MAX_LEGS):
    """ Number of structurally valid subsets: sum over k of 2 * 8^k. """
    return sum(2 * 8 ** k for k in range(1, max_legs + 1))


def enumerate_valid_subsets(max_legs=MAX_LEGS, legs=None, vocab=None):
    """ Generate every structurally valid subset in episode order.

    :param max_legs: largest leg count to enumerate (Default: 4)
    :param legs: restrict to this leg count (Default: None)
    :param vocab: vocabulary (Default: the scenario vocabulary)
    :return: generator of subsets
    :type max_legs: int
    :type legs: int
    :rtype: generator
    """
    vocab = vocabulary() if vocab is None else vocab
    for legs_idx in vocab.group_indices(LEGS_GROUP):
        k = vocab.legs_of(legs_idx)
        if k > max_legs or (legs is not None and k != legs):
            continue
        for boredom_idx in vocab.group_indices(BOREDOM_GROUP):
            gpl_choices = [vocab.group_indices(gpl_group(leg)) for leg in range(1, k + 1)]
            for gpls in itertools.product(*gpl_choices):
                yield BeliefSubset((legs_idx, boredom_idx) + tuple(gpls))


def parse_subset(line, vocab=None):
    """ Parse a subset written as comma-separated belief names.

    :param line: e.g. 'legs_requested(1), not_bored, gpl(1,1,1,1)'
    :param vocab: vocabulary (Default: the scenario vocabulary)
    :return: subset in the written order
    :raise: UnknownBeliefException
    :type line: str
    :rtype: BeliefSubset
    """
    vocab = vocabulary() if vocab is None else vocab
    names = BELIEF_TOKEN.findall(line)
    return BeliefSubset(tuple(vocab.index(name) for name in names))


def format_subset(subset, vocab=None):
    return ', '.join(str(b) for b in subset.beliefs(vocab))
