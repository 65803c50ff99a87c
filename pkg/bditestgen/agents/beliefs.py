
from dataclasses import dataclass, field
from typing import Tuple, Union

Atom = Union[str, int]

# matches any single atom
WILDCARD = '_'

ADD = '+'
DELETE = '-'


def format_atom(atom):
    return str(atom)


@dataclass(frozen=True)
class Belief:
    """ A ground belief (or a pattern, when some arguments are wildcards).

    Two beliefs are equal iff functor and arguments are equal; the source
    annotation is kept for provenance only.
    """
    functor: str
    args: Tuple[Atom, ...] = ()
    source: str = field(default='self', compare=False)

    def __post_init__(self):
        if len(self.functor) == 0:
            raise ValueError('Belief functor must be non-empty')
        object.__setattr__(self, 'args', tuple(self.args))

    @property
    def arity(self):
        return len(self.args)

    @property
    def key(self):
        return self.functor, len(self.args)

    def is_ground(self):
        return WILDCARD not in self.args

    def matches(self, other):
        """ Whether this pattern matches the given belief.

        :param other: ground belief
        :return: True if functor and arity agree and every non-wildcard argument is equal
        :type other: Belief
        :rtype: bool
        """
        if self.key != other.key:
            return False
        return all(a == WILDCARD or a == b for a, b in zip(self.args, other.args))

    def with_source(self, source):
        return Belief(self.functor, self.args, source)

    def __str__(self):
        if len(self.args) == 0:
            return self.functor
        return self.functor+'('+','.join(format_atom(a) for a in self.args)+')'


@dataclass(frozen=True)
class Goal:
    """ An achievement goal. """
    name: str
    kind: str = 'achievement'

    def __post_init__(self):
        if len(self.name) == 0:
            raise ValueError('Goal name must be non-empty')

    def __str__(self):
        return '!'+self.name


@dataclass(frozen=True)
class TriggerEvent:
    """ Addition or deletion of a belief, or addition of a goal.

    Used both for queued events (ground payload) and plan triggers (payload may hold wildcards).
    """
    polarity: str
    payload: Union[Belief, Goal]

    def __post_init__(self):
        if self.polarity not in (ADD, DELETE):
            raise ValueError('Unknown polarity: '+str(self.polarity))
        if self.polarity == DELETE and isinstance(self.payload, Goal):
            raise ValueError('Goal events can only be additions')

    @property
    def is_goal(self):
        return isinstance(self.payload, Goal)

    def matches(self, event):
        """ Whether this trigger pattern is relevant for the given event.

        :param event: queued event
        :return: True if polarity, payload kind and payload agree
        :type event: TriggerEvent
        :rtype: bool
        """
        if self.polarity != event.polarity or self.is_goal != event.is_goal:
            return False
        if self.is_goal:
            return self.payload.name == event.payload.name
        return self.payload.matches(event.payload)

    def __str__(self):
        return self.polarity+str(self.payload)


def add_belief_event(belief):
    return TriggerEvent(ADD, belief)


def delete_belief_event(belief):
    return TriggerEvent(DELETE, belief)


def add_goal_event(goal):
    if isinstance(goal, str):
        goal = Goal(goal)
    return TriggerEvent(ADD, goal)


class BeliefBase:
    """ Mutable set of ground beliefs indexed by functor and arity. """
    def __init__(self, beliefs=()):
        self._index = {}
        for belief in beliefs:
            self.add(belief)

    def add(self, belief):
        """ Add a belief.

        :param belief: ground belief
        :return: True if the belief was not present before
        :type belief: Belief
        :rtype: bool
        """
        bucket = self._index.setdefault(belief.key, {})
        if belief in bucket:
            return False
        bucket[belief] = belief
        return True

    def remove(self, pattern):
        """ Remove every belief matching the pattern.

        :param pattern: belief, possibly with wildcards
        :return: removed beliefs
        :type pattern: Belief
        :rtype: list
        """
        bucket = self._index.get(pattern.key, {})
        removed = [b for b in bucket.values() if pattern.matches(b)]
        for belief in removed:
            del bucket[belief]
        return removed

    def holds(self, pattern):
        bucket = self._index.get(pattern.key, {})
        if pattern.is_ground():
            return pattern in bucket
        return any(pattern.matches(b) for b in bucket.values())

    def snapshot(self):
        """ Return the beliefs as a sorted tuple of their string forms. """
        return tuple(sorted(str(b) for bucket in self._index.values() for b in bucket.values()))

    def __contains__(self, belief):
        return self.holds(belief)

    def __iter__(self):
        for bucket in self._index.values():
            yield from bucket.values()

    def __len__(self):
        return sum(len(bucket) for bucket in self._index.values())
