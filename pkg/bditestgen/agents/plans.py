
from dataclasses import dataclass
from typing import Optional, Tuple

from .beliefs import Belief, Goal, TriggerEvent


ADD_BELIEF = 'add-belief'
REMOVE_BELIEF = 'remove-belief'
CREATE_GOAL = 'create-goal'
SEND_BELIEF = 'send-belief'
EMIT = 'emit'
ADVANCE_TIME = 'advance-time'
PRINT = 'print'

ACTION_KINDS = (ADD_BELIEF, REMOVE_BELIEF, CREATE_GOAL, SEND_BELIEF, EMIT, ADVANCE_TIME, PRINT)


@dataclass(frozen=True)
class Literal:
    """ A belief literal of a plan context; negated literals use negation as failure. """
    belief: Belief
    negated: bool = False

    def holds(self, beliefbase):
        present = beliefbase.holds(self.belief)
        return not present if self.negated else present

    def __str__(self):
        return ('not ' if self.negated else '')+str(self.belief)


@dataclass(frozen=True)
class Action:
    """ One step of a plan body. Only the fields relevant to `kind` are set. """
    kind: str
    belief: Optional[Belief] = None
    goal: Optional[Goal] = None
    target: Optional[str] = None
    label: Optional[str] = None
    args: Tuple = ()
    duration: Optional[float] = None
    text: Optional[str] = None

    def __post_init__(self):
        if self.kind not in ACTION_KINDS:
            raise ValueError('Unknown action kind: '+str(self.kind))
        if self.kind == ADVANCE_TIME and not (self.duration is not None and self.duration > 0):
            raise ValueError('advance-time needs a positive duration')

    def __str__(self):
        if self.kind == ADD_BELIEF:
            return '+'+str(self.belief)
        if self.kind == REMOVE_BELIEF:
            return '-'+str(self.belief)
        if self.kind == CREATE_GOAL:
            return str(self.goal)
        if self.kind == SEND_BELIEF:
            return '.send('+self.target+', tell, '+str(self.belief)+')'
        if self.kind == EMIT:
            return '.emit('+', '.join([self.label]+[str(a) for a in self.args])+')'
        if self.kind == ADVANCE_TIME:
            return 'add_time('+format_number(self.duration)+')'
        return '.print("'+self.text+'")'


def format_number(value):
    if float(value).is_integer():
        return str(int(value))
    return repr(float(value))


def add_belief(belief):
    return Action(ADD_BELIEF, belief=belief)


def remove_belief(belief):
    return Action(REMOVE_BELIEF, belief=belief)


def create_goal(name):
    return Action(CREATE_GOAL, goal=Goal(name))


def send_belief(target, belief):
    return Action(SEND_BELIEF, belief=belief, target=target)


def emit(label, *args):
    return Action(EMIT, label=label, args=tuple(args))


def advance_time(duration):
    return Action(ADVANCE_TIME, duration=float(duration))


def print_text(text):
    return Action(PRINT, text=text)


@dataclass(frozen=True)
class Plan:
    """ Guarded plan rule: trigger, context conjunction, and body.

    An empty context stands for `true`.
    """
    id: str
    trigger: TriggerEvent
    context: Tuple[Literal, ...]
    body: Tuple[Action, ...]

    def __post_init__(self):
        if len(self.body) == 0:
            raise ValueError('Plan '+self.id+' has an empty body')
        object.__setattr__(self, 'context', tuple(self.context))
        object.__setattr__(self, 'body', tuple(self.body))

    def is_relevant(self, event):
        return self.trigger.matches(event)

    def context_holds(self, beliefbase):
        return all(literal.holds(beliefbase) for literal in self.context)

    def is_applicable(self, event, beliefbase):
        return self.is_relevant(event) and self.context_holds(beliefbase)

    def __str__(self):
        context = ' & '.join(str(l) for l in self.context) if len(self.context) > 0 else 'true'
        return str(self.trigger)+' : '+context+' <- '+'; '.join(str(a) for a in self.body)+'.'
