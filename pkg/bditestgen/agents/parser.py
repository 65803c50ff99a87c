"""
Parser of the plan-rule language, one agent per source text.

::

    // comment
    leg.                                   initial belief
    !reset.                                initial goal
    +!waiting : not leg <- .print("Waiting"); !waiting.
    +reading(1,1,1) : true <- .send(robot, tell, human_ready).

Plans may span several lines; every statement ends with a period.
"""

import re
from dataclasses import dataclass

from .beliefs import Belief, Goal, TriggerEvent, ADD, DELETE, WILDCARD
from .plans import Literal, Plan
from .plans import add_belief, remove_belief, create_goal, send_belief, emit, advance_time, print_text
from .agent import Agent
from ..utils.exceptions import PlanSyntaxException


TOKEN_SPEC = [
    ('COMMENT', r'//[^\n]*'),
    ('STRING', r'"[^"\n]*"'),
    ('NUMBER', r'-?\d+(?:\.\d+)?'),
    ('INTERNAL', r'\.[A-Za-z_]\w*'),
    ('ARROW', r'<-'),
    ('IDENT', r'[A-Za-z_]\w*'),
    ('SYMBOL', r'[.,()\[\]:;&+\-!]'),
    ('NEWLINE', r'\n'),
    ('SKIP', r'[ \t\r]+'),
    ('MISMATCH', r'.'),
]
TOKEN_REGEX = re.compile('|'.join('(?P<%s>%s)' % pair for pair in TOKEN_SPEC))


@dataclass(frozen=True)
class Token:
    kind: str
    value: str
    line: int
    column: int


def tokenize(text):
    """ Split plan-rule source text into tokens, dropping whitespace and comments.

    :param text: source text
    :return: list of tokens, terminated by an EOF token
    :raise: PlanSyntaxException
    :type text: str
    :rtype: list
    """
    tokens = []
    line, line_start = 1, 0
    for mo in TOKEN_REGEX.finditer(text):
        kind, value = mo.lastgroup, mo.group()
        column = mo.start() - line_start + 1
        if kind == 'NEWLINE':
            line += 1
            line_start = mo.end()
        elif kind in ('SKIP', 'COMMENT'):
            continue
        elif kind == 'MISMATCH':
            raise PlanSyntaxException(line, column, 'unexpected character '+repr(value))
        else:
            tokens.append(Token(kind, value, line, column))
    tokens.append(Token('EOF', '', line, len(text) - line_start + 1))
    return tokens


class PlanParser:
    """ Recursive-descent parser producing an :class:`Agent`. """
    def __init__(self, text, name):
        self.tokens = tokenize(text)
        self.pos = 0
        self.name = name

    # token helpers

    def peek(self, offset=0):
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def advance(self):
        token = self.peek()
        self.pos += 1
        return token

    def error(self, reason, token=None):
        token = self.peek() if token is None else token
        found = 'end of input' if token.kind == 'EOF' else repr(token.value)
        return PlanSyntaxException(token.line, token.column, reason+' (found '+found+')')

    def at(self, kind, value=None):
        token = self.peek()
        return token.kind == kind and (value is None or token.value == value)

    def expect(self, kind, value=None, what=None):
        if not self.at(kind, value):
            raise self.error('expected '+(what or value or kind))
        return self.advance()

    def expect_symbol(self, value):
        return self.expect('SYMBOL', value)

    # grammar

    def parse(self):
        beliefs, goals, plans = [], [], []
        while not self.at('EOF'):
            if self.at('SYMBOL', '+') or self.at('SYMBOL', '-'):
                plans.append(self.parse_plan(len(plans) + 1))
            elif self.at('SYMBOL', '!'):
                self.advance()
                goals.append(Goal(self.expect('IDENT', what='goal name').value))
                self.expect_symbol('.')
            elif self.at('IDENT'):
                token = self.peek()
                belief = self.parse_belief()
                if not belief.is_ground():
                    raise self.error('initial beliefs must be ground', token)
                beliefs.append(belief)
                self.expect_symbol('.')
            else:
                raise self.error('expected a belief, a goal or a plan')
        return Agent(self.name, beliefs, goals, plans)

    def parse_plan(self, ordinal):
        trigger = self.parse_trigger()
        context = ()
        if self.at('SYMBOL', ':'):
            self.advance()
            context = self.parse_context()
        self.expect('ARROW', what='<-')
        body = [self.parse_action()]
        while self.at('SYMBOL', ';'):
            self.advance()
            body.append(self.parse_action())
        self.expect_symbol('.')
        return Plan(self.name+'/'+str(ordinal), trigger, tuple(context), tuple(body))

    def parse_trigger(self):
        polarity = self.advance().value
        if self.at('SYMBOL', '!'):
            token = self.advance()
            if polarity == DELETE:
                raise self.error('goal deletion triggers are not supported', token)
            return TriggerEvent(ADD, Goal(self.expect('IDENT', what='goal name').value))
        return TriggerEvent(polarity, self.parse_belief())

    def parse_context(self):
        if self.at('IDENT', 'true'):
            self.advance()
            return []
        literals = [self.parse_literal()]
        while self.at('SYMBOL', '&'):
            self.advance()
            literals.append(self.parse_literal())
        return literals

    def parse_literal(self):
        negated = False
        if self.at('IDENT', 'not') and self.peek(1).kind == 'IDENT':
            self.advance()
            negated = True
        return Literal(self.parse_belief(), negated)

    def parse_belief(self):
        functor = self.expect('IDENT', what='belief').value
        args = []
        if self.at('SYMBOL', '('):
            self.advance()
            args.append(self.parse_atom())
            while self.at('SYMBOL', ','):
                self.advance()
                args.append(self.parse_atom())
            self.expect_symbol(')')
        source = 'self'
        if self.at('SYMBOL', '['):
            self.advance()
            self.expect('IDENT', 'source')
            self.expect_symbol('(')
            source = self.expect('IDENT', what='agent name').value
            self.expect_symbol(')')
            self.expect_symbol(']')
        return Belief(functor, tuple(args), source)

    def parse_atom(self):
        token = self.peek()
        if token.kind == 'IDENT':
            self.advance()
            return WILDCARD if token.value == WILDCARD else token.value
        if token.kind == 'NUMBER':
            self.advance()
            if '.' in token.value:
                raise self.error('atoms must be identifiers or integers', token)
            return int(token.value)
        raise self.error('expected an atom')

    def parse_number(self):
        return float(self.expect('NUMBER', what='number').value)

    def parse_action(self):
        token = self.peek()
        if self.at('SYMBOL', '+'):
            self.advance()
            return add_belief(self.parse_belief())
        if self.at('SYMBOL', '-'):
            self.advance()
            return remove_belief(self.parse_belief())
        if self.at('SYMBOL', '!'):
            self.advance()
            return create_goal(self.expect('IDENT', what='goal name').value)
        if self.at('IDENT', 'add_time'):
            self.advance()
            self.expect_symbol('(')
            duration_token = self.peek()
            duration = self.parse_number()
            if duration <= 0:
                raise self.error('add_time needs a positive duration', duration_token)
            self.expect_symbol(')')
            return advance_time(duration)
        if token.kind == 'INTERNAL':
            self.advance()
            self.expect_symbol('(')
            if token.value == '.send':
                target = self.expect('IDENT', what='agent name').value
                self.expect_symbol(',')
                self.expect('IDENT', 'tell')
                self.expect_symbol(',')
                belief = self.parse_belief()
                action = send_belief(target, belief)
            elif token.value == '.emit':
                args = [self.parse_atom()]
                while self.at('SYMBOL', ','):
                    self.advance()
                    args.append(self.parse_atom())
                if not isinstance(args[0], str):
                    raise self.error('emit label must be an identifier', token)
                action = emit(args[0], *args[1:])
            elif token.value == '.print':
                action = print_text(self.expect('STRING', what='string').value[1:-1])
            else:
                raise self.error('unknown internal action '+token.value, token)
            self.expect_symbol(')')
            return action
        raise self.error('expected an action')


def parse_plans(text, name='agent'):
    """ Parse the source text of one agent.

    Plans keep their source order; their ids are the agent name followed by
    the 1-based ordinal, e.g. `robot/3`.

    :param text: plan-rule source text
    :param name: agent name (Default: 'agent')
    :return: agent with its initial beliefs, goals and plans
    :raise: PlanSyntaxException
    :type text: str
    :type name: str
    :rtype: Agent
    """
    return PlanParser(text, name).parse()


def parse_belief(text):
    """ Parse a single belief such as `gpl(1,0,1,1)`.

    :param text: belief text
    :return: belief
    :raise: PlanSyntaxException
    :type text: str
    :rtype: Belief
    """
    parser = PlanParser(text, 'belief')
    belief = parser.parse_belief()
    parser.expect('EOF', what='end of belief')
    return belief


def load_agent(filepath, name):
    """ Parse an agent from a plan file.

    :param filepath: path of the `.asl` file
    :param name: agent name
    :return: agent
    :type filepath: str
    :type name: str
    :rtype: Agent
    """
    with open(filepath, 'r') as f:
        return parse_plans(f.read(), name)
