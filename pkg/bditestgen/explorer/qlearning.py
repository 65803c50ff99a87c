"""
Q-learning over belief selections, rewarded by the plan coverage of the seeded model.

The table is |B| x |B|: the row is the belief selected last, the column the belief
selected next. An episode builds one subset in episode order (leg count, boredom,
one gpl belief per leg); its first belief is drawn uniformly among the leg counts.
"""

import json
import logging
from dataclasses import dataclass, asdict, fields

import numpy as np
import pandas as pd
from scipy.special import softmax

from .base import StrategyResult, SubsetStrategy, LEARNED
from ..agents.coverage import plan_coverage
from ..agents.mas import DEFAULT_STEP_BUDGET
from ..scenario.builder import build_mas, seed_mas, HUMAN, ROBOT
from ..scenario.vocabulary import vocabulary, LEGS_GROUP, BOREDOM_GROUP
from ..scenario.subsets import BeliefSubset, legal_mask, is_complete
from ..utils.compactmodel_io import CompactIOMachine
from ..utils.misc import read_keyvalue_file
from ..utils.exceptions import EmptyMaskException, ModelNotTrainedException


logger = logging.getLogger(__name__)

PER_SELECTION = 'selection'
PER_EPISODE = 'episode'


@dataclass
class LearningConfig:
    """ Hyperparameters of the coverage-directed Q-learning.

    The learning rate of iteration j is `alpha0 * alpha_decay ** j`.
    """
    gamma: float = 0.1
    alpha0: float = 0.1
    alpha_decay: float = 0.9
    kT: float = 10.0
    reward_max: float = 100.0
    reward_human: float = 5.0
    reward_robot: float = 1.0
    reward_punish: float = -100.0
    near_max: float = 0.8
    epsilon: float = 1e-4
    max_iterations: int = 1000
    seed: int = 0
    run_mode: str = PER_SELECTION
    step_budget: int = DEFAULT_STEP_BUDGET

    def __post_init__(self):
        if not 0 < self.gamma <= 1:
            raise ValueError('gamma must lie in (0, 1]')
        if self.kT <= 0:
            raise ValueError('kT must be positive')
        if self.epsilon <= 0:
            raise ValueError('epsilon must be positive')
        if self.max_iterations < 1:
            raise ValueError('max_iterations must be at least 1')
        if self.run_mode not in (PER_SELECTION, PER_EPISODE):
            raise ValueError('run_mode must be '+PER_SELECTION+' or '+PER_EPISODE)

    def alpha(self, j):
        return self.alpha0 * self.alpha_decay ** j

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, entries):
        types = {f.name: f.type for f in fields(cls)}
        unknown = set(entries) - set(types)
        if len(unknown) > 0:
            raise ValueError('Unknown learning parameters: '+', '.join(sorted(unknown)))
        return cls(**{key: types[key](value) for key, value in entries.items()})

    @classmethod
    def from_file(cls, filepath):
        """ Read a key-value configuration file; missing keys keep their defaults. """
        return cls.from_dict(read_keyvalue_file(filepath))


def boltzmann_probabilities(row, kT, mask):
    """ Boltzmann distribution over the legal beliefs of a Q-table row.

    :param row: action values of the current state row
    :param kT: temperature
    :param mask: legal beliefs
    :return: probabilities, zero for illegal beliefs
    :raise: EmptyMaskException
    :type row: numpy.ndarray
    :type kT: float
    :type mask: numpy.ndarray
    :rtype: numpy.ndarray
    """
    mask = np.asarray(mask, dtype=bool)
    if not mask.any():
        raise EmptyMaskException()
    probs = np.zeros(len(row))
    probs[mask] = softmax(np.asarray(row, dtype=float)[mask] / kT)
    return probs


def boltzmann_select(qtable, state_row, kT, rng, mask):
    """ Sample the next belief index with probability proportional to exp(Q/kT) among legal beliefs.

    :param qtable: Q-table
    :param state_row: row of the last selected belief
    :param kT: temperature
    :param rng: random generator
    :param mask: legal beliefs
    :return: belief index
    :raise: EmptyMaskException
    :type qtable: numpy.ndarray
    :type state_row: int
    :type kT: float
    :type rng: numpy.random.Generator
    :type mask: numpy.ndarray
    :rtype: int
    """
    probs = boltzmann_probabilities(qtable[state_row], kT, mask)
    legal = np.flatnonzero(probs > 0)
    if len(legal) == 1:
        return int(legal[0])
    return int(rng.choice(len(probs), p=probs))


def q_update(qtable, p, b, reward, next_row, alpha, gamma, next_mask=None):
    """ Q(p,b) <- (1-alpha) Q(p,b) + alpha (reward + gamma max_b' Q(next_row,b')), in place.

    :param qtable: Q-table
    :param p: state row
    :param b: selected belief
    :param reward: reward
    :param next_row: row of the next state, None when the episode ends
    :param alpha: learning rate
    :param gamma: discount
    :param next_mask: restrict the max to these beliefs (Default: None, whole row)
    :return: absolute change of the cell
    :type qtable: numpy.ndarray
    :type p: int
    :type b: int
    :type reward: float
    :type next_row: int
    :type alpha: float
    :type gamma: float
    :rtype: float
    """
    future = 0.0
    if next_row is not None:
        values = qtable[next_row]
        if next_mask is not None and np.any(next_mask):
            values = values[np.asarray(next_mask, dtype=bool)]
        future = float(np.max(values))
    old = qtable[p, b]
    qtable[p, b] = (1 - alpha) * old + alpha * (reward + gamma * future)
    return abs(qtable[p, b] - old)


def coverage_reward(coverage, config=None, maximum=None, human=HUMAN, robot=ROBOT):
    """ Reward of a run from the plan coverage of the human and robot agents.

    Both agents at their maximum reachable coverage give the top reward; otherwise
    each agent at or above the near-maximum fraction of its maximum adds its tier,
    and a run where neither agent gets there is punished.

    :param coverage: plan coverage, or a dictionary agent -> fraction
    :param config: learning configuration (Default: defaults)
    :param maximum: agent -> maximum reachable fraction (Default: 1 for both)
    :return: reward
    :type coverage: bditestgen.agents.coverage.PlanCoverage or dict
    :type config: LearningConfig
    :type maximum: dict
    :rtype: float
    """
    config = LearningConfig() if config is None else config
    pcts = coverage.percentages() if hasattr(coverage, 'percentages') else coverage
    maximum = {} if maximum is None else maximum
    human_max, robot_max = maximum.get(human, 1.0), maximum.get(robot, 1.0)
    human_pct, robot_pct = pcts[human], pcts[robot]

    if human_pct >= human_max - 1e-12 and robot_pct >= robot_max - 1e-12:
        return config.reward_max
    reward = 0.0
    if human_pct >= config.near_max * human_max:
        reward += config.reward_human
    if robot_pct >= config.near_max * robot_max:
        reward += config.reward_robot
    if reward == 0.0:
        reward = config.reward_punish
    return reward


def readiness_subsets(vocab=None):
    """ Subsets for every leg count and boredom with each leg all-ready or all-unready. """
    vocab = vocabulary() if vocab is None else vocab
    ready, unready = (1, 1, 1), (0, 0, 0)
    for legs_idx in vocab.group_indices(LEGS_GROUP):
        k = vocab.legs_of(legs_idx)
        for boredom_idx in vocab.group_indices(BOREDOM_GROUP):
            for pattern in range(2 ** k):
                gpls = tuple(vocab.gpl_index(leg, ready if (pattern >> (leg - 1)) & 1 else unready)
                             for leg in range(1, k + 1))
                yield BeliefSubset((legs_idx, boredom_idx) + gpls)


def rank_legal(row, mask, count=2):
    """ Legal beliefs ordered by decreasing value, ties broken by lowest index.

    :param row: action values
    :param mask: legal beliefs
    :param count: number of beliefs returned (Default: 2)
    :return: belief indices
    :type row: numpy.ndarray
    :type mask: numpy.ndarray
    :type count: int
    :rtype: list
    """
    legal = np.flatnonzero(mask)
    ranked = sorted(legal, key=lambda idx: (-row[idx], idx))
    return [int(idx) for idx in ranked[:count]]


def extract_policy(qtable, config=None, vocab=None):
    """ Enumerate the subsets of greedy walks taking the best or second-best legal belief.

    Each walk starts from one of the leg-count beliefs; structurally identical
    subsets are kept once.

    :param qtable: Q-table
    :param config: learning configuration (unused; kept for symmetry with :func:`learn`)
    :param vocab: vocabulary (Default: the scenario vocabulary)
    :return: policy subsets
    :type qtable: numpy.ndarray
    :rtype: StrategyResult
    """
    vocab = vocabulary() if vocab is None else vocab
    subsets, seen = [], set()

    def walk(subset, prev):
        mask = legal_mask(subset, vocab)
        if not mask.any():
            if subset.canonical() not in seen:
                seen.add(subset.canonical())
                subsets.append(subset)
            return
        for b in rank_legal(qtable[prev], mask):
            walk(subset.extended(b), b)

    for first in vocab.group_indices(LEGS_GROUP):
        walk(BeliefSubset((first,)), first)
    return StrategyResult(subsets, [LEARNED] * len(subsets))


class QLearner(CompactIOMachine, SubsetStrategy):
    """ Coverage-directed Q-learning explorer.

    Each iteration is one episode. After every selection (or only at the end of
    the episode, depending on `run_mode`) the model is seeded with the working
    subset and run; the reward comes from the measured plan coverage.
    """
    name = 'rl'
    model_name = 'qlearner'
    prefix = 'qlearner'
    suffices = ('_qtable.npy', '_config.json', '_diagnostics.csv')

    def __init__(self, config=None, mas_factory=build_mas, reward_function=coverage_reward, vocab=None):
        """

        :param config: learning configuration (Default: defaults)
        :param mas_factory: callable returning a fresh, unseeded MAS (Default: build_mas)
        :param reward_function: callable (coverage, config, maximum) -> reward (Default: coverage_reward)
        :param vocab: vocabulary (Default: the scenario vocabulary)
        :type config: LearningConfig
        :type mas_factory: function
        :type reward_function: function
        """
        self.config = LearningConfig() if config is None else config
        self.mas_factory = mas_factory
        self.reward_function = reward_function
        self.vocab = vocabulary() if vocab is None else vocab
        self.qtable = None
        self.diagnostics = None
        self.converged = None
        self.maximum = None
        self.trained = False
        self._coverage_cache = {}

    def coverage_of(self, subset):
        """ Plan-coverage fractions of the model seeded with a (possibly partial) subset.

        Runs are deterministic, so results are cached per subset.
        """
        key = subset.indices
        if key not in self._coverage_cache:
            mas = seed_mas(self.mas_factory(), subset, partial=True, vocab=self.vocab)
            trace = mas.run_to_quiescence(self.config.step_budget)
            self._coverage_cache[key] = plan_coverage(trace, mas).percentages()
        return self._coverage_cache[key]

    def reachable_maximum(self):
        """ Maximum plan coverage per agent over the readiness subsets; cached. """
        if self.maximum is None:
            maximum = {HUMAN: 0.0, ROBOT: 0.0}
            for subset in readiness_subsets(self.vocab):
                pcts = self.coverage_of(subset)
                for agent in maximum:
                    maximum[agent] = max(maximum[agent], pcts[agent])
            self.maximum = maximum
            logger.info('Reachable plan coverage: human %.3f, robot %.3f', maximum[HUMAN], maximum[ROBOT])
        return self.maximum

    def _reward(self, subset):
        return self.reward_function(self.coverage_of(subset), self.config, self.reachable_maximum())

    def learn(self):
        """ Run the learning loop until convergence or the iteration cap.

        :return: policy subsets with learning diagnostics
        :rtype: StrategyResult
        """
        config = self.config
        nbbeliefs = len(self.vocab)
        qtable = np.zeros((nbbeliefs, nbbeliefs))
        rng = np.random.default_rng(config.seed)
        legs_indices = self.vocab.group_indices(LEGS_GROUP)
        self.reachable_maximum()

        history = []
        converged = False
        for j in range(config.max_iterations):
            alpha = config.alpha(j)
            prev = legs_indices[rng.integers(len(legs_indices))]
            subset = BeliefSubset((prev,))
            max_delta, total_reward = 0.0, 0.0
            while True:
                mask = legal_mask(subset, self.vocab)
                if not mask.any():
                    break
                b = boltzmann_select(qtable, prev, config.kT, rng, mask)
                subset = subset.extended(b)
                complete = is_complete(subset, self.vocab)
                if config.run_mode == PER_SELECTION or complete:
                    reward = self._reward(subset)
                else:
                    reward = 0.0
                delta = q_update(qtable, prev, b, reward, None if complete else b,
                                 alpha, config.gamma, legal_mask(subset, self.vocab))
                max_delta = max(max_delta, delta)
                total_reward += reward
                prev = b
            history.append((j, max_delta, total_reward))
            logger.debug('Iteration %d: max |dQ| = %.3g, reward = %.1f', j, max_delta, total_reward)
            if max_delta < config.epsilon:
                converged = True
                break

        self.qtable = qtable
        self.diagnostics = pd.DataFrame(history, columns=['iteration', 'max_delta_q', 'reward'])
        self.converged = converged
        self.trained = True
        if converged:
            logger.info('Q-learning converged after %d iterations', len(history))
        else:
            logger.warning('Q-learning did not converge within %d iterations', config.max_iterations)
        return self.policy()

    def policy(self):
        """ Extract the policy subsets of the learned table.

        :return: policy subsets with learning diagnostics
        :raise: ModelNotTrainedException
        :rtype: StrategyResult
        """
        if not self.trained:
            raise ModelNotTrainedException()
        result = extract_policy(self.qtable, self.config, self.vocab)
        result.diagnostics = self.diagnostics
        result.converged = self.converged
        return result

    def generate(self):
        return self.learn() if not self.trained else self.policy()

    def savemodel(self, nameprefix):
        """ Save the Q-table, configuration and diagnostics.

        :param nameprefix: prefix of the output files
        :raise: ModelNotTrainedException
        :type nameprefix: str
        """
        if not self.trained:
            raise ModelNotTrainedException()
        np.save(nameprefix+'_qtable.npy', self.qtable)
        with open(nameprefix+'_config.json', 'w') as f:
            json.dump({'config': self.config.to_dict(), 'converged': self.converged,
                       'maximum': self.maximum}, f, sort_keys=True)
        self.diagnostics.to_csv(nameprefix+'_diagnostics.csv', index=False)

    def loadmodel(self, nameprefix):
        """ Load the Q-table, configuration and diagnostics.

        :param nameprefix: prefix of the input files
        :return: this learner
        :type nameprefix: str
        :rtype: QLearner
        """
        self.qtable = np.load(nameprefix+'_qtable.npy')
        with open(nameprefix+'_config.json', 'r') as f:
            info = json.load(f)
        self.config = LearningConfig(**info['config'])
        self.converged = info['converged']
        self.maximum = info['maximum']
        self.diagnostics = pd.read_csv(nameprefix+'_diagnostics.csv')
        self.trained = True
        return self

    def manifest_extra(self):
        return {'converged': self.converged, 'actions': len(self.vocab)}


def learn(mas_factory=build_mas, config=None):
    """ Learn a belief-selection policy on the model produced by `mas_factory`.

    :param mas_factory: callable returning a fresh, unseeded MAS (Default: build_mas)
    :param config: learning configuration (Default: defaults)
    :return: policy subsets with diagnostics; `unconverged` is set when the cap was hit
    :type mas_factory: function
    :type config: LearningConfig
    :rtype: StrategyResult
    """
    return QLearner(config, mas_factory).learn()


def load_qlearner(filename, mas_factory=build_mas):
    """ Load a learner saved with :meth:`QLearner.save_compact_model`.

    :param filename: path of the compact model file
    :param mas_factory: callable returning a fresh, unseeded MAS (Default: build_mas)
    :return: trained learner
    :type filename: str
    :rtype: QLearner
    """
    learner = QLearner(mas_factory=mas_factory)
    learner.load_compact_model(filename)
    return learner
