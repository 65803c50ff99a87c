
import logging

import numpy as np

from .clock import SimClock
from .controller import RobotController, CONTROLLER
from .coverage import CodeCoverageMap
from .enactor import enact, HUMAN
from .eventlog import SimEventLog
from .faults import FaultConfig, ControllerConfig


logger = logging.getLogger(__name__)

# simulated seconds
DEFAULT_WALL_LIMIT = 300.0


def run_simulation(test, faults=None, seed=0, wall_limit=DEFAULT_WALL_LIMIT, config=None, return_controller=False):
    """ Drive the robot controller with the human enacting a concrete test.

    The run ends when the controller finishes or times out. Reaching the
    simulated-time cap first flags the log as timed out.

    :param test: concrete test
    :param faults: fault configuration (Default: FaultConfig())
    :param seed: seed of the simulation generator (Default: 0)
    :param wall_limit: simulated-time cap in seconds (Default: 300)
    :param config: controller configuration (Default: ControllerConfig())
    :param return_controller: also return the controller, for inspection (Default: False)
    :return: (event log, code coverage map), plus the controller if asked
    :type test: bditestgen.testgen.concrete.ConcreteTest
    :type faults: FaultConfig
    :type seed: int
    :type wall_limit: float
    :type config: ControllerConfig
    :rtype: tuple
    """
    faults = FaultConfig() if faults is None else faults
    config = ControllerConfig() if config is None else config
    clock = SimClock()
    eventlog = SimEventLog()
    coverage = CodeCoverageMap()
    rng = np.random.default_rng(seed)

    enactor = enact(test, clock, eventlog)
    controller = RobotController(clock, rng, eventlog, coverage, faults, config,
                                 posture_source=lambda: enactor.posture)
    controller.start()

    while not controller.state.terminal and not clock.empty():
        if clock.peek_time() > wall_limit:
            eventlog.timed_out = True
            logger.info('Test %s reached the %.0f s cap in state %s', test.test_id, wall_limit,
                        controller.state.state)
            break
        event = clock.pop()
        if event.target == CONTROLLER:
            controller.step(event)
        elif event.target == HUMAN:
            enactor.handle(event)

    logger.debug('Test %s ends at %.2f in %s, coverage %.1f%%', test.test_id, clock.now,
                 controller.state.state, coverage.percentage())
    if return_controller:
        return eventlog, coverage, controller
    return eventlog, coverage
