
from dataclasses import dataclass, replace
from typing import Optional

from ..scenario.vocabulary import SensorTriple


# physical limits under which a channel reads "ready"
GAZE_MAX_ANGLE = 40.0
GAZE_MAX_DISTANCE = 0.6
GAZE_MAX_OFFSET = 0.2
PRESSURE_MIN_FORCE = 5.0
LOCATION_MAX_DISTANCE = 0.3


@dataclass(frozen=True)
class HumanPosture:
    """ What the simulated human is currently doing; None until a channel is first set. """
    gaze: Optional[dict] = None
    pressure: Optional[dict] = None
    hand_distance: Optional[float] = None

    def with_stimulus(self, channel, parameters):
        if channel == 'gaze':
            return replace(self, gaze=dict(parameters))
        if channel == 'pressure':
            return replace(self, pressure=dict(parameters))
        if channel == 'location':
            return replace(self, hand_distance=parameters['hand_distance'])
        return self

    def true_triple(self):
        """ Readings of perfect sensors. Channels never set read 0. """
        g = int(self.gaze is not None
                and self.gaze.get('angle', 90.0) < GAZE_MAX_ANGLE
                and self.gaze.get('distance', 1.0) <= GAZE_MAX_DISTANCE
                and self.gaze.get('offset', 1.0) <= GAZE_MAX_OFFSET)
        p = int(self.pressure is not None and self.pressure.get('force', 0.0) >= PRESSURE_MIN_FORCE)
        l = int(self.hand_distance is not None and self.hand_distance <= LOCATION_MAX_DISTANCE)
        return SensorTriple(g, p, l)


def sensor_read(true_triple, faults, rng):
    """ Read the three channels, each flipped independently with its error rate.

    Three uniform draws are consumed whatever the rates.

    :param true_triple: actual readiness of the human
    :param faults: fault configuration
    :param rng: random generator
    :return: sensed triple
    :type true_triple: bditestgen.scenario.vocabulary.SensorTriple
    :type faults: bditestgen.sim.faults.FaultConfig
    :type rng: numpy.random.Generator
    :rtype: bditestgen.scenario.vocabulary.SensorTriple
    """
    draws = rng.random(3)
    sensed = [value ^ int(draw < rate)
              for value, draw, rate in zip(true_triple.as_tuple(), draws, faults.channel_errors)]
    return SensorTriple(*sensed)
