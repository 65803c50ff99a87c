
import os
import sys
import logging
import argparse

from .config import CampaignConfig, STRATEGIES
from .runner import generate_suite, load_suite, simulate_suite, report_suite, run_campaign, compare
from .runner import SUBSETS_FILE, DIAGNOSTICS_FILE
from ..explorer.qlearning import LearningConfig, QLearner
from ..monitors.report import load_report
from ..utils import exceptions


logger = logging.getLogger(__name__)

DOMAIN_EXCEPTIONS = (exceptions.PlanSyntaxException, exceptions.UnknownAgentException,
                     exceptions.UnknownBeliefException, exceptions.InvalidBeliefSubsetException,
                     exceptions.EmptyMaskException, exceptions.MissingRangeException,
                     exceptions.InvalidIntervalException, exceptions.ScheduleInPastException,
                     exceptions.CampaignStageException, exceptions.ModelNotTrainedException,
                     exceptions.IncorrectModelFileException, ValueError, OSError)

# command-line flag -> CampaignConfig field
CONFIG_FLAGS = {'strategy': 'strategy', 'suite_size': 'suite_size', 'seed': 'seed',
                'concretizations': 'concretizations', 'output': 'output_dir', 'manual': 'manual_path',
                'ranges': 'ranges_path', 'faults': 'faults_path', 'learning': 'learning_path',
                'model': 'model_path', 'n_jobs': 'n_jobs', 'wall_limit': 'wall_limit',
                'release_threshold': 'release_threshold', 'safe_distance': 'safe_distance'}


def add_config_arguments(parser):
    parser.add_argument('--config', default=None, help='Campaign file of "key = value" lines')
    parser.add_argument('--output', default=None, help='Output directory (default: campaign)')
    parser.add_argument('--seed', type=int, default=None, help='Random seed (default: 0)')


def add_generate_arguments(parser):
    parser.add_argument('--strategy', choices=STRATEGIES, default=None, help='Test generation strategy (default: rl)')
    parser.add_argument('--suite-size', dest='suite_size', type=int, default=None, help='Number of concrete tests')
    parser.add_argument('--concretizations', type=int, default=None, help='Concretizations per abstract test')
    parser.add_argument('--manual', default=None,
                        help='File of hand-written belief subsets (default: bundled subsets)')
    parser.add_argument('--ranges', default=None, help='Parameter range table (CSV)')
    parser.add_argument('--learning', default=None, help='Learning configuration file')
    parser.add_argument('--model', default=None, help='Trained Q-learner (compact model file)')


def add_simulate_arguments(parser):
    parser.add_argument('--faults', default=None, help='Fault configuration file')
    parser.add_argument('--n-jobs', dest='n_jobs', type=int, default=None, help='Parallel simulations (default: 1)')
    parser.add_argument('--wall-limit', dest='wall_limit', type=float, default=None,
                        help='Simulated-time cap per test in seconds (default: 300)')


def add_report_arguments(parser):
    parser.add_argument('--release-threshold', dest='release_threshold', type=float, default=None,
                        help='R1 release deadline in seconds (default: 10)')
    parser.add_argument('--safe-distance', dest='safe_distance', type=float, default=None,
                        help='R3 minimal hand distance in metres (default: 0.1)')


def get_argparser():
    parser = argparse.ArgumentParser(
        description='Coverage-directed test generation for a robot handover controller, '
                    'with agent-model exploration and a simulated testbench.',
        epilog='Assertion failures are results and do not change the exit code.')
    parser.add_argument('--verbose', action='store_true', help='Log debugging details')
    subparsers = parser.add_subparsers(dest='verb', required=True)

    generate = subparsers.add_parser('generate', help='Generate abstract and concrete tests')
    add_config_arguments(generate)
    add_generate_arguments(generate)

    simulate = subparsers.add_parser('simulate', help='Simulate the generated concrete tests')
    add_config_arguments(simulate)
    add_simulate_arguments(simulate)

    report = subparsers.add_parser('report', help='Monitor the simulation logs and write the suite report')
    add_config_arguments(report)
    report.add_argument('--strategy', choices=STRATEGIES, default=None, help='Strategy name of the report')
    add_report_arguments(report)

    comparison = subparsers.add_parser('compare', help='Compare suite reports')
    comparison.add_argument('reports', nargs='+', help='Report directories')
    comparison.add_argument('--csv', default=None, help='Write the comparison table to this file')

    learning = subparsers.add_parser('learn', help='Learn a belief-selection policy')
    add_config_arguments(learning)
    learning.add_argument('--learning', default=None, help='Learning configuration file')
    learning.add_argument('--model-out', dest='model_out', default=None,
                          help='Compact model file (default: <output>/qlearner.bin)')

    campaign = subparsers.add_parser('campaign', help='Generate, simulate and report in one run')
    add_config_arguments(campaign)
    add_generate_arguments(campaign)
    add_simulate_arguments(campaign)
    add_report_arguments(campaign)
    return parser


def campaign_config(args):
    """ Campaign settings from the `--config` file, overridden by explicit flags. """
    entries = {}
    if getattr(args, 'config', None) is not None:
        entries.update(CampaignConfig.from_file(args.config).to_dict())
    for flag, name in CONFIG_FLAGS.items():
        value = getattr(args, flag, None)
        if value is not None:
            entries[name] = value
    return CampaignConfig.from_dict(entries)


def print_summary(report):
    summary = report.summary()
    print('Strategy: '+str(summary['strategy']))
    print('Tests: %d, max coverage %.2f%%, mean coverage %.2f%%, diversity %d'
          % (summary['tests'], summary['max_coverage'], summary['mean_coverage'], summary['diversity']))
    print(report.tallies.to_string())


def learn_verb(args, config):
    learning = LearningConfig.from_file(args.learning) if args.learning is not None \
        else LearningConfig(seed=config.seed)
    learner = QLearner(learning)
    result = learner.learn()
    os.makedirs(config.output_dir, exist_ok=True)
    result.save_subsets(os.path.join(config.output_dir, SUBSETS_FILE))
    result.save_diagnostics(os.path.join(config.output_dir, DIAGNOSTICS_FILE))
    model_out = os.path.join(config.output_dir, 'qlearner.bin') if args.model_out is None else args.model_out
    learner.save_compact_model(model_out)
    print('%d policy subsets, %s after %d iterations; model saved to %s'
          % (len(result), 'converged' if result.converged else 'not converged',
             len(result.diagnostics), model_out))


def run(args):
    if args.verb == 'compare':
        table = compare(*[load_report(path) for path in args.reports])
        if args.csv is not None:
            table.to_csv(args.csv, index=False)
        print(table.to_string(index=False))
        return

    config = campaign_config(args)
    if args.verb == 'generate':
        suite = generate_suite(config)
        print('%d concrete tests written under %s' % (len(suite), config.output_dir))
    elif args.verb == 'simulate':
        test_ids = simulate_suite(config, load_suite(config.output_dir))
        print('%d tests simulated' % len(test_ids))
    elif args.verb == 'report':
        print_summary(report_suite(config))
    elif args.verb == 'learn':
        learn_verb(args, config)
    elif args.verb == 'campaign':
        print_summary(run_campaign(config))


def main(argv=None):
    """ Console entry point.

    :return: 0, or 1 when a stage of the run raised an error
    :rtype: int
    """
    args = get_argparser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.INFO,
                        format='%(asctime)s %(name)s %(levelname)s: %(message)s')
    try:
        run(args)
    except DOMAIN_EXCEPTIONS as e:
        print('Error: '+(getattr(e, 'message', None) or str(e)), file=sys.stderr)
        return 1
    return 0
