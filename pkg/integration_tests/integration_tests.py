#!/usr/bin/env python

from typing import Callable, Dict, List
import math
import traceback
from pprint import pformat

import click
import numpy as np

from dosfdr.pipeline import dos_config, Verbosity
from dosfdr.pipeline.runner import Runner, make_runner
from dosfdr.core.asymptotics import (
    A2_INCREASING, A2_PLATEAU, CompositeGaussianModel, GaussianMixtureModel,
    PiecewiseLinearModel, UniformMixtureModel, check_a2, h_value,
    ideal_changepoint)
from dosfdr.core.data import (GaussianScenarioConfig,
                              CompositeScenarioConfig,
                              UniformMixtureScenarioConfig, replicate_rng)
from dosfdr.core.estimators import (DosEstimatorConfig, DosParams,
                                    OracleEstimatorConfig,
                                    StoreyEstimatorConfig,
                                    UDosEstimatorConfig, dos_storey)
from dosfdr.core.harness import (ExperimentConfig, ReplicateTask,
                                 run_experiment, sweep_c)
from dosfdr.core.pvalue_sample import validate_sample

MODEL_GRID = [(pi1, mu1) for pi1 in [0.05, 0.1, 0.2] for mu1 in [2, 3, 4]]


def console_info(msg: str, **kwargs) -> None:
    click.secho(msg, fg='magenta', **kwargs)


def console_error(msg: str, **kwargs) -> None:
    click.secho(msg, fg='red', err=True, **kwargs)


def console_success(msg: str, **kwargs) -> None:
    click.secho(msg, fg='cyan', **kwargs)


class TestError():
    def __init__(self, test, message, details=None):
        self.test = test
        self.message = message
        self.details = details

    def __str__(self):
        return ('Error\n' + '------\n' + 'Test: {}\n'.format(self.test) +
                'Message: {}\n'.format(self.message) +
                ('Details: {}\n'.format(self.details) if self.details else ''))


def check_within(test_id: str, name: str, actual: float, expected: float,
                 tol: float) -> List[TestError]:
    if math.fabs(actual - expected) > tol:
        return [
            TestError(test_id, '{} is not close enough'.format(name),
                      'expected {} +/- {}, actual {}'.format(
                          expected, tol, actual))
        ]
    return []


def check_less(test_id: str, name: str, smaller: float,
               larger: float) -> List[TestError]:
    if not smaller < larger:
        return [
            TestError(test_id, '{} does not hold'.format(name),
                      '{} is not < {}'.format(smaller, larger))
        ]
    return []


def gaussian_experiment(n, pi1, mu1, replicates, rho=0.0, estimators=None):
    return ExperimentConfig(
        scenario=GaussianScenarioConfig(n=n, pi1=pi1, mu1=mu1, rho=rho),
        estimators=estimators or [
            DosEstimatorConfig(),
            DosEstimatorConfig(alpha=0.5),
            StoreyEstimatorConfig()
        ],
        replicates=replicates,
        master_seed=1234)


def test_sparse_row(test_id: str, runner: Runner) -> List[TestError]:
    stats = run_experiment(
        gaussian_experiment(1000, 0.01, 3.5, 1000), runner=runner)
    dos = stats.get('DOS1')
    errors = []
    errors.extend(check_within(test_id, 'DOS1 bias', dos.bias, -0.4, 1.0))
    errors.extend(check_within(test_id, 'DOS1 SD', dos.sd, 3.9, 1.0))
    errors.extend(check_within(test_id, 'DOS1 RMSE', dos.rmse, 3.9, 1.2))
    errors.extend(
        check_less(test_id, 'RMSE(DOS1) < RMSE(ST-1/2)', dos.rmse,
                   stats.get('ST-1/2').rmse))
    return errors


def test_dense_row(test_id: str, runner: Runner) -> List[TestError]:
    stats = run_experiment(
        gaussian_experiment(1000, 0.2, 3.0, 1000), runner=runner)
    dos05 = stats.get('DOS05')
    errors = check_within(test_id, 'DOS05 RMSE', dos05.rmse, 17.0, 3.0)
    errors.extend(
        check_less(test_id, 'RMSE(DOS05) < RMSE(ST-1/2)', dos05.rmse,
                   stats.get('ST-1/2').rmse))
    return errors


def test_small_sample(test_id: str, runner: Runner) -> List[TestError]:
    stats = run_experiment(
        gaussian_experiment(100, 0.1, 3.0, 1000), runner=runner)
    dos = stats.get('DOS1')
    errors = check_within(test_id, 'DOS1 bias', dos.bias, 0.5, 1.0)
    errors.extend(check_within(test_id, 'DOS1 SD', dos.sd, 3.9, 1.0))
    return errors


def test_dependence(test_id: str, runner: Runner) -> List[TestError]:
    stats = run_experiment(
        gaussian_experiment(100, 0.1, 3.0, 1000, rho=0.2), runner=runner)
    return check_within(test_id, 'DOS1 RMSE',
                        stats.get('DOS1').rmse, 12.1, 3.0)


def test_oracle_equivalence(test_id: str, runner: Runner) -> List[TestError]:
    errors = []
    model = UniformMixtureModel(0.2, 0.1)
    for alpha in [0.5, 1.0]:
        ideal = ideal_changepoint(model, alpha)
        errors.extend(
            check_within(test_id, 't_tilde at alpha={}'.format(alpha),
                         ideal.t_tilde, 0.28, 1e-4))
        errors.extend(
            check_within(test_id, 'pi1_estimable at alpha={}'.format(alpha),
                         ideal.pi1_estimable, 0.2, 1e-4))

    cfg = ExperimentConfig(
        scenario=UniformMixtureScenarioConfig(n=100000, pi1=0.2, b=0.1),
        estimators=[DosEstimatorConfig()],
        replicates=100,
        master_seed=1234)
    task = ReplicateTask(cfg.scenario.build(),
                         [e.build() for e in cfg.estimators], cfg.master_seed)
    results = runner.run(task, cfg.replicates)
    n = cfg.scenario.n
    pi1_err = np.mean([abs(r.counts[0] / n - 0.2) for r in results])
    k_err = np.mean([abs(r.k_fracs[0] - 0.28) for r in results])
    errors.extend(
        check_within(test_id, 'mean |pi1_hat - 0.2|', pi1_err, 0.0, 0.02))
    errors.extend(
        check_within(test_id, 'mean |k_hat/n - 0.28|', k_err, 0.0, 0.02))
    return errors


def test_convergence(test_id: str, runner: Runner) -> List[TestError]:
    t_tilde = ideal_changepoint(
        GaussianMixtureModel(0.1, 3.0), 1.0, check=False).t_tilde
    gaps = []
    for n, reps in [(1000, 200), (10000, 100), (100000, 20)]:
        stats = run_experiment(
            gaussian_experiment(
                n, 0.1, 3.0, reps, estimators=[DosEstimatorConfig()]),
            runner=runner)
        gaps.append(abs(stats.get('DOS1').mean_k_frac - t_tilde))
    console_info('k_hat / n gaps to {}: {}'.format(t_tilde, gaps))

    errors = []
    if not (gaps[0] >= gaps[1] >= gaps[2]):
        errors.append(
            TestError(test_id, 'k_hat / n does not approach t_tilde',
                      'gaps {}'.format(gaps)))
    errors.extend(check_within(test_id, 'final gap', gaps[-1], 0.0, 0.01))
    return errors


def test_uniform_consistency(test_id: str, runner: Runner) -> List[TestError]:
    pi1_errs, k_errs = [], []
    for n, reps in [(1000, 200), (10000, 100), (100000, 30)]:
        cfg = ExperimentConfig(
            scenario=UniformMixtureScenarioConfig(n=n, pi1=0.2, b=0.1),
            estimators=[DosEstimatorConfig()],
            replicates=reps,
            master_seed=1234)
        task = ReplicateTask(cfg.scenario.build(),
                             [e.build() for e in cfg.estimators],
                             cfg.master_seed)
        results = runner.run(task, cfg.replicates)
        pi1_errs.append(
            np.mean([abs(r.counts[0] / n - 0.2) for r in results]))
        k_errs.append(np.mean([abs(r.k_fracs[0] - 0.28) for r in results]))
    console_info('mean |pi1_hat - 0.2|: {}'.format(pi1_errs))
    console_info('mean |k_hat/n - 0.28|: {}'.format(k_errs))

    errors = []
    for name, errs in [('pi1_hat', pi1_errs), ('k_hat / n', k_errs)]:
        if not (errs[0] > errs[1] > errs[2]):
            errors.append(
                TestError(test_id, '{} error does not shrink'.format(name),
                          'errors {}'.format(errs)))
    return errors


def test_conservative(test_id: str, runner: Runner) -> List[TestError]:
    # False null p-values b * U^2 are supported on [0, b] and stochastically
    # smaller than U[0, b].
    n, pi1, b, reps = 20000, 0.2, 0.1, 200
    n1 = int(n * pi1)
    lambdas = []
    for r in range(reps):
        rng = replicate_rng(1234, r)
        p = np.concatenate([b * rng.random(n1)**2, rng.random(n - n1)])
        lambdas.append(
            dos_storey(validate_sample(p), DosParams(1.0, 0.0)).lambda_)
    mean = float(np.mean(lambdas))
    se = float(np.std(lambdas, ddof=1)) / math.sqrt(reps)
    console_info('mean p_(k_hat) = {} (se {})'.format(mean, se))
    if mean > b + 3 * se:
        return [
            TestError(test_id, 'p_(k_hat) overshoots the support boundary',
                      '{} > {} + 3 * {}'.format(mean, b, se))
        ]
    return []


def test_composite_limit(test_id: str, runner: Runner) -> List[TestError]:
    scenario = CompositeScenarioConfig(n=100000, pi1=0.25, r=5)
    built = scenario.build()
    ideal = ideal_changepoint(
        CompositeGaussianModel(
            pi1=built.pi1, mu1=built.mu1, mu0=built.mu0),
        1.0,
        check=False)
    cfg = ExperimentConfig(
        scenario=scenario,
        estimators=[UDosEstimatorConfig()],
        replicates=20,
        master_seed=1234)
    udos = run_experiment(cfg, runner=runner).get('uDOS1')
    console_info('t_tilde = {}, mean k_hat / n = {}'.format(
        ideal.t_tilde, udos.mean_k_frac))
    return check_within(test_id, 'uDOS mean k_hat / n', udos.mean_k_frac,
                        ideal.t_tilde, 0.01)


def test_alpha_monotonicity(test_id: str, runner: Runner) -> List[TestError]:
    errors = []
    for pi1, mu1 in MODEL_GRID:
        model = GaussianMixtureModel(pi1, mu1)
        if not (check_a2(model, 0.5).ok and check_a2(model, 1.0).ok):
            continue
        t_half = ideal_changepoint(model, 0.5).t_tilde
        t_one = ideal_changepoint(model, 1.0).t_tilde
        if t_half < t_one - 1e-6:
            errors.append(
                TestError(test_id, 't_tilde increases with alpha',
                          '{}: {} < {}'.format(model, t_half, t_one)))
    return errors


def test_estimable_bound(test_id: str, runner: Runner) -> List[TestError]:
    errors = []
    t_grid = np.linspace(1e-4, 0.5, 1000000)
    spacing = t_grid[1] - t_grid[0]
    for pi1, mu1 in MODEL_GRID:
        model = GaussianMixtureModel(pi1, mu1)
        ideal = ideal_changepoint(model, 1.0, check=False)
        if ideal.pi1_estimable > pi1 + 1e-6:
            errors.append(
                TestError(test_id, 'estimable proportion exceeds pi1',
                          '{}: {}'.format(model, ideal.pi1_estimable)))
        if not check_a2(model, 1.0).ok:
            continue
        t_brute = t_grid[np.argmax(h_value(model, 1.0, t_grid))]
        if abs(t_brute - ideal.t_tilde) > 2 * spacing:
            errors.append(
                TestError(test_id, 'grid argmax disagrees with t_tilde',
                          '{}: {} vs {}'.format(model, t_brute,
                                                ideal.t_tilde)))
    return errors


def test_adaptive_bh(test_id: str, runner: Runner) -> List[TestError]:
    level = 0.05
    cfg = gaussian_experiment(
        100,
        0.25,
        3.0,
        10000,
        estimators=[OracleEstimatorConfig(),
                    DosEstimatorConfig()])
    task = ReplicateTask(cfg.scenario.build(),
                         [e.build() for e in cfg.estimators],
                         cfg.master_seed, level)
    results = runner.run(task, cfg.replicates)

    def fdr_and_se(fdps):
        fdps = np.array(fdps)
        return fdps.mean(), fdps.std(ddof=1) / math.sqrt(len(fdps))

    oracle_fdr, oracle_se = fdr_and_se([r.metrics[0].fdp for r in results])
    bh_fdr, bh_se = fdr_and_se([r.bh_metrics.fdp for r in results])
    dos_fdr, _ = fdr_and_se([r.metrics[1].fdp for r in results])
    console_info('FDR oracle={} BH={} DOS1={}'.format(oracle_fdr, bh_fdr,
                                                      dos_fdr))

    errors = []
    if oracle_fdr > level + 3 * oracle_se:
        errors.append(
            TestError(test_id, 'oracle adaptive BH exceeds the level',
                      '{} > {} + 3 * {}'.format(oracle_fdr, level,
                                                oracle_se)))
    errors.extend(
        check_within(test_id, 'BH FDR', bh_fdr, 0.75 * level, 3 * bh_se))
    if not (0.03 < dos_fdr < 0.075):
        errors.append(
            TestError(test_id, 'DOS1 adaptive BH FDR out of range',
                      '{} not in (0.03, 0.075)'.format(dos_fdr)))
    return errors


def test_null_bh(test_id: str, runner: Runner) -> List[TestError]:
    level = 0.05
    cfg = gaussian_experiment(
        100, 0.0, 3.0, 10000, estimators=[DosEstimatorConfig()])
    task = ReplicateTask(cfg.scenario.build(),
                         [e.build() for e in cfg.estimators],
                         cfg.master_seed, level)
    fdps = np.array([r.bh_metrics.fdp for r in runner.run(task,
                                                          cfg.replicates)])
    fdr = fdps.mean()
    se = fdps.std(ddof=1) / math.sqrt(len(fdps))
    console_info('null BH FDR = {} (se {})'.format(fdr, se))
    if fdr > level + 3 * se:
        return [
            TestError(test_id, 'BH exceeds the level under the null',
                      '{} > {} + 3 * {}'.format(fdr, level, se))
        ]
    return []


def test_a2_diagnostics(test_id: str, runner: Runner) -> List[TestError]:
    errors = []
    status = check_a2(GaussianMixtureModel(0.2, 1.0), 1.0).status
    if status != A2_INCREASING:
        errors.append(
            TestError(test_id, 'weak gaussian model misclassified', status))
    model = PiecewiseLinearModel([0.1, 0.2, 0.3, 0.4], [0.1, 0.2, 0.4, 0.9])
    status = check_a2(model, 1.0).status
    if status != A2_PLATEAU:
        errors.append(
            TestError(test_id, 'piecewise model misclassified', status))
    return errors


def test_udos_superuniform(test_id: str, runner: Runner) -> List[TestError]:
    cfg = ExperimentConfig(
        scenario=CompositeScenarioConfig(n=100, pi1=0.25, r=5),
        estimators=[UDosEstimatorConfig()],
        replicates=10000,
        master_seed=1234)
    udos = run_experiment(cfg, runner=runner).get('uDOS1')
    se = udos.sd / math.sqrt(cfg.replicates)
    if udos.mean_count > 25 + 3 * se:
        return [
            TestError(test_id, 'uDOS is not negatively biased',
                      'mean count {} > 25 + 3 * {}'.format(
                          udos.mean_count, se))
        ]
    return []


def test_sweep_c_stability(test_id: str, runner: Runner) -> List[TestError]:
    cfg = gaussian_experiment(
        1000,
        0.1,
        3.0,
        200,
        estimators=[DosEstimatorConfig(),
                    UDosEstimatorConfig()])
    table = sweep_c(cfg, [0.0, 0.01, 0.02], runner=runner)
    errors = []
    for name in ['DOS1', 'uDOS1']:
        k_fracs = [stats.get(name).mean_k_frac for _, stats in table]
        console_info('{} mean k_hat / n by c: {}'.format(name, k_fracs))
        spread = max(k_fracs) - min(k_fracs)
        errors.extend(
            check_within(test_id, '{} spread over c'.format(name), spread,
                         0.0, 0.005))
    return errors


ALL_TESTS: Dict[str, Callable[[str, Runner], List[TestError]]] = {
    'tables.sparse': test_sparse_row,
    'tables.dense': test_dense_row,
    'tables.small_sample': test_small_sample,
    'tables.dependence': test_dependence,
    'asymptotics.oracle_equivalence': test_oracle_equivalence,
    'asymptotics.convergence': test_convergence,
    'asymptotics.uniform_consistency': test_uniform_consistency,
    'asymptotics.conservative': test_conservative,
    'asymptotics.composite_limit': test_composite_limit,
    'asymptotics.alpha_monotonicity': test_alpha_monotonicity,
    'asymptotics.estimable_bound': test_estimable_bound,
    'asymptotics.a2_diagnostics': test_a2_diagnostics,
    'fdr.adaptive_bh': test_adaptive_bh,
    'fdr.null_bh': test_null_bh,
    'fdr.udos_superuniform': test_udos_superuniform,
    'harness.sweep_c_stability': test_sweep_c_stability,
}


def run_test(test_id: str, runner: Runner) -> List[TestError]:
    console_info('\nRunning test: {}'.format(test_id), bold=True)
    try:
        return ALL_TESTS[test_id](test_id, runner)
    except Exception:
        return [
            TestError(test_id, 'raised an exception while running',
                      traceback.format_exc())
        ]


@click.command()
@click.argument('tests', nargs=-1)
@click.option(
    '--runner', default='local', help='Runner to use: inprocess or local.')
@click.option('--workers', type=int, help='Number of worker processes.')
@click.option(
    '--verbose', '-v', is_flag=True, help=('Sets the logging level to DEBUG.'))
def main(tests, runner, workers, verbose):
    """Runs the Monte-Carlo acceptance checks of the estimators."""
    if verbose:
        dos_config.set_verbosity(verbosity=Verbosity.DEBUG)

    if len(tests) == 0:
        tests = list(ALL_TESTS.keys())
    else:
        # run all tests that start with the given string e.g "tables" will
        # match "tables.sparse" and "tables.dense"
        _tests = []
        for t in tests:
            t = t.strip().lower()
            matching_tests = [k for k in ALL_TESTS.keys() if k.startswith(t)]
            _tests.extend(matching_tests)
            if len(matching_tests) == 0:
                console_error(
                    f'{t} does not match any valid tests. Valid tests are: ')
                console_error(pformat(list(ALL_TESTS.keys())))
        tests = _tests

    console_info('The following tests will be run:')
    console_info(pformat(tests, compact=False))

    runner = make_runner(runner, workers)
    num_failed = 0
    errors = {}
    for test_id in tests:
        errors[test_id] = run_test(test_id, runner)
        if len(errors[test_id]) > 0:
            num_failed += 1
        for error in errors[test_id]:
            console_error(str(error))

    for test_id in tests:
        if len(errors[test_id]) == 0:
            console_success(f'{test_id}: test passed!', bold=True)
        else:
            console_error(f'{test_id}: test failed!', bold=True)

    if num_failed > 0:
        console_error(
            f'Tests passed: {len(tests) - num_failed} of {len(tests)}')
        console_error('Error counts:')
        console_error(pformat({k: len(es) for k, es in errors.items()}))
        exit(1)


if __name__ == '__main__':
    main()
