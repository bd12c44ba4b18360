import logging
from typing import List, Optional

import click
import numpy as np

from dosfdr.pipeline.cli_utils import handle_errors
from dosfdr.pipeline.config import ConfigError, load_config, save_config
from dosfdr.pipeline.runner import make_runner
from dosfdr.core.asymptotics import (check_a2, ideal_changepoint,
                                     parse_model_spec)
from dosfdr.core.estimators import (
    DosEstimator, UDosEstimator, StoreyEstimator, StMedEstimator,
    LslEstimator, JdEstimator, FixedEstimator, DosParams, dos_storey,
    DEFAULT_NUM_BOOTSTRAPS)
from dosfdr.core.harness import (ExperimentConfig, run_experiment,
                                 run_fdr_experiment, sweep_c, render_report,
                                 write_report, read_pvalues)
from dosfdr.core.procedures import adaptive_bh

log = logging.getLogger(__name__)

ESTIMATE_METHODS = ['dos', 'udos', 'storey', 'st-half', 'st-med', 'lsl', 'jd']
FORMAT_HELP = 'plain (one p-value per line) or csv:COLUMN.'


def _load_experiment(config_uri: str) -> ExperimentConfig:
    cfg = load_config(config_uri)
    if not isinstance(cfg, ExperimentConfig):
        raise ConfigError(
            '{} does not hold an experiment config (type_hint experiment)'.
            format(config_uri))
    cfg.update()
    cfg.recursive_validate_config()
    return cfg


def _emit(stats, fmt: str, output_uri: Optional[str],
          cfg: ExperimentConfig):
    if output_uri:
        write_report(stats, output_uri, fmt)
        save_config(cfg, output_uri + '.config.json')
        click.secho('Wrote report to {}'.format(output_uri), fg='green')
    else:
        click.echo(render_report(stats, fmt), nl=False)


def _parse_floats(s: str) -> List[float]:
    try:
        return [float(v) for v in s.split(',') if v.strip()]
    except ValueError:
        raise ConfigError('Could not parse a list of numbers from {!r}'.format(
            s))


def _pi0_estimator(pi0_method: str):
    m = pi0_method.lower()
    if m == 'dos1':
        return DosEstimator(alpha=1.0)
    if m == 'dos05':
        return DosEstimator(alpha=0.5)
    if m == 'udos':
        return UDosEstimator(alpha=1.0)
    if m == 'st-half':
        return StoreyEstimator(lambda_=0.5)
    if m == 'st-med':
        return StMedEstimator()
    if m == 'lsl':
        return LslEstimator()
    if m == 'jd':
        return JdEstimator()
    if m.startswith('fixed:'):
        try:
            return FixedEstimator(pi0=float(m[len('fixed:'):]))
        except ValueError as e:
            raise ConfigError('Bad fixed pi0 in {!r}: {}'.format(
                pi0_method, e))
    raise ConfigError(
        'Unknown pi0 method {!r}; use dos1, dos05, udos, st-half, st-med, '
        'lsl, jd or fixed:X'.format(pi0_method))


def runner_options(fn):
    fn = click.option(
        '--workers',
        type=int,
        help='Number of worker processes for the local runner.')(fn)
    fn = click.option(
        '--runner',
        help=('Runner to use: inprocess or local. Defaults to the [harness] '
              'runner of the configuration profile.'))(fn)
    return fn


def output_options(fn):
    fn = click.option(
        '--output', '-o', help='File to write the report to.')(fn)
    fn = click.option(
        '--out',
        type=click.Choice(['csv', 'md']),
        help='Report format. Defaults to output_format of the config.')(fn)
    return fn


@click.command('estimate', short_help='Estimate the false null proportion.')
@click.option('--input', '-i', 'input_uri', required=True, help='p-value file')
@click.option('--format', 'fmt', default='plain', help=FORMAT_HELP)
@click.option(
    '--method',
    type=click.Choice(ESTIMATE_METHODS),
    default='dos',
    help='Estimation method.')
@click.option('--alpha', default=1.0, help='DOS exponent in [0.5, 1].')
@click.option(
    '--c', 'c', default=0.0, help='Fraction of DOS indices to exclude.')
@click.option(
    '--lambda', 'lambda_', default=0.5, help='Storey threshold.')
@click.option('--seed', default=0, help='Seed for the JD bootstrap.')
@click.option(
    '--num-bootstraps',
    default=DEFAULT_NUM_BOOTSTRAPS,
    help='JD bootstrap resamples.')
@handle_errors
def estimate(input_uri, fmt, method, alpha, c, lambda_, seed,
             num_bootstraps):
    """Estimate the proportion of false nulls among the p-values in INPUT."""
    sample = read_pvalues(input_uri, fmt)
    n = sample.n
    if method == 'dos':
        est = dos_storey(sample, DosParams(alpha=alpha, c=c))
        click.echo('n: {}'.format(n))
        click.echo('k_hat: {}'.format(est.k_hat))
        click.echo('lambda: {!r}'.format(est.lambda_))
        click.echo('pi1_raw: {!r}'.format(est.pi1_raw))
        click.echo('pi1: {!r}'.format(est.pi1))
        click.echo('n_pi1: {!r}'.format(n * est.pi1))
        return

    estimators = {
        'udos': lambda: UDosEstimator(alpha=alpha, c=c),
        'storey': lambda: StoreyEstimator(lambda_=lambda_),
        'st-half': lambda: StoreyEstimator(lambda_=0.5),
        'st-med': StMedEstimator,
        'lsl': LslEstimator,
        'jd': lambda: JdEstimator(num_bootstraps=num_bootstraps),
    }
    estimator = estimators[method]()
    est = estimator.estimate(sample, rng=np.random.default_rng(seed))
    click.echo('n: {}'.format(n))
    click.echo('method: {}'.format(est.method_tag))
    if est.lambda_used is not None:
        click.echo('lambda: {!r}'.format(est.lambda_used))
    if est.k_hat is not None:
        click.echo('k_hat: {}'.format(est.k_hat))
    click.echo('pi1: {!r}'.format(est.pi1))
    click.echo('pi0: {!r}'.format(est.pi0))
    click.echo('n_pi1: {!r}'.format(n * est.pi1))


@click.command('adaptive-bh', short_help='Run (adaptive) Benjamini-Hochberg.')
@click.option('--input', '-i', 'input_uri', required=True, help='p-value file')
@click.option('--format', 'fmt', default='plain', help=FORMAT_HELP)
@click.option('--level', default=0.05, help='FDR level in (0, 1).')
@click.option(
    '--pi0-method',
    default='dos1',
    help='dos1, dos05, udos, st-half, st-med, lsl, jd or fixed:X')
@click.option('--seed', default=0, help='Seed for the JD bootstrap.')
@handle_errors
def adaptive_bh_command(input_uri, fmt, level, pi0_method, seed):
    """Run BH at level / pi0 on the p-values in INPUT.

    Rejected hypotheses are reported by their 0-based position in INPUT.
    """
    sample = read_pvalues(input_uri, fmt)
    est = _pi0_estimator(pi0_method).estimate(
        sample, rng=np.random.default_rng(seed))
    rejections = adaptive_bh(sample, level, est.pi0)
    click.echo('pi0: {!r}'.format(est.pi0))
    click.echo('effective_level: {!r}'.format(rejections.effective_level))
    click.echo('rejected: {}'.format(rejections.rejected_count))
    click.echo('indices: {}'.format(','.join(
        str(i) for i in sorted(rejections.rejected_original_indices))))


@click.command('simulate', short_help='Run a Monte-Carlo experiment.')
@click.option('--config', 'config_uri', required=True, help='Experiment JSON.')
@output_options
@click.option('--seed', type=int, help='Override the master seed.')
@click.option('--reps', type=int, help='Override the number of replicates.')
@runner_options
@handle_errors
def simulate(config_uri, out, output, seed, reps, runner, workers):
    """Compare estimators of the number of false nulls on simulated data."""
    cfg = _load_experiment(config_uri).with_overrides(
        master_seed=seed, replicates=reps)
    stats = run_experiment(cfg, runner=make_runner(runner, workers))
    _emit(stats, out or cfg.output_format, output, cfg)


@click.command('fdr-sim', short_help='Score adaptive BH on simulated data.')
@click.option('--config', 'config_uri', required=True, help='Experiment JSON.')
@click.option('--level', type=float, help='FDR level; overrides the config.')
@output_options
@click.option('--seed', type=int, help='Override the master seed.')
@click.option('--reps', type=int, help='Override the number of replicates.')
@runner_options
@handle_errors
def fdr_sim(config_uri, level, out, output, seed, reps, runner, workers):
    """Report FDR and power relative to the oracle of adaptive BH."""
    cfg = _load_experiment(config_uri).with_overrides(
        master_seed=seed, replicates=reps, level=level)
    stats = run_fdr_experiment(cfg, runner=make_runner(runner, workers))
    _emit(stats, out or cfg.output_format, output, cfg)


@click.command('sweep-c', short_help='Run an experiment per value of c.')
@click.option('--config', 'config_uri', required=True, help='Experiment JSON.')
@click.option(
    '--c-values', required=True, help='Comma-separated values of c.')
@output_options
@click.option('--seed', type=int, help='Override the master seed.')
@click.option('--reps', type=int, help='Override the number of replicates.')
@runner_options
@handle_errors
def sweep_c_command(config_uri, c_values, out, output, seed, reps, runner,
                    workers):
    """Measure the sensitivity of the DOS estimators to c."""
    cfg = _load_experiment(config_uri).with_overrides(
        master_seed=seed, replicates=reps)
    table = sweep_c(
        cfg, _parse_floats(c_values), runner=make_runner(runner, workers))
    _emit(table, out or cfg.output_format, output, cfg)


@click.command(
    'asymptotics', short_help='Compute the large-sample DOS limits.')
@click.option(
    '--model',
    'models',
    multiple=True,
    required=True,
    help=('gaussian:PI1,MU1, uniform:PI1,B, composite:PI1,MU0,MU1 or '
          'piecewise:BREAKS:SLOPES. May be repeated.'))
@click.option(
    '--alpha', 'alphas', multiple=True, type=float, help='May be repeated.')
@handle_errors
def asymptotics(models, alphas):
    """Print t_tilde, F^-1(t_tilde), the estimable proportion and the shape
    of h for each model and alpha as CSV."""
    alphas = alphas or (1.0, )
    click.echo('model,alpha,t_tilde,quantile_at_t,pi1_estimable,a2_status')
    for spec in models:
        model = parse_model_spec(spec).build()
        for alpha in alphas:
            status = check_a2(model, alpha).status
            ideal = ideal_changepoint(model, alpha, check=False)
            click.echo('"{}",{!r},{!r},{!r},{!r},{}'.format(
                spec, alpha, ideal.t_tilde, ideal.quantile_at_t,
                ideal.pi1_estimable, status))
