import unittest

from pydantic.error_wrappers import ValidationError

from dosfdr.pipeline.config import ConfigError, build_config
from dosfdr.core.errors import BadPi0Error, EstimationError
from dosfdr.core.estimators import (
    DosEstimatorConfig, UDosEstimatorConfig, StoreyEstimatorConfig,
    StMedEstimatorConfig, StAlphaEstimatorConfig, LslEstimatorConfig,
    JdEstimatorConfig, FixedEstimatorConfig, OracleEstimatorConfig,
    FixedEstimator, OracleEstimator, format_param)
from dosfdr.core.pvalue_sample import validate_sample

FIXTURE = [0.01, 0.02, 0.05, 0.30, 0.60, 0.90]


class TestEstimatorConfig(unittest.TestCase):
    def test_default_names(self):
        self.assertEqual(DosEstimatorConfig().get_name(), 'DOS1')
        self.assertEqual(DosEstimatorConfig(alpha=0.5).get_name(), 'DOS05')
        self.assertEqual(UDosEstimatorConfig().get_name(), 'uDOS1')
        self.assertEqual(StoreyEstimatorConfig().get_name(), 'ST-1/2')
        self.assertEqual(
            StoreyEstimatorConfig(lambda_=0.2).get_name(), 'ST-0.2')
        self.assertEqual(StMedEstimatorConfig().get_name(), 'ST-MED')
        self.assertEqual(StAlphaEstimatorConfig().get_name(), 'ST-alpha')
        self.assertEqual(LslEstimatorConfig().get_name(), 'LSL')
        self.assertEqual(JdEstimatorConfig().get_name(), 'JD')
        self.assertEqual(FixedEstimatorConfig().get_name(), 'FIXED-1')
        self.assertEqual(OracleEstimatorConfig().get_name(), 'ORACLE')
        self.assertEqual(
            DosEstimatorConfig(name='mine').get_name(), 'mine')

    def test_format_param(self):
        self.assertEqual(format_param(1.0), '1')
        self.assertEqual(format_param(0.75), '075')

    def test_build_from_dict(self):
        cfg = build_config({'type_hint': 'storey', 'lambda': 0.3})
        self.assertIsInstance(cfg, StoreyEstimatorConfig)
        self.assertEqual(cfg.lambda_, 0.3)
        self.assertEqual(build_config(cfg.dict()), cfg)

        cfg = build_config({'type_hint': 'dos', 'alpha': 0.5, 'c': 0.1})
        self.assertIsInstance(cfg, DosEstimatorConfig)
        self.assertEqual(cfg.build().params.c, 0.1)

    def test_no_extras(self):
        with self.assertRaises(ValidationError):
            DosEstimatorConfig(beta=1.0)

    def test_validate(self):
        bad = [
            DosEstimatorConfig(alpha=0.4),
            DosEstimatorConfig(c=0.5),
            StoreyEstimatorConfig(lambda_=1.0),
            JdEstimatorConfig(lambda_grid=[]),
            JdEstimatorConfig(num_bootstraps=0),
            FixedEstimatorConfig(pi0=0.0),
        ]
        for cfg in bad:
            with self.assertRaises(ConfigError):
                cfg.validate_config()
        DosEstimatorConfig(alpha=0.5, c=0.25).validate_config()

    def test_estimate(self):
        sample = validate_sample(FIXTURE)
        est = DosEstimatorConfig().build().estimate(sample)
        self.assertEqual(est.method_tag, 'DOS1')
        self.assertEqual(est.k_hat, 3)
        est = StMedEstimatorConfig(name='med').build().estimate(sample)
        self.assertEqual(est.method_tag, 'med')


class TestFixedAndOracle(unittest.TestCase):
    def test_fixed(self):
        est = FixedEstimator(0.7).estimate(validate_sample(FIXTURE))
        self.assertEqual(est.pi0, 0.7)
        self.assertAlmostEqual(est.pi1, 0.3)
        with self.assertRaises(BadPi0Error):
            FixedEstimator(1.5)

    def test_oracle_needs_truth(self):
        with self.assertRaises(EstimationError):
            OracleEstimator().estimate(validate_sample(FIXTURE))


if __name__ == '__main__':
    unittest.main()
