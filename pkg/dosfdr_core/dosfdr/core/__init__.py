# flake8: noqa

import dosfdr.pipeline
from dosfdr.core.errors import *
from dosfdr.core.pvalue_sample import *

# We just need to import anything that contains a Config, so that all
# the register_config decorators will be called which add Configs to the
# registry.
import dosfdr.core.estimators
import dosfdr.core.data
import dosfdr.core.asymptotics
import dosfdr.core.procedures
import dosfdr.core.harness


def register_plugin(registry):
    if 'dosfdr.core' in registry.plugin_versions:
        return
    registry.set_plugin_version('dosfdr.core', 0)
    from dosfdr.core.cli import (estimate, adaptive_bh_command, simulate,
                                 fdr_sim, sweep_c_command, asymptotics)
    for cmd in [
            estimate, adaptive_bh_command, simulate, fdr_sim, sweep_c_command,
            asymptotics
    ]:
        registry.add_plugin_command(cmd)


# When dosfdr.core is imported before dosfdr.pipeline, the plugin loader
# sees this module half-initialized and cannot register it.
register_plugin(dosfdr.pipeline.registry)
dosfdr.pipeline.registry.update_config_info()
