import os
from tempfile import TemporaryDirectory
from pathlib import Path
import logging
from typing import Optional, List, Dict

from everett.manager import (ConfigManager, ConfigDictEnv, ConfigOSEnv,
                             ConfigurationMissingError)
from everett.ext.inifile import ConfigIniEnv

from dosfdr.pipeline.verbosity import Verbosity

log = logging.getLogger(__name__)


class ProfileNotFoundError(ValueError):
    """Exception raised when a named configuration profile has no file."""
    pass


class DOSConfig:
    """A store of global user-specific configuration not tied to experiments.

    This holds the root temporary directory, verbosity, and any other
    machine-wide configuration handled by Everett (eg. which runner and how
    many worker processes the simulation harness should use).

    Attributes:
        DEFAULT_PROFILE: the default configuration profile name
        DEFAULT_TMP_DIR_ROOT: the default location for root of temporary
            directories
    """
    DEFAULT_PROFILE: str = 'default'
    DEFAULT_TMP_DIR_ROOT: str = '/opt/data/tmp'

    def __init__(self):
        self.set_verbosity()
        self.set_tmp_dir_root()
        self.set_everett_config()

    def set_verbosity(self, verbosity: Verbosity = Verbosity.NORMAL):
        """Set verbosity level for logging."""
        self.verbosity = verbosity
        root_log = logging.getLogger('dosfdr')
        if self.verbosity >= Verbosity.VERBOSE:
            root_log.setLevel(logging.DEBUG)
        elif self.verbosity >= Verbosity.NORMAL:
            root_log.setLevel(logging.INFO)
        else:
            root_log.setLevel(logging.WARN)

    def get_verbosity(self) -> Verbosity:
        """Returns verbosity level for logging."""
        return self.verbosity

    def get_tmp_dir(self) -> TemporaryDirectory:
        """Return a new TemporaryDirectory object."""
        return TemporaryDirectory(dir=self.tmp_dir_root)

    def set_tmp_dir_root(self, tmp_dir_root: Optional[str] = None):
        """Set root of all temporary directories.

        To set the value, the following rules are used in decreasing priority:

        1) the tmp_dir_root argument if it is not None
        2) an environment variable (TMPDIR, TEMP, or TMP)
        3) DEFAULT_TMP_DIR_ROOT
        4) a directory returned by tempfile.TemporaryDirectory()
        """
        env_arr = [
            os.environ.get(k) for k in ['TMPDIR', 'TEMP', 'TMP']
            if k in os.environ
        ]

        dir_arr = [tmp_dir_root] + env_arr + [DOSConfig.DEFAULT_TMP_DIR_ROOT]
        dir_arr = [d for d in dir_arr if d is not None]
        tmp_dir_root = dir_arr[0]

        try:
            if not os.path.exists(tmp_dir_root):
                os.makedirs(tmp_dir_root, exist_ok=True)
            if not os.path.isdir(tmp_dir_root):
                raise Exception('{} is not a directory.'.format(tmp_dir_root))
            Path.touch(Path(os.path.join(tmp_dir_root, '.can_touch')))
            self.tmp_dir_root = tmp_dir_root
        # If directory cannot be made and/or cannot be interacted
        # with, fall back to default system location.
        except Exception:
            system_tmp_dir = TemporaryDirectory().name
            log.warning(
                'Root temporary directory cannot be used: {}. Using root: {}'.
                format(tmp_dir_root, system_tmp_dir))
            self.tmp_dir_root = system_tmp_dir
        finally:
            os.makedirs(self.tmp_dir_root, exist_ok=True)
            log.debug('Temporary directory root is: {}'.format(
                self.tmp_dir_root))

    def set_everett_config(self,
                           profile: str = None,
                           dos_home: str = None,
                           config_overrides: Dict[str, str] = None):
        """Set Everett config.

        Configuration can be specified through INI configuration files,
        environment variables, and the config_overrides argument in increasing
        order of precedence. Files look like:
        ```
        [harness]
        runner=local
        workers=8
        ```
        Each configuration file is a "profile" with the name of the file being
        the name of the profile. The environment variable equivalent of
        namespace_i and key_ij is `NAMESPACE_I_KEY_IJ=val_ij`.

        Args:
            profile: name of the configuration profile to use. If not set,
                defaults to value of DOS_PROFILE env var, or DEFAULT_PROFILE.
            dos_home: a local dir with configuration files. If not set,
                attempts to use ~/.dosfdr.
            config_overrides: any configuration to override. Each key is of
                form namespace_i_key_ij with corresponding value val_ij.
        """
        if profile is None:
            if os.environ.get('DOS_PROFILE'):
                profile = os.environ.get('DOS_PROFILE')
            else:
                profile = DOSConfig.DEFAULT_PROFILE

        if config_overrides is None:
            config_overrides = {}

        if dos_home is None:
            home = os.path.expanduser('~')
            dos_home = os.path.join(home, '.dosfdr')
        self.dos_home = dos_home

        config_file_locations = self._discover_config_file_locations(
            profile)
        self.profile = profile
        config_ini_env = ConfigIniEnv(config_file_locations)

        self.config = ConfigManager(
            [
                ConfigOSEnv(),
                ConfigDictEnv(config_overrides),
                config_ini_env,
            ],
            doc='See the "Machine configuration" section of the README.')

    def get_namespace_config(self, namespace: str):
        """Get the key-val pairs associated with a namespace."""
        return self.config.with_namespace(namespace)

    def get_namespace_option(self,
                             namespace: str,
                             key: str,
                             default: Optional[str] = None) -> Optional[str]:
        """Get a single option, or default if it is not configured."""
        try:
            return self.get_namespace_config(namespace)(key)
        except ConfigurationMissingError:
            return default

    def get_config_dict(
            self, config_schema: Dict[str, List[str]]) -> Dict[str, str]:
        """Get all Everett configuration.

        This is used to record the machine configuration next to experiment
        outputs.

        Args:
            config_schema: each key is a namespace; each value is list of keys
                within that namespace

        Returns:
            Each key is of form namespace_i_key_ij with corresponding value
            val_ij.
        """
        config_dict = {}
        for namespace, keys in config_schema.items():
            for key in keys:
                value = self.get_namespace_option(namespace, key)
                if value is not None:
                    config_dict[namespace + '_' + key] = value

        return config_dict

    def _discover_config_file_locations(self, profile) -> List[str]:
        """Discover the location of config files.

        Args:
            profile: the name of the profile to use

        Returns:
            a list of paths to config files matching the profile name
        """
        result = []

        env_specified_path = os.environ.get('DOS_CONFIG')
        if env_specified_path:
            result.append(env_specified_path)

        env_specified_dir_path = os.environ.get('DOS_CONFIG_DIR')
        if env_specified_dir_path:
            result.append(os.path.join(env_specified_dir_path, profile))
        else:
            result.append(os.path.join(self.dos_home, profile))
        result.append(os.path.join(os.getcwd(), '.dosfdr'))

        results_that_exist = list(filter(lambda x: os.path.exists(x), result))

        if not any(results_that_exist) and profile != DOSConfig.DEFAULT_PROFILE:
            raise ProfileNotFoundError(
                'Configuration Profile {} not found. Checked: {}'.format(
                    profile, ', '.join(result)))

        return results_that_exist
