from typing import Optional, Dict

from dosfdr.pipeline.config import Config, Field, register_config


@register_config('root_config')
class RootConfig(Config):
    """Base class for top-level configs that are saved next to their outputs.

    This should be subclassed by configs that are loaded from files on the
    command line.
    """
    dos_config: Optional[Dict[str, str]] = Field(
        None,
        description='Used to store the machine configuration the run used. '
        'This should not be set explicitly by users -- it is set '
        'automatically when saving the config to disk.')
    plugin_versions: Optional[Dict[str, int]] = Field(
        None,
        description=
        ('Used to store a mapping of plugin module paths to the latest '
         'version number. This should not be set explicitly by users -- it is '
         'set automatically when serializing and saving the config to disk.'))
