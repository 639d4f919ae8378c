"""Module to contain app level config
"""
import copy
import logging
import pathlib
import typing
import yaml

logger = logging.getLogger(__name__)

DEFAULT_CONFIG = pathlib.Path(__file__).parent / 'assets' / 'config' / 'default.yml'

class App:
    """App level config

    Holds output defaults for the command line and the largest ``n`` each
    command will accept. The library modules never read from here, only main does.
    """
    __defaults = {
        'format': 'json',
        'stable': False,
        'csv_header': False,
        'json_indent': None,
        'limits': {
            'enumerate': 8,
            'primitive': 12,
            'circular': 6,
            'dyck': 12,
            'noncrossing': 10,
            'hasse': 9,
            'chains': 7,
            'vertices': 8,
            'permutahedron': 8,
        },
    }
    __conf = copy.deepcopy(__defaults)

    @staticmethod
    def config(name: str) -> typing.Any:
        """Get config item

        Parameters
        ----------
        name : str
            Name of the config object to get

        Returns
        -------
        Any
            The config value requested, None if it was never set.
        """
        return App.__conf.get(name, None)

    @staticmethod
    def set(name: str, value: typing.Any):
        """Set the requested config element to a specific value

        Parameters
        ----------
        name : str
            The name of the config item
        value : typing.Any
            The value to set to
        """
        App.__conf[name] = value

    @staticmethod
    def limit(command: str) -> int|None:
        """Largest n the named command accepts, None when unlimited

        Parameters
        ----------
        command : str
            Key in the limits mapping, e.g. 'chains'
        """
        limits = App.__conf.get('limits') or {}
        return limits.get(command, None)

    @staticmethod
    def reset():
        """Put every config item back to its default"""
        App.__conf = copy.deepcopy(App.__defaults)

    @staticmethod
    def load(filepath: str|pathlib.Path=DEFAULT_CONFIG):
        """Load config from YAML file

        Parameters
        ----------
        filepath : str
            Location of Yaml file for config, by default assets/config/default.yml
        """
        try:
            with open(filepath, 'r', encoding='utf-8') as f:
                yml: dict = yaml.safe_load(f) or {}
                for k, v in yml.items():
                    match k:
                        case 'limits':
                            # merge so a file can override a single command
                            limits = dict(App.__conf.get('limits') or {})
                            limits.update(v or {})
                            App.set(k, limits)
                        case _:
                            App.set(k, v)
                logger.debug('App.load: %s', App.__conf)
        except FileNotFoundError:
            logger.error('App.load: %s not found.', filepath)
