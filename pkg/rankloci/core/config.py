import typing as tp
import sys
import os
import json
import logging

_module = sys.modules[__name__]

LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL')
LOG_FORMAT = '%(name)s:%(levelname)s:%(message)s'

#-------------------------------------------------------------------------------
class EngineConfig:
    '''
    Storage container for all engine settings.
    '''

    __slots__ = (
            'verify',
            'max_workers',
            'log_level',
            )

    @classmethod
    def from_json(cls, json_str: str) -> 'EngineConfig':
        args = json.loads(json_str.strip())
        # filter arguments by current slots
        args_valid = {}
        for k in cls.__slots__:
            if k in args:
                args_valid[k] = args[k]
        return cls(**args_valid)

    @classmethod
    def from_file(cls, fp: str) -> 'EngineConfig':
        with open(fp) as f:
            return cls.from_json(f.read())

    def __init__(self, *,
            verify: bool = False,
            max_workers: tp.Optional[int] = None,
            log_level: str = 'WARNING',
            ) -> None:

        if max_workers is not None and (not isinstance(max_workers, int) or max_workers < 1):
            raise ValueError('max_workers must be a positive integer or None', max_workers)
        log_level = str(log_level).upper()
        if log_level not in LOG_LEVELS:
            raise ValueError('unknown log level', log_level)

        self.verify = bool(verify)
        self.max_workers = max_workers
        self.log_level = log_level

    def write(self, fp: str) -> None:
        '''Write a JSON file.
        '''
        with open(fp, 'w') as f:
            f.write(self.to_json() + '\n')

    def __repr__(self) -> str:
        return '<' + self.__class__.__name__ + ' ' + ' '.join(
                '{k}={v}'.format(k=k, v=getattr(self, k))
                for k in self.__slots__) + '>'

    def __eq__(self, other: tp.Any) -> bool:
        if not isinstance(other, EngineConfig):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def to_dict(self, **kwargs: tp.Any) -> tp.Dict[str, tp.Any]:
        # overrides with passed in kwargs if provided
        return {k: kwargs.get(k, getattr(self, k))
                for k in self.__slots__}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_config(self, **kwargs: tp.Any) -> 'EngineConfig':
        return self.__class__(**self.to_dict(**kwargs))

    @property
    def use_threads(self) -> bool:
        return self.max_workers is not None and self.max_workers > 1

    def apply_logging(self) -> None:
        '''Configure the root handler and set the rankloci logger level.
        '''
        logging.basicConfig(format=LOG_FORMAT)
        logging.getLogger('rankloci').setLevel(getattr(logging, self.log_level))

#-------------------------------------------------------------------------------
class EngineConfigs:
    '''
    Container of common default configs.
    '''
    DEFAULT = EngineConfig()
    VERIFY = EngineConfig(verify=True)
    THREADED = EngineConfig(max_workers=4)

#-------------------------------------------------------------------------------

_module._config_active = EngineConfig()

class ConfigActive:
    '''Utility interface for setting module-level engine configuration.
    '''
    FILE_NAME = '.rankloci.conf'

    @staticmethod
    def set(config: EngineConfig) -> None:
        _module._config_active = config

    @staticmethod
    def get(**kwargs: tp.Any) -> EngineConfig:
        config = _module._config_active
        if not kwargs:
            return config
        args = config.to_dict()
        args.update(kwargs)
        return EngineConfig(**args)

    @classmethod
    def update(cls, **kwargs: tp.Any) -> None:
        args = cls.get().to_dict()
        args.update(kwargs)
        cls.set(EngineConfig(**args))

    @classmethod
    def _default_fp(cls) -> str:
        return os.path.join(os.path.expanduser('~'), cls.FILE_NAME)

    @classmethod
    def write(cls, fp: tp.Optional[str] = None) -> None:
        fp = fp or cls._default_fp()
        cls.get().write(fp)

    @classmethod
    def read(cls, fp: tp.Optional[str] = None) -> None:
        fp = fp or cls._default_fp()
        cls.set(EngineConfig.from_file(fp))
