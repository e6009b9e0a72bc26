import asyncio
import logging
import os
from dataclasses import dataclass
from functools import partial
from typing import Callable, Dict, Iterable, List, Optional

logger = logging.getLogger(__name__)


class MycsymError(Exception):
    pass


class GraphError(MycsymError, ValueError):
    pass


class GraphFormatError(GraphError):
    pass


class ConstructionError(MycsymError, ValueError):
    pass


class TwinCoverError(MycsymError, ValueError):
    pass


class CorpusError(MycsymError):
    pass


class UnknownTheorem(MycsymError, KeyError):
    pass


DEFAULT_BUDGET = 2 ** 22
CACHE_SIZE = 4096
DEFAULT_AUT_CAP = 10 ** 6


@dataclass
class Settings:
    budget: int = DEFAULT_BUDGET
    workers: int = 1
    aut_cap: int = DEFAULT_AUT_CAP

    @classmethod
    def from_env(cls) -> 'Settings':
        return cls(
            budget=int(os.getenv('MYCSYM_BUDGET', DEFAULT_BUDGET)),
            workers=int(os.getenv('MYCSYM_WORKERS', 1)),
            aut_cap=int(os.getenv('MYCSYM_AUT_CAP', DEFAULT_AUT_CAP)),
        )


@dataclass
class Theorem:
    id: str
    claim: str
    check: Callable
    hypothesis: Callable = None
    per_t: bool = True
    instances: Optional[Callable] = None
    finalize: Optional[Callable] = None

    def applies(self, instance) -> bool:
        return self.hypothesis is None or self.hypothesis(instance)


class Registry:
    def __init__(self):
        self.theorems: Dict[str, Theorem] = {}

    def theorem(self, id: str, claim: str, hypothesis=None, per_t=True, instances=None, finalize=None):
        def decorator(func):
            self.theorems[id] = Theorem(
                id=id, claim=claim, check=func, hypothesis=hypothesis, per_t=per_t, instances=instances, finalize=finalize,
            )
            logger.debug(f"Registered theorem '{id}'")
            return func
        return decorator

    def get(self, id: str) -> Theorem:
        try:
            return self.theorems[id]
        except KeyError:
            raise UnknownTheorem(f"Unknown theorem id {id!r}; known: {', '.join(self.ids())}") from None

    def ids(self) -> List[str]:
        return list(self.theorems)

    def select(self, ids: Iterable[str]) -> List[Theorem]:
        ids = list(ids)
        if ids == ['all']:
            return list(self.theorems.values())
        return [self.get(id) for id in ids]


registry = Registry()


async def sync_to_async(executor, func, *args, **kwargs):
    return await asyncio.get_running_loop().run_in_executor(executor, partial(func, *args, **kwargs))
