from __future__ import annotations

import inspect
import time
import warnings
from collections.abc import Callable
from logging import getLogger

from pydantic import BaseModel

from utils.config import Settings, VerifyConfig
from utils.reports import DiscrepancyReport, SuiteResult

logger = getLogger("glpq")


class SuiteRuntimeError(Exception):
    """Base error for suite runtime."""


class SuiteNotFoundError(SuiteRuntimeError):
    """Raised when a suite id is not registered."""


class SuiteCallError(SuiteRuntimeError):
    """Raised when a suite does not return a report."""


class SuiteContext(BaseModel):
    """Settings and configuration handed to every suite."""
    settings: Settings = Settings()
    config: VerifyConfig = VerifyConfig()


class SuiteRegistration(BaseModel):
    fn: Callable[[SuiteContext], DiscrepancyReport]
    name: str
    description: str

    model_config = {"arbitrary_types_allowed": True}

    @classmethod
    def from_function(
        cls,
        fn: Callable[[SuiteContext], DiscrepancyReport],
        name: str,
        description: str | None = None,
    ) -> "SuiteRegistration":
        doc = description if description is not None else (inspect.getdoc(fn) or "").strip()
        return cls(fn=fn, name=name, description=doc.splitlines()[0] if doc else "")

    def run(self, context: SuiteContext) -> DiscrepancyReport:
        report = self.fn(context)
        if not isinstance(report, DiscrepancyReport):
            raise SuiteCallError(f"Suite '{self.name}' returned {type(report).__name__}, not a report")
        return report


class SuiteRegistry:
    """Registry of verification suites, dispatched by id."""

    def __init__(self) -> None:
        self._suites: dict[str, SuiteRegistration] = {}

    def add_function(
        self,
        fn: Callable[[SuiteContext], DiscrepancyReport],
        *,
        name: str,
        description: str | None = None,
    ) -> SuiteRegistration:
        reg = SuiteRegistration.from_function(fn, name=name, description=description)
        self._suites[reg.name] = reg
        return reg

    def suite(self, name: str, description: str | None = None):
        """Decorator to register a suite."""
        def decorator(fn: Callable[[SuiteContext], DiscrepancyReport]) -> Callable[[SuiteContext], DiscrepancyReport]:
            self.add_function(fn, name=name, description=description)
            return fn
        return decorator

    def get(self, name: str) -> SuiteRegistration:
        suite = self._suites.get(name)
        if not suite:
            raise SuiteNotFoundError(f"Unknown suite: {name}")
        return suite

    def list(self) -> list[SuiteRegistration]:
        return list(self._suites.values())

    def resolve(self, selector: str) -> list[SuiteRegistration]:
        """`all`, an exact id, or an area prefix such as `rmatrix`."""
        if selector == "all":
            return self.list()
        if selector in self._suites:
            return [self._suites[selector]]
        matched = [s for s in self._suites.values() if s.name.startswith(f"{selector}.")]
        if not matched:
            raise SuiteNotFoundError(f"Unknown suite: {selector}")
        return matched

    def call(self, name: str, context: SuiteContext | None = None) -> SuiteResult[DiscrepancyReport]:
        """
        Run one suite and wrap its report.

        Exceptions become the result's `error`; warnings raised while the
        suite runs are collected into `warning`.
        """
        suite = self.get(name)
        context = context or SuiteContext()
        started = time.perf_counter()
        try:
            with warnings.catch_warnings(record=True) as caught:
                warnings.simplefilter("always")
                report = suite.run(context)
            report.mark_suspects(context.config.is_suspect)
            warning_msg = "; ".join(f"{w.category.__name__}: {w.message}" for w in caught) or None
            logger.info(
                f"{name}: {report.matched}/{len(report.entries)} match, "
                f"{'pass' if report.passed else 'fail'} in {time.perf_counter() - started:.2f}s"
            )
            return SuiteResult(suite=name, result=report, warning=warning_msg)
        except Exception as e:
            logger.error(f"{name}: {type(e).__name__}: {e}")
            return SuiteResult(suite=name, error=f"{type(e).__name__}: {e}")


registry = SuiteRegistry()


def run_suites(selector: str, context: SuiteContext, names: list[str] | None = None) -> list[SuiteResult[DiscrepancyReport]]:
    targets = names if names is not None else [s.name for s in registry.resolve(selector)]
    return [registry.call(name, context) for name in targets]
