import os
import json
from typing import Optional
import pydantic
from pydantic import ValidationError
from dotenv import load_dotenv
from logging import getLogger

from utils.rewrite import DEFAULT_STEP_LIMIT

logger = getLogger("glpq")

CONFIG_PATH = "verify.config.json"


class Settings(pydantic.BaseModel):
    step_limit: int = DEFAULT_STEP_LIMIT
    overlap_length: int = 4
    oracle_samples: int = 1000
    oracle_seed: int = 20241017
    log_level: str = "WARNING"
    koszul: bool = True


class KnownSuspect(pydantic.BaseModel):
    suite: str
    relation: str
    note: str = ""


class VerifyConfig(pydantic.BaseModel):
    known_suspects: list[KnownSuspect] = []
    kronecker_convention: Optional[str] = "super"

    def is_suspect(self, suite: str, relation: str) -> bool:
        return any(s.suite == suite and s.relation == relation for s in self.known_suspects)


def _int_from_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError:
        logger.warning(f"Ignoring non-integer {name}={raw!r}; using {default}")
        return default


def load_settings() -> Settings:
    """
    Read settings from the environment, after loading `.env` if present.

    Unset variables fall back to the model defaults.
    """
    load_dotenv(override=True)
    defaults = Settings()
    return Settings(
        step_limit=_int_from_env("GLPQ_STEP_LIMIT", defaults.step_limit),
        overlap_length=_int_from_env("GLPQ_OVERLAP_LENGTH", defaults.overlap_length),
        oracle_samples=_int_from_env("GLPQ_ORACLE_SAMPLES", defaults.oracle_samples),
        oracle_seed=_int_from_env("GLPQ_ORACLE_SEED", defaults.oracle_seed),
        log_level=os.getenv("GLPQ_LOG_LEVEL", defaults.log_level).strip().upper(),
        koszul=os.getenv("GLPQ_KOSZUL", "true").lower() in {"1", "true", "yes", "on"},
    )


DEFAULT_SUSPECTS = [
    KnownSuspect(
        suite="catalog.koszul",
        relation="printed-bc",
        note="The printed tensor rule ends in BC; the rule in use is AC ⊗ BD.",
    ),
    KnownSuspect(
        suite="hopf.extended",
        relation="antipode-forms.dLa",
        note="The printed line follows the right-type sign; the recomputation gives -(A*dLa + B*dLg)*A + (A*dLb + B*dLd)*C.",
    ),
    KnownSuspect(
        suite="hopf.extended",
        relation="antipode-forms.dLb",
        note="Printed image of the antipode on dLb repeats the first line's trailing factor; the recomputation gives (A*dLa + B*dLg)*B - (A*dLb + B*dLd)*D.",
    ),
    KnownSuspect(
        suite="hopf.extended",
        relation="antipode-forms.dLg",
        note="The printed line follows the right-type sign; the recomputation gives -(C*dLa + D*dLg)*A + (C*dLb + D*dLd)*C.",
    ),
    KnownSuspect(
        suite="hopf.extended",
        relation="antipode-forms.dLd",
        note="The printed line follows the right-type sign; the recomputation gives (C*dLa + D*dLg)*B - (C*dLb + D*dLd)*D.",
    ),
    KnownSuspect(
        suite="hopf.partial",
        relation="invariance.function-derivative",
        note="The derivative coproduct does not preserve the derivative-function relations.",
    ),
    KnownSuspect(
        suite="hopf.partial",
        relation="invariance.derivative-derivative",
        note="The derivative coproduct does not preserve the derivative-derivative relations either.",
    ),
    KnownSuspect(
        suite="rmatrix.plane",
        relation="leibniz.left.x-th",
        note="The left differential of x*th - p*th*x leaves (2*p*q - 2)*ph*th under the mixed plane rules.",
    ),
    KnownSuspect(
        suite="calculus.mc",
        relation="left.two-form.u1",
        note="The printed two-form line for du1 has the opposite overall sign.",
    ),
    KnownSuspect(
        suite="calculus.mc",
        relation="left.two-form.u2",
        note="The printed two-form line for du2 has the opposite overall sign.",
    ),
    KnownSuspect(
        suite="calculus.mc",
        relation="left.agreement.u1",
        note="The two-form line and the explicit matrix disagree on du1 by an overall sign.",
    ),
    KnownSuspect(
        suite="calculus.mc",
        relation="left.agreement.u2",
        note="The two-form line and the explicit matrix disagree on du2 by an overall sign.",
    ),
    KnownSuspect(
        suite="calculus.tables",
        relation="inverse-differential.right.D*dRg",
        note="The printed coefficient (p - p^-1) reads (q - p^-1) under the p, q swap between the beta and gamma rows.",
    ),
    KnownSuspect(
        suite="calculus.tables",
        relation="inverse-differential.left.dLg*B",
        note="The recomputation gives B*dLg + (p*q - 1)*D*dLd; the printed bracket has the opposite sign.",
    ),
    KnownSuspect(
        suite="calculus.tables",
        relation="oneform-differential.left.u1*dLa",
        note="The recomputation gives p*dLa*u1 + (p - q^-1)*dLb*(th1 - th2), the leading coefficient of the rest of the row.",
    ),
    KnownSuspect(
        suite="calculus.tables",
        relation="oneform-differential.right.w1*dRg",
        note="The recomputation gives dRg*w1 + (p^-1 - q)*dRa*v2.",
    ),
    KnownSuspect(
        suite="calculus.tables",
        relation="oneform-differential.right.w1*dRb",
        note="The recomputation gives dRb*w1 with no correction term.",
    ),
    KnownSuspect(
        suite="calculus.tables",
        relation="oneform-differential.right.w1*dRd",
        note="The recomputation gives -dRd*w1 + (p^-1 - q)*dRb*v2.",
    ),
    KnownSuspect(
        suite="calculus.tables",
        relation="oneform-differential.right.v1*dRa",
        note="The recomputation gives p*dRa*v1.",
    ),
    KnownSuspect(
        suite="calculus.tables",
        relation="oneform-differential.right.v1*dRb",
        note="The recomputation gives p*dRb*v1.",
    ),
    KnownSuspect(
        suite="calculus.tables",
        relation="oneform-differential.right.v1*dRg",
        note="The recomputation gives p*dRg*v1 + (1 - p*q)*dRa*(w2 - w1).",
    ),
    KnownSuspect(
        suite="calculus.tables",
        relation="oneform-differential.right.v1*dRd",
        note="The recomputation gives p*dRd*v1 + (p*q - 1)*dRb*(w2 - w1).",
    ),
    KnownSuspect(
        suite="calculus.tables",
        relation="oneform-differential.right.v2*dRa",
        note="The recomputation gives p^-1*dRa*v2.",
    ),
    KnownSuspect(
        suite="calculus.tables",
        relation="oneform-differential.right.v2*dRg",
        note="The recomputation gives p^-1*dRg*v2.",
    ),
    KnownSuspect(
        suite="calculus.tables",
        relation="oneform-differential.right.v2*dRb",
        note="The recomputation gives p^-1*dRb*v2 with no correction term.",
    ),
    KnownSuspect(
        suite="calculus.tables",
        relation="oneform-differential.right.v2*dRd",
        note="The recomputation gives p^-1*dRd*v2 with no correction term.",
    ),
    KnownSuspect(
        suite="calculus.tables",
        relation="oneform-differential.right.w2*dRb",
        note="The recomputation gives dRb*w2 with no correction term.",
    ),
    KnownSuspect(
        suite="calculus.tables",
        relation="oneform-differential.right.w2*dRg",
        note="The recomputation gives dRg*w2 + (p^-1 - q)*dRa*v2.",
    ),
    KnownSuspect(
        suite="calculus.tables",
        relation="oneform-differential.right.w2*dRd",
        note="The recomputation gives -dRd*w2 + (p^-1 - q)*dRb*v2.",
    ),
    KnownSuspect(
        suite="calculus.lie",
        relation="lie.left.Np*Nm+p*q*Nm*Np",
        note="The recomputation gives T1 + T2 + (p*q - 1)*T1*(T1 + T2).",
    ),
    KnownSuspect(
        suite="calculus.lie",
        relation="lie-xy.left.Np*Nm+p*q*Nm*Np",
        note="The recomputation gives X + 1/2*(p*q - 1)*(X + Y)*X.",
    ),
    KnownSuspect(
        suite="calculus.module",
        relation="module.right.T1*g",
        note="The recomputation gives g*T1 + (q - p^-1)*a*Np; the printed correction has the opposite sign.",
    ),
    KnownSuspect(
        suite="hopf.extended",
        relation="invariance.right.printed-coaction",
        note="(delta ⊗ id) composed with the coproduct does not preserve the left differential relations.",
    ),
    KnownSuspect(
        suite="hopf.extended",
        relation="invariance.left.printed-coaction",
        note="(tau ⊗ delta) composed with the coproduct does not preserve the left differential relations.",
    ),
    KnownSuspect(
        suite="hopf.extended",
        relation="coaction-product.right.printed",
        note="The printed right coaction is not multiplicative against the Leibniz rule on products.",
    ),
    KnownSuspect(
        suite="hopf.extended",
        relation="coaction-product.left.printed",
        note="The printed left coaction is not multiplicative against the Leibniz rule on products.",
    ),
]


def generate_config_file(
    config: VerifyConfig | None = None,
    config_path: str = CONFIG_PATH,
) -> None:
    """
    Write a verify.config.json file.

    Args:
        config: The configuration to write; the shipped suspects when omitted.
        config_path: The path to the verify.config.json file
    """
    config = config or VerifyConfig(known_suspects=DEFAULT_SUSPECTS)
    with open(config_path, "w", encoding="utf-8") as f:
        f.write(config.model_dump_json(indent=4))


def read_config(config_path: str = CONFIG_PATH) -> VerifyConfig:
    """
    Read verify.config.json, falling back to the shipped defaults on any error.
    """
    if not os.path.exists(config_path):
        return VerifyConfig(known_suspects=DEFAULT_SUSPECTS)

    try:
        with open(config_path, "r", encoding="utf-8") as f:
            config = VerifyConfig.model_validate_json(f.read())
    except (FileNotFoundError, json.JSONDecodeError, ValidationError) as e:
        logger.error(f"Error loading {config_path}: {e}")
        return VerifyConfig(known_suspects=DEFAULT_SUSPECTS)

    return config
