"""Pipeline assembly and canonical report serialization.

run() chains theta-norm maximization, the Arakelov constants, the log-scaled
bound chain, and (optionally) the p-adic verification table into a single
report dictionary whose serialization is byte-stable for a fixed config.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

import mpmath as mp

from . import __version__
from .arakelov import (
    CurveArithData,
    bost_mestre_preset,
    check_hypotheses,
    constant_D,
    zar_degree,
)
from .bounds import (
    BoundParams,
    admissible_prime,
    h_bound,
    tate_voloch_exponent_main,
    tate_voloch_exponent_sharp,
)
from .errors import ConfigRejected, HypothesisViolated
from .jacobian import (
    QQ,
    HyperellipticCurve,
    divisor_from_strings,
    make_divisor,
    verify_bound,
)
from .logscale import LogScaledReal
from .maximize import OptimizerConfig, theta_max
from .periods import PeriodMatrix, PrecisionConfig

_PRESET_ALIASES = {"bost-mestre", "bost-mestre-y2+y=x5"}


@dataclass
class RunConfig:
    preset: str | None = None
    inline: dict | None = None
    p: int = 3
    residue_degree: int | None = None
    precision_bits: int = 128
    grid_points_per_dim: int | None = None
    jmax: int = 4
    torsion_list: list | None = None   # [(u_strs, v_strs), ...]
    verify: bool = False
    output_path: str = "-"

    def __post_init__(self):
        if (self.preset is None) == (self.inline is None):
            raise ConfigRejected("exactly one of preset/inline must be given")
        if self.p < 2 or any(self.p % d == 0 for d in range(2, isqrt(self.p) + 1)):
            raise ConfigRejected(f"p = {self.p} is not prime")
        if self.preset is not None and self.preset not in _PRESET_ALIASES:
            raise ConfigRejected(f"unknown preset {self.preset!r}")


@dataclass
class BoundReport:
    payload: dict

    def to_text(self) -> str:
        return serialize_report(self)


def _dec(x, bits: int, digits: int = 30) -> dict:
    with mp.workprec(bits):
        return {"dec": mp.nstr(mp.mpf(x), digits, strip_zeros=False), "bits": bits}


def _lsr(x: LogScaledReal, digits: int = 30) -> dict:
    if x.sign == 0:
        return {"sign": 0, "ln": "0"}
    return {"sign": x.sign, "ln": mp.nstr(x.log_magnitude, digits, strip_zeros=False)}


def _parse_complex(entry, bits: int):
    with mp.workprec(bits):
        return mp.mpc(mp.mpf(entry["re"]), mp.mpf(entry["im"]))


def _inline_curve(inline: dict, cfg: PrecisionConfig):
    g = int(inline["g"])
    if g < 2:
        raise ConfigRejected("genus must be >= 2")
    bits = cfg.working_precision_bits
    tau_entries = [
        [_parse_complex(e, bits) for e in row] for row in inline["period_matrix"]
    ]
    tau = PeriodMatrix(tau_entries, bits=bits)
    if "h_fal" in inline:
        h_fal = mp.mpf(inline["h_fal"])
    else:
        from .arakelov import faltings_height_gamma

        terms = [(Fraction(a), int(e)) for a, e in inline["gamma_terms"]]
        h_fal = faltings_height_gamma(terms, mp.mpf(inline["gamma_constant"]), cfg)
    data = CurveArithData(
        g=g,
        deg_K0=int(inline["deg_K0"]),
        nt_omega=float(inline.get("nt_omega", 0.0)),
        h_fal=h_fal,
        bad_primes=frozenset(int(x) for x in inline.get("bad_primes", [])),
        disc=int(inline.get("disc", 1)),
        component_lcm=int(inline.get("component_lcm", 1)),
        good_reduction_everywhere=bool(inline.get("good_reduction_everywhere", True)),
        semistable=bool(inline.get("semistable", True)),
        base_point_hyperelliptic_fixed=bool(
            inline.get("base_point_hyperelliptic_fixed", False)
        ),
    )
    return data, tau, None


def _default_torsion_list(curve: HyperellipticCurve):
    # the off-curve multiples of the 5-torsion class [(0,1) - infinity]
    return [
        make_divisor(curve, (0, 0, 1), (1,), QQ),
        make_divisor(curve, (0, 0, 1), (-1,), QQ),
    ]


def run(config: RunConfig) -> BoundReport:
    cfg = PrecisionConfig(working_precision_bits=config.precision_bits)
    bits = cfg.working_precision_bits

    if config.preset is not None:
        bundle = bost_mestre_preset(cfg)
        data, tau = bundle.data, bundle.tau
        curve = HyperellipticCurve(bundle.curve_coeffs)
        echo_curve = {"preset": bundle.name}
    else:
        data, tau, curve = _inline_curve(config.inline, cfg)
        echo_curve = {"inline": config.inline}

    p = config.p
    hyp = check_hypotheses(
        data,
        p,
        torsion_order=None,
        neutral_component=True if config.preset else None,
        good_at_p=admissible_prime(p, data) if data.good_reduction_everywhere else None,
        unramified_at_p=(data.disc % p != 0),
    )
    violated = hyp.violated_conditions()
    if violated:
        raise HypothesisViolated("; ".join(violated))

    ocfg_kwargs = {}
    if config.grid_points_per_dim is not None:
        ocfg_kwargs["grid_points_per_dim"] = config.grid_points_per_dim
    elif tau.g == 1:
        ocfg_kwargs["grid_points_per_dim"] = 256
    ocfg = OptimizerConfig(**ocfg_kwargs)

    tm = theta_max(tau, ocfg, cfg)
    data.theta_max = tm.value

    with mp.workprec(bits):
        zd = zar_degree(data, cfg)
        combined = mp.log(tm.value) + zd
        D = constant_D(data, cfg)

    H_p = h_bound(p, data.g, data.deg_K0)
    main_exp = tate_voloch_exponent_main(D, H_p)
    sharp = None
    if config.residue_degree is not None:
        params = BoundParams(
            g=data.g, deg_K0=data.deg_K0, p=p, q=p**config.residue_degree
        )
        sharp = tate_voloch_exponent_sharp(params, abs(combined))

    verification = []
    if config.verify:
        if curve is None:
            raise ConfigRejected("p-adic verification needs a curve equation (preset only)")
        if config.torsion_list:
            tlist = [
                divisor_from_strings(curve, u_strs, v_strs)
                for u_strs, v_strs in config.torsion_list
            ]
        else:
            tlist = _default_torsion_list(curve)
        rows = verify_bound(curve, data, tlist, p, config.jmax)
        for r in rows:
            verification.append(
                {
                    "order": r.order,
                    "v_p": r.v_p,
                    "d_p": None if r.d_p is None else [r.d_p[0], str(r.d_p[1])],
                    "inequality_holds": r.inequality_holds,
                    "rejected_reason": r.rejected_reason,
                }
            )

    payload = {
        "tool_version": __version__,
        "config_echo": {
            "curve": echo_curve,
            "p": p,
            "residue_degree": config.residue_degree,
            "precision_bits": bits,
            "grid_points_per_dim": ocfg.grid_points_per_dim,
            "jmax": config.jmax,
            "verify": config.verify,
        },
        "theta_max": {
            "value": _dec(tm.value, bits),
            "argmax_coords": [mp.nstr(mp.mpf(c), 20) for c in tm.argmax_coords],
            "grid_best": _dec(tm.grid_best, bits),
        },
        "zar_degree": _dec(zd, bits),
        "combined_constant": _dec(combined, bits),
        "D": _dec(D, bits),
        "log10_H_p": _dec(H_p.log10(), bits),
        "log10_main_exponent": _dec(main_exp.log10(), bits),
        "main_exponent": _lsr(main_exp),
        "log10_sharp_exponent": None if sharp is None else _dec(sharp.log10(), bits),
        "admissible_prime": admissible_prime(p, data),
        "hypotheses": {
            "semistable": hyp.semistable,
            "p_odd": hyp.p_odd,
            "good_reduction_at_p": hyp.good_reduction_at_p,
            "unramified_at_p": hyp.unramified_at_p,
            "order_coprime_to_p": hyp.order_coprime_to_p,
            "neutral_component": hyp.neutral_component,
            "p_admissible": hyp.p_admissible,
        },
        "verification_table": verification,
    }
    return BoundReport(payload=payload)


def serialize_report(report: BoundReport) -> str:
    """Canonical JSON: sorted keys, fixed decimal strings, trailing newline."""
    return json.dumps(report.payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def parse_report(text: str) -> BoundReport:
    return BoundReport(payload=json.loads(text))
