"""Grid evaluations of the cylinder quantities along a ray

Every function returns a DataFrame with one row per cylinder and grid point,
cylinders in ray order and t increasing within a cylinder.
"""
import logging

import numpy as np

from stretch_lab.cylinder import (
    asymptote,
    asymptotic_length,
    bracket,
    leaf_length,
    log_height,
    max_height,
    min_leaf,
    truncate,
    width_at,
)
from stretch_lab.numerics import ExtScalar
from stretch_lab.stretch import RaySpec

from .writers import frame_from_rows

logger = logging.getLogger(__name__)

SWEEP_COLUMNS = (
    "core_id",
    "t",
    "log_w_t",
    "h_prime",
    "h",
    "h_star",
    "log_asymptote",
    "ratio_h_over_asym",
)


def _sweep_columns(cfg):
    selected = {
        "h_prime": cfg.wants("truncated_height", "bracket"),
        "h": cfg.wants("height", "bracket"),
        "h_star": cfg.wants("min_leaf", "bracket"),
        "log_asymptote": cfg.wants("asymptote"),
        "ratio_h_over_asym": cfg.wants("asymptote"),
    }
    return [c for c in SWEEP_COLUMNS if selected.get(c, True)]


def run_sweep(ray, cfg, cut=0):
    """Brackets h' <= h <= l <= h* and the decay law over the grid

    Parameters
    ----------
    ray : RaySpec
    cfg : SweepConfig
    cut : int, optional (Default: 0)
        band boundary used for the heights

    Returns
    -------
    pandas.DataFrame
        columns core_id, t, log_w_t, h_prime, h, h_star, log_asymptote,
        ratio_h_over_asym, restricted to the selected quantities; the
        lengths are ExtScalar
    """
    columns = _sweep_columns(cfg)
    logger.info(
        "sweep of %r: %i cylinders, %i points",
        ray.ray_id,
        len(ray.cylinders),
        cfg.steps,
    )
    rows = []
    for cyl in ray.cylinders:
        a = asymptote(cyl)
        for t in cfg.grid:
            local_t = ray.local_time(t)
            b = bracket(cyl, local_t, cut=cut)
            log_asym = asymptotic_length(a, local_t).logmag
            values = {
                "core_id": cyl.core_id,
                "t": float(t),
                "log_w_t": width_at(cyl, local_t).logmag,
                "h_prime": ExtScalar.from_log(b.log_crosscheck_lower),
                "h": ExtScalar.from_log(b.log_lower),
                "h_star": ExtScalar.from_log(b.log_upper),
                "log_asymptote": log_asym,
                "ratio_h_over_asym": float(np.exp(b.log_lower - log_asym)),
            }
            rows.append([values[c] for c in columns])
    return frame_from_rows(rows, columns)


def run_leaf(ray, cfg, d=None):
    """Shortest closed leaf over the grid, or the leaf at depth d if given"""
    if d is None:
        columns = ["core_id", "t", "d_star", "h_star", "interior"]
    else:
        columns = ["core_id", "t", "d", "leaf_length"]
    rows = []
    for cyl in ray.cylinders:
        for t in cfg.grid:
            local_t = ray.local_time(t)
            if d is None:
                d_star, h_star, interior = min_leaf(cyl, local_t)
                rows.append([cyl.core_id, float(t), d_star, h_star, bool(interior)])
            else:
                rows.append(
                    [cyl.core_id, float(t), float(d), leaf_length(cyl, local_t, d)]
                )
    return frame_from_rows(rows, columns)


def run_height(ray, cfg, cut=0):
    """Height along the chosen cut and the best height over all cuts"""
    columns = ["core_id", "t", "cut", "h", "h_max", "best_cut"]
    rows = []
    for cyl in ray.cylinders:
        for t in cfg.grid:
            local_t = ray.local_time(t)
            _, best_cut = max_height(cyl, local_t)
            log_h_max = log_height(cyl, local_t, cut=best_cut)
            rows.append(
                [
                    cyl.core_id,
                    float(t),
                    int(cut),
                    ExtScalar.from_log(log_height(cyl, local_t, cut=cut)),
                    ExtScalar.from_log(log_h_max),
                    int(best_cut),
                ]
            )
    return frame_from_rows(rows, columns)


def run_asymptote(ray, cfg):
    """Constants K and w of the decay law and the asymptotic length"""
    columns = ["core_id", "t", "K", "w", "asymptotic_length"]
    rows = []
    for cyl in ray.cylinders:
        a = asymptote(cyl)
        for t in cfg.grid:
            local_t = ray.local_time(t)
            rows.append(
                [cyl.core_id, float(t), a.K, a.w, asymptotic_length(a, local_t)]
            )
    return frame_from_rows(rows, columns)


def run_truncate(ray):
    """The ray with every cylinder replaced by its truncation"""
    return RaySpec(
        [truncate(cyl) for cyl in ray.cylinders], offset=ray.offset, ray_id=ray.ray_id
    )
