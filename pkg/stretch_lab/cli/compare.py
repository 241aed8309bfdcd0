import logging

from stretch_lab.stretch import (
    Classification,
    classify,
    ratio_bound,
    shared_core_ids,
    transverse_ratio_bounds,
)

from .writers import frame_from_rows

logger = logging.getLogger(__name__)

TRICHOTOMY = (
    "the rays stretch along different multicurves and diverge: a curve inside "
    "the stump shrinks to zero length, a curve crossing it grows to infinity "
    "and a disjoint curve stays bounded, so some curve meets one stump but not "
    "the other and its length ratio tends to infinity"
)


def _usable_curves(curves, g, h):
    usable = []
    for curve in curves or []:
        if not curve.crosses():
            logger.info("curve %r crosses no core, skipped", curve.curve_id)
            continue
        missing = set(curve.core_ids) - (set(g.core_ids) & set(h.core_ids))
        if missing:
            logger.info(
                "curve %r meets components %s absent from a ray, skipped",
                curve.curve_id,
                sorted(missing),
            )
            continue
        usable.append(curve)
    return usable


def _report_lines(g, h, report):
    lines = [
        "g = %s, h = %s" % (g.ray_id, h.ray_id),
        "classification: %s" % report.classification.value,
        "shared components: %s" % (",".join(report.core_ids) or "(none)"),
    ]
    for j, delta_j, prefactor in zip(report.core_ids, report.deltas, report.prefactors):
        lines.append("delta[%s] = %r, prefactor[%s] = %r" % (j, delta_j, j, prefactor))
    if report.classification == Classification.SAME_DIRECTION:
        lines.append("weights are proportional, the rays are parallel")
    elif report.classification == Classification.DIVERGENT_SAME_MULTICURVE:
        lines.append(
            "witness_u = %r: w_%s shrinks and w_%s grows in h shifted by witness_u"
            % (report.witness_u, report.j0, report.j1)
        )
    else:
        lines.append(TRICHOTOMY)
    return lines


def run_compare(g, h, cfg, curves=None, apply_witness=True):
    """Classifies two rays and bounds their Thurston distances over the grid

    Parameters
    ----------
    g, h : RaySpec
    cfg : SweepConfig
    curves : list of TransverseCurveData, optional (Default: None)
        transverse curves joining the distance bounds; curves crossing no
        core, or meeting a core missing from one of the rays, are skipped
    apply_witness : boolean, optional (Default: True)
        also report the bounds with h shifted by the witness offset, when
        there is one

    Returns
    -------
    report : DivergenceReport
    lines : list of strings
        human readable summary of the report
    frame : pandas.DataFrame
        one row per grid point: t, lower bounds on d_T(g_t, h_t) and
        d_T(h_t, g_t) before and after the witness, and the two sided log
        ratio bounds of each curve
    """
    report = classify(g, h)
    lines = _report_lines(g, h, report)
    curves = _usable_curves(curves, g, h)
    shared = len(shared_core_ids(g, h)) > 0
    with_bounds = shared and cfg.wants("ratio_bound")
    h_u = None
    if apply_witness and report.witness_u is not None:
        h_u = h.shifted(report.witness_u)
    with_transverse = cfg.wants("transverse")

    columns = ["t"]
    if with_bounds:
        columns += ["d_gh_lower", "d_hg_lower"]
        if h_u is not None:
            columns += ["d_gh_witness_lower", "d_hg_witness_lower"]
    if with_transverse:
        for curve in curves:
            columns += [curve.curve_id + "_log_lower", curve.curve_id + "_log_upper"]

    rows = []
    for t in cfg.grid:
        row = [float(t)]
        if with_bounds:
            row += [ratio_bound(g, h, t, curves), ratio_bound(h, g, t, curves)]
            if h_u is not None:
                row += [ratio_bound(g, h_u, t, curves), ratio_bound(h_u, g, t, curves)]
        if with_transverse:
            for curve in curves:
                row += list(transverse_ratio_bounds(curve, g, h, t))
        rows.append(row)
    return report, lines, frame_from_rows(rows, columns)
