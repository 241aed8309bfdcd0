"""Reading and writing of the JSON input documents

A document lists the rays and, optionally, transverse curves::

    {
      "rays": [
        {"id": "g", "offset": 0.0, "cylinders": [
          {"core_id": "a", "width": 2.0, "bands": [[1.0], [1.0]]}
        ]}
      ],
      "curves": [
        {"id": "alpha", "crossings": {"a": 1}, "turnings": {"a": 2}}
      ]
    }
"""
import json

from stretch_lab.cylinder import CylinderSpec
from stretch_lab.exceptions import InvariantError, ParseError
from stretch_lab.stretch import RaySpec, TransverseCurveData

_KEYS = {
    "document": ({"rays"}, {"curves"}),
    "ray": ({"cylinders"}, {"id", "offset"}),
    "cylinder": ({"width", "bands"}, {"core_id"}),
    "curve": (set(), {"id", "crossings", "turnings"}),
}


class InputDocument:
    """Rays and transverse curves read from one document

    Parameters
    ----------
    rays : list of RaySpec
    curves : list of TransverseCurveData, optional (Default: None)
    """

    def __init__(self, rays, curves=None):
        self.rays = tuple(rays)
        self.curves = tuple(curves or ())

    def ray(self, ray_id):
        for ray in self.rays:
            if ray.ray_id == ray_id:
                return ray
        raise ParseError("no ray with id %r" % ray_id, field="rays")

    def __eq__(self, other):
        if not isinstance(other, InputDocument):
            return NotImplemented
        return (self.rays, self.curves) == (other.rays, other.curves)

    def __repr__(self):
        return "InputDocument(rays=%r, curves=%r)" % (
            list(self.rays),
            list(self.curves),
        )


def _check_keys(obj, kind, field):
    if not isinstance(obj, dict):
        raise ParseError("expected an object", field=field)
    required, optional = _KEYS[kind]
    missing = sorted(required - set(obj))
    if missing:
        raise ParseError("missing key %r" % missing[0], field=field)
    unknown = sorted(set(obj) - required - optional)
    if unknown:
        raise ParseError("unknown key %r" % unknown[0], field=field)


def _number(value, field):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ParseError("expected a number, got %r" % (value,), field=field)
    return float(value)


def _list(value, field):
    if not isinstance(value, list):
        raise ParseError("expected a list, got %r" % (value,), field=field)
    return value


def _string(value, field):
    if not isinstance(value, str):
        raise ParseError("expected a string, got %r" % (value,), field=field)
    return value


def _counts(value, field):
    if not isinstance(value, dict):
        raise ParseError("expected an object, got %r" % (value,), field=field)
    counts = {}
    for core_id, n in value.items():
        if isinstance(n, bool) or not isinstance(n, int):
            raise ParseError(
                "expected an integer count, got %r" % (n,),
                field="%s.%s" % (field, core_id),
            )
        counts[core_id] = n
    return counts


def _build(cls, field, *args, **kwargs):
    try:
        return cls(*args, **kwargs)
    except InvariantError as err:
        raise type(err)("%s (field %s)" % (err, field)) from err


def _parse_cylinder(obj, field):
    _check_keys(obj, "cylinder", field)
    bands = []
    for ii, band in enumerate(_list(obj["bands"], field + ".bands")):
        band_field = "%s.bands[%i]" % (field, ii)
        bands.append(
            [
                _number(arc, "%s[%i]" % (band_field, jj))
                for jj, arc in enumerate(_list(band, band_field))
            ]
        )
    return _build(
        CylinderSpec,
        field,
        _number(obj["width"], field + ".width"),
        bands,
        core_id=_string(obj.get("core_id", "core"), field + ".core_id"),
    )


def _parse_ray(obj, field, default_id):
    _check_keys(obj, "ray", field)
    cylinders = [
        _parse_cylinder(cyl, "%s.cylinders[%i]" % (field, ii))
        for ii, cyl in enumerate(_list(obj["cylinders"], field + ".cylinders"))
    ]
    return _build(
        RaySpec,
        field,
        cylinders,
        offset=_number(obj.get("offset", 0.0), field + ".offset"),
        ray_id=_string(obj.get("id", default_id), field + ".id"),
    )


def _parse_curve(obj, field, default_id):
    _check_keys(obj, "curve", field)
    return _build(
        TransverseCurveData,
        field,
        _counts(obj.get("crossings", {}), field + ".crossings"),
        _counts(obj.get("turnings", {}), field + ".turnings"),
        curve_id=_string(obj.get("id", default_id), field + ".id"),
    )


def parse_input(text):
    """Parses and validates an input document

    Parameters
    ----------
    text : string
        JSON document

    Returns
    -------
    InputDocument
        with every domain invariant checked

    Raises
    ------
    ParseError
        malformed JSON, with line and column, or a schema violation, with
        the path of the offending field
    InvariantError
        well formed data describing an impossible object
    """
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as err:
        raise ParseError(err.msg, line=err.lineno, column=err.colno) from err

    _check_keys(obj, "document", "document")
    rays = [
        _parse_ray(ray, "rays[%i]" % ii, "ray%i" % ii)
        for ii, ray in enumerate(_list(obj["rays"], "rays"))
    ]
    curves = [
        _parse_curve(curve, "curves[%i]" % ii, "curve%i" % ii)
        for ii, curve in enumerate(_list(obj.get("curves", []), "curves"))
    ]
    for kind, ids in (
        ("rays", [ray.ray_id for ray in rays]),
        ("curves", [curve.curve_id for curve in curves]),
    ):
        if len(set(ids)) != len(ids):
            raise ParseError("duplicate id in %s" % ids, field=kind)
    return InputDocument(rays, curves)


def format_document(doc):
    """Writes a document that parse_input reads back to an equal one"""
    obj = {
        "rays": [
            {
                "id": ray.ray_id,
                "offset": ray.offset,
                "cylinders": [
                    {
                        "core_id": cyl.core_id,
                        "width": cyl.width,
                        "bands": [list(band.arcs) for band in cyl.bands],
                    }
                    for cyl in ray.cylinders
                ],
            }
            for ray in doc.rays
        ],
        "curves": [
            {
                "id": curve.curve_id,
                "crossings": curve.crossings,
                "turnings": curve.turnings,
            }
            for curve in doc.curves
        ],
    }
    return json.dumps(obj, indent=2) + "\n"
