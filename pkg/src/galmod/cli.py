"""Command-line front end: ``galmod <command> [options]``.

Every command writes one JSON report (stdout, or ``--out``).  Exact values are
serialised as cyclotomic numbers with rational strings; numeric values carry
their precision.  Exit status: 0 when every verdict passes, 2 when a verdict
fails, 1 on an input or domain error.
"""

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from datetime import datetime, timezone

import mpmath

from . import __version__
from . import schemas
from .cyclo import CycloNumber
from .errors import GalmodError, SchemaError
from .fields import (build_field, discriminant, field_from_json, nib_generator,
                     ramification_data, tame_fields, trace_form)
from .intmat import bareiss_det
from .ntheory import factorint

COMMANDS = ("field", "gauss", "delta", "acrep", "chase", "resolvend", "primitive", "pfaffian", "sweep")
FIELD_COMMANDS = ("field", "gauss", "delta", "acrep", "chase")
TOL = mpmath.mpf(10) ** -10


def _num(x, precision):
    digits = max(15, int(precision * 0.30103) - 4)
    return mpmath.nstr(x, digits, strip_zeros=False)


def _numeric(x, precision):
    return {"value": _num(x, precision), "precision_bits": precision}


def _charkey(chi):
    return ",".join(str(e) for e in chi.exponents) or "()"


def load_json_arg(text, what):
    """A JSON literal, or the path of a file holding one."""
    if text is None:
        raise SchemaError("missing %s descriptor" % what)
    s = text.strip()
    try:
        if s[:1] in "{[":
            return json.loads(s)
        with open(s) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise SchemaError("cannot read %s descriptor: %s" % (what, exc))


def field_descriptor(args):
    if args.field is not None:
        d = load_json_arg(args.field, "field")
    elif args.conductor is not None:
        d = {"conductor": args.conductor, "kernel_generators": args.kernel or []}
    else:
        raise SchemaError("give --field or --conductor")
    return schemas.validate(d, schemas.FIELD, "field descriptor")


# -- per-field commands -------------------------------------------------------

def run_field(L, precision):
    res = {"field": L.to_json(), "degree": L.degree, "galois_group": L.galois_group.to_json(),
           "discriminant": str(discriminant(L)), "tame": L.is_tame(),
           "ramification": [ramification_data(L, p).to_json() for p, _ in factorint(L.conductor)]
           if L.conductor > 1 else []}
    verdicts = {}
    if L.is_tame():
        alpha = nib_generator(L).value
        res["nib_generator"] = alpha.to_json()
        verdicts["nib_discriminant"] = abs(bareiss_det(trace_form(L))) == discriminant(L)
    return res, verdicts


def run_gauss(L, precision):
    from .gauss import field_dirichlet_character, galois_gauss_sum
    out, ok_norm, ok_abs = [], True, True
    for phi in L.characters():
        psi = field_dirichlet_character(L, phi).primitive()
        tau = galois_gauss_sum(L, phi)
        f = psi.conductor
        with mpmath.workprec(precision + 16):
            a = abs(tau.embed(1, precision).value)
            ok_abs &= abs(a - mpmath.sqrt(f)) < mpmath.mpf(10) ** -12
        from .gauss import gauss_sum
        ok_norm &= tau * gauss_sum(psi.conj()) == psi.parity() * f
        out.append({"character": list(phi.exponents), "dirichlet": psi.to_json(), "conductor": f,
                    "tau": tau.to_json(), "abs_tau": _numeric(a, precision)})
    return {"field": L.to_json(), "gauss_sums": out}, {"tau_times_conj": ok_norm, "abs_tau": ok_abs}


def _projections(r, primes):
    from .relk import class_projections
    return {str(p): {_charkey(chi): str(v) for chi, v in class_projections(r, p).items()} for p in primes}


def run_delta(L, precision):
    from .relk import delta_rep_of_field, gauss_rep_of_field, is_zero_class
    d, g = delta_rep_of_field(L), gauss_rep_of_field(L)
    diff = d - g
    primes = [p for p, _ in factorint(L.conductor)] if L.conductor > 1 else []
    pd, pg, pdiff = _projections(d, primes), _projections(g, primes), _projections(diff, primes)
    res = {"field": L.to_json(), "delta_rep": d.to_json(), "gauss_rep": g.to_json(),
           "diff": diff.to_json(), "projections": {"delta": pd, "gauss": pg, "diff": pdiff}}
    verdicts = {"totval_equal": pd == pg,
                "diff_projections_zero": all(v == "0" for m in pdiff.values() for v in m.values()),
                "diff_is_zero_class": is_zero_class(diff)}
    return res, verdicts


def run_acrep(L, precision):
    from .relk import (delta_rep_of_field, metrised_class, pullback_discrepancy, to_arith_class,
                       w_infinity_discrepancy)
    ac = to_arith_class(delta_rep_of_field(L), precision)
    hecke = metrised_class(L, "hecke", precision)
    std = metrised_class(L, "standard", precision)
    pb = pullback_discrepancy(L, precision)
    w = w_infinity_discrepancy(L, precision)
    n = L.degree
    with mpmath.workprec(precision + 16):
        quot = max(abs(hecke.arch[c] / std.arch[c] - ac.arch[c]) for c in ac.arch)
        cor = max(abs(hecke.arch[c] - ac.arch[c] * mpmath.sqrt(n)) for c in ac.arch)
    res = {"field": L.to_json(), "arith_class": ac.to_json(), "hecke": hecke.to_json(),
           "standard": std.to_json(), "pullback_discrepancy": _numeric(pb, precision),
           "w_infinity_discrepancy": _numeric(w, precision),
           "metric_quotient_discrepancy": _numeric(quot, precision),
           "hecke_vs_gauss_discrepancy": _numeric(cor, precision)}
    return res, {"pullback": pb < TOL, "w_infinity": w < TOL, "metric_quotient": quot < TOL,
                 "hecke_equals_sqrt_n_abs_tau": cor < TOL}


def run_chase(L, precision):
    from .torsion import chase_cokernel, cht_check
    from .errors import ChtViolation
    M = chase_cokernel(L)
    res = M.to_json()
    res["field"] = L.to_json()
    n = L.degree
    verdicts = {"order_is_disc_power": M.order ** 2 == discriminant(L) ** n}
    try:
        cht = cht_check(L, M)
        verdicts["cht"] = True
    except ChtViolation as exc:
        cht = {"violation": {"lhs": str(exc.lhs), "rhs": str(exc.rhs), "message": str(exc)}}
        verdicts["cht"] = False
    res["cht"] = {str(p): {"lhs": str(a), "rhs": str(b)} for p, (a, b) in cht.items()} \
        if "violation" not in cht else cht
    return res, verdicts


RUNNERS = {"field": run_field, "gauss": run_gauss, "delta": run_delta,
           "acrep": run_acrep, "chase": run_chase}


# -- torsor and algebra commands -----------------------------------------------

def _torsor(args):
    from .resolvends import TorsorDescriptor
    d = schemas.validate(load_json_arg(args.torsor, "torsor"), schemas.TORSOR, "torsor descriptor")
    try:
        return TorsorDescriptor.from_json(d)
    except ValueError as exc:
        raise SchemaError("torsor descriptor: %s" % exc, pointer="/hom")


def _membership_json(m):
    return {"member": m.member, "level": m.level, "failed_at": m.failed_at,
            "cocycle": {str(k): list(g.exponents) for k, g in m.cocycle.items()}}


def run_resolvend(args):
    from .relk import arch_profile
    from .resolvends import h_membership, reduced_resolvend, resolvend_of_torsor, torsor_relk_class
    T = _torsor(args)
    r = resolvend_of_torsor(T)
    red = reduced_resolvend(r).element
    m = h_membership(r)
    cls = torsor_relk_class(T)
    arch = arch_profile(cls, args.precision_bits)
    res = {"torsor": T.to_json(), "field": T.field().to_json(), "resolvend": r.to_json(),
           "reduced": red.to_json(), "transforms": [v.to_json() for v in red.transforms()],
           "membership": _membership_json(m), "class": cls.to_json(),
           "arch": {_charkey(c): _numeric(v, args.precision_bits) for c, v in arch.items()}}
    return res, {"h_membership": m.member}


def run_primitive(args):
    from .resolvends import GroupAlgebraElement, h_membership, primitivity_test, resolvend_of_torsor
    if args.element is not None:
        d = schemas.validate(load_json_arg(args.element, "element"), schemas.GROUP_ALGEBRA,
                             "group algebra element")
        a = GroupAlgebraElement.from_json(d)
    else:
        a = resolvend_of_torsor(_torsor(args))
    m = h_membership(a)
    prim = primitivity_test(a)
    res = {"element": a.to_json(), "membership": _membership_json(m), "primitive": prim}
    return res, {"membership_equals_primitivity": m.member == prim}


def run_pfaffian(args):
    from .gauss import CharTable, SupplementedRamData, load_table, pfaffian, pfaffian_exponent, \
        symplectic_characters
    if args.table.lower() in ("q8", "d4"):
        T = load_table(args.table)
    else:
        d = schemas.validate(load_json_arg(args.table, "table"), schemas.CHAR_TABLE, "character table")
        T = CharTable.from_json(d)
    ram = SupplementedRamData.from_json(
        schemas.validate(load_json_arg(args.ram, "ramification"), schemas.RAM_DATA, "ramification data"))
    for i, P in enumerate(ram.places):
        if len(P.inertia_dims) != len(T.degrees):
            raise SchemaError("need one inertia dimension per character",
                              pointer="/places/%d/inertia_dims" % i)
    primes = sorted({P.prime for P in ram.places}) if args.prime is None else [args.prime]
    rows = symplectic_characters(T)
    vals = {}
    for phi in rows:
        vals[str(phi)] = {str(p): {"exponent": pfaffian_exponent(T, ram, phi, p),
                                   "value": pfaffian(T, ram, phi, p).to_json()} for p in primes}
    return {"table": T.name, "symplectic": rows, "pfaffian": vals}, {"exponents_integral": True}


# -- reports -------------------------------------------------------------------

def make_report(command, config, results, verdicts):
    return {"version": __version__, "command": command, "config": config,
            "timestamp": datetime.now(timezone.utc).isoformat(), "results": results,
            "verdicts": verdicts, "passed": all(verdicts.values())}


def _field_job(job):
    command, desc, precision = job
    L = field_from_json(desc)
    try:
        res, verdicts = RUNNERS[command](L, precision)
    except GalmodError as exc:
        return {"field": L.to_json(), "error": exc.to_dict()}, {}
    return res, verdicts


def run_sweep(args):
    command = args.subcommand
    if command not in FIELD_COMMANDS:
        raise SchemaError("sweep runs one of %s" % ", ".join(FIELD_COMMANDS), pointer="")
    fields = tame_fields(args.max_conductor, args.max_degree)
    jobs = [(command, L.to_json(), args.precision_bits) for L in fields]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as ex:
            outs = list(ex.map(_field_job, jobs))
    else:
        outs = [_field_job(j) for j in jobs]
    results, verdicts = [], {}
    for (res, v), L in zip(outs, fields):
        results.append({"result": res, "verdicts": v})
        verdicts["f%d:%s" % (L.conductor, ",".join(map(str, L.kernel_generators)))] = \
            bool(v) and all(v.values()) and "error" not in res
    return results, verdicts


def build_parser():
    p = argparse.ArgumentParser(prog="galmod", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version="galmod " + __version__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--precision-bits", type=int, default=128)
        sp.add_argument("--out", help="write the report here instead of stdout")

    def field_opts(sp):
        sp.add_argument("--field", help="field descriptor JSON or file")
        sp.add_argument("--conductor", type=int)
        sp.add_argument("--kernel", type=int, nargs="*", help="kernel generators")

    for name in FIELD_COMMANDS:
        sp = sub.add_parser(name)
        field_opts(sp)
        common(sp)
    for name in ("resolvend", "primitive"):
        sp = sub.add_parser(name)
        sp.add_argument("--torsor", help="torsor descriptor JSON or file")
        if name == "primitive":
            sp.add_argument("--element", help="group algebra element JSON or file")
        common(sp)
    sp = sub.add_parser("pfaffian")
    sp.add_argument("--table", default="q8", help="q8, d4, or a character table JSON/file")
    sp.add_argument("--ram", required=True, help="supplemented ramification data JSON or file")
    sp.add_argument("--prime", type=int)
    common(sp)
    sp = sub.add_parser("sweep")
    sp.add_argument("subcommand", choices=FIELD_COMMANDS)
    sp.add_argument("--max-conductor", type=int, default=40)
    sp.add_argument("--max-degree", type=int, default=6)
    sp.add_argument("--jobs", type=int, default=1)
    common(sp)
    return p


def _config(args):
    return {k: v for k, v in sorted(vars(args).items()) if k not in ("out", "jobs") and v is not None}


def run_command(args):
    """Run parsed arguments; returns (report, exit_code)."""
    if args.precision_bits < 53:
        raise SchemaError("--precision-bits must be at least 53", pointer="")
    if args.command in FIELD_COMMANDS:
        L = build_field(**_field_kwargs(field_descriptor(args)))
        res, verdicts = RUNNERS[args.command](L, args.precision_bits)
    elif args.command == "sweep":
        res, verdicts = run_sweep(args)
    else:
        res, verdicts = {"resolvend": run_resolvend, "primitive": run_primitive,
                         "pfaffian": run_pfaffian}[args.command](args)
    report = make_report(args.command, _config(args), res, verdicts)
    return report, 0 if report["passed"] else 2


def _field_kwargs(d):
    return {"f": d["conductor"], "H_generators": d.get("kernel_generators", [])}


def dumps(report):
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        report, code = run_command(args)
    except GalmodError as exc:
        report = make_report(args.command, _config(args), {"error": exc.to_dict()}, {})
        report["passed"] = False
        code = 1
    _emit(dumps(report), getattr(args, "out", None))
    return code


def parse_report(text):
    """Re-parse and re-validate a report; returns the decoded document."""
    doc = schemas.validate(json.loads(text), schemas.REPORT, "report")
    _reparse_exact(doc)
    return doc


def _reparse_exact(node):
    # every {"level", "coeffs"} object must decode back to a cyclotomic number
    if isinstance(node, dict):
        if set(node) == {"level", "coeffs"}:
            x = CycloNumber.from_json(node)
            if x.to_json() != node:
                raise SchemaError("cyclotomic value does not round-trip")
            return
        for v in node.values():
            _reparse_exact(v)
    elif isinstance(node, list):
        for v in node:
            _reparse_exact(v)


if __name__ == "__main__":
    sys.exit(main())
