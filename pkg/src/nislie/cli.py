"""Command-line front end.

Exit-code contract: 0 = pass, 1 = mathematical negative (axiom failure,
condition violated, not found), 2 = input error, 3 = search budget
exhausted.  Inputs are JSON documents or catalog references
("catalog:NAME" or a bare catalog name).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import document as doc_mod
from .catalog import (
    cocycles_for,
    entry_names,
    named,
    registry,
)
from .derivations import (
    Derivation,
    class_coordinates,
    map_degree,
    outer_derivations,
)
from .document import AlgebraDocument, DocumentError, recipe_to_meta
from .errors import ConditionViolated, NisLieError, UnknownName
from .extension import ExtensionRecipe, extend, reduce as ext_reduce
from .forms import QuadraticForm, check_nis
from .gf2 import GF2Matrix, bits
from .isometry import adapted_isometry_decision, search_isometry, verify_isometry
from .superalgebra import validate

REFERENCE_ODD_COCYCLES = {
    "hei-double": {"D3", "D5", "D6", "D7"},
    "ba-double": {"D2", "D3", "D4", "D8"},
    "h1-0-4": set(),
    "h1-0-5": {"D6"},
}


class CliError(Exception):
    def __init__(self, code: int, message: str):
        self.code = code
        super().__init__(message)


def _emit(args, payload: dict, human: list[str]):
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=1, sort_keys=True))
    else:
        for line in human:
            print(line)


def _load_target(target: str) -> tuple[AlgebraDocument, str | None]:
    """A document plus the catalog name when the target is catalog-backed."""
    name = None
    if target.startswith("catalog:"):
        name = target.split(":", 1)[1]
    elif target in registry():
        name = target
    if name is not None:
        try:
            obj = named(name)
        except UnknownName as exc:
            raise CliError(2, str(exc))
        meta = {"catalog": name}
        if obj.extension is not None:
            meta["extension"] = {
                "x_index": obj.extension.x_index,
                "star_index": obj.extension.star_index,
                "recipe": recipe_to_meta(obj.extension.recipe),
            }
        return AlgebraDocument(obj.algebra, obj.form, meta), name
    try:
        return doc_mod.load(target), None
    except FileNotFoundError:
        raise CliError(2, f"no such file or catalog entry: {target}")
    except DocumentError as exc:
        raise CliError(2, f"cannot read {target}: {exc}")


def _parse_element(doc: AlgebraDocument, text: str) -> int:
    if text.strip() in ("0", ""):
        return 0
    try:
        return doc.algebra.element(text)
    except ValueError as exc:
        raise CliError(2, f"unknown basis name in element {text!r}: {exc}")


def _resolve_derivation(args_spec: str, doc, catalog_name) -> Derivation:
    if args_spec.startswith("@"):
        with open(args_spec[1:], "r", encoding="utf-8") as fh:
            data = json.load(fh)
        images = [0] * doc.algebra.dim
        for j, i in data["images"]:
            images[j] |= 1 << i
        return Derivation(tuple(images), data["parity"])
    source = catalog_name or doc.metadata.get("catalog")
    if source is None:
        raise CliError(
            2, "named derivations need a catalog-backed input (use @file)"
        )
    try:
        _, cocycles, _ = cocycles_for(source)
    except UnknownName as exc:
        raise CliError(2, str(exc))
    total = None
    for part in args_spec.split("+"):
        part = part.strip()
        if part not in cocycles:
            raise CliError(2, f"unknown cocycle {part!r} for {source}")
        d = cocycles[part]
        total = d if total is None else total.add(d)
    return total


def _resolve_alpha(spec: str, doc, catalog_name) -> QuadraticForm | None:
    if spec is None:
        return None
    if spec == "zero":
        k = len(doc.algebra.odd_indices())
        return QuadraticForm.zero(k)
    if spec.startswith("@"):
        with open(spec[1:], "r", encoding="utf-8") as fh:
            data = json.load(fh)
        k = data["n"]
        rows = [0] * k
        for i, j in data["polar"]:
            rows[i] |= 1 << j
            if i != j:
                rows[j] |= 1 << i
        diag = 0
        for i in data.get("diag", []):
            diag |= 1 << i
        return QuadraticForm(k, diag, GF2Matrix(rows, k))
    source = catalog_name or doc.metadata.get("catalog")
    if source is None:
        raise CliError(2, "named forms need a catalog-backed input")
    _, _, alphas = cocycles_for(source)
    if spec not in alphas:
        raise CliError(2, f"unknown quadratic form {spec!r} for {source}")
    return alphas[spec]


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def cmd_validate(args) -> int:
    doc, _ = _load_target(args.target)
    rep = validate(doc.algebra)
    payload = {
        "axioms": rep.passed,
        "failures": [
            {"axiom": f.axiom, "witness": list(f.witness), "detail": f.detail}
            for f in rep.failures
        ],
    }
    human = [f"axioms: {'pass' if rep.passed else 'FAIL'}"]
    if not rep.passed:
        human.append(rep.summary(doc.algebra))
    ok = rep.passed
    if doc.form is not None:
        nis = check_nis(doc.algebra, doc.form)
        payload["nis"] = {
            "passed": nis.passed,
            "symmetric": nis.symmetric,
            "invariant": nis.invariant,
            "non_degenerate": nis.non_degenerate,
            "parity_homogeneous": nis.parity_homogeneous,
            "witnesses": [
                {"kind": k, "witness": list(w)} for k, w in nis.witnesses
            ],
        }
        human.append(f"nis form: {nis.summary()}")
        ok = ok and nis.passed
    _emit(args, payload, human)
    return 0 if ok else 1


def cmd_outer(args) -> int:
    doc, name = _load_target(args.target)
    g = doc.algebra
    oe, oo = outer_derivations(g)
    payload = {
        "dim_even": oe.dim,
        "dim_odd": oo.dim,
        "derivations": {
            "even": oe.derivation_dim,
            "odd": oo.derivation_dim,
        },
        "inner": {"even": oe.inner_dim, "odd": oo.inner_dim},
    }
    human = [
        f"out: {oe.dim + oo.dim} classes ({oe.dim} even, {oo.dim} odd)",
        f"der: {oe.derivation_dim} even, {oo.derivation_dim} odd;"
        f" inner: {oe.inner_dim} even, {oo.inner_dim} odd",
    ]
    reps = []
    for outer in (oe, oo):
        for d in outer.representatives:
            entry = {
                "parity": d.parity,
                "images": sorted(
                    [j, i] for j, im in enumerate(d.images) for i in bits(im)
                ),
            }
            deg = map_degree(g, d)
            if deg is not None:
                entry["degree"] = deg
            reps.append(entry)
    payload["representatives"] = reps
    source = name or doc.metadata.get("catalog")
    if args.match_paper:
        if source not in REFERENCE_ODD_COCYCLES:
            raise CliError(2, f"no stored cocycle table for {source!r}")
        _, cocycles, _ = cocycles_for(source)
        rows = []
        discrepancies = []
        for label, d in cocycles.items():
            outer = oe if d.parity == 0 else oo
            mu = class_coordinates(g, outer, d)
            rows.append(
                {
                    "cocycle": label,
                    "parity": d.parity,
                    "coordinates": None if mu is None else sorted(bits(mu)),
                }
            )
            underlined = label in REFERENCE_ODD_COCYCLES[source]
            if underlined != (d.parity == 1):
                discrepancies.append(label)
        payload["match_paper"] = rows
        payload["underlining_discrepancies"] = discrepancies
        human.append("reference cocycles project onto the computed quotient:")
        for r in rows:
            human.append(
                f"  {r['cocycle']}: parity {r['parity']},"
                f" coordinates {r['coordinates']}"
            )
        human.append(
            "underlining discrepancies: "
            + (", ".join(discrepancies) if discrepancies else "none")
        )
    _emit(args, payload, human)
    return 0


def cmd_extend(args) -> int:
    doc, name = _load_target(args.target)
    if doc.form is None:
        raise CliError(2, "extension needs an input with a bilinear form")
    derivation = _resolve_derivation(args.derivation, doc, name)
    alpha = _resolve_alpha(args.alpha, doc, name)
    a0 = _parse_element(doc, args.a0) if args.a0 is not None else None
    recipe = ExtensionRecipe(
        args.case,
        derivation,
        alpha=alpha,
        a0=a0,
        m=args.m,
        beta_star=args.beta_star,
    )
    try:
        res = extend(doc.algebra, doc.form, recipe, unchecked=args.unchecked)
    except ConditionViolated as exc:
        print(f"extension rejected: {exc}", file=sys.stderr)
        return 1
    except NisLieError as exc:
        raise CliError(2, str(exc))
    meta = dict(doc.metadata)
    meta.pop("catalog", None)
    meta["extension"] = {
        "x_index": res.x_index,
        "star_index": res.star_index,
        "recipe": recipe_to_meta(res.recipe),
    }
    out = AlgebraDocument(res.algebra, res.form, meta)
    doc_mod.save(out, args.out)
    print(f"wrote {args.out} (dim {res.algebra.dim})")
    return 0


_CASE_BY_PARITY = {
    (0, 0): "evenB-evenD",
    (0, 1): "evenB-oddD",
    (1, 0): "oddB-oddD",
    (1, 1): "oddB-evenD",
}


def cmd_reduce(args) -> int:
    doc, _ = _load_target(args.target)
    if doc.form is None:
        raise CliError(2, "reduction needs an input with a bilinear form")
    x = _parse_element(doc, args.center_element)
    case = args.case
    if case is None:
        p = doc.algebra.parity_of(x)
        if p is None:
            raise CliError(2, "center element must be parity-homogeneous")
        case = _CASE_BY_PARITY[(doc.form.parity, p)]
    try:
        red = ext_reduce(doc.algebra, doc.form, x, case)
    except NisLieError as exc:
        print(f"reduction failed: {exc}", file=sys.stderr)
        return 1
    out = AlgebraDocument(red.algebra, red.form, {})
    doc_mod.save(out, args.out)
    recipe_path = args.recipe_out or (args.out + ".recipe.json")
    with open(recipe_path, "w", encoding="utf-8") as fh:
        json.dump(
            recipe_to_meta(red.recipe), fh, indent=1, sort_keys=True
        )
        fh.write("\n")
    print(f"wrote {args.out} (dim {red.algebra.dim}) and {recipe_path}")
    return 0


def cmd_isometry(args) -> int:
    doc1, _ = _load_target(args.target1)
    doc2, _ = _load_target(args.target2)
    if doc1.form is None or doc2.form is None:
        raise CliError(2, "isometry checks need forms on both inputs")
    if args.mode == "adapted":
        ext1, ext2 = (
            doc1.metadata.get("extension"),
            doc2.metadata.get("extension"),
        )
        if ext1 is None or ext2 is None:
            raise CliError(2, "adapted mode needs extension metadata")
        red1 = ext_reduce(
            doc1.algebra,
            doc1.form,
            1 << ext1["x_index"],
            ext1["recipe"]["case"],
        )
        red2 = ext_reduce(
            doc2.algebra,
            doc2.form,
            1 << ext2["x_index"],
            ext2["recipe"]["case"],
        )
        if (
            red1.algebra.bracket_table != red2.algebra.bracket_table
            or red1.algebra.squaring != red2.algebra.squaring
            or red1.form.gram != red2.form.gram
        ):
            raise CliError(
                2, "adapted mode compares extensions of the same base"
            )
        dec = adapted_isometry_decision(
            red1.algebra, red1.form, red1.recipe, red2.recipe, budget=args.budget
        )
        if dec.status == "found":
            print("found: adapted isometry exists")
            return 0
        if dec.status == "not-found-proved":
            print(f"not found (proved): {dec.reason}")
            return 1
        print(f"budget exhausted: {dec.reason}")
        return 3
    seeds = []
    if args.seed:
        for chunk in args.seed.split(","):
            a, b = chunk.split("=")
            seeds.append(
                (
                    _parse_element(doc1, a.strip()),
                    _parse_element(doc2, b.strip()),
                )
            )
    res = search_isometry(
        doc1.algebra,
        doc1.form,
        doc2.algebra,
        doc2.form,
        budget=args.budget,
        seed_pairs=seeds,
    )
    if res.status == "found":
        ok, _ = verify_isometry(
            doc1.algebra, doc1.form, doc2.algebra, doc2.form, res.isometry.images
        )
        print(f"found ({res.nodes} nodes); verified: {ok}")
        return 0
    if res.status == "not-found":
        proved = "proved" if res.proved else f"search-complete ({res.reason})"
        print(f"not found [{proved}] after {res.nodes} nodes")
        return 1
    print(f"budget exhausted after {res.nodes} nodes")
    return 3


def cmd_report(args) -> int:
    from .catalog import h105_cocycles  # local import: heavy tables

    ok = True
    lines = []
    if args.table == "h04":
        expected = {"D2": 5, "D6": 1, "D7": 3}
        target_names = {"D2": "tilde-po(0|4)", "D6": "gl(2|2)", "D7": "po(0|4)"}
        for label, want in expected.items():
            obj = named(f"h104-{label}ext")
            oe, oo = outer_derivations(obj.algebra)
            got = oe.dim + oo.dim
            row_ok = got == want
            ok = ok and row_ok
            lines.append(
                f"{label} -> {target_names[label]}: out = {got}"
                f" (expected {want}) {'ok' if row_ok else 'MISMATCH'}"
            )
        lines.append(
            "pairwise distinct out-dimensions, hence pairwise non-isomorphic"
        )
    elif args.table == "h05p":
        base = named("h1-0-5")
        cocycles = h105_cocycles(base.algebra, base.basis)
        d1_ok = True
        try:
            res = extend(
                base.algebra,
                base.form,
                ExtensionRecipe("oddB-evenD", cocycles["D1"]),
            )
            rep = validate(res.algebra)
            nis = check_nis(res.algebra, res.form)
            d1_ok = rep.passed and nis.passed and res.algebra.sdim == (16, 16)
        except ConditionViolated:
            d1_ok = False
        ok = ok and d1_ok
        lines.append(
            f"D1: compatible yes, s(x) = 0, extension tilde-po(0|5)"
            f" sdim 16|16 {'ok' if d1_ok else 'MISMATCH'}"
        )
        d5_rejected = False
        try:
            extend(
                base.algebra,
                base.form,
                ExtensionRecipe("oddB-evenD", cocycles["D5"]),
            )
        except ConditionViolated as exc:
            d5_rejected = exc.condition == "4D1"
        ok = ok and d5_rejected
        lines.append(
            f"D5: compatible no ((4D1) fails) {'ok' if d5_rejected else 'MISMATCH'}"
        )
    elif args.table == "h05":
        base = named("h1-0-5")
        for m_param, label in [(0, "po(0|5)"), (1, "po(0|5;m), m != 0")]:
            obj = named(f"po05-m{m_param}")
            rep = validate(obj.algebra)
            lines.append(
                f"D6, s(e) = {'0' if m_param == 0 else 'mx'} -> {label}:"
                f" built (dim {obj.algebra.dim});"
                f" axioms {'pass' if rep.passed else 'FAIL (known defect:'}"
                + ("" if rep.passed else " B(D6 theta, theta) = 1)")
            )
        m0, m1 = named("po05-m0"), named("po05-m1")
        dec = adapted_isometry_decision(
            base.algebra,
            base.form,
            m1.extension.recipe,
            m0.extension.recipe,
        )
        row_ok = dec.status == "not-found-proved"
        ok = ok and row_ok
        lines.append(
            f"m=1 vs m=0 adapted isometry: {dec.status}"
            f" {'ok' if row_ok else 'MISMATCH'}"
        )
    else:
        raise CliError(2, f"unknown table {args.table!r}")
    for ln in lines:
        print(ln)
    return 0 if ok else 1


def cmd_catalog(args) -> int:
    if args.action == "list":
        for name in entry_names():
            e = registry()[name]
            flags = "" if e.valid else "  [defective: see note]"
            sdim = f"{e.sdim[0]}|{e.sdim[1]}" if e.sdim else "?"
            print(f"{name:18s} sdim {sdim}{flags}")
        return 0
    if args.action == "export":
        if not args.name or not args.out:
            raise CliError(2, "catalog export needs NAME and --out")
        try:
            obj = named(args.name)
        except UnknownName as exc:
            raise CliError(2, str(exc))
        meta = {"catalog": args.name}
        if obj.extension is not None:
            meta["extension"] = {
                "x_index": obj.extension.x_index,
                "star_index": obj.extension.star_index,
                "recipe": recipe_to_meta(obj.extension.recipe),
            }
        doc_mod.save(AlgebraDocument(obj.algebra, obj.form, meta), args.out)
        print(f"wrote {args.out}")
        return 0
    raise CliError(2, f"unknown catalog action {args.action!r}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="nislie",
        description="Exact computer algebra for NIS-Lie superalgebras over GF(2)",
    )
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", help="check superalgebra axioms and the form")
    v.add_argument("target")
    v.add_argument("--json", action="store_true")
    v.set_defaults(fn=cmd_validate)

    o = sub.add_parser("outer", help="outer derivations (first cohomology)")
    o.add_argument("target")
    o.add_argument("--match-paper", action="store_true")
    o.add_argument("--json", action="store_true")
    o.set_defaults(fn=cmd_outer)

    e = sub.add_parser("extend", help="build a double extension")
    e.add_argument("target")
    e.add_argument("--case", required=True, choices=[
        "evenB-evenD", "evenB-oddD", "oddB-oddD", "oddB-evenD"])
    e.add_argument("--derivation", required=True)
    e.add_argument("--alpha")
    e.add_argument("--a0")
    e.add_argument("--m", type=int, choices=[0, 1])
    e.add_argument("--beta-star", dest="beta_star", type=int, choices=[0, 1])
    e.add_argument("--unchecked", action="store_true",
                   help="skip the hypothesis checks (diagnostic builds)")
    e.add_argument("--out", required=True)
    e.set_defaults(fn=cmd_extend)

    r = sub.add_parser("reduce", help="split off a double extension")
    r.add_argument("target")
    r.add_argument("--center-element", required=True)
    r.add_argument("--case", choices=[
        "evenB-evenD", "evenB-oddD", "oddB-oddD", "oddB-evenD"])
    r.add_argument("--out", required=True)
    r.add_argument("--recipe-out")
    r.set_defaults(fn=cmd_reduce)

    i = sub.add_parser("isometry", help="verify or search for an isometry")
    i.add_argument("target1")
    i.add_argument("target2")
    i.add_argument("--mode", choices=["adapted", "general"], default="general")
    i.add_argument("--budget", type=int, default=200_000)
    i.add_argument("--seed", help="comma-separated name=name generator hints")
    i.set_defaults(fn=cmd_isometry)

    rep = sub.add_parser("report", help="regenerate a worked-example table")
    rep.add_argument("--table", required=True, choices=["h04", "h05", "h05p"])
    rep.set_defaults(fn=cmd_report)

    c = sub.add_parser("catalog", help="list or export catalog entries")
    c.add_argument("action", choices=["list", "export"])
    c.add_argument("name", nargs="?")
    c.add_argument("--out")
    c.set_defaults(fn=cmd_catalog)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
